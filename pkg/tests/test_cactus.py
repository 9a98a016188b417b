"""Rotation sequence on the SL triangle lattice: exchange certification,
label trajectory, endpoint quiver."""

import pytest

from conflag.core.seed import mutate_seed_seq, seeds_equal_under
from conflag.seeds.sl import sl_conf3_seed, triangle_points, tv
from conflag.sequences.cactus import (cactus_sequence, endpoint_correspondence,
                                      final_labels, fold_subsequence,
                                      label_after, steps_with_labels)
from conflag.verifier import verify_labelled_sequence
from conflag.verifier.configs import generic_configs


@pytest.mark.parametrize("N", [4, 5, 6, 7, 8])
def test_sequence_length(N):
    assert len(cactus_sequence(N).steps) == N * (N - 1) * (N - 2) // 6


@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_mutation_counts(N):
    counts = cactus_sequence(N).counts()
    for (i, j, k) in triangle_points(N):
        if 0 not in (i, j, k):
            assert counts[tv(i, j, k)] == i


@pytest.mark.parametrize("N", [4, 6, 8])
def test_fold_subsequence_is_prefix_stage_set(N):
    # same per-vertex count rule truncated at stage n-1
    full = cactus_sequence(N)
    half = fold_subsequence(N)
    cf, ch = full.counts(), half.counts()
    for v, c in ch.items():
        assert c <= cf[v]
    assert set(half.steps) <= set(full.steps)


@pytest.mark.parametrize("N", [4, 5, 6])
def test_rotation_certifies(N):
    ls = sl_conf3_seed(N)
    steps = steps_with_labels(N, cactus_sequence(N))
    rep = verify_labelled_sequence(ls.seed, ls.labels, steps,
                                   generic_configs("A", N, 3, 2))
    assert rep.ok, rep.summary()
    # with the pinned normalizations every exchange holds with a plus sign
    assert all(s == 1 for s in rep.signs.values()), rep.summary()


@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_endpoint_quiver(N):
    ls = sl_conf3_seed(N)
    fin = mutate_seed_seq(ls.seed, cactus_sequence(N).steps)
    ok, issues = seeds_equal_under(fin, ls.seed, endpoint_correspondence(N))
    assert ok, issues[:3]


@pytest.mark.parametrize("N", [4, 5, 6, 7])
def test_final_label_pattern(N):
    for (i, j, k) in triangle_points(N):
        spec = final_labels(N)[tv(i, j, k)]
        if 0 in (i, j, k):
            assert spec.args == ((i,), (j,), (k,))
        else:
            assert spec.shape == "Tri"
            assert spec.args == ((N - i,), (N - k,), (N - j,))


def test_label_count_range():
    with pytest.raises(ValueError):
        label_after(6, (2, 2, 2), 3)
