"""Half-turn endpoint on the even lattice, its printed grid form, and the
quotient onto the C-family grid seed."""

import pytest

from conflag.core.seed import fold, mutate_seed, mutate_seed_seq, seeds_equal_under
from conflag.seeds.conf3 import conf3_seed
from conflag.seeds.folded import (_drop_frozen_pairs, c_grid_correspondence,
                                  fold_involution, fold_to_c, folded_sl_seed)
from conflag.seeds.sl import sl_conf3_seed, tv
from conflag.sequences.cactus import fold_subsequence, steps_with_labels
from conflag.verifier import verify_labelled_sequence
from conflag.verifier.configs import generic_configs


@pytest.mark.parametrize("n", [2, 3, 4])
def test_fold_matches_c_grid(n):
    folded = fold_to_c(n)
    target = _drop_frozen_pairs(conf3_seed("C", n).seed)
    ok, issues = seeds_equal_under(folded, target,
                                   c_grid_correspondence(n, folded))
    assert ok, issues[:3]


@pytest.mark.parametrize("n", [2, 3])
def test_half_turn_certifies(n):
    N = 2 * n
    ls = sl_conf3_seed(N)
    steps = steps_with_labels(N, fold_subsequence(N))
    rep = verify_labelled_sequence(ls.seed, ls.labels, steps,
                                   generic_configs("A", N, 3, 2))
    assert rep.ok and all(s == 1 for s in rep.signs.values()), rep.summary()


@pytest.mark.parametrize("n", [2, 3])
def test_mutate_fold_commutes(n):
    seed = _drop_frozen_pairs(folded_sl_seed(n).seed)
    inv = fold_involution(n)
    downstairs = fold(seed, inv)
    for v in downstairs.mutable():
        lifts = [v] if inv[v] == v else [v, inv[v]]
        upstairs = fold(mutate_seed_seq(seed, lifts), inv)
        direct = mutate_seed(downstairs, v)
        corr = {w: w for w in downstairs.vertices}
        ok, issues = seeds_equal_under(upstairs, direct, corr)
        assert ok, (v, issues[:3])


def _fig_vertex(n, i_f, j_f):
    """Printed grid coordinates -> lattice vertex (columns j_f = 1..n-1,
    signed rows i_f; the two signs are swapped by the fold)."""
    N = 2 * n
    a = abs(i_f)
    i = max(2 * (n - j_f) - a, n - j_f)
    k = min(j_f, n - a)
    j = N - i - k
    if i_f > 0:
        j, k = k, j
    return tv(i, j, k)


# printed label grid for n = 4 (argument groups only; the global sign is an
# evaluator normalization)
_FIG_LABELS = {
    (-3, 1): ((3,), (4,), (1,)), (-2, 1): ((3, 7), (4,), (2,)),
    (-1, 1): ((3, 6), (4,), (3,)), (0, 1): ((3, 5), (4,), (4,)),
    (1, 1): ((2, 5), (4,), (5,)), (2, 1): ((1, 5), (4,), (6,)),
    (3, 1): ((5,), (4,), (7,)),
    (-3, 2): ((2,), (5,), (1,)), (-2, 2): ((2,), (4,), (2,)),
    (-1, 2): ((2, 7), (4,), (3,)), (0, 2): ((2, 6), (4,), (4,)),
    (1, 2): ((1, 6), (4,), (5,)), (2, 2): ((6,), (4,), (6,)),
    (3, 2): ((6,), (3,), (7,)),
    (-3, 3): ((1,), (6,), (1,)), (-2, 3): ((1,), (5,), (2,)),
    (-1, 3): ((1,), (4,), (3,)), (0, 3): ((1, 7), (4,), (4,)),
    (1, 3): ((7,), (4,), (5,)), (2, 3): ((7,), (3,), (6,)),
    (3, 3): ((7,), (2,), (7,)),
}


def test_fig_grid_labels_n4():
    fs = folded_sl_seed(4)
    for fig, want in _FIG_LABELS.items():
        assert fs.labels[_fig_vertex(4, *fig)].args == want, fig


def _fig_arrows(n):
    """The printed quiver (frozen vertices omitted): rightward rows, inner
    column chains, the outer dashed chains, and the two diagonal families."""
    out = []
    for j in range(1, n):
        for i in range(0, n - 1):
            out.append(((i, j), (i + 1, j)))
            out.append(((-i, j), (-i - 1, j)))
    for s in (n - 1, -(n - 1)):
        for j in range(n - 1, 1, -1):
            out.append(((s, j), (s, j - 1)))
    for i in range(-(n - 2), n - 1):
        for j in range(n - 1, 1, -1):
            out.append(((i, j), (i, j - 1)))
    for i in range(1, n):
        for j in range(1, n - 1):
            out.append(((i, j), (i - 1, j + 1)))
            out.append(((-i, j), (-(i - 1), j + 1)))
    return out


def test_fig_grid_quiver_n4():
    n = 4
    fs = folded_sl_seed(n)
    figv = {(i_f, j_f): _fig_vertex(n, i_f, j_f)
            for i_f in range(-(n - 1), n) for j_f in range(1, n)}
    mut = set(figv.values())
    seen = set()
    for a, b in _fig_arrows(n):
        assert fs.seed.entry(figv[a], figv[b]) == 1, (a, b)
        seen.add(frozenset((figv[a], figv[b])))
    for (u, v), e in fs.seed.b.items():
        if u in mut and v in mut:
            assert frozenset((u, v)) in seen, (u, v, e)
