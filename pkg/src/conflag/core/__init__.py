from .seed import (Seed, SeedError, NotMutableError, mutate_seed,
                   mutate_seed_seq, seeds_equal_under, amalgamate, fold,
                   poisson_coeff)
from .state import (ClusterState, DegenerateStateError, PoleError, mutate_a,
                    mutate_x, p_map, exchange_monomials)
from .quantum import (QuantumTorus, QElement, QFactored, mutate_x_quantum,
                      qfactored_equal)

__all__ = [
    "Seed", "SeedError", "NotMutableError", "mutate_seed", "mutate_seed_seq",
    "seeds_equal_under", "amalgamate", "fold", "poisson_coeff",
    "ClusterState", "DegenerateStateError", "PoleError", "mutate_a",
    "mutate_x", "p_map", "exchange_monomials",
    "QuantumTorus", "QElement", "QFactored", "mutate_x_quantum",
    "qfactored_equal",
]
