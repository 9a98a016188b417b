from .groups import GroupModel, GroupError, build_group
from .config import (DegenerateFlagError, apply_group, borel_from_x,
                     complete_flag, random_generic_config,
                     random_positive_config, random_group_element,
                     unipotent_part)
from .linalg import det, identity, mat_mul, mat_vec

__all__ = ["GroupModel", "GroupError", "build_group", "DegenerateFlagError",
           "apply_group", "borel_from_x", "complete_flag",
           "random_generic_config", "random_positive_config",
           "random_group_element", "unipotent_part", "det", "identity",
           "mat_mul", "mat_vec"]
