from .wedge import Wedge, det, star_dual, functional
from .spec import FunctionSpec, SpecError
from .evaluate import Config, EvalError, BranchError, evaluate, evaluate_raw

__all__ = ["Wedge", "det", "star_dual", "functional", "FunctionSpec",
           "SpecError", "Config", "EvalError", "BranchError", "evaluate",
           "evaluate_raw"]
