"""Finite model checker for operator topological spaces."""

from topoforge.errors import CapabilityError, CrossValidationError, InputError, TopoforgeError
from topoforge.kernels import BACKEND
from topoforge.maps import FiniteFunction
from topoforge.operators import BiOperatorSpace, OperatorTable, make_builtin
from topoforge.setcore import FiniteTopology, PointSet, SetFamily, enumerate_topologies
from topoforge.verifier import Instance, SweepConfig, TheoremId, Verdict, check, run_sweep

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BiOperatorSpace",
    "CapabilityError",
    "CrossValidationError",
    "FiniteFunction",
    "FiniteTopology",
    "Instance",
    "InputError",
    "OperatorTable",
    "PointSet",
    "SetFamily",
    "SweepConfig",
    "TheoremId",
    "TopoforgeError",
    "Verdict",
    "check",
    "enumerate_topologies",
    "make_builtin",
    "run_sweep",
]
