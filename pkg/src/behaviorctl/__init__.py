"""Exact polynomial-matrix toolkit for linear differential behaviors and
canonical distributed controllers."""

from .behavior import (
    Behavior,
    Signature,
    SignatureError,
    VarGroup,
    cardinalities,
    eliminate,
    equals,
    full_behavior,
    includes,
    interconnect,
    make_behavior,
    minimize,
    zero_behavior,
    zero_restrict,
)
from .network import Edge, Network, NetworkError, Subsystem, validate
from .polymat import XI, Poly, PolyMat
from .synthesis import (
    check_implementability,
    distributed_canonical,
    local_canonical,
    verify_implementation,
)

__all__ = [
    "Behavior", "Signature", "SignatureError", "VarGroup", "cardinalities", "eliminate",
    "equals", "full_behavior", "includes", "interconnect", "make_behavior", "minimize",
    "zero_behavior", "zero_restrict", "Edge", "Network", "NetworkError", "Subsystem",
    "validate", "XI", "Poly", "PolyMat", "check_implementability", "distributed_canonical",
    "local_canonical", "verify_implementation",
]
__version__ = "0.1.0"
