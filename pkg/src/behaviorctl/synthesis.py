"""Canonical distributed controllers and the implementability test."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .behavior import (
    Behavior,
    SignatureError,
    common_groups,
    eliminate,
    equals,
    inclusion_witness,
    interconnect,
    minimize,
    rename,
    reorder,
)
from .network import (
    Network,
    _require_valid,
    hidden,
    manifest_desired_w,
    manifest_plant_w,
    manifest_plant_wc,
    plant_interconnection,
)
from .polymat import PolyMat

_ROLE_ORDER = {"c": 0, "s": 1, "k": 2}


def _role_sorted(names: Sequence[str]) -> list[str]:
    # stable: c-groups, then s-groups, then k-groups, then anything else
    return sorted(names, key=lambda n: _ROLE_ORDER.get(n[:1], 3))


def local_canonical(plant: Behavior, desired: Behavior, shared: Sequence[str] | None = None) -> Behavior:
    """``(P_i and_w K_i)`` projected onto the plant's and desired's other variables.

    ``shared`` defaults to the groups the two behaviors have in common (the
    to-be-controlled variable).  The result is over ``(c_i, s_i, k_i)``.
    """
    if shared is None:
        shared = common_groups(plant, desired)
    if not shared:
        raise SignatureError("plant and desired behavior share no to-be-controlled variable")
    joint = interconnect(plant, desired, shared)
    keep = _role_sorted([n for n in joint.names if n not in shared])
    return eliminate(joint, keep)


def distributed_canonical(net: Network) -> Behavior:
    """Interconnection of all local canonical controllers, over ``(c, s, k)``."""
    _require_valid(net)
    locals_ = [local_canonical(s.plant, s.desired) for s in net.subsystems]
    C = locals_[0]
    for Ci in locals_[1:]:
        C = interconnect(C, Ci)
    order = net.c_groups() + net.s_groups() + net.k_groups()
    order = [g for g in order if g in C.sig] + [g for g in C.names if g not in order]
    return minimize(reorder(C, order))


def central_controller(net: Network) -> Behavior:
    """``((P_I)_(w,c) and_w (K_I)_w)_c``."""
    joint = interconnect(manifest_plant_wc(net), manifest_desired_w(net), net.w_groups())
    return eliminate(joint, net.c_groups())


class Verdict(enum.Enum):
    IMPLEMENTABLE = "implementable"
    FAILS_LOWER = "fails_lower"
    FAILS_UPPER = "fails_upper"


@dataclass(frozen=True)
class Implementability:
    verdict: Verdict
    lower: bool  # hidden behavior inside desired
    upper: bool  # desired inside manifest plant
    witness: tuple[int, PolyMat] | None = None

    @property
    def ok(self) -> bool:
        return self.verdict is Verdict.IMPLEMENTABLE

    def describe(self) -> str:
        if self.ok:
            return "N(P_I) <= (K_I)_w <= (P_I)_w holds"
        which = (
            "lower inclusion N(P_I) <= (K_I)_w"
            if self.verdict is Verdict.FAILS_LOWER
            else "upper inclusion (K_I)_w <= (P_I)_w"
        )
        msg = f"{which} fails"
        if self.witness is not None:
            i, row = self.witness
            msg += f"; row {i} of the larger kernel is not generated: {row}"
        return msg


def check_implementability(net: Network) -> Implementability:
    """Decide ``N(P_I) <= (K_I)_w <= (P_I)_w``.

    This holds exactly when the canonical distributed controller implements
    the desired behavior, and then some distributed controller does.  When
    both inclusions fail the lower one is reported.
    """
    N = hidden(net)
    Kw = manifest_desired_w(net)
    Pw = manifest_plant_w(net)
    low = inclusion_witness(N, Kw)
    up = inclusion_witness(Kw, Pw)
    if low is not None:
        return Implementability(Verdict.FAILS_LOWER, False, up is None, low)
    if up is not None:
        return Implementability(Verdict.FAILS_UPPER, True, False, up)
    return Implementability(Verdict.IMPLEMENTABLE, True, True)


def controlled_behavior(net: Network, controller: Behavior) -> Behavior:
    """``(P_I and_c C)_w``; controller groups other than ``c_i`` stay private."""
    P = plant_interconnection(net)
    shared = [c for c in net.c_groups() if c in controller.sig]
    if not shared:
        raise SignatureError(f"controller {controller.sig} has no control variable of the network")
    private = {n: f"_ctl_{n}" for n in controller.names if n not in shared}
    C = rename(controller, private)
    return eliminate(interconnect(P, C, shared), net.w_groups())


def verify_implementation(net: Network, controller: Behavior) -> bool:
    """True if the controlled behavior on ``w`` equals ``(K_I)_w``."""
    return equals(controlled_behavior(net, controller), manifest_desired_w(net))


__all__ = [
    "local_canonical",
    "distributed_canonical",
    "central_controller",
    "check_implementability",
    "controlled_behavior",
    "verify_implementation",
    "Implementability",
    "Verdict",
]
