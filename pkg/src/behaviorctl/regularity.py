"""Regularity of interconnections: rank tests on kernel representations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .behavior import (
    Behavior,
    SignatureError,
    common_groups,
    eliminate,
    interconnect,
    minimize,
    output_cardinality,
)
from .network import Network, _require_valid, manifest_plant_c, manifest_plant_wc
from .polymat import PolyMat, rank


def is_regular(B1: Behavior, B2: Behavior, shared=None) -> bool:
    """``p(B1 and B2) == p(B1) + p(B2)``."""
    joint = interconnect(B1, B2, shared)
    return output_cardinality(joint) == output_cardinality(B1) + output_cardinality(B2)


def plant_controller_regular(net: Network, controller: Behavior) -> bool:
    """Regularity of ``(P_I)_(w,c)`` with ``(C)_c`` through ``c``."""
    cs = [c for c in net.c_groups() if c in controller.sig]
    if not cs:
        raise SignatureError(f"controller {controller.sig} has no control variable of the network")
    return is_regular(manifest_plant_wc(net), eliminate(controller, cs), cs)


def free_control_sufficient(net: Network) -> bool:
    """True when ``(P_I)_c`` is all of C-infinity.

    Then every distributed controller that implements the desired behavior is
    regular with respect to ``c``.
    """
    _require_valid(net)
    return manifest_plant_c(net).R.rows == 0


@dataclass(frozen=True)
class BlockLN:
    """The partitioned matrix ``[[L1, N1], [L2, N2]]``.

    L-blocks have the columns ``(c1, c2, s, k)`` plus any further local groups,
    N-blocks ``(w1, w2)``.  Row
    block ``i`` stacks the plant rows ``[M_i S_i 0 | R_i]`` over the desired
    rows ``[0 0 K_i | W_i]`` (placed in subsystem ``i``'s own columns).
    """

    L1: PolyMat
    N1: PolyMat
    L2: PolyMat
    N2: PolyMat

    @property
    def top(self) -> PolyMat:
        return self.L1.hstack(self.N1)

    @property
    def bottom(self) -> PolyMat:
        return self.L2.hstack(self.N2)

    @property
    def full(self) -> PolyMat:
        return self.top.vstack(self.bottom)

    @property
    def N(self) -> PolyMat:
        return self.N1.vstack(self.N2)


def _roles(P1: Behavior, K1: Behavior, P2: Behavior, K2: Behavior):
    w1, w2 = common_groups(P1, K1), common_groups(P2, K2)
    s = common_groups(P1, P2)
    k = common_groups(K1, K2)
    if not w1 or not w2:
        raise SignatureError("each plant must share its to-be-controlled variable with its desired behavior")
    if set(w1) & set(s) or set(w2) & set(s) or set(w1) & set(w2) or set(w1 + w2) & set(k):
        raise SignatureError("to-be-controlled variables may not be shared between subsystems")
    # local groups: plant ones (c_i, edges to third subsystems), then desired-only ones
    c1 = [n for n in P1.names if n not in w1 and n not in s]
    c2 = [n for n in P2.names if n not in w2 and n not in s]
    e1 = [n for n in K1.names if n not in w1 and n not in k]
    e2 = [n for n in K2.names if n not in w2 and n not in k]
    local = c1 + c2 + e1 + e2
    if len(set(local)) != len(local) or set(local) & set(s + k):
        raise SignatureError("local variable names clash between the two subsystems")
    return w1, w2, s, k, c1, c2, e1, e2


def _dims(B: Behavior, names) -> int:
    return sum(B.sig.dim(n) for n in names)


def block_ln(P1: Behavior, K1: Behavior, P2: Behavior, K2: Behavior) -> BlockLN:
    """Assemble the L/N blocks from minimal kernels of the four behaviors.

    Local variables beyond ``c_i`` (edges to other subsystems in a larger
    network) are appended to the L columns and never shared.
    """
    w1, w2, s, k, c1, c2, e1, e2 = _roles(P1, K1, P2, K2)
    P1, K1, P2, K2 = (minimize(B) for B in (P1, K1, P2, K2))
    Z = PolyMat.zeros
    widths = {
        "c1": _dims(P1, c1), "c2": _dims(P2, c2), "s": _dims(P1, s), "k": _dims(K1, k),
        "e1": _dims(K1, e1), "e2": _dims(K2, e2), "w1": _dims(P1, w1), "w2": _dims(P2, w2),
    }

    def assemble(nrows, blocks, layout):
        out = Z(nrows, 0)
        for key in layout:
            out = out.hstack(blocks.get(key, Z(nrows, widths[key])))
        return out

    def rows(P, K, c, e, w, tag):
        g, h = P.R.rows, K.R.rows
        plant = {"c" + tag: P.cols(c), "s": P.cols(s), "w" + tag: P.cols(w)}
        desired = {"k": K.cols(k), "e" + tag: K.cols(e), "w" + tag: K.cols(w)}
        lay_l = ["c1", "c2", "s", "k", "e1", "e2"]
        lay_n = ["w1", "w2"]
        L = assemble(g, plant, lay_l).vstack(assemble(h, desired, lay_l))
        N = assemble(g, plant, lay_n).vstack(assemble(h, desired, lay_n))
        return L, N

    L1, N1 = rows(P1, K1, c1, e1, w1, "1")
    L2, N2 = rows(P2, K2, c2, e2, w2, "2")
    return BlockLN(L1, N1, L2, N2)


def pairwise_canonical_regular(P1: Behavior, K1: Behavior, P2: Behavior, K2: Behavior) -> bool:
    """Regularity of the two local canonical controllers, by the block rank test
    ``rank[L1 N1] + rank[L2 N2] == rank[[L1 N1], [L2 N2]]``."""
    b = block_ln(P1, K1, P2, K2)
    return rank(b.top) + rank(b.bottom) == rank(b.full)


def latent_output_cardinality(b: BlockLN) -> int:
    """Output cardinality of the controller interconnection from its latent
    representation: ``rank[L N] - rank[N]``."""
    return rank(b.full) - rank(b.N)


class RegularEquiv(NamedTuple):
    ctrl: bool
    plant: bool
    desired: bool


def regular_equiv(P1: Behavior, K1: Behavior, P2: Behavior, K2: Behavior) -> RegularEquiv:
    """Controller-pair, plant-pair and desired-pair regularity side by side."""
    _, _, s, k, *_ = _roles(P1, K1, P2, K2)
    return RegularEquiv(
        pairwise_canonical_regular(P1, K1, P2, K2),
        is_regular(P1, P2, s),
        is_regular(K1, K2, k),
    )


def network_pair(net: Network, i: int, j: int) -> tuple[Behavior, Behavior, Behavior, Behavior]:
    """``(P_i, K_i, P_j, K_j)`` for use with the pairwise tests."""
    _require_valid(net)
    return net.plant(i), net.desired(i), net.plant(j), net.desired(j)
