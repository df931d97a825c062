"""Networks of plants and desired behaviors.

Subsystem ``i`` (1-based) names its groups by role: ``w<i>`` to-be-controlled,
``c<i>`` control, ``s<i><j>`` plant interconnection and ``k<i><j>`` desired
interconnection with ``i < j``.  Both endpoints of an edge use the same
``s``/``k`` name, so interconnecting is plain name matching.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .behavior import (
    Behavior,
    eliminate,
    interconnect,
    minimize,
    reorder,
    zero_restrict,
)


def _pair(i: int, j: int) -> str:
    i, j = min(i, j), max(i, j)
    return f"{i}{j}" if i < 10 and j < 10 else f"{i}_{j}"


def w_name(i: int) -> str:
    return f"w{i}"


def c_name(i: int) -> str:
    return f"c{i}"


def s_name(i: int, j: int) -> str:
    return "s" + _pair(i, j)


def k_name(i: int, j: int) -> str:
    return "k" + _pair(i, j)


class NetworkError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    where: str
    rule: str

    def __str__(self) -> str:
        return f"{self.where}: {self.rule}"


@dataclass(frozen=True)
class Edge:
    i: int
    j: int
    s_dim: int
    k_dim: int

    @property
    def s(self) -> str:
        return s_name(self.i, self.j)

    @property
    def k(self) -> str:
        return k_name(self.i, self.j)

    def __str__(self) -> str:
        return f"edge ({self.i},{self.j})"


@dataclass(frozen=True)
class Subsystem:
    plant: Behavior
    desired: Behavior


@dataclass(frozen=True)
class Network:
    subsystems: tuple[Subsystem, ...]
    edges: tuple[Edge, ...] = field(default_factory=tuple)

    def __init__(self, subsystems, edges=()):
        object.__setattr__(self, "subsystems", tuple(subsystems))
        object.__setattr__(self, "edges", tuple(edges))

    @property
    def size(self) -> int:
        return len(self.subsystems)

    def edges_of(self, i: int) -> list[Edge]:
        return [e for e in self.edges if i in (e.i, e.j)]

    def plant(self, i: int) -> Behavior:
        return self.subsystems[i - 1].plant

    def desired(self, i: int) -> Behavior:
        return self.subsystems[i - 1].desired

    def w_groups(self) -> list[str]:
        return [w_name(i) for i in range(1, self.size + 1)]

    def c_groups(self) -> list[str]:
        return [c_name(i) for i in range(1, self.size + 1)]

    def s_groups(self) -> list[str]:
        return [e.s for e in self.edges if e.s_dim]

    def k_groups(self) -> list[str]:
        return [e.k for e in self.edges if e.k_dim]


def _group_dim(B: Behavior, name: str) -> int:
    return B.sig.dim(name) if name in B.sig else 0


def validate(net: Network) -> list[Violation]:
    """All broken structural rules; empty when the network is well formed."""
    out: list[Violation] = []
    L = net.size
    if L < 1:
        out.append(Violation("network", "needs at least one subsystem"))
    seen = set()
    for e in net.edges:
        if not (1 <= e.i < e.j <= L):
            out.append(Violation(str(e), f"indices must satisfy 1 <= i < j <= {L}"))
            continue
        if (e.i, e.j) in seen:
            out.append(Violation(str(e), "duplicate edge"))
        seen.add((e.i, e.j))
        if e.s_dim < 0 or e.k_dim < 0:
            out.append(Violation(str(e), "negative dimension"))
        if e.s_dim == 0 and e.k_dim > 0:
            out.append(
                Violation(str(e), "plants share no variable, so desired subsystems may not share one")
            )
        for n in (e.i, e.j):
            got = _group_dim(net.plant(n), e.s)
            if got != e.s_dim:
                out.append(
                    Violation(str(e), f"{e.s} has dim {got} in plant {n}, edge declares {e.s_dim}")
                )
            got = _group_dim(net.desired(n), e.k)
            if got != e.k_dim:
                out.append(
                    Violation(str(e), f"{e.k} has dim {got} in desired {n}, edge declares {e.k_dim}")
                )
    if L < 1 or any(not (1 <= e.i < e.j <= L) for e in net.edges):
        return out
    for i in range(1, L + 1):
        P, K = net.plant(i), net.desired(i)
        w, c = w_name(i), c_name(i)
        where = f"subsystem {i}"
        allowed_p = {w, c} | {e.s for e in net.edges_of(i)}
        allowed_k = {w} | {e.k for e in net.edges_of(i)}
        for g in P.names:
            if g not in allowed_p:
                out.append(Violation(where, f"plant group {g!r} is not {w}, {c} or an edge variable"))
        for g in K.names:
            if g not in allowed_k:
                out.append(Violation(where, f"desired group {g!r} is not {w} or an edge variable"))
        if w not in P.sig:
            out.append(Violation(where, f"plant lacks {w}"))
        if c not in P.sig:
            out.append(Violation(where, f"plant lacks {c}"))
        if w not in K.sig:
            out.append(Violation(where, f"desired lacks {w}"))
        if w in P.sig and w in K.sig and P.sig.dim(w) != K.sig.dim(w):
            out.append(Violation(where, f"{w} differs in dimension between plant and desired"))
    return out


def _require_valid(net: Network) -> None:
    bad = validate(net)
    if bad:
        raise NetworkError(bad)


def _conjoin(behaviors: list[Behavior]) -> Behavior:
    out = behaviors[0]
    for B in behaviors[1:]:
        out = interconnect(out, B)
    return out


def plant_interconnection(net: Network) -> Behavior:
    """``P_I`` over ``(w_1..w_L, s-edges, c_1..c_L)``."""
    _require_valid(net)
    P = _conjoin([s.plant for s in net.subsystems])
    order = net.w_groups() + [g for g in net.s_groups() if g in P.sig] + net.c_groups()
    order += [g for g in P.names if g not in order]
    return reorder(P, order)


def desired_interconnection(net: Network) -> Behavior:
    """``K_I`` over ``(w_1..w_L, k-edges)``."""
    _require_valid(net)
    K = _conjoin([s.desired for s in net.subsystems])
    order = net.w_groups() + [g for g in net.k_groups() if g in K.sig]
    order += [g for g in K.names if g not in order]
    return reorder(K, order)


def manifest_desired_w(net: Network) -> Behavior:
    return eliminate(desired_interconnection(net), net.w_groups())


def manifest_plant_wc(net: Network) -> Behavior:
    return eliminate(plant_interconnection(net), net.w_groups() + net.c_groups())


def manifest_plant_w(net: Network) -> Behavior:
    return eliminate(plant_interconnection(net), net.w_groups())


def manifest_plant_c(net: Network) -> Behavior:
    return eliminate(plant_interconnection(net), net.c_groups())


def hidden(net: Network) -> Behavior:
    """Trajectories of ``w`` compatible with ``c = 0``."""
    B = manifest_plant_wc(net)
    for c in net.c_groups():
        B = zero_restrict(B, c)
    return minimize(B)
