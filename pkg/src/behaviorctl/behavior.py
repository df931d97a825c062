"""Linear differential behaviors given by kernel representations.

A :class:`Behavior` is the set of smooth trajectories ``w`` with
``R(d/dt) w = 0``.  Columns of ``R`` are labelled by a :class:`Signature`,
an ordered list of named variable groups; groups are always matched by name.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .polymat import PolyMat, annihilate_left, echelon_rows, rank, solve_left_factor


class SignatureError(ValueError):
    """Unknown group, clashing names or mismatched dimensions."""


@dataclass(frozen=True)
class VarGroup:
    name: str
    dim: int

    def __post_init__(self):
        if self.dim < 0:
            raise SignatureError(f"group {self.name!r} has negative dimension")


@dataclass(frozen=True)
class Signature:
    groups: tuple[VarGroup, ...]

    def __init__(self, groups: Iterable = ()):
        gs = []
        for g in groups:
            if not isinstance(g, VarGroup):
                g = VarGroup(*g)
            gs.append(g)
        names = [g.name for g in gs]
        if len(set(names)) != len(names):
            raise SignatureError(f"duplicate group names in {names}")
        object.__setattr__(self, "groups", tuple(gs))

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.groups]

    @property
    def total_dim(self) -> int:
        return sum(g.dim for g in self.groups)

    def __contains__(self, name: str) -> bool:
        return any(g.name == name for g in self.groups)

    def __len__(self) -> int:
        return len(self.groups)

    def group(self, name: str) -> VarGroup:
        for g in self.groups:
            if g.name == name:
                return g
        raise SignatureError(f"unknown group {name!r}; have {self.names}")

    def dim(self, name: str) -> int:
        return self.group(name).dim

    def columns(self, name: str) -> range:
        off = 0
        for g in self.groups:
            if g.name == name:
                return range(off, off + g.dim)
            off += g.dim
        raise SignatureError(f"unknown group {name!r}; have {self.names}")

    def subset(self, names: Sequence[str]) -> Signature:
        return Signature(self.group(n) for n in names)

    def __str__(self) -> str:
        return "(" + ", ".join(f"{g.name}:{g.dim}" for g in self.groups) + ")"


@dataclass(frozen=True)
class Behavior:
    sig: Signature
    R: PolyMat

    def __post_init__(self):
        if self.R.cols != self.sig.total_dim:
            raise SignatureError(
                f"kernel has {self.R.cols} columns but signature {self.sig} needs {self.sig.total_dim}"
            )

    @property
    def names(self) -> list[str]:
        return self.sig.names

    def cols(self, names: Sequence[str]) -> PolyMat:
        """The columns of ``R`` belonging to ``names``, in that order."""
        idx = [j for n in names for j in self.sig.columns(n)]
        return self.R.select_cols(idx)

    def __str__(self) -> str:
        return f"Behavior{self.sig} {self.R}"


def make_behavior(sig, R) -> Behavior:
    if not isinstance(sig, Signature):
        sig = Signature(sig)
    if not isinstance(R, PolyMat):
        R = PolyMat(R, cols=sig.total_dim)
    return Behavior(sig, R)


def full_behavior(sig) -> Behavior:
    """All of C-infinity on ``sig`` (no equations)."""
    sig = sig if isinstance(sig, Signature) else Signature(sig)
    return Behavior(sig, PolyMat.zeros(0, sig.total_dim))


def zero_behavior(sig) -> Behavior:
    sig = sig if isinstance(sig, Signature) else Signature(sig)
    return Behavior(sig, PolyMat.identity(sig.total_dim))


def minimize(B: Behavior) -> Behavior:
    """Full-row-rank kernel for the same behavior (the nonzero Hermite rows)."""
    return Behavior(B.sig, echelon_rows(B.R))


def is_minimal(B: Behavior) -> bool:
    return rank(B.R) == B.R.rows


def cardinalities(B: Behavior) -> tuple[int, int]:
    """``(m, p)``: the input and output cardinalities."""
    p = rank(B.R)
    return B.sig.total_dim - p, p


def output_cardinality(B: Behavior) -> int:
    return rank(B.R)


def reorder(B: Behavior, names: Sequence[str]) -> Behavior:
    """Permute groups into ``names`` order (which must list every group)."""
    if sorted(names) != sorted(B.names):
        raise SignatureError(f"reorder needs a permutation of {B.names}, got {list(names)}")
    return Behavior(B.sig.subset(names), B.cols(names))


def rename(B: Behavior, mapping: dict[str, str]) -> Behavior:
    sig = Signature(VarGroup(mapping.get(g.name, g.name), g.dim) for g in B.sig.groups)
    return Behavior(sig, B.R)


def _shared_pairs(B1: Behavior, B2: Behavior, shared) -> list[tuple[str, str]]:
    pairs = []
    for item in shared:
        a, b = (item, item) if isinstance(item, str) else item
        if a not in B1.sig:
            raise SignatureError(f"unknown group {a!r} in first behavior {B1.sig}")
        if b not in B2.sig:
            raise SignatureError(f"unknown group {b!r} in second behavior {B2.sig}")
        if B1.sig.dim(a) != B2.sig.dim(b):
            raise SignatureError(
                f"shared groups {a!r}/{b!r} differ in dimension: {B1.sig.dim(a)} vs {B2.sig.dim(b)}"
            )
        pairs.append((a, b))
    return pairs


def common_groups(B1: Behavior, B2: Behavior) -> list[str]:
    """Group names present in both, in ``B1`` order."""
    return [n for n in B1.names if n in B2.sig]


def interconnect(B1: Behavior, B2: Behavior, shared=None) -> Behavior:
    """Interconnection through the shared groups.

    ``shared`` lists names (same name on both sides) or ``(name1, name2)``
    pairs; by default every common name is shared.  The result has the groups
    of ``B1`` followed by the unshared groups of ``B2``; shared groups keep
    their ``B1`` names.
    """
    if shared is None:
        shared = common_groups(B1, B2)
    pairs = _shared_pairs(B1, B2, shared)
    src = {a: b for a, b in pairs}  # B1 name -> B2 name
    shared_b2 = set(src.values())
    extra = [g for g in B2.sig.groups if g.name not in shared_b2]
    for g in extra:
        if g.name in B1.sig:
            raise SignatureError(
                f"group {g.name!r} appears in both behaviors but is not shared; rename it first"
            )
    sig = Signature(list(B1.sig.groups) + extra)
    top = B1.R.hstack(PolyMat.zeros(B1.R.rows, sum(g.dim for g in extra)))
    bottom = PolyMat.zeros(B2.R.rows, 0)
    for g in sig.groups:
        if g.name in src:
            block = B2.cols([src[g.name]])
        elif g in extra:
            block = B2.cols([g.name])
        else:
            block = PolyMat.zeros(B2.R.rows, g.dim)
        bottom = bottom.hstack(block)
    return Behavior(sig, top.vstack(bottom))


def eliminate(B: Behavior, keep: Sequence[str]) -> Behavior:
    """Manifest behavior on the ``keep`` groups (in that order), minimized.

    Row-compress the eliminated columns with a unimodular ``U``; the rows of
    ``U @ R`` that vanish on them give the kernel on the kept variables.
    """
    keep = list(keep)
    for n in keep:
        B.sig.group(n)
    drop = [n for n in B.names if n not in keep]
    if not drop:
        return minimize(Behavior(B.sig.subset(keep), B.cols(keep)))
    # eliminated columns first, so the compressing row operations act on the
    # kept columns too; the rows left zero on the eliminated part remain
    R = annihilate_left(B.cols(drop + keep), B.sig.subset(drop).total_dim)
    return minimize(Behavior(B.sig.subset(keep), R))


def _check_same_sig(B1: Behavior, B2: Behavior) -> None:
    if B1.sig != B2.sig:
        raise SignatureError(f"signatures differ: {B1.sig} vs {B2.sig}")


def includes(B1: Behavior, B2: Behavior) -> bool:
    """True if ``B1`` is a subset of ``B2``, i.e. ``R2 = F @ R1`` for some ``F``."""
    _check_same_sig(B1, B2)
    if not B2.R.rows or B2.R.is_zero:
        return True
    R1 = minimize(B1).R
    return solve_left_factor(R1, B2.R) is not None


def inclusion_witness(B1: Behavior, B2: Behavior) -> tuple[int, PolyMat] | None:
    """First row of the minimized kernel of ``B2`` not generated by the rows of
    ``B1``'s kernel, as ``(index, row)``; ``None`` when ``B1`` is a subset of ``B2``."""
    _check_same_sig(B1, B2)
    R1 = minimize(B1).R
    R2 = minimize(B2).R
    for i in range(R2.rows):
        row = R2.select_rows([i])
        if solve_left_factor(R1, row) is None:
            return i, row
    return None


def equals(B1: Behavior, B2: Behavior) -> bool:
    return includes(B1, B2) and includes(B2, B1)


def zero_restrict(B: Behavior, group: str) -> Behavior:
    """Pin ``group`` to zero: drop its columns.  Not minimized."""
    B.sig.group(group)
    rest = [n for n in B.names if n != group]
    return Behavior(B.sig.subset(rest), B.cols(rest))


def identify(B: Behavior, keep: str, drop: str) -> Behavior:
    """Impose ``drop == keep`` and remove ``drop``; result minimized.

    Since ``drop`` is then determined by ``keep``, its columns fold into
    those of ``keep`` and no elimination is needed.
    """
    if B.sig.dim(keep) != B.sig.dim(drop):
        raise SignatureError(f"cannot identify {keep!r} with {drop!r}: dimensions differ")
    rest = [n for n in B.names if n != drop]
    merged = [B.cols([n]) if n != keep else B.cols([keep]) + B.cols([drop]) for n in rest]
    R = merged[0].hstack(*merged[1:]) if merged else PolyMat.zeros(B.R.rows, 0)
    return minimize(Behavior(B.sig.subset(rest), R))
