"""Exact univariate polynomials over Q and matrices of them.

Coefficients are :class:`fractions.Fraction`; nothing in this module touches
floating point.  The indeterminate is written ``xi``.

The normal forms here (row Hermite, Smith) return the unimodular transforms
alongside the reduced matrix so callers can reconstruct or reuse them.
"""

from __future__ import annotations

from math import gcd
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "Poly",
    "PolyMat",
    "XI",
    "poly_arith",
    "eval_mat",
    "hermite_row",
    "rank",
    "row_compress",
    "smith",
    "solve_left_factor",
    "det",
    "is_unimodular",
    "rational_rank",
    "rational_nullspace",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(cs: list[Fraction]) -> tuple[Fraction, ...]:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


class Poly:
    """A polynomial in ``xi`` with rational coefficients.

    ``coeffs[k]`` is the coefficient of ``xi**k``.  The zero polynomial has no
    coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Poly:
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def const(cls, c) -> Poly:
        c = Fraction(c)
        return cls._raw((c,) if c else ())

    @classmethod
    def coerce(cls, x) -> Poly:
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Rational)):
            return cls.const(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Poly")

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def monic(self) -> Poly:
        if not self.coeffs or self.coeffs[-1] == 1:
            return self
        inv = 1 / self.coeffs[-1]
        return Poly._raw(tuple(c * inv for c in self.coeffs))

    def scale(self, c) -> Poly:
        c = Fraction(c)
        if not c:
            return _PZERO
        return Poly._raw(tuple(x * c for x in self.coeffs))

    def __call__(self, x):
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # ring operations

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            try:
                other = Poly.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            if isinstance(other, (int, Rational)):
                return self.scale(other)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _PZERO
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative exponent")
        out, base = _PONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        other = Poly.coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        if len(rem) - 1 < db:
            return _PZERO, self
        inv = 1 / other.coeffs[-1]
        bc = other.coeffs
        q = [_ZERO] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv
            q[k - db] = c
            for i in range(db + 1):
                rem[k - db + i] -= c * bc[i]
        return Poly._raw(_trim(q)), Poly._raw(_trim(rem[:db]))

    def __floordiv__(self, other) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Poly:
        return divmod(self, other)[1]

    def divides(self, other: Poly) -> bool:
        """True if ``self`` divides ``other`` (zero divides only zero)."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self})"

    def __str__(self) -> str:
        return format_poly(self)


_PZERO = Poly._raw(())
_PONE = Poly._raw((_ONE,))
XI = Poly._raw((_ZERO, _ONE))


def format_poly(p: Poly, var: str = "xi") -> str:
    """Render with descending powers, e.g. ``2xi^2+xi-1/3``."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


def poly_gcdex(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and ``g`` the monic gcd.

    ``gcd(0, 0)`` is 0 with ``s = t = 0``.
    """
    r0, r1 = a, b
    s0, s1 = _PONE, _PZERO
    t0, t1 = _PZERO, _PONE
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero:
        return _PZERO, _PZERO, _PZERO
    inv = 1 / r0.lc
    return r0.scale(inv), s0.scale(inv), t0.scale(inv)


def poly_arith(a: Poly, b: Poly, kind: str):
    """Dispatch ``add``, ``sub``, ``mul`` or ``divrem`` on two polynomials."""
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    if kind == "divrem":
        return divmod(a, b)
    raise ValueError(f"unknown operation {kind!r}")


class PolyMat:
    """Immutable rows x cols matrix of :class:`Poly`.

    Either dimension may be zero; a 0 x n matrix is a kernel with no
    equations on n variables.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Sequence[Sequence] = (), cols: int | None = None):
        rows = tuple(tuple(Poly.coerce(x) for x in r) for r in data)
        if cols is None:
            if not rows:
                raise ValueError("column count required for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", rows)

    @classmethod
    def _raw(cls, data: tuple[tuple[Poly, ...], ...], cols: int) -> PolyMat:
        m = object.__new__(cls)
        object.__setattr__(m, "rows", len(data))
        object.__setattr__(m, "cols", cols)
        object.__setattr__(m, "_data", data)
        return m

    @classmethod
    def _from_lists(cls, data: list[list[Poly]], cols: int) -> PolyMat:
        return cls._raw(tuple(tuple(r) for r in data), cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> PolyMat:
        return cls._raw(tuple((_PZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> PolyMat:
        return cls._raw(
            tuple(tuple(_PONE if i == j else _PZERO for j in range(n)) for i in range(n)), n
        )

    @classmethod
    def diag(cls, entries: Sequence, rows: int | None = None, cols: int | None = None) -> PolyMat:
        entries = [Poly.coerce(e) for e in entries]
        rows = len(entries) if rows is None else rows
        cols = len(entries) if cols is None else cols
        data = [[_PZERO] * cols for _ in range(rows)]
        for i, e in enumerate(entries):
            data[i][i] = e
        return cls._from_lists(data, cols)

    def __setattr__(self, name, value):
        raise AttributeError("PolyMat is immutable")

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Poly:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self._data[i]

    def tolist(self) -> list[list[Poly]]:
        return [list(r) for r in self._data]

    def entries(self) -> list[Poly]:
        """Row-major flat list of entries."""
        return [x for r in self._data for x in r]

    @property
    def is_zero(self) -> bool:
        return all(x.is_zero for r in self._data for x in r)

    @property
    def degree(self) -> int:
        """Largest entry degree (-1 for the zero matrix)."""
        return max((x.degree for r in self._data for x in r), default=-1)

    def transpose(self) -> PolyMat:
        return PolyMat._raw(
            tuple(tuple(self._data[i][j] for i in range(self.rows)) for j in range(self.cols)),
            self.rows,
        )

    T = property(transpose)

    def select_rows(self, idx: Iterable[int]) -> PolyMat:
        return PolyMat._raw(tuple(self._data[i] for i in idx), self.cols)

    def select_cols(self, idx: Iterable[int]) -> PolyMat:
        idx = list(idx)
        return PolyMat._raw(tuple(tuple(r[j] for j in idx) for r in self._data), len(idx))

    def hstack(self, *others: PolyMat) -> PolyMat:
        for o in others:
            if o.rows != self.rows:
                raise ValueError("hstack row mismatch")
        cols = self.cols + sum(o.cols for o in others)
        data = tuple(
            sum((o._data[i] for o in others), self._data[i]) for i in range(self.rows)
        )
        return PolyMat._raw(data, cols)

    def vstack(self, *others: PolyMat) -> PolyMat:
        for o in others:
            if o.cols != self.cols:
                raise ValueError("vstack column mismatch")
        return PolyMat._raw(sum((o._data for o in others), self._data), self.cols)

    def __add__(self, other: PolyMat) -> PolyMat:
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMat._raw(
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)),
            self.cols,
        )

    def __neg__(self) -> PolyMat:
        return PolyMat._raw(tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def __sub__(self, other: PolyMat) -> PolyMat:
        return self + (-other)

    def __matmul__(self, other: PolyMat) -> PolyMat:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        ocols = [tuple(other._data[k][j] for k in range(other.rows)) for j in range(other.cols)]
        data = []
        for r in self._data:
            out = []
            for col in ocols:
                acc = _PZERO
                for a, b in zip(r, col):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                out.append(acc)
            data.append(tuple(out))
        return PolyMat._raw(tuple(data), other.cols)

    __mul__ = __matmul__

    def scale(self, c) -> PolyMat:
        c = Poly.coerce(c)
        return PolyMat._raw(tuple(tuple(a * c for a in r) for r in self._data), self.cols)

    def __call__(self, lam) -> list[list[Fraction]]:
        return [[p(lam) for p in r] for r in self._data]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMat):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.cols, self._data))

    def __repr__(self) -> str:
        if not self.rows:
            return f"PolyMat(0x{self.cols})"
        body = "; ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"PolyMat({body})"


def eval_mat(A: PolyMat, lam) -> list[list[Fraction]]:
    """Entrywise evaluation ``A(lam)``."""
    return A(Fraction(lam))


# -- row operations on mutable list-of-lists --------------------------------


def _axpy_row(dst: list[Poly], src: list[Poly], q: Poly, start: int = 0) -> None:
    """dst -= q * src (from column ``start`` on)."""
    for k in range(start, len(dst)):
        s = src[k]
        if s.coeffs:
            dst[k] = dst[k] - q * s


def _content_scale(row: list[Poly]) -> Fraction:
    """Factor that makes ``row`` a primitive integer row (coprime integer coefficients)."""
    num = 0
    den = 1
    for p in row:
        for c in p.coeffs:
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
    return Fraction(den, num) if num else _ONE


def _hermite_lists(H: list[list[Poly]], U: list[list[Poly]] | None, ncols: int,
                   reduce_above: bool = True) -> int:
    """In-place row Hermite reduction of the first ``ncols`` columns; returns
    the number of pivots.  ``U`` (or ``None``) receives the same row operations."""
    m = len(H)
    r = 0
    for j in range(ncols):
        if r == m:
            break
        has_pivot = False
        while True:
            best = None
            for i in range(r, m):
                e = H[i][j]
                if e.coeffs and (best is None or e.degree < H[best][j].degree):
                    best = i
            if best is None:
                break
            has_pivot = True
            if best != r:
                H[r], H[best] = H[best], H[r]
                if U is not None:
                    U[r], U[best] = U[best], U[r]
            piv = H[r][j]
            clean = True
            for i in range(r + 1, m):
                if H[i][j].coeffs:
                    q, rem = divmod(H[i][j], piv)
                    _axpy_row(H[i], H[r], q, j)
                    if U is not None:
                        _axpy_row(U[i], U[r], q)
                    # a constant row scaling is unimodular; it keeps coefficients small
                    f = _content_scale(H[i])
                    if f != 1:
                        H[i] = [x.scale(f) for x in H[i]]
                        if U is not None:
                            U[i] = [x.scale(f) for x in U[i]]
                    if rem.coeffs:
                        clean = False
            if clean:
                break
        if not has_pivot:
            continue
        lc = H[r][j].lc
        if lc != 1:
            inv = 1 / lc
            H[r] = [x.scale(inv) for x in H[r]]
            if U is not None:
                U[r] = [x.scale(inv) for x in U[r]]
        if reduce_above:
            piv = H[r][j]
            for i in range(r):
                if H[i][j].coeffs:
                    q = H[i][j] // piv
                    if q.coeffs:
                        _axpy_row(H[i], H[r], q, j)
                        if U is not None:
                            _axpy_row(U[i], U[r], q)
        r += 1
    return r


def hermite_row(A: PolyMat) -> tuple[PolyMat, PolyMat]:
    """Row Hermite form: returns ``(H, U)`` with ``U @ A == H``.

    ``U`` is unimodular.  ``H`` is in row echelon form with monic pivots,
    zero rows last, and entries above each pivot reduced modulo it.  Pivot
    choice within a column is the lowest-degree entry, ties to the lowest row.
    """
    H = A.tolist()
    U = PolyMat.identity(A.rows).tolist()
    _hermite_lists(H, U, A.cols)
    return PolyMat._from_lists(H, A.cols), PolyMat._from_lists(U, A.rows)


def _nonzero_rows(H: PolyMat) -> int:
    n = 0
    for r in H._data:
        if any(x.coeffs for x in r):
            n += 1
    return n


def _minor_degree_bound(A: PolyMat) -> int:
    """Upper bound on the degree of any square minor of ``A``."""
    k = min(A.rows, A.cols)
    row_deg = sorted((max((x.degree for x in r), default=-1) for r in A._data), reverse=True)
    col_deg = sorted((max((A._data[i][j].degree for i in range(A.rows)), default=-1)
                      for j in range(A.cols)), reverse=True)
    return max(0, min(sum(max(d, 0) for d in row_deg[:k]), sum(max(d, 0) for d in col_deg[:k])))


def rank(A: PolyMat) -> int:
    """Rank over the field of rational functions in ``xi``.

    A nonzero ``r x r`` minor has degree at most ``D`` (see
    :func:`_minor_degree_bound`), so it is nonzero at one of any ``D + 1``
    distinct points.  The largest scalar rank over ``0, 1, ..., D`` is
    therefore exact.
    """
    if not A.rows or not A.cols:
        return 0
    top = min(A.rows, A.cols)
    best = 0
    for t in range(_minor_degree_bound(A) + 1):
        best = max(best, rational_rank(A(Fraction(t)), A.cols))
        if best == top:
            break
    return best


def echelon_rows(A: PolyMat) -> PolyMat:
    """The nonzero rows of the Hermite form of ``A`` (no transform kept)."""
    H = A.tolist()
    r = _hermite_lists(H, None, A.cols)
    return PolyMat._from_lists(H[:r], A.cols)


def row_compress(A: PolyMat) -> tuple[PolyMat, PolyMat]:
    """Return ``(T, U)`` with ``U @ A == vstack(T, 0)`` and ``T`` full row rank."""
    H, U = hermite_row(A)
    r = _nonzero_rows(H)
    return H.select_rows(range(r)), U


def annihilate_left(A: PolyMat, k: int) -> PolyMat:
    """Rows of ``U @ A`` that vanish on the first ``k`` columns, dropped to the
    remaining columns, where ``U`` row-compresses ``A[:, :k]``."""
    H = A.tolist()
    r = _hermite_lists(H, None, k, reduce_above=False)
    return PolyMat._from_lists([row[k:] for row in H[r:]], A.cols - k)


def _is_diagonal(S: list[list[Poly]]) -> bool:
    return all(not x.coeffs for i, r in enumerate(S) for j, x in enumerate(r) if i != j)


def smith(A: PolyMat) -> tuple[PolyMat, PolyMat, PolyMat]:
    """Smith form: returns ``(U, S, V)`` with ``U @ A @ V == S``.

    ``S`` is diagonal with monic invariant factors forming a divisibility
    chain; zero factors come last.  ``U`` and ``V`` are unimodular.
    """
    m, n = A.shape
    S = A.tolist()
    U = PolyMat.identity(m).tolist()
    Vt = PolyMat.identity(n).tolist()  # transpose of V, so column ops become row ops
    while not _is_diagonal(S):
        _hermite_lists(S, U, n)
        if _is_diagonal(S):
            break
        St = [list(c) for c in zip(*S)] if m else [[] for _ in range(n)]
        _hermite_lists(St, Vt, m)
        S = [list(r) for r in zip(*St)] if n else [[] for _ in range(m)]

    k = min(m, n)
    d = [S[i][i] for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            a, b = d[i], d[j]
            if a.divides(b):
                continue
            g, s, t = poly_gcdex(a, b)
            a1, b1 = a // g, b // g
            # [[s, t], [-b1, a1]] on rows, [[1, -t*b1], [1, s*a1]] on columns
            ui, uj = U[i], U[j]
            U[i] = [s * x + t * y for x, y in zip(ui, uj)]
            U[j] = [a1 * y - b1 * x for x, y in zip(ui, uj)]
            vi, vj = Vt[i], Vt[j]
            Vt[i] = [x + y for x, y in zip(vi, vj)]
            Vt[j] = [(s * a1) * y - (t * b1) * x for x, y in zip(vi, vj)]
            d[i], d[j] = g, a1 * b1 * g
    for i in range(k):
        lc = d[i].lc
        if lc and lc != 1:
            inv = 1 / lc
            U[i] = [x.scale(inv) for x in U[i]]
            d[i] = d[i].scale(inv)
    Sm = PolyMat.diag(d, m, n)
    return PolyMat._from_lists(U, m), Sm, PolyMat._from_lists(Vt, n).transpose()


def solve_left_factor(A: PolyMat, B: PolyMat) -> PolyMat | None:
    """Find ``F`` with ``F @ A == B``, or ``None`` if the row module of ``B``
    is not contained in that of ``A``."""
    if A.cols != B.cols:
        raise ValueError(f"column mismatch: {A.shape} vs {B.shape}")
    m = A.rows
    if not m:
        return PolyMat.zeros(B.rows, 0) if B.is_zero else None
    U, S, V = smith(A)
    BV = B @ V
    k = min(m, A.cols)
    sig = [S[i, i] for i in range(k)]
    r = sum(1 for x in sig if x.coeffs)
    G = [[_PZERO] * m for _ in range(B.rows)]
    for j in range(A.cols):
        for i in range(B.rows):
            e = BV[i, j]
            if j < r:
                q, rem = divmod(e, sig[j])
                if rem.coeffs:
                    return None
                G[i][j] = q
            elif e.coeffs:
                return None
    return PolyMat._from_lists(G, m) @ U


def det(A: PolyMat) -> Poly:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = A.rows
    if n != A.cols:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return _PONE
    M = A.tolist()
    sign = 1
    prev = _PONE
    for k in range(n - 1):
        if M[k][k].is_zero:
            for i in range(k + 1, n):
                if M[i][k].coeffs:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return _PZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = M[i][j] * M[k][k] - M[i][k] * M[k][j]
                q, rem = divmod(num, prev)
                assert rem.is_zero, "Bareiss division not exact"
                M[i][j] = q
        prev = M[k][k]
    d = M[n - 1][n - 1]
    return d if sign > 0 else -d


def is_unimodular(U: PolyMat) -> bool:
    """Square with a nonzero constant determinant."""
    if U.rows != U.cols:
        return False
    return det(U).degree == 0


# -- exact linear algebra over Q --------------------------------------------


def _rref(M: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    M = [list(r) for r in M]
    pivots = []
    r = 0
    for j in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][j]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][j]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][j]:
                f = M[i][j]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(j)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rational_rank(M: list[list[Fraction]], ncols: int | None = None) -> int:
    if not M:
        return 0
    return len(_rref(M, len(M[0]) if ncols is None else ncols)[1])


def rational_nullspace(M: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : M v = 0}`` as a list of length-``ncols`` vectors."""
    if not M:
        return [[_ONE if i == j else _ZERO for i in range(ncols)] for j in range(ncols)]
    R, pivots = _rref(M, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for row, pj in zip(R, pivots):
            v[pj] = -row[f]
        basis.append(v)
    return basis
