"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries.  Matrices act
on column vectors, so column ``j`` of a matrix holds the image of basis
vector ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]


class DimensionMismatchError(ValueError):
    pass


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use ints, Fractions or 'p/q' strings")
    return Fraction(x)


def vec(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def zero_vec(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vec(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vadd(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Vector) -> Vector:
    c = to_fraction(c)
    return tuple(c * a for a in v)


def vdot(u: Vector, v: Vector) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def is_zero(v: Vector) -> bool:
    return not any(v)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


class Matrix:
    """Dense immutable matrix with exact rational entries."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise DimensionMismatchError("ragged matrix rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls((unit_vec(n, i) for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls((zero_vec(ncols) for _ in range(nrows)), ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], nrows: int) -> Matrix:
        if not columns:
            return cls.zeros(nrows, 0)
        return cls(zip(*columns), ncols=len(columns)) if nrows else cls((), ncols=len(columns))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def rows(self) -> tuple[Vector, ...]:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    @property
    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self.ncols)]

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    @property
    def T(self) -> Matrix:
        return Matrix.from_columns(self._rows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix((vadd(a, b) for a, b in zip(self._rows, other._rows)), ncols=self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix((vsub(a, b) for a, b in zip(self._rows, other._rows)), ncols=self.ncols)

    def __neg__(self) -> Matrix:
        return Matrix((vscale(-1, r) for r in self._rows), ncols=self.ncols)

    def scale(self, c) -> Matrix:
        return Matrix((vscale(c, r) for r in self._rows), ncols=self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns
            return Matrix(((vdot(r, c) for c in cols) for r in self._rows), ncols=other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(vdot(r, v) for r in self._rows)

    def apply(self, v: Vector) -> Vector:
        return self @ v

    def power(self, k: int) -> Matrix:
        if not self.is_square():
            raise DimensionMismatchError("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
        return Matrix(((self._rows[i][j] for j in cols) for i in rows), ncols=len(cols))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self._rows)

    def det(self) -> Fraction:
        if not self.is_square():
            raise DimensionMismatchError("determinant of a non-square matrix")
        return determinant(self)

    def rank(self) -> int:
        return len(rref(self)[1])

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self._rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


RationalMatrix = Matrix


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan reduction; returns pivot columns."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        if piv != 1:
            rows[r] = [a / piv for a in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form of ``m`` and its pivot columns."""
    rows = [list(r) for r in m.rows]
    pivots = _rref_rows(rows, m.ncols)
    return Matrix(rows, ncols=m.ncols), tuple(pivots)


def determinant(m: Matrix) -> Fraction:
    n = m.nrows
    rows = [list(r) for r in m.rows]
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            det = -det
        piv = rows[c][c]
        det *= piv
        for i in range(c + 1, n):
            f = rows[i][c] / piv
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n stored by its RREF basis.

    Two subspaces are equal exactly when they are equal as dataclasses.
    """

    ambient_dim: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient_dim: int, vectors: Iterable[Iterable]) -> Subspace:
        vs = [list(vec(v)) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(f"vector of length {len(v)} in Q^{ambient_dim}")
        pivots = _rref_rows(vs, ambient_dim)
        return cls(ambient_dim, tuple(tuple(v) for v in vs[: len(pivots)]))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, tuple(unit_vec(ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(i for i, a in enumerate(b) if a) for b in self.basis)

    def _check(self, other_dim: int) -> None:
        if other_dim != self.ambient_dim:
            raise DimensionMismatchError(f"ambient dimension {other_dim} vs {self.ambient_dim}")

    def reduce(self, v: Iterable) -> Vector:
        """Canonical normal form of ``v`` modulo this subspace."""
        v = vec(v)
        self._check(len(v))
        out = list(v)
        for b, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                out = [a - c * bb for a, bb in zip(out, b)]
        return tuple(out)

    def contains(self, v: Iterable) -> bool:
        return is_zero(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Iterable) -> Vector:
        """Coordinates of ``v`` in the stored basis; ``v`` must be a member."""
        v = vec(v)
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other.ambient_dim)
        return Subspace.span(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: Subspace) -> Subspace:
        self._check(other.ambient_dim)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        cols = list(self.basis) + [vscale(-1, w) for w in other.basis]
        ker = kernel_basis(Matrix.from_columns(cols, self.ambient_dim))
        k = self.dim
        return Subspace.span(
            self.ambient_dim,
            (lincomb(z[:k], self.basis, self.ambient_dim) for z in ker.basis),
        )

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    def complement_basis(self, sub: Subspace) -> list[Vector]:
        """Vectors of this subspace spanning a complement of ``sub`` (coset representatives).

        Candidates are taken in stored-basis order; the result is deterministic.
        """
        self._check(sub.ambient_dim)
        chosen: list[Vector] = []
        acc = sub
        for b in self.basis:
            if not acc.contains(b):
                chosen.append(b)
                acc = Subspace.span(self.ambient_dim, acc.basis + (b,))
        return chosen

    def matrix(self) -> Matrix:
        """Basis vectors as columns."""
        return Matrix.from_columns(list(self.basis), self.ambient_dim)


def subspace_reduce(ambient: int, vectors: Iterable[Iterable]) -> Subspace:
    return Subspace.span(ambient, vectors)


def member(s: Subspace, v: Iterable) -> bool:
    return s.contains(v)


def subspace_sum(s1: Subspace, s2: Subspace) -> Subspace:
    return s1 + s2


def intersection(s1: Subspace, s2: Subspace) -> Subspace:
    return s1.intersection(s2)


def kernel_basis(m: Matrix) -> Subspace:
    """Null space of ``m`` as a canonical :class:`Subspace` of Q^cols."""
    r, pivots = rref(m)
    n = m.ncols
    free = [j for j in range(n) if j not in set(pivots)]
    vectors = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i, f]
        vectors.append(v)
    return Subspace.span(n, vectors)


def image_basis(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.nrows, m.columns)


def solve(m: Matrix, b: Iterable) -> Vector | None:
    """One solution ``x`` of ``m x = b`` with all free variables zero, or None.

    The map ``b -> x`` is linear on the image of ``m``.
    """
    b = vec(b)
    if len(b) != m.nrows:
        raise DimensionMismatchError(f"right-hand side of length {len(b)} for {m.shape} matrix")
    rows = [list(r) + [c] for r, c in zip(m.rows, b)]
    pivots = _rref_rows(rows, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [Fraction(0)] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][m.ncols]
    return tuple(x)


def eigen1_filtration(m: Matrix) -> tuple[list[int], int]:
    """Dimensions of ker (m - I)^j for j = 1, 2, ... until they stabilize.

    Returns ``(dims, r)`` where ``dims[j-1] = dim ker (m - I)^j`` and ``r`` is the
    index at which the sequence stops growing, i.e. the multiplicity of 1 as a
    root of the minimal polynomial.  ``r = 0`` when 1 is not an eigenvalue.
    """
    if not m.is_square():
        raise DimensionMismatchError("eigen1_filtration needs a square matrix")
    n = m.nrows
    f = m - Matrix.identity(n)
    dims: list[int] = []
    power = Matrix.identity(n)
    prev = 0
    while True:
        power = power @ f
        d = n - power.rank()
        if d == prev:
            break
        dims.append(d)
        prev = d
    if not dims:
        return [0], 0
    return dims, len(dims)


def jordan_blocks_from_dims(dims: Sequence[int]) -> list[int]:
    """Sizes of the Jordan blocks at eigenvalue 1, largest first."""
    d = [0] + list(dims) + [dims[-1] if dims else 0]
    blocks: list[int] = []
    for j in range(1, len(d) - 1):
        at_least_j = d[j] - d[j - 1]
        at_least_next = d[j + 1] - d[j]
        blocks.extend([j] * (at_least_j - at_least_next))
    return sorted(blocks, reverse=True)


def char_poly(m: Matrix) -> list[Fraction]:
    """Monic characteristic polynomial det(xI - m), highest degree first.

    Faddeev-LeVerrier recursion: M_k = m M_{k-1} + c_{k-1} I, c_k = -tr(m M_k)/k.
    """
    if not m.is_square():
        raise DimensionMismatchError("char_poly needs a square matrix")
    n = m.nrows
    coeffs = [Fraction(1)]
    ident = Matrix.identity(n)
    mk = Matrix.zeros(n, n)
    for k in range(1, n + 1):
        mk = m @ mk + ident.scale(coeffs[-1])
        amk = m @ mk
        trace = sum((amk[i, i] for i in range(n)), Fraction(0))
        coeffs.append(-trace / k)
    return coeffs


def poly_eval_matrix(coeffs: Sequence[Fraction], m: Matrix) -> Matrix:
    """Horner evaluation of a polynomial (highest degree first) at a square matrix."""
    n = m.nrows
    out = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for c in coeffs:
        out = out @ m + ident.scale(c)
    return out


def k_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def exterior_power(m: Matrix, k: int) -> Matrix:
    """k-th exterior power in the lexicographic basis of k-subsets.

    Entry (I, J) is the minor det m[I, J], so the matrix acts on e_J = e_j1 ^ ... ^ e_jk.
    """
    if not m.is_square():
        raise DimensionMismatchError("exterior_power needs a square matrix")
    n = m.nrows
    if not 0 <= k <= n:
        raise ValueError(f"exterior power degree {k} outside 0..{n}")
    subsets = k_subsets(n, k)
    if k == 0:
        return Matrix([[1]])
    return Matrix(((m.submatrix(I, J).det() for J in subsets) for I in subsets), ncols=len(subsets))


def matrix_log_unipotent(m: Matrix) -> Matrix:
    """log(m) for a unipotent matrix, as the terminating series in (m - I)."""
    n = m.nrows
    f = m - Matrix.identity(n)
    out = Matrix.zeros(n, n)
    power = Matrix.identity(n)
    for k in range(1, n + 1):
        power = power @ f
        if power.is_zero():
            return out
        out = out + power.scale(Fraction((-1) ** (k + 1), k))
    raise ValueError("matrix is not unipotent")
