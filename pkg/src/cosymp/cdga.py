"""Graded-commutative differential algebras of finite type.

Two concrete algebras share the same linear interface (``dim``, ``d_matrix``,
``mul``, ``max_degree``) so cohomology and Massey products can be computed on
either of them:

* :class:`Cdga` -- a free algebra on graded generators (exterior on odd
  generators, polynomial on even ones) with a differential given on
  generators and extended by the Leibniz rule.
* :class:`FiniteCdga` -- a finite-dimensional algebra given by explicit
  product tensors and differential matrices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactlinalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    Vector,
    is_zero,
    kernel_basis,
    lincomb,
    to_fraction,
    unit_vec,
    zero_vec,
)

Monomial = tuple  # nondecreasing tuple of generator indices


class CdgaError(ValueError):
    pass


class TruncationError(CdgaError):
    pass


class DSquaredError(CdgaError):
    def __init__(self, generator: str, value: "Element"):
        super().__init__(f"d(d({generator})) = {value} is not zero")
        self.generator = generator
        self.value = value


@dataclass(frozen=True)
class GeneratorTable:
    """Graded generators sorted by (degree, declaration position)."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[str, int]]) -> GeneratorTable:
        pairs = list(pairs)
        names = [n for n, _ in pairs]
        if len(set(names)) != len(names):
            raise CdgaError("generator names must be unique")
        for n, deg in pairs:
            if deg < 1:
                raise CdgaError(f"generator {n} has degree {deg} < 1")
        order = sorted(range(len(pairs)), key=lambda i: (pairs[i][1], i))
        return cls(tuple(pairs[i][0] for i in order), tuple(pairs[i][1] for i in order))

    @classmethod
    def exterior(cls, names: Sequence[str]) -> GeneratorTable:
        return cls.from_pairs((n, 1) for n in names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise CdgaError(f"unknown generator {name!r}") from None

    def is_odd(self, i: int) -> bool:
        return self.degrees[i] % 2 == 1

    def monomial_degree(self, m: Monomial) -> int:
        return sum(self.degrees[i] for i in m)

    @property
    def is_exterior(self) -> bool:
        return all(d % 2 for d in self.degrees)

    def format_monomial(self, m: Monomial) -> str:
        if not m:
            return "1"
        out, i = [], 0
        while i < len(m):
            j = i
            while j < len(m) and m[j] == m[i]:
                j += 1
            name = self.names[m[i]]
            out.append(name if j - i == 1 else f"{name}**{j - i}")
            i = j
        return "^".join(out)


def monomial_product(table: GeneratorTable, m1: Monomial, m2: Monomial) -> tuple[int, Monomial]:
    """Product of two canonical monomials as (sign, monomial); sign 0 when it vanishes."""
    sign = 1
    odd1 = [i for i in m1 if table.is_odd(i)]
    for y in m2:
        if table.is_odd(y):
            if y in odd1:
                return 0, ()
            # y moves left past every odd generator of m1 that is larger
            if sum(1 for x in odd1 if x > y) % 2:
                sign = -sign
    return sign, tuple(sorted(m1 + m2))


class Element:
    """Homogeneous element: rational combination of canonical monomials."""

    __slots__ = ("table", "terms", "degree")

    def __init__(self, table: GeneratorTable, terms: Mapping[Monomial, object], degree: int | None = None):
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            c = to_fraction(c)
            if c:
                clean[tuple(m)] = clean.get(tuple(m), Fraction(0)) + c
        clean = {m: c for m, c in clean.items() if c}
        degs = {table.monomial_degree(m) for m in clean}
        if len(degs) > 1:
            raise CdgaError(f"inhomogeneous element with degrees {sorted(degs)}")
        if degs:
            d = degs.pop()
            if degree is not None and degree != d:
                raise CdgaError(f"element has degree {d}, expected {degree}")
            degree = d
        self.table = table
        self.terms = clean
        self.degree = degree if degree is not None else 0

    @classmethod
    def zero(cls, table: GeneratorTable, degree: int = 0) -> Element:
        return cls(table, {}, degree)

    @classmethod
    def one(cls, table: GeneratorTable) -> Element:
        return cls(table, {(): 1}, 0)

    @classmethod
    def generator(cls, table: GeneratorTable, name: str) -> Element:
        i = table.index(name)
        return cls(table, {(i,): 1}, table.degrees[i])

    @classmethod
    def monomial(cls, table: GeneratorTable, names: Sequence[str], coeff=1) -> Element:
        out = cls(table, {(): coeff}, 0)
        for n in names:
            out = out * cls.generator(table, n)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def _check_table(self, other: Element) -> None:
        if self.table != other.table:
            raise CdgaError("elements live over different generator tables")

    def __add__(self, other: Element) -> Element:
        self._check_table(other)
        if self.terms and other.terms and self.degree != other.degree:
            raise CdgaError(f"cannot add degree {self.degree} and degree {other.degree}")
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        deg = self.degree if self.terms else other.degree
        return Element(self.table, terms, deg)

    def __neg__(self) -> Element:
        return Element(self.table, {m: -c for m, c in self.terms.items()}, self.degree)

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def __mul__(self, other) -> Element:
        if not isinstance(other, Element):
            c = to_fraction(other)
            return Element(self.table, {m: c * v for m, v in self.terms.items()}, self.degree)
        return wedge(self, other)

    def __rmul__(self, other) -> Element:
        return self * other

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.table == other.table and self.terms == other.terms and (
            self.degree == other.degree or not self.terms
        )

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            mon = self.table.format_monomial(m)
            if mon == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mon)
            elif c == -1:
                parts.append(f"-{mon}")
            else:
                parts.append(f"{c}*{mon}")
        return " + ".join(parts).replace("+ -", "- ")


def wedge(a: Element, b: Element) -> Element:
    """Graded-commutative product with Koszul signs."""
    a._check_table(b)
    terms: dict[Monomial, Fraction] = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            s, m = monomial_product(a.table, m1, m2)
            if s:
                terms[m] = terms.get(m, Fraction(0)) + s * c1 * c2
    return Element(a.table, terms, a.degree + b.degree)


def monomials_of_degree(table: GeneratorTable, k: int) -> list[Monomial]:
    """All canonical monomials of total degree k, sorted lexicographically."""
    out: list[Monomial] = []
    n = len(table)

    def rec(start: int, remaining: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, n):
            d = table.degrees[i]
            if d > remaining:
                continue
            nxt = i + 1 if table.is_odd(i) else i
            acc.append(i)
            rec(nxt, remaining - d, acc)
            acc.pop()

    rec(0, k, [])
    return sorted(out)


class _LinearAlgebraMixin:
    """Shared coordinate-level operations; subclasses provide dim/d_matrix/mul."""

    max_degree: int

    def check_degree(self, k: int) -> None:
        if k < 0 or k > self.max_degree:
            raise TruncationError(f"degree {k} exceeds truncation degree {self.max_degree}")

    def d_vec(self, k: int, v: Vector) -> Vector:
        return self.d_matrix(k) @ v

    def cocycles(self, k: int) -> Subspace:
        return kernel_basis(self.d_matrix(k))

    def coboundaries(self, k: int) -> Subspace:
        if k == 0:
            return Subspace.zero(self.dim(0))
        return Subspace.span(self.dim(k), self.d_matrix(k - 1).columns)


class Cdga(_LinearAlgebraMixin):
    """Free graded-commutative algebra with a differential, truncated above ``truncation_degree``."""

    def __init__(
        self,
        table: GeneratorTable,
        differential: Mapping[str, Element],
        truncation_degree: int | None = None,
        check: bool = True,
    ):
        self.table = table
        if truncation_degree is None:
            if not table.is_exterior:
                raise CdgaError("truncation_degree is required when a generator has even degree")
            truncation_degree = sum(table.degrees) + 1
        if truncation_degree < 1:
            raise CdgaError("truncation_degree must be positive")
        self.truncation_degree = truncation_degree
        self.max_degree = truncation_degree
        gens: dict[int, Element] = {}
        for i, name in enumerate(table.names):
            dg = differential.get(name)
            if dg is None or dg.is_zero():
                dg = Element.zero(table, table.degrees[i] + 1)
            if dg.table != table:
                raise CdgaError(f"d({name}) uses a different generator table")
            if dg.terms and dg.degree != table.degrees[i] + 1:
                raise CdgaError(f"d({name}) has degree {dg.degree}, expected {table.degrees[i] + 1}")
            gens[i] = dg
        unknown = set(differential) - set(table.names)
        if unknown:
            raise CdgaError(f"differential given for unknown generators {sorted(unknown)}")
        self._dgen = gens
        self._dmono: dict[Monomial, Element] = {}
        self._basis: dict[int, list[Monomial]] = {}
        self._index: dict[int, dict[Monomial, int]] = {}
        self._dmat: dict[int, Matrix] = {}
        if check:
            ok, bad = verify_d_squared(self)
            if not ok:
                raise DSquaredError(bad, self.differential(self.differential(self.gen(bad))))

    @classmethod
    def exterior(cls, names: Sequence[str], differential: Mapping[str, Element] | None = None, **kw) -> Cdga:
        return cls(GeneratorTable.exterior(names), differential or {}, **kw)

    def gen(self, name: str) -> Element:
        return Element.generator(self.table, name)

    def one(self) -> Element:
        return Element.one(self.table)

    def zero(self, degree: int = 0) -> Element:
        return Element.zero(self.table, degree)

    def d_generator(self, name: str) -> Element:
        return self._dgen[self.table.index(name)]

    def _d_monomial(self, m: Monomial) -> Element:
        hit = self._dmono.get(m)
        if hit is not None:
            return hit
        table = self.table
        total = Element.zero(table, table.monomial_degree(m) + 1)
        sign_deg = 0
        for pos, g in enumerate(m):
            prefix = Element(table, {m[:pos]: 1}, table.monomial_degree(m[:pos]))
            suffix = Element(table, {m[pos + 1:]: 1}, table.monomial_degree(m[pos + 1:]))
            term = wedge(wedge(prefix, self._dgen[g]), suffix)
            if sign_deg % 2:
                term = -term
            total = total + term
            sign_deg += table.degrees[g]
        self._dmono[m] = total
        return total

    def differential(self, a: Element) -> Element:
        """Leibniz extension of the generator differentials."""
        if a.table != self.table:
            raise CdgaError("element belongs to a different algebra")
        if a.degree >= self.truncation_degree:
            raise TruncationError(f"d of a degree {a.degree} element exceeds truncation degree {self.truncation_degree}")
        out = Element.zero(self.table, a.degree + 1)
        for m, c in a.terms.items():
            out = out + self._d_monomial(m) * c
        return out

    d = differential

    # linear interface

    def basis(self, k: int) -> list[Monomial]:
        self.check_degree(k)
        if k not in self._basis:
            self._basis[k] = monomials_of_degree(self.table, k)
            self._index[k] = {m: i for i, m in enumerate(self._basis[k])}
        return self._basis[k]

    def dim(self, k: int) -> int:
        return len(self.basis(k))

    def labels(self, k: int) -> list[str]:
        return [self.table.format_monomial(m) for m in self.basis(k)]

    def to_vector(self, a: Element) -> Vector:
        basis = self.basis(a.degree)
        idx = self._index[a.degree]
        v = [Fraction(0)] * len(basis)
        for m, c in a.terms.items():
            v[idx[m]] = c
        return tuple(v)

    def from_vector(self, k: int, v: Sequence) -> Element:
        basis = self.basis(k)
        if len(v) != len(basis):
            raise DimensionMismatchError(f"vector of length {len(v)} for degree {k} (dim {len(basis)})")
        return Element(self.table, {m: c for m, c in zip(basis, v) if c}, k)

    def d_matrix(self, k: int) -> Matrix:
        """Matrix of d: A^k -> A^(k+1) in monomial bases."""
        if k + 1 > self.max_degree:
            raise TruncationError(f"d on degree {k} needs degree {k + 1} > truncation {self.max_degree}")
        if k not in self._dmat:
            cols = [self.to_vector(self._d_monomial(m)) if self.table.monomial_degree(m) == k else None
                    for m in self.basis(k)]
            n1 = self.dim(k + 1)
            cols = [c if c is not None else zero_vec(n1) for c in cols]
            self._dmat[k] = Matrix.from_columns(cols, n1)
        return self._dmat[k]

    def mul(self, k: int, u: Vector, l: int, v: Vector) -> Vector:
        if k + l > self.max_degree:
            raise TruncationError(f"product lands in degree {k + l} above truncation {self.max_degree}")
        return self.to_vector(wedge(self.from_vector(k, u), self.from_vector(l, v)))

    def __repr__(self) -> str:
        ds = ", ".join(f"d{n}={self._dgen[i]}" for i, n in enumerate(self.table.names))
        return f"Cdga({ds}; truncation={self.truncation_degree})"


def differential(c: Cdga, a: Element) -> Element:
    return c.differential(a)


def verify_d_squared(c: Cdga) -> tuple[bool, str | None]:
    """Check d(d(g)) = 0 for every generator whose d^2 stays within truncation."""
    for i, name in enumerate(c.table.names):
        if c.table.degrees[i] + 2 > c.truncation_degree:
            continue
        dd = c.differential(c._dgen[i])
        if not dd.is_zero():
            return False, name
    return True, None


class FiniteCdga(_LinearAlgebraMixin):
    """Finite-dimensional CDGA given by bases, product tensors and differential matrices.

    ``products[(k, l)][i][j]`` is the coordinate vector of (basis_k[i]) * (basis_l[j])
    in degree k + l; missing entries mean zero.  ``dmats[k]`` maps degree k to k+1.
    """

    def __init__(
        self,
        labels: Sequence[Sequence[str]],
        products: Mapping[tuple[int, int], Sequence[Sequence[Vector]]],
        dmats: Mapping[int, Matrix],
        check: bool = True,
    ):
        self._labels = [list(l) for l in labels]
        self.max_degree = len(labels) - 1
        self._dims = [len(l) for l in labels]
        if self._dims[0] != 1:
            raise CdgaError("degree 0 must be one-dimensional (connected algebra)")
        self._products = {k: [[tuple(x) for x in row] for row in tab] for k, tab in products.items()}
        self._dmats = {}
        for k in range(self.max_degree):
            m = dmats.get(k, Matrix.zeros(self._dims[k + 1], self._dims[k]))
            if m.shape != (self._dims[k + 1], self._dims[k]):
                raise DimensionMismatchError(f"d in degree {k} has shape {m.shape}")
            self._dmats[k] = m
        if check:
            problems = self.check_axioms()
            if problems:
                raise CdgaError("; ".join(problems))

    def dim(self, k: int) -> int:
        if k < 0 or k > self.max_degree:
            return 0
        return self._dims[k]

    def labels(self, k: int) -> list[str]:
        return list(self._labels[k])

    def d_matrix(self, k: int) -> Matrix:
        if k == self.max_degree:
            return Matrix.zeros(0, self._dims[k])
        self.check_degree(k + 1)
        return self._dmats[k]

    def mul(self, k: int, u: Vector, l: int, v: Vector) -> Vector:
        n = self.dim(k + l)
        if k + l > self.max_degree:
            return ()
        if k == 0:
            return tuple(u[0] * x for x in v)
        if l == 0:
            return tuple(v[0] * x for x in u)
        tab = self._products.get((k, l))
        out = [Fraction(0)] * n
        if tab is None:
            return tuple(out)
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b:
                    for t, x in enumerate(tab[i][j]):
                        if x:
                            out[t] += a * b * x
        return tuple(out)

    def basis_vector(self, k: int, i: int) -> Vector:
        return unit_vec(self.dim(k), i)

    def check_axioms(self) -> list[str]:
        """Graded commutativity, associativity, d^2 = 0 and Leibniz on basis elements."""
        problems: list[str] = []
        top = self.max_degree
        basis = {k: [unit_vec(self._dims[k], i) for i in range(self._dims[k])] for k in range(top + 1)}
        if top >= 1 and not self._dmats[0].is_zero():
            problems.append("d of the unit is not zero")
        for k in range(top):
            if k + 2 <= top and not (self._dmats[k + 1] @ self._dmats[k]).is_zero():
                problems.append(f"d^2 != 0 on degree {k}")
        for k in range(1, top + 1):
            for l in range(1, top + 1 - k):
                for u in basis[k]:
                    for v in basis[l]:
                        uv = self.mul(k, u, l, v)
                        vu = self.mul(l, v, k, u)
                        if uv != tuple(((-1) ** (k * l)) * x for x in vu):
                            problems.append(f"graded commutativity fails in degrees ({k},{l})")
                            return problems
                        if k + l < top:
                            lhs = self.d_vec(k + l, uv)
                            rhs = tuple(
                                a + ((-1) ** k) * b
                                for a, b in zip(self.mul(k + 1, self.d_vec(k, u), l, v),
                                                self.mul(k, u, l + 1, self.d_vec(l, v)))
                            )
                            if lhs != rhs:
                                problems.append(f"Leibniz rule fails in degrees ({k},{l})")
                                return problems
        for k in range(1, top + 1):
            for l in range(1, top + 1 - k):
                for m in range(1, top + 1 - k - l):
                    for u in basis[k]:
                        for v in basis[l]:
                            for w in basis[m]:
                                a = self.mul(k + l, self.mul(k, u, l, v), m, w)
                                b = self.mul(k, u, l + m, self.mul(l, v, m, w))
                                if a != b:
                                    problems.append(f"associativity fails in degrees ({k},{l},{m})")
                                    return problems
        return problems


@dataclass(frozen=True)
class CohomologyGroup:
    """H^k with a canonical basis of cocycle representatives."""

    degree: int
    betti: int
    reps: tuple[Vector, ...]
    cocycles: Subspace
    coboundaries: Subspace

    def is_cocycle(self, v: Vector) -> bool:
        return self.cocycles.contains(v)

    def is_exact(self, v: Vector) -> bool:
        return self.coboundaries.contains(v)

    def coordinates(self, v: Vector) -> Vector:
        """Coordinates of the class of cocycle ``v`` in the representative basis."""
        if not self.is_cocycle(v):
            raise CdgaError(f"degree {self.degree} vector is not a cocycle")
        nf = self.coboundaries.reduce(v)
        pivots = [next(i for i, a in enumerate(r) if a) for r in self.reps]
        coords = tuple(nf[p] for p in pivots)
        assert is_zero(self.coboundaries.reduce(tuple(
            a - b for a, b in zip(v, lincomb(coords, self.reps, len(v)))
        )))
        return coords

    def representative(self, coords: Sequence) -> Vector:
        return lincomb([to_fraction(c) for c in coords], self.reps, self.cocycles.ambient_dim)


def cohomology(alg, k: int) -> CohomologyGroup:
    """H^k(alg) with representatives that are canonical normal forms modulo coboundaries.

    The representatives are the RREF basis of the image of the cocycle space
    under reduction modulo the coboundary space, so they do not depend on any
    choice made along the way.
    """
    if k + 1 > alg.max_degree and not isinstance(alg, FiniteCdga):
        raise TruncationError(f"H^{k} needs degree {k + 1} <= truncation {alg.max_degree}")
    z = alg.cocycles(k)
    b = alg.coboundaries(k)
    reduced = Subspace.span(alg.dim(k), (b.reduce(v) for v in z.basis))
    return CohomologyGroup(k, reduced.dim, reduced.basis, z, b)


def cohomology_basis(c, k: int) -> tuple[int, list]:
    """(betti, representatives); representatives are Elements for a free Cdga."""
    h = cohomology(c, k)
    if isinstance(c, Cdga):
        return h.betti, [c.from_vector(k, r) for r in h.reps]
    return h.betti, list(h.reps)


def betti_numbers(c, max_degree: int | None = None) -> tuple[int, ...]:
    if max_degree is None:
        max_degree = c.max_degree - 1 if isinstance(c, Cdga) else c.max_degree
    return tuple(cohomology(c, k).betti for k in range(max_degree + 1))


@dataclass
class CohomologyRing:
    """Cohomology algebra with cup-product tensors and an optional Poincare pairing.

    ``cup[(p, q)][i][j]`` holds the coordinates of rep_p[i] * rep_q[j] in H^(p+q).
    ``pairing[p]`` is the betti(p) x betti(n-p) matrix of the pairing into the
    fundamental class.
    """

    dims: tuple[int, ...]
    cup: dict[tuple[int, int], list[list[Vector]]]
    top_degree: int
    fundamental: int | None = None
    pairing: dict[int, Matrix] = field(default_factory=dict)
    labels: tuple[tuple[str, ...], ...] | None = None
    reps: tuple[tuple[Vector, ...], ...] | None = None

    def __post_init__(self) -> None:
        if self.dims[0] != 1:
            raise CdgaError("H^0 must be one-dimensional")
        if not self.pairing and self.fundamental is not None:
            self.pairing = self._compute_pairing()

    def _compute_pairing(self) -> dict[int, Matrix]:
        n = self.top_degree
        out = {}
        for p in range(n + 1):
            out[p] = Matrix(
                ((self.cup_product(p, unit_vec(self.dims[p], i), n - p, unit_vec(self.dims[n - p], j))[self.fundamental]
                  for j in range(self.dims[n - p])) for i in range(self.dims[p])),
                ncols=self.dims[n - p],
            )
        return out

    def dim(self, p: int) -> int:
        return self.dims[p] if 0 <= p < len(self.dims) else 0

    def cup_product(self, p: int, u: Sequence, q: int, v: Sequence) -> Vector:
        n = self.dim(p + q)
        if p == 0:
            return tuple(to_fraction(u[0]) * to_fraction(x) for x in v)
        if q == 0:
            return tuple(to_fraction(v[0]) * to_fraction(x) for x in u)
        if n == 0:
            return ()
        tab = self.cup.get((p, q))
        out = [Fraction(0)] * n
        if tab is None:
            return tuple(out)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        for t, x in enumerate(tab[i][j]):
                            if x:
                                out[t] += to_fraction(a) * to_fraction(b) * x
        return tuple(out)

    def pair(self, p: int, u: Sequence, v: Sequence) -> Fraction:
        """Poincare pairing of u in H^p with v in H^(n-p)."""
        if self.fundamental is None:
            raise CdgaError("no fundamental class: top cohomology is not one-dimensional")
        return self.cup_product(p, u, self.top_degree - p, v)[self.fundamental]

    def label(self, p: int, i: int) -> str:
        if self.labels is not None:
            return self.labels[p][i]
        return f"h{p}_{i}"

    def format_class(self, p: int, v: Sequence) -> str:
        parts = []
        for i, c in enumerate(v):
            if c:
                lab = self.label(p, i)
                parts.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{c}*{lab}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def check_axioms(self) -> list[str]:
        """Graded commutativity and associativity on the stored range."""
        problems = []
        n = len(self.dims) - 1
        for p in range(1, n + 1):
            for q in range(1, n + 1 - p):
                for i in range(self.dims[p]):
                    for j in range(self.dims[q]):
                        u, v = unit_vec(self.dims[p], i), unit_vec(self.dims[q], j)
                        if self.cup_product(p, u, q, v) != tuple((-1) ** (p * q) * x for x in self.cup_product(q, v, p, u)):
                            problems.append(f"cup not graded-commutative at ({p}:{i}, {q}:{j})")
                for r in range(1, n + 1 - p - q):
                    for i in range(self.dims[p]):
                        for j in range(self.dims[q]):
                            for k in range(self.dims[r]):
                                u = unit_vec(self.dims[p], i)
                                v = unit_vec(self.dims[q], j)
                                w = unit_vec(self.dims[r], k)
                                a = self.cup_product(p + q, self.cup_product(p, u, q, v), r, w)
                                b = self.cup_product(p, u, q + r, self.cup_product(q, v, r, w))
                                if a != b:
                                    problems.append(f"cup not associative at ({p}:{i}, {q}:{j}, {r}:{k})")
        return problems

    @classmethod
    def exterior(cls, n: int, names: Sequence[str] | None = None) -> CohomologyRing:
        """Cohomology of the n-torus: exterior algebra on n degree-1 classes."""
        names = list(names) if names is not None else [f"e{i + 1}" for i in range(n)]
        return cohomology_ring(Cdga.exterior(names))


def cohomology_ring(c, max_degree: int | None = None, pairing: bool | None = None) -> CohomologyRing:
    """Cohomology ring of ``c`` up to ``max_degree``.

    Cup products are computed by multiplying representatives and reading off
    cohomology coordinates.  When the highest nonzero degree is one-dimensional the
    Poincare pairing is filled; ``pairing=True`` makes that mandatory.
    """
    if max_degree is None:
        max_degree = c.max_degree - 1 if isinstance(c, Cdga) else c.max_degree
    groups = [cohomology(c, k) for k in range(max_degree + 1)]
    dims = tuple(g.betti for g in groups)
    cup: dict[tuple[int, int], list[list[Vector]]] = {}
    for p in range(1, max_degree + 1):
        for q in range(1, max_degree + 1 - p):
            if not dims[p] or not dims[q]:
                continue
            cup[(p, q)] = [
                [groups[p + q].coordinates(c.mul(p, u, q, v)) for v in groups[q].reps]
                for u in groups[p].reps
            ]
    top = max(k for k in range(max_degree + 1) if dims[k])
    fundamental = None
    if dims[top] == 1:
        fundamental = 0
    elif pairing:
        raise CdgaError(f"top cohomology H^{top} has dimension {dims[top]}, pairing needs 1")
    if isinstance(c, Cdga):
        labels = tuple(tuple(repr(c.from_vector(k, r)) for r in groups[k].reps) for k in range(max_degree + 1))
    else:
        labels = tuple(tuple(_format_vec(c.labels(k), r) for r in groups[k].reps) for k in range(max_degree + 1))
    return CohomologyRing(
        dims=dims,
        cup=cup,
        top_degree=top,
        fundamental=fundamental,
        labels=labels,
        reps=tuple(g.reps for g in groups),
    )


def _format_vec(labels: Sequence[str], v: Vector) -> str:
    parts = []
    for lab, c in zip(labels, v):
        if c:
            parts.append(lab if c == 1 else f"-{lab}" if c == -1 else f"{c}*{lab}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"
