"""Lie algebras given by structure equations on the dual basis.

Convention: the structure constants ``c`` of a :class:`LieAlgebraSpec` describe the
Chevalley-Eilenberg differential, ``d e^k = sum_{i<j} c^k_ij e^i ^ e^j``.  Brackets
follow from ``d theta(X, Y) = -theta([X, Y])``, so ``[e_i, e_j] = -sum_k c^k_ij e_k``.
For instance ``(0,0,12)`` has ``d e^3 = e^1 ^ e^2`` and ``[e_1, e_2] = -e_3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial
from typing import Mapping, Sequence

from .cdga import Cdga, Element, GeneratorTable, betti_numbers, wedge
from .exactlinalg import (
    Matrix,
    Subspace,
    Vector,
    char_poly,
    is_zero,
    kernel_basis,
    to_fraction,
    unit_vec,
    vec,
)


class LieAlgebraError(ValueError):
    pass


class JacobiError(LieAlgebraError):
    def __init__(self, triple: tuple[str, str, str], component: str):
        super().__init__(f"Jacobi identity fails for ({', '.join(triple)}) in component {component}")
        self.triple = triple
        self.component = component


@dataclass
class LieAlgebraSpec:
    """Structure equations ``d e^k = sum c[k][(i, j)] e^i ^ e^j`` with i < j (0-based)."""

    basis_names: tuple[str, ...]
    structure: tuple[dict[tuple[int, int], Fraction], ...]

    def __post_init__(self) -> None:
        self.basis_names = tuple(self.basis_names)
        n = len(self.basis_names)
        if len(set(self.basis_names)) != n:
            raise LieAlgebraError("basis names must be unique")
        if len(self.structure) != n:
            raise LieAlgebraError(f"{len(self.structure)} structure equations for dimension {n}")
        clean = []
        for k, eq in enumerate(self.structure):
            row: dict[tuple[int, int], Fraction] = {}
            for (i, j), c in eq.items():
                c = to_fraction(c)
                if i == j or not (0 <= i < n and 0 <= j < n):
                    raise LieAlgebraError(f"bad index pair ({i}, {j}) in d of {self.basis_names[k]}")
                if i > j:
                    i, j, c = j, i, -c
                row[(i, j)] = row.get((i, j), Fraction(0)) + c
            clean.append({p: c for p, c in sorted(row.items()) if c})
        self.structure = tuple(clean)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @classmethod
    def abelian(cls, n: int, names: Sequence[str] | None = None) -> LieAlgebraSpec:
        names = tuple(names) if names is not None else tuple(f"e{i + 1}" for i in range(n))
        return cls(names, tuple({} for _ in range(n)))

    @classmethod
    def from_differentials(cls, names: Sequence[str], diffs: Mapping[str, Mapping[tuple[str, str], object]]) -> LieAlgebraSpec:
        names = tuple(names)
        idx = {n: i for i, n in enumerate(names)}
        structure = []
        for n in names:
            structure.append({(idx[a], idx[b]): c for (a, b), c in diffs.get(n, {}).items()})
        return cls(names, tuple(structure))

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise LieAlgebraError(f"unknown basis element {name!r}") from None

    # cochains

    @property
    def table(self) -> GeneratorTable:
        return GeneratorTable.exterior(self.basis_names)

    def cochain(self, terms: Mapping[tuple[int, ...], object]) -> Element:
        """Cochain from {index tuple: coefficient}; index tuples need not be sorted."""
        table = self.table
        out = None
        for idxs, c in terms.items():
            e = Element.monomial(table, [self.basis_names[i] for i in idxs], c)
            out = e if out is None else out + e
        return out if out is not None else Element.zero(table, 0)

    def form(self, text: str) -> Element:
        """Parse a cochain such as ``'e1^e4 + e2^e3'`` or ``'-1/2*e3^e4'``."""
        from .dsl import parse_expression

        return parse_expression(text, self.table)

    def d_of_generator(self, k: int) -> Element:
        return self.cochain({(i, j): c for (i, j), c in self.structure[k].items()}) if self.structure[k] else \
            Element.zero(self.table, 2)

    # brackets

    def bracket_basis(self, i: int, j: int) -> Vector:
        n = self.dim
        out = [Fraction(0)] * n
        if i == j:
            return tuple(out)
        a, b, s = (i, j, 1) if i < j else (j, i, -1)
        for k in range(n):
            c = self.structure[k].get((a, b))
            if c:
                out[k] = -s * c
        return tuple(out)

    def bracket(self, u: Sequence, v: Sequence) -> Vector:
        u, v = vec(u), vec(v)
        n = self.dim
        out = [Fraction(0)] * n
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if b and i != j:
                    for k, x in enumerate(self.bracket_basis(i, j)):
                        if x:
                            out[k] += a * b * x
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ad_x; column j is [x, e_j]."""
        return Matrix.from_columns([self.bracket(x, unit_vec(self.dim, j)) for j in range(self.dim)], self.dim)

    def __repr__(self) -> str:
        eqs = ", ".join(f"d{n}={self.d_of_generator(k)}" for k, n in enumerate(self.basis_names))
        return f"LieAlgebraSpec({eqs})"


@dataclass(frozen=True)
class JacobiResult:
    ok: bool
    triple: tuple[str, str, str] | None = None
    component: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def jacobi_check(s: LieAlgebraSpec) -> JacobiResult:
    """d^2 = 0 on every generator of the CE complex, i.e. the Jacobi identity.

    On failure reports the first basis triple (i < j < l) whose d^2-coefficient is
    nonzero together with the generator in which it appears.
    """
    c = Cdga(s.table, {n: s.d_of_generator(k) for k, n in enumerate(s.basis_names)}, check=False)
    for k, name in enumerate(s.basis_names):
        dd = c.differential(c.d_generator(name))
        if not dd.is_zero():
            mono = min(dd.terms)
            triple = tuple(c.table.names[i] for i in mono)
            return JacobiResult(False, triple, name)
    return JacobiResult(True)


def ce_cdga(s: LieAlgebraSpec) -> Cdga:
    """Chevalley-Eilenberg complex: exterior algebra on the dual basis."""
    res = jacobi_check(s)
    if not res:
        raise JacobiError(res.triple, res.component)
    return Cdga(s.table, {n: s.d_of_generator(k) for k, n in enumerate(s.basis_names)})


def betti(s: LieAlgebraSpec) -> tuple[int, ...]:
    return betti_numbers(ce_cdga(s))


def d(s: LieAlgebraSpec, a: Element) -> Element:
    return ce_cdga(s).differential(a)


@dataclass(frozen=True)
class StructureFlags:
    nilpotent: bool
    solvable: bool
    unimodular: bool
    completely_solvable_on_basis: bool
    lower_central_dims: tuple[int, ...]
    derived_dims: tuple[int, ...]
    note: str = ""

    @property
    def completely_solvable(self) -> bool:
        # Lie: over C the eigenvalues of ad_X are lambda_i(X) for linear roots lambda_i,
        # so real eigenvalues on a basis force real roots everywhere
        return self.solvable and self.completely_solvable_on_basis


def _bracket_span(s: LieAlgebraSpec, a: Subspace, b: Subspace) -> Subspace:
    return Subspace.span(s.dim, (s.bracket(x, y) for x in a.basis for y in b.basis))


def _series(s: LieAlgebraSpec, derived: bool) -> list[int]:
    g = Subspace.full(s.dim)
    cur = g
    dims = [cur.dim]
    while True:
        nxt = _bracket_span(s, cur, cur) if derived else _bracket_span(s, g, cur)
        if nxt.dim == cur.dim:
            return dims
        dims.append(nxt.dim)
        cur = nxt
        if cur.dim == 0:
            return dims


def _all_roots_real(coeffs: Sequence[Fraction]) -> bool:
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs], x)
    return len(sympy.real_roots(poly)) == poly.degree()


def structure_flags(s: LieAlgebraSpec) -> StructureFlags:
    lcs = _series(s, derived=False)
    der = _series(s, derived=True)
    unimodular = True
    real = True
    for i in range(s.dim):
        adm = s.ad(unit_vec(s.dim, i))
        if sum((adm[k, k] for k in range(s.dim)), Fraction(0)) != 0:
            unimodular = False
        if real and not _all_roots_real(char_poly(adm)):
            real = False
    solvable = der[-1] == 0
    return StructureFlags(
        nilpotent=lcs[-1] == 0,
        solvable=solvable,
        unimodular=unimodular,
        completely_solvable_on_basis=solvable and real,
        lower_central_dims=tuple(lcs),
        derived_dims=tuple(der),
    )


# --- 2-cochains as bilinear forms -----------------------------------------------------------


def gram_matrix(s: LieAlgebraSpec, omega: Element) -> Matrix:
    """Gram matrix Omega[i][j] = omega(e_i, e_j) with e^i^e^j (e_i, e_j) = 1."""
    n = s.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for m, c in omega.terms.items():
        if len(m) != 2:
            raise LieAlgebraError("gram_matrix needs a 2-cochain")
        i, j = m
        rows[i][j] += c
        rows[j][i] -= c
    return Matrix(rows, ncols=n)


def two_form_from_gram(s: LieAlgebraSpec, gram: Matrix) -> Element:
    return s.cochain({(i, j): gram[i, j] for i in range(s.dim) for j in range(i + 1, s.dim) if gram[i, j]}) \
        if any(gram[i, j] for i in range(s.dim) for j in range(i + 1, s.dim)) else Element.zero(s.table, 2)


def evaluate_one_form(s: LieAlgebraSpec, eta: Element, v: Sequence) -> Fraction:
    v = vec(v)
    return sum((c * v[m[0]] for m, c in eta.terms.items()), Fraction(0))


def one_form_vector(s: LieAlgebraSpec, eta: Element) -> Vector:
    out = [Fraction(0)] * s.dim
    for m, c in eta.terms.items():
        if len(m) != 1:
            raise LieAlgebraError("expected a 1-cochain")
        out[m[0]] = c
    return tuple(out)


def top_coefficient(s: LieAlgebraSpec, a: Element) -> Fraction:
    return a.coefficient(tuple(range(s.dim)))


# --- symplectic derivations --------------------------------------------------------------


@dataclass
class SymplecticDerivationData:
    h: LieAlgebraSpec
    omega: Element
    D: Matrix


@dataclass(frozen=True)
class SymplecticDerivationCheck:
    is_derivation: bool
    is_infinitesimal_symplectic: bool
    omega_closed: bool
    omega_nondegenerate: bool
    failing_pair: tuple[str, str] | None = None

    @property
    def ok(self) -> bool:
        return self.is_derivation and self.is_infinitesimal_symplectic and self.omega_closed and self.omega_nondegenerate

    def __bool__(self) -> bool:
        return self.ok


def is_derivation(s: LieAlgebraSpec, D: Matrix) -> tuple[bool, tuple[str, str] | None]:
    """D[x, y] = [Dx, y] + [x, Dy] on all basis pairs."""
    n = s.dim
    cols = D.columns
    for i in range(n):
        for j in range(i + 1, n):
            lhs = D @ s.bracket_basis(i, j)
            rhs = tuple(a + b for a, b in zip(s.bracket(cols[i], unit_vec(n, j)), s.bracket(unit_vec(n, i), cols[j])))
            if lhs != rhs:
                return False, (s.basis_names[i], s.basis_names[j])
    return True, None


def is_infinitesimal_symplectic(gram: Matrix, D: Matrix) -> bool:
    return (D.T @ gram + gram @ D).is_zero()


def check_symplectic_derivation(data: SymplecticDerivationData) -> SymplecticDerivationCheck:
    h, D = data.h, data.D
    if D.shape != (h.dim, h.dim):
        raise LieAlgebraError(f"D has shape {D.shape}, expected {(h.dim, h.dim)}")
    gram = gram_matrix(h, data.omega)
    deriv, pair = is_derivation(h, D)
    return SymplecticDerivationCheck(
        is_derivation=deriv,
        is_infinitesimal_symplectic=is_infinitesimal_symplectic(gram, D),
        omega_closed=ce_cdga(h).differential(data.omega).is_zero(),
        omega_nondegenerate=h.dim % 2 == 0 and gram.det() != 0,
        failing_pair=pair,
    )


# --- polynomial machinery for existence questions ---------------------------------------


Poly = dict  # exponent tuple -> Fraction


def _top_power_polynomial(s: LieAlgebraSpec, one_forms: Sequence[Element], two_forms: Sequence[Element], n: int) -> Poly:
    """Top coefficient of (sum x_i z_i) ^ (sum y_j w_j)^n as a polynomial in x, y.

    With no one-forms the factor in x is omitted.  2-forms commute, so
    F^n = sum over multisets J of n!/prod(m_j!) prod w_j.
    """
    a, b = len(one_forms), len(two_forms)
    nv = a + b
    poly: Poly = {}
    top = tuple(range(s.dim))
    table = s.table
    heads = list(enumerate(one_forms)) if one_forms else [(None, Element.one(table))]
    cache: dict[tuple[int, ...], Element] = {(): Element.one(table)}

    def power_product(J: tuple[int, ...]) -> Element:
        if J not in cache:
            cache[J] = wedge(power_product(J[:-1]), two_forms[J[-1]])
        return cache[J]

    for J in combinations_with_replacement(range(b), n):
        mult = factorial(n)
        counts = [0] * b
        for j in J:
            counts[j] += 1
        for cnt in counts:
            mult //= factorial(cnt)
        prod = power_product(J)
        if prod.is_zero():
            continue
        for i, z in heads:
            coeff = wedge(z, prod).coefficient(top)
            if coeff:
                exp = [0] * nv
                if i is not None:
                    exp[i] += 1
                for j in J:
                    exp[a + j] += 1
                key = tuple(exp)
                poly[key] = poly.get(key, Fraction(0)) + mult * coeff
    return {k: v for k, v in poly.items() if v}


def _poly_eval(poly: Poly, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for exp, c in poly.items():
        term = c
        for x, e in zip(point, exp):
            if e:
                term *= x ** e
        total += term
    return total


def _poly_substitute(poly: Poly, var: int, value: Fraction) -> Poly:
    out: Poly = {}
    for exp, c in poly.items():
        e = list(exp)
        k = e[var]
        e[var] = 0
        key = tuple(e)
        out[key] = out.get(key, Fraction(0)) + c * value ** k
    return {k: v for k, v in out.items() if v}


def _nonvanishing_point(poly: Poly, nvars: int) -> tuple[Fraction, ...]:
    """Small integer point where a nonzero polynomial does not vanish.

    First tries the support of the lexicographically largest monomial (variables
    in it set to 1, others 0).  Otherwise substitutes variables one at a time from
    0, 1, -1, 2, -2, ...; among deg+1 candidates one keeps the polynomial nonzero.
    """
    if not poly:
        raise ValueError("zero polynomial has no nonvanishing point")
    lead = max(poly)
    point = tuple(Fraction(1) if e else Fraction(0) for e in lead)
    if _poly_eval(poly, point):
        return point
    degree = max(sum(e) for e in poly)
    candidates = [Fraction(0)]
    for k in range(1, degree + 2):
        candidates += [Fraction(k), Fraction(-k)]
    values = []
    cur = poly
    for v in range(nvars):
        for cand in candidates:
            nxt = _poly_substitute(cur, v, cand)
            if nxt:
                cur = nxt
                values.append(cand)
                break
        else:  # pragma: no cover - excluded by the degree bound
            raise AssertionError("no nonvanishing substitution found")
    assert _poly_eval(poly, values)
    return tuple(values)


def closed_forms(s: LieAlgebraSpec, k: int) -> list[Element]:
    """Basis (RREF in monomial coordinates) of closed k-cochains."""
    c = ce_cdga(s)
    return [c.from_vector(k, v) for v in c.cocycles(k).basis]


# --- co-symplectic structures -------------------------------------------------------------


@dataclass
class CosymplecticData:
    eta: Element
    F: Element


@dataclass(frozen=True)
class CosymplecticCheck:
    eta_closed: bool
    F_closed: bool
    volume_coefficient: Fraction

    @property
    def ok(self) -> bool:
        return self.eta_closed and self.F_closed and self.volume_coefficient != 0

    def __bool__(self) -> bool:
        return self.ok

    def diagnostics(self) -> list[str]:
        out = []
        if not self.eta_closed:
            out.append("d(eta) != 0")
        if not self.F_closed:
            out.append("d(F) != 0")
        if self.volume_coefficient == 0:
            out.append("eta ^ F^n vanishes on the top monomial")
        return out


def cosymplectic_check(s: LieAlgebraSpec, eta: Element, F: Element) -> CosymplecticCheck:
    """d(eta) = 0, d(F) = 0 and eta ^ F^n is a nonzero multiple of the top monomial."""
    if s.dim % 2 == 0:
        raise LieAlgebraError(f"co-symplectic structures need odd dimension, got {s.dim}")
    if eta.degree != 1 or (F.degree != 2 and not F.is_zero()):
        raise LieAlgebraError("eta must be a 1-cochain and F a 2-cochain")
    c = ce_cdga(s)
    n = (s.dim - 1) // 2
    vol = eta
    for _ in range(n):
        vol = wedge(vol, F)
    return CosymplecticCheck(
        eta_closed=c.differential(eta).is_zero(),
        F_closed=F.is_zero() or c.differential(F).is_zero(),
        volume_coefficient=top_coefficient(s, vol),
    )


@dataclass
class CosymplecticVerdict:
    exists: bool
    witness: CosymplecticData | None
    closed_one_forms: list[Element]
    closed_two_forms: list[Element]
    polynomial: Poly
    terms_expanded: int

    @property
    def verdict(self) -> str:
        return "EXISTS" if self.exists else "NOT_EXISTS"

    def certificate(self) -> str:
        if self.exists:
            return "witness verified by cosymplectic_check"
        return (f"eta ^ F^n expanded over {len(self.closed_one_forms)} closed 1-forms x "
                f"{len(self.closed_two_forms)} closed 2-forms ({self.terms_expanded} products): "
                "the top coefficient is the zero polynomial")


def cosymplectic_exists(s: LieAlgebraSpec) -> CosymplecticVerdict:
    """Decide whether closed eta, F with eta ^ F^n != 0 exist.

    The top coefficient of eta ^ F^n is expanded symbolically over coordinates
    of Z^1 x Z^2.  A zero polynomial proves nonexistence; otherwise a small
    integer point where it does not vanish gives the witness.
    """
    if s.dim % 2 == 0:
        raise LieAlgebraError(f"co-symplectic structures need odd dimension, got {s.dim}")
    n = (s.dim - 1) // 2
    z1 = closed_forms(s, 1)
    z2 = closed_forms(s, 2)
    poly = _top_power_polynomial(s, z1, z2, n) if z1 else {}
    terms = len(z1) * len(list(combinations_with_replacement(range(len(z2)), n)))
    if not poly:
        return CosymplecticVerdict(False, None, z1, z2, poly, terms)
    point = _nonvanishing_point(poly, len(z1) + len(z2))
    table = s.table
    eta = _combine(table, point[: len(z1)], z1, 1)
    F = _combine(table, point[len(z1):], z2, 2)
    check = cosymplectic_check(s, eta, F)
    assert check.ok, "witness failed verification"
    return CosymplecticVerdict(True, CosymplecticData(eta, F), z1, z2, poly, terms)


def _combine(table: GeneratorTable, coeffs: Sequence[Fraction], forms: Sequence[Element], degree: int) -> Element:
    out = Element.zero(table, degree)
    for c, f in zip(coeffs, forms):
        if c:
            out = out + f * c
    return out


# --- symplectic forms on even-dimensional algebras ---------------------------------------


def is_symplectic_form(h: LieAlgebraSpec, omega: Element) -> bool:
    return ce_cdga(h).differential(omega).is_zero() and gram_matrix(h, omega).det() != 0


def find_symplectic_form(h: LieAlgebraSpec) -> Element | None:
    if h.dim % 2:
        raise LieAlgebraError("symplectic forms need even dimension")
    z2 = closed_forms(h, 2)
    poly = _top_power_polynomial(h, [], z2, h.dim // 2)
    if not poly:
        return None
    point = _nonvanishing_point(poly, len(z2))
    return _combine(h.table, point, z2, 2)


def symplectic_spanning_family(h: LieAlgebraSpec) -> list[Element]:
    """Symplectic forms spanning the space of closed 2-forms (empty if none exist).

    Built as omega_0 and omega_0 + t_j w_j for a basis w_j of Z^2, with the
    smallest integer t_j keeping the form nondegenerate.
    """
    omega0 = find_symplectic_form(h)
    if omega0 is None:
        return []
    family = [omega0]
    for w in closed_forms(h, 2):
        for t in range(1, h.dim + 3):
            for sign in (1, -1):
                cand = omega0 + w * (sign * t)
                if gram_matrix(h, cand).det() != 0:
                    family.append(cand)
                    break
            else:
                continue
            break
    return family


@dataclass
class DerivationObstruction:
    """Closed 2-forms for which D is an infinitesimal symplectic transformation."""

    invariant_closed_forms: list[Element]
    pfaffian_polynomial: Poly

    @property
    def admits_symplectic_form(self) -> bool:
        return bool(self.pfaffian_polynomial)


def symplectic_derivation_obstruction(h: LieAlgebraSpec, D: Matrix) -> DerivationObstruction:
    """Decide whether D is symplectic for some symplectic form on h.

    The condition D^t Omega + Omega D = 0 is linear in omega; on the resulting
    space of closed forms the top coefficient of omega^n is expanded
    symbolically.  A zero polynomial means no such symplectic form exists.
    """
    z2 = closed_forms(h, 2)
    # linear map from Z^2 coordinates to the entries of D^t Omega + Omega D
    cols = []
    for w in z2:
        g = gram_matrix(h, w)
        m = D.T @ g + g @ D
        cols.append(tuple(x for r in m.rows for x in r))
    if z2:
        ker = kernel_basis(Matrix.from_columns(cols, h.dim * h.dim))
        inv = [_combine(h.table, k, z2, 2) for k in ker.basis]
    else:
        inv = []
    poly = _top_power_polynomial(h, [], inv, h.dim // 2) if inv else {}
    return DerivationObstruction(inv, poly)


# --- the correspondence between co-symplectic and symplectic-with-derivation ------------


def extend_by_derivation(data: SymplecticDerivationData, xi_name: str | None = None) -> tuple[LieAlgebraSpec, CosymplecticData]:
    """g = R xi + h with [xi, u] = D(u); eta = xi^*, F = omega extended by zero.

    ``xi`` becomes the last basis vector.
    """
    check = check_symplectic_derivation(data)
    if not check.ok:
        raise LieAlgebraError(f"not a symplectic derivation: {check}")
    h, D = data.h, data.D
    n = h.dim
    if xi_name is None:
        xi_name = f"e{n + 1}" if all(nm == f"e{i + 1}" for i, nm in enumerate(h.basis_names)) else "xi"
    names = h.basis_names + (xi_name,)
    structure = [dict(eq) for eq in h.structure] + [{}]
    # [e_j, xi] = -D e_j = -sum_i c^i_{j,xi} e_i  =>  c^i_{j,xi} = D[i, j]
    for i in range(n):
        for j in range(n):
            if D[i, j]:
                structure[i][(j, n)] = structure[i].get((j, n), Fraction(0)) + D[i, j]
    g = LieAlgebraSpec(names, tuple(structure))
    eta = Element.generator(g.table, xi_name)
    F = g.cochain({m: c for m, c in data.omega.terms.items()}) if not data.omega.is_zero() else Element.zero(g.table, 2)
    assert cosymplectic_check(g, eta, F).ok
    return g, CosymplecticData(eta, F)


@dataclass
class IdealSplitting:
    h: LieAlgebraSpec
    D: Matrix
    xi: Vector
    h_basis: tuple[Vector, ...]


def ideal_split(g: LieAlgebraSpec, eta: Element) -> IdealSplitting:
    """Split g = R xi + ker(eta) along a closed 1-form.

    ``xi`` is the standard basis vector at the coordinate missing from the pivots
    of ker(eta), scaled so that eta(xi) = 1.  D is ad_xi restricted to ker(eta).
    """
    if not ce_cdga(g).differential(eta).is_zero():
        raise LieAlgebraError("eta is not closed; ker(eta) need not be a subalgebra")
    ev = one_form_vector(g, eta)
    if is_zero(ev):
        raise LieAlgebraError("eta is zero")
    n = g.dim
    ker = kernel_basis(Matrix([ev], ncols=n))
    (q,) = [i for i in range(n) if i not in ker.pivots]
    xi = tuple(Fraction(1) / ev[q] if i == q else Fraction(0) for i in range(n))
    basis = ker.basis
    for u in basis:
        for w in (xi,) + basis:
            if not ker.contains(g.bracket(w, u)):
                raise AssertionError("ker(eta) is not an ideal")
    names = []
    for a, u in enumerate(basis):
        nz = [i for i, x in enumerate(u) if x]
        names.append(g.basis_names[nz[0]] if len(nz) == 1 and u[nz[0]] == 1 else f"u{a + 1}")
    m = len(basis)
    structure = []
    for c in range(m):
        structure.append({})
    for a in range(m):
        for b in range(a + 1, m):
            coords = ker.coordinates(g.bracket(basis[a], basis[b]))
            for c, x in enumerate(coords):
                if x:
                    structure[c][(a, b)] = -x
    h = LieAlgebraSpec(tuple(names), tuple(structure))
    D = Matrix.from_columns([ker.coordinates(g.bracket(xi, u)) for u in basis], m)
    return IdealSplitting(h, D, xi, basis)


def split_cosymplectic(g: LieAlgebraSpec, data: CosymplecticData) -> SymplecticDerivationData:
    """Inverse of :func:`extend_by_derivation` up to the choice of xi."""
    check = cosymplectic_check(g, data.eta, data.F)
    if not check.ok:
        raise LieAlgebraError("not co-symplectic: " + "; ".join(check.diagnostics()))
    sp = ideal_split(g, data.eta)
    gram_g = gram_matrix(g, data.F)
    B = Matrix.from_columns(list(sp.h_basis), g.dim)
    gram_h = B.T @ gram_g @ B
    omega = two_form_from_gram(sp.h, gram_h)
    out = SymplecticDerivationData(sp.h, omega, sp.D)
    assert check_symplectic_derivation(out).ok
    return out
