"""Cohomology and formality of mapping tori from the action on fiber cohomology.

A :class:`MappingTorusSpec` holds the cohomology ring of the fiber N (with its
Poincare pairing) and the matrices of phi^* in every degree.  From these data
the Mayer-Vietoris splitting H^p(M) = C^(p-1) + K^p, the Jordan filtration at
eigenvalue 1, Massey-product witnesses and partial minimal models are computed
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cdga import Cdga, CohomologyRing, Element, FiniteCdga, GeneratorTable, betti_numbers
from .exactlinalg import (
    Matrix,
    Subspace,
    Vector,
    eigen1_filtration,
    exterior_power,
    image_basis,
    is_zero,
    jordan_blocks_from_dims,
    kernel_basis,
    matrix_log_unipotent,
    solve,
    unit_vec,
    zero_vec,
)


class InvalidSpecError(ValueError):
    def __init__(self, diagnostics: Sequence[str]):
        super().__init__("invalid mapping torus spec: " + "; ".join(diagnostics))
        self.diagnostics = list(diagnostics)


class HypothesisError(ValueError):
    def __init__(self, diagnostics: Sequence[str]):
        super().__init__("; ".join(diagnostics))
        self.diagnostics = list(diagnostics)


@dataclass
class MappingTorusSpec:
    """Fiber cohomology ring plus phi^* in degrees 0..n (columns are images)."""

    fiber: CohomologyRing
    phi: list[Matrix]
    name: str = ""
    symplectic_class: Vector | None = None
    derived_exterior_powers: bool = False

    @property
    def n(self) -> int:
        return self.fiber.top_degree

    @classmethod
    def torus(cls, phi1: Matrix, name: str = "", names: Sequence[str] | None = None, **kw) -> MappingTorusSpec:
        """Mapping torus of a linear map of T^n; higher degrees by exterior powers."""
        n = phi1.nrows
        fiber = CohomologyRing.exterior(n, names)
        phi = [exterior_power(phi1, k) for k in range(n + 1)]
        return cls(fiber, phi, name=name, derived_exterior_powers=True, **kw)


def surface_ring(genus: int) -> CohomologyRing:
    """H^*(Sigma_g) in a symplectic basis xi_1..xi_2g with <xi_(2i-1), xi_(2i)> = 1."""
    m = 2 * genus
    cup12 = [[(Fraction(0),) for _ in range(m)] for _ in range(m)]
    for i in range(genus):
        cup12[2 * i][2 * i + 1] = (Fraction(1),)
        cup12[2 * i + 1][2 * i] = (Fraction(-1),)
    labels = (("1",), tuple(f"xi{i + 1}" for i in range(m)), ("omega",))
    return CohomologyRing(dims=(1, m, 1), cup={(1, 1): cup12}, top_degree=2, fundamental=0, labels=labels)


@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    diagnostics: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def validate_spec(s: MappingTorusSpec) -> ValidationResult:
    """Check every structural requirement on the fiber ring and phi^*."""
    diags: list[str] = []
    ring = s.fiber
    n = s.n
    if ring.fundamental is None:
        diags.append(f"fiber: top cohomology H^{n} is not one-dimensional; no Poincare pairing")
    if len(s.phi) != n + 1:
        diags.append(f"phi: {len(s.phi)} matrices given for degrees 0..{n}")
        return ValidationResult(False, tuple(diags))
    for k, m in enumerate(s.phi):
        if m.shape != (ring.dim(k), ring.dim(k)):
            diags.append(f"phi[{k}]: shape {m.shape}, expected {(ring.dim(k), ring.dim(k))}")
    if diags:
        return ValidationResult(False, tuple(diags))
    if s.phi[0] != Matrix([[1]]):
        diags.append("phi[0] is not the identity on H^0")
    if s.phi[n] != Matrix.identity(ring.dim(n)):
        diags.append(f"phi[{n}] is not the identity on the top degree (orientation)")
    for k, m in enumerate(s.phi):
        if m.det() == 0:
            diags.append(f"phi[{k}] is singular")
    ring_problems = ring.check_axioms()
    diags.extend(f"fiber: {p}" for p in ring_problems[:3])
    for p in range(1, n + 1):
        for q in range(1, n + 1 - p):
            for i in range(ring.dim(p)):
                u = unit_vec(ring.dim(p), i)
                pu = s.phi[p] @ u
                for j in range(ring.dim(q)):
                    v = unit_vec(ring.dim(q), j)
                    lhs = s.phi[p + q] @ ring.cup_product(p, u, q, v) if ring.dim(p + q) else ()
                    rhs = ring.cup_product(p, pu, q, s.phi[q] @ v)
                    if lhs != rhs:
                        diags.append(f"ring homomorphism fails at ({p}:{i}, {q}:{j})")
    if ring.fundamental is not None:
        for p in range(n + 1):
            pm = ring.pairing[p]
            lhs = s.phi[p].T @ pm @ s.phi[n - p]
            if lhs != pm:
                bad = next((i, j) for i in range(pm.nrows) for j in range(pm.ncols) if lhs[i, j] != pm[i, j])
                diags.append(f"pairing not preserved at ({p}:{bad[0]}, {n - p}:{bad[1]})")
    if s.symplectic_class is not None:
        if s.phi[2] @ s.symplectic_class != tuple(s.symplectic_class):
            diags.append("declared symplectic class is not fixed by phi[2]")
    return ValidationResult(not diags, tuple(diags))


def _require_valid(s: MappingTorusSpec) -> None:
    res = validate_spec(s)
    if not res:
        raise InvalidSpecError(res.diagnostics)


def _F(s: MappingTorusSpec, p: int) -> Matrix:
    """phi^*_p - id."""
    return s.phi[p] - Matrix.identity(s.phi[p].nrows)


@dataclass
class TorusCohomology:
    """H^p(M) = C^(p-1) + K^p for p = 0..n+1."""

    K: list[Subspace]
    C_basis: list[list[Vector]]  # C_basis[p] spans a complement of im(phi_p - id) in H^p(N)
    betti: tuple[int, ...]

    def classes(self, ring: CohomologyRing, p: int) -> list[str]:
        out = [ring.format_class(p, v) for v in self.K[p].basis] if p < len(self.K) else []
        if p >= 1:
            out += [f"a*({ring.format_class(p - 1, v)})" if p > 1 else "a" for v in self.C_basis[p - 1]]
        return out


def mv_cohomology(s: MappingTorusSpec) -> TorusCohomology:
    _require_valid(s)
    n = s.n
    K = [kernel_basis(_F(s, p)) for p in range(n + 1)] + [Subspace.zero(0)]
    C = []
    for p in range(n + 1):
        full = Subspace.full(s.fiber.dim(p))
        C.append(full.complement_basis(image_basis(_F(s, p))))
    betti = tuple(K[p].dim + (len(C[p - 1]) if p >= 1 else 0) for p in range(n + 2))
    return TorusCohomology(K, C, betti)


@dataclass(frozen=True)
class Eigen1Data:
    degree: int
    dims: tuple[int, ...]
    r: int
    jordan_blocks: tuple[int, ...]

    @property
    def has_eigenvalue_one(self) -> bool:
        return self.r > 0


def eigen1_data(s: MappingTorusSpec, p: int) -> Eigen1Data:
    _require_valid(s)
    dims, r = eigen1_filtration(s.phi[p])
    blocks = tuple(sorted(jordan_blocks_from_dims(dims))) if r else ()
    return Eigen1Data(p, tuple(dims), r, blocks)


@dataclass(frozen=True)
class MasseyWitness:
    """Cohomological data certifying <a, a, alpha~> != 0 on the mapping torus.

    beta in ker(F^2) minus ker(F), alpha = F(beta) (F = phi^* - id), and xi in
    ker(F) and in im(F) in the complementary degree, with <beta, xi> = kappa != 0
    and <alpha, xi> = 0.
    """

    p: int
    alpha: Vector
    beta: Vector
    xi: Vector
    kappa: Fraction
    obligations: tuple[tuple[str, bool], ...] = ()

    @property
    def verified(self) -> bool:
        return all(ok for _, ok in self.obligations)


class NoWitnessError(ValueError):
    pass


def _check_witness(s: MappingTorusSpec, p: int, alpha, beta, xi) -> tuple[tuple[str, bool], ...]:
    n = s.n
    ring = s.fiber
    Fp = _F(s, p)
    Fq = _F(s, n - p)
    kappa = ring.pair(p, beta, xi)
    return (
        ("alpha = phi*(beta) - beta", Fp @ beta == tuple(alpha)),
        ("alpha in ker(phi* - id)", is_zero(Fp @ alpha)),
        ("beta not in ker(phi* - id)", not is_zero(Fp @ beta)),
        ("xi in im(phi* - id) in degree n-p", image_basis(Fq).contains(xi)),
        ("xi in ker(phi* - id) in degree n-p", is_zero(Fq @ xi)),
        ("<beta, xi> != 0", kappa != 0),
        ("<alpha, xi> = 0", ring.pair(p, alpha, xi) == 0),
    )


def massey_witness(s: MappingTorusSpec, p: int) -> MasseyWitness:
    """Search for the data behind a nonvanishing <[eta], [eta], [alpha~]> in degree p+1.

    beta runs over coset representatives of ker F^2 / ker F (echelon order) and
    xi over the echelon basis of ker F ^ im F in degree n - p; the first pair
    with <beta, xi> != 0 is returned.  Since <ker F, im F> = 0 for a
    pairing-preserving phi^*, checking basis pairs is exhaustive.
    """
    _require_valid(s)
    n = s.n
    if not 0 < p < n:
        raise NoWitnessError(f"degree {p} outside 1..{n - 1}")
    data = eigen1_data(s, p)
    if data.r < 2:
        raise NoWitnessError(f"largest Jordan block at eigenvalue 1 has size {data.r} < 2 in degree {p}")
    Fp = _F(s, p)
    K1 = kernel_basis(Fp)
    K2 = kernel_basis(Fp @ Fp)
    q = n - p
    Fq = _F(s, q)
    targets = kernel_basis(Fq).intersection(image_basis(Fq))
    for beta in K2.complement_basis(K1):
        alpha = Fp @ beta
        lead = next(x for x in alpha if x)
        if lead < 0:
            beta = tuple(-x for x in beta)
            alpha = tuple(-x for x in alpha)
        for xi in targets.basis:
            kappa = s.fiber.pair(p, beta, xi)
            if kappa:
                obligations = _check_witness(s, p, alpha, beta, xi)
                w = MasseyWitness(p, tuple(alpha), tuple(beta), tuple(xi), kappa, obligations)
                assert w.verified, obligations
                return w
    raise NoWitnessError(
        f"no xi in ker(F) and im(F) in degree {q} pairs nontrivially with ker F^2 / ker F in degree {p}"
    )


@dataclass
class PartialMinimalModel:
    """Generators a (degree 1) and W^p = G_1 + ... + G_r with d w = a * F(w)."""

    p: int
    layers: list[list[str]]
    layer_reps: list[list[Vector]]
    differential: dict[str, dict[str, Fraction]]
    cdga: Cdga
    fragment_betti: tuple[int, ...]
    expected_betti: tuple[int, ...]
    injection_dim: int
    coker_dim: int

    @property
    def layer_dims(self) -> tuple[int, ...]:
        return tuple(len(l) for l in self.layers)

    def verify(self) -> bool:
        return self.fragment_betti[: self.p + 1] == self.expected_betti[: self.p + 1] and self.injection_dim == self.coker_dim


def _model_hypotheses(s: MappingTorusSpec, p: int) -> list[str]:
    problems = []
    if p < 2:
        problems.append(f"p = {p}: the partial minimal model needs p >= 2")
    for k in range(1, p):
        if eigen1_filtration(s.phi[k])[1] > 0:
            problems.append(f"degree {k}: phi* has eigenvalue 1 (phi*_{k} - id not invertible)")
    if p <= s.n and eigen1_filtration(s.phi[p])[1] == 0:
        problems.append(f"degree {p}: phi* has no eigenvalue 1")
    return problems


def partial_minimal_model(s: MappingTorusSpec, p: int) -> PartialMinimalModel:
    """Minimal model of the mapping torus through degree p.

    Requires p >= 2, phi*_k - id invertible for 1 <= k < p and eigenvalue 1 in
    degree p.  Layers are G_j = K_j / K_(j-1), K_j = ker (phi*_p - id)^j, with
    coset representatives chosen in echelon order; the induced map F sends G_j to
    G_(j-1).  The fragment's cohomology is recomputed and compared with the
    Mayer-Vietoris answer.
    """
    _require_valid(s)
    problems = _model_hypotheses(s, p)
    if problems:
        raise HypothesisError(problems)
    Fp = _F(s, p)
    dims, r = eigen1_filtration(s.phi[p])
    m = s.phi[p].nrows
    K = [Subspace.zero(m)]
    power = Matrix.identity(m)
    for _ in range(r):
        power = power @ Fp
        K.append(kernel_basis(power))
    layers: list[list[str]] = []
    reps: list[list[Vector]] = []
    for j in range(1, r + 1):
        g = K[j].complement_basis(K[j - 1])
        reps.append(g)
        layers.append([f"w{j}_{i + 1}" for i in range(len(g))])
    diff: dict[str, dict[str, Fraction]] = {}
    for j in range(2, r + 1):
        prev = reps[j - 2]
        lower = list(K[j - 2].basis)
        A = Matrix.from_columns(prev + lower, m)
        for name, w in zip(layers[j - 1], reps[j - 1]):
            sol = solve(A, Fp @ w)
            assert sol is not None
            diff[name] = {layers[j - 2][i]: c for i, c in enumerate(sol[: len(prev)]) if c}
    pairs = [("a", 1)] + [(nm, p) for layer in layers for nm in layer]
    table = GeneratorTable.from_pairs(pairs)
    a = Element.generator(table, "a")
    dmap = {}
    for name, target in diff.items():
        t = Element.zero(table, p)
        for g, c in target.items():
            t = t + Element.generator(table, g) * c
        dmap[name] = a * t
    cdga = Cdga(table, dmap, truncation_degree=p + 2)
    fragment = betti_numbers(cdga, p + 1)
    mv = mv_cohomology(s)
    return PartialMinimalModel(
        p=p,
        layers=layers,
        layer_reps=reps,
        differential=diff,
        cdga=cdga,
        fragment_betti=fragment,
        expected_betti=mv.betti,
        injection_dim=fragment[p + 1],
        coker_dim=len(mv.C_basis[p]),
    )


NON_FORMAL = "NON_FORMAL"
P_FORMAL = "P_FORMAL"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class FormalityReport:
    verdict: str
    p: int | None
    checklist: list[Eigen1Data]
    witness: MasseyWitness | None = None
    model: PartialMinimalModel | None = None
    certificate: str = ""
    notes: list[str] = field(default_factory=list)

    @property
    def label(self) -> str:
        return f"P_FORMAL({self.p})" if self.verdict == P_FORMAL else self.verdict


def formality_verdict(s: MappingTorusSpec) -> FormalityReport:
    """Conservative formality verdict.

    NON_FORMAL needs either a machine-checked Massey witness, the Jordan
    certificate r >= 2 at the first degree with eigenvalue 1 (p >= 2, under the
    partial minimal model hypotheses), or r >= 2 in degree 1.  P_FORMAL(p) is
    reported when those hypotheses hold with r = 1.  Anything else is INCONCLUSIVE.
    """
    res = validate_spec(s)
    if not res:
        raise InvalidSpecError(res.diagnostics)
    n = s.n
    checklist = [eigen1_data(s, p) for p in range(1, n + 1)]
    if s.symplectic_class is not None and n >= 2:
        # phi^* fixes the symplectic class, so 1 is an eigenvalue in degree 2
        assert checklist[1].has_eigenvalue_one
    notes: list[str] = []
    witness = None
    for data in checklist:
        if data.r >= 2 and data.degree < n:
            try:
                witness = massey_witness(s, data.degree)
                break
            except NoWitnessError as exc:
                if data.r == 2:
                    raise AssertionError(f"multiplicity two without a pairing witness: {exc}")
                notes.append(f"degree {data.degree}: {exc}")
    first = next((d for d in checklist if d.has_eigenvalue_one), None)
    model = None
    if first is not None and first.degree >= 2:
        model = partial_minimal_model(s, first.degree)
        assert model.verify(), "partial minimal model cohomology mismatch"
    if witness is not None:
        return FormalityReport(
            NON_FORMAL, witness.p, checklist, witness, model,
            certificate=f"nonvanishing triple Massey product <a, a, alpha~> with alpha in degree {witness.p}",
            notes=notes,
        )
    if first is not None and first.r >= 2:
        cert = (f"eigenvalue 1 of phi*_{first.degree} has multiplicity r = {first.r} >= 2"
                + (" with phi*_k - id invertible below" if first.degree >= 2 else " in degree 1"))
        return FormalityReport(NON_FORMAL, first.degree, checklist, None, model, certificate=cert, notes=notes)
    if first is not None and first.degree >= 2 and first.r == 1:
        return FormalityReport(
            P_FORMAL, first.degree, checklist, None, model,
            certificate=f"eigenvalue 1 of phi*_{first.degree} has multiplicity 1 and none below",
            notes=notes,
        )
    notes.append("no certificate applies; formality is not decided")
    return FormalityReport(INCONCLUSIVE, first.degree if first else None, checklist, None, model, notes=notes)


def mapping_torus_model(s: MappingTorusSpec) -> FiniteCdga:
    """The CDGA H^*(N) (x) Lambda(a) with d x = a * log(phi^*) x.

    Needs phi^* unipotent in every degree; log(phi^*) is then a derivation of
    H^*(N) and the algebra models N_phi when N is formal (tori, surfaces).
    Degree-k coordinates are (H^k(N) coordinates, then a * H^(k-1)(N) coordinates).
    """
    _require_valid(s)
    ring = s.fiber
    n = s.n
    logs = [matrix_log_unipotent(m) for m in s.phi]
    dims = [ring.dim(k) + ring.dim(k - 1) for k in range(n + 2)]
    labels = []
    for k in range(n + 2):
        labs = [ring.label(k, i) for i in range(ring.dim(k))]
        labs += [f"a*{ring.label(k - 1, i)}" if k > 1 else "a" for i in range(ring.dim(k - 1))]
        labels.append(labs)

    def split(k: int, v: Vector) -> tuple[Vector, Vector]:
        return v[: ring.dim(k)], v[ring.dim(k):]

    products = {}
    for k in range(1, n + 2):
        for l in range(1, n + 2 - k):
            tab = []
            for i in range(dims[k]):
                row = []
                for j in range(dims[l]):
                    x, xa = split(k, unit_vec(dims[k], i))
                    y, ya = split(l, unit_vec(dims[l], j))
                    fib = ring.cup_product(k, x, l, y) if ring.dim(k + l) else ()
                    sign = -1 if k % 2 else 1
                    # (x + a x')(y + a y') = xy + a((-1)^|x| x y' + x' y)
                    ap = ring.cup_product(k, x, l - 1, ya) if ring.dim(k + l - 1) else ()
                    bp = ring.cup_product(k - 1, xa, l, y) if ring.dim(k + l - 1) else ()
                    apart = tuple(sign * u + w for u, w in zip(ap, bp)) if ring.dim(k + l - 1) else ()
                    fib = fib if fib else zero_vec(ring.dim(k + l))
                    row.append(tuple(fib) + tuple(apart))
                tab.append(row)
            products[(k, l)] = tab
    dmats = {}
    for k in range(n + 1):
        cols = []
        for i in range(dims[k]):
            x, _ = split(k, unit_vec(dims[k], i))
            cols.append(zero_vec(ring.dim(k + 1)) + tuple(logs[k] @ x))
        dmats[k] = Matrix.from_columns(cols, dims[k + 1])
    return FiniteCdga(labels, products, dmats)


def fiber_class_in_model(s: MappingTorusSpec, p: int, v: Vector) -> tuple[int, Vector]:
    """Degree-p cocycle of :func:`mapping_torus_model` restricting to v in H^p(N)."""
    return p, tuple(v) + zero_vec(s.fiber.dim(p - 1))


def model_generator_a(s: MappingTorusSpec) -> tuple[int, Vector]:
    return 1, zero_vec(s.fiber.dim(1)) + (Fraction(1),)
