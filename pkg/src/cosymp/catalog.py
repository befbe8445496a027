"""Built-in worked examples with expected results.

Each :class:`CatalogEntry` carries a payload (Lie algebra, free CDGA or
mapping-torus spec) and a list of :class:`Expectation` records.  An
expectation names a check from :data:`CHECKS`, its arguments, the expected
value, and where the value comes from:

* ``literature`` - stated for this example in the source literature,
* ``derived`` - computed independently (by hand or with a separate oracle),
* ``trivial`` - immediate from the definitions.
"""

from __future__ import annotations

import fnmatch
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable

from .cdga import betti_numbers, cohomology, cohomology_ring
from .dsl import format_document, parse_cdga_dsl, parse_expression, parse_lie_dsl
from .exactlinalg import Matrix, char_poly
from .liealg import (
    LieAlgebraSpec,
    SymplecticDerivationData,
    betti,
    ce_cdga,
    closed_forms,
    cosymplectic_check,
    cosymplectic_exists,
    extend_by_derivation,
    ideal_split,
    is_derivation,
    is_infinitesimal_symplectic,
    gram_matrix,
    is_symplectic_form,
    split_cosymplectic,
    structure_flags,
    symplectic_derivation_obstruction,
    symplectic_spanning_family,
)
from .mappingtorus import (
    MappingTorusSpec,
    NoWitnessError,
    eigen1_data,
    fiber_class_in_model,
    formality_verdict,
    mapping_torus_model,
    massey_witness,
    model_generator_a,
    mv_cohomology,
    partial_minimal_model,
    surface_ring,
)
from .massey import quadruple_massey, triple_massey

LITERATURE = "literature"
DERIVED = "derived"
TRIVIAL = "trivial"


@dataclass(frozen=True)
class Expectation:
    check: str
    expected: object
    source: str
    note: str = ""
    args: tuple = ()


@dataclass
class CatalogEntry:
    name: str
    payload: object
    description: str
    expectations: list[Expectation]
    extras: dict = field(default_factory=dict)

    @property
    def kind(self) -> str:
        if isinstance(self.payload, LieAlgebraSpec):
            return "lie"
        if isinstance(self.payload, MappingTorusSpec):
            return "mapping_torus"
        return "cdga"

    @property
    def fixture_name(self) -> str:
        stem = self.name.replace("(k)", "-k")
        ext = {"lie": "lie", "mapping_torus": "mt", "cdga": "cdga"}[self.kind]
        return f"{stem}.{ext}"


# checks: each takes (entry, *args) and returns the observed value

def _betti(entry: CatalogEntry):
    p = entry.payload
    if isinstance(p, LieAlgebraSpec):
        return betti(p)
    if isinstance(p, MappingTorusSpec):
        return mv_cohomology(p).betti
    return betti_numbers(p)


def _cosymplectic_form(entry, eta, F):
    s = entry.payload
    return cosymplectic_check(s, s.form(eta), s.form(F)).ok


def _cosymplectic_witness_valid(entry):
    s = entry.payload
    v = cosymplectic_exists(s)
    return v.witness is not None and cosymplectic_check(s, v.witness.eta, v.witness.F).ok


def _triple(entry, *texts):
    s = entry.payload
    c = ce_cdga(s) if isinstance(s, LieAlgebraSpec) else s
    xs = [parse_expression(t, c.table) for t in texts]
    return triple_massey(c, *xs).nonzero


def _quadruple(entry, *texts):
    s = entry.payload
    c = ce_cdga(s)
    v = quadruple_massey(c, *[s.form(t) for t in texts])
    return v.format(), v.nonzero


def _witness_alpha(entry, p):
    s = entry.payload
    try:
        w = massey_witness(s, p)
    except NoWitnessError:
        return None
    return s.fiber.format_class(p, w.alpha)


def _K_basis(entry, p):
    s = entry.payload
    return tuple(s.fiber.format_class(p, v) for v in mv_cohomology(s).K[p].basis)


def _eigen1(entry, p):
    d = eigen1_data(entry.payload, p)
    return d.dims, d.r, d.jordan_blocks


def _model_layers(entry, p):
    return partial_minimal_model(entry.payload, p).layer_dims


def _model_verified(entry, p):
    return partial_minimal_model(entry.payload, p).verify()


def _model_massey(entry, p):
    s = entry.payload
    w = massey_witness(s, p)
    model = mapping_torus_model(s)
    a = model_generator_a(s)
    return triple_massey(model, a, a, fiber_class_in_model(s, p, w.alpha)).nonzero


def _model_betti_agrees(entry):
    s = entry.payload
    return betti_numbers(mapping_torus_model(s)) == mv_cohomology(s).betti


def _derivation_obstruction(entry):
    h, D = entry.extras["kernel"], entry.extras["D"]
    deriv, _ = is_derivation(h, D)
    obs = symplectic_derivation_obstruction(h, D)
    family = symplectic_spanning_family(h)
    each_fails = all(not is_infinitesimal_symplectic(gram_matrix(h, w), D) for w in family)
    return deriv, obs.admits_symplectic_form, each_fails


def _kernel_structure(entry):
    sp = ideal_split(entry.payload, entry.payload.form(entry.extras["eta"]))
    return sp.h.basis_names, sp.h.structure, sp.D


def _extension(entry):
    data = entry.extras["extension"]
    g, cs = extend_by_derivation(data)
    return g.structure == entry.payload.structure


def _split_roundtrip(entry):
    data = entry.extras["extension"]
    g, cs = extend_by_derivation(data)
    back = split_cosymplectic(g, cs)
    return back.h.structure == data.h.structure and back.D == data.D and back.omega.terms == data.omega.terms


def _F_squared_exact(entry):
    s = entry.payload
    c = ce_cdga(s)
    H4 = cohomology(c, 4)
    forms = closed_forms(s, 2)
    for i, f in enumerate(forms):
        for g in forms[i:]:
            if not H4.is_exact(c.to_vector(f * g)):
                return False
    return True


def _F_squared_cochain_zero(entry):
    s = entry.payload
    forms = closed_forms(s, 2)
    return all((f * g).is_zero() for i, f in enumerate(forms) for g in forms[i:])


CHECKS: dict[str, Callable] = {
    "betti": _betti,
    "b1": lambda e: _betti(e)[1],
    "euler": lambda e: sum((-1) ** k * b for k, b in enumerate(_betti(e))),
    "cosymplectic": lambda e: cosymplectic_exists(e.payload).verdict,
    "cosymplectic_witness_valid": _cosymplectic_witness_valid,
    "cosymplectic_form": _cosymplectic_form,
    "symplectic_form": lambda e, w: is_symplectic_form(e.payload, e.payload.form(w)),
    "flag": lambda e, name: getattr(structure_flags(e.payload), name),
    "triple_massey_nonzero": _triple,
    "quadruple_massey": _quadruple,
    "formality": lambda e: formality_verdict(e.payload).label,
    "witness_alpha": _witness_alpha,
    "K_basis": _K_basis,
    "eigen1": _eigen1,
    "char_poly_deg1": lambda e: tuple(char_poly(e.payload.phi[1])),
    "det_deg1": lambda e: e.payload.phi[1].det(),
    "model_layers": _model_layers,
    "model_verified": _model_verified,
    "model_triple_massey": _model_massey,
    "model_betti_agrees": _model_betti_agrees,
    "derivation_obstruction": _derivation_obstruction,
    "kernel_structure": _kernel_structure,
    "extension_matches": _extension,
    "split_roundtrip": _split_roundtrip,
    "F_squared_exact": _F_squared_exact,
    "F_squared_cochain_zero": _F_squared_cochain_zero,
}


# payload builders

def g_k_algebra(k: Fraction = Fraction(1)) -> LieAlgebraSpec:
    """de1 = -k e13, de2 = k e23, de3 = 0 (any nonzero k gives the same cohomology)."""
    return LieAlgebraSpec.from_differentials(
        ["e1", "e2", "e3"], {"e1": {("e1", "e3"): -k}, "e2": {("e2", "e3"): k}})


def n_k_algebra(k: Fraction = Fraction(1), a: Fraction = Fraction(1), circle: bool = False) -> LieAlgebraSpec:
    """Circle bundle over G(k) with curvature a e12; ``circle`` adds a closed e5."""
    names = ["e1", "e2", "e3", "e4"] + (["e5"] if circle else [])
    return LieAlgebraSpec.from_differentials(
        names, {"e1": {("e1", "e3"): -k}, "e2": {("e2", "e3"): k}, "e4": {("e1", "e2"): a}})


def h_algebra(n: int = 2) -> LieAlgebraSpec:
    """The completely solvable algebra on a1..a(2n+1) with a(2n+1) acting."""
    m = 2 * n + 1
    names = [f"a{i}" for i in range(1, m + 1)]
    last = names[-1]
    diffs: dict[str, dict] = {}
    for j in range(1, 2 * n - 1):
        diffs[f"a{j}"] = {(f"a{j}", last): (-1) ** j}
    diffs[f"a{2 * n - 1}"] = {("a1", last): -1, (f"a{2 * n - 1}", last): -1}
    diffs[f"a{2 * n}"] = {("a2", last): -1, (f"a{2 * n}", last): 1}
    return LieAlgebraSpec.from_differentials(names, diffs)


EXTENSION_D = Matrix([[-1, 0, 0, 0], [0, 1, 0, 0], [-1, 0, -1, 0], [0, -1, 0, 1]])
T4_PHI = Matrix([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 1, -1]])
A_MATRIX = Matrix([[2, 1, 0, 0], [1, 1, 0, 0], [2, 1, 2, 1], [1, 1, 1, 1]])


def surface_spec(genus: int, blocks: int, name: str) -> MappingTorusSpec:
    """phi^* = [[1,0],[1,1]] on the first ``blocks`` symplectic pairs, identity elsewhere."""
    m = 2 * genus
    rows = [[int(i == j) for j in range(m)] for i in range(m)]
    for b in range(blocks):
        rows[2 * b + 1][2 * b] = 1
    return MappingTorusSpec(
        surface_ring(genus), [Matrix([[1]]), Matrix(rows), Matrix([[1]])],
        name=name, symplectic_class=(Fraction(1),),
    )


def _nk_identity_spec() -> MappingTorusSpec:
    ring = cohomology_ring(ce_cdga(n_k_algebra()))
    return MappingTorusSpec(ring, [Matrix.identity(d) for d in ring.dims], name="N(k)-identity")


def _build() -> list[CatalogEntry]:
    L, D, T = LITERATURE, DERIVED, TRIVIAL
    E = Expectation
    entries: list[CatalogEntry] = []

    heis = parse_lie_dsl("(0,0,12)")
    entries.append(CatalogEntry("heisenberg-M0", heis, "3-dim Heisenberg algebra", [
        E("b1", 2, L, "b1 = 2"),
        E("betti", (1, 2, 2, 1), D, "Poincare duality from b1 = 2"),
        E("cosymplectic_form", True, L, "eta = e1, F = e2^e3", ("e1", "e2^e3")),
        E("cosymplectic", "EXISTS", L),
        E("triple_massey_nonzero", True, D, "<[e1],[e1],[e2]> = [e1^e3]", ("e1", "e1", "e2")),
        E("flag", True, L, "nilmanifold", ("nilpotent",)),
    ]))

    kt = parse_lie_dsl("(0,0,12,13)")
    entries.append(CatalogEntry("M1-fiber", kt, "4-dim symplectic nilpotent algebra (0,0,12,13)", [
        E("symplectic_form", True, L, "omega = e1^e4 + e2^e3", ("e1^e4 + e2^e3",)),
        E("b1", 2, L, "b1 = 2"),
        E("betti", (1, 2, 2, 2, 1), D, "direct CE computation"),
    ]))

    m1 = parse_lie_dsl("(0,0,12,13,0)")
    entries.append(CatalogEntry("M1", m1, "(0,0,12,13) times a circle", [
        E("b1", 3, L, "b1 = 3"),
        E("cosymplectic_form", True, L, "eta = e5, F = e1^e4 + e2^e3", ("e5", "e1^e4 + e2^e3")),
        E("cosymplectic", "EXISTS", L),
    ]))

    for tag, text, verdict in (("a", "(0,0,12,13,14+23)", "EXISTS"), ("b", "(0,0,12,13,14)", "EXISTS"),
                               ("c", "(0,0,12,13,23)", "NOT_EXISTS")):
        s = parse_lie_dsl(text)
        exps = [
            E("b1", 2, L, "dim H^1 = 2"),
            E("betti", (1, 2, 3, 3, 2, 1), D, "direct CE computation"),
            E("cosymplectic", verdict, L),
        ]
        if verdict == "EXISTS":
            exps += [E("cosymplectic_form", True, L, "eta = e1, F = e2^e5 - e3^e4", ("e1", "e2^e5 - e3^e4")),
                     E("cosymplectic_witness_valid", True, D)]
        entries.append(CatalogEntry(f"nilpotent-5d-{tag}", s, f"nilpotent algebra {text}", exps))

    n5 = parse_lie_dsl("(0,0,12,13,23)")
    sp = ideal_split(n5, n5.form("e1"))
    entries.append(CatalogEntry("kt-extension", n5, "(0,0,12,13,23) as R + k with D = ad(e1)", [
        E("kernel_structure", (("e2", "e3", "e4", "e5"), ({}, {}, {}, {(0, 1): Fraction(1)}), sp.D), D,
          "kernel of e1 has structure (0,0,0,23) in the basis e2..e5"),
        E("derivation_obstruction", (True, False, True), L,
          "D is a derivation, symplectic for no symplectic form on the kernel"),
        E("cosymplectic", "NOT_EXISTS", L),
    ], extras={"eta": "e1", "kernel": sp.h, "D": sp.D}))

    gk = g_k_algebra()
    entries.append(CatalogEntry("P(k)", gk, "completely solvable G(k), k = 1", [
        E("betti", (1, 1, 1, 1), L, "H^1 = <e3>, H^2 = <e12>, H^3 = <e123>"),
        E("flag", True, L, "completely solvable", ("completely_solvable",)),
        E("flag", False, D, "", ("nilpotent",)),
    ]))
    nk = n_k_algebra()
    entries.append(CatalogEntry("N(k)", nk, "circle bundle over P(k) with Euler class e12", [
        E("betti", (1, 1, 0, 1, 1), L, "H^2(N(k)) = 0"),
        E("flag", True, D, "trace of ad vanishes", ("unimodular",)),
    ]))
    nks = n_k_algebra(circle=True)
    entries.append(CatalogEntry("N(k)xS1", nks, "N(k) times a circle", [
        E("betti", (1, 2, 1, 1, 2, 1), L, "H^2 = <e35>"),
        E("F_squared_exact", True, L, "every closed 2-form has exact square"),
        E("F_squared_cochain_zero", False, D, "e12 + e35 squares to 2 e1235 = d(2 e435) != 0 as a cochain"),
        E("cosymplectic", "NOT_EXISTS", L),
    ]))

    pk_model = parse_cdga_dsl("cdga\ntruncate 6\ngen a 1\ngen b 3\n")
    entries.append(CatalogEntry("N(k)-minimal-model", pk_model, "Lambda(a, b), |a| = 1, |b| = 3, d = 0", [
        E("betti", (1, 1, 0, 1, 1, 0), L, "same cohomology as N(k)"),
    ]))

    h = h_algebra(2)
    ext = SymplecticDerivationData(LieAlgebraSpec.abelian(4), LieAlgebraSpec.abelian(4).form("e1^e4 + e2^e3"),
                                   EXTENSION_D)
    entries.append(CatalogEntry("solvmanifold-S", h, "the completely solvable algebra h, dim 5", [
        E("betti", (1, 1, 2, 2, 1, 1), L, "Betti numbers of S"),
        E("quadruple_massey", ("-1/2*[a3^a4^a5]", True), L,
          "<[a1^a2],[a5],[a5],[a5]> = 1/2 [a3^a4^a5] up to the sign convention", ("a1^a2", "a5", "a5", "a5")),
        E("cosymplectic_form", True, L, "eta = a5, F = a1^a4 + a2^a3", ("a5", "a1^a4 + a2^a3")),
        E("flag", True, L, "completely solvable", ("completely_solvable",)),
        E("flag", False, L, "not nilpotent", ("nilpotent",)),
        E("extension_matches", True, L, "R xi + R^4 with [xi, u] = D u"),
        E("split_roundtrip", True, D),
    ], extras={"extension": ext}))

    S_model = parse_cdga_dsl(
        "cdga\ntruncate 4\ngen a 1\ngen b1 2\ngen b2 2\ngen b3 2\ngen b4 2\nd b3 = a^b2\nd b4 = a^b3\n")
    entries.append(CatalogEntry("solvmanifold-S-model", S_model, "minimal model of S through degree 2", [
        E("betti", (1, 1, 2, 2), D, "H^3 = <a b1, a b4>; a b4 is closed but not exact"),
    ]))

    h7 = h_algebra(3)
    entries.append(CatalogEntry("solvmanifold-7d", h7, "7-dim version of h", [
        E("cosymplectic_form", True, L, "eta = a7, F = a1^a6 + a2^a5 + a3^a4", ("a7", "a1^a6 + a2^a5 + a3^a4")),
        E("flag", True, L, "completely solvable", ("completely_solvable",)),
        E("euler", 0, T),
    ]))

    entries.append(CatalogEntry("abelian-R3", LieAlgebraSpec.abelian(3), "abelian algebra R^3", [
        E("betti", (1, 3, 3, 1), T),
        E("triple_massey_nonzero", False, T, "", ("e1", "e1", "e1")),
    ]))

    for k in (1, 2, 3):
        entries.append(CatalogEntry(f"sigma-{k}", surface_spec(k, 1, f"sigma-{k}"), f"genus {k}, one unipotent block", [
            E("b1", 2 * k, L, "b1 = 2k"),
            E("formality", "NON_FORMAL", L),
            E("witness_alpha", "xi2", L, "<a, a, xi2> != 0", (1,)),
            E("eigen1", ((2 * k - 1, 2 * k), 2, tuple([1] * (2 * k - 2) + [2])), D, "single 2x2 unipotent block", (1,)),
            E("model_triple_massey", True, L, "<a, a, xi2> != 0 in the model", (1,)),
            E("model_betti_agrees", True, D),
        ]))
    for k in (2, 3):
        entries.append(CatalogEntry(f"sigma-prime-{k}", surface_spec(k, 2, f"sigma-prime-{k}"),
                                    f"genus {k}, two unipotent blocks", [
            E("b1", 2 * k - 1, L, "b1 = 2k - 1"),
            E("formality", "NON_FORMAL", L),
            E("model_betti_agrees", True, D),
        ]))

    t4 = MappingTorusSpec.torus(T4_PHI, name="T4-phi", symplectic_class=(1, 0, 0, 0, 0, 1))
    entries.append(CatalogEntry("T4-phi", t4, "T^4 with phi^* of char poly (x+1)^4", [
        E("betti", (1, 1, 4, 4, 1, 1), L, "b1 = 1, H^2 = <e12, e14, e24, e34>"),
        E("K_basis", ("e1^e2", "e1^e4", "e2^e4", "e3^e4"), L, "", (2,)),
        E("formality", "NON_FORMAL", L),
        E("witness_alpha", "e1^e4", L, "e14 in ker and im of phi^* - id", (2,)),
        E("eigen1", ((4, 6), 2, (1, 1, 2, 2)), D, "(phi^* - id)^2 = 0 on H^2", (2,)),
        E("model_layers", (4, 2), D, "", (2,)),
        E("model_verified", True, D, "", (2,)),
    ]))

    at = MappingTorusSpec.torus(A_MATRIX, name="A-torus")
    entries.append(CatalogEntry("A-torus", at, "T^4 with the hyperbolic unipotent-squared map A", [
        E("char_poly_deg1", (1, -6, 11, -6, 1), L, "(x^2 - 3x + 1)^2"),
        E("det_deg1", 1, L),
        E("eigen1", ((2, 3, 4), 3, (1, 3)), L, "blocks of size 1 and 3", (2,)),
        E("betti", (1, 1, 2, 2, 1, 1), L, "same as S"),
        E("formality", "NON_FORMAL", L),
        E("witness_alpha", None, D, "ker F meets im F only in span(F^2 beta), which pairs to zero with ker F^2", (2,)),
        E("model_layers", (2, 1, 1), D, "", (2,)),
        E("model_verified", True, D, "", (2,)),
    ]))

    entries.append(CatalogEntry("T4-minus-identity", MappingTorusSpec.torus(-Matrix.identity(4), name="T4-minus-identity"),
                                "T^4 with phi = -id", [
        E("betti", (1, 1, 6, 6, 1, 1), D),
        E("formality", "P_FORMAL(2)", D, "r = 1 in degree 2, no eigenvalue 1 in degree 1"),
    ]))
    entries.append(CatalogEntry("T2-identity", MappingTorusSpec.torus(Matrix.identity(2), name="T2-identity"),
                                "T^3 as a trivial mapping torus", [
        E("betti", (1, 3, 3, 1), T),
        E("formality", "INCONCLUSIVE", D, "eigenvalue 1 in degree 1 with r = 1"),
    ]))
    entries.append(CatalogEntry("N(k)-identity", _nk_identity_spec(), "N(k) x S^1 as a mapping torus", [
        E("betti", (1, 2, 1, 1, 2, 1), L, "agrees with N(k)xS1"),
        E("formality", "INCONCLUSIVE", D),
    ]))
    return entries


@lru_cache(maxsize=1)
def _entries() -> tuple[CatalogEntry, ...]:
    return tuple(_build())


def catalog_entries() -> list[CatalogEntry]:
    return list(_entries())


def get_entry(name: str) -> CatalogEntry:
    for e in _entries():
        if e.name == name:
            return e
    raise KeyError(name)


@dataclass
class ExpectationResult:
    entry: str
    check: str
    args: tuple
    expected: object
    observed: object
    ok: bool
    source: str
    error: str = ""


@dataclass
class CatalogReport:
    results: list[ExpectationResult]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> list[ExpectationResult]:
        return [r for r in self.results if not r.ok]

    @property
    def entries(self) -> list[str]:
        return list(dict.fromkeys(r.entry for r in self.results))


def run_expectation(entry: CatalogEntry, exp: Expectation) -> ExpectationResult:
    try:
        observed = CHECKS[exp.check](entry, *exp.args)
        err = ""
    except Exception as exc:  # reported, not raised
        observed, err = None, f"{type(exc).__name__}: {exc}"
    ok = not err and observed == exp.expected
    return ExpectationResult(entry.name, exp.check, exp.args, exp.expected, observed, ok, exp.source, err)


def run_catalog(pattern: str | None = None) -> CatalogReport:
    results = []
    for entry in _entries():
        if pattern and not fnmatch.fnmatchcase(entry.name, pattern):
            continue
        for exp in entry.expectations:
            results.append(run_expectation(entry, exp))
    return CatalogReport(results)


FIXTURE_DIR = Path(__file__).parent / "fixtures"


def export_fixtures(directory: Path | str = FIXTURE_DIR) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for e in _entries():
        path = directory / e.fixture_name
        path.write_text(format_document(e.payload))
        out.append(path)
    return out
