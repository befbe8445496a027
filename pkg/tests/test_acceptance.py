"""Acceptance suite: one test per criterion, all exact.

A summary line per criterion is printed at the end of the pytest run
(see conftest.py).
"""

import random
from fractions import Fraction

import pytest

from cosymp.catalog import A_MATRIX, EXTENSION_D, T4_PHI, catalog_entries, g_k_algebra, h_algebra, n_k_algebra, \
    surface_spec
from cosymp.cdga import Cdga, Element, GeneratorTable, cohomology
from cosymp.dsl import parse_lie_dsl
from cosymp.exactlinalg import Matrix, Subspace, char_poly, eigen1_filtration, exterior_power, jordan_blocks_from_dims
from cosymp.liealg import (
    LieAlgebraSpec,
    SymplecticDerivationData,
    betti,
    ce_cdga,
    closed_forms,
    cosymplectic_check,
    cosymplectic_exists,
    extend_by_derivation,
    gram_matrix,
    ideal_split,
    is_derivation,
    is_infinitesimal_symplectic,
    split_cosymplectic,
    structure_flags,
    symplectic_derivation_obstruction,
    symplectic_spanning_family,
)
from cosymp.mappingtorus import (
    MappingTorusSpec,
    formality_verdict,
    mapping_torus_model,
    model_generator_a,
    fiber_class_in_model,
    mv_cohomology,
)
from cosymp.massey import quadruple_massey, triple_massey

TRIALS = 100


@pytest.mark.criterion(1, "Betti numbers of CE(h) are (1,1,2,2,1,1)")
def test_criterion_01_solvmanifold_betti(criterion):
    assert betti(h_algebra(2)) == (1, 1, 2, 2, 1, 1)


@pytest.mark.criterion(2, "quadruple Massey <[a1a2],[a5],[a5],[a5]> = 1/2 [a3a4a5] mod variation, nonzero")
def test_criterion_02_quadruple_massey(criterion):
    h = h_algebra(2)
    c = ce_cdga(h)
    classes = (h.form("a1^a2"), h.form("a5"), h.form("a5"), h.form("a5"))
    H3 = cohomology(c, 3)
    target = H3.coordinates(c.to_vector(h.form("a3^a4^a5")))
    # bars dropped: d a_ij = sum a_ik a_(k+1)j gives +1/2
    v = quadruple_massey(c, *classes, convention="unsigned")
    assert v.defined and v.nonzero
    diff = tuple(x - Fraction(1, 2) * t for x, t in zip(v.representative, target))
    assert v.indeterminacy.contains(diff)
    assert not v.indeterminacy.contains(target)
    # with bar(u) = (-1)^(1+|u|) u the overall sign flips
    signed = quadruple_massey(c, *classes)
    assert signed.defined and signed.nonzero
    assert signed.indeterminacy.contains(tuple(x + Fraction(1, 2) * t for x, t in zip(signed.representative, target)))
    # the relations behind the defining system
    assert c.differential(h.form("a1^a4 - a2^a3")) * Fraction(1, 2) == h.form("a1^a2^a5")
    assert c.differential(h.form("a3^a4")) == h.form("a1^a4^a5 - a2^a3^a5")


@pytest.mark.criterion(3, "T4 mapping torus: betti (1,1,4,4,1,1), K2 = <e12,e14,e24,e34>, NON_FORMAL with alpha = e14")
def test_criterion_03_t4(criterion):
    s = MappingTorusSpec.torus(T4_PHI)
    assert s.phi[1] == Matrix([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 1, -1]])
    mv = mv_cohomology(s)
    assert mv.betti == (1, 1, 4, 4, 1, 1)
    labels = s.fiber.labels[2]
    K2 = {s.fiber.format_class(2, v) for v in mv.K[2].basis}
    assert K2 == {"e1^e2", "e1^e4", "e2^e4", "e3^e4"}
    assert labels == ("e1^e2", "e1^e3", "e1^e4", "e2^e3", "e2^e4", "e3^e4")
    rep = formality_verdict(s)
    assert rep.verdict == "NON_FORMAL"
    w = rep.witness
    assert w is not None and w.verified and w.p == 2
    assert s.fiber.format_class(2, w.alpha) == "e1^e4"


@pytest.mark.criterion(4, "surface mapping tori: b1 = 2k / 2k-1, NON_FORMAL at p = 1, <a,a,xi2> != 0")
def test_criterion_04_surfaces(criterion):
    for k in (1, 2, 3, 4):
        s = surface_spec(k, 1, f"sigma-{k}")
        assert mv_cohomology(s).betti[1] == 2 * k
        rep = formality_verdict(s)
        assert rep.verdict == "NON_FORMAL" and rep.p == 1
        w = rep.witness
        assert w.verified
        assert s.fiber.format_class(1, w.alpha) == "xi2"
        assert s.fiber.format_class(1, w.xi) == "xi2"
        model = mapping_torus_model(s)
        a = model_generator_a(s)
        t = triple_massey(model, a, a, fiber_class_in_model(s, 1, w.alpha))
        assert t.defined and t.nonzero
    for k in (2, 3, 4):
        s = surface_spec(k, 2, f"sigma-prime-{k}")
        assert mv_cohomology(s).betti[1] == 2 * k - 1
        rep = formality_verdict(s)
        assert rep.verdict == "NON_FORMAL" and rep.p == 1 and rep.witness.verified


@pytest.mark.criterion(5, "5-dim nilpotent algebras: EXISTS, EXISTS, NOT_EXISTS with zero polynomial")
def test_criterion_05_nilpotent(criterion):
    for text in ("(0,0,12,13,14+23)", "(0,0,12,13,14)"):
        s = parse_lie_dsl(text)
        v = cosymplectic_exists(s)
        assert v.verdict == "EXISTS"
        assert cosymplectic_check(s, v.witness.eta, v.witness.F).ok
        assert cosymplectic_check(s, s.form("e1"), s.form("e2^e5 - e3^e4")).ok
    s = parse_lie_dsl("(0,0,12,13,23)")
    v = cosymplectic_exists(s)
    assert v.verdict == "NOT_EXISTS"
    assert v.witness is None and v.polynomial == {} and v.terms_expanded > 0


@pytest.mark.criterion(6, "D = ad(e1) on (0,0,0,23) is a derivation, symplectic for no symplectic form")
def test_criterion_06_derivation_not_symplectic(criterion):
    n = parse_lie_dsl("(0,0,12,13,23)")
    sp = ideal_split(n, n.form("e1"))
    k = sp.h
    assert k.basis_names == ("e2", "e3", "e4", "e5")
    assert [repr(k.d_of_generator(i)) for i in range(4)] == ["0", "0", "0", "e2^e3"]
    D = sp.D
    assert is_derivation(k, D)[0]
    family = symplectic_spanning_family(k)
    assert family
    # the family spans the closed 2-forms
    z2 = closed_forms(k, 2)
    c = ce_cdga(k)
    span_family = Subspace.span(c.dim(2), [c.to_vector(w) for w in family])
    assert span_family == Subspace.span(c.dim(2), [c.to_vector(w) for w in z2])
    for w in family:
        g = gram_matrix(k, w)
        assert g.det() != 0
        assert not is_infinitesimal_symplectic(g, D)
    obs = symplectic_derivation_obstruction(k, D)
    assert not obs.admits_symplectic_form


@pytest.mark.criterion(7, "wedge^2 A: dims [2,3,4], r = 3, blocks {1,3}; char poly (x^2-3x+1)^2, det 1")
def test_criterion_07_jordan(criterion):
    A = A_MATRIX
    P = exterior_power(A, 2)
    assert P == Matrix([[1, 0, 0, 0, 0, 0], [0, 4, 2, 2, 1, 0], [1, 2, 2, 1, 1, 0],
                        [-1, 2, 1, 2, 1, 0], [0, 1, 1, 1, 1, 0], [1, 0, 1, -1, 0, 1]])
    dims, r = eigen1_filtration(P)
    assert dims == [2, 3, 4] and r == 3
    assert sorted(jordan_blocks_from_dims(dims)) == [1, 3]
    # (x^2 - 3x + 1)^2 = x^4 - 6x^3 + 11x^2 - 6x + 1
    assert char_poly(A) == [1, -6, 11, -6, 1]
    assert A.det() == 1


@pytest.mark.criterion(8, "P(k), N(k) Betti (1,1,1,1), (1,1,0,1,1); F^2 = 0 in cohomology on N(k)xS1")
def test_criterion_08_pk_nk(criterion):
    for k in (Fraction(1), Fraction(2), Fraction(-3, 2)):
        assert betti(g_k_algebra(k)) == (1, 1, 1, 1)
        assert betti(n_k_algebra(k)) == (1, 1, 0, 1, 1)
    s = n_k_algebra(circle=True)
    c = ce_cdga(s)
    assert betti(s) == (1, 2, 1, 1, 2, 1)
    H4 = cohomology(c, 4)
    forms = closed_forms(s, 2)
    # F^2 is quadratic, so exactness of all products of basis pairs covers every closed F
    for i, f in enumerate(forms):
        for g in forms[i:]:
            assert H4.is_exact(c.to_vector(f * g))
    assert cosymplectic_exists(s).verdict == "NOT_EXISTS"


@pytest.mark.criterion(9, "extension of R^4 by D gives the bracket list of h; splitting inverts it")
def test_criterion_09_roundtrip(criterion):
    ab = LieAlgebraSpec.abelian(4)
    data = SymplecticDerivationData(ab, ab.form("e1^e4 + e2^e3"), EXTENSION_D)
    g, cs = extend_by_derivation(data)
    xi = (0, 0, 0, 0, 1)

    def e(i):
        return tuple(Fraction(int(j == i - 1)) for j in range(5))

    def comb(**kw):
        out = [Fraction(0)] * 5
        for k, v in kw.items():
            out[int(k[1:]) - 1] = Fraction(v)
        return tuple(out)

    assert g.bracket(xi, e(1)) == comb(e1=-1, e3=-1)
    assert g.bracket(xi, e(2)) == comb(e2=1, e4=-1)
    assert g.bracket(xi, e(3)) == comb(e3=-1)
    assert g.bracket(xi, e(4)) == comb(e4=1)
    for i in range(1, 5):
        for j in range(1, 5):
            assert g.bracket(e(i), e(j)) == (0,) * 5
    assert g.structure == h_algebra(2).structure
    assert cosymplectic_check(g, cs.eta, cs.F).ok
    back = split_cosymplectic(g, cs)
    assert back.h.structure == ab.structure
    assert back.D == EXTENSION_D
    assert back.omega.terms == data.omega.terms


def _random_element(rng, c, k):
    basis = c.basis(k)
    return c.from_vector(k, [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in basis])


@pytest.mark.criterion(10, "property suites, 100 seeded trials each, zero failures")
def test_criterion_10_properties(criterion):
    rng = random.Random(20261015)
    entries = catalog_entries()
    lies = [e.payload for e in entries if isinstance(e.payload, LieAlgebraSpec)]

    # d^2 = 0 and graded commutativity on random elements
    tb = GeneratorTable.from_pairs([("a", 1), ("x", 1), ("y", 1), ("b", 2), ("c", 3)])
    gen = {n: Element.generator(tb, n) for n in tb.names}
    free = Cdga(tb, {"y": gen["a"] * gen["x"], "c": gen["b"] * gen["b"]}, truncation_degree=6)
    algebras = [ce_cdga(s) for s in lies] + [free]
    for _ in range(TRIALS):
        c = rng.choice(algebras)
        top = c.max_degree - 1
        p, q = rng.randint(0, top), rng.randint(0, top)
        if p + q > top or c.dim(p) == 0 or c.dim(q) == 0:
            p, q = 1, 1
        u, v = _random_element(rng, c, p), _random_element(rng, c, q)
        if p + 2 <= c.max_degree:
            assert c.differential(c.differential(u)).is_zero()
        assert u * v == v * u * ((-1) ** (p * q))
        if p + q + 1 <= c.max_degree:
            lhs = c.differential(u * v)
            rhs = c.differential(u) * v + u * c.differential(v) * ((-1) ** p)
            assert lhs == rhs

    # Poincare duality and zero Euler characteristic on unimodular catalog algebras
    for s in lies:
        if s.dim == 0:
            continue
        b = betti(s)
        assert sum((-1) ** k * x for k, x in enumerate(b)) == 0
        if structure_flags(s).unimodular:
            assert b == tuple(reversed(b))

    # mapping tori: betti_M[p] = dim K_p + dim coker_(p-1), duality, and random torus maps
    specs = [e.payload for e in entries if isinstance(e.payload, MappingTorusSpec)]
    for _ in range(TRIALS):
        n = rng.choice((2, 3, 4))
        m = Matrix.identity(n)
        for _ in range(rng.randint(1, 6)):
            i, j = rng.sample(range(n), 2)
            t = rng.randint(-2, 2)
            rows = [list(r) for r in Matrix.identity(n).rows]
            rows[i][j] = t
            m = m @ Matrix(rows)
        if rng.random() < 0.3:
            rows = [list(r) for r in Matrix.identity(n).rows]
            rows[0][0] = rows[1][1] = -1
            m = m @ Matrix(rows)
        specs.append(MappingTorusSpec.torus(m))
    for s in specs:
        mv = mv_cohomology(s)
        for p in range(len(mv.betti)):
            Kp = mv.K[p].dim if p <= s.n else 0
            Kq = mv.K[p - 1].dim if p >= 1 else 0
            assert mv.betti[p] == Kp + Kq
        assert mv.betti == tuple(reversed(mv.betti))
        assert sum((-1) ** k * x for k, x in enumerate(mv.betti)) == 0

    # triple Massey verdict invariance under coboundary perturbation
    heis = ce_cdga(parse_lie_dsl("(0,0,12)"))
    h = h_algebra(2)
    ch = ce_cdga(h)
    cases = [
        (heis, [heis.gen("e1"), heis.gen("e1"), heis.gen("e2")]),
        (heis, [heis.gen("e2"), heis.gen("e2"), heis.gen("e1")]),
        (heis, [heis.gen("e1"), heis.gen("e2"), heis.gen("e1")]),
        (ch, [h.form("a5"), h.form("a5"), h.form("a1^a2")]),
        (ch, [h.form("a1^a2"), h.form("a5"), h.form("a5")]),
    ]
    base = {i: triple_massey(c, *xs) for i, (c, xs) in enumerate(cases)}
    for _ in range(TRIALS):
        i = rng.randrange(len(cases))
        c, xs = cases[i]
        pert = []
        for x in xs:
            k = x.degree
            y = _random_element(rng, c, k - 1) if k >= 1 else None
            pert.append(x + c.differential(y) if y is not None else x)
        v = triple_massey(c, *pert)
        b = base[i]
        assert (v.defined, v.nonzero) == (b.defined, b.nonzero)
        if v.defined:
            assert v.indeterminacy.contains(tuple(x - y for x, y in zip(v.representative, b.representative)))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
