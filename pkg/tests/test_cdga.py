from fractions import Fraction

import pytest

from cosymp.cdga import (
    Cdga,
    CdgaError,
    CohomologyRing,
    DSquaredError,
    Element,
    FiniteCdga,
    GeneratorTable,
    TruncationError,
    betti_numbers,
    cohomology,
    cohomology_ring,
)
from cosymp.exactlinalg import Matrix


@pytest.fixture
def mixed():
    t = GeneratorTable.from_pairs([("x", 1), ("y", 1), ("z", 2)])
    return t, [Element.generator(t, n) for n in "xyz"]


def test_koszul_signs(mixed):
    t, (x, y, z) = mixed
    assert y * x == -(x * y)
    assert (x * x).is_zero()
    assert z * x == x * z
    assert (z * z).degree == 4 and not (z * z).is_zero()


def test_generator_order_is_by_degree_then_position():
    t = GeneratorTable.from_pairs([("b", 2), ("a", 1)])
    assert t.names == ("a", "b")


def test_duplicate_generator_rejected():
    with pytest.raises(CdgaError):
        GeneratorTable.from_pairs([("a", 1), ("a", 1)])


def test_heisenberg_betti():
    t = GeneratorTable.exterior(["e1", "e2", "e3"])
    e1, e2 = Element.generator(t, "e1"), Element.generator(t, "e2")
    c = Cdga(t, {"e3": e1 * e2})
    assert betti_numbers(c) == (1, 2, 2, 1)


def test_leibniz_on_products():
    t = GeneratorTable.exterior(["e1", "e2", "e3", "e4"])
    g = {n: Element.generator(t, n) for n in t.names}
    c = Cdga(t, {"e3": g["e1"] * g["e2"], "e4": g["e1"] * g["e3"]})
    a, b = g["e3"], g["e4"] * g["e2"]
    lhs = c.differential(a * b)
    rhs = c.differential(a) * b - a * c.differential(b)
    assert lhs == rhs


def test_wrong_differential_degree():
    t = GeneratorTable.exterior(["a", "b"])
    with pytest.raises(CdgaError, match="degree"):
        Cdga(t, {"b": Element.generator(t, "a")})


def test_d_squared_violation():
    t = GeneratorTable.from_pairs([("a", 1), ("b", 1), ("c", 1), ("w", 2)])
    g = {n: Element.generator(t, n) for n in t.names}
    # d^2 c = d(a b) = w b
    with pytest.raises(DSquaredError):
        Cdga(t, {"a": g["w"], "c": g["a"] * g["b"]}, truncation_degree=4)


def test_truncation_required_for_even_generators():
    t = GeneratorTable.from_pairs([("z", 2)])
    with pytest.raises(CdgaError):
        Cdga(t, {})
    c = Cdga(t, {}, truncation_degree=5)
    assert c.dim(4) == 1
    with pytest.raises(TruncationError):
        c.dim(6)


def test_torus_ring_pairing():
    ring = CohomologyRing.exterior(4)
    assert ring.dims == (1, 4, 6, 4, 1)
    assert ring.pairing[2].det() != 0
    assert ring.check_axioms() == []


def test_finite_cdga_circle_times_sphere_like():
    # degrees 0..2 with H = span(1, a, b), a*a = 0, d = 0
    f = FiniteCdga([["1"], ["a"], ["b"]], {(1, 1): [[(0,)]]}, {})
    assert betti_numbers(f) == (1, 1, 1)


def test_finite_cdga_rejects_bad_differential():
    with pytest.raises(CdgaError):
        FiniteCdga([["1"], ["a"]], {}, {0: Matrix([[1]])})


def test_cohomology_coordinates_ignore_coboundaries():
    t = GeneratorTable.exterior(["e1", "e2", "e3"])
    e1, e2, e3 = (Element.generator(t, n) for n in t.names)
    c = Cdga(t, {"e3": e1 * e2})
    H2 = cohomology(c, 2)
    assert H2.betti == 2
    v = c.to_vector(e1 * e3)
    assert H2.coordinates(v) == H2.coordinates(tuple(a + b for a, b in zip(v, c.to_vector(e1 * e2))))


def test_cohomology_ring_of_heisenberg():
    t = GeneratorTable.exterior(["e1", "e2", "e3"])
    e1, e2 = Element.generator(t, "e1"), Element.generator(t, "e2")
    ring = cohomology_ring(Cdga(t, {"e3": e1 * e2}))
    assert ring.top_degree == 3 and ring.fundamental == 0
    # H^1 x H^1 -> H^2 vanishes on the Heisenberg algebra
    assert all(all(c == 0 for c in v) for row in ring.cup[(1, 1)] for v in row)
    assert ring.check_axioms() == []


def test_element_coefficients_are_exact():
    t = GeneratorTable.exterior(["a"])
    e = Element.generator(t, "a") * Fraction(1, 3)
    assert list(e.terms.values()) == [Fraction(1, 3)]
