import random
from fractions import Fraction

import pytest

from cosymp.catalog import EXTENSION_D, get_entry, h_algebra
from cosymp.cdga import cohomology
from cosymp.exactlinalg import Matrix
from cosymp.liealg import (
    LieAlgebraError,
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
    jacobi_check,
    split_cosymplectic,
    structure_flags,
)


def heis():
    return LieAlgebraSpec.from_differentials(["e1", "e2", "e3"], {"e3": {("e1", "e2"): 1}})


def test_bracket_sign_convention():
    # d e3 = e1^e2 means [e1, e2] = -e3
    assert heis().bracket((1, 0, 0), (0, 1, 0)) == (0, 0, -1)


def test_pair_normalization():
    s = LieAlgebraSpec(("a", "b", "c"), ({}, {}, {(1, 0): 2}))
    assert s.structure[2] == {(0, 1): Fraction(-2)}


def test_jacobi_failure_is_reported():
    # d^2 e4 = d(e3^e4) = e1^e2^e4 - e3^e3^e4 != 0
    s = LieAlgebraSpec.from_differentials(
        ["e1", "e2", "e3", "e4"], {"e3": {("e1", "e2"): 1}, "e4": {("e3", "e4"): 1}}
    )
    assert not jacobi_check(s)
    with pytest.raises(Exception):
        ce_cdga(s)


def test_heisenberg_flags():
    f = structure_flags(heis())
    assert f.nilpotent and f.solvable and f.unimodular
    assert f.lower_central_dims == (3, 1, 0)


def test_non_unimodular_two_dim():
    # [e1, e2] = e2 : d e2 = -e1^e2
    s = LieAlgebraSpec.from_differentials(["e1", "e2"], {"e2": {("e1", "e2"): -1}})
    f = structure_flags(s)
    assert f.solvable and not f.nilpotent and not f.unimodular
    assert betti(s) == (1, 1, 0)


def test_rotation_algebra_is_not_completely_solvable():
    # e(2): [x, e1] = e2, [x, e2] = -e1
    s = LieAlgebraSpec.from_differentials(["e1", "e2", "x"], {"e1": {("e2", "x"): -1}, "e2": {("x", "e1"): -1}})
    assert jacobi_check(s)
    f = structure_flags(s)
    assert f.solvable and not f.completely_solvable


def test_abelian_betti_are_binomials():
    assert betti(LieAlgebraSpec.abelian(5)) == (1, 5, 10, 10, 5, 1)


def test_closed_forms_dimensions_match_cocycles():
    h = h_algebra(2)
    c = ce_cdga(h)
    for k in range(4):
        assert len(closed_forms(h, k)) == c.cocycles(k).dim


def test_cosymplectic_check_on_heisenberg():
    s = heis()
    chk = cosymplectic_check(s, s.form("e3"), s.form("e1^e2"))
    assert not chk.ok and "d(eta) != 0" in chk.diagnostics()
    assert cosymplectic_check(s, s.form("e1"), s.form("e2^e3")).ok
    v = cosymplectic_exists(s)
    assert v.verdict == "EXISTS"
    assert cosymplectic_check(s, v.witness.eta, v.witness.F).ok


def test_cosymplectic_even_dimension_rejected():
    with pytest.raises(LieAlgebraError):
        cosymplectic_exists(LieAlgebraSpec.abelian(4))


def test_five_dim_obstructed_case():
    v = cosymplectic_exists(get_entry("nilpotent-5d-c").payload)
    assert v.verdict == "NOT_EXISTS" and v.witness is None
    assert "zero polynomial" in v.certificate()


def test_is_derivation():
    s = heis()
    ok, _ = is_derivation(s, s.ad((1, 0, 0)))
    assert ok
    ok, pair = is_derivation(s, Matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]]))
    assert not ok and pair is not None


@pytest.mark.parametrize("seed", range(5))
def test_extend_then_split_roundtrip(seed):
    rng = random.Random(seed)
    h4 = LieAlgebraSpec.abelian(4)
    omega = h4.form("e1^e2 + e3^e4")
    # traceless on the (e1, e2) block, zero on (e3, e4): preserves e1^e2 + e3^e4
    a, b, c = (rng.randint(-3, 3) for _ in range(3))
    D = Matrix([[a, b, 0, 0], [c, -a, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    g, data = extend_by_derivation(SymplecticDerivationData(h4, omega, D))
    assert jacobi_check(g)
    assert cosymplectic_check(g, data.eta, data.F).ok
    back = split_cosymplectic(g, data)
    assert back.D == D


def test_extension_by_fixed_derivation_betti():
    h4 = LieAlgebraSpec.abelian(4)
    g, data = extend_by_derivation(SymplecticDerivationData(h4, h4.form("e1^e4 + e2^e3"), EXTENSION_D))
    assert g.dim == 5
    split = ideal_split(g, data.eta)
    assert split.h.dim == 4
    assert cohomology(ce_cdga(g), 0).betti == 1
