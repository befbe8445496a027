from fractions import Fraction

import pytest

from cosymp.catalog import A_MATRIX, T4_PHI, get_entry, surface_spec
from cosymp.cdga import betti_numbers
from cosymp.exactlinalg import Matrix
from cosymp.mappingtorus import (
    INCONCLUSIVE,
    NON_FORMAL,
    P_FORMAL,
    InvalidSpecError,
    MappingTorusSpec,
    NoWitnessError,
    eigen1_data,
    formality_verdict,
    massey_witness,
    mapping_torus_model,
    mv_cohomology,
    partial_minimal_model,
    surface_ring,
    validate_spec,
)


def test_identity_torus_is_product():
    s = MappingTorusSpec.torus(Matrix.identity(3))
    # T^3 x S^1
    assert mv_cohomology(s).betti == (1, 4, 6, 4, 1)


def test_betti_of_unipotent_surface_map():
    tc = mv_cohomology(surface_spec(1, 1, "s"))
    assert tc.betti == (1, 2, 2, 1)


def test_validation_catches_singular_and_orientation():
    bad = MappingTorusSpec.torus(Matrix([[1, 0], [0, 0]]))
    res = validate_spec(bad)
    assert not res.ok
    assert any("singular" in d for d in res.diagnostics)
    flip = MappingTorusSpec.torus(Matrix([[0, 1], [1, 0]]))
    assert any("orientation" in d for d in validate_spec(flip).diagnostics)


def test_validation_catches_non_homomorphism():
    ring = surface_ring(1)
    phi = [Matrix([[1]]), Matrix([[2, 0], [0, 1]]), Matrix([[1]])]
    res = validate_spec(MappingTorusSpec(ring, phi))
    assert any("homomorphism" in d for d in res.diagnostics)


def test_validation_shape_errors():
    ring = surface_ring(1)
    res = validate_spec(MappingTorusSpec(ring, [Matrix([[1]]), Matrix.identity(3), Matrix([[1]])]))
    assert not res.ok and "shape" in res.diagnostics[0]


def test_symplectic_class_must_be_fixed():
    s = MappingTorusSpec.torus(T4_PHI, symplectic_class=(0, 1, 0, 0, 0, 0))
    assert any("symplectic" in d for d in validate_spec(s).diagnostics)


def test_invalid_spec_raises_with_diagnostics():
    with pytest.raises(InvalidSpecError) as exc:
        formality_verdict(MappingTorusSpec.torus(Matrix([[0, 1], [1, 0]])))
    assert exc.value.diagnostics


def test_model_cohomology_matches_sequence():
    specs = [get_entry(n).payload for n in ("sigma-2", "sigma-prime-2")]
    specs.append(MappingTorusSpec.torus(Matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])))
    for s in specs:
        assert betti_numbers(mapping_torus_model(s)) == mv_cohomology(s).betti


def test_model_needs_unipotent_map():
    with pytest.raises(ValueError):
        mapping_torus_model(MappingTorusSpec.torus(T4_PHI))


def test_eigen1_on_exterior_square():
    s = MappingTorusSpec.torus(A_MATRIX)
    e = eigen1_data(s, 2)
    assert tuple(e.dims) == (2, 3, 4) and e.r == 3 and tuple(e.jordan_blocks) == (1, 3)
    assert not eigen1_data(s, 1).has_eigenvalue_one


def test_exterior_square_torus_has_no_pairing_witness():
    s = MappingTorusSpec.torus(A_MATRIX)
    with pytest.raises(NoWitnessError):
        massey_witness(s, 2)
    rep = formality_verdict(s)
    assert rep.verdict == NON_FORMAL and rep.witness is None and rep.p == 2
    assert "multiplicity" in rep.certificate


def test_witness_obligations_are_checked():
    w = massey_witness(MappingTorusSpec.torus(T4_PHI), 2)
    assert w.verified and w.kappa != 0
    assert all(ok for _, ok in w.obligations)


def test_surface_witness_degree_one():
    rep = formality_verdict(surface_spec(2, 1, "s"))
    assert rep.verdict == NON_FORMAL and rep.p == 1
    assert rep.witness.verified


def test_partial_minimal_model_needs_degree_two():
    with pytest.raises(Exception):
        partial_minimal_model(surface_spec(1, 1, "s"), 1)


def test_partial_model_layers_follow_filtration():
    s = MappingTorusSpec.torus(A_MATRIX)
    m = partial_minimal_model(s, 2)
    assert m.verify()
    assert m.layer_dims == (2, 1, 1)


def test_p_formal_and_inconclusive_verdicts():
    rep = formality_verdict(MappingTorusSpec.torus(-Matrix.identity(4)))
    assert rep.verdict == P_FORMAL and rep.label == "P_FORMAL(2)"
    assert formality_verdict(MappingTorusSpec.torus(Matrix.identity(2))).verdict == INCONCLUSIVE


def test_pairing_preserved_by_catalog_specs():
    for name in ("sigma-1", "sigma-3", "sigma-prime-3", "T4-phi"):
        assert validate_spec(get_entry(name).payload).ok, name


def test_rational_ring_map_accepted():
    ring = surface_ring(1)
    phi = [Matrix([[1]]), Matrix([[Fraction(1, 2), 0], [0, 2]]), Matrix([[1]])]
    assert validate_spec(MappingTorusSpec(ring, phi)).ok
