from fractions import Fraction

import pytest

from cosymp.catalog import FIXTURE_DIR, T4_PHI
from cosymp.cdga import Cdga, betti_numbers
from cosymp.dsl import (
    DslError,
    DslMathError,
    detect_kind,
    format_document,
    format_lie,
    parse_document,
    parse_lie_dsl,
    parse_mapping_torus_spec,
    parse_rational,
)
from cosymp.liealg import LieAlgebraSpec, betti
from cosymp.mappingtorus import MappingTorusSpec


def test_rationals():
    assert parse_rational("-3/4") == Fraction(-3, 4)
    with pytest.raises(DslError, match="decimal"):
        parse_rational("0.5")
    with pytest.raises(DslError):
        parse_rational("1/x")


@pytest.mark.parametrize("text,line,col", [
    ("lie compact (0,0,12", 1, 13),
    ("lie compact (0,0,1.5*12)", 1, 18),
    ("lie dim 3 basis e1..e3\nd e4 = e1^e2", 2, 3),
])
def test_errors_carry_position(text, line, col):
    with pytest.raises(DslError) as exc:
        parse_lie_dsl(text)
    assert (exc.value.line, exc.value.col) == (line, col)


def test_jacobi_failure_is_math_error():
    with pytest.raises(DslMathError):
        parse_lie_dsl("lie compact (0,0,0,12,34)")


def test_compact_and_explicit_agree():
    a = parse_lie_dsl("lie compact (0,0,12,13,14+23)")
    b = parse_lie_dsl("lie dim 5 basis e1..e5\nd e3 = e1^e2\nd e4 = e1^e3\n# comment\nd e5 = e1^e4 + e2^e3")
    assert a.structure == b.structure


def test_bare_tuple_and_coefficients():
    s = parse_lie_dsl("(0,0,-1/2*12)")
    assert s.structure[2] == {(0, 1): Fraction(-1, 2)}


def test_ten_dimensional_explicit_form():
    lines = ["lie dim 10 basis e1..e10", "d e10 = e1^e2 + e3^e4"]
    s = parse_lie_dsl("\n".join(lines))
    assert s.dim == 10 and betti(s)[1] == 9
    again = parse_lie_dsl(format_lie(s))
    assert again.structure == s.structure


def test_fixture_roundtrips():
    files = sorted(FIXTURE_DIR.iterdir())
    assert files
    for path in files:
        text = path.read_text()
        doc = parse_document(text)
        again = parse_document(format_document(doc))
        assert format_document(again) == format_document(doc), path.name


def test_t4_fixture_matches_builder():
    spec = parse_mapping_torus_spec((FIXTURE_DIR / "T4-phi.mt").read_text())
    assert spec.phi == MappingTorusSpec.torus(T4_PHI).phi


def test_phi0_must_be_identity():
    text = "mapping_torus bad\n[fiber]\ntorus 2\n[phi]\n0: 2\n1: 1 0 ; 0 1\n2: 1\n"
    with pytest.raises(DslMathError):
        parse_mapping_torus_spec(text)


def test_cdga_document():
    doc = parse_document("cdga\ntruncate 5\ngen a 1\ngen b 2\ngen c 3\nd c = b**2\n")
    assert doc.kind == "cdga" and isinstance(doc.body, Cdga)
    assert betti_numbers(doc.body)[:3] == (1, 1, 1)


def test_detect_kind():
    assert detect_kind("# c\nlie compact (0,0,12)") == "lie"
    assert detect_kind("mapping_torus x\n") == "mapping_torus"
    with pytest.raises(DslError):
        detect_kind("hello")


def test_format_rejects_unknown_objects():
    with pytest.raises(TypeError):
        format_document(LieAlgebraSpec.abelian(2).table)
