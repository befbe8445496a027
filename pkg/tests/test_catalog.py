import pytest

from cosymp.catalog import (
    FIXTURE_DIR,
    Expectation,
    catalog_entries,
    export_fixtures,
    get_entry,
    run_catalog,
    run_expectation,
)
from cosymp.dsl import format_document


@pytest.fixture(scope="module")
def report():
    return run_catalog()


def test_every_expectation_passes(report):
    assert report.results
    assert report.ok, [(f.entry, f.check, f.expected, f.observed, f.error) for f in report.failures]


def test_every_entry_has_expectations(report):
    assert set(report.entries) == {e.name for e in catalog_entries()}


def test_sources_are_tagged():
    for e in catalog_entries():
        for x in e.expectations:
            assert x.source in ("literature", "derived", "trivial"), (e.name, x.check)


def test_pattern_filter():
    r = run_catalog("sigma-*")
    assert r.entries and all(n.startswith("sigma-") for n in r.entries)
    assert run_catalog("no-such-entry").results == []


def test_unknown_entry():
    with pytest.raises(KeyError):
        get_entry("no-such-entry")


def test_failed_check_is_reported_not_raised():
    entry = get_entry("heisenberg-M0")
    res = run_expectation(entry, Expectation("betti", (1, 1, 1, 1), "trivial"))
    assert not res.ok and res.observed == (1, 2, 2, 1)


def test_shipped_fixtures_match_export(tmp_path):
    written = export_fixtures(tmp_path)
    assert sorted(p.name for p in written) == sorted(p.name for p in FIXTURE_DIR.iterdir())
    for p in written:
        assert p.read_text() == (FIXTURE_DIR / p.name).read_text(), p.name


def test_payloads_format():
    for e in catalog_entries():
        assert format_document(e.payload).strip()
