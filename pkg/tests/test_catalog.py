import pytest

from zomo import catalog


def _declared_order(e):
    return next(x.value for x in e.expected if x.prop == "order")


def test_catalog_size_and_orders():
    entries = catalog.load_catalog()
    assert len(entries) >= 30
    for e in entries:
        n = _declared_order(e)
        while n % 3 == 0:
            n //= 3
        assert n == 1, "order of %s is not a power of 3" % e.id


def test_entry_ids_unique():
    entries = catalog.load_catalog()
    ids = [e.id for e in entries]
    assert len(ids) == len(set(ids))


def test_entry_by_id_unknown():
    with pytest.raises(catalog.CatalogError):
        catalog.entry_by_id("no_such_entry")


def test_materialize_order_matches():
    e = catalog.entry_by_id("C9_rtimes_C3")
    G = catalog.materialize(e)
    assert G.order == 27 == _declared_order(e)


def test_verify_small_entries():
    for eid in ("C9_rtimes_C3", "u33", "qu14sep_i_e2_d0"):
        report = catalog.verify_entry(catalog.entry_by_id(eid))
        assert report.ok, report.rows


def test_verify_full_catalog():
    failures = []
    for e in catalog.load_catalog():
        report = catalog.verify_entry(e)
        if not report.ok:
            failures.append((e.id, report.rows, report.error))
    assert not failures, failures


def test_property_rows_spot_check():
    report = catalog.verify_entry(catalog.entry_by_id("caseI1_e2_k0"))
    rows = {r.prop: r for r in report.rows}
    assert rows["order"].actual == 729
    assert all(r.passed for r in report.rows)
