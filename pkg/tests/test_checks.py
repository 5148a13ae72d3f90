import pytest

from artin_epi import checks


def test_registry_holds_all_twelve_criteria():
    ids = list(checks.REGISTRY)
    assert sum(1 for i in ids if i.startswith("criterion-")) == 12


def test_suite_report_lists_each_selected_check_once():
    rep = checks.run_suite("core")
    names = [e.id for e in rep.entries]
    assert names == sorted(set(names))
    assert rep.ok


def test_unknown_suite_is_rejected():
    with pytest.raises(KeyError):
        checks.run_suite("no-such-suite")
