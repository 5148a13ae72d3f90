import shutil

import pytest

from artin_epi import tables


@pytest.mark.parametrize("family", ["L4", "L6", "L7"])
def test_numeric_tables_reproduce(family):
    reports = tables.check_family_tables(family)
    assert len(reports) == 8
    for rep in reports:
        assert rep.ok, rep.to_json()


def test_symbolic_l5_table_reproduces():
    rep = tables.compare_table(tables.load_table("L5", None))
    assert rep.cells == 32
    assert rep.ok, rep.to_json()


def test_symbolic_l5_table_needs_its_conventions():
    fixture = tables.load_table("L5", None)
    assert not tables.compare_table(fixture, first="gamma").ok


def test_l3_tables_fail_only_on_the_duplicated_one():
    reports = {r.params: r for r in tables.check_family_tables("L3")}
    bad = {p for p, r in reports.items() if not r.ok}
    assert bad == {(0, 1, -1)}
    assert len(reports[(0, 1, -1)].mismatches) == 32
    dups = tables.duplicate_id_rows(tables.list_tables("L3"))
    assert dups == [((0, -1, 1), (0, 1, -1))] or dups == [((0, 1, -1), (0, -1, 1))]


def test_generated_table_round_trips_through_csv(tmp_path):
    gen = tables.generate_table("L4", (0, 1, 0))
    path = tmp_path / "l4_0_1_0.csv"
    tables.write_table(gen, path)
    back = tables.read_table(path, "L4", (0, 1, 0))
    assert back.cells == gen.cells
    assert tables.compare_table(back).ok


def test_fixture_directory_override(tmp_path, monkeypatch):
    shutil.copy(tables.table_path("L6", (0, 1, 0)), tmp_path / "l6_0_1_0.csv")
    monkeypatch.setenv("ARTIN_FIXTURES", str(tmp_path))
    assert tables.fixture_dir() == tmp_path
    assert [t.params for t in tables.list_tables("L6")] == [(0, 1, 0)]


def test_missing_fixtures_raise(tmp_path, monkeypatch):
    monkeypatch.setenv("ARTIN_FIXTURES", str(tmp_path))
    with pytest.raises(tables.FixtureError):
        tables.check_family_tables("L4")
    with pytest.raises(tables.FixtureError):
        tables.load_table("L5", None)


def test_corrupted_cell_is_reported(tmp_path):
    src = tables.table_path("L7", (0, 0, 1))
    lines = src.read_text().splitlines()
    cols = lines[3].split(",")
    cols[2] = str(int(cols[2]) + 1)
    lines[3] = ",".join(cols)
    bad = tmp_path / src.name
    bad.write_text("\n".join(lines) + "\n")
    rep = tables.compare_table(tables.read_table(bad, "L7", (0, 0, 1)))
    assert len(rep.mismatches) == 1
    m = rep.mismatches[0]
    assert (m.auto, m.generator) == (cols[0], int(cols[1]))


def test_params_tags():
    assert tables.params_tag((0, -1, 1)) == "0_m1_1"
    assert tables.parse_tag("0_m1_1") == (0, -1, 1)
