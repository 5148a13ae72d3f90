"""Transcribed automorphism tables: loading, regeneration and cell-level comparison.

Each CSV holds one table with columns ``auto,generator,t1..tn,perm``; ``perm``
is the one-line notation of the permutation part.  Numeric tables belong to a
single parameter tuple (encoded in the file name); the symbolic L5 table has
linear forms in x1..x4 as translation cells.
"""
from __future__ import annotations

import csv
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from .autos import TABLE_ORDER, apply_auto, table_autos
from .core import AffineElem
from .families import MorphismSpec, eval_linear, parse_linear, printed_images

FAMILY_TABLES = ("L3", "L4", "L5", "L6", "L7")


class FixtureError(FileNotFoundError):
    pass


def fixture_dir() -> Path:
    env = os.environ.get("ARTIN_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("artin_epi") / "fixtures"))


def params_tag(params: Sequence[int]) -> str:
    return "_".join(f"m{-x}" if x < 0 else str(x) for x in params)


def parse_tag(tag: str) -> tuple[int, ...]:
    return tuple(-int(t[1:]) if t.startswith("m") else int(t) for t in tag.split("_"))


@dataclass(frozen=True)
class TableConvention:
    """How a printed table relates to the literal generator images.

    ``first`` is the composition order of the ρ^kγ rows.  ``rename`` maps the
    table's parameters to the parameters of the literal images.
    """

    first: str = "gamma"
    rename: Callable[[Sequence[int]], tuple[int, ...]] | None = None

    def literal_params(self, xs: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.rename(xs)) if self.rename else tuple(xs)


def _l5_rename(x: Sequence[int]) -> tuple[int, ...]:
    x1, x2, x3, x4 = x
    return (-x1 - 2 * x3, -x2 - 2 * x3, x3, x4)


# The L5 table is printed with its first two parameters renamed and with the
# opposite composition order to the numeric tables (both found by calibration).
CONVENTIONS = {
    "L3": TableConvention(),
    "L4": TableConvention(),
    "L6": TableConvention(),
    "L7": TableConvention(),
    "L5": TableConvention(first="rho", rename=_l5_rename),
}


@dataclass(frozen=True)
class Cell:
    auto: str
    generator: int
    trans: tuple[str, ...]
    perm: tuple[int, ...]


@dataclass
class Table:
    family: str
    params: tuple[int, ...] | None  # None for a symbolic table
    cells: list[Cell]
    path: Path | None = None

    @property
    def n(self) -> int:
        return len(self.cells[0].perm)


def table_path(family: str, params: Sequence[int] | None, root: Path | None = None) -> Path:
    root = root or fixture_dir()
    name = f"{family.lower()}_symbolic.csv" if params is None else f"{family.lower()}_{params_tag(params)}.csv"
    return root / name


def read_table(path: Path, family: str, params: tuple[int, ...] | None) -> Table:
    if not path.exists():
        raise FixtureError(f"missing fixture file {path}")
    cells = []
    with open(path, newline="") as f:
        rows = csv.reader(f)
        header = next(rows)
        ncoords = len(header) - 3
        if header[:2] != ["auto", "generator"] or header[-1] != "perm" or ncoords < 2:
            raise ValueError(f"{path}: unexpected header {header}")
        for row in rows:
            if not row:
                continue
            perm = tuple(int(ch) for ch in row[-1])
            cells.append(Cell(row[0], int(row[1]), tuple(row[2:-1]), perm))
    return Table(family, params, cells, path)


def load_table(family: str, params: Sequence[int] | None = None, root: Path | None = None) -> Table:
    family = family.upper()
    p = None if params is None else tuple(params)
    return read_table(table_path(family, p, root), family, p)


def list_tables(family: str, root: Path | None = None) -> list[Table]:
    root = root or fixture_dir()
    fam = family.upper()
    out = []
    for path in sorted(root.glob(f"{fam.lower()}_*.csv")):
        tag = path.stem.split("_", 1)[1]
        params = None if tag == "symbolic" else parse_tag(tag)
        out.append(read_table(path, fam, params))
    return out


def write_table(table: Table, path: Path) -> None:
    with open(path, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["auto", "generator"] + [f"t{i}" for i in range(1, table.n + 1)] + ["perm"])
        for c in table.cells:
            w.writerow([c.auto, c.generator, *c.trans, "".join(map(str, c.perm))])


def compute_rows(family: str, params: Sequence[int], first: str = "gamma", n: int = 4) -> dict[str, tuple[AffineElem, ...]]:
    images = printed_images(MorphismSpec(family, n, tuple(params)))
    return {g.label(): apply_auto(g, images).images for g in table_autos(n, first)}


def generate_table(family: str, params: Sequence[int], first: str | None = None) -> Table:
    """The table the code produces, in the same layout as the fixtures."""
    conv = CONVENTIONS[family.upper()]
    rows = compute_rows(family.upper(), params, first or conv.first)
    cells = []
    for label in TABLE_ORDER:
        for gi, e in enumerate(rows[label], start=1):
            cells.append(Cell(label, gi, tuple(str(t) for t in e.trans), e.perm.images))
    return Table(family.upper(), tuple(params), cells)


@dataclass(frozen=True)
class Mismatch:
    auto: str
    generator: int
    expected: str
    got: str
    at: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"auto": self.auto, "generator": self.generator, "expected": self.expected, "got": self.got}
        if self.at is not None:
            out["at"] = list(self.at)
        return out


@dataclass
class TableReport:
    family: str
    params: tuple[int, ...] | None
    cells: int
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.cells > 0

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": None if self.params is None else list(self.params),
            "cells": self.cells,
            "ok": self.ok,
            "mismatches": [m.to_json() for m in self.mismatches],
        }


def _fmt(trans, perm) -> str:
    return f"[{', '.join(map(str, trans))}]{''.join(map(str, perm))}"


def _probe_points(nvars: int) -> list[tuple[int, ...]]:
    # Both sides are affine in the parameters, so agreement at the origin and the
    # unit vectors is agreement as affine forms; two extra points guard the parser.
    pts = [tuple([0] * nvars)]
    for i in range(nvars):
        v = [0] * nvars
        v[i] = 1
        pts.append(tuple(v))
    pts.append(tuple(range(2, 2 + nvars)))
    pts.append(tuple((-1) ** i * (3 + i) for i in range(nvars)))
    return pts


def compare_table(table: Table, first: str | None = None) -> TableReport:
    conv = CONVENTIONS[table.family]
    order = first or conv.first
    report = TableReport(table.family, table.params, len(table.cells))
    if table.params is not None:
        rows = compute_rows(table.family, table.params, order, table.n)
        for c in table.cells:
            got = rows[c.auto][c.generator - 1]
            want_t = tuple(int(t) for t in c.trans)
            if got.trans != want_t or got.perm.images != c.perm:
                report.mismatches.append(
                    Mismatch(c.auto, c.generator, _fmt(want_t, c.perm), _fmt(got.trans, got.perm.images))
                )
        return report
    nvars = max(max((i + 1 for i, a in enumerate(parse_linear(t, 9)[0]) if a), default=0) for c in table.cells for t in c.trans)
    seen: set[tuple[str, int]] = set()
    for x in _probe_points(nvars):
        rows = compute_rows(table.family, conv.literal_params(x), order, table.n)
        for c in table.cells:
            if (c.auto, c.generator) in seen:
                continue
            got = rows[c.auto][c.generator - 1]
            want_t = tuple(eval_linear(t, x) for t in c.trans)
            if got.trans != want_t or got.perm.images != c.perm:
                seen.add((c.auto, c.generator))
                report.mismatches.append(
                    Mismatch(c.auto, c.generator, _fmt(want_t, c.perm), _fmt(got.trans, got.perm.images), x)
                )
    return report


def check_family_tables(family: str, root: Path | None = None) -> list[TableReport]:
    tables = list_tables(family, root)
    if not tables:
        raise FixtureError(f"no fixture tables for {family} in {root or fixture_dir()}")
    return [compare_table(t) for t in tables]


def duplicate_id_rows(tables: Sequence[Table]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs of numeric tables whose identity rows coincide."""
    ids = {}
    out = []
    for t in tables:
        if t.params is None:
            continue
        key = tuple((c.trans, c.perm) for c in t.cells if c.auto == "id")
        if key in ids:
            out.append((ids[key], t.params))
        else:
            ids[key] = t.params
    return out

