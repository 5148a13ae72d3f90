"""The twelve acceptance criteria, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line; pytest prints them in a summary section,
and running this file directly prints them as well.
"""
import json
import sys
import time

import pytest

from artin_epi import checks

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run outside pytest
    ACCEPTANCE_LINES = []

CRITERIA = [
    (1, "relations hold for random family members", checks.criterion_relations, 5.0),
    (2, "two-parameter decision table", checks.criterion_yp_grid, 30.0),
    (3, "cubic-family decisions and listed tuples", checks.criterion_cubic, None),
    (4, "L5 decisions and kernel lattice", checks.criterion_l5, None),
    (5, "L2 kernel images vanish", checks.criterion_l2, None),
    (6, "automorphism table fidelity", checks.criterion_tables, None),
    (7, "automorphism calculus identities", checks.criterion_autos, 10.0),
    (8, "closed-form images", checks.criterion_closed_forms, None),
    (9, "determinant identities", checks.criterion_determinants, None),
    (10, "S_n classification", checks.criterion_sn, 60.0),
    (11, "rank-two classification", checks.criterion_a1, 120.0),
    (12, "linearity and parity", checks.criterion_parity, None),
]


def _run(number, title, fn, budget):
    t0 = time.perf_counter()
    out = fn()
    secs = time.perf_counter() - t0
    in_time = budget is None or secs < budget
    ok = out.status == checks.PASS and in_time
    note = "" if in_time else f" over budget {budget:.0f}s"
    line = f"CRITERION {number:2d} {'PASS' if ok else 'FAIL'}  {title} ({secs:.1f}s{note})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok, out, secs


@pytest.mark.parametrize("number,title,fn,budget", CRITERIA, ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, fn, budget):
    ok, out, secs = _run(number, title, fn, budget)
    assert ok, json.dumps(out.witness, default=str)[:2000]


if __name__ == "__main__":
    results = [_run(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
