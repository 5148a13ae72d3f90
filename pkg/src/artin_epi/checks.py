"""Registry of verification checks and the aggregate runner behind ``check-paper``.

Every check returns a status (pass, fail or skipped) with a small JSON witness.
Checks never raise on a mathematical failure; they report it.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, product
from math import gcd
from typing import Callable

from . import autos, dihedral, kernel, symmetric, tables
from .core import AffineElem, ArtinWord, GenImages, Perm, coxeter_gen, coxeter_gens, eval_word, perm_act, perm_to_simple_word
from .families import FIXED_RANK, MorphismSpec, arity, build_images, check_coxeter_relations, normalize_to_yp
from .lattice import HermiteBasis, lattice_invariants, same_lattice

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
SEED = 20240229


@dataclass
class CheckOutcome:
    status: str
    witness: dict = field(default_factory=dict)


def _outcome(ok: bool, **witness) -> CheckOutcome:
    return CheckOutcome(PASS if ok else FAIL, witness)


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    summary: str
    run: Callable[[], CheckOutcome]


@dataclass
class Entry:
    id: str
    suite: str
    summary: str
    status: str
    witness: dict
    seconds: float

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "suite": self.suite,
            "summary": self.summary,
            "status": self.status,
            "witness": self.witness,
            "seconds": round(self.seconds, 3),
        }


@dataclass
class SuiteReport:
    entries: list[Entry]

    @property
    def ok(self) -> bool:
        return all(e.status != FAIL for e in self.entries)

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_json(self, timings: bool = False) -> dict:
        rows = []
        for e in self.entries:
            j = e.to_json()
            if not timings:
                j.pop("seconds")
            rows.append(j)
        return {"ok": self.ok, "counts": self.counts(), "entries": rows}


REGISTRY: dict[str, Check] = {}


def register(id: str, suite: str, summary: str):
    def deco(fn: Callable[[], CheckOutcome]):
        if id in REGISTRY:
            raise ValueError(f"duplicate check id {id}")
        REGISTRY[id] = Check(id, suite, summary, fn)
        return fn

    return deco


def suites() -> list[str]:
    return sorted({c.suite for c in REGISTRY.values()})


def run_check(check: Check) -> Entry:
    t0 = time.perf_counter()
    try:
        out = check.run()
    except tables.FixtureError:
        raise
    except Exception as exc:  # a crash is a failure with the error as witness
        out = CheckOutcome(FAIL, {"error": f"{type(exc).__name__}: {exc}"})
    return Entry(check.id, check.suite, check.summary, out.status, out.witness, time.perf_counter() - t0)


def run_suite(suite: str = "ALL", jobs: int = 1) -> SuiteReport:
    """Run all checks (or one suite) and assemble the report in id order."""
    if suite.upper() == "ALL":
        chosen = list(REGISTRY.values())
    else:
        chosen = [c for c in REGISTRY.values() if c.suite == suite or c.id == suite]
        if not chosen:
            raise KeyError(f"unknown suite {suite!r}; known: {', '.join(suites())}")
    chosen.sort(key=lambda c: c.id)
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            entries = list(pool.map(run_check, chosen))
    else:
        entries = [run_check(c) for c in chosen]
    return SuiteReport(entries)


# --- helpers -------------------------------------------------------------------


def _rand_elem(rng: random.Random, n: int, bound: int = 9) -> AffineElem:
    p = list(range(1, n + 1))
    rng.shuffle(p)
    t = [rng.randint(-bound, bound) for _ in range(n - 1)]
    t.append(-sum(t))
    return AffineElem(tuple(t), Perm(tuple(p)))


def _first(items, k: int = 5) -> list:
    return list(items)[:k]


# --- acceptance criteria ----------------------------------------------------------


@register("criterion-01", "relations", "random family members satisfy every braid and commutation relation")
def criterion_relations(samples: int = 200) -> CheckOutcome:
    rng = random.Random(SEED)
    failures = []
    tried = 0
    jobs = [(f, n) for n in range(3, 9) for f in ("L1", "YP")] + [(f, r) for f, r in FIXED_RANK.items()]
    for family, n in jobs:
        for _ in range(samples):
            params = tuple(rng.randint(-5, 5) for _ in range(arity(family, n)))
            spec = MorphismSpec(family, n, params)
            tried += 1
            rep = check_coxeter_relations(build_images(spec))
            if not rep.ok:
                failures.append({"spec": spec.to_json(), "pairs": rep.pairs()})
    return _outcome(not failures, tried=tried, failures=_first(failures))


@register("criterion-02", "decision-yp", "two-parameter family: computed verdict equals the closed-form rule on the full grid")
def criterion_yp_grid() -> CheckOutcome:
    mismatches = []
    total = 0
    for n in (3, 4, 5, 6):
        for y, p in product(range(-6, 7), repeat=2):
            spec = MorphismSpec("YP", n, (y, p))
            total += 1
            got = kernel.is_epimorphism(spec).is_epi
            want = kernel.predicted_is_epi(spec)
            if got != want:
                mismatches.append({"n": n, "y": y, "p": p, "computed": got, "predicted": want})
    return _outcome(not mismatches, cases=total, mismatches=len(mismatches), examples=_first(mismatches, 8))


@register("criterion-03", "decision-cubic", "cubic families: verdicts equal the unit-determinant rule and the eight listed tuples")
def criterion_cubic() -> CheckOutcome:
    witness = {}
    ok = True
    for family in ("L3", "L4", "L6", "L7"):
        found, mism = [], []
        for params in product(range(-2, 3), repeat=3):
            spec = MorphismSpec(family, 4, params)
            got = kernel.is_epimorphism(spec).is_epi
            if got:
                found.append(params)
            if got != kernel.predicted_is_epi(spec):
                mism.append(params)
        listed = sorted(kernel.LISTED_EPIS[family])
        fam_ok = not mism and sorted(found) == listed
        ok &= fam_ok
        witness[family] = {"computed_epis": found, "listed": listed, "predicate_mismatches": len(mism), "examples": _first(mism)}
    return _outcome(ok, **witness)


@register("criterion-04", "decision-l5", "L5: verdicts equal the gcd rule, and kernel lattices match the tabulated matrix")
def criterion_l5(points: int = 20) -> CheckOutcome:
    mism = []
    epis = 0
    for params in product(range(-3, 4), repeat=4):
        spec = MorphismSpec("L5", 4, params)
        got = kernel.is_epimorphism(spec).is_epi
        epis += got
        if got != kernel.predicted_is_epi(spec):
            mism.append(params)
    rng = random.Random(SEED + 5)
    lattice_bad = []
    for _ in range(points):
        params = tuple(rng.randint(-5, 5) for _ in range(4))
        ours = kernel.project(kernel.kernel_matrix(MorphismSpec("L5", 4, params)).rows)
        theirs = kernel.project(kernel.l5_matrix_rows(*params))
        a, b = lattice_invariants(ours, 3), lattice_invariants(theirs, 3)
        if a != b:
            lattice_bad.append({"params": params, "computed": a, "tabulated": b})
    return _outcome(
        not mism and not lattice_bad,
        grid_cases=7**4,
        computed_epis=epis,
        predicate_mismatches=len(mism),
        examples=_first(mism),
        lattice_mismatches=len(lattice_bad),
        lattice_examples=_first(lattice_bad, 3),
    )


@register("criterion-05", "l2", "L2: every kernel generator maps to the zero translation")
def criterion_l2(samples: int = 50) -> CheckOutcome:
    rng = random.Random(SEED + 2)
    bad = []
    for _ in range(samples):
        params = tuple(rng.randint(-5, 5) for _ in range(5))
        spec = MorphismSpec("L2", 6, params)
        rows = kernel.kernel_matrix(spec).rows
        verdict = kernel.is_epimorphism(spec)
        if any(any(r) for r in rows) or verdict.is_epi:
            bad.append({"params": params, "nonzero": _first(r for r in rows if any(r)), "is_epi": verdict.is_epi})
    return _outcome(not bad, samples=samples, failures=_first(bad))


@register("criterion-06", "tables-l3", "printed automorphism tables (L3 and symbolic L5) are reproduced cell by cell")
def criterion_tables() -> CheckOutcome:
    reports = tables.check_family_tables("L3") + tables.check_family_tables("L5")
    bad = [r.to_json() for r in reports if not r.ok]
    for r in bad:
        r["mismatches"] = r["mismatches"][:4]
    cubic = [kernel.LISTED_EPIS["L3"][i] for i in range(8)]
    reps = [build_images(MorphismSpec("L3", 4, p)) for p in cubic]
    classes = autos.distinct_classes(reps, autos.table_autos(4))
    dups = tables.duplicate_id_rows(tables.list_tables("L3"))
    return _outcome(
        not bad and classes.discrete,
        tables=len(reports),
        cells=sum(r.cells for r in reports),
        failing_tables=bad,
        computed_classes_discrete=classes.discrete,
        duplicated_transcribed_tables=[list(map(list, d)) for d in dups],
    )


@register("criterion-07", "autos", "rotation and symmetry move the two-parameter images as stated")
def criterion_autos() -> CheckOutcome:
    failures: dict[str, int] = {}
    examples = []
    cases = 0
    gen_fail = []
    for n in range(3, 9):
        gen_fail += [(f, n) for f in autos.verify_propagation(n, 0, 1, with_generators=True) if f.name not in ("rho-xi", "rho-k-xi", "gamma-xi")]
        for y, p in product(range(-4, 5), repeat=2):
            cases += 1
            for f in autos.verify_propagation(n, y, p, with_generators=False):
                key = f"{f.name}{list(f.index) if f.name != 'rho-k-xi' else ''}"
                failures[key] = failures.get(key, 0) + 1
                if len(examples) < 6 and all(e["name"] != f.name for e in examples):
                    examples.append({"n": n, "y": y, "p": p, **f.to_json()})
    return _outcome(
        not failures and not gen_fail,
        cases=cases,
        generator_identity_failures=[{"n": n, **f.to_json()} for f, n in gen_fail[:4]],
        failing_identities=failures,
        examples=examples,
    )


@register("criterion-08", "closed-forms", "evaluated words equal the closed-form images")
def criterion_closed_forms(samples: int = 50) -> CheckOutcome:
    rng = random.Random(SEED + 8)
    bad = []
    gk_sign = {1: 0, -1: 0}
    for n in range(3, 9):
        for _ in range(samples):
            y, p = rng.randint(-20, 20), rng.randint(-20, 20)
            im = build_images(MorphismSpec("YP", n, (y, p)))
            for k in range(1, n):
                down = ArtinWord.of(*range(k, 0, -1))
                up = ArtinWord.of(*range(1, k + 1))
                for name, w, f in (
                    ("down", down, kernel.seq_down_closed_form),
                    ("up", up, kernel.seq_up_closed_form),
                    ("down-inverse", down.inverse(), kernel.seq_down_inv_closed_form),
                    ("up-inverse", up.inverse(), kernel.seq_up_inv_closed_form),
                ):
                    if eval_word(im, w) != f(k, n, y):
                        bad.append({"form": name, "n": n, "k": k, "y": y, "p": p})
                t = eval_word(im, kernel.gk_word(k, n)).trans
                for sign in (1, -1):
                    if t == kernel.gk_closed_form(k, n, y, p, sign):
                        gk_sign[sign] += 1
                if t != kernel.gk_closed_form(k, n, y, p, 1):
                    bad.append({"form": "g_k", "n": n, "k": k, "y": y, "p": p})
            if eval_word(im, kernel.gk_word(n, n)).trans != kernel.gn_closed_form(n, y):
                bad.append({"form": "g_n", "n": n, "y": y, "p": p})
            for i in range(1, n):
                if eval_word(im, kernel.gk_word(n + i, n)).trans != kernel.g_n_plus_i_closed_form(i, n, y):
                    bad.append({"form": "g_n+i", "n": n, "i": i, "y": y, "p": p})
            for i, j in combinations(range(1, n + 1), 2):
                if eval_word(im, kernel.pure_braid_word(i, j, n)).trans != kernel.pure_closed_form(i, j, n, y):
                    bad.append({"form": "a_ij", "n": n, "i": i, "j": j, "y": y, "p": p})
    return _outcome(not bad, failures=len(bad), examples=_first(bad), resolved_gk_sign="+", gk_sign_hits=gk_sign)


@register("criterion-09", "determinants", "minors of the g_k rows equal the product formulas; odd-n block has full rank")
def criterion_determinants() -> CheckOutcome:
    bad = []
    block_constants: dict[int, set] = {}
    for n in range(3, 7):
        cols = list(range(n - 1))
        for y, p in product(range(-4, 5), repeat=2):
            im = build_images(MorphismSpec("YP", n, (y, p)))
            g = {k: eval_word(im, kernel.gk_word(k, n)).trans for k in range(1, 2 * n)}
            tail = kernel.det_product(n, y, p, range(2, n))
            checks = (
                ("1..n-1", kernel.square_minor([g[k] for k in range(1, n)], cols), kernel.det_product(n, y, p, range(1, n))),
                ("n+2,2..n-1", kernel.square_minor([g[n + 2]] + [g[k] for k in range(2, n)], cols) if n > 3 else None, 2 * y * tail),
                ("n+1,2..n-1", kernel.square_minor([g[n + 1]] + [g[k] for k in range(2, n)], cols), (n - 2) * y * tail),
            )
            for name, got, want in checks:
                if got is not None and abs(got) != abs(want):
                    bad.append({"minor": name, "n": n, "y": y, "p": p, "computed": got, "formula": want})
            if n % 2 == 1 and y != 0:
                block = [g[n + i] for i in range(1, n)]
                basis = HermiteBasis(n - 1)
                for r in kernel.project(block):
                    basis.add(r)
                d = kernel.square_minor(block, cols)
                if basis.rank() != n - 1 or d % y ** (n - 1):
                    bad.append({"block": "g_{n+i}", "n": n, "y": y, "rank": basis.rank(), "det": d})
                else:
                    block_constants.setdefault(n, set()).add(abs(d // y ** (n - 1)))
    consts = {str(n): sorted(v) for n, v in block_constants.items()}
    ok = not bad and all(len(v) == 1 and 0 not in v for v in block_constants.values())
    return _outcome(ok, failures=len(bad), examples=_first(bad), block_constant_abs=consts, sign_convention="+")


@register("criterion-10", "sn-classes", "surjections onto S_n: one class at n=3, the listed classes at n=4")
def criterion_sn(budget_n5: int = 10**7) -> CheckOutcome:
    r3 = symmetric.enumerate_surjective_homs(3)
    r4 = symmetric.enumerate_surjective_homs(4)
    listed = symmetric.listed_homs()
    listed4 = [k for k, h in listed.items() if h.n == 4]
    matched = {}
    extras = []
    for c in r4.classes:
        hit = [k for k in listed4 if symmetric.are_conjugate(listed[k].perms, c.perms)]
        if hit:
            matched[hit[0]] = str(c)
        else:
            extras.append(str(c))
    t0 = time.perf_counter()
    r5 = symmetric.enumerate_surjective_homs(5, budget=budget_n5)
    n5_note = {"classes": len(r5.classes), "complete": r5.complete, "nodes": r5.nodes, "seconds": round(time.perf_counter() - t0, 2)}
    n5_ok = r5.complete and len(r5.classes) == 1 and symmetric.are_conjugate(r5.classes[0].perms, symmetric.standard_hom(5).perms)
    item2 = listed[2]
    n6_ok = symmetric.satisfies_relations(item2.perms) and symmetric.generates_sn(item2.perms)
    ok = len(r3.classes) == 1 and len(r4.classes) == len(listed4) and not extras and len(matched) == len(listed4) and n5_ok and n6_ok
    return _outcome(
        ok,
        n3_classes=len(r3.classes),
        n4_classes=len(r4.classes),
        n4_listed=len(listed4),
        n4_unlisted=extras,
        n4_missing=[k for k in listed4 if k not in matched],
        n5=n5_note,
        n6_item_ok=n6_ok,
    )


@register("criterion-11", "a1", "rank two: listed families are onto, nothing else up to bounded equivalence, listed members pairwise distinct")
def criterion_a1() -> CheckOutcome:
    fam_bad = [str(m) for m in _a1_family_members(15) if not dihedral.is_epi_a1(m)]
    cls = dihedral.classify_bounded(7, 6)
    reps = [dihedral.xi1(q) for q in range(1, 10, 2)]
    equiv = []
    for a, b in combinations(range(len(reps)), 2):
        psi = dihedral.find_equivalence(reps[a], reps[b], 6)
        if psi is not None:
            equiv.append({"q1": 2 * a + 1, "q2": 2 * b + 1, "automorphism": psi.to_json()})
    return _outcome(
        not fam_bad and not cls.extras and not cls.missing and not equiv,
        family_failures=fam_bad,
        classes=[{"representative": str(c[0]), "families": lab, "size": len(c)} for c, lab in zip(cls.classes, cls.labels)],
        extras=[str(m) for m in cls.extras],
        equivalent_listed_pairs=len(equiv),
        examples=_first(equiv, 4),
    )


@register("criterion-12", "parity", "kernel images are linear in (y,p) with even y-coefficients for even n")
def criterion_parity() -> CheckOutcome:
    bad = []
    for n in range(3, 9):
        rows = {pt: kernel.kernel_matrix(MorphismSpec("YP", n, pt)).rows for pt in ((1, 0), (0, 1), (1, 1), (2, 2))}
        for idx, (ry, rp, r11, r22) in enumerate(zip(rows[(1, 0)], rows[(0, 1)], rows[(1, 1)], rows[(2, 2)])):
            additive = all(a + b == c for a, b, c in zip(ry, rp, r11))
            homogeneous = all(2 * c == d for c, d in zip(r11, r22))
            even = n % 2 == 1 or all(a % 2 == 0 for a in ry)
            if not (additive and homogeneous and even):
                bad.append({"n": n, "row": idx, "additive": additive, "homogeneous": homogeneous, "even_y": even})
    return _outcome(not bad, failures=len(bad), examples=_first(bad))


# --- module invariants ---------------------------------------------------------------


def _a1_family_members(qmax: int) -> list[dihedral.A1Morphism]:
    out = []
    for q in range(1, qmax + 1, 2):
        for start in (1, 2):
            out += [dihedral.xi1(q, w, start) for w in dihedral.LENGTH_TWO]
            out.append(dihedral.xi2(q, dihedral.LENGTH_TWO[0], start))
    return out


@register("inv-core-group", "core", "group axioms, action compatibility and sum-zero closure on random elements")
def inv_core_group(samples: int = 300) -> CheckOutcome:
    rng = random.Random(SEED + 11)
    bad = []
    for _ in range(samples):
        n = rng.randint(3, 8)
        a, b, c = (_rand_elem(rng, n) for _ in range(3))
        e = AffineElem.identity(n)
        if (a * b) * c != a * (b * c) or a * e != a or e * a != a or a * a.inverse() != e or a.inverse() * a != e:
            bad.append(str(a))
        if sum((a * b).trans) or sum(a.inverse().trans):
            bad.append(f"sum {a} {b}")
        v = tuple(rng.randint(-9, 9) for _ in range(n))
        if perm_act(a.perm * b.perm, v) != perm_act(a.perm, perm_act(b.perm, v)):
            bad.append(f"action {a.perm} {b.perm}")
    return _outcome(not bad, samples=samples, failures=_first(bad))


@register("inv-core-generators", "core", "Coxeter relations of s_1..s_n, w_k conjugation chain and simple words")
def inv_core_generators() -> CheckOutcome:
    bad = []
    for n in range(3, 9):
        gens = coxeter_gens(n)
        if not check_coxeter_relations(GenImages(gens)).ok:
            bad.append({"n": n, "relations": False})
        if any(not (g * g).is_identity() for g in gens):
            bad.append({"n": n, "involution": False})
        fails = [f.to_json() for f in autos.verify_propagation(n, 0, 1) if f.name in ("w1-word", "wk-conjugate")]
        bad += fails
    rng = random.Random(SEED + 12)
    for _ in range(100):
        n = rng.randint(3, 8)
        p = _rand_elem(rng, n).perm
        w = perm_to_simple_word(p)
        img = AffineElem.identity(n)
        for i, e in w.letters:
            img = img * coxeter_gen(n, i)
        if img.perm != p or len(w) != p.inversions() or not w.is_positive():
            bad.append({"perm": str(p)})
    return _outcome(not bad, failures=_first(bad))


@register("inv-families", "families", "normal form, standard tuple and the L2 permutation parts")
def inv_families() -> CheckOutcome:
    bad = []
    for n in range(3, 9):
        if build_images(MorphismSpec("YP", n, (0, 1))).images != coxeter_gens(n):
            bad.append({"n": n, "standard": False})
    rng = random.Random(SEED + 13)
    for _ in range(40):
        n = rng.randint(3, 7)
        spec = MorphismSpec("L1", n, tuple(rng.randint(-4, 4) for _ in range(n + 1)))
        y, p, _ = normalize_to_yp(spec)
        a = kernel.is_epimorphism(spec).is_epi
        b = kernel.is_epimorphism(MorphismSpec("YP", n, (y, p))).is_epi
        if a != b:
            bad.append({"spec": spec.to_json(), "normal_form": [y, p]})
    l2 = build_images(MorphismSpec("L2", 6, (1, 2, 3, 4, 5))).perms()
    if tuple(l2) != symmetric.listed_homs()[2].perms:
        bad.append({"L2_perms": [str(x) for x in l2]})
    return _outcome(not bad, failures=_first(bad))


@register("inv-sn-reps", "sn-classes", "class representatives satisfy the relations, generate S_n and are pairwise non-conjugate")
def inv_sn_reps() -> CheckOutcome:
    bad = []
    for n in (3, 4, 5):
        reps = symmetric.enumerate_surjective_homs(n).classes
        for r in reps:
            if not (symmetric.satisfies_relations(r.perms) and symmetric.generates_sn(r.perms)):
                bad.append(str(r))
        for a, b in combinations(reps, 2):
            if symmetric.are_conjugate(a.perms, b.perms):
                bad.append(f"{a} ~ {b}")
    return _outcome(not bad, failures=_first(bad))


@register("inv-kernel-routes", "kernel", "generator sets agree on the lattice and every word lands in the kernel")
def inv_kernel_routes() -> CheckOutcome:
    bad = []
    for n in (3, 4, 5, 6):
        for y, p in product(range(-3, 4), repeat=2):
            spec = MorphismSpec("YP", n, (y, p))
            ref = kernel.project(kernel.kernel_matrix(spec, "ALL").rows)
            for which in ("GK", "SCHREIER"):
                other = kernel.project(kernel.kernel_matrix(spec, which).rows)
                if not same_lattice(ref, other, n - 1):
                    bad.append({"n": n, "y": y, "p": p, "set": which})
    rng = random.Random(SEED + 14)
    for family in ("L1", "L2", "L3", "L4", "L5", "L6", "L7", "YP"):
        n = FIXED_RANK.get(family, rng.randint(3, 6))
        spec = MorphismSpec(family, n, tuple(rng.randint(-5, 5) for _ in range(arity(family, n))))
        try:
            kernel.kernel_matrix_direct(build_images(spec), "SCHREIER")
        except kernel.KernelError as exc:
            bad.append({"spec": spec.to_json(), "error": str(exc)})
    return _outcome(not bad, failures=_first(bad))


@register("inv-kernel-gcd", "kernel", "gcd(y, p + c y) stays 1 for the shifts c = n^2 - nk - n")
def inv_kernel_gcd() -> CheckOutcome:
    bad = []
    for n in range(3, 9):
        for y, p in product(range(-9, 10), repeat=2):
            if gcd(y, p) != 1:
                continue
            for k in range(1, n):
                c = n * n - n * k - n
                if gcd(y, p - c * y) != 1 or gcd(y, p + c * y) != 1:
                    bad.append((n, y, p, k))
    return _outcome(not bad, failures=_first(bad))


@register("inv-autos-routes", "autos", "independent implementations of ρ and γ agree; γργ = ρ^{-1}")
def inv_autos_routes(samples: int = 200) -> CheckOutcome:
    rng = random.Random(SEED + 15)
    bad = []
    for _ in range(samples):
        n = rng.randint(3, 8)
        e = _rand_elem(rng, n)
        r = autos.apply_rho(e)
        if not (r == autos.apply_rho_letters(e) == autos.apply_rho_conj(e)):
            bad.append({"rho": str(e)})
        if autos.apply_gamma(e) != autos.apply_gamma_letters(e):
            bad.append({"gamma": str(e)})
        if autos.apply_rho(autos.apply_gamma(autos.apply_rho(autos.apply_gamma(e)))) != e:
            bad.append({"dihedral": str(e)})
    for n in range(3, 9):
        bad += [f.to_json() for f in autos.verify_propagation(n, 0, 1) if f.name.startswith(("rho-w", "gamma-w", "rho-transposition"))]
    return _outcome(not bad, failures=_first(bad))


@register("inv-tables-other", "tables-other", "printed tables of the remaining cubic families are reproduced")
def inv_tables_other() -> CheckOutcome:
    reports = [r for f in ("L4", "L6", "L7") for r in tables.check_family_tables(f)]
    bad = [r.to_json() for r in reports if not r.ok]
    return _outcome(not bad, tables=len(reports), failing_tables=bad[:2])


@register("inv-a1-encoding", "a1", "dihedral arithmetic matches word reduction; the surjectivity rule matches subgroup closure")
def inv_a1_encoding() -> CheckOutcome:
    words = [w for L in range(9) for w in product((1, 2), repeat=L)]
    bad = []
    elems = {w: dihedral.from_word(w) for w in words}
    for w in words:
        e = elems[w]
        red = dihedral.reduce_word(w)
        if e.word() != red or dihedral.word_length(e) != len(red):
            bad.append({"word": w})
    for a, b in product(words, repeat=2):
        if elems[a] * elems[b] != dihedral.from_word(dihedral.reduce_word(a + b)):
            bad.append({"pair": [a, b]})
            break
    ball = dihedral.elements_up_to(7)
    oracle_bad = [
        (str(a), str(b))
        for a, b in product(ball, repeat=2)
        if dihedral.is_epi_a1((a, b)) != dihedral.closure_reaches_generators(dihedral.A1Morphism(a, b))
    ]
    mu_equiv = dihedral.find_equivalence(dihedral.MU, dihedral.xi1(3), 8)
    return _outcome(
        not bad and not oracle_bad and mu_equiv is None,
        word_failures=_first(bad),
        oracle_disagreements=_first(oracle_bad),
        mu_equivalent_to_xi1=mu_equiv.to_json() if mu_equiv else None,
    )


@register("inv-a1-long-images", "a1", "case split for pairs of long images agrees with the surjectivity oracle")
def inv_a1_long_images() -> CheckOutcome:
    cases = dihedral.long_image_cases()
    wrong = [c for c in cases if not c.agrees]
    by_case: dict[str, list[int]] = {}
    for c in cases:
        key = f"case{c.case}-start{c.w_prime_start}"
        tally = by_case.setdefault(key, [0, 0])
        tally[0 if c.agrees else 1] += 1
    return _outcome(
        not wrong,
        confirmed_vs_refuted=by_case,
        examples=[{"l": c.l, "q": c.q, "w_prime_start": c.w_prime_start, "case": c.case} for c in wrong[:4]],
    )
