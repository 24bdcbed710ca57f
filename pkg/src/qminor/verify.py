"""Verification harness: residual checks, golden fixtures and exhaustive sweeps."""

from __future__ import annotations

import json
import os
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

from .commutation import Relation, VerificationError, commute, gl_less, relation_residual
from .laurent import ONE, QDIFF, QINV, ZERO, LaurentPoly
from .minors import MinorSpec, minors_of_size_all, parse_minor
from .tensor import Tensor

__all__ = [
    "VerifyReport",
    "verify_relation",
    "q1_check",
    "descent_check",
    "SweepConfig",
    "SweepSummary",
    "sweep",
    "FIXTURES",
    "check_fixture",
    "run_fixtures",
    "default_jobs",
]


@dataclass
class VerifyReport:
    ok: bool
    residual: Tensor

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {"ok": self.ok, "residual": str(self.residual)}


def verify_relation(rel: Relation, n: int | None = None) -> VerifyReport:
    """Expand both sides with row minors and reduce the difference to normal form."""
    if n is not None:
        used = [x for m in rel.lead for x in m.rows + m.cols]
        used += [x for _, l, r in rel.terms for x in l.rows + l.cols + r.rows + r.cols]
        if max(used) > n:
            raise ValueError(f"relation uses indices beyond n={n}")
    residual = relation_residual(rel)
    return VerifyReport(residual.is_zero(), residual)


def q1_check(rel: Relation) -> bool:
    """At q = 1 the lead and reversed coefficients are 1 and every correction vanishes."""
    if rel.lead_coef.eval_at_one() != 1:
        return False
    if rel.reversed_coef.eval_at_one() != 1:
        return False
    return all(c.eval_at_one() == 0 for c, _, _ in rel.corrections())


def descent_check(rel: Relation) -> bool:
    """Every correction term's left minor lies strictly below [I, J] in the GL order."""
    a, b = rel.lead
    if a.key == b.key:
        return True
    return all(gl_less(left, b) for _, left, _ in rel.corrections())


# golden relations, coefficients written with (q^-1 - q), q, q^-1
def _m(text: str) -> MinorSpec:
    return parse_minor(text)


FIXTURES: dict[str, dict] = {
    "disjoint": {
        "n": 4,
        "lead": ("[3 4|1 3]", "[1 2|2 4]"),
        "lead_coef": ONE,
        "terms": [
            (ONE, "[1 2|2 4]", "[3 4|1 3]"),
            (-QDIFF, "[1 2|3 4]", "[3 4|1 2]"),
        ],
    },
    "two-level": {
        "n": 4,
        "lead": ("[3 4|3 4]", "[1 2|1 2]"),
        "lead_coef": ONE,
        "terms": [
            (ONE, "[1 2|1 2]", "[3 4|3 4]"),
            (-QDIFF, "[1 2|1 3]", "[3 4|2 4]"),
            (QDIFF * QINV, "[1 2|2 3]", "[3 4|1 4]"),
            (QDIFF * QINV, "[1 2|1 4]", "[3 4|2 3]"),
            (-QDIFF * QINV**2, "[1 2|2 4]", "[3 4|1 3]"),
            (QDIFF**2 * (ONE + QINV**2), "[1 2|3 4]", "[3 4|1 2]"),
        ],
    },
    "shared-column": {
        "n": 4,
        "lead": ("[3 4|2 3]", "[1 2|1 3]"),
        "lead_coef": QINV,
        "terms": [
            (ONE, "[1 2|1 3]", "[3 4|2 3]"),
            (-QDIFF, "[1 2|2 3]", "[3 4|1 3]"),
        ],
    },
    "signed": {
        "n": 4,
        "lead": ("[2 3|1 3]", "[1 4|2 4]"),
        "lead_coef": ONE,
        "terms": [
            (ONE, "[1 4|2 4]", "[2 3|1 3]"),
            (QDIFF, "[1 3|2 4]", "[2 4|1 3]"),
            (-QDIFF * QINV, "[1 2|2 4]", "[3 4|1 3]"),
            (-QDIFF, "[1 4|3 4]", "[2 3|1 2]"),
            (QDIFF**2, "[1 2|2 4]", "[3 4|1 3]"),
            (-(QDIFF**2), "[1 3|3 4]", "[2 4|1 2]"),
            (QDIFF**2 * QINV, "[1 2|3 4]", "[3 4|1 2]"),
            (-(QDIFF**3), "[1 2|3 4]", "[3 4|1 2]"),
        ],
    },
    "shared-3x3": {
        "n": 5,
        "lead": ("[3 4 5|1 3 4]", "[1 2 3|1 2 5]"),
        "lead_coef": ONE,
        "terms": [
            (ONE, "[1 2 3|1 2 5]", "[3 4 5|1 3 4]"),
            (-QDIFF, "[1 2 3|1 3 5]", "[3 4 5|1 2 4]"),
            (QDIFF * QINV, "[1 2 3|1 4 5]", "[3 4 5|1 2 3]"),
        ],
    },
}


def fixture_relation(name: str) -> Relation:
    """The golden relation with repeated products collated."""
    fx = FIXTURES[name]
    coll: dict[tuple, LaurentPoly] = {}
    order = []
    for c, l, r in fx["terms"]:
        key = (_m(l), _m(r))
        if key not in coll:
            order.append(key)
        coll[key] = coll.get(key, ZERO) + c
    terms = [(coll[k], k[0], k[1]) for k in order if coll[k]]
    return Relation(fx["n"], fx["lead_coef"], (_m(fx["lead"][0]), _m(fx["lead"][1])), terms, case="")


def _as_map(rel: Relation) -> dict:
    out: dict[tuple, LaurentPoly] = {}
    for c, l, r in rel.terms:
        out[(l.key, r.key)] = out.get((l.key, r.key), ZERO) + c
    return {k: v for k, v in out.items() if v}


@dataclass
class FixtureResult:
    name: str
    golden_verified: bool
    generated_verified: bool
    exact_match: bool
    seconds: float
    generated: Relation | None = None
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.golden_verified and self.generated_verified and self.exact_match


def check_fixture(name: str) -> FixtureResult:
    gold = fixture_relation(name)
    start = time.perf_counter()
    try:
        gen = commute(gold.lead[0], gold.lead[1], gold.n)
        gen_ok = gen.verified
    except VerificationError:
        gen, gen_ok = None, False
    elapsed = time.perf_counter() - start
    gold_ok = verify_relation(gold, gold.n).ok
    mismatches = []
    if gen is not None:
        # compare after scaling both to the same lead coefficient
        gm, em = _as_map(gold), _as_map(gen)
        same_lead = gold.lead_coef == gen.lead_coef
        if not same_lead:
            mismatches.append(("lead_coef", str(gold.lead_coef), str(gen.lead_coef)))
        for k in sorted(set(gm) | set(em)):
            if gm.get(k, ZERO) != em.get(k, ZERO):
                mismatches.append((k, str(gm.get(k, ZERO)), str(em.get(k, ZERO))))
    return FixtureResult(name, gold_ok, gen_ok, gen is not None and not mismatches, elapsed, gen, mismatches)


def run_fixtures() -> list[FixtureResult]:
    return [check_fixture(name) for name in FIXTURES]


# sweeps


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QMINOR_JOBS", "")))
    except ValueError:
        return os.cpu_count() or 1


@dataclass
class SweepConfig:
    n: int
    max_size: int
    case_filter: str | None = None
    jobs: int | None = None
    output: str | None = None
    ceiling: int = 5
    check_q1: bool = True
    check_descent: bool = True

    def __post_init__(self):
        if not 1 <= self.n <= self.ceiling:
            raise ValueError(f"n must lie in 1..{self.ceiling}")
        if not 1 <= self.max_size <= self.n:
            raise ValueError("max_size must lie in 1..n")


@dataclass
class SweepSummary:
    total: int
    passed: int
    failed: int
    histogram: dict[str, int]
    q1_failures: int
    descent_failures: int
    seconds: float
    failures: list[dict]

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.q1_failures == 0 and self.descent_failures == 0

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "histogram": self.histogram,
            "q1_failures": self.q1_failures,
            "descent_failures": self.descent_failures,
            "seconds": round(self.seconds, 3),
            "ok": self.ok,
        }


def sweep_pairs(n: int, max_size: int) -> list[tuple[MinorSpec, MinorSpec]]:
    """Every ordered pair of sorted minors with sizes 1..max_size (equal and ascending pairs included)."""
    ms = minors_of_size_all(n, max_size)
    return [(a, b) for a in ms for b in ms]


def _run_one(args) -> dict:
    a, b, n, q1, desc = args
    rec = {"lhs": str(a), "rhs": str(b)}
    try:
        rel = commute(a, b, n, verify=False)
    except Exception as exc:  # noqa: BLE001 - reported, not raised
        rec.update(ok=False, error=f"{type(exc).__name__}: {exc}")
        return rec
    rep = verify_relation(rel)
    rec.update(
        ok=rep.ok,
        case=rel.case,
        swapped=rel.swapped,
        terms=len(rel.terms),
        q1=q1_check(rel) if q1 else None,
        descent=descent_check(rel) if desc else None,
    )
    if not rep.ok:
        rec["residual"] = str(rep.residual)
    return rec


def _chunks(n_items: int, jobs: int) -> int:
    return max(1, n_items // (jobs * 8))


def sweep(cfg: SweepConfig, pairs: Iterable[tuple[MinorSpec, MinorSpec]] | None = None) -> SweepSummary:
    """Run commute + verify over every pair; records come back in input order."""
    start = time.perf_counter()
    pairs = list(pairs) if pairs is not None else sweep_pairs(cfg.n, cfg.max_size)
    tasks = [(a, b, cfg.n, cfg.check_q1, cfg.check_descent) for a, b in pairs]
    jobs = cfg.jobs or default_jobs()
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_run_one, tasks, chunksize=_chunks(len(tasks), jobs)))
    else:
        records = [_run_one(t) for t in tasks]
    if cfg.case_filter:
        records = [r for r in records if r.get("case") == cfg.case_filter]
    hist = Counter(r.get("case", "error") for r in records)
    failures = [r for r in records if not r["ok"]]
    summary = SweepSummary(
        total=len(records),
        passed=len(records) - len(failures),
        failed=len(failures),
        histogram=dict(sorted(hist.items())),
        q1_failures=sum(1 for r in records if r.get("q1") is False),
        descent_failures=sum(1 for r in records if r.get("descent") is False),
        seconds=time.perf_counter() - start,
        failures=failures,
    )
    if cfg.output:
        with open(cfg.output, "w") as fh:
            for r in records:
                fh.write(json.dumps(r) + "\n")
            fh.write(json.dumps({"summary": summary.to_dict()}) + "\n")
    return summary
