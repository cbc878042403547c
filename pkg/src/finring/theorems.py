"""Instance checks of the stable-range/lifting/unique-generation results.

Every check consumes predicates computed independently by
:mod:`finring.properties`; no verdict is derived from another, so each
equivalence is a real cross-check between deciders.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from . import properties as P
from .ring import FiniteRing, RingError
from .specs import SpecError, construct, load_spec
from .subsets import unit_mask

DEFAULT_BUDGET = 30.0
BUDGET_ENV = "FINRING_TIME_BUDGET"

CONSISTENT = "consistent"
DISCREPANCY = "discrepancy"
SKIPPED = "skipped"

CHECKS = ("vasershtein", "lifting_implies_df", "theorem3", "theorem5", "remark6")


def default_budget() -> float:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV} must be a number of seconds, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"{BUDGET_ENV} must be positive")
    return value


@dataclass
class Verdict:
    check: str
    status: str
    details: dict = field(default_factory=dict)

    @property
    def consistent(self):
        return self.status == CONSISTENT

    def to_dict(self):
        return {"check": self.check, "status": self.status, "details": self.details}


def property_vector(R: FiniteRing) -> dict:
    """Every decider on both sides, keyed ``name`` or ``name[side]``."""
    out = {
        "directly_finite": P.directly_finite(R),
        "stable_range_one": P.stable_range_one(R),
    }
    for name in ("unit_lifting", "quasi_morphic", "principal_are_annihilators",
                 "uniquely_generated"):
        fn = P.ALL_PROPERTIES[name][0]
        for side in ("left", "right"):
            out[f"{name}[{side}]"] = fn(R, side)
    return out


def _props(R, props):
    return props if props is not None else property_vector(R)


def _witness(res):
    return res.to_dict()


def check_vasershtein(R: FiniteRing, deadline: float | None = None) -> Verdict:
    """Sweep all (a, b, c, x); where ab + c = 1 and a + cx is a unit, transfer to y.

    `deadline` is a ``time.perf_counter()`` value; past it the sweep stops and
    the verdict is skipped.
    """
    n = R.order
    A, M = R.add.astype(np.intp), R.mul.astype(np.intp)
    U = unit_mask(R)
    premises = 0
    solved = {}
    failures = []
    for a in range(n):
        if deadline is not None and time.perf_counter() > deadline:
            return Verdict("vasershtein", SKIPPED, {
                "reason": "time budget exhausted mid-sweep",
                "tuples_examined": a * n**3,
                "failure_count": len(failures),
            })
        # ok_bc[b, c]: a*b + c = 1
        ok_bc = A[M[a][:, None], np.arange(n)[None, :]] == R.one
        # unit_cx[c, x]: a + c*x is a unit
        unit_cx = U[A[a][M]]
        hits = ok_bc[:, :, None] & unit_cx[None, :, :]
        premises += int(hits.sum())
        for b, c in zip(*np.nonzero(hits.any(axis=2))):
            b, c = int(b), int(c)
            if (b, c) in solved:
                continue
            x = int(np.flatnonzero(unit_cx[c])[0])
            try:
                solved[(b, c)] = P.vasershtein_transfer(R, a, b, c, x)
            except P.TheoremDiscrepancy:
                solved[(b, c)] = None
                failures.append({"a": a, "b": b, "c": c, "x": x})
    details = {
        "tuples_examined": n**4,
        "premises_satisfied": premises,
        "distinct_bc": len(solved),
        "failures": failures[:10],
        "failure_count": len(failures),
    }
    return Verdict("vasershtein", DISCREPANCY if failures else CONSISTENT, details)


def check_lifting_implies_df(R: FiniteRing, props=None) -> Verdict:
    props = _props(R, props)
    df = props["directly_finite"]
    bad = {}
    for side in ("left", "right"):
        lift = props[f"unit_lifting[{side}]"]
        if lift.holds and not df.holds:
            bad[side] = {"unit_lifting": _witness(lift), "directly_finite": _witness(df)}
    details = {"directly_finite": df.holds,
               "unit_lifting_left": props["unit_lifting[left]"].holds,
               "unit_lifting_right": props["unit_lifting[right]"].holds}
    if bad:
        details["violations"] = bad
    return Verdict("lifting_implies_df", DISCREPANCY if bad else CONSISTENT, details)


def check_theorem3(R: FiniteRing, props=None) -> Verdict:
    """Stable range one, left lifting and right lifting agree."""
    props = _props(R, props)
    trio = {k: props[k] for k in ("stable_range_one", "unit_lifting[left]", "unit_lifting[right]")}
    values = {k: v.holds for k, v in trio.items()}
    details = dict(values)
    if len(set(values.values())) > 1:
        details["witnesses"] = {k: _witness(v) for k, v in trio.items() if not v.holds}
        return Verdict("theorem3", DISCREPANCY, details)
    return Verdict("theorem3", CONSISTENT, details)


def check_theorem5(R: FiniteRing, props=None) -> Verdict:
    """Under "principal left ideals are left annihilators", UG-left iff SR1.

    SR1 implies UG on both sides with no hypothesis.
    """
    props = _props(R, props)
    pa = props["principal_are_annihilators[left]"]
    sr1 = props["stable_range_one"]
    ugl, ugr = props["uniquely_generated[left]"], props["uniquely_generated[right]"]
    details = {
        "principal_are_annihilators_left": pa.holds,
        "quasi_morphic_left": props["quasi_morphic[left]"].holds,
        "stable_range_one": sr1.holds,
        "uniquely_generated_left": ugl.holds,
        "uniquely_generated_right": ugr.holds,
        "conditional_part": "checked" if pa.holds else "vacuous",
    }
    problems = []
    if pa.holds and ugl.holds != sr1.holds:
        problems.append({"claim": "UG-left iff SR1",
                         "witnesses": [_witness(r) for r in (sr1, ugl) if not r.holds]})
    for r in (ugl, ugr):
        if sr1.holds and not r.holds:
            problems.append({"claim": f"SR1 implies UG-{r.side}", "witness": _witness(r)})
    if problems:
        details["violations"] = problems
        return Verdict("theorem5", DISCREPANCY, details)
    return Verdict("theorem5", CONSISTENT, details)


def check_remark6(R: FiniteRing, props=None) -> Verdict:
    props = _props(R, props)
    sr1, df = props["stable_range_one"], props["directly_finite"]
    ugl, ugr = props["uniquely_generated[left]"], props["uniquely_generated[right]"]
    problems = []
    if sr1.holds and not (ugl.holds and ugr.holds):
        problems.append({"claim": "SR1 implies UG on both sides",
                         "witnesses": [_witness(r) for r in (ugl, ugr) if not r.holds]})
    for r in (ugl, ugr):
        if r.holds and not df.holds:
            problems.append({"claim": f"UG-{r.side} implies DF", "witness": _witness(df)})
    details = {"stable_range_one": sr1.holds, "uniquely_generated_left": ugl.holds,
               "uniquely_generated_right": ugr.holds, "directly_finite": df.holds}
    if problems:
        details["violations"] = problems
        return Verdict("remark6", DISCREPANCY, details)
    return Verdict("remark6", CONSISTENT, details)


@dataclass
class TheoremReport:
    label: str
    spec: dict | None
    entry: str | None = None
    order: int | None = None
    properties: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def discrepancies(self):
        return [v for v in self.verdicts if v.status == DISCREPANCY]

    @property
    def consistent(self):
        return self.error is None and not self.discrepancies

    def to_dict(self, timings=False):
        d = {
            "label": self.label,
            "entry": self.entry,
            "spec": self.spec,
            "order": self.order,
            "properties": {k: v.to_dict() for k, v in self.properties.items()},
            "verdicts": [v.to_dict() for v in self.verdicts],
            "error": self.error,
        }
        if timings:
            d["timings"] = {k: round(v, 6) for k, v in self.timings.items()}
        return d


def check_ring(R: FiniteRing, spec=None, budget: float | None = None) -> TheoremReport:
    """Run all five checks on one ring under a wall-clock budget.

    Checks started after the budget is spent are reported as skipped.
    """
    budget = default_budget() if budget is None else budget
    report = TheoremReport(R.label, spec, order=R.order)
    start = time.perf_counter()
    t0 = time.perf_counter()
    props = property_vector(R)
    report.properties = props
    report.timings["properties"] = time.perf_counter() - t0
    deadline = start + budget
    runners = {
        "vasershtein": lambda: check_vasershtein(R, deadline),
        "lifting_implies_df": lambda: check_lifting_implies_df(R, props),
        "theorem3": lambda: check_theorem3(R, props),
        "theorem5": lambda: check_theorem5(R, props),
        "remark6": lambda: check_remark6(R, props),
    }
    verdicts = {}
    # the O(n^4) sweep goes last so it cannot starve the cheap checks
    for name in sorted(CHECKS, key=lambda c: c == "vasershtein"):
        if time.perf_counter() > deadline:
            verdicts[name] = Verdict(name, SKIPPED, {
                "reason": f"time budget of {budget:g}s exhausted"})
            continue
        t0 = time.perf_counter()
        verdicts[name] = runners[name]()
        report.timings[name] = time.perf_counter() - t0
    report.verdicts = [verdicts[name] for name in CHECKS]
    return report


@dataclass
class CatalogEntry:
    label: str
    spec: dict


def load_catalog(directory=None) -> list[CatalogEntry]:
    """Spec files in `directory` (default: the shipped catalog), sorted by file name."""
    if directory is None:
        root = resources.files("finring") / "data" / "catalog"
        files = sorted((p for p in root.iterdir() if p.name.endswith(".json")),
                       key=lambda p: p.name)
    else:
        from pathlib import Path

        files = sorted(Path(directory).glob("*.json"))
    entries = []
    for f in files:
        spec = load_spec(f)
        entries.append(CatalogEntry(f.name.rsplit(".", 1)[0], spec))
    return entries


def run_suite(catalog, budget: float | None = None) -> list[TheoremReport]:
    """Check every catalog entry in order; construction errors stay per-entry."""
    reports = []
    for entry in catalog:
        if isinstance(entry, CatalogEntry):
            label, spec = entry.label, entry.spec
        else:
            label, spec = entry
        try:
            R = construct(spec)
        except (SpecError, RingError) as exc:
            reports.append(TheoremReport(label, spec, entry=label, error=str(exc)))
            continue
        rep = check_ring(R, spec, budget)
        rep.entry = label
        reports.append(rep)
    return reports


def suite_status(reports) -> int:
    """0 all consistent, 1 any discrepancy, 2 any entry failed to construct."""
    if any(r.discrepancies for r in reports):
        return 1
    if any(r.error for r in reports):
        return 2
    return 0
