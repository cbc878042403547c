"""Exact decisions over the integers.

Z is directly finite and uniquely generated on both sides, but it fails
stable range one and unit lifting. Everything here is divisibility
arithmetic on Python ints; nothing is embedded in the finite-ring code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .properties import PreconditionError

Z_UNITS = (1, -1)


def divides(d: int, m: int) -> bool:
    if d == 0:
        return m == 0
    return m % d == 0


def z_order_key(v: int):
    """Position of v in the enumeration 0, 1, -1, 2, -2, ..."""
    return (abs(v), v < 0)


def witness_key(t):
    return (max(abs(v) for v in t), tuple(z_order_key(v) for v in t))


def z_sr1_decide(a: int, x: int, b: int):
    """Some y with a + b*y = +-1, or None. Requires a*x + b = 1."""
    if a * x + b != 1:
        raise PreconditionError(f"a*x + b = {a * x + b}, expected 1")
    if b == 0:
        return 0 if a in Z_UNITS else None
    for u in Z_UNITS:
        if divides(b, u - a):
            return (u - a) // b
    return None


def z_unit_lift_decide(b: int, c: int):
    """A unit u with c | b - u, or None. Requires gcd(b, c) = 1."""
    if gcd(b, c) != 1:
        raise PreconditionError(f"gcd({b}, {c}) = {gcd(b, c)}; b is not a unit modulo cZ")
    for u in Z_UNITS:
        if divides(c, b - u):
            return u
    return None


def z_ug_decide(a: int, b: int) -> int:
    """The unit u with a = u*b, given Za = Zb."""
    if abs(a) != abs(b):
        raise PreconditionError(f"Z{a} != Z{b}")
    return 1 if a == b else -1


@dataclass
class ZWitness:
    claim: str
    roles: dict
    trace: list = field(default_factory=list)

    def to_dict(self):
        return {"claim": self.claim, "witness": self.roles, "trace": self.trace}


def _sr1_trace(a, x, b):
    trace = [f"{a}*{x} + {b} = 1"]
    for u in Z_UNITS:
        trace.append(f"{b} does not divide {u} - {a} = {u - a}")
    return trace


def replay_zwitness(w: ZWitness) -> bool:
    """Recheck the arithmetic behind a witness."""
    r = w.roles
    if w.claim == "stable_range_one fails":
        a, x, b = r["a"], r["x"], r["b"]
        return a * x + b == 1 and not any(divides(b, u - a) for u in Z_UNITS)
    if w.claim == "unit_lifting fails":
        b, c = r["b"], r["c"]
        return gcd(b, c) == 1 and not any(divides(c, b - u) for u in Z_UNITS)
    raise KeyError(w.claim)


def _bounded_y_search(a, b, limit):
    for y in range(-limit, limit + 1):
        if a + b * y in Z_UNITS:
            return True
    return False


def z_remark6_report(bound: int) -> dict:
    """Sweep |a|, |x|, |b| <= bound and summarize Z's properties.

    Every decision is cross-checked against a bounded search over
    |y| <= 2*bound**2; any disagreement is listed under ``mismatches``.
    """
    if isinstance(bound, bool) or not isinstance(bound, int) or bound < 5:
        raise PreconditionError(f"bound must be an integer >= 5, got {bound!r}")
    rng = range(-bound, bound + 1)
    limit = 2 * bound * bound
    sr1_fail, mismatches = [], []
    triples = 0
    for a in rng:
        for x in rng:
            b = 1 - a * x
            if abs(b) > bound:
                continue
            triples += 1
            y = z_sr1_decide(a, x, b)
            if y is not None and a + b * y not in Z_UNITS:
                mismatches.append({"a": a, "x": x, "b": b, "reason": "bad y"})
            if (y is not None) != _bounded_y_search(a, b, limit):
                mismatches.append({"a": a, "x": x, "b": b, "reason": "search disagrees"})
            if y is None:
                sr1_fail.append((a, x, b))
    lift_fail, pairs = [], 0
    for b in rng:
        for c in rng:
            if gcd(b, c) != 1:
                continue
            pairs += 1
            u = z_unit_lift_decide(b, c)
            brute = [v for v in Z_UNITS if divides(c, b - v)]
            if (u is None) != (not brute):
                mismatches.append({"b": b, "c": c, "reason": "lift search disagrees"})
            if u is None:
                lift_fail.append((b, c))
    ug_pairs, ug_fail = 0, []
    for a in rng:
        for b in rng:
            if abs(a) != abs(b):
                continue
            ug_pairs += 1
            u = z_ug_decide(a, b)
            if a != u * b:
                ug_fail.append((a, b))

    sr1_w = min(sr1_fail, key=witness_key) if sr1_fail else None
    lift_w = min(lift_fail, key=witness_key) if lift_fail else None
    witnesses = []
    if sr1_w:
        witnesses.append(ZWitness("stable_range_one fails",
                                  dict(zip("axb", sr1_w)), _sr1_trace(*sr1_w)))
    if lift_w:
        b, c = lift_w
        witnesses.append(ZWitness("unit_lifting fails", {"b": b, "c": c},
                                  [f"gcd({b}, {c}) = 1"]
                                  + [f"{c} does not divide {b} - {u} = {b - u}" for u in Z_UNITS]))
    for w in witnesses:
        assert replay_zwitness(w), w

    sr1 = not sr1_fail
    lifting = not lift_fail
    ug = not ug_fail
    properties = {
        "stable_range_one": sr1,
        "unit_lifting[left]": lifting,
        "unit_lifting[right]": lifting,  # Z is commutative
        "uniquely_generated[left]": ug,
        "uniquely_generated[right]": ug,
        "directly_finite": True,  # commutative: ab = 1 gives ba = 1; not searched
    }
    verdicts = {
        # Theorem-3 style agreement: SR1 and lifting fail together
        "lifting_iff_sr1": "consistent" if sr1 == lifting else "discrepancy",
        "ug_holds": "consistent" if ug else "discrepancy",
        "decision_matches_search": "consistent" if not mismatches else "discrepancy",
    }
    return {
        "label": "Z",
        "bound": bound,
        "properties": properties,
        "verdicts": verdicts,
        "counts": {
            "sr1_triples": triples,
            "sr1_failures": len(sr1_fail),
            "lift_pairs": pairs,
            "lift_failures": len(lift_fail),
            "ug_pairs": ug_pairs,
            "ug_failures": len(ug_fail),
        },
        "sr1_witness": list(sr1_w) if sr1_w else None,
        "lifting_witness": list(lift_w) if lift_w else None,
        "witnesses": [w.to_dict() for w in witnesses],
        "mismatches": mismatches,
        "directly_finite_basis": "axiom: Z is commutative",
    }
