"""Exit criteria. Each test records one PASS/FAIL line in the terminal summary."""

import io

import numpy as np
import pytest

from finring import properties as P
from finring.cli import main
from finring.enumeration import enumerate_unital_rings
from finring.ring import FiniteRing, opposite, validate
from finring.specs import construct
from finring.subsets import units
from finring.theorems import check_theorem3, check_theorem5, check_vasershtein, property_vector
from finring.zint import z_remark6_report

from conftest import ACCEPTANCE_LINES, E12, SPECS
from oracles import naive_unital_rings

SIDED = ("unit_lifting", "quasi_morphic", "principal_are_annihilators", "uniquely_generated")


def record(number, text, ok):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number}. {text}")
    assert ok, text


@pytest.fixture(scope="module")
def universe(catalog_rings):
    enumerated = [(R.label, R) for n in range(1, 5) for R in enumerate_unital_rings(n)]
    return catalog_rings + enumerated


def test_1_theorem3_suite(universe):
    bad = []
    for label, R in universe:
        v = check_theorem3(R)
        if not v.consistent or not all(v.details.values()):
            bad.append(label)
    record(1, f"Theorem 3 on {len(universe)} rings: SR1 = lifting-left = lifting-right, "
              f"{len(bad)} discrepancies", not bad)


def test_2_vasershtein_sweep(catalog_rings):
    swept, bad, m2 = 0, [], None
    for label, R in catalog_rings:
        if R.order > 16:
            continue
        v = check_vasershtein(R)
        swept += 1
        if not v.consistent or v.details["tuples_examined"] != R.order**4:
            bad.append(label)
        if label == "16_M2_F2":
            m2 = v.details["tuples_examined"]
    record(2, f"Lemma 1 sweep on {swept} rings of order <= 16 (M2(F2): {m2} tuples), "
              f"{len(bad)} failures", not bad and m2 == 65536)


def test_3_theorem5_suite(catalog_rings):
    bad = []
    conditional = 0
    for label, R in catalog_rings:
        props = property_vector(R)
        v = check_theorem5(R, props)
        if not v.consistent:
            bad.append(label)
        if props["principal_are_annihilators[left]"].holds:
            conditional += 1
    T = construct(SPECS["T2F2"])
    pa = P.principal_are_annihilators(T, "left")
    t2_ok = (not pa.holds) and pa.witness_dict() == {"a": E12} and P.replay(T, pa)
    record(3, f"Theorem 5: conditional part checked on {conditional} rings, unconditional on "
              f"{len(catalog_rings)}; T2(F2) left-PA fails at e12={E12}; {len(bad)} discrepancies",
           not bad and t2_ok)


def test_4_remark6_on_integers():
    rep = z_remark6_report(10)
    ok = (
        rep["sr1_witness"] == [2, -2, 5]
        and rep["lifting_witness"] == [2, 5]
        and rep["properties"]["stable_range_one"] is False
        and rep["properties"]["unit_lifting[left]"] is False
        and rep["properties"]["uniquely_generated[left]"] is True
        and rep["properties"]["uniquely_generated[right]"] is True
        and rep["counts"]["ug_failures"] == 0
        and rep["properties"]["directly_finite"] is True
        and not rep["mismatches"]
    )
    record(4, f"Z, bound 10: SR1 fails at {tuple(rep['sr1_witness'])}, lifting fails at "
              f"{tuple(rep['lifting_witness'])}, UG holds on {rep['counts']['ug_pairs']} pairs, DF true",
           ok)


def test_5_duality(catalog_rings):
    mismatches = 0
    checked = 0
    for _, R in catalog_rings:
        op = opposite(R)
        for name in SIDED:
            right = P.evaluate(R, name, "right")
            left = P.evaluate(op, name, "left")
            checked += 1
            if (right.holds, right.witness) != (left.holds, left.witness):
                mismatches += 1
    record(5, f"duality right(R) = left(op R) on {checked} predicate evaluations, "
              f"{mismatches} mismatches", mismatches == 0)


def test_6_enumeration_counts():
    counts = tuple(len(enumerate_unital_rings(n)) for n in range(1, 6))
    oracle = tuple(len(naive_unital_rings(n)) for n in range(1, 6))
    unit_sizes = sorted(len(units(R)) for R in enumerate_unital_rings(4))
    record(6, f"unital ring counts orders 1-5 = {counts} (naive oracle {oracle}); "
              f"order-4 unit counts {unit_sizes}",
           counts == oracle == (1, 1, 1, 4, 1) and unit_sizes == [1, 2, 2, 3])


def test_7_unit_spot_checks():
    sizes = {k: len(units(construct(SPECS[k]))) for k in ("Z6", "M2F2", "T2F2")}
    record(7, f"|U(Z/6)|, |U(M2(F2))|, |U(T2(F2))| = {sizes['Z6']}, {sizes['M2F2']}, {sizes['T2F2']}",
           sizes == {"Z6": 2, "M2F2": 6, "T2F2": 2})


def _all_results(R):
    """Every predicate on R; a decider that cannot replay its witness raises instead."""
    out = []
    calls = [lambda: P.directly_finite(R), lambda: P.stable_range_one(R)]
    calls += [lambda n=name, s=side: P.evaluate(R, n, s) for name in SIDED for side in ("left", "right")]
    refused = 0
    for call in calls:
        try:
            out.append(call())
        except P.WitnessError:
            refused += 1
    return out, refused


def test_8_mutation_witness_selfcheck(catalog_rings):
    rng = np.random.default_rng(20261017)
    pool = [R for _, R in catalog_rings if R.order > 1]
    still_valid = rejected = bad_witness = refused_valid = 0
    for i in range(100):
        R = pool[rng.integers(len(pool))]
        add, mul = R.add.astype(np.int64), R.mul.astype(np.int64)
        zero, one = R.zero, R.one
        if i % 2:
            perm = rng.permutation(R.order)
            S = R.relabel(perm)
            add, mul, zero, one = S.add.astype(np.int64), S.mul.astype(np.int64), S.zero, S.one
        else:
            table = mul if rng.integers(2) else add
            a, b = rng.integers(R.order, size=2)
            table[a, b] = (table[a, b] + 1 + rng.integers(R.order - 1)) % R.order
        report = validate(add, mul, zero, one, R.order)
        # deciders also run on rejected tables: they may refuse, never mislead
        T = FiniteRing(add, mul, zero, one, check=False)
        results, refused = _all_results(T)
        bad_witness += sum(not P.replay(T, res) for res in results)
        if report.ok:
            still_valid += 1
            refused_valid += refused
        else:
            rejected += 1
    record(8, f"100 mutated tables: {rejected} rejected by validate, {still_valid} still valid "
              f"({refused_valid} refusals), {bad_witness} non-replaying witnesses returned",
           rejected + still_valid == 100 and bad_witness == 0 and refused_valid == 0
           and rejected > 0 and still_valid > 0)


def test_9_determinism():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        code = main(["check", "--catalog", "--format", "machine"], stdout=buf)
        outs.append((code, buf.getvalue().encode()))
    record(9, f"two `check --catalog` machine reports: {len(outs[0][1])} bytes, identical="
              f"{outs[0] == outs[1]}", outs[0] == outs[1] and outs[0][0] == 0)
