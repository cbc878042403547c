"""Deciders for the ring properties, with witnesses and exhaustion counts.

Each decider sweeps its quantifier domain in row-major order over element
indices; the first failing tuple is the witness. Failures are replayed
through a plain scalar evaluation of the defining formula before they are
returned, so a result never carries a witness that does not reproduce.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ring import FiniteRing
from .subsets import Side, annihilator_family, as_side, principal_family, unit_mask


class WitnessError(AssertionError):
    """A failure witness did not reproduce under replay (a decider bug)."""


class PreconditionError(ValueError):
    """Caller supplied arguments outside an operation's precondition."""


class TheoremDiscrepancy(RuntimeError):
    """A search that a theorem guarantees to succeed came up empty."""


@dataclass(frozen=True)
class PropertyResult:
    name: str
    side: str | None
    holds: bool
    witness: tuple | None  # ((role, index), ...)
    search_space: int
    note: str = ""

    def witness_dict(self):
        return dict(self.witness) if self.witness else None

    def to_dict(self):
        d = {
            "property": self.name,
            "side": self.side,
            "holds": self.holds,
            "witness": (
                [{"role": r, "index": i} for r, i in self.witness] if self.witness else None
            ),
            "search_space": self.search_space,
        }
        if self.note:
            d["note"] = self.note
        return d


def _first(mask):
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None, mask.size
    pos = int(flat[0])
    return tuple(int(i) for i in np.unravel_index(pos, mask.shape)), pos + 1


def _finish(R, name, side, fail_mask, roles, extra=None):
    hit, examined = _first(fail_mask)
    if hit is None:
        return PropertyResult(name, side, True, None, examined)
    values = hit + (extra(hit) if extra else ())
    return _failed(R, name, side, tuple(zip(roles, values)), examined)


def _failed(R, name, side, witness, examined, note=""):
    res = PropertyResult(name, side, False, witness, examined, note)
    if not replay(R, res):
        raise WitnessError(f"{name} witness {res.witness} does not replay on {R.label}")
    return res


def directly_finite(R: FiniteRing) -> PropertyResult:
    M = R.mul
    inv = M == R.one
    fail = inv & ~inv.T
    return _finish(R, "directly_finite", None, fail, ("a", "b"))


def stable_range_one(R: FiniteRing) -> PropertyResult:
    """For every a, x (b = 1 - ax forced) some y makes a + by a unit."""
    n = R.order
    U = unit_mask(R)
    A, M = R.add.astype(np.intp), R.mul.astype(np.intp)
    # good[a, b]: exists y with a + b*y in U
    good = np.empty((n, n), dtype=bool)
    for a in range(n):
        good[a] = U[A[a][M]].any(axis=1)
    B = A[R.one][R.neg[M].astype(np.intp)]  # B[a, x] = 1 - a*x
    fail = ~good[np.arange(n)[:, None], B]
    return _finish(R, "stable_range_one", None, fail, ("a", "x", "b"),
                   extra=lambda h: (int(B[h]),))


def unit_lifting(R: FiniteRing, side="left") -> PropertyResult:
    """Every one-sided unit modulo a principal ideal lifts to a one-sided unit.

    Left: for all b, c, if a*b - 1 lies in Rc for some a, then b - u lies in
    Rc for some left unit u. Right: b*a - 1 and b - u in cR, u a right unit.
    """
    side = as_side(side)
    n = R.order
    A, M = R.add.astype(np.intp), R.mul.astype(np.intp)
    neg = R.neg.astype(np.intp)
    P = principal_family(R, side)
    minus_one = neg[R.one]
    if side is Side.LEFT:
        D = A[M, minus_one]            # D[a, b] = a*b - 1
        lu = np.flatnonzero(unit_mask(R, "left"))
    else:
        D = A[M, minus_one].T          # D[a, b] = b*a - 1
        lu = np.flatnonzero(unit_mask(R, "right"))
    E = A[np.arange(n)[:, None], neg[lu][None, :]]  # E[b, k] = b - u_k
    premise = np.empty((n, n), dtype=bool)   # [b, c]
    conclusion = np.empty((n, n), dtype=bool)
    for c in range(n):
        premise[:, c] = P[c][D].any(axis=0)
        conclusion[:, c] = P[c][E].any(axis=1)
    fail = premise & ~conclusion
    return _finish(R, "unit_lifting", side.value, fail, ("b", "c"))


def _family_keys(F):
    return [row.tobytes() for row in np.packbits(F, axis=1)]


def quasi_morphic(R: FiniteRing, side="left") -> PropertyResult:
    """Principal ideals and annihilators form the same family of sets."""
    side = as_side(side)
    n = R.order
    pk = _family_keys(principal_family(R, side))
    ak = _family_keys(annihilator_family(R, side))
    aset, pset = set(ak), set(pk)
    for a in range(n):
        if pk[a] not in aset:
            return _failed(R, "quasi_morphic", side.value, (("a", a),), a + 1,
                           "principal ideal is not an annihilator")
    for a in range(n):
        if ak[a] not in pset:
            return _failed(R, "quasi_morphic", side.value, (("a", a),), n + a + 1,
                           "annihilator is not a principal ideal")
    return PropertyResult("quasi_morphic", side.value, True, None, 2 * n)


def principal_are_annihilators(R: FiniteRing, side="left") -> PropertyResult:
    """Every principal ideal on `side` is an annihilator of some element."""
    side = as_side(side)
    pk = _family_keys(principal_family(R, side))
    aset = set(_family_keys(annihilator_family(R, side)))
    fail = np.array([k not in aset for k in pk], dtype=bool)
    return _finish(R, "principal_are_annihilators", side.value, fail, ("a",))


def uniquely_generated(R: FiniteRing, side="left") -> PropertyResult:
    """Left: Ra = Rb forces a = ub for a unit u. Right: aR = bR forces a = bu."""
    side = as_side(side)
    n = R.order
    P = principal_family(R, side)
    keys = _family_keys(P)
    ids = {}
    cls = np.array([ids.setdefault(k, len(ids)) for k in keys])
    same = cls[:, None] == cls[None, :]
    U = np.flatnonzero(unit_mask(R))
    M = R.mul.astype(np.intp)
    reach = np.zeros((n, n), dtype=bool)  # reach[a, b]: a = u*b (left) or a = b*u (right)
    cols = np.broadcast_to(np.arange(n)[None, :], (U.size, n))
    if side is Side.LEFT:
        reach[M[U, :], cols] = True
    else:
        reach[M[:, U].T, cols] = True
    fail = same & ~reach
    return _finish(R, "uniquely_generated", side.value, fail, ("a", "b"))


def vasershtein_transfer(R: FiniteRing, a, b, c, x) -> int:
    """Least y with b + y*c a unit, given a*b + c = 1 and a + c*x a unit."""
    a, b, c, x = (R.check_index(v) for v in (a, b, c, x))
    U = unit_mask(R)
    if R.plus(R.times(a, b), c) != R.one:
        raise PreconditionError(f"a*b + c != 1 for (a, b, c) = ({a}, {b}, {c})")
    if not U[R.plus(a, R.times(c, x))]:
        raise PreconditionError(f"a + c*x is not a unit for (a, c, x) = ({a}, {c}, {x})")
    for y in range(R.order):
        if U[R.plus(b, R.times(y, c))]:
            return y
    raise TheoremDiscrepancy(
        f"{R.label}: no y makes b + y*c a unit for (a, b, c, x) = ({a}, {b}, {c}, {x})"
    )


ALL_PROPERTIES = {
    "directly_finite": (directly_finite, False),
    "stable_range_one": (stable_range_one, False),
    "unit_lifting": (unit_lifting, True),
    "quasi_morphic": (quasi_morphic, True),
    "principal_are_annihilators": (principal_are_annihilators, True),
    "uniquely_generated": (uniquely_generated, True),
}


def evaluate(R: FiniteRing, name: str, side=None) -> PropertyResult:
    fn, sided = ALL_PROPERTIES[name]
    return fn(R, side or "left") if sided else fn(R)


# --- scalar replays ---------------------------------------------------------

def _units_scalar(R, kind="two_sided"):
    n = R.order
    left = {u for u in range(n) if any(R.times(v, u) == R.one for v in range(n))}
    right = {u for u in range(n) if any(R.times(u, v) == R.one for v in range(n))}
    return {"left": left, "right": right, "two_sided": left & right}[kind]


def _principal_scalar(R, a, side):
    n = R.order
    if side == "left":
        return frozenset(R.times(r, a) for r in range(n))
    return frozenset(R.times(a, r) for r in range(n))


def _annihilator_scalar(R, a, side):
    n = R.order
    if side == "left":
        return frozenset(r for r in range(n) if R.times(r, a) == R.zero)
    return frozenset(r for r in range(n) if R.times(a, r) == R.zero)


def replay(R: FiniteRing, result: PropertyResult) -> bool:
    """True iff the witness in `result` violates the property's definition.

    Holding results replay trivially. This path never touches the
    vectorized deciders.
    """
    if result.holds:
        return result.witness is None
    if not result.witness:
        return False
    w = dict(result.witness)
    n = R.order
    if any(not 0 <= v < n for v in w.values()):
        return False
    name, side = result.name, result.side
    if name == "directly_finite":
        return R.times(w["a"], w["b"]) == R.one and R.times(w["b"], w["a"]) != R.one
    if name == "stable_range_one":
        a, x, b = w["a"], w["x"], w["b"]
        if R.plus(R.times(a, x), b) != R.one:
            return False
        U = _units_scalar(R)
        return all(R.plus(a, R.times(b, y)) not in U for y in range(n))
    if name == "unit_lifting":
        b, c = w["b"], w["c"]
        ideal = _principal_scalar(R, c, side)
        if side == "left":
            premise = any(R.minus(R.times(a, b), R.one) in ideal for a in range(n))
        else:
            premise = any(R.minus(R.times(b, a), R.one) in ideal for a in range(n))
        lifts = any(R.minus(b, u) in ideal for u in _units_scalar(R, side))
        return premise and not lifts
    if name in ("quasi_morphic", "principal_are_annihilators"):
        a = w["a"]
        pr = {_principal_scalar(R, e, side) for e in range(n)}
        an = {_annihilator_scalar(R, e, side) for e in range(n)}
        if result.note == "annihilator is not a principal ideal":
            return _annihilator_scalar(R, a, side) not in pr
        return _principal_scalar(R, a, side) not in an
    if name == "uniquely_generated":
        a, b = w["a"], w["b"]
        if _principal_scalar(R, a, side) != _principal_scalar(R, b, side):
            return False
        U = _units_scalar(R)
        if side == "left":
            return all(R.times(u, b) != a for u in U)
        return all(R.times(b, u) != a for u in U)
    raise KeyError(f"unknown property {name!r}")
