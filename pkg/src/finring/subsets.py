"""Principal one-sided ideals, annihilators and unit sets as bit vectors."""

from __future__ import annotations

from enum import Enum

import numpy as np

from .ring import FiniteRing


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    def __str__(self):
        return self.value


def as_side(side) -> Side:
    try:
        return Side(side)
    except ValueError:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}") from None


class ElementSubset:
    """Subset of a ring's elements, stored as a boolean membership vector."""

    __slots__ = ("ring", "bits")

    def __init__(self, ring: FiniteRing, bits):
        bits = np.asarray(bits, dtype=bool)
        if bits.shape != (ring.order,):
            raise ValueError(f"membership vector must have length {ring.order}")
        bits = bits.copy()
        bits.flags.writeable = False
        self.ring = ring
        self.bits = bits

    @classmethod
    def of(cls, ring, elements):
        bits = np.zeros(ring.order, dtype=bool)
        for e in elements:
            bits[ring.check_index(e)] = True
        return cls(ring, bits)

    def members(self):
        return [int(i) for i in np.flatnonzero(self.bits)]

    def key(self) -> bytes:
        return np.packbits(self.bits).tobytes()

    def __contains__(self, e):
        return 0 <= e < self.ring.order and bool(self.bits[e])

    def __len__(self):
        return int(self.bits.sum())

    def __iter__(self):
        return iter(self.members())

    def __eq__(self, other):
        if isinstance(other, ElementSubset):
            return np.array_equal(self.bits, other.bits)
        if isinstance(other, (set, frozenset)):
            return set(self.members()) == other
        return NotImplemented

    def __hash__(self):
        return hash(self.key())

    def __or__(self, other):
        return ElementSubset(self.ring, self.bits | other.bits)

    def __and__(self, other):
        return ElementSubset(self.ring, self.bits & other.bits)

    def __sub__(self, other):
        return ElementSubset(self.ring, self.bits & ~other.bits)

    def __le__(self, other):
        return not (self.bits & ~other.bits).any()

    def __repr__(self):
        return f"ElementSubset({self.members()})"

    def is_additively_closed(self):
        m = np.flatnonzero(self.bits)
        return bool(self.bits[self.ring.add[np.ix_(m, m)]].all())

    def is_ideal(self, side) -> bool:
        """Closed under addition and under multiplication from `side`."""
        side = as_side(side)
        m = np.flatnonzero(self.bits)
        if m.size == 0 or not self.is_additively_closed():
            return False
        prods = self.ring.mul[:, m] if side is Side.LEFT else self.ring.mul[m, :]
        return bool(self.bits[prods].all())

    def to_list(self):
        return self.members()


def principal_family(R: FiniteRing, side) -> np.ndarray:
    """Row ``a`` is the membership vector of ``Ra`` (left) or ``aR`` (right)."""
    side = as_side(side)
    n = R.order
    P = np.zeros((n, n), dtype=bool)
    M = R.mul.astype(np.intp)
    if side is Side.LEFT:
        # Ra contains mul[r, a] for every r
        P[np.broadcast_to(np.arange(n)[None, :], (n, n)), M] = True
    else:
        P[np.broadcast_to(np.arange(n)[:, None], (n, n)), M] = True
    return P


def annihilator_family(R: FiniteRing, side) -> np.ndarray:
    """Row ``a`` is ann_l(a) = {r : ra = 0} (left) or {r : ar = 0} (right)."""
    side = as_side(side)
    Z = R.mul == R.zero
    return np.ascontiguousarray(Z.T if side is Side.LEFT else Z)


def principal(R: FiniteRing, a, side) -> ElementSubset:
    a = R.check_index(a)
    side = as_side(side)
    bits = np.zeros(R.order, dtype=bool)
    bits[R.mul[:, a] if side is Side.LEFT else R.mul[a, :]] = True
    return ElementSubset(R, bits)


def annihilator(R: FiniteRing, a, side) -> ElementSubset:
    a = R.check_index(a)
    side = as_side(side)
    col = R.mul[:, a] if side is Side.LEFT else R.mul[a, :]
    return ElementSubset(R, col == R.zero)


def unit_mask(R: FiniteRing, kind="two_sided") -> np.ndarray:
    hit = R.mul == R.one
    left = hit.any(axis=0)   # some v with v*u = 1
    right = hit.any(axis=1)  # some v with u*v = 1
    if kind == "left":
        return left
    if kind == "right":
        return right
    if kind == "two_sided":
        return left & right
    raise ValueError(f"unit kind must be left, right or two_sided, got {kind!r}")


def units(R: FiniteRing, kind="two_sided") -> ElementSubset:
    return ElementSubset(R, unit_mask(R, kind))
