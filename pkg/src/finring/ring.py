"""Finite unital rings stored as addition/multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

DEFAULT_MAX_ORDER = 4096


class RingError(ValueError):
    """Raised when tables do not describe a unital ring."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self):
        return {
            "ok": self.ok,
            "violations": [
                {"axiom": name, "witness": list(w)} for name, w in self.violations
            ],
        }


def _index_dtype(n):
    return np.int16 if n < 2**15 else np.int32


def _first_true(mask):
    """Row-major first True position of `mask` as a tuple of ints, else None."""
    flat = np.flatnonzero(mask)
    if flat.size == 0:
        return None
    return tuple(int(i) for i in np.unravel_index(flat[0], mask.shape))


def _first_triple(order, fn):
    # fn(a) -> bool (n, n) failure mask for first index a; chunked to keep memory O(n^2)
    for a in range(order):
        hit = _first_true(fn(a))
        if hit is not None:
            return (a,) + hit
    return None


def validate(add, mul, zero, one, order) -> ValidationReport:
    """Check every ring axiom on the given tables.

    Failures are collected, never raised; each violated axiom carries the
    first witness in row-major order.
    """
    violations = []
    try:
        A = np.asarray(add, dtype=np.int64)
        M = np.asarray(mul, dtype=np.int64)
    except (ValueError, TypeError):
        return ValidationReport([("table shape", ())])
    n = int(order)
    if n < 1:
        return ValidationReport([("table shape", ())])
    for name, T in (("add", A), ("mul", M)):
        if T.shape != (n, n):
            violations.append(("table shape", ()))
            return ValidationReport(violations)
    for name, T in (("add", A), ("mul", M)):
        bad = _first_true((T < 0) | (T >= n))
        if bad is not None:
            violations.append(("entry range", bad))
    for name, v in (("zero", zero), ("one", one)):
        if not isinstance(v, (int, np.integer)) or not 0 <= v < n:
            violations.append(("entry range", ()))
    if violations:
        return ValidationReport(violations)

    idx = np.arange(n)
    w = _first_triple(n, lambda a: A[A[a][:, None], idx[None, :]] != A[a][A])
    if w:
        violations.append(("additive associativity", w))
    w = _first_true(A != A.T)
    if w:
        violations.append(("additive commutativity", w))
    w = _first_true((A[zero] != idx) | (A[:, zero] != idx))
    if w:
        violations.append(("no additive identity", w))
    w = _first_true(~(A == zero).any(axis=1))
    if w:
        violations.append(("additive inverses", w))
    w = _first_triple(n, lambda a: M[M[a][:, None], idx[None, :]] != M[a][M])
    if w:
        violations.append(("multiplicative associativity", w))
    w = _first_true((M[one] != idx) | (M[:, one] != idx))
    if w:
        violations.append(("no multiplicative identity", w))
    # a(b + c) = ab + ac
    w = _first_triple(n, lambda a: M[a][A] != A[M[a][:, None], M[a][None, :]])
    if w:
        violations.append(("left distributivity", w))
    # (b + c)a = ba + ca
    w = _first_triple(n, lambda a: M[:, a][A] != A[M[:, a][:, None], M[:, a][None, :]])
    if w:
        violations.append(("right distributivity", w))
    return ValidationReport(violations)


class FiniteRing:
    """Immutable finite unital ring over element indices ``0..order-1``.

    Equality compares the tables and the distinguished elements; the label
    is cosmetic.
    """

    __slots__ = ("order", "add", "mul", "zero", "one", "label", "neg", "__weakref__")

    def __init__(self, add, mul, zero, one, label="", check=True):
        add = np.asarray(add)
        mul = np.asarray(mul)
        n = int(add.shape[0]) if add.ndim == 2 else 0
        if check:
            report = validate(add, mul, zero, one, n)
            if not report.ok:
                axiom, wit = report.violations[0]
                raise RingError(f"{label or 'table'}: {axiom} fails at {wit}", report)
        dt = _index_dtype(n)
        A = np.ascontiguousarray(add, dtype=dt)
        M = np.ascontiguousarray(mul, dtype=dt)
        A.flags.writeable = False
        M.flags.writeable = False
        neg = np.argmax(A == zero, axis=1).astype(dt)
        neg.flags.writeable = False
        object.__setattr__(self, "order", n)
        object.__setattr__(self, "add", A)
        object.__setattr__(self, "mul", M)
        object.__setattr__(self, "zero", int(zero))
        object.__setattr__(self, "one", int(one))
        object.__setattr__(self, "label", label)
        object.__setattr__(self, "neg", neg)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteRing is immutable")

    def __repr__(self):
        return f"FiniteRing({self.label or 'table'}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return (
            self.order == other.order
            and self.zero == other.zero
            and self.one == other.one
            and np.array_equal(self.add, other.add)
            and np.array_equal(self.mul, other.mul)
        )

    def __hash__(self):
        return hash((self.order, self.zero, self.one, self.add.tobytes(), self.mul.tobytes()))

    def __len__(self):
        return self.order

    # scalar helpers used by the witness replays; deliberately plain Python
    def plus(self, a, b):
        return int(self.add[a, b])

    def times(self, a, b):
        return int(self.mul[a, b])

    def minus(self, a, b):
        return int(self.add[a, self.neg[b]])

    def check_index(self, a):
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise IndexError(f"element index {a} out of range for order {self.order}")
        return int(a)

    def relabel(self, perm, label=None):
        """Isomorphic copy where element ``i`` becomes ``perm[i]``."""
        perm = np.asarray(perm, dtype=np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(self.order)
        add = perm[self.add[inv[:, None], inv[None, :]]]
        mul = perm[self.mul[inv[:, None], inv[None, :]]]
        return FiniteRing(add, mul, int(perm[self.zero]), int(perm[self.one]),
                          label or self.label, check=False)


def opposite(R: FiniteRing) -> FiniteRing:
    """Same elements and addition, multiplication reversed."""
    label = R.label[3:-1] if R.label.startswith("op(") and R.label.endswith(")") else f"op({R.label})"
    return FiniteRing(R.add, R.mul.T, R.zero, R.one, label, check=False)


def _element_invariants(R):
    n = R.order
    A, M = R.add, R.mul
    idx = np.arange(n)
    # additive order
    add_order = np.ones(n, dtype=np.int64)
    cur = idx.copy()
    while True:
        moving = cur != R.zero
        if not moving.any():
            break
        cur = np.where(moving, A[cur, idx], cur)
        add_order += moving
    unit = (M == R.one).any(axis=0) & (M == R.one).any(axis=1)
    sq = M[idx, idx]
    left_ann = (M == R.zero).sum(axis=0)
    right_ann = (M == R.zero).sum(axis=1)
    return [
        (int(add_order[i]), bool(unit[i]), bool(sq[i] == i), bool(sq[i] == R.zero),
         int(left_ann[i]), int(right_ann[i]))
        for i in range(n)
    ]


def isomorphic(R: FiniteRing, S: FiniteRing):
    """Lexicographically least ring isomorphism ``R -> S`` as a list, or None."""
    n = R.order
    if n != S.order:
        return None
    if n == 1:
        return [0]
    inv_r = _element_invariants(R)
    inv_s = _element_invariants(S)
    if sorted(inv_r) != sorted(inv_s):
        return None
    candidates = [[j for j in range(n) if inv_s[j] == inv_r[i]] for i in range(n)]
    RA, RM, SA, SM = R.add.tolist(), R.mul.tolist(), S.add.tolist(), S.mul.tolist()

    def assign(f, used, a, b):
        # extend f with a -> b and close under + and *; False on conflict
        queue = [(a, b)]
        while queue:
            a, b = queue.pop()
            if f[a] != -1:
                if f[a] != b:
                    return False
                continue
            if used[b] != -1 or inv_r[a] != inv_s[b]:
                return False
            f[a] = b
            used[b] = a
            for c in range(n):
                d = f[c]
                if d == -1:
                    continue
                for x, y in ((RA[a][c], SA[b][d]), (RM[a][c], SM[b][d]), (RM[c][a], SM[d][b])):
                    if f[x] == -1:
                        queue.append((x, y))
                    elif f[x] != y:
                        return False
        return True

    def search(f, used):
        try:
            a = f.index(-1)
        except ValueError:
            return f
        for b in candidates[a]:
            if used[b] != -1:
                continue
            g, u = f[:], used[:]
            if assign(g, u, a, b):
                found = search(g, u)
                if found is not None:
                    return found
        return None

    f, used = [-1] * n, [-1] * n
    if not assign(f, used, R.zero, S.zero) or not assign(f, used, R.one, S.one):
        return None
    return search(f, used)
