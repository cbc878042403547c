"""Enumerate unital rings of small order up to isomorphism.

The additive group is fixed to a product of cyclic groups in invariant-factor
form. The identity of a unital ring has additive order equal to the group
exponent and so generates a cyclic direct summand; after an automorphism of
the group it is the generator of the largest factor. Only the products of
the remaining generators are searched, everything else follows from
bilinearity.
"""

from __future__ import annotations

import hashlib
import itertools
import time
from math import gcd
from pathlib import Path

import numpy as np

from .ring import FiniteRing, validate
from .specs import save_spec, to_table_spec

MAX_GROUP_ORDER = 16
DEFAULT_MAX_RING_ORDER = 8


class BudgetExceeded(RuntimeError):
    pass


def _factorize(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _partitions(k, largest=None):
    if k == 0:
        yield ()
        return
    largest = k if largest is None else largest
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def abelian_group_factors(n: int) -> list[tuple[int, ...]]:
    """Invariant factors (largest first) of each abelian group of order n."""
    if not isinstance(n, int) or not 1 <= n <= MAX_GROUP_ORDER:
        raise ValueError(f"group order must be in 1..{MAX_GROUP_ORDER}, got {n!r}")
    if n == 1:
        return [(1,)]
    primes = sorted(_factorize(n).items())
    choices = [list(_partitions(e)) for _, e in primes]
    groups = []
    for combo in itertools.product(*choices):
        width = max(len(part) for part in combo)
        factors = []
        for i in range(width):
            d = 1
            for (p, _), part in zip(primes, combo):
                if i < len(part):
                    d *= p ** part[i]
            factors.append(d)
        groups.append(tuple(factors))
    return groups


def _group_add(factors):
    n = int(np.prod(factors))
    digits = np.array(np.unravel_index(np.arange(n), factors)).T.reshape(n, len(factors))
    comps = [(digits[:, f][:, None] + digits[:, f][None, :]) % d for f, d in enumerate(factors)]
    return np.ravel_multi_index(comps, factors), digits


def abelian_groups(n: int) -> list[np.ndarray]:
    """One addition table per isomorphism class of abelian groups of order n."""
    return [_group_add(f)[0] for f in abelian_group_factors(n)]


def bilinear_table(factors, products):
    """Multiplication table fixed by generator products.

    `products[i][j]` is the coefficient vector of e_i * e_j.
    """
    n = int(np.prod(factors))
    r = len(factors)
    digits = np.array(np.unravel_index(np.arange(n), factors)).T.reshape(n, r)
    acc = np.zeros((n, n, r), dtype=np.int64)
    for i in range(r):
        for j in range(r):
            coef = digits[:, i][:, None] * digits[:, j][None, :]
            acc += coef[:, :, None] * np.asarray(products[i][j], dtype=np.int64)[None, None, :]
    acc %= np.asarray(factors)
    return np.ravel_multi_index(tuple(acc[:, :, f] for f in range(r)), factors)


def _vec_mul(products, u, v, factors):
    r = len(factors)
    out = [0] * r
    for i in range(r):
        if u[i]:
            for j in range(r):
                if v[j]:
                    p = products[i][j]
                    for f in range(r):
                        out[f] += u[i] * v[j] * p[f]
    return tuple(o % d for o, d in zip(out, factors))


def _annihilated_by(vec, d, factors):
    return all((d * c) % m == 0 for c, m in zip(vec, factors))


def _rings_over(factors, deadline):
    r = len(factors)
    n = int(np.prod(factors))
    add, _ = _group_add(factors)
    if n == 1:
        yield FiniteRing(add, np.zeros((1, 1), dtype=np.int64), 0, 0, check=False)
        return
    basis = [tuple(int(i == k) for i in range(r)) for k in range(r)]
    free = [(i, j) for i in range(1, r) for j in range(1, r)]
    # e_i * e_j has additive order dividing gcd(d_i, d_j)
    options = []
    for i, j in free:
        g = gcd(factors[i], factors[j])
        options.append([
            v for v in itertools.product(*(range(d) for d in factors))
            if _annihilated_by(v, g, factors)
        ])
    for choice in itertools.product(*options):
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded(f"enumeration over group {factors} ran past its budget")
        products = [[None] * r for _ in range(r)]
        for k in range(r):
            products[0][k] = basis[k]
            products[k][0] = basis[k]
        for (i, j), v in zip(free, choice):
            products[i][j] = v
        ok = True
        for i, j, k in itertools.product(range(1, r), repeat=3):
            lhs = _vec_mul(products, products[i][j], basis[k], factors)
            rhs = _vec_mul(products, basis[i], products[j][k], factors)
            if lhs != rhs:
                ok = False
                break
        if not ok:
            continue
        mul = bilinear_table(factors, products)
        one = int(np.ravel_multi_index(basis[0], factors))
        yield FiniteRing(add, mul, 0, one, check=True)


def canonical_labelings(R: FiniteRing):
    """Yield relabelings (old index -> new index) induced by generator sequences.

    A sequence starts at the identity and greedily appends elements outside
    the additive span so far until the span is everything. The induced order
    lists the span coset by coset. The family of sequences is preserved by
    isomorphisms, so the least table over it is an isomorphism invariant.
    """
    n = R.order
    A = R.add.tolist()
    if n == 1:
        yield [0]
        return

    def extend(listed, h):
        member = set(listed)
        out = list(listed)
        shift = h
        while shift not in member:
            out.extend(A[e][shift] for e in listed)
            shift = A[shift][h]
        return out

    def walk(listed):
        if len(listed) == n:
            perm = [0] * n
            for new, old in enumerate(listed):
                perm[old] = new
            yield perm
            return
        member = set(listed)
        for g in range(n):
            if g not in member:
                yield from walk(extend(listed, g))

    yield from walk(extend([R.zero], R.one))


def canonical_form(R: FiniteRing) -> bytes:
    """Least serialization of (add, mul) over the canonical labelings.

    Equal byte strings iff the rings are isomorphic.
    """
    if not 1 <= R.order <= MAX_GROUP_ORDER:
        raise ValueError(f"canonical_form needs order in 1..{MAX_GROUP_ORDER}, got {R.order}")
    n = R.order
    best = None
    for perm in canonical_labelings(R):
        p = np.asarray(perm)
        inv = np.empty_like(p)
        inv[p] = np.arange(n)
        grid = (inv[:, None], inv[None, :])
        blob = bytes([n]) + p[R.add[grid]].astype(np.uint8).tobytes() + p[R.mul[grid]].astype(np.uint8).tobytes()
        if best is None or blob < best:
            best = blob
    return best


def ring_from_canonical(blob: bytes, label="") -> FiniteRing:
    n = blob[0]
    body = np.frombuffer(blob[1:], dtype=np.uint8).astype(np.int64)
    add = body[: n * n].reshape(n, n)
    mul = body[n * n:].reshape(n, n)
    return FiniteRing(add, mul, 0, 1 % n, label, check=False)


def enumerate_unital_rings(n: int, max_order: int = DEFAULT_MAX_RING_ORDER,
                           budget: float | None = None) -> list[FiniteRing]:
    """All unital rings of order n, one per isomorphism class.

    Rings come back relabeled into canonical form, sorted by it, and labelled
    ``R{n}.{i}``.
    """
    if not isinstance(n, int) or not 1 <= n <= min(max_order, MAX_GROUP_ORDER):
        raise ValueError(f"order must be in 1..{min(max_order, MAX_GROUP_ORDER)}, got {n!r}")
    deadline = None if budget is None else time.monotonic() + budget
    forms = set()
    for factors in abelian_group_factors(n):
        for R in _rings_over(factors, deadline):
            forms.add(canonical_form(R))
    rings = []
    for i, blob in enumerate(sorted(forms)):
        R = ring_from_canonical(blob, f"R{n}.{i}")
        assert validate(R.add, R.mul, R.zero, R.one, R.order).ok
        rings.append(R)
    return rings


def canonical_hash(R: FiniteRing) -> str:
    return hashlib.sha256(canonical_form(R)).hexdigest()[:16]


def emit(rings, directory) -> list[Path]:
    """Write each ring as a table-literal spec named by its canonical hash."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for R in rings:
        path = out / f"{canonical_hash(R)}.json"
        save_spec(to_table_spec(R), path)
        paths.append(path)
    return paths
