"""Ring-spec documents: parsing, construction and table-literal serialization.

A spec is a JSON-compatible dict, one of::

    {"kind": "zn", "n": 6}
    {"kind": "product", "factors": [spec, spec, ...]}
    {"kind": "matrix", "base": spec, "k": 2}
    {"kind": "triangular", "base": spec, "k": 2}
    {"kind": "opposite", "base": spec}
    {"kind": "table", "order": n, "add": [[...]], "mul": [[...]],
     "zero": z, "one": e, "label": "..."}

Element indexing is fixed: products are mixed-radix with the leftmost factor
most significant; matrix entries are read row-major as base-|R| digits with
the (0, 0) entry most significant; triangular rings use only the entries on
and above the diagonal, row-major.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .ring import DEFAULT_MAX_ORDER, FiniteRing, RingError, opposite

KINDS = ("zn", "product", "matrix", "triangular", "opposite", "table")

# structural constructions of valid rings are rings; re-checking every axiom
# is O(n^3) so it only runs below this order
STRUCTURAL_VALIDATE_LIMIT = 512


class SpecError(ValueError):
    """Malformed spec document; ``field`` names the offending key path."""

    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


def _int_field(doc, key, path, minimum):
    if key not in doc:
        raise SpecError(f"{path}.{key}", "missing")
    v = doc[key]
    if isinstance(v, bool) or not isinstance(v, int):
        raise SpecError(f"{path}.{key}", f"expected integer, got {v!r}")
    if v < minimum:
        raise SpecError(f"{path}.{key}", f"must be >= {minimum}")
    return v


def spec_order(doc, path="spec"):
    """Order of the ring a spec describes, without building it."""
    if not isinstance(doc, dict):
        raise SpecError(path, "expected an object")
    kind = doc.get("kind")
    if kind not in KINDS:
        raise SpecError(f"{path}.kind", f"unknown kind {kind!r}")
    if kind == "zn":
        return _int_field(doc, "n", path, 1)
    if kind == "product":
        factors = doc.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise SpecError(f"{path}.factors", "product needs at least 2 factors")
        order = 1
        for i, f in enumerate(factors):
            order *= spec_order(f, f"{path}.factors[{i}]")
        return order
    if kind in ("matrix", "triangular"):
        k = _int_field(doc, "k", path, 1)
        if "base" not in doc:
            raise SpecError(f"{path}.base", "missing")
        m = spec_order(doc["base"], f"{path}.base")
        cells = k * k if kind == "matrix" else k * (k + 1) // 2
        return m**cells
    if kind == "opposite":
        if "base" not in doc:
            raise SpecError(f"{path}.base", "missing")
        return spec_order(doc["base"], f"{path}.base")
    order = _int_field(doc, "order", path, 1)
    for key in ("add", "mul"):
        t = doc.get(key)
        if (not isinstance(t, list) or len(t) != order
                or any(not isinstance(row, list) or len(row) != order for row in t)):
            raise SpecError(f"{path}.{key}", f"expected {order}x{order} integer table")
    _int_field(doc, "zero", path, 0)
    _int_field(doc, "one", path, 0)
    if "label" in doc and not isinstance(doc["label"], str):
        raise SpecError(f"{path}.label", "expected string")
    return order


def zn(n: int) -> FiniteRing:
    idx = np.arange(n)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    return FiniteRing(add, mul, 0, 1 % n, f"Z/{n}", check=False)


def _label(R):
    return R.label or "table"


def product(factors) -> FiniteRing:
    sizes = [R.order for R in factors]
    n = int(np.prod(sizes))
    # digits[i, f] = component of element i in factor f, leftmost most significant
    digits = np.array(np.unravel_index(np.arange(n), sizes)).T.reshape(n, len(sizes))

    def combine(table_of):
        comps = [table_of(R)[digits[:, f][:, None], digits[:, f][None, :]]
                 for f, R in enumerate(factors)]
        return np.ravel_multi_index(comps, sizes)

    add = combine(lambda R: R.add)
    mul = combine(lambda R: R.mul)
    zero = int(np.ravel_multi_index([R.zero for R in factors], sizes))
    one = int(np.ravel_multi_index([R.one for R in factors], sizes))
    label = " x ".join(
        f"({_label(R)})" if " x " in _label(R) else _label(R) for R in factors
    )
    return FiniteRing(add, mul, zero, one, label, check=False)


def _matrix_like(B: FiniteRing, k: int, cells, label):
    m, c = B.order, len(cells)
    n = m**c
    pos = {cell: p for p, cell in enumerate(cells)}
    digits = np.array(np.unravel_index(np.arange(n), [m] * c)).T.reshape(n, c)
    BA = B.add.astype(np.int64)
    BM = B.mul.astype(np.int64)
    add_digits, mul_digits = [], []
    for (i, j) in cells:
        p = pos[(i, j)]
        add_digits.append(BA[digits[:, p][:, None], digits[:, p][None, :]])
        acc = np.full((n, n), B.zero, dtype=np.int64)
        for l in range(k):
            if (i, l) in pos and (l, j) in pos:
                left = digits[:, pos[(i, l)]][:, None]
                right = digits[:, pos[(l, j)]][None, :]
                acc = BA[acc, BM[left, right]]
        mul_digits.append(acc)
    add = np.ravel_multi_index(add_digits, [m] * c)
    mul = np.ravel_multi_index(mul_digits, [m] * c)
    zero = int(np.ravel_multi_index([B.zero] * c, [m] * c))
    one = int(np.ravel_multi_index([B.one if i == j else B.zero for (i, j) in cells], [m] * c))
    return FiniteRing(add, mul, zero, one, label, check=False)


def matrix_ring(B: FiniteRing, k: int) -> FiniteRing:
    cells = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_like(B, k, cells, f"M{k}({_label(B)})")


def triangular_ring(B: FiniteRing, k: int) -> FiniteRing:
    cells = [(i, j) for i in range(k) for j in range(i, k)]
    return _matrix_like(B, k, cells, f"T{k}({_label(B)})")


def construct(spec: dict, max_order: int = DEFAULT_MAX_ORDER) -> FiniteRing:
    """Build the ring described by `spec`.

    Raises SpecError for malformed documents or an order above `max_order`,
    and RingError when a table literal fails validation.
    """
    order = spec_order(spec)
    if order > max_order:
        raise SpecError("spec", f"order {order} exceeds cap {max_order}")
    R = _build(spec)
    if spec["kind"] != "table" and R.order <= STRUCTURAL_VALIDATE_LIMIT:
        # cheap insurance against constructor bugs
        from .ring import validate

        report = validate(R.add, R.mul, R.zero, R.one, R.order)
        if not report.ok:
            raise RingError(f"{R.label}: constructed tables fail {report.violations[0][0]}", report)
    return R


def _build(spec):
    kind = spec["kind"]
    if kind == "zn":
        return zn(spec["n"])
    if kind == "product":
        return product([_build(f) for f in spec["factors"]])
    if kind == "matrix":
        return matrix_ring(_build(spec["base"]), spec["k"])
    if kind == "triangular":
        return triangular_ring(_build(spec["base"]), spec["k"])
    if kind == "opposite":
        return opposite(_build(spec["base"]))
    return FiniteRing(spec["add"], spec["mul"], spec["zero"], spec["one"],
                      spec.get("label", "table"))


def to_table_spec(R: FiniteRing, label=None) -> dict:
    """Table-literal document reproducing `R` exactly."""
    return {
        "kind": "table",
        "order": R.order,
        "add": R.add.tolist(),
        "mul": R.mul.tolist(),
        "zero": R.zero,
        "one": R.one,
        "label": R.label if label is None else label,
    }


def dumps(spec: dict) -> str:
    return json.dumps(spec, sort_keys=True, separators=(",", ":"))


def load_spec(path) -> dict:
    """Read one spec document; OSError/ValueError propagate to the caller."""
    with open(Path(path), encoding="utf-8") as fh:
        return json.load(fh)


def save_spec(spec: dict, path) -> None:
    Path(path).write_text(dumps(spec) + "\n", encoding="utf-8")
