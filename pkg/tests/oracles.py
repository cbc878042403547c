"""Brute-force oracles. Plain loops over lists; nothing from finring's deciders."""

import itertools


def tables(R):
    return R.add.tolist(), R.mul.tolist(), R.zero, R.one


def broken_axioms(add, mul, zero, one):
    n = len(add)
    rng = range(n)
    out = set()
    for a, b, c in itertools.product(rng, repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            out.add("additive associativity")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            out.add("multiplicative associativity")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            out.add("left distributivity")
        if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
            out.add("right distributivity")
    for a in rng:
        if add[zero][a] != a or add[a][zero] != a:
            out.add("no additive identity")
        if mul[one][a] != a or mul[a][one] != a:
            out.add("no multiplicative identity")
        if zero not in add[a]:
            out.add("additive inverses")
        for b in rng:
            if add[a][b] != add[b][a]:
                out.add("additive commutativity")
    return out


def is_ring(add, mul, zero, one):
    return not broken_axioms(add, mul, zero, one)


def find_one(mul):
    n = len(mul)
    for e in range(n):
        if all(mul[e][a] == a and mul[a][e] == a for a in range(n)):
            return e
    return None


def brute_isomorphic(R, S):
    """Any bijection preserving + and *; tries all permutations (small n only)."""
    ra, rm, rz, ro = tables(R)
    sa, sm, sz, so = tables(S)
    n = len(ra)
    if n != len(sa):
        return False
    for perm in itertools.permutations(range(n)):
        if perm[rz] != sz or perm[ro] != so:
            continue
        if all(perm[ra[a][b]] == sa[perm[a]][perm[b]] and perm[rm[a][b]] == sm[perm[a]][perm[b]]
               for a in range(n) for b in range(n)):
            return True
    return False


def units_of(R, kind="two_sided"):
    _, mul, _, one = tables(R)
    n = len(mul)
    left = {u for u in range(n) if any(mul[v][u] == one for v in range(n))}
    right = {u for u in range(n) if any(mul[u][v] == one for v in range(n))}
    return {"left": left, "right": right, "two_sided": left & right}[kind]


def neg(add, zero, a):
    return next(b for b in range(len(add)) if add[a][b] == zero)


def sr1_brute(R):
    """Full (a, x, b) cube, b not solved for."""
    add, mul, zero, one = tables(R)
    U = units_of(R)
    n = len(add)
    for a, x, b in itertools.product(range(n), repeat=3):
        if add[mul[a][x]][b] == one:
            if not any(add[a][mul[b][y]] in U for y in range(n)):
                return False
    return True


def df_brute(R):
    _, mul, _, one = tables(R)
    n = len(mul)
    return all(mul[b][a] == one for a in range(n) for b in range(n) if mul[a][b] == one)


def left_ideal(R, c):
    _, mul, _, _ = tables(R)
    return frozenset(mul[r][c] for r in range(len(mul)))


def left_ann(R, c):
    _, mul, zero, _ = tables(R)
    return frozenset(r for r in range(len(mul)) if mul[r][c] == zero)


def lifting_left_brute(R):
    add, mul, zero, one = tables(R)
    n = len(add)
    LU = units_of(R, "left")
    for b, c in itertools.product(range(n), repeat=2):
        I = left_ideal(R, c)
        if any(add[mul[a][b]][neg(add, zero, one)] in I for a in range(n)):
            if not any(add[b][neg(add, zero, u)] in I for u in LU):
                return False
    return True


def qm_left_brute(R):
    n = R.order
    return {left_ideal(R, a) for a in range(n)} == {left_ann(R, a) for a in range(n)}


def pa_left_brute(R):
    n = R.order
    anns = {left_ann(R, a) for a in range(n)}
    return all(left_ideal(R, a) in anns for a in range(n))


def ug_left_brute(R):
    _, mul, _, _ = tables(R)
    n = len(mul)
    U = units_of(R)
    for a, b in itertools.product(range(n), repeat=2):
        if left_ideal(R, a) == left_ideal(R, b) and not any(mul[u][b] == a for u in U):
            return False
    return True


def cyclic_add(d):
    return [[(a + b) % d for b in range(d)] for a in range(d)]


def direct_sum(t1, t2):
    n1, n2 = len(t1), len(t2)
    return [[t1[a // n2][b // n2] * n2 + t2[a % n2][b % n2] for b in range(n1 * n2)]
            for a in range(n1 * n2)]


def _groups(n):
    # abelian groups written out by hand for the orders the oracle covers
    z = cyclic_add
    return {
        1: [z(1)], 2: [z(2)], 3: [z(3)], 4: [z(4), direct_sum(z(2), z(2))],
        5: [z(5)], 6: [z(6)], 7: [z(7)],
        8: [z(8), direct_sum(z(4), z(2)), direct_sum(direct_sum(z(2), z(2)), z(2))],
    }[n]


def _generators(add):
    """Small generating set of the additive group, greedily."""
    n = len(add)
    span = {0}
    gens = []
    for g in range(n):
        if g in span:
            continue
        gens.append(g)
        frontier = set(span)
        while True:
            new = {add[s][h] for s in frontier for h in gens} | frontier
            if new == frontier:
                break
            frontier = new
        span = frontier
        if len(span) == n:
            break
    return gens


def _expand(add, gens, prods):
    """Multiplication table from generator products via bilinearity, or None if ill-defined."""
    n = len(add)
    # express every element as an integer combination of generators
    combo = {0: (0,) * len(gens)}
    queue = [0]
    while queue:
        e = queue.pop(0)
        for k, g in enumerate(gens):
            f = add[e][g]
            if f not in combo:
                v = list(combo[e])
                v[k] += 1
                combo[f] = tuple(v)
                queue.append(f)

    def times(k, e):
        out = 0
        for _ in range(k):
            out = add[out][e]
        return out

    mul = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            acc = 0
            for i, ci in enumerate(combo[a]):
                for j, cj in enumerate(combo[b]):
                    acc = add[acc][times(ci * cj, prods[i][j])]
            mul[a][b] = acc
    return mul


def naive_unital_rings(n):
    """Representatives of unital rings of order n.

    Order <= 3: every n x n table over every group is tried. Larger orders:
    every assignment of products to a generating set (no normalization of
    the identity), expanded bilinearly. Rings are filtered by the full axiom
    check and deduplicated by brute-force isomorphism.
    """
    from finring.ring import FiniteRing

    found = []
    for add in _groups(n):
        if n <= 3:
            candidates = (
                [list(row) for row in zip(*[iter(flat)] * n)]
                for flat in itertools.product(range(n), repeat=n * n)
            )
        else:
            gens = _generators(add)
            g = len(gens)
            candidates = (
                _expand(add, gens, [list(p[i * g:(i + 1) * g]) for i in range(g)])
                for p in itertools.product(range(n), repeat=g * g)
            )
        for mul in candidates:
            one = find_one(mul)
            if one is None or not is_ring(add, mul, 0, one):
                continue
            R = FiniteRing(add, mul, 0, one, check=False)
            if not any(brute_isomorphic(R, S) for S in found):
                found.append(R)
    return found


def brute_least_isomorphism(R, S):
    """First isomorphism in lexicographic order of permutations."""
    ra, rm, rz, ro = tables(R)
    sa, sm, sz, so = tables(S)
    n = len(ra)
    for perm in itertools.permutations(range(n)):
        if perm[rz] != sz or perm[ro] != so:
            continue
        if all(perm[ra[a][b]] == sa[perm[a]][perm[b]] and perm[rm[a][b]] == sm[perm[a]][perm[b]]
               for a in range(n) for b in range(n)):
            return list(perm)
    return None
