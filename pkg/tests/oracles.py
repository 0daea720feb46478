"""Slow reference implementations used only by the tests.

Nothing here calls into ``diagquiver.coefficients``.  LR coefficients are
counted by enumerating every filling of the skew shape, and each derived
coefficient is a literal loop over its defining sum with only the
degree-counting shortcut (sizes must add up) applied.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache


def parts(d: int, largest: int | None = None):
    largest = d if largest is None else largest
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in parts(d - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def parts_of(d: int) -> tuple:
    return tuple(parts(d))


@lru_cache(maxsize=None)
def parts_up_to(d: int) -> tuple:
    return tuple(p for m in range(d + 1) for p in parts_of(m))


def conj(lam):
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0])) if lam else ()


@lru_cache(maxsize=None)
def lr(lam, mu, nu) -> int:
    """Count fillings of lam/mu with content nu that are semistandard and
    whose right-to-left, top-to-bottom reading word is a lattice word."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    mu_ext = mu + (0,) * (len(lam) - len(mu))
    if len(mu) > len(lam) or any(m > l for l, m in zip(lam, mu_ext)):
        return 0
    cells = [(r, c) for r in range(len(lam)) for c in range(mu_ext[r], lam[r])]
    if not cells:
        return 1
    count = 0
    for fill in itertools.product(range(len(nu)), repeat=len(cells)):
        if Counter(fill) != Counter({i: v for i, v in enumerate(nu)}):
            continue
        t = dict(zip(cells, fill))
        ok = all(
            (c + 1 >= lam[r] or (r, c + 1) not in t or t[(r, c)] <= t[(r, c + 1)])
            and ((r + 1, c) not in t or t[(r, c)] < t[(r + 1, c)])
            for (r, c) in cells
        )
        if not ok:
            continue
        seen = [0] * len(nu)
        for r in range(len(lam)):
            for c in range(lam[r] - 1, mu_ext[r] - 1, -1):
                v = t[(r, c)]
                seen[v] += 1
                if v and seen[v] > seen[v - 1]:
                    ok = False
                    break
            if not ok:
                break
        count += ok
    return count


# ---------------------------------------------------------------------------
# symmetric group characters by explicit permutation counting (d <= 6)


def _cycle_type(perm) -> tuple:
    seen, out = set(), []
    for i in range(len(perm)):
        if i in seen:
            continue
        length, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        out.append(length)
    return tuple(sorted(out, reverse=True))


def class_size(rho) -> int:
    d = sum(rho)
    return sum(1 for p in itertools.permutations(range(d)) if _cycle_type(p) == tuple(rho))


def lr_via_characters(lam, mu, nu, chi) -> int:
    """<s_mu s_nu, s_lam> through class functions; ``chi(shape, rho)`` is the
    character value supplied by the caller."""
    a, b = sum(mu), sum(nu)
    if sum(lam) != a + b:
        return 0
    total = 0
    for r1 in parts_of(a):
        for r2 in parts_of(b):
            z1 = math.factorial(a) // _class_size_formula(r1)
            z2 = math.factorial(b) // _class_size_formula(r2)
            rho = tuple(sorted(r1 + r2, reverse=True))
            total += chi(lam, rho) * chi(mu, r1) * chi(nu, r2) * 1.0 / (z1 * z2)
    return round(total)


def _class_size_formula(rho) -> int:
    z = 1
    for part, mult in Counter(rho).items():
        z *= part**mult * math.factorial(mult)
    return math.factorial(sum(rho)) // z


# ---------------------------------------------------------------------------
# derived coefficients, literal sums


def lr_multi(lam, betas) -> int:
    """c^lam_{b1..bn} = sum c^lam_{a1 b1} c^{a1}_{a2 b2} ... c^{a_{n-2}}_{b_{n-1} b_n}."""
    betas = [tuple(b) for b in betas]
    if len(betas) == 1:
        return int(tuple(lam) == betas[0])
    if len(betas) == 2:
        return lr(tuple(lam), betas[0], betas[1])
    rest = betas[1:]
    size = sum(sum(b) for b in rest)
    return sum(lr(tuple(lam), a, betas[0]) * lr_multi(a, rest) for a in parts_of(size))


def c_pair(target, a, b) -> int:
    (lam, mu), (ap, am), (bp, bm) = target, a, b
    total = 0
    for delta in parts_up_to(min(sum(lam), sum(mu))):
        for gp in parts_of(sum(lam) - sum(delta)):
            for gm in parts_of(sum(mu) - sum(delta)):
                total += (lr(lam, gp, delta) * lr(mu, gm, delta)
                          * lr(gp, ap, bp) * lr(gm, am, bm))
    return total


def d_pair(target, a, b) -> int:
    """sum c^{a+}_{a1 g1} c^{b-}_{g1 b2} c^{a-}_{b1 g2} c^{b+}_{g2 a2}
    c^{lam'}_{a1 a2} c^{mu'}_{b1 b2}."""
    (lp, mp), (ap, am), (bp, bm) = target, a, b
    total = 0
    for g1 in parts_up_to(min(sum(ap), sum(bm))):
        for g2 in parts_up_to(min(sum(am), sum(bp))):
            for a1 in parts_of(sum(ap) - sum(g1)):
                for a2 in parts_of(sum(bp) - sum(g2)):
                    x = lr(ap, a1, g1) * lr(bp, g2, a2) * lr(lp, a1, a2)
                    if not x:
                        continue
                    for b1 in parts_of(sum(am) - sum(g2)):
                        for b2 in parts_of(sum(bm) - sum(g1)):
                            total += (x * lr(bm, g1, b2) * lr(am, b1, g2)
                                      * lr(mp, b1, b2))
    return total


def _pairs_of_total(plus: int, minus: int):
    for a in parts_of(plus):
        for b in parts_of(minus):
            yield (a, b)


def cap_C(target, betas) -> int:
    """c^{(l,m)}_{A1,B1} c^{A1}_{A2,B2} ... c^{A_{n-2}}_{B_{n-1},B_n}."""
    betas = [tuple(map(tuple, b)) for b in betas]
    if len(betas) == 2:
        return c_pair(target, betas[0], betas[1])
    rest = betas[1:]
    # the intermediate pair may carry any split; bound by the target sizes
    total = 0
    for sp in range(sum(target[0]) + 1):
        for sm in range(sum(target[1]) + 1):
            for a in _pairs_of_total(sp, sm):
                x = c_pair(target, a, betas[0])
                if x:
                    total += x * cap_C(a, rest)
    return total


def cap_D(target, betas) -> int:
    """d^{A1}_{B1,B2} d^{A2}_{A1,B3} ... d^{target}_{A_{n-2},B_n}."""
    betas = [tuple(map(tuple, b)) for b in betas]
    if len(betas) == 2:
        return d_pair(target, betas[0], betas[1])
    *init, last = betas
    bound_p = sum(sum(b[0]) + sum(b[1]) for b in init)
    total = 0
    for sp in range(bound_p + 1):
        for sm in range(bound_p + 1):
            for a in _pairs_of_total(sp, sm):
                x = d_pair(target, a, last)
                if x:
                    total += x * cap_D(a, init)
    return total


def e_small(lam, mu, nu) -> int:
    total = 0
    for delta in parts_up_to(sum(lam) // 2):
        two_t = conj(tuple(2 * x for x in delta))
        for gamma in parts_of(sum(lam) - 2 * sum(delta)):
            total += lr(gamma, mu, nu) * lr(lam, gamma, two_t)
    return total


def g_small(lam, mu, nu) -> int:
    total = 0
    for delta in parts_up_to(sum(lam) // 2):
        two = tuple(2 * x for x in delta)
        for gamma in parts_of(sum(lam) - 2 * sum(delta)):
            total += lr(gamma, mu, nu) * lr(lam, gamma, two)
    return total


def f_small(lp, mu, nu) -> int:
    total = 0
    for gp in parts_up_to(min(sum(mu), sum(nu))):
        for a in parts_of(sum(mu) - sum(gp)):
            for b in parts_of(sum(nu) - sum(gp)):
                total += lr(lp, a, b) * lr(mu, a, gp) * lr(nu, b, gp)
    return total


def _restriction(small):
    def cap(lam, betas):
        betas = [tuple(b) for b in betas]
        if len(betas) == 2:
            return small(tuple(lam), betas[0], betas[1])
        return sum(
            small(tuple(lam), a, betas[0]) * cap(a, betas[1:])
            for a in parts_up_to(sum(lam))
        )
    return cap


cap_E = _restriction(e_small)
cap_G = _restriction(g_small)


def cap_F(lp, betas) -> int:
    """f^{a1}_{b1 b2} f^{a2}_{a1 b3} ... f^{lam'}_{a_{n-2} b_n}."""
    betas = [tuple(b) for b in betas]
    if len(betas) == 2:
        return f_small(tuple(lp), betas[0], betas[1])
    *init, last = betas
    bound = sum(sum(b) for b in init)
    return sum(f_small(tuple(lp), a, last) * cap_F(a, init) for a in parts_up_to(bound))


# ---------------------------------------------------------------------------
# matrices by summing over every tuple of subscripts


def type1_matrix(n: int, d: int):
    labels = parts_of(d)
    tuples = [t for t in itertools.product(parts_up_to(d), repeat=n) if sum(map(sum, t)) == d]
    return [[sum(lr_multi(l, t) * lr_multi(m, t) for t in tuples) for m in labels]
            for l in labels]


def pair_labels(p: int, q: int):
    out = []
    for sp in range(p, max(p - q, 0) - 1, -1):
        for a in parts_of(sp):
            for b in parts_of(sp - (p - q)):
                out.append((a, b))
    return out


def type2_matrix(n: int, p: int, q: int):
    labels = pair_labels(p, q)
    pool = [(a, b) for a in parts_up_to(p) for b in parts_up_to(q)]
    tuples = list(itertools.product(pool, repeat=n))
    out = [[0] * len(labels) for _ in labels]
    for j, col in enumerate(labels):
        for t in tuples:
            c = cap_C(col, t)
            if c:
                for i, row in enumerate(labels):
                    out[i][j] += c * cap_D(row, t)
    return out


def parity_labels(p: int):
    return [lam for s in range(p, -1, -2) for lam in parts_of(s)]


def parity_matrix(kind: str, n: int, p: int):
    cap = cap_E if kind == "D" else cap_G
    labels = parity_labels(p)
    tuples = list(itertools.product(parts_up_to(p), repeat=n))
    out = [[0] * len(labels) for _ in labels]
    for j, col in enumerate(labels):
        for t in tuples:
            c = cap(col, t)
            if c:
                for i, row in enumerate(labels):
                    out[i][j] += c * cap_F(row, t)
    return out


def hook_dim_gl(k: int, lam) -> int:
    """Hook-content formula for gl(k) polynomial modules."""
    num = den = 1
    cl = conj(tuple(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            num *= k + j - i
            den *= (row - j - 1) + (cl[j] - i - 1) + 1
    return num // den
