"""Littlewood-Richardson coefficients and the stable branching coefficients
built from them.

Every family is computed as a sparse expansion (a ``Counter``) rather than by
looping over all candidate partitions: for instance ``coproduct(lam)`` holds
every nonzero ``c^lam_{alpha, beta}`` at once.  The point queries (``lr``,
``c_pair``, ``cap_E`` ...) look values up in those expansions.  All expansions
are cached; they are pure functions of hashable arguments.
"""
from __future__ import annotations

import enum
from collections import Counter, defaultdict
from functools import cache
from typing import Sequence

from .partitions import (
    EMPTY,
    Partition,
    PartitionPair,
    conjugate,
    contains,
    partitions_of,
    subpartitions,
)

# ---------------------------------------------------------------------------
# Littlewood-Richardson tableaux


@cache
def skew_expansion(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """``{nu: c^lam_{mu, nu}}`` by counting LR tableaux of shape lam/mu.

    Cells are filled in reverse reading order (rows top to bottom, each row
    right to left); the running content must stay a lattice word.
    """
    if not contains(lam, mu):
        return {}
    rows = len(lam)
    mu_ext = tuple(mu) + (0,) * (rows - len(mu))
    cells = [(r, c) for r in range(rows) for c in range(lam[r] - 1, mu_ext[r] - 1, -1)]
    if not cells:
        return {EMPTY: 1}

    filling: dict[tuple[int, int], int] = {}
    content = [0] * (rows + 1)
    out: Counter = Counter()

    def rec(k: int) -> None:
        if k == len(cells):
            out[Partition(x for x in content if x)] += 1
            return
        r, c = cells[k]
        hi = r  # an entry in row r is at most r (0-based labels)
        right = filling.get((r, c + 1))
        if right is not None:
            hi = min(hi, right)
        above = filling.get((r - 1, c))
        lo = above + 1 if above is not None else 0
        for v in range(lo, hi + 1):
            if v > 0 and content[v] + 1 > content[v - 1]:
                continue
            filling[(r, c)] = v
            content[v] += 1
            rec(k + 1)
            content[v] -= 1
            del filling[(r, c)]

    rec(0)
    return dict(out)


def lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    """The Littlewood-Richardson coefficient c^lam_{mu, nu}."""
    if lam.size() != mu.size() + nu.size():
        return 0
    return skew_expansion(lam, mu).get(nu, 0)


@cache
def coproduct(lam: Partition) -> dict[tuple[Partition, Partition], int]:
    """``{(alpha, beta): c^lam_{alpha, beta}}`` over all nonzero terms."""
    out = {}
    for alpha in subpartitions(lam):
        for beta, c in skew_expansion(lam, alpha).items():
            out[(alpha, beta)] = c
    return out


@cache
def _coproduct_by_first(lam: Partition) -> dict[Partition, tuple[tuple[Partition, int], ...]]:
    idx = defaultdict(list)
    for (a, b), c in coproduct(lam).items():
        idx[a].append((b, c))
    return {k: tuple(v) for k, v in idx.items()}


@cache
def _coproduct_by_second(lam: Partition) -> dict[Partition, tuple[tuple[Partition, int], ...]]:
    idx = defaultdict(list)
    for (a, b), c in coproduct(lam).items():
        idx[b].append((a, c))
    return {k: tuple(v) for k, v in idx.items()}


@cache
def product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``{lam: c^lam_{mu, nu}}``: the Schur function product s_mu * s_nu."""
    if not mu:
        return {nu: 1}
    if not nu:
        return {mu: 1}
    total = mu.size() + nu.size()
    width = (mu[0] if mu else 0) + (nu[0] if nu else 0)
    height = len(mu) + len(nu)
    out = {}
    for lam in partitions_of(total):
        if lam[0] > width or len(lam) > height or not contains(lam, mu):
            continue
        c = skew_expansion(lam, mu).get(nu, 0)
        if c:
            out[lam] = c
    return out


def _add_into(acc: Counter, expansion: dict, scale: int) -> None:
    for key, value in expansion.items():
        acc[key] += scale * value


# ---------------------------------------------------------------------------
# generalized LR coefficients


@cache
def lr_chain(lam: Partition, n: int) -> dict[tuple[Partition, ...], int]:
    """``{(beta_1..beta_n): c^lam_{beta_1..beta_n}}`` for n >= 1.

    Uses c^lam_{alpha_1 beta_1} c^{alpha_1}_{alpha_2 beta_2} ... with the last
    factor c^{alpha_{n-2}}_{beta_{n-1} beta_n}.
    """
    if n < 1:
        raise ValueError("need at least one beta")
    if n == 1:
        return {(lam,): 1}
    if n == 2:
        return {(a, b): c for (a, b), c in coproduct(lam).items()}
    out: Counter = Counter()
    for (alpha, beta), c in coproduct(lam).items():
        for rest, c2 in lr_chain(alpha, n - 1).items():
            out[(beta,) + rest] += c * c2
    return dict(out)


def lr_multi(lam: Partition, betas: Sequence[Partition]) -> int:
    betas = tuple(Partition(b) for b in betas)
    if not betas:
        raise ValueError("betas must be non-empty")
    if lam.size() != sum(b.size() for b in betas):
        return 0
    return lr_chain(lam, len(betas)).get(betas, 0)


# ---------------------------------------------------------------------------
# gl: pairs of partitions


@cache
def pair_coproduct(target: PartitionPair) -> dict[tuple[PartitionPair, PartitionPair], int]:
    """Restriction gl(2k) -> gl(k) x gl(k):
    ``{(a, b): c^{target}_{a, b}}`` with the delta-contraction sum."""
    lam, mu = target
    out: Counter = Counter()
    by_delta = _coproduct_by_second(mu)
    for (gp, delta), c1 in coproduct(lam).items():
        for gm, c2 in by_delta.get(delta, ()):
            for (ap, bp), c3 in coproduct(gp).items():
                for (am, bm), c4 in coproduct(gm).items():
                    out[(PartitionPair(ap, am), PartitionPair(bp, bm))] += c1 * c2 * c3 * c4
    return dict(out)


@cache
def pair_tensor(a: PartitionPair, b: PartitionPair) -> dict[PartitionPair, int]:
    """Stable tensor product of mixed gl(k) modules:
    ``{(lam', mu'): d^{(lam', mu')}_{a, b}}``."""
    ap, am = a
    bp, bm = b
    out: Counter = Counter()
    bm_by_first = _coproduct_by_first(bm)
    bp_by_first = _coproduct_by_first(bp)
    for (a1, g1), c1 in coproduct(ap).items():
        for b2, c2 in bm_by_first.get(g1, ()):
            for (b1, g2), c3 in coproduct(am).items():
                for a2, c4 in bp_by_first.get(g2, ()):
                    w = c1 * c2 * c3 * c4
                    plus = product(a1, a2)
                    minus = product(b1, b2)
                    for lp, x in plus.items():
                        for lm, y in minus.items():
                            out[PartitionPair(lp, lm)] += w * x * y
    return dict(out)


def c_pair(target: PartitionPair, a: PartitionPair, b: PartitionPair) -> int:
    return pair_coproduct(_pair(target)).get((_pair(a), _pair(b)), 0)


def d_pair(target: PartitionPair, a: PartitionPair, b: PartitionPair) -> int:
    return pair_tensor(_pair(a), _pair(b)).get(_pair(target), 0)


def _pair(x) -> PartitionPair:
    return PartitionPair(Partition(x[0]), Partition(x[1]))


# ---------------------------------------------------------------------------
# sp / so


def _columns_even(eta: Partition) -> bool:
    """eta = (2 delta)^T for some delta."""
    return all(p % 2 == 0 for p in conjugate(eta))


def _rows_even(eta: Partition) -> bool:
    """eta = 2 delta for some delta."""
    return all(p % 2 == 0 for p in eta)


def _even_coproduct(lam: Partition, keep) -> dict[tuple[Partition, Partition], int]:
    out: Counter = Counter()
    for (gamma, eta), c1 in coproduct(lam).items():
        if not keep(eta):
            continue
        for (mu, nu), c2 in coproduct(gamma).items():
            out[(mu, nu)] += c1 * c2
    return dict(out)


@cache
def e_coproduct(lam: Partition) -> dict[tuple[Partition, Partition], int]:
    """Restriction sp(4k) -> sp(2k) x sp(2k): ``{(mu, nu): e^lam_{mu, nu}}``."""
    return _even_coproduct(lam, _columns_even)


@cache
def g_coproduct(lam: Partition) -> dict[tuple[Partition, Partition], int]:
    """Restriction so(2k) -> so(k) x so(k): ``{(mu, nu): g^lam_{mu, nu}}``."""
    return _even_coproduct(lam, _rows_even)


@cache
def nl_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """Stable sp/so tensor product ``{lam': f^{lam'}_{mu, nu}}``."""
    out: Counter = Counter()
    nu_by_second = _coproduct_by_second(nu)
    for (alpha, gamma), c1 in coproduct(mu).items():
        for beta, c2 in nu_by_second.get(gamma, ()):
            _add_into(out, product(alpha, beta), c1 * c2)
    return dict(out)


def e_small(lam: Partition, mu: Partition, nu: Partition) -> int:
    return e_coproduct(Partition(lam)).get((Partition(mu), Partition(nu)), 0)


def f_small(lam: Partition, mu: Partition, nu: Partition) -> int:
    return nl_product(Partition(mu), Partition(nu)).get(Partition(lam), 0)


def g_small(lam: Partition, mu: Partition, nu: Partition) -> int:
    return g_coproduct(Partition(lam)).get((Partition(mu), Partition(nu)), 0)


# ---------------------------------------------------------------------------
# n-fold chains (capital coefficients)


def _restriction_chain(top, n: int, split) -> dict[tuple, int]:
    # top -> (alpha_1, beta_1) -> alpha_1 -> (alpha_2, beta_2) ... with the last
    # split producing (beta_{n-1}, beta_n)
    if n == 1:
        return {(top,): 1}
    if n == 2:
        return dict(split(top))
    out: Counter = Counter()
    for (alpha, beta), c in split(top).items():
        for rest, c2 in _restriction_chain(alpha, n - 1, split).items():
            out[(beta,) + rest] += c * c2
    return dict(out)


def _tensor_chain(betas: tuple, mult) -> dict:
    # ((beta_1 (x) beta_2) (x) beta_3) ... (x) beta_n
    acc: dict = {betas[0]: 1}
    for b in betas[1:]:
        nxt: Counter = Counter()
        for a, c in acc.items():
            _add_into(nxt, mult(a, b), c)
        acc = dict(nxt)
    return acc


@cache
def cap_C_chain(target: PartitionPair, n: int) -> dict[tuple[PartitionPair, ...], int]:
    return _restriction_chain(target, n, pair_coproduct)


@cache
def cap_D_chain(betas: tuple[PartitionPair, ...]) -> dict[PartitionPair, int]:
    return _tensor_chain(betas, pair_tensor)


@cache
def cap_E_chain(lam: Partition, n: int) -> dict[tuple[Partition, ...], int]:
    return _restriction_chain(lam, n, e_coproduct)


@cache
def cap_G_chain(lam: Partition, n: int) -> dict[tuple[Partition, ...], int]:
    return _restriction_chain(lam, n, g_coproduct)


@cache
def cap_F_chain(betas: tuple[Partition, ...]) -> dict[Partition, int]:
    return _tensor_chain(betas, nl_product)


def _check_arity(betas: Sequence) -> None:
    if len(betas) < 2:
        raise ValueError("capital coefficients need at least two betas")


def cap_C(target: PartitionPair, beta_pairs: Sequence[PartitionPair]) -> int:
    _check_arity(beta_pairs)
    betas = tuple(_pair(b) for b in beta_pairs)
    return cap_C_chain(_pair(target), len(betas)).get(betas, 0)


def cap_D(target: PartitionPair, beta_pairs: Sequence[PartitionPair]) -> int:
    _check_arity(beta_pairs)
    betas = tuple(_pair(b) for b in beta_pairs)
    return cap_D_chain(betas).get(_pair(target), 0)


def cap_E(lam: Partition, betas: Sequence[Partition]) -> int:
    _check_arity(betas)
    betas = tuple(Partition(b) for b in betas)
    return cap_E_chain(Partition(lam), len(betas)).get(betas, 0)


def cap_F(lam: Partition, betas: Sequence[Partition]) -> int:
    _check_arity(betas)
    betas = tuple(Partition(b) for b in betas)
    return cap_F_chain(betas).get(Partition(lam), 0)


def cap_G(lam: Partition, betas: Sequence[Partition]) -> int:
    _check_arity(betas)
    betas = tuple(Partition(b) for b in betas)
    return cap_G_chain(Partition(lam), len(betas)).get(betas, 0)


# ---------------------------------------------------------------------------
# uniform query surface (CLI ``coeff``)


class Family(enum.Enum):
    LR = "lr"
    LR_MULTI = "lr_multi"
    C_PAIR = "c_pair"
    D_PAIR = "d_pair"
    CAP_C = "cap_C"
    CAP_D = "cap_D"
    E_SMALL = "e"
    F_SMALL = "f"
    G_SMALL = "g"
    CAP_E = "cap_E"
    CAP_F = "cap_F"
    CAP_G = "cap_G"


_PAIR_FAMILIES = {Family.C_PAIR, Family.D_PAIR, Family.CAP_C, Family.CAP_D}
_TRIPLES = {
    Family.LR: lr,
    Family.C_PAIR: c_pair,
    Family.D_PAIR: d_pair,
    Family.E_SMALL: e_small,
    Family.F_SMALL: f_small,
    Family.G_SMALL: g_small,
}
_CHAINS = {
    Family.LR_MULTI: lr_multi,
    Family.CAP_C: cap_C,
    Family.CAP_D: cap_D,
    Family.CAP_E: cap_E,
    Family.CAP_F: cap_F,
    Family.CAP_G: cap_G,
}


def uses_pairs(family: Family) -> bool:
    return family in _PAIR_FAMILIES


def coefficient(family: Family | str, target, args: Sequence) -> int:
    """Evaluate one coefficient: ``target`` is the superscript, ``args`` the
    subscripts (exactly two for the small families, one or more otherwise)."""
    family = Family(family)
    if family in _TRIPLES:
        if len(args) != 2:
            raise ValueError(f"{family.value} takes exactly two subscripts")
        return _TRIPLES[family](target, args[0], args[1])
    return _CHAINS[family](target, list(args))
