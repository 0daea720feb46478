"""Weyl dimension formulas and a dimension-count check of branching matrices.

Restricting a module along the diagonal embedding preserves dimension, so
every column of a branching matrix must satisfy

    dim(big module) = sum_rows entry * dim(small module).

None of this uses Littlewood-Richardson coefficients, which makes it an
independent check on the whole coefficient pipeline.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .branching import BranchingMatrix, MatrixFamily
from .partitions import EMPTY, Partition, PartitionPair, conjugate


class Algebra(str, enum.Enum):
    GL = "GL"  # gl(k)
    SP = "SP"  # sp(2k)
    SO = "SO"  # so(k), labelled as O(k) modules


class RankTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class DimensionQuery:
    algebra: Algebra
    k: int
    weight: Partition | PartitionPair


def _gl_dim(weight: list[int]) -> int:
    k = len(weight)
    num = den = 1
    for i in range(k):
        for j in range(i + 1, k):
            num *= weight[i] - weight[j] + j - i
            den *= j - i
    return num // den


def gl_dim(k: int, lam: Partition, mu: Partition = EMPTY) -> int:
    if len(lam) + len(mu) > k:
        raise RankTooSmall(f"({lam},{mu}) does not fit gl({k})")
    w = list(lam) + [0] * (k - len(lam) - len(mu)) + [-m for m in reversed(mu)]
    return _gl_dim(w)


def _bc_dim(l: list[Fraction], rho: list[Fraction], short_roots: bool) -> Fraction:
    r = len(rho)
    out = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            out *= (l[i] ** 2 - l[j] ** 2) / (rho[i] ** 2 - rho[j] ** 2)
        if short_roots:
            out *= l[i] / rho[i]
    return out


def sp_dim(k: int, lam: Partition) -> int:
    """Dimension of the sp(2k) module with highest weight lam."""
    if k < 0 or len(lam) > k:
        raise RankTooSmall(f"{lam} does not fit sp({2 * k})")
    rho = [Fraction(k - i) for i in range(k)]
    l = [lam[i] + rho[i] if i < len(lam) else rho[i] for i in range(k)]
    val = _bc_dim(l, rho, True)
    assert val.denominator == 1
    return int(val)


def _so_weyl(k: int, weight: list[int]) -> int:
    r = k // 2
    if k % 2:
        rho = [Fraction(2 * (r - i) - 1, 2) for i in range(r)]
    else:
        rho = [Fraction(r - i - 1) for i in range(r)]
    l = [weight[i] + rho[i] for i in range(r)]
    val = _bc_dim(l, rho, bool(k % 2))
    assert val.denominator == 1
    return int(val)


def so_dim(k: int, lam: Partition) -> int:
    """Dimension of the O(k) module labelled by lam (first two columns
    summing to at most k).  Partitions longer than k/2 are read through the
    associate (first column c replaced by k - c).  For even k and length
    exactly k/2 the O(k) module is the sum of two so(k) modules of equal
    dimension."""
    if k < 0:
        raise RankTooSmall("so(k) needs k >= 0")
    conj = conjugate(lam)
    c1 = conj[0] if conj else 0
    c2 = conj[1] if len(conj) > 1 else 0
    if c1 + c2 > k:
        raise RankTooSmall(f"{lam} does not label an O({k}) module")
    if 2 * c1 > k:
        lam = conjugate(Partition((k - c1,) + tuple(conj[1:])))
    r = k // 2
    w = list(lam) + [0] * (r - len(lam))
    base = _so_weyl(k, w)
    if k % 2 == 0 and len(lam) == r and r > 0:
        return 2 * base
    return base


def dim(q: DimensionQuery) -> int:
    alg = Algebra(q.algebra)
    if alg is Algebra.GL:
        w = q.weight if isinstance(q.weight, PartitionPair) else PartitionPair(q.weight, EMPTY)
        return gl_dim(q.k, w.plus, w.minus)
    if isinstance(q.weight, PartitionPair):
        raise ValueError("sp/so weights are single partitions")
    if alg is Algebra.SP:
        return sp_dim(q.k, q.weight)
    return so_dim(q.k, q.weight)


@dataclass
class DimCheckReport:
    family: str
    n: int
    k: int
    checked: int = 0
    violations: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [f"{self.family} n={self.n} k={self.k}: {self.checked} columns, "
               f"{'PASS' if self.ok else 'FAIL'}"]
        for v in self.violations:
            out.append(f"  column {v['label']}: big={v['big']} sum={v['sum']}")
        return out


def _total_size(label) -> int:
    if isinstance(label, PartitionPair):
        return label.plus.size() + label.minus.size()
    return label.size()


def default_rank(m: BranchingMatrix) -> int:
    return max(2 * max(_total_size(lab) for lab in m.labels), 1)


def _dims(m: BranchingMatrix, k: int):
    """(small-rank dim, big-rank dim) callables for the matrix family."""
    fam = m.family
    if fam in (MatrixFamily.A, MatrixFamily.B):
        if fam is MatrixFamily.A:
            def w(lab): return (lab, EMPTY)
        else:
            def w(lab): return (EMPTY, lab)
        return (lambda lab: gl_dim(k, *w(lab)), lambda lab: gl_dim(m.n * k, *w(lab)))
    if fam is MatrixFamily.C:
        return (lambda lab: gl_dim(k, lab.plus, lab.minus),
                lambda lab: gl_dim(m.n * k, lab.plus, lab.minus))
    if fam is MatrixFamily.D:
        return (lambda lab: sp_dim(k, lab), lambda lab: sp_dim(m.n * k, lab))
    return (lambda lab: so_dim(k, lab), lambda lab: so_dim(m.n * k, lab))


def dim_check(m: BranchingMatrix, k: int | None = None) -> DimCheckReport:
    """Compare both sides of the dimension identity for every column.

    ``k`` is gl(k), sp(2k) or so(k) for the small algebra; the big one has
    rank parameter n*k.
    """
    if k is None:
        k = default_rank(m)
    small, big = _dims(m, k)
    report = DimCheckReport(m.family.value, m.n, k)
    small_dims = [small(lab) for lab in m.labels]
    for j, col in enumerate(m.labels):
        lhs = big(col)
        rhs = sum(m.entries[i][j] * small_dims[i] for i in range(m.size))
        report.checked += 1
        if lhs != rhs:
            report.violations.append({"label": str(col), "big": lhs, "sum": rhs})
    return report
