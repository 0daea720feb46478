"""Character tables of symmetric groups and the Type I spectral identity."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cache
from itertools import product as iproduct

import sympy

from .branching import type1
from .partitions import Partition, partitions_of

DEFAULT_MAX_DEGREE = 10


class TableTooLarge(ValueError):
    pass


def cycle_count(cycle_type: Partition) -> int:
    """Number of cycles, fixed points included."""
    return len(cycle_type)


def centralizer_order(cycle_type: Partition) -> int:
    z = 1
    for part, mult in Counter(cycle_type).items():
        z *= part**mult * math.factorial(mult)
    return z


def class_size(cycle_type: Partition) -> int:
    return math.factorial(sum(cycle_type)) // centralizer_order(cycle_type)


# Murnaghan-Nakayama on beta-sets: removing a rim hook of length r is moving
# a bead from position b to b - r; the sign is (-1)^(beads jumped over).


def _beta_set(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    parts = tuple(lam) + (0,) * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(parts))


@cache
def _mn(beta: tuple[int, ...], rho: tuple[int, ...]) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in beads:
            continue
        jumped = sum(1 for x in beta if t < x < b)
        new = tuple(sorted((beads - {b}) | {t}, reverse=True))
        total += (-1) ** jumped * _mn(new, rest)
    return total


def character(lam: Partition, cycle_type: Partition) -> int:
    """chi_lam evaluated on the class of the given cycle type."""
    if sum(lam) != sum(cycle_type):
        raise ValueError("shape and class must have the same size")
    return _mn(_beta_set(tuple(lam), len(lam)), tuple(cycle_type))


@dataclass(frozen=True)
class CharacterTable:
    d: int
    rows: tuple[Partition, ...]
    cols: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]
    class_sizes: tuple[int, ...]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.values)

    def dimensions(self) -> tuple[int, ...]:
        """Column of the identity class (1,...,1), i.e. SYT counts."""
        return self.column(len(self.cols) - 1)

    def to_csv(self) -> str:
        head = "," + ",".join(str(c) for c in self.cols)
        body = [str(r) + "," + ",".join(str(v) for v in row) for r, row in zip(self.rows, self.values)]
        return "\n".join([head, *body]) + "\n"


@cache
def character_table(d: int, *, max_degree: int = DEFAULT_MAX_DEGREE) -> CharacterTable:
    if d < 0:
        raise ValueError("d must be non-negative")
    if d > max_degree:
        raise TableTooLarge(f"character table of S_{d} exceeds the bound {max_degree}")
    shapes = partitions_of(d)
    values = tuple(tuple(character(lam, mu) for mu in shapes) for lam in shapes)
    return CharacterTable(d, shapes, shapes, values, tuple(class_size(mu) for mu in shapes))


def syt_count(lam: Partition) -> int:
    """Hook length formula."""
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


# ---------------------------------------------------------------------------
# exact linear algebra helpers


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def determinant(m) -> int:
    if not m:
        return 1
    return int(sympy.Matrix(m).det(method="bareiss"))


@dataclass(frozen=True)
class SpectralCertificate:
    n: int
    d: int
    eigenvalues: dict  # class cycle type -> n^(number of cycles)
    residual: bool  # True when A X == X D holds exactly
    det_x: int
    failed_columns: tuple[Partition, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return self.residual and self.det_x != 0

    def eigenvalue_multiset(self) -> list[int]:
        return sorted(self.eigenvalues.values(), reverse=True)


def spectral_verify(n: int, d: int) -> SpectralCertificate:
    """Check type1(n, d) @ X == X @ diag(n^cycles) with X the character table."""
    a = type1(n, d).entries
    table = character_table(d)
    x = table.values
    ax = matmul(a, x)
    eig = {mu: n ** cycle_count(mu) for mu in table.cols}
    bad = tuple(
        mu for j, mu in enumerate(table.cols)
        if any(ax[i][j] != x[i][j] * eig[mu] for i in range(len(x)))
    )
    return SpectralCertificate(n, d, eig, not bad, determinant(x), bad)


def _compositions(d: int, parts: int):
    if parts == 1:
        yield (d,)
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, parts - 1):
            yield (first,) + rest


def multinomial_sum(n: int, d: int) -> int:
    """Sum over compositions of d into n parts of the multinomial coefficient,
    written as the product of binomials that chooses each subset in turn."""
    total = 0
    for comp in _compositions(d, n):
        left, term = d, 1
        for c in comp:
            term *= math.comb(left, c)
            left -= c
        total += term
    return total


def multinomial_identity(n: int, d: int) -> bool:
    return multinomial_sum(n, d) == n**d


def kronecker_eigenvalues(n: int, p: int, q: int) -> list[int]:
    """Eigenvalues of C^n_{p,q} as the union over diagonal blocks (p-i, q-i)
    of products n^cycles(sigma) * n^cycles(tau)."""
    out = []
    for i in range(min(p, q) + 1):
        for s, t in iproduct(partitions_of(p - i), partitions_of(q - i)):
            out.append(n ** cycle_count(s) * n ** cycle_count(t))
    return sorted(out, reverse=True)


def parity_eigenvalues(n: int, p: int) -> list[int]:
    """Eigenvalues of D^n_p / E^n_p from their diagonal blocks A^n_{p-2i}."""
    out = [n ** cycle_count(s) for i in range(p // 2 + 1) for s in partitions_of(p - 2 * i)]
    return sorted(out, reverse=True)


@dataclass(frozen=True)
class BlockSpectrum:
    """Eigen-data of a block lower triangular matrix read off its diagonal
    blocks, each certified by an exact eigenvector identity."""

    eigenvalues: tuple[int, ...]
    blocks_verified: bool


def _diag_identity(block, x, eig) -> bool:
    bx = matmul(block, x)
    return all(bx[i][j] == x[i][j] * eig[j] for i in range(len(x)) for j in range(len(eig)))


def type2_spectrum(n: int, p: int, q: int) -> BlockSpectrum:
    """Each diagonal block (p-i, q-i) of C^n_{p,q} is diagonalised by the
    Kronecker product of two character tables; collect the eigenvalues."""
    from .branching import diagonal_block, kronecker, type2

    m = type2(n, p, q)
    ok = True
    vals: list[int] = []
    for i in range(min(p, q) + 1):
        ts, tt = character_table(p - i), character_table(q - i)
        x = kronecker(ts.values, tt.values)
        eig = [n ** cycle_count(s) * n ** cycle_count(t) for s in ts.cols for t in tt.cols]
        ok = ok and _diag_identity(diagonal_block(m, i), x, eig) and determinant(x) != 0
        vals.extend(eig)
    return BlockSpectrum(tuple(sorted(vals, reverse=True)), ok)


def parity_spectrum(family: str, n: int, p: int) -> BlockSpectrum:
    """Same for D^n_p / E^n_p, whose diagonal blocks are Type I matrices."""
    from .branching import diagonal_block, so_matrix, sp_matrix

    m = sp_matrix(n, p) if family == "D" else so_matrix(n, p)
    ok = True
    vals: list[int] = []
    for i in range(p // 2 + 1):
        t = character_table(p - 2 * i)
        eig = [n ** cycle_count(s) for s in t.cols]
        ok = ok and _diag_identity(diagonal_block(m, i), t.values, eig)
        vals.extend(eig)
    return BlockSpectrum(tuple(sorted(vals, reverse=True)), ok)
