"""Stable branching matrices for the diagonal embeddings of signature (n,0,0).

Rows are indexed by the small module, columns by the big one: entry
``[row][col]`` is the multiplicity of ``row`` in the restriction of ``col``.
That is also the arrow count ``row -> col`` of the associated quiver.
"""
from __future__ import annotations

import csv
import enum
import io
import json
import sys
from collections import Counter
from dataclasses import dataclass
from functools import cache

from . import coefficients as co
from .partitions import (
    Partition,
    PartitionPair,
    pair_axis,
    parity_axis,
    partitions_of,
)

INT64_MAX = 2**63 - 1

Matrix = tuple[tuple[int, ...], ...]


class MatrixFamily(str, enum.Enum):
    A = "A"  # sl(n^inf), Type I, partitions lambda (module V_{lambda,0})
    B = "B"  # sl(n^inf), Type I, duals V_{0,mu}; same matrices as A
    C = "C"  # sl(n^inf), Type II, pairs
    D = "D"  # sp(n^inf)
    E = "E"  # so(n^inf)


@dataclass(frozen=True)
class BranchingMatrix:
    family: MatrixFamily
    n: int
    params: tuple[int, ...]
    labels: tuple
    entries: Matrix

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def row_labels(self) -> tuple:
        return self.labels

    @property
    def col_labels(self) -> tuple:
        return self.labels

    def block_sizes(self) -> list[int]:
        """Sizes of the canonical diagonal blocks (one block for A/B)."""
        return [len(b) for b in _blocks(self)]

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "n": self.n,
            "params": list(self.params),
            "labels": [str(x) for x in self.labels],
            "entries": [[_json_int(v) for v in row] for row in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=None, separators=(",", ":"))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [str(x) for x in self.labels])
        for label, row in zip(self.labels, self.entries):
            w.writerow([str(label)] + [str(v) for v in row])
        return buf.getvalue()


def _json_int(v: int):
    return v if -INT64_MAX - 1 <= v <= INT64_MAX else str(v)


def _progress(msg: str, loud: bool) -> None:
    if loud:
        print(msg, file=sys.stderr, flush=True)


# ---------------------------------------------------------------------------
# Type I


def type1(n: int, d: int, *, family: MatrixFamily = MatrixFamily.A) -> BranchingMatrix:
    """A^n_d: entry (lam, mu) = sum over n-tuples beta of
    c^lam_beta * c^mu_beta."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    family = MatrixFamily(family)
    if family not in (MatrixFamily.A, MatrixFamily.B):
        raise ValueError("type1 builds the A or B family")
    return BranchingMatrix(family, n, (d,), partitions_of(d), _type1_entries(n, d))


@cache
def _type1_entries(n: int, d: int) -> Matrix:
    labels = partitions_of(d)
    chains = [co.lr_chain(lam, n) for lam in labels]
    rows = []
    for ci in chains:
        row = []
        for cj in chains:
            small, big = (ci, cj) if len(ci) <= len(cj) else (cj, ci)
            row.append(sum(v * big.get(k, 0) for k, v in small.items()))
        rows.append(tuple(row))
    return tuple(rows)


# ---------------------------------------------------------------------------
# Type II, sp, so


def _assemble(labels: tuple, col_expansion, row_distribution) -> Matrix:
    """entry[row][col] = sum_beta col_expansion(col)[beta] *
    row_distribution(beta)[row]."""
    index = {lab: i for i, lab in enumerate(labels)}
    size = len(labels)
    cols = []
    for col in labels:
        acc: Counter = Counter()
        for betas, c in col_expansion(col).items():
            for row, m in row_distribution(betas).items():
                if row in index:
                    acc[row] += c * m
        cols.append([acc.get(row, 0) for row in labels])
    return tuple(tuple(cols[j][i] for j in range(size)) for i in range(size))


def type2(n: int, p: int, q: int, *, verbose: bool = False) -> BranchingMatrix:
    """C^n_{p,q} on ``pair_axis(p, q)``."""
    if n < 2:
        raise ValueError("Type II needs n >= 2")
    labels = pair_axis(p, q)
    _progress(f"assembling C^{n}_{{{p},{q}}} ({len(labels)} labels)", verbose and p + q >= 5)
    entries = _type2_entries(n, p, q)
    return BranchingMatrix(MatrixFamily.C, n, (p, q), labels, entries)


@cache
def _type2_entries(n: int, p: int, q: int) -> Matrix:
    return _assemble(pair_axis(p, q), lambda col: co.cap_C_chain(col, n), co.cap_D_chain)


def sp_matrix(n: int, p: int, *, verbose: bool = False) -> BranchingMatrix:
    """D^n_p for sp(n^inf); ``n`` must be even."""
    if n < 2 or n % 2:
        raise ValueError(f"the symplectic family needs an even n >= 2, got {n}")
    labels = parity_axis(p)
    _progress(f"assembling D^{n}_{p} ({len(labels)} labels)", verbose and p >= 6)
    return BranchingMatrix(MatrixFamily.D, n, (p,), labels, _sp_entries(n, p))


@cache
def _sp_entries(n: int, p: int) -> Matrix:
    return _assemble(parity_axis(p), lambda col: co.cap_E_chain(col, n), co.cap_F_chain)


def so_matrix(n: int, p: int, *, verbose: bool = False) -> BranchingMatrix:
    """E^n_p for so(n^inf)."""
    if n < 2:
        raise ValueError("so family needs n >= 2")
    labels = parity_axis(p)
    _progress(f"assembling E^{n}_{p} ({len(labels)} labels)", verbose and p >= 6)
    return BranchingMatrix(MatrixFamily.E, n, (p,), labels, _so_entries(n, p))


@cache
def _so_entries(n: int, p: int) -> Matrix:
    return _assemble(parity_axis(p), lambda col: co.cap_G_chain(col, n), co.cap_F_chain)


def build(family: MatrixFamily | str, n: int, params: tuple[int, ...] | list[int],
          *, verbose: bool = False) -> BranchingMatrix:
    """Dispatch on family; ``params`` is (d,) for A/B, (p, q) for C, (p,) for D/E."""
    family = MatrixFamily(family)
    params = tuple(params)
    if family in (MatrixFamily.A, MatrixFamily.B):
        (d,) = params
        return type1(n, d, family=family)
    if family is MatrixFamily.C:
        p, q = params
        return type2(n, p, q, verbose=verbose)
    (p,) = params
    if family is MatrixFamily.D:
        return sp_matrix(n, p, verbose=verbose)
    return so_matrix(n, p, verbose=verbose)


# ---------------------------------------------------------------------------
# structure


def kronecker(a, b) -> Matrix:
    """Kronecker product of two integer matrices (lists of rows)."""
    ra, ca = len(a), len(a[0]) if a else 0
    rb, cb = len(b), len(b[0]) if b else 0
    return tuple(
        tuple(a[i // rb][j // cb] * b[i % rb][j % cb] for j in range(ca * cb))
        for i in range(ra * rb)
    )


def identity(size: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(size)) for i in range(size))


def _label_block_key(family: MatrixFamily, label) -> int:
    if isinstance(label, PartitionPair):
        return label.plus.size()
    return label.size()


def _blocks(m: BranchingMatrix) -> list[list[int]]:
    if m.family in (MatrixFamily.A, MatrixFamily.B):
        return [list(range(m.size))]
    blocks: list[list[int]] = []
    last = None
    for i, lab in enumerate(m.labels):
        key = _label_block_key(m.family, lab)
        if key != last:
            blocks.append([])
            last = key
        blocks[-1].append(i)
    return blocks


def diagonal_block(m: BranchingMatrix, block_index: int) -> Matrix:
    """Square sub-matrix on axis block ``block_index`` (0 = largest |lambda|)."""
    if m.family not in (MatrixFamily.C, MatrixFamily.D, MatrixFamily.E):
        raise ValueError("diagonal blocks are defined for the C, D and E families")
    blocks = _blocks(m)
    if not 0 <= block_index < len(blocks):
        raise IndexError(f"block {block_index} out of range (have {len(blocks)})")
    idx = blocks[block_index]
    return tuple(tuple(m.entries[i][j] for j in idx) for i in idx)


def is_block_lower_triangular(m: BranchingMatrix) -> bool:
    block_of = {}
    for b, idx in enumerate(_blocks(m)):
        for i in idx:
            block_of[i] = b
    return all(
        m.entries[i][j] == 0
        for i in range(m.size)
        for j in range(m.size)
        if block_of[j] > block_of[i]
    )


def is_symmetric_matrix(entries) -> bool:
    size = len(entries)
    return all(entries[i][j] == entries[j][i] for i in range(size) for j in range(i))
