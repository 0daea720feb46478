"""Integer partitions and pairs of partitions.

Partitions are the labels for irreducible modules and quiver vertices.  The
canonical order everywhere is reverse lexicographic, so ``(d)`` comes first
and ``(1, ..., 1)`` last.
"""
from __future__ import annotations

import re
from functools import cache
from typing import Iterable, Iterator, NamedTuple


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty tuple is the zero partition.  Being a tuple subclass keeps
    partitions cheap to hash, which matters for the coefficient caches.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be non-increasing: {parts}")
        return super().__new__(cls, parts)

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self) + ")"


class PartitionPair(NamedTuple):
    """Mixed weight (lambda, mu): ``plus`` gives the positive entries of the
    highest weight, ``minus`` the negated tail."""

    plus: Partition
    minus: Partition

    def __str__(self) -> str:
        return f"({self.plus},{self.minus})"


EMPTY = Partition()
EMPTY_PAIR = PartitionPair(EMPTY, EMPTY)


def _gen(d: int, largest: int) -> Iterator[tuple[int, ...]]:
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in _gen(d - first, first):
            yield (first,) + rest


@cache
def partitions_of(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return tuple(Partition(p) for p in _gen(d, d))


@cache
def partitions_up_to(d: int) -> tuple[Partition, ...]:
    return tuple(p for m in range(d + 1) for p in partitions_of(m))


@cache
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


@cache
def subpartitions(lam: Partition) -> tuple[Partition, ...]:
    """Every partition contained in ``lam`` (including () and lam)."""
    out = []

    def rec(i: int, bound: int, acc: tuple[int, ...]) -> None:
        out.append(Partition(acc))
        if i == len(lam):
            return
        for part in range(1, min(bound, lam[i]) + 1):
            rec(i + 1, part, acc + (part,))

    rec(0, lam[0] if lam else 0, ())
    return tuple(out)


def index_in_order(lam: Partition) -> int:
    return _rank(lam.size())[lam]


@cache
def _rank(d: int) -> dict[Partition, int]:
    return {p: i for i, p in enumerate(partitions_of(d))}


@cache
def pair_axis(p: int, q: int) -> tuple[PartitionPair, ...]:
    """Vertex labels of the Type II family for (p, q), in canonical order.

    Blocks of decreasing |lambda| (from p down to max(p-q, 0)); inside a block
    pairs are sorted by the reverse-lex positions of lambda, then mu.
    """
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    out = []
    for size_plus in range(p, max(p - q, 0) - 1, -1):
        size_minus = size_plus - (p - q)
        for lam in partitions_of(size_plus):
            for mu in partitions_of(size_minus):
                out.append(PartitionPair(lam, mu))
    return tuple(out)


@cache
def parity_axis(p: int) -> tuple[Partition, ...]:
    """Labels {lambda : |lambda| <= p, |lambda| = p mod 2} for the sp/so
    families, in blocks of decreasing size."""
    if p < 0:
        raise ValueError("p must be non-negative")
    return tuple(lam for size in range(p, -1, -2) for lam in partitions_of(size))


def partition_count(d: int) -> int:
    return len(partitions_of(d))


_PART_RE = re.compile(r"^\(\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\)$")


def parse_partition(text: str) -> Partition:
    """Parse ``"(3,1)"`` or ``"()"``; a bare ``"3,1"`` is accepted too."""
    s = text.strip()
    if not s.startswith("("):
        s = "(" + s + ")"
    if not _PART_RE.match(s):
        raise ValueError(f"bad partition syntax: {text!r}")
    body = s[1:-1].strip().rstrip(",")
    if not body:
        return EMPTY
    return Partition(int(x) for x in body.split(","))


def parse_pair(text: str) -> PartitionPair:
    """Parse ``"((2),(1,1))"``."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad pair syntax: {text!r}")
    inner = s[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            return PartitionPair(parse_partition(inner[:i]), parse_partition(inner[i + 1:]))
    raise ValueError(f"bad pair syntax: {text!r}")


def parse_label(text: str) -> Partition | PartitionPair:
    s = text.strip()
    if s.startswith("((") or s.startswith("(()") or s.count("(") > 1:
        return parse_pair(s)
    return parse_partition(s)
