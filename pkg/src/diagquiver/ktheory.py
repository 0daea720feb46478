"""Stationary Bratteli diagrams and the positive cone of the limit K0 group.

Stage sizes propagate as row vectors, ``s_{i+1} = s_i A`` with ``A[j][k]``
the arrows j -> k: block k at the next stage holds ``A[j][k]`` copies of
block j.  A class ``u`` at some stage lies in the positive cone of the limit
iff its image ``u A^j`` is entrywise non-negative for some j.

For a symmetric primitive arrow matrix the Perron eigenvector w decides
this: u is positive iff <u, w> > 0, or u dies in the limit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import sympy

from .quivers import Quiver, is_primitive, is_strongly_connected, is_symmetric

DEFAULT_STAGE_CAP = 64


class PreconditionError(ValueError):
    """The quiver is not strongly connected, primitive and symmetric."""


class Indeterminate(RuntimeError):
    """Iteration hit the stage cap without deciding positivity."""


@dataclass(frozen=True)
class BratteliDiagram:
    stages: tuple[tuple[int, ...], ...]
    edge_multiplicities: tuple[tuple[int, ...], ...]  # the same at every stage
    vertices: tuple = ()

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "multiplicities": [list(r) for r in self.edge_multiplicities],
            "stages": [list(s) for s in self.stages],
        }


@dataclass(frozen=True)
class K0Class:
    vector: tuple[int, ...]
    stage: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vector", tuple(int(x) for x in self.vector))

    def __neg__(self) -> "K0Class":
        return K0Class(tuple(-x for x in self.vector), self.stage)

    def scaled(self, c: int) -> "K0Class":
        return K0Class(tuple(c * x for x in self.vector), self.stage)

    def minus(self, other: "K0Class") -> "K0Class":
        return K0Class(tuple(a - b for a, b in zip(self.vector, other.vector)), self.stage)


def step(arrows, v) -> tuple[int, ...]:
    """Row vector times the arrow matrix."""
    size = len(v)
    return tuple(sum(v[j] * arrows[j][k] for j in range(size)) for k in range(size))


def unroll(q: Quiver, initial_sizes, stages: int) -> BratteliDiagram:
    """Stationary diagram with ``stages`` size vectors (at least the initial one)."""
    sizes = tuple(int(s) for s in initial_sizes)
    if len(sizes) != q.size:
        raise ValueError("need one initial size per vertex")
    if any(s < 1 for s in sizes):
        raise ValueError("initial sizes must be positive")
    out = [sizes]
    for _ in range(max(stages, 1) - 1):
        out.append(step(q.arrows, out[-1]))
    return BratteliDiagram(tuple(out), q.arrows, q.vertices)


def _check_hypotheses(q: Quiver) -> None:
    missing = [name for name, ok in (
        ("strongly connected", is_strongly_connected(q)),
        ("primitive", is_primitive(q)),
        ("symmetric", is_symmetric(q)),
    ) if not ok]
    if missing:
        raise PreconditionError("positivity test needs a quiver that is " + ", ".join(missing))


_perron_cache: dict = {}


def perron_vector(q: Quiver) -> tuple[int, tuple[int, ...]] | None:
    """Exact (root, positive integer eigenvector) when the Perron root is an
    integer, else None.  An integer matrix has rational eigenvalues only if
    they are integers, and the Perron root lies between the extreme row sums."""
    key = q.arrows
    if key in _perron_cache:
        return _perron_cache[key]
    a = sympy.Matrix(q.arrows)
    sums = [sum(r) for r in q.arrows]
    found = None
    for r in range(max(sums), min(sums) - 1, -1):
        basis = (a - r * sympy.eye(q.size)).nullspace()
        if len(basis) != 1:
            continue
        vec = basis[0]
        if all(x < 0 for x in vec):
            vec = -vec
        if all(x > 0 for x in vec):
            den = math.lcm(*(int(sympy.fraction(x)[1]) for x in vec))
            ints = [int(x * den) for x in vec]
            g = math.gcd(*ints)
            found = (r, tuple(x // g for x in ints))
            break
    _perron_cache[key] = found
    return found


def _dies(arrows, v) -> bool:
    """True when v A^size = 0, i.e. the class vanishes in the limit."""
    for _ in range(len(v)):
        v = step(arrows, v)
    return not any(v)


@dataclass
class PositivityTrace:
    verdict: bool
    method: str
    pairing: int | None = None
    iterates: list[tuple[int, ...]] = field(default_factory=list)


def decide_positive(q: Quiver, u: K0Class, *, stage_cap: int = DEFAULT_STAGE_CAP,
                    trace: bool = False) -> PositivityTrace:
    _check_hypotheses(q)
    v = u.vector
    if len(v) != q.size:
        raise ValueError("class length must match the vertex count")
    iterates = []
    if trace:
        cur = v
        for _ in range(min(stage_cap, 16)):
            iterates.append(cur)
            if all(x >= 0 for x in cur):
                break
            cur = step(q.arrows, cur)
    if not any(v):
        return PositivityTrace(True, "zero", 0, iterates)
    pv = perron_vector(q)
    if pv is not None:
        s = sum(a * b for a, b in zip(v, pv[1]))
        if s > 0:
            return PositivityTrace(True, "perron", s, iterates)
        if s < 0:
            return PositivityTrace(False, "perron", s, iterates)
        return PositivityTrace(_dies(q.arrows, v), "perron", 0, iterates)
    # squaring the matrix kills sign oscillation from negative eigenvalues
    sq = tuple(step(q.arrows, row) for row in q.arrows)
    cur = v
    for _ in range((stage_cap + 1) // 2 + 1):
        if all(x >= 0 for x in cur):
            return PositivityTrace(True, "iteration", None, iterates)
        if all(x <= 0 for x in cur):
            return PositivityTrace(not any(cur), "iteration", None, iterates)
        cur = step(sq, cur)
    raise Indeterminate(f"no decision within {stage_cap} stages")


def k0_positive(q: Quiver, u: K0Class, *, stage_cap: int = DEFAULT_STAGE_CAP) -> bool:
    return decide_positive(q, u, stage_cap=stage_cap).verdict


def order_unit_witness(q: Quiver, y: K0Class, z: K0Class, *,
                       stage_cap: int = DEFAULT_STAGE_CAP, max_n: int = 10**6) -> int:
    """Smallest N >= 1 with N*y - z in the positive cone."""
    if not k0_positive(q, y, stage_cap=stage_cap):
        raise PreconditionError("y must lie in the positive cone")
    pv = perron_vector(q)
    if pv is not None:
        alpha = sum(a * b for a, b in zip(y.vector, pv[1]))
        beta = sum(a * b for a, b in zip(z.vector, pv[1]))
        if alpha <= 0:
            raise PreconditionError("y vanishes in the limit, so it is not an order unit")
        bound = max(beta // alpha + 1, 1)
        for n in range(1, bound + 1):
            if k0_positive(q, y.scaled(n).minus(z), stage_cap=stage_cap):
                return n
        raise AssertionError("Perron bound exceeded")  # unreachable
    for n in range(1, max_n + 1):
        if k0_positive(q, y.scaled(n).minus(z), stage_cap=stage_cap):
            return n
    raise Indeterminate(f"no witness up to {max_n}")
