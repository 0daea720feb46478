"""Point data sequences, their equivalence, and point representations.

A sequence is a string of vertices ``v_0, v_1, ...`` with a projective point
``x_k`` in the space spanned by the arrows ``v_k -> v_{k+1}``.  Only
eventually periodic sequences are representable: a finite preperiod followed
by a period repeated forever.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .branching import build, type1
from .partitions import Partition, parse_label
from .quivers import Quiver, quiver_of


@dataclass(frozen=True)
class ProjectivePoint:
    coords: tuple[Fraction, ...]

    def __init__(self, coords):
        cs = tuple(Fraction(c) for c in coords)
        if not cs or not any(cs):
            raise ValueError("a projective point needs a nonzero coordinate vector")
        object.__setattr__(self, "coords", cs)

    @property
    def dim(self) -> int:
        return len(self.coords)

    def same_point(self, other: "ProjectivePoint") -> bool:
        """Equality up to a nonzero scalar, by cross-multiplication."""
        x, y = self.coords, other.coords
        if len(x) != len(y):
            return False
        return all(x[i] * y[j] == x[j] * y[i] for i in range(len(x)) for j in range(i + 1, len(x)))

    def scaled(self, c) -> "ProjectivePoint":
        c = Fraction(c)
        if c == 0:
            raise ValueError("scale must be nonzero")
        return ProjectivePoint(tuple(c * v for v in self.coords))

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


Step = tuple[object, ProjectivePoint]  # (vertex label, point)


@dataclass(frozen=True)
class PointDataSequence:
    quiver: Quiver
    preperiod: tuple[Step, ...]
    period: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise ValueError("the period must be nonempty")
        steps = self.preperiod + self.period
        for k, (label, point) in enumerate(steps):
            nxt = steps[k + 1][0] if k + 1 < len(steps) else self.period[0][0]
            arrows = self.quiver.arrow_count(label, nxt)
            if arrows < 1:
                raise ValueError(f"no arrow {label} -> {nxt} at position {k}")
            if point.dim != arrows:
                raise ValueError(
                    f"point at position {k} has dimension {point.dim}, expected {arrows}")

    def at(self, k: int) -> Step:
        if k < len(self.preperiod):
            return self.preperiod[k]
        return self.period[(k - len(self.preperiod)) % len(self.period)]

    def vertex(self, k: int):
        return self.at(k)[0]

    def point(self, k: int) -> ProjectivePoint:
        return self.at(k)[1]


def equivalent(s: PointDataSequence, t: PointDataSequence) -> bool:
    """Vertices equal and points projectively equal for all large k.

    Past both preperiods the two sequences are periodic with period dividing
    the lcm, so one aligned window of that length decides it.
    """
    if s.quiver.vertices != t.quiver.vertices or s.quiver.arrows != t.quiver.arrows:
        raise ValueError("sequences live on different quivers")
    start = max(len(s.preperiod), len(t.preperiod))
    window = lcm(len(s.period), len(t.period))
    for k in range(start, start + window):
        (a, x), (b, y) = s.at(k), t.at(k)
        if a != b or not x.same_point(y):
            return False
    return True


@dataclass(frozen=True)
class PointRepresentation:
    """Graded module with basis ``e_k`` (at vertex ``v_k``) in each degree
    ``k >= start_degree``; arrow ``i`` of ``v_k -> v_{k+1}`` sends ``e_k`` to
    ``coefficients_k[i] * e_{k+1}`` and every other arrow kills ``e_k``."""

    quiver: Quiver
    start_degree: int
    preperiod: tuple[tuple[object, tuple[Fraction, ...]], ...]
    period: tuple[tuple[object, tuple[Fraction, ...]], ...]

    def degree(self, k: int) -> tuple[object, tuple[Fraction, ...]]:
        j = k - self.start_degree
        if j < 0:
            raise IndexError("degree below the generator")
        if j < len(self.preperiod):
            return self.preperiod[j]
        return self.period[(j - len(self.preperiod)) % len(self.period)]

    def vertex(self, k: int):
        return self.degree(k)[0]

    def action(self, k: int, src, dst, arrow: int) -> Fraction:
        """Scalar by which arrow number ``arrow`` of ``src -> dst`` maps
        degree k to degree k + 1."""
        v, coeffs = self.degree(k)
        if v != src or self.vertex(k + 1) != dst:
            return Fraction(0)
        return coeffs[arrow]


def point_representation(s: PointDataSequence, start_degree: int = 0) -> PointRepresentation:
    def conv(steps):
        return tuple((v, p.coords) for v, p in steps)

    return PointRepresentation(s.quiver, start_degree, conv(s.preperiod), conv(s.period))


def is_point_representation(m: PointRepresentation, check_degrees: int) -> bool:
    """One-dimensional pieces, shapes matching the arrows, and generated by
    degree ``start_degree`` through the first ``check_degrees`` degrees."""
    if check_degrees < 1:
        raise ValueError("check_degrees must be at least 1")
    for k in range(m.start_degree, m.start_degree + check_degrees):
        v, _ = m.degree(k)
        if v not in m.quiver.vertices:
            return False
    for k in range(m.start_degree, m.start_degree + check_degrees - 1):
        v, coeffs = m.degree(k)
        w = m.vertex(k + 1)
        if len(coeffs) != m.quiver.arrow_count(v, w):
            return False
        if not any(coeffs):
            return False
    return True


def loop_quiver(n: int) -> Quiver:
    """One vertex (1) with n loops."""
    return quiver_of(type1(n, 1))


def wild_family(n: int, points: Sequence[ProjectivePoint]) -> PointDataSequence:
    """The periodic sequence x_1, ..., x_d, x_1, ... on the n-loop quiver."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not points:
        raise ValueError("need at least one point")
    q = loop_quiver(n)
    v = Partition((1,))
    return PointDataSequence(q, (), tuple((v, p) for p in points))


# ---------------------------------------------------------------------------
# JSON


def _coord_text(c: Fraction) -> str:
    return str(c)


def to_json(s: PointDataSequence) -> str:
    src = s.quiver.source
    doc = {
        "quiver_ref": {"family": src[0], "n": src[1], "params": list(src[2])} if src else None,
        "preperiod": [{"vertex": str(v), "coords": [_coord_text(c) for c in p.coords]}
                      for v, p in s.preperiod],
        "period": [{"vertex": str(v), "coords": [_coord_text(c) for c in p.coords]}
                   for v, p in s.period],
    }
    if src is None:
        doc["quiver"] = s.quiver.to_dict()
    return json.dumps(doc, separators=(",", ":"))


def from_json(text: str) -> PointDataSequence:
    doc = json.loads(text)
    ref = doc.get("quiver_ref")
    if ref:
        q = quiver_of(build(ref["family"], int(ref["n"]), tuple(ref["params"])))
    else:
        raw = doc["quiver"]
        q = Quiver(tuple(parse_label(v) for v in raw["vertices"]),
                   tuple(tuple(r) for r in raw["arrows"]))

    def steps(items):
        return tuple(
            (parse_label(it["vertex"]), ProjectivePoint(Fraction(c) for c in it["coords"]))
            for it in items
        )

    return PointDataSequence(q, steps(doc.get("preperiod", [])), steps(doc["period"]))
