"""Quivers of branching matrices: predicates, the simplicity test, DOT export."""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from math import gcd

import networkx as nx

from .branching import BranchingMatrix


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple[tuple[int, ...], ...]  # arrows[i][j] = number of arrows i -> j
    source: tuple | None = None  # (family, n, params) of the originating matrix

    def __post_init__(self):
        size = len(self.vertices)
        if len(self.arrows) != size or any(len(r) != size for r in self.arrows):
            raise ValueError("arrow matrix must be square with one row per vertex")
        if any(v < 0 for r in self.arrows for v in r):
            raise ValueError("arrow counts must be non-negative")

    @property
    def size(self) -> int:
        return len(self.vertices)

    def index(self, label) -> int:
        return self.vertices.index(label)

    def arrow_count(self, src, dst) -> int:
        return self.arrows[self.index(src)][self.index(dst)]

    def has_loops_everywhere(self) -> bool:
        return all(self.arrows[i][i] > 0 for i in range(self.size))

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from(
            (i, j) for i in range(self.size) for j in range(self.size) if self.arrows[i][j]
        )
        return g

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [list(r) for r in self.arrows],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def quiver_of(m: BranchingMatrix) -> Quiver:
    return Quiver(m.labels, m.entries, (m.family.value, m.n, m.params))


def one_vertex_quiver(loops: int, label=None) -> Quiver:
    from .partitions import Partition

    return Quiver((label if label is not None else Partition((1,)),), ((loops,),))


def is_strongly_connected(q: Quiver) -> bool:
    if q.size == 0:
        return False
    return nx.is_strongly_connected(q.to_networkx())


def is_primitive(q: Quiver) -> bool:
    """Strongly connected with cycle-length gcd 1.

    networkx's aperiodicity test computes exactly that gcd (via BFS levels)
    on a strongly connected digraph; with a loop present it is 1 at once.
    """
    if not is_strongly_connected(q):
        return False
    if any(q.arrows[i][i] for i in range(q.size)):
        return True
    return nx.is_aperiodic(q.to_networkx())


def cycle_gcd(q: Quiver) -> int:
    """gcd of directed cycle lengths in a strongly connected quiver, from BFS
    levels: every edge u->v contributes level(u) + 1 - level(v)."""
    if not is_strongly_connected(q):
        raise ValueError("cycle gcd is defined here for strongly connected quivers")
    level = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for v in range(q.size):
                if q.arrows[u][v] and v not in level:
                    level[v] = level[u] + 1
                    nxt.append(v)
        frontier = nxt
    g = 0
    for u in range(q.size):
        for v in range(q.size):
            if q.arrows[u][v]:
                g = gcd(g, level[u] + 1 - level[v])
    return g


def is_symmetric(q: Quiver) -> bool:
    return all(q.arrows[i][j] == q.arrows[j][i] for i in range(q.size) for j in range(i))


class Verdict(str, enum.Enum):
    SIMPLE = "Simple"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class SimplicityCertificate:
    verdict: Verdict
    strongly_connected: bool
    primitive: bool
    symmetric: bool

    def __str__(self) -> str:
        return (f"{self.verdict.value} (strongly connected={self.strongly_connected}, "
                f"primitive={self.primitive}, symmetric={self.symmetric})")


def simplicity_certificate(q: Quiver) -> SimplicityCertificate:
    """Simple when the quiver is strongly connected, primitive and symmetric.

    The test is sufficient only, so any failure gives Inconclusive.
    """
    sc = is_strongly_connected(q)
    pr = sc and is_primitive(q)
    sy = is_symmetric(q)
    verdict = Verdict.SIMPLE if sc and pr and sy else Verdict.INCONCLUSIVE
    return SimplicityCertificate(verdict, sc, pr, sy)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def to_dot(q: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    for i, v in enumerate(q.vertices):
        lines.append(f'  v{i} [label="{_dot_escape(str(v))}"];')
    for i in range(q.size):
        for j in range(q.size):
            c = q.arrows[i][j]
            if c:
                lines.append(f'  v{i} -> v{j} [label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
