"""Golden n=2 tables shipped with the package and their recomputation."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .branching import build


@dataclass(frozen=True)
class TableCheck:
    family: str
    n: int
    params: tuple[int, ...]
    matches: bool
    mismatches: tuple[tuple[str, str, int, int], ...]  # (row, col, golden, computed)

    @property
    def name(self) -> str:
        return f"{self.family}^{self.n}_{','.join(map(str, self.params))}"


def load_golden() -> list[dict]:
    text = resources.files("diagquiver").joinpath("data/appendix.json").read_text()
    return json.loads(text)["matrices"]


def verify_appendix(*, verbose: bool = False) -> list[TableCheck]:
    out = []
    for g in load_golden():
        m = build(g["family"], g["n"], tuple(g["params"]), verbose=verbose)
        bad = []
        gold = g["entries"]
        if len(gold) != m.size or any(len(r) != m.size for r in gold):
            bad.append(("shape", "shape", len(gold), m.size))
        else:
            for i in range(m.size):
                for j in range(m.size):
                    if gold[i][j] != m.entries[i][j]:
                        bad.append((str(m.labels[i]), str(m.labels[j]), gold[i][j], m.entries[i][j]))
        out.append(TableCheck(g["family"], g["n"], tuple(g["params"]), not bad, tuple(bad)))
    return out
