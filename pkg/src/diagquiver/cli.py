"""Command line entry point: ``diagquiver <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on bad usage.
The environment variable ``DIAGQUIVER_FORMAT`` sets the default output format.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import coefficients as co
from .appendix import verify_appendix
from .branching import BranchingMatrix, MatrixFamily, build
from .characters import (
    TableTooLarge,
    character_table,
    parity_spectrum,
    spectral_verify,
    type2_spectrum,
)
from .dimension import RankTooSmall, dim_check
from .ktheory import (
    Indeterminate,
    K0Class,
    PreconditionError,
    decide_positive,
    order_unit_witness,
    unroll,
)
from .partitions import parse_label
from .points import equivalent, from_json
from .quivers import one_vertex_quiver, quiver_of, simplicity_certificate, to_dot

FORMAT_ENV = "DIAGQUIVER_FORMAT"
FORMATS = ("json", "csv", "dot", "text")


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    family: str | None = None
    n: int | None = None
    d: int | None = None
    p: int | None = None
    q: int | None = None
    fmt: str = "text"
    output: str | None = None
    extra: dict = field(default_factory=dict)


def _params(cfg: CommandConfig) -> tuple[int, ...]:
    fam = MatrixFamily(cfg.family)
    if fam in (MatrixFamily.A, MatrixFamily.B):
        d = cfg.d if cfg.d is not None else cfg.p
        if d is None:
            raise UsageError("family A/B needs --d")
        return (d,)
    if fam is MatrixFamily.C:
        if cfg.p is None or cfg.q is None:
            raise UsageError("family C needs --p and --q")
        return (cfg.p, cfg.q)
    p = cfg.p if cfg.p is not None else cfg.d
    if p is None:
        raise UsageError(f"family {fam.value} needs --p")
    return (p,)


def _matrix(cfg: CommandConfig) -> BranchingMatrix:
    if cfg.family is None or cfg.n is None:
        raise UsageError("--family and --n are required")
    try:
        fam = MatrixFamily(cfg.family.upper())
    except ValueError:
        raise UsageError(f"unknown family {cfg.family!r}") from None
    cfg.family = fam.value
    big = (sum(_params(cfg)) >= 5) if fam is MatrixFamily.C else (_params(cfg)[0] >= 6)
    return build(fam, cfg.n, _params(cfg), verbose=big)


def _text_matrix(m: BranchingMatrix) -> str:
    labels = [str(x) for x in m.labels]
    width = max([len(s) for s in labels] + [len(str(v)) for r in m.entries for v in r])
    head = " " * (width + 1) + " ".join(s.rjust(width) for s in labels)
    rows = [labels[i].rjust(width) + " " + " ".join(str(v).rjust(width) for v in r)
            for i, r in enumerate(m.entries)]
    name = f"{m.family.value}^{m.n}_{','.join(map(str, m.params))}"
    return "\n".join([name, head, *rows]) + "\n"


def _cmd_matrix(cfg: CommandConfig) -> tuple[int, str]:
    m = _matrix(cfg)
    if cfg.fmt == "json":
        return 0, m.to_json() + "\n"
    if cfg.fmt == "csv":
        return 0, m.to_csv()
    if cfg.fmt == "dot":
        return 0, to_dot(quiver_of(m))
    return 0, _text_matrix(m)


def _cmd_coeff(cfg: CommandConfig) -> tuple[int, str]:
    try:
        fam = co.Family(cfg.extra["coeff_family"])
    except ValueError:
        raise UsageError(f"unknown coefficient family {cfg.extra['coeff_family']!r}") from None
    target = parse_label(cfg.extra["target"])
    args = [parse_label(a) for a in cfg.extra["args"]]
    value = co.coefficient(fam, target, args)
    if cfg.fmt == "json":
        return 0, json.dumps({"family": fam.value, "target": str(target),
                              "args": [str(a) for a in args], "value": value}) + "\n"
    return 0, f"{value}\n"


def _cmd_chartable(cfg: CommandConfig) -> tuple[int, str]:
    t = character_table(cfg.d)
    if cfg.fmt == "json":
        return 0, json.dumps({"d": t.d, "rows": [str(r) for r in t.rows],
                              "cols": [str(c) for c in t.cols],
                              "values": [list(r) for r in t.values],
                              "class_sizes": list(t.class_sizes)}) + "\n"
    return 0, t.to_csv()


def _cmd_spectra(cfg: CommandConfig) -> tuple[int, str]:
    fam = MatrixFamily((cfg.family or "A").upper())
    if cfg.n is None:
        raise UsageError("--n is required")
    cfg.family = fam.value
    params = _params(cfg)
    if fam in (MatrixFamily.A, MatrixFamily.B):
        cert = spectral_verify(cfg.n, params[0])
        table = character_table(params[0])
        doc = {
            "family": fam.value, "n": cfg.n, "params": list(params),
            "eigenvalues": cert.eigenvalue_multiset(),
            "eigenvectors": [{"class": str(mu), "eigenvalue": cert.eigenvalues[mu],
                              "vector": list(table.column(j))}
                             for j, mu in enumerate(table.cols)],
            "verified": cert.valid,
        }
        ok = cert.valid
    else:
        if fam is MatrixFamily.C:
            spectrum = type2_spectrum(cfg.n, *params)
        else:
            if fam is MatrixFamily.D and cfg.n % 2:
                raise UsageError("family D needs an even n")
            spectrum = parity_spectrum(fam.value, cfg.n, params[0])
        doc = {"family": fam.value, "n": cfg.n, "params": list(params),
               "eigenvalues": list(spectrum.eigenvalues), "verified": spectrum.blocks_verified}
        ok = spectrum.blocks_verified
    return (0 if ok else 1), json.dumps(doc) + "\n"


def _cmd_quiver(cfg: CommandConfig) -> tuple[int, str]:
    q = quiver_of(_matrix(cfg))
    if cfg.fmt == "dot" or cfg.extra.get("dot"):
        return 0, to_dot(q)
    cert = simplicity_certificate(q)
    if cfg.fmt == "json":
        doc = q.to_dict()
        doc["simplicity"] = cert.verdict.value
        return 0, json.dumps(doc) + "\n"
    return 0, f"{cert}\n"


def _cmd_dimcheck(cfg: CommandConfig) -> tuple[int, str]:
    m = _matrix(cfg)
    rep = dim_check(m, cfg.extra.get("k"))
    if cfg.fmt == "json":
        return (0 if rep.ok else 1), json.dumps({
            "family": rep.family, "n": rep.n, "k": rep.k, "checked": rep.checked,
            "ok": rep.ok, "violations": rep.violations}) + "\n"
    return (0 if rep.ok else 1), "\n".join(rep.lines()) + "\n"


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.strip("()[] ").split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad integer vector {text!r}") from None


def _quiver_for(cfg: CommandConfig):
    loops = cfg.extra.get("loops")
    if loops is not None:
        return one_vertex_quiver(loops)
    return quiver_of(_matrix(cfg))


def _cmd_bratteli(cfg: CommandConfig) -> tuple[int, str]:
    q = _quiver_for(cfg)
    init = _vector(cfg.extra["initial"]) if cfg.extra.get("initial") else (1,) * q.size
    diag = unroll(q, init, cfg.extra["stages"])
    return 0, json.dumps(diag.to_dict()) + "\n"


def _cmd_k0(cfg: CommandConfig) -> tuple[int, str]:
    q = _quiver_for(cfg)
    u = K0Class(_vector(cfg.extra["vector"]))
    tr = decide_positive(q, u, trace=True)
    doc = {"vector": list(u.vector), "positive": tr.verdict, "method": tr.method,
           "pairing": tr.pairing, "trace": [list(v) for v in tr.iterates]}
    if cfg.extra.get("against") is not None:
        z = K0Class(_vector(cfg.extra["against"]))
        doc["order_unit_witness"] = order_unit_witness(q, u, z)
    if cfg.fmt == "json":
        return 0, json.dumps(doc) + "\n"
    lines = [f"positive: {tr.verdict} ({tr.method})"]
    lines += [f"  u A^{j} = {list(v)}" for j, v in enumerate(tr.iterates)]
    if "order_unit_witness" in doc:
        lines.append(f"order-unit witness N = {doc['order_unit_witness']}")
    return 0, "\n".join(lines) + "\n"


def _cmd_points_equiv(cfg: CommandConfig) -> tuple[int, str]:
    seqs = []
    for path in cfg.extra["files"]:
        with open(path) as fh:
            seqs.append(from_json(fh.read()))
    same = equivalent(*seqs)
    return (0 if same else 1), ("equivalent\n" if same else "inequivalent\n")


def _cmd_verify_appendix(cfg: CommandConfig) -> tuple[int, str]:
    checks = verify_appendix(verbose=True)
    lines = []
    for c in checks:
        lines.append(f"{'PASS' if c.matches else 'FAIL'} {c.name}")
        for row, col, gold, got in c.mismatches:
            lines.append(f"    row {row} col {col}: stored {gold}, computed {got}")
    ok = all(c.matches for c in checks)
    lines.append(f"{sum(c.matches for c in checks)}/{len(checks)} tables match")
    if cfg.fmt == "json":
        return (0 if ok else 1), json.dumps([
            {"name": c.name, "matches": c.matches,
             "mismatches": [list(x) for x in c.mismatches]} for c in checks]) + "\n"
    return (0 if ok else 1), "\n".join(lines) + "\n"


COMMANDS = {
    "matrix": _cmd_matrix,
    "coeff": _cmd_coeff,
    "chartable": _cmd_chartable,
    "spectra": _cmd_spectra,
    "quiver": _cmd_quiver,
    "dimcheck": _cmd_dimcheck,
    "bratteli": _cmd_bratteli,
    "k0": _cmd_k0,
    "points-equiv": _cmd_points_equiv,
    "verify-appendix": _cmd_verify_appendix,
}


def run(cfg: CommandConfig) -> tuple[int, str]:
    return COMMANDS[cfg.subcommand](cfg)


def _add_matrix_args(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", required=required, help="A, B, C, D or E")
    p.add_argument("--n", type=int, required=required)
    p.add_argument("--d", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)


def build_parser() -> argparse.ArgumentParser:
    default_fmt = os.environ.get(FORMAT_ENV, "text")
    if default_fmt not in FORMATS:
        default_fmt = "text"
    ap = argparse.ArgumentParser(prog="diagquiver", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=FORMATS, default=default_fmt)
    ap.add_argument("--output", "-o", help="write the result here instead of stdout")
    sub = ap.add_subparsers(dest="subcommand", required=True)

    def add(name, **kw):
        sp = sub.add_parser(name, **kw)
        sp.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
        sp.add_argument("--output", "-o", default=argparse.SUPPRESS)
        return sp

    _add_matrix_args(add("matrix", help="print a branching matrix"))

    sp = add("coeff", help="evaluate one coefficient")
    sp.add_argument("coeff_family", help=", ".join(f.value for f in co.Family))
    sp.add_argument("target", help='superscript, e.g. "(2,1)" or "((1),(1))"')
    sp.add_argument("args", nargs="+", help="subscripts")

    sp = add("chartable", help="character table of S_d")
    sp.add_argument("d", type=int)

    sp = add("spectra", help="certified eigenvalues")
    _add_matrix_args(sp, required=False)

    sp = add("quiver", help="quiver and simplicity verdict")
    _add_matrix_args(sp)
    sp.add_argument("--dot", action="store_true")

    sp = add("dimcheck", help="dimension-count check of a branching matrix")
    _add_matrix_args(sp)
    sp.add_argument("--k", type=int)

    for name in ("bratteli", "k0"):
        sp = add(name, help="Bratteli sizes" if name == "bratteli" else "positive cone test")
        _add_matrix_args(sp, required=False)
        sp.add_argument("--loops", type=int, help="use the one-vertex quiver with this many loops")
        if name == "bratteli":
            sp.add_argument("--stages", type=int, default=4)
            sp.add_argument("--initial", help="comma separated initial sizes")
        else:
            sp.add_argument("--vector", required=True)
            sp.add_argument("--against", help="also find N with N*vector - against positive")

    sp = add("points-equiv", help="compare two point data sequences")
    sp.add_argument("files", nargs=2)

    add("verify-appendix", help="recompute the golden n=2 tables")
    return ap


_EXTRA = ("coeff_family", "target", "args", "dot", "k", "loops", "stages", "initial",
          "vector", "against", "files")


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    cfg = CommandConfig(
        subcommand=ns.subcommand,
        family=getattr(ns, "family", None),
        n=getattr(ns, "n", None),
        d=getattr(ns, "d", None),
        p=getattr(ns, "p", None),
        q=getattr(ns, "q", None),
        fmt=ns.format,
        output=ns.output,
        extra={k: getattr(ns, k) for k in _EXTRA if hasattr(ns, k)},
    )
    try:
        status, text = run(cfg)
    except (UsageError, TableTooLarge, RankTooSmall, PreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Indeterminate as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return 1
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status
