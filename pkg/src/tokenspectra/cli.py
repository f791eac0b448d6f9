"""Command-line front end.

    token-spectra spectrum --family complete --n 4 --k 2
    token-spectra token --input p3.edges --k 2 --emit graph6
    token-spectra verify --check johnson --n 8 --k 3
    token-spectra sweep --family atlas --n 4..7 --connected --k 2..3 --check containment --format json
    token-spectra family --family disjoint_cliques --m 2 --s 3

Exit codes: 0 all checks passed, 1 a check failed, 2 usage or parse error,
3 size guard tripped, 4 numerical failure. Errors go to stderr as
``ERROR:<code>:<message>``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from . import __version__, verify
from .combinatorics import binomial
from .corpus import atlas, sample_graphs
from .errors import NumericalError, ResourceError, TokenSpectraError, ValidationError
from .formats import emit_edge_list, emit_graph6, read_graphs
from .graphs import FAMILIES, Graph, erdos_renyi, family
from .guard import resolve_max_dim, size_guard
from .spectra import fmt_value, nontrivial_spectrum, token_spectrum
from .tokens import token_graph

COMMANDS = ("spectrum", "token", "verify", "sweep", "family")
CORPUS_FAMILIES = sorted(FAMILIES) + ["atlas"]
ALL_GRAPH_CHECKS = list(verify.GRAPH_CHECKS) + ["fiedler"]
CHECK_NAMES = ALL_GRAPH_CHECKS + list(verify.PARAM_CHECKS) + ["all"]


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    family: str | None = None
    n: list[int] = field(default_factory=list)
    m: list[int] = field(default_factory=list)
    s: list[int] = field(default_factory=list)
    p: float | None = None
    count: int = 1
    connected: bool = False
    k: list[int] = field(default_factory=list)
    tol: float | None = None
    seed: int = 0
    max_dim: int | None = None
    jobs: int = 1
    output_format: str = "text"
    output: str | None = None
    check: str = "all"
    emit: str = "edges"
    timing: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        if self.tol is not None and not self.tol > 0:
            raise ValidationError("--tol must be positive")
        if self.max_dim is not None and self.max_dim < 1:
            raise ValidationError("--max-dim must be at least 1")
        if any(k < 0 for k in self.k):
            raise ValidationError("k must be non-negative")
        if self.jobs < 1:
            raise ValidationError("--jobs must be at least 1")


def parse_range(text: str) -> list[int]:
    """'3' -> [3]; '1..4' -> [1, 2, 3, 4]; '2,5' -> [2, 5]."""
    out = []
    try:
        for part in text.split(","):
            if ".." in part:
                a, b = part.split("..", 1)
                out.extend(range(int(a), int(b) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise ValidationError(f"bad integer range {text!r}") from None
    if not out:
        raise ValidationError(f"empty range {text!r}")
    return out


# --- graph sources ---------------------------------------------------------

def load_graphs(cfg: RunConfig) -> list[Graph]:
    if cfg.input and cfg.family:
        raise ValidationError("give either --input or --family, not both")
    if cfg.input:
        with open(cfg.input) as fh:
            graphs = read_graphs(fh.read())
        if not graphs:
            raise ValidationError(f"{cfg.input} contains no graphs")
        return graphs
    if not cfg.family:
        return []
    if cfg.family == "atlas":
        if not cfg.n:
            raise ValidationError("atlas needs --n (a vertex count or range, at most 7)")
        return atlas(max(cfg.n), min(cfg.n), connected=cfg.connected)
    if cfg.family == "erdos_renyi":
        if not cfg.n:
            raise ValidationError("erdos_renyi needs --n")
        if cfg.p is None:
            return sample_graphs(cfg.count, min(cfg.n), max(cfg.n), cfg.seed, connected=cfg.connected)
        graphs = [erdos_renyi(n, cfg.p, seed=cfg.seed + i) for n in cfg.n for i in range(cfg.count)]
        return [g for g in graphs if g.is_connected()] if cfg.connected else graphs
    if cfg.family not in FAMILIES:
        raise ValidationError(f"unknown family {cfg.family!r}; choose from {CORPUS_FAMILIES}")
    names = FAMILIES[cfg.family][1]
    grid = [getattr(cfg, name) or [None] for name in names]
    graphs = [family(cfg.family, **dict(zip(names, vals))) for vals in product(*grid)]
    return [g for g in graphs if g.is_connected()] if cfg.connected else graphs


def require_graphs(cfg: RunConfig) -> list[Graph]:
    graphs = load_graphs(cfg)
    if not graphs:
        raise ValidationError(f"{cfg.command} needs --input or --family")
    return graphs


def require_k(cfg: RunConfig) -> list[int]:
    if not cfg.k:
        raise ValidationError(f"{cfg.command} needs --k")
    return cfg.k


# --- check cells -----------------------------------------------------------

@dataclass(frozen=True)
class Cell:
    check: str
    args: tuple
    clamped: bool
    dim: int


def _graph_cells(graphs: list[Graph], checks: list[str], ks: list[int]) -> list[Cell]:
    cells = []
    for g in graphs:
        for name in checks:
            if name == "fiedler":
                cells.append(Cell(name, (g, g), False, g.n * g.n))
                continue
            _, kmin, kmax = verify.GRAPH_CHECKS[name]
            hi = kmax(g.n)
            valid = [k for k in ks if kmin <= k <= hi]
            clamped = len(valid) != len(ks)
            for k in valid:
                kk = min(k, g.n - k) if name == "aldous" else k
                dim = max(binomial(g.n, kk), binomial(g.n, kk - 1))
                cells.append(Cell(name, (g, k), clamped, dim))
    return cells


def _param_cells(cfg: RunConfig, checks: list[str]) -> list[Cell]:
    cells = []
    ks = require_k(cfg)
    for name in checks:
        if name in ("johnson", "kernel"):
            if not cfg.n:
                raise ValidationError(f"{name} needs --n")
            for n in cfg.n:
                valid = [k for k in ks if 1 <= k <= n // 2]
                for k in valid:
                    cells.append(Cell(name, (n, k), len(valid) != len(ks), binomial(n, k)))
        elif name == "extremal":
            if not (cfg.m and cfg.s):
                raise ValidationError("extremal needs --m and --s")
            combos = list(product(cfg.m, cfg.s, ks))
            valid = [(m, s, k) for m, s, k in combos if 1 <= k <= m]
            if not valid:
                raise ValidationError("extremal needs 1 <= k <= m")
            for m, s, k in valid:
                cells.append(Cell(name, (m, s, k), len(valid) != len(combos), binomial(m * s, k)))
    return cells


def build_cells(cfg: RunConfig) -> list[Cell]:
    if cfg.check not in CHECK_NAMES:
        raise ValidationError(f"unknown check {cfg.check!r}; choose from {CHECK_NAMES}")
    graphs = load_graphs(cfg)
    if cfg.check == "all":
        if graphs:
            return _graph_cells(graphs, ALL_GRAPH_CHECKS, require_k(cfg))
        if cfg.m and cfg.s:
            return _param_cells(cfg, ["extremal"])
        return _param_cells(cfg, ["johnson", "kernel"])
    if cfg.check in verify.PARAM_CHECKS:
        return _param_cells(cfg, [cfg.check])
    if not graphs:
        raise ValidationError(f"check {cfg.check!r} needs --input or --family")
    ks = [0] if cfg.check == "fiedler" else require_k(cfg)
    return _graph_cells(graphs, [cfg.check], ks)


def _call(cell: Cell, tol: float | None, seed: int):
    kw = {} if tol is None else {"tol": tol}
    if cell.check == "johnson":
        return verify.johnson_check(*cell.args, **kw)
    if cell.check == "kernel":
        return verify.kernel_check(*cell.args, **kw)
    if cell.check == "extremal":
        return verify.extremal_check(*cell.args, **kw)
    if cell.check == "fiedler":
        return verify.fiedler_check(*cell.args, **kw)
    fn = verify.GRAPH_CHECKS[cell.check][0]
    if cell.check in ("garland", "norm"):
        kw["seed"] = seed
    if cell.check in ("commutation", "degree_sum", "norm"):
        kw.pop("tol", None)
    return fn(*cell.args, **kw)


def run_cell(job) -> dict:
    index, cell, tol, seed, max_dim, timing = job
    start = time.perf_counter()
    with size_guard(max_dim):
        try:
            report = _call(cell, tol, seed)
        except NumericalError as exc:
            report = verify.VerificationReport(cell.check, False, notes=[f"numerical failure: {exc}"],
                                               parameters={"args": repr(cell.args)})
    elapsed = time.perf_counter() - start
    d = report.to_dict()
    d.update(index=index, version=__version__, seed=seed, clamped=cell.clamped,
             tol=d["parameters"].get("tol", 0.0),
             timing={"elapsed_s": elapsed if timing else None})
    return _finite(d)


def _finite(x):
    if isinstance(x, dict):
        return {k: _finite(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_finite(v) for v in x]
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def run_checks(cfg: RunConfig) -> list[dict]:
    cells = build_cells(cfg)
    if not cells:
        raise ValidationError("no (check, k) combination satisfies the check preconditions")
    limit = resolve_max_dim(cfg.max_dim)
    worst = max(cells, key=lambda c: c.dim)
    if worst.dim > limit:
        raise ResourceError(f"{worst.check} needs dense dimension {worst.dim} > size guard {limit}")
    jobs = [(i, c, cfg.tol, cfg.seed, limit, cfg.timing) for i, c in enumerate(cells)]
    if cfg.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(run_cell, jobs, chunksize=max(1, len(jobs) // (4 * cfg.jobs))))
    return [run_cell(j) for j in jobs]


# --- rendering -------------------------------------------------------------

CSV_FIELDS = ["index", "check_name", "passed", "n", "k", "graph", "residual", "slack",
              "tol", "seed", "clamped", "version"]


def _summary(reports: list[dict]) -> dict:
    passed = sum(r["passed"] for r in reports)
    return {"total": len(reports), "passed": passed, "failed": len(reports) - passed}


def render_reports(cfg: RunConfig, reports: list[dict]) -> str:
    summary = _summary(reports)
    if cfg.output_format == "json":
        doc = {"tool": "tokenspectra", "version": __version__, "command": cfg.command,
               "check": cfg.check, "seed": cfg.seed, "reports": reports, "summary": summary}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
        w.writeheader()
        for r in reports:
            params = r["parameters"]
            w.writerow({**{f: r.get(f) for f in CSV_FIELDS},
                        "n": params.get("n"), "k": params.get("k"), "graph": params.get("graph")})
        return buf.getvalue()
    lines = []
    for r in reports:
        params = r["parameters"]
        bits = [f"{key}={params[key]}" for key in ("n", "k", "m", "s", "graph") if key in params]
        if r["residual"] is not None:
            bits.append(f"residual={r['residual']:.3g}" if isinstance(r["residual"], float)
                        else f"residual={r['residual']}")
        if r["slack"] is not None:
            bits.append(f"slack={r['slack']:.6g}")
        if r["clamped"]:
            bits.append("clamped")
        lines.append(f"{'PASS' if r['passed'] else 'FAIL'} {r['check_name']} " + " ".join(bits))
        lines.extend(f"  note: {note}" for note in r["notes"])
    lines.append(f"summary: {summary['passed']} passed, {summary['failed']} failed, {summary['total']} total")
    return "\n".join(lines) + "\n"


def _spectrum_entries(spec) -> list[list]:
    return [[float(fmt_value(v, spec.tol)), m] for v, m in spec.entries]


def cmd_spectrum(cfg: RunConfig) -> str:
    graphs, ks = require_graphs(cfg), require_k(cfg)
    for g in graphs:
        for k in ks:
            if k > g.n:
                raise ValidationError(f"k={k} exceeds n={g.n}")
            if binomial(g.n, k) > resolve_max_dim(cfg.max_dim):
                raise ResourceError(f"L_{k} dimension {binomial(g.n, k)} exceeds size guard "
                                    f"{resolve_max_dim(cfg.max_dim)}")
    items = []
    for g in graphs:
        for k in ks:
            full = token_spectrum(g, k, cfg.tol)
            nt = nontrivial_spectrum(g, k, full.tol) if 1 <= k <= g.n // 2 else None
            items.append((g, k, full, nt))
    if cfg.output_format == "json":
        doc = [{"graph": emit_graph6(g), "n": g.n, "k": k, "dim": full.dim, "tol": full.tol,
                "spectrum": _spectrum_entries(full),
                "nontrivial": None if nt is None else _spectrum_entries(nt)}
               for g, k, full, nt in items]
        return json.dumps({"tool": "tokenspectra", "version": __version__, "spectra": doc},
                          indent=2, sort_keys=True) + "\n"
    if cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "n", "k", "part", "value", "multiplicity", "tol"])
        for g, k, full, nt in items:
            for part, spec in (("full", full), ("nontrivial", nt)):
                for v, m in (spec.entries if spec else ()):
                    w.writerow([emit_graph6(g), g.n, k, part, fmt_value(v, spec.tol), m, f"{spec.tol:.3g}"])
        return buf.getvalue()
    lines = []
    for g, k, full, nt in items:
        lines.append(f"# n={g.n} m={g.m} k={k} dim={full.dim} tol={full.tol:.3g} graph={emit_graph6(g)}")
        lines.append(full.format())
        lines.append("non-trivial: " + (nt.format() if nt else "n/a (k outside 1..floor(n/2))"))
    return "\n".join(lines) + "\n"


def _emit_graph(cfg: RunConfig, g: Graph, extra: dict | None = None) -> str:
    if cfg.output_format == "json":
        doc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "graph6": emit_graph6(g)}
        doc.update(extra or {})
        return json.dumps(doc, sort_keys=True) + "\n"
    if cfg.emit == "graph6":
        return emit_graph6(g) + "\n"
    return emit_edge_list(g)


def cmd_token(cfg: RunConfig) -> str:
    out = []
    for g in require_graphs(cfg):
        for k in require_k(cfg):
            tg = token_graph(g, k, cfg.max_dim)
            extra = {"k": k, "base": emit_graph6(g), "vertices": tg.subsets().tolist()}
            out.append(_emit_graph(cfg, tg.graph, extra))
    return "".join(out)


def cmd_family(cfg: RunConfig) -> str:
    return "".join(_emit_graph(cfg, g) for g in require_graphs(cfg))


# --- entry point -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"ERROR:2:{message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file, or a file of graph6 lines")
    common.add_argument("--family", choices=CORPUS_FAMILIES)
    common.add_argument("--n", type=parse_range, default=[], help="vertex count or range a..b")
    common.add_argument("--m", type=parse_range, default=[], help="number of cliques / parts")
    common.add_argument("--s", type=parse_range, default=[], help="clique / part size")
    common.add_argument("--p", type=float, help="edge probability for erdos_renyi")
    common.add_argument("--count", type=int, default=1, help="erdos_renyi samples")
    common.add_argument("--connected", action="store_true", help="keep connected graphs only")
    common.add_argument("--k", type=parse_range, default=[], help="k or range a..b")
    common.add_argument("--tol", type=float)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-dim", type=int, dest="max_dim",
                        help="dense size guard (default 20000, or $TOKEN_SPECTRA_MAX_DIM)")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text", dest="output_format")
    common.add_argument("--output", help="write here instead of stdout")
    common.add_argument("--check", default="all", choices=CHECK_NAMES)
    common.add_argument("--emit", choices=("edges", "graph6"), default="edges")
    common.add_argument("--timing", action="store_true", help="record wall-clock time in reports")

    parser = _Parser(prog="token-spectra", description="Token graph Laplacian spectra.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(cfg: RunConfig) -> int:
    with size_guard(resolve_max_dim(cfg.max_dim)):
        if cfg.command in ("verify", "sweep"):
            if cfg.command == "verify":
                cfg.jobs = 1
            reports = run_checks(cfg)
            text = render_reports(cfg, reports)
            code = 0 if all(r["passed"] for r in reports) else 1
            if cfg.output_format != "text":
                s = _summary(reports)
                print(f"summary: {s['passed']} passed, {s['failed']} failed, {s['total']} total",
                      file=sys.stderr)
        else:
            text = {"spectrum": cmd_spectrum, "token": cmd_token, "family": cmd_family}[cfg.command](cfg)
            code = 0
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        return run(cfg)
    except TokenSpectraError as exc:
        print(f"ERROR:{exc.exit_code}:{exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"ERROR:2:{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
