"""Command-line front end.

Every command prints one table, as CSV (with '#' comment lines recording the
parameters) or JSON.  Exact rationals are written as "num/den" strings and
log-domain values as a pair of columns X_sign, X_log4.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import asymptotics as asy
from .codes import CapExceededError, enumerator_pair, read_code_file
from .ensembles import EnsembleSpec, average_enumerators, normalize_family
from .exactmath import LogReal
from .finite_bounds import (
    NProfile,
    auto_expurgation,
    css_variant,
    fidelity_bound,
    gv_distance_css,
    gv_distance_stabilizer,
    max_rate_for_target,
    reform_bound,
)

EXIT_OK, EXIT_ARGS, EXIT_CAP, EXIT_CONSISTENCY = 0, 2, 3, 4


class UsageError(ValueError):
    """A command-line parameter is invalid; the message names the flag."""


class ConsistencyError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# tables


class Table:
    def __init__(self, command: str, params: dict, columns: list[str]):
        self.command = command
        self.params = params
        self.columns = columns
        self.rows: list[list] = []

    def add(self, *values) -> None:
        row = []
        for v in values:
            if isinstance(v, LogReal):
                row.extend([v.sign, float(v.log4) if v.sign else -math.inf])
            elif isinstance(v, np.floating):
                row.append(float(v))
            elif isinstance(v, np.integer):
                row.append(int(v))
            else:
                row.append(v)
        if len(row) != len(self.columns):
            raise AssertionError(f"row width {len(row)} != {len(self.columns)} columns")
        self.rows.append(row)


def lr_columns(name: str) -> list[str]:
    return [f"{name}_sign", f"{name}_log4"]


def _cell(v) -> str:
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if v is None:
        return ""
    return str(v)


def _json_value(v):
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _json_value(x) for k, x in v.items()}
    return v


def render(table: Table, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "command": table.command,
            "params": _json_value(table.params),
            "columns": table.columns,
            "rows": [[_json_value(v) for v in r] for r in table.rows],
        }
        return json.dumps(doc, indent=1) + "\n"
    buf = io.StringIO()
    buf.write(f"# command: {table.command}\n")
    for key in sorted(table.params):
        buf.write(f"# {key}: {json.dumps(_json_value(table.params[key]))}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(table.columns)
    for r in table.rows:
        w.writerow([_cell(v) for v in r])
    return buf.getvalue()


def parse_cell(text: str):
    """Inverse of the CSV cell encoding."""
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    if "/" in text:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def read_table(text: str) -> tuple[dict, list[str], list[list]]:
    """Parse a CSV emitted by this tool: (params, columns, rows)."""
    params = {}
    body = []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, val = line[2:].partition(": ")
            params[key] = json.loads(val) if key != "command" else val
        else:
            body.append(line)
    reader = csv.reader(body)
    columns = next(reader)
    rows = [[parse_cell(c) for c in r] for r in reader]
    return params, columns, rows


def logreal_from_columns(sign, log4) -> LogReal:
    return LogReal.from_log4(int(sign), float(log4))


# ---------------------------------------------------------------------------
# argument helpers


def parse_grid(text: str, flag: str, default_spacing: str = "log") -> list[float]:
    parts = text.split(":")
    try:
        if len(parts) == 1:
            return [float(parts[0])]
        if len(parts) not in (3, 4):
            raise ValueError
        a, b, count = float(parts[0]), float(parts[1]), int(parts[2])
        spacing = parts[3] if len(parts) == 4 else default_spacing
    except ValueError:
        raise UsageError(f"{flag}: expected start:stop:count[:log|lin], got {text!r}") from None
    if count < 1:
        raise UsageError(f"{flag}: count must be at least 1")
    if spacing == "log":
        if a <= 0 or b <= 0:
            raise UsageError(f"{flag}: log spacing needs positive endpoints")
        vals = np.geomspace(a, b, count)
    elif spacing == "lin":
        vals = np.round(np.linspace(a, b, count), 12)
    else:
        raise UsageError(f"{flag}: spacing must be log or lin, got {spacing!r}")
    return [float(v) for v in vals]


def _p_values(args, default: str | None = None) -> list[float]:
    if args.p is not None and args.p_grid is not None:
        raise UsageError("--p and --p-grid are mutually exclusive")
    if args.p is not None:
        ps = [args.p]
    elif args.p_grid is not None:
        ps = parse_grid(args.p_grid, "--p-grid")
    elif default is not None:
        ps = parse_grid(default, "--p-grid")
    else:
        raise UsageError("--p: a channel probability (or --p-grid) is required")
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise UsageError(f"--p: probabilities must lie in [0, 1], got {p}")
    return ps


def _expurgation(text: str | None, spec: EnsembleSpec | None = None):
    if not text:
        return frozenset()
    if text == "auto":
        if spec is None:
            raise UsageError("--expurgate: 'auto' needs an ensemble")
        return auto_expurgation(spec)
    try:
        return frozenset(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"--expurgate: expected comma-separated weights or 'auto', got {text!r}") from None


def _spec(args) -> EnsembleSpec:
    if args.n is None:
        raise UsageError("--n: required")
    try:
        family = normalize_family(args.family)
    except ValueError as e:
        raise UsageError(f"--family: {e}") from None
    if family == "css":
        if args.k1 is None or args.k2 is None:
            raise UsageError("--k1/--k2: required for family css")
        if not 0 <= args.k1 <= args.k2 <= args.n:
            raise UsageError(f"--k1/--k2: need 0 <= k1 <= k2 <= n, got k1={args.k1}, k2={args.k2}")
        base = EnsembleSpec(family, args.n, k1=args.k1, k2=args.k2)
    else:
        if args.k is None:
            raise UsageError(f"--k: required for family {args.family}")
        if not 0 <= args.k <= args.n:
            raise UsageError(f"--k: need 0 <= k <= n, got k={args.k}")
        if family == "linear_stabilizer" and (args.n - args.k) % 2:
            raise UsageError("--k: linear stabilizer codes need n - k even")
        base = EnsembleSpec(family, args.n, k=args.k)
    removed = _expurgation(getattr(args, "expurgate", None), base)
    if any(not 1 <= j <= args.n for j in removed):
        raise UsageError(f"--expurgate: weights must lie in 1..{args.n}")
    return EnsembleSpec(base.family, base.n, base.k, base.k1, base.k2, removed)


def _source(args):
    """(source object, params) from --code-file or the ensemble flags."""
    if getattr(args, "code_file", None):
        code = read_code_file(args.code_file, kind="gf4")
        if not code.is_self_orthogonal():
            raise UsageError("--code-file: generators are not self-orthogonal")
        pair = enumerator_pair(code)
        return pair, {"code_file": str(args.code_file), "n": code.n, "k": pair.k}
    spec = _spec(args)
    params = {"family": spec.family, "n": spec.n}
    if spec.family == "css":
        params.update(k1=spec.k1, k2=spec.k2)
    else:
        params["k"] = spec.k
    params["expurgate"] = sorted(spec.expurgation)
    return spec, params


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs and jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


# ---------------------------------------------------------------------------
# commands


def cmd_enumerators(args) -> Table:
    if args.code_file:
        pair, params = _source(args)
    else:
        spec = _spec(args)
        pair = average_enumerators(spec)
        params = {"family": spec.family, "n": spec.n, "k": spec.quantum_k}
        if spec.family == "css":
            params.update(k1=spec.k1, k2=spec.k2)
    try:
        pair.check()
    except ValueError as e:
        raise ConsistencyError(str(e)) from None
    t = Table("enumerators", params, ["j", "B", "Bperp", "difference"])
    for j in range(pair.n + 1):
        t.add(j, pair.B[j], pair.Bperp[j], pair.B[j] - pair.Bperp[j])
    return t


def _bound_row(task):
    source, p, debug = task
    ev = fidelity_bound(source, p, breakdown=debug)
    return ev


def cmd_bound(args) -> Table:
    source, params = _source(args)
    ps = _p_values(args)
    params["p"] = ps
    profile = NProfile(source)
    cols = ["p"] + lr_columns("bound") + ["bound"]
    if args.debug_terms:
        t = Table("bound", params, ["p", "m"] + lr_columns("term"))
        for p in ps:
            ev = fidelity_bound(source, p, profile=profile, breakdown=True)
            for m, term in ev.per_weight_terms.items():
                t.add(p, m, term)
        return t
    t = Table("bound", params, cols)
    for p in ps:
        ev = fidelity_bound(source, p, profile=profile)
        t.add(p, ev.infidelity_bound, ev.value)
    return t


def cmd_reform(args) -> Table:
    source, params = _source(args)
    ps = _p_values(args)
    if len(ps) != 1:
        raise UsageError("--p: reform-bound takes a single p")
    p = ps[0]
    br, total = reform_bound(source, p, debug=args.debug_terms)
    params.update(p=p, m0=br.m0, tail_log4=br.tail.log4, total_log4=total.log4, total=float(total))
    if br.tail_printed is not None:
        params["tail_printed_log4"] = br.tail_printed.log4
    t = Table("reform-bound", params, ["w"] + lr_columns("T") + ["T"])
    for w, term in enumerate(br.Tw):
        if w >= 1 and w <= min(2 * (br.m0 - 1), len(br.Tw) - 1):
            t.add(w, term, float(term))
    return t


def cmd_gv(args) -> Table:
    if args.n is None:
        raise UsageError("--n: required")
    fam = normalize_family(args.family)
    if fam == "css":
        if args.k1 is None or args.k2 is None:
            raise UsageError("--k1/--k2: required for family css")
        d = gv_distance_css(args.n, args.k1, args.k2)
        params = {"family": fam, "n": args.n, "k1": args.k1, "k2": args.k2}
    else:
        if args.k is None:
            raise UsageError("--k: required")
        if not args.n > args.k >= 2:
            raise UsageError(f"--k: need n > k >= 2, got n={args.n}, k={args.k}")
        if (args.n - args.k) % 2:
            raise UsageError("--k: need n = k (mod 2)")
        d = gv_distance_stabilizer(args.n, args.k)
        params = {"family": fam, "n": args.n, "k": args.k}
    t = Table("gv", params, ["d"])
    t.add(d)
    return t


def _rate_task(task):
    n, family, p, target, constraint, auto = task
    return max_rate_for_target(n, family, p, target, constraint, expurgate_auto=auto)


def _n_values(args) -> list[int]:
    if args.n is not None:
        return [args.n]
    if args.n_grid is not None:
        return sorted({int(round(x)) for x in parse_grid(args.n_grid, "--n-grid")})
    raise UsageError("--n: required (or --n-grid)")


def cmd_rate_search(args) -> Table:
    ps = _p_values(args)
    if len(ps) != 1:
        raise UsageError("--p: rate-search takes a single p")
    if not 0 < args.target:
        raise UsageError("--target: must be positive")
    fam = normalize_family(args.family)
    ns = _n_values(args)
    params = {"family": fam, "p": ps[0], "target": args.target, "css_constraint": args.constraint,
              "expurgate": "auto" if args.expurgate == "auto" else "none"}
    tasks = [(n, fam, ps[0], args.target, args.constraint, args.expurgate == "auto") for n in ns]
    t = Table("rate-search", params, ["n", "k", "k1", "k2", "rate", "bound_log4", "feasible", "monotone"])
    for r in _pmap(_rate_task, tasks, args.jobs):
        t.add(r.n, r.k, r.k1, r.k2, r.rate, r.bound, r.feasible, r.monotone)
    return t


def _exponent_task(task):
    family, R, p, constraint, method = task
    if family == "stabilizer":
        if method == "explicit":
            return asy.explicit_stabilizer_exponent(R, p)
        return asy.error_exponent(asy.ExponentSpec("stabilizer", p, R=R))
    return asy.error_exponent(asy.ExponentSpec.css(R, p, constraint))


def _exp_family(name: str) -> str:
    fam = normalize_family(name)
    return "css" if fam == "css" else "stabilizer"


def cmd_exponent(args) -> Table:
    ps = _p_values(args)
    if len(ps) != 1 or not 0 < ps[0] < 0.75:
        raise UsageError("--p: exponent takes a single p in (0, 3/4)")
    fam = _exp_family(args.family)
    rs = parse_grid(args.r_grid or "0.05:0.85:17:lin", "--r-grid", "lin")
    params = {"family": fam, "p": ps[0], "method": args.method}
    if fam == "css":
        params["css_constraint"] = args.constraint
    tasks = [(fam, R, ps[0], args.constraint, args.method) for R in rs]
    t = Table("exponent", params, ["R", "E"])
    for R, E in zip(rs, _pmap(_exponent_task, tasks, args.jobs)):
        t.add(R, E)
    return t


def _capacity_task(task):
    family, p, constraint, method = task
    return asy.capacity_lower(family, p, constraint, method=method)


def cmd_capacity(args) -> Table:
    ps = _p_values(args)
    for p in ps:
        if not 0 < p < 0.75:
            raise UsageError(f"--p: must lie in (0, 3/4), got {p}")
    fam = _exp_family(args.family)
    method = args.method if args.method != "explicit" else "closed"
    if fam == "css" and method == "closed":
        method = "numeric"
    params = {"family": fam, "method": method}
    if fam == "css":
        params["css_constraint"] = args.constraint
    tasks = [(fam, p, args.constraint, method) for p in ps]
    t = Table("capacity", params, ["p", "capacity"])
    for p, c in zip(ps, _pmap(_capacity_task, tasks, args.jobs)):
        t.add(p, c)
    return t


# ---------------------------------------------------------------------------
# figures


def _fig2(args) -> Table:
    spec = EnsembleSpec("stabilizer", 50, 22)
    p = 1e-4
    br, total = reform_bound(spec, p)
    params = {"preset": "stabilizer [[50,22]] ensemble, p = 1e-4", "n": 50, "k": 22, "p": p,
              "m0": br.m0, "tail_log4": br.tail.log4, "total_log4": total.log4}
    t = Table("figure 2", params, ["w"] + lr_columns("T") + ["T"])
    for w in range(1, min(2 * (br.m0 - 1), 50) + 1):
        t.add(w, br.Tw[w], float(br.Tw[w]))
    return t


def _fig3(args) -> Table:
    ps = _p_values(args, "1e-5:1e-1:41:log")
    plain = EnsembleSpec("stabilizer", 50, 22)
    ex = EnsembleSpec("stabilizer", 50, 22, expurgation={1, 2, 3, 4})
    params = {"preset": "stabilizer [[50,22]], plain and expurgated with I = {1,2,3,4}", "n": 50, "k": 22,
              "expurgate": [1, 2, 3, 4]}
    t = Table("figure 3", params, ["p"] + lr_columns("plain") + lr_columns("expurgated"))
    pa, pb = NProfile(plain), NProfile(ex)
    for p in ps:
        t.add(p, fidelity_bound(plain, p, profile=pa).infidelity_bound, fidelity_bound(ex, p, profile=pb).infidelity_bound)
    return t


def fig4_specs(n: int = 100, k: int = 50) -> dict:
    out = {"stabilizer": EnsembleSpec("stabilizer", n, k)}
    for v in ("balanced", "unbalanced", "mirrored"):
        k1, k2 = css_variant(n, k, v)
        out[f"css_{v}"] = EnsembleSpec("css", n, k1=k1, k2=k2)
    return out


def _fig4(args) -> Table:
    ps = _p_values(args, "1e-4:1e-1:31:log")
    specs = fig4_specs()
    params = {"preset": "n = 100, R = 1/2", "pairs": {k: [s.k1, s.k2] for k, s in specs.items() if s.k1 is not None}}
    cols = ["p"]
    for name in specs:
        cols += lr_columns(name)
    t = Table("figure 4", params, cols)
    profiles = {name: NProfile(s) for name, s in specs.items()}
    for p in ps:
        t.add(p, *[fidelity_bound(s, p, profile=profiles[name]).infidelity_bound for name, s in specs.items()])
    return t


def _fig5(args) -> Table:
    ns = sorted({int(round(x)) for x in np.geomspace(30, 3000, 11)})
    if args.n_grid:
        ns = _n_values(args)
    p, target = 0.01, 1e-4
    params = {"preset": "p = 0.01, target 1 - F = 1e-4, stabilizer and balanced CSS", "p": p, "target": target,
              "capacity": asy.capacity_closed_form(p)}
    tasks = [(n, fam, p, target, "balanced", False) for n in ns for fam in ("stabilizer", "css")]
    res = _pmap(_rate_task, tasks, args.jobs)
    t = Table("figure 5", params, ["n", "rate_stabilizer", "rate_css_balanced"])
    for i, n in enumerate(ns):
        t.add(n, res[2 * i].rate, res[2 * i + 1].rate)
    return t


def _fig67(args, which: str) -> Table:
    R = 0.5
    ws = parse_grid("0.005:0.995:199:lin", "--omega")
    R1b, R2b = asy.css_rates(R, "balanced")
    R1u, R2u = asy.css_rates(R, "unbalanced")
    params = {"preset": f"{which} enumerator exponents at R = 1/2", "R": R,
              "css_balanced": [R1b, R2b], "css_unbalanced": [R1u, R2u]}
    num = "6" if which == "dual" else "7"
    t = Table(f"figure {num}", params, ["omega", "stabilizer", "css_balanced", "css_unbalanced"])
    for w in ws:
        t.add(w, asy.b_exponent("stabilizer", which, w, R=R), asy.b_exponent("css", which, w, R1=R1b, R2=R2b),
              asy.b_exponent("css", which, w, R1=R1u, R2=R2u))
    return t


def _fig8(args) -> Table:
    p = 0.01
    rs = parse_grid(args.r_grid or "0.0:0.9:46:lin", "--r-grid", "lin")
    params = {"preset": "p = 0.01; css unbalanced pairing R1 = (1 - R2)/2", "p": p}
    tasks = []
    for R in rs:
        tasks += [("stabilizer", R, p, "balanced", "numeric"), ("stabilizer", R, p, "balanced", "explicit"),
                  ("css", R, p, "balanced", "numeric"), ("css", R, p, "unbalanced", "numeric")]
    res = _pmap(_exponent_task, tasks, args.jobs)
    t = Table("figure 8", params, ["R", "stabilizer", "stabilizer_explicit", "css_balanced", "css_unbalanced"])
    for i, R in enumerate(rs):
        t.add(R, *res[4 * i: 4 * i + 4])
    return t


def _fig9(args) -> Table:
    ps = _p_values(args, "0.005:0.18:12:lin")
    params = {"preset": "css unbalanced pairing R1 = (1 - R2)/2"}
    tasks = []
    for p in ps:
        tasks += [("stabilizer", p, "balanced", "closed"), ("stabilizer", p, "balanced", "numeric"),
                  ("css", p, "balanced", "numeric"), ("css", p, "unbalanced", "numeric")]
    res = _pmap(_capacity_task, tasks, args.jobs)
    t = Table("figure 9", params, ["p", "stabilizer", "stabilizer_numeric", "css_balanced", "css_unbalanced"])
    for i, p in enumerate(ps):
        t.add(p, *res[4 * i: 4 * i + 4])
    return t


FIGURES = {2: _fig2, 3: _fig3, 4: _fig4, 5: _fig5, 6: lambda a: _fig67(a, "dual"),
           7: lambda a: _fig67(a, "primal"), 8: _fig8, 9: _fig9}


def cmd_figure(args) -> Table:
    if args.number not in FIGURES:
        raise UsageError(f"figure: number must be one of {sorted(FIGURES)}, got {args.number}")
    return FIGURES[args.number](args)


def cmd_verify(args) -> str:
    from .oracle import run_all

    reports = run_all(args.max_code_n, args.max_g_n)
    lines = [json.dumps(r.as_json(), sort_keys=True) for r in reports]
    failed = [r for r in reports if not r.match]
    text = "\n".join(lines) + "\n"
    if failed:
        raise ConsistencyError(f"{len(failed)} oracle checks failed", text)
    return text


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qfidelity", description="Fidelity bounds and exponents for quantum code ensembles.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", default="stab", help="stab, lin-stab or css")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--k1", type=int)
    common.add_argument("--k2", type=int)
    common.add_argument("--expurgate", help="comma-separated weights, or 'auto'")
    common.add_argument("--p", type=float)
    common.add_argument("--p-grid", help="start:stop:count[:log|lin]")
    common.add_argument("--r-grid", help="start:stop:count[:log|lin]")
    common.add_argument("--n-grid", help="start:stop:count[:log|lin]")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--debug-terms", action="store_true", help="emit per-weight breakdowns")
    common.add_argument("--code-file", help="matrix file with the GF(4) generators of a stabilizer")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for grid points")
    common.add_argument("--constraint", choices=("balanced", "unbalanced"), default="balanced",
                        help="css rate pairing")
    common.add_argument("--method", choices=("numeric", "explicit", "closed"), default="numeric")
    common.add_argument("--target", type=float, default=1e-4, help="target infidelity for rate-search")

    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("enumerators", "bound", "reform-bound", "gv", "rate-search", "exponent", "capacity"):
        sub.add_parser(name, parents=[common])
    fig = sub.add_parser("figure", parents=[common])
    fig.add_argument("number", type=int)
    ver = sub.add_parser("verify", parents=[common])
    ver.add_argument("--max-code-n", type=int, default=4)
    ver.add_argument("--max-g-n", type=int, default=6)
    return parser


COMMANDS = {
    "enumerators": cmd_enumerators,
    "bound": cmd_bound,
    "reform-bound": cmd_reform,
    "gv": cmd_gv,
    "rate-search": cmd_rate_search,
    "exponent": cmd_exponent,
    "capacity": cmd_capacity,
    "figure": cmd_figure,
}


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "verify":
            try:
                text = cmd_verify(args)
            except ConsistencyError as e:
                _emit(e.args[1], args.out)
                print(f"error: {e.args[0]}", file=sys.stderr)
                return EXIT_CONSISTENCY
            _emit(text, args.out)
            return EXIT_OK
        table = COMMANDS[args.command](args)
        _emit(render(table, args.format), args.out)
        return EXIT_OK
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except ConsistencyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (UsageError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ARGS


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
