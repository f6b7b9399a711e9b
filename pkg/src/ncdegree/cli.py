"""Command-line front end.

Exit codes: 0 success; 1 hypotheses fail, the bound fails, or a run did not
complete; 2 parse or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .estimate import (
    InstanceConfig,
    InstanceGenerationError,
    campaign,
    pipeline_trace,
    sharpness_table,
    summarize,
    verify_instance,
    witness_monomial,
)
from .fields import field_from_tag
from .freealg import NcPoly
from .mnseries import GroupSeries, centralize
from .parsing import PolySyntaxError, parse_poly
from .words import OrderConfig, default_names, format_group_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    field: object
    nvars: int
    order: OrderConfig
    floor: object
    budget_centralize: int
    budget_peel: int
    seed: int
    format: str
    out: str

    @property
    def names(self):
        return default_names(self.nvars)


GLOBAL_DEFAULTS = {
    "field": "q",
    "vars": 2,
    "order": None,
    "floor": None,
    "budget_centralize": 50,
    "budget_peel": 64,
    "seed": 0,
    "format": "human",
    "out": None,
}


def _global_flags(parser: argparse.ArgumentParser):
    S = argparse.SUPPRESS
    g = parser.add_argument_group("global options")
    g.add_argument("--field", default=S, help="q (rationals) or gf:<p> (default q)")
    g.add_argument("--vars", type=int, default=S, help="alphabet size for f, g and a (default 2)")
    g.add_argument("--order", default=S, help="generator precedence, largest first, e.g. y,x")
    g.add_argument("--floor", default=S, help="truncation floor: an integer degree or 'auto'")
    g.add_argument("--budget-centralize", type=int, default=S, help="centralizer step budget (default 50)")
    g.add_argument("--budget-peel", type=int, default=S, help="peeling step budget (default 64)")
    g.add_argument("--seed", type=int, default=S, help="base seed for random instances (default 0)")
    g.add_argument("--format", choices=("human", "json", "csv"), default=S, help="output format")
    g.add_argument("--out", default=S, help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncdegree", description=__doc__.splitlines()[0])
    _global_flags(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check deg P(f,g) against the bound")
    p.add_argument("P"), p.add_argument("f"), p.add_argument("g")
    p = sub.add_parser("centralize", help="conjugate a into the centralizer of its leading word")
    p.add_argument("a")
    p = sub.add_parser("witness", help="witness monomial of P_bar(t^m, t^n + s)")
    p.add_argument("P_bar"), p.add_argument("m", type=int), p.add_argument("n", type=int)
    p = sub.add_parser("campaign", help="verify seeded random instances")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--fields", default="q,gf:2,gf:3,gf:5",
                   help="comma-separated field tags cycled over instances")
    p = sub.add_parser("sharpness", help="f = x^n, g = x^m + y, P = [x,y]^k")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--m-max", type=int, default=5)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--fields", default=None, help="comma-separated field tags (default: --field)")
    p = sub.add_parser("pipeline", help="replay the constructive proof on one instance")
    p.add_argument("P"), p.add_argument("f"), p.add_argument("g")
    for name, sp in sub.choices.items():
        _global_flags(sp)
    return parser


def make_config(ns) -> CliConfig:
    opts = {k: getattr(ns, k, v) for k, v in GLOBAL_DEFAULTS.items()}
    try:
        F = field_from_tag(opts["field"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    nvars = opts["vars"]
    if nvars < 2:
        raise ConfigError("--vars must be at least 2")
    names = default_names(nvars)
    prec = None
    if opts["order"]:
        parts = [x.strip() for x in opts["order"].split(",")]
        lookup = {n: i for i, n in enumerate(names)} | {f"x{i + 1}": i for i in range(nvars)}
        try:
            prec = tuple(lookup[x] for x in parts)
        except KeyError as exc:
            raise ConfigError(f"unknown variable {exc.args[0]!r} in --order") from None
    try:
        order = OrderConfig(nvars, prec)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    floor = opts["floor"]
    if floor is not None and floor != "auto":
        try:
            floor = int(floor)
        except ValueError:
            raise ConfigError(f"--floor must be an integer or 'auto', got {floor!r}") from None
    for key in ("budget_centralize", "budget_peel"):
        if opts[key] < 1:
            raise ConfigError(f"--{key.replace('_', '-')} must be positive")
    return CliConfig(F, nvars, order, floor, opts["budget_centralize"], opts["budget_peel"],
                     opts["seed"], opts["format"], opts["out"])


# ---------------------------------------------------------------------------
# output helpers


def _csv(rows, columns) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=columns, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: json.dumps(v) if isinstance(v, (dict, list)) else v for k, v in r.items()})
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=False) + "\n"


REPORT_COLUMNS = ["f", "g", "P", "field", "m", "n", "N", "comm_deg", "bound", "lhs", "slack", "holds"]


def _human_report(d) -> str:
    hyp = d["hypotheses"]
    failed = [k for k, v in hyp.items() if k != "all_satisfied" and v is False]
    lines = [
        f"f = {d['f']}",
        f"g = {d['g']}",
        f"P = {d['P']}    over {d['field']}",
        f"m = {d['m']}, n = {d['n']}, N = w_(m,n)(P) = {d['N']}, deg [f,g] = {d['comm_deg']}",
        f"deg P(f,g) = {d['lhs']}  >=  {d['bound']}  (slack {d['slack']})  : {'holds' if d['holds'] else 'FAILS'}",
        "hypotheses: " + ("all satisfied" if hyp["all_satisfied"] else "failed: " + ", ".join(failed)),
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands


def _parse(text, cfg: CliConfig, nvars=None):
    nvars = nvars or cfg.nvars
    return parse_poly(text, nvars, cfg.field)


def cmd_verify(ns, cfg: CliConfig):
    P = _parse(ns.P, cfg, 2)
    f, g = _parse(ns.f, cfg), _parse(ns.g, cfg)
    if P.is_constant():
        raise ConfigError("P must be nonconstant")
    rep = verify_instance(P, f, g, cfg.order)
    d = rep.to_dict(P, f, g, cfg.field)
    code = EXIT_OK if rep.hypothesis.all_satisfied and rep.holds else EXIT_FAIL
    if cfg.format == "json":
        return _json(d), code
    if cfg.format == "csv":
        row = {**d, "all_satisfied": d["hypotheses"]["all_satisfied"]}
        return _csv([row], REPORT_COLUMNS + ["all_satisfied"]), code
    return _human_report(d), code


def centralize_report(a: NcPoly, cfg: CliConfig, floor=None):
    floor = -10 if floor in (None, "auto") else floor
    series = GroupSeries.from_poly(a, floor, cfg.order)
    res = centralize(series, cfg.budget_centralize)
    names = cfg.names
    return res, {
        "a": a.format(names),
        "field": cfg.field.tag,
        "floor": str(series.floor),
        "budget": cfg.budget_centralize,
        "status": res.status,
        "reason": res.reason,
        "b": res.b.format(names),
        "e": res.e.format(names, limit=12),
        "e_terms": len(res.e),
        "residual": res.residual.format(names, limit=6),
        "steps": [s.to_dict(names) for s in res.steps],
    }


STEP_COLUMNS = ["step", "case", "residual_lead", "residual_coefficient", "correction_word", "next_lead", "floor"]


def cmd_centralize(ns, cfg: CliConfig):
    a = _parse(ns.a, cfg)
    if a.is_zero():
        raise ConfigError("cannot centralize 0")
    res, d = centralize_report(a, cfg, cfg.floor)
    code = EXIT_OK if res.complete else EXIT_FAIL
    if cfg.format == "json":
        return _json(d), code
    if cfg.format == "csv":
        return _csv(d["steps"], STEP_COLUMNS), code
    lines = [f"centralize {d['a']}  (floor {d['floor']}, budget {d['budget']})"]
    lines.append(f"{'step':>4}  case  {'residual lead':<24} {'coeff':>6}  floor")
    for s in d["steps"]:
        lines.append(f"{s['step']:>4}  {s['case']:>4}  {s['residual_lead']:<24} {s['residual_coefficient']:>6}  {s['floor']}")
    status = d["status"] + (f" ({d['reason']})" if d["reason"] else "")
    lines += [f"status: {status}", f"b = {d['b']}", f"e = {d['e']}  [{d['e_terms']} terms]"]
    if not res.complete:
        lines.append(f"residual = {d['residual']}")
    return "\n".join(lines) + "\n", code


def cmd_witness(ns, cfg: CliConfig):
    P_bar = _parse(ns.P_bar, cfg, 2)
    try:
        w = witness_monomial(P_bar, ns.m, ns.n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    d = w.to_dict()
    if cfg.format == "json":
        return _json(d), EXIT_OK
    if cfg.format == "csv":
        return _csv([d], list(d)), EXIT_OK
    lines = [
        f"P_bar = {P_bar.format(('x', 'y'))}, m = {w.m}, n = {w.n}, N = {w.N}, q = {w.q}",
        f"z = {d['z']}  (alphas {w.alphas}, betas {w.betas}, I = {w.I}, J = {w.J})",
        f"u = {d['u']}  coefficient {d['u_coefficient']}" + ("  [special case]" if w.special_case else ""),
        f"deg_t(u) = {w.deg_t}, deg_s(u) = {w.deg_s} <= q, N = deg_t + n*deg_s = {w.deg_t + w.n * w.deg_s}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _field_list(text):
    try:
        return tuple(field_from_tag(t.strip()) for t in text.split(",") if t.strip())
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def cmd_campaign(ns, cfg: CliConfig):
    if ns.count < 1:
        raise ConfigError("--count must be positive")
    fields = _field_list(ns.fields)
    rows, reports = [], []
    try:
        for i, P, f, g, rep in campaign(ns.count, cfg.seed, InstanceConfig(), fields):
            reports.append(rep)
            rows.append({"index": i, "seed": cfg.seed + i, **rep.to_dict(P, f, g, P.field)})
    except InstanceGenerationError as exc:
        raise ConfigError(str(exc)) from None
    summary = summarize(reports)
    code = EXIT_OK if summary["failures"] == 0 else EXIT_FAIL
    if cfg.format == "json":
        return "".join(_json(r) for r in rows) + _json({"summary": summary}), code
    if cfg.format == "csv":
        return _csv(rows, ["index", "seed"] + REPORT_COLUMNS), code
    lines = [f"{r['index']:>5} {r['field']:>5}  lhs {r['lhs']:>3} >= {r['bound']:>7}  slack {r['slack']:>6}  "
             f"{'ok' if r['holds'] else 'FAIL'}" for r in rows]
    lines.append(f"count {summary['count']}, holds {summary['holds']}, failures {summary['failures']}, "
                 f"min slack {summary['min_slack']}")
    return "\n".join(lines) + "\n", code


def cmd_sharpness(ns, cfg: CliConfig):
    fields = _field_list(ns.fields) if ns.fields else (cfg.field,)
    if min(ns.n_max, ns.m_max) < 2 or ns.k_max < 1:
        raise ConfigError("need --n-max, --m-max >= 2 and --k-max >= 1")
    rows = sharpness_table(range(2, ns.n_max + 1), range(2, ns.m_max + 1), range(1, ns.k_max + 1), fields)
    out = []
    for r in rows:
        b = r["bound"]
        out.append({"field": r["field"], "n": r["n"], "m": r["m"], "k": r["k"], "lhs": r["lhs"],
                    "bound": f"{b.numerator}/{b.denominator}", "expected": r["expected"],
                    "sharp": r["lhs"] == b == r["expected"]})
    code = EXIT_OK if all(r["sharp"] for r in out) else EXIT_FAIL
    if cfg.format == "json":
        return "".join(_json(r) for r in out), code
    if cfg.format == "csv":
        return _csv(out, list(out[0]) if out else []), code
    lines = [f"{'field':>5} {'n':>2} {'m':>2} {'k':>2} {'lhs':>4} {'bound':>6} {'k(n+1)':>6}  sharp"]
    lines += [f"{r['field']:>5} {r['n']:>2} {r['m']:>2} {r['k']:>2} {r['lhs']:>4} {r['bound']:>6} "
              f"{r['expected']:>6}  {'yes' if r['sharp'] else 'NO'}" for r in out]
    lines.append(f"{sum(r['sharp'] for r in out)}/{len(out)} cells sharp")
    return "\n".join(lines) + "\n", code


def cmd_pipeline(ns, cfg: CliConfig):
    P = _parse(ns.P, cfg, 2)
    f, g = _parse(ns.f, cfg), _parse(ns.g, cfg)
    rep = verify_instance(P, f, g, cfg.order)
    if not rep.hypothesis.all_satisfied:
        d = {"status": "hypotheses-failed", "failed": rep.hypothesis.failed(),
             "report": rep.to_dict(P, f, g, cfg.field)}
        if cfg.format == "json":
            return _json(d), EXIT_FAIL
        return f"hypotheses fail: {', '.join(d['failed'])}\n", EXIT_FAIL
    trace = pipeline_trace(P, f, g, cfg.order, "auto" if cfg.floor is None else cfg.floor,
                           cfg.budget_centralize, cfg.budget_peel)
    d = trace.to_dict()
    code = EXIT_OK if trace.complete and all(trace.checks.values()) else EXIT_FAIL
    if cfg.format == "json":
        return _json(d), code
    if cfg.format == "csv":
        cols = ["status", "m", "n", "lhs", "R_degree_formal", "u_degree", "bound", "peel_steps", "peel_limit"]
        return _csv([d], cols), code
    lines = [
        f"roles: f of degree m = {d['m']}, g of degree n = {d['n']}" + ("  (f and g swapped)" if d["swapped"] else ""),
        f"floor {d['floor']}: centralize {d['centralize_status']} after {d['centralize_steps']} steps, "
        f"root h = {d['root']}, f' ~ h^{d['f_exponent']}",
    ]
    if d["peel_steps"] is not None:
        lines.append(f"peel: {d['peel_steps']} steps (limit {d['peel_limit']}), coefficients {d['peel_coefficients']}")
        lines.append(f"s = {d['s']}  (degree {d['s_degree']})")
    if trace.complete:
        w = d["witness"]
        lines.append(f"P_bar = {d['P_bar']}, witness z = {w['z']} -> u = {w['u']} "
                     f"(deg_t {w['deg_t']}, deg_s {w['deg_s']}, q {w['q']})")
        lines.append(f"chain: deg P(f,g) = {d['lhs']} >= deg R = {d['R_degree_formal']} "
                     f">= deg u = {d['u_degree']} >= bound = {d['bound']}")
        bad = [k for k, v in d["checks"].items() if not v]
        lines.append("checks: " + ("all pass" if not bad else "FAILED " + ", ".join(bad)))
    lines.append(f"status: {d['status']}" + (f" ({d['detail']})" if d["detail"] else ""))
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "verify": cmd_verify,
    "centralize": cmd_centralize,
    "witness": cmd_witness,
    "campaign": cmd_campaign,
    "sharpness": cmd_sharpness,
    "pipeline": cmd_pipeline,
}


def run(argv=None):
    """Parse ``argv`` and run without printing.

    Returns ``(text, exit_code, config)``; on a usage error ``text`` is the
    diagnostic and ``config`` is ``None``.
    """
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return "", EXIT_USAGE if exc.code else EXIT_OK, None
    try:
        cfg = make_config(ns)
        text, code = COMMANDS[ns.command](ns, cfg)
    except (PolySyntaxError, ConfigError, ZeroDivisionError) as exc:
        return f"error: {exc}\n", EXIT_USAGE, None
    return text, code, cfg


def main(argv=None) -> int:
    text, code, cfg = run(argv)
    if cfg is None:
        sys.stderr.write(text)
        return code
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
