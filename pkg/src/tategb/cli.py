"""Command-line front end: ``tategb <command> [options] [input]``.

Input files hold one polynomial per line.  Blank lines and ``#`` comments are
ignored, an optional ``vars: x, y, z`` line fixes the variable order, and a
line made of ``---`` separates the groups needed by ``wnf``, ``intersect``,
``colon`` and ``saturate``.

Exit codes: 0 on success, 1 when a computation fails, 2 on bad configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple

from .buchberger import GroebnerBasis, groebner, minimalize
from .coeffs import check_prime, format_ext
from .fan import (
    candidate_universal_gb,
    check_universal,
    grid,
    sample_initial_ideals,
)
from .ideals import (
    EliminationError,
    IdealPresentation,
    colon,
    eliminate,
    intersect,
    saturate,
)
from .mora import ReductionLimit, ReductionTimeout, certificate_problems, wnf_with_cofactors
from .order import TateOrder, format_radii, parse_order, parse_radii
from .overconv import OverconvParams, ReducedToZeroAtBudget, groebner_overconv, wnf_overconv
from .poly import ParseError, Polynomial, format_polynomial, parse_polynomial, scan_variables
from .systems import system

MEMORY_ENV = "TATEGB_MEMORY_MB"
SEPARATOR = "---"


class ConfigError(ValueError):
    """Bad user configuration (exit code 2)."""


@dataclass
class JobConfig:
    subcommand: str
    prime: int = 2
    radii: str = "0"
    s_radii: str | None = None
    order: str = "grevlex"
    source: str | None = None
    inline: List[str] = field(default_factory=list)
    varnames: List[str] | None = None
    output_format: str = "text"
    seed: int | None = None


# -- input ------------------------------------------------------------------------


def parse_input(text: str, varnames: Sequence[str] | None = None, *, warn=None):
    """Parse polynomial input.

    Returns ``(variables, groups)`` where ``groups`` is a list of polynomial
    lists, one per ``---``-separated block.  Zero polynomials are dropped
    with a warning.
    """
    warn = warn or (lambda msg: print(f"warning: {msg}", file=sys.stderr))
    lines = []
    declared = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vars:"):
            declared = [v.strip() for v in line[5:].split(",") if v.strip()]
            continue
        lines.append(line)
    names = list(varnames) if varnames else declared
    if names is None:
        names = scan_variables("\n".join(l for l in lines if l != SEPARATOR))
    if not names:
        names = ["x"]
    groups: List[List[Polynomial]] = [[]]
    for line in lines:
        if line == SEPARATOR:
            groups.append([])
            continue
        f = parse_polynomial(line, names)
        if not f:
            warn(f"zero polynomial {line!r} dropped")
            continue
        groups[-1].append(f)
    return names, groups


def _read_source(cfg: JobConfig) -> str:
    chunks = []
    if cfg.source == "-":
        chunks.append(sys.stdin.read())
    elif cfg.source:
        try:
            with open(cfg.source, encoding="utf-8") as fh:
                chunks.append(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read {cfg.source}: {exc}") from None
    if cfg.inline:
        chunks.append("\n".join(cfg.inline))
    if not chunks:
        raise ConfigError("no input: give a file, '-' for stdin, or --poly")
    return "\n".join(chunks)


# -- output helpers ------------------------------------------------------------------


def _fmt_polys(polys, names, o=None):
    return [format_polynomial(f, names, o) for f in polys]


def _lt_records(gb: GroebnerBasis, names):
    out = []
    for t in gb.leading_terms():
        mono = Polynomial._raw({t.monomial: Fraction(1)}, len(t.monomial))
        out.append(
            {
                "monomial": format_polynomial(mono, names),
                "valuation": format_ext(gb.order.valuation(t.coeff, t.monomial)),
            }
        )
    return out


def _stats_view(stats: dict, timing: bool = True) -> dict:
    keep = ("pairs", "zero_reductions", "reduction_steps", "max_t_size", "basis_size")
    keep += ("seconds",) if timing else ()
    out = {k: stats[k] for k in keep if k in stats}
    if "budget_events" in stats:
        out["budget_events"] = stats["budget_events"]
    return out


class Emitter:
    def __init__(self, fmt: str, out=None, err=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self.err = err or sys.stderr

    def emit(self, report: dict, text_lines: Sequence[str]):
        if self.fmt == "json":
            json.dump(report, self.out, indent=2, sort_keys=True)
            self.out.write("\n")
        else:
            for line in text_lines:
                self.out.write(line + "\n")

    def diag(self, msg: str):
        self.err.write(msg + "\n")


# -- commands ------------------------------------------------------------------------


def _order(cfg: JobConfig, nvars: int) -> TateOrder:
    try:
        radii = parse_radii(cfg.radii, nvars)
        tiebreak = parse_order(cfg.order)
        check_prime(cfg.prime)
        return TateOrder(radii, tiebreak, cfg.prime)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _overconv_params(cfg: JobConfig, args, nvars: int) -> OverconvParams:
    o = _order(cfg, nvars)
    try:
        s = parse_radii(cfg.s_radii, nvars)
        budget = Fraction(args.budget) if args.budget is not None else None
        return OverconvParams(s, o.radii, o.p, o.tiebreak, budget, args.step_cap)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _single_group(groups, what="generators"):
    if len(groups) != 1:
        raise ConfigError(f"expected one block of {what}, got {len(groups)}")
    if not groups[0]:
        raise ConfigError(f"no nonzero {what}")
    return groups[0]


def cmd_gb(cfg, args, em):
    names, groups = parse_input(_read_source(cfg), cfg.varnames)
    F = _single_group(groups)
    if cfg.s_radii:
        P = _overconv_params(cfg, args, len(names))
        gb = groebner_overconv(F, P)
        for ev in gb.stats["budget_events"]:
            em.diag(f"budget: S-polynomial treated as zero after {ev['steps']} steps ({ev['reason']})")
    else:
        gb = groebner(F, _order(cfg, len(names)), timeout=args.timeout)
    out = minimalize(gb, check=False) if args.minimal else gb
    report = {
        "command": "gb",
        "order": out.order.describe(),
        "variables": names,
        "basis": _fmt_polys(out.elements, names, out.order),
        "leading_terms": _lt_records(out, names),
        "minimal": out.minimal,
        "stats": _stats_view(gb.stats, timing=args.stats),
    }
    lines = list(report["basis"])
    if args.stats:
        lines += [f"# {k}: {v}" for k, v in report["stats"].items()]
    em.emit(report, lines)
    return report


def cmd_wnf(cfg, args, em):
    names, groups = parse_input(_read_source(cfg), cfg.varnames)
    if len(groups) == 1:
        polys = groups[0]
        if not polys:
            raise ConfigError("wnf needs a polynomial to reduce")
        f, G = polys[0], polys[1:]
    elif len(groups) == 2 and len(groups[0]) == 1:
        f, G = groups[0][0], groups[1]
    else:
        raise ConfigError("wnf input: f on the first line (or block), divisors after")
    report = {"command": "wnf", "variables": names}
    if cfg.s_radii:
        P = _overconv_params(cfg, args, len(names))
        o = P.order
        outcome = wnf_overconv(f, G, P, track=args.certify)
        if isinstance(outcome, ReducedToZeroAtBudget):
            em.diag(
                f"budget: reduction stopped at step {outcome.steps}, "
                f"val_s = {outcome.final_val_s} ({outcome.reason})"
            )
            report.update(
                outcome="reduced_to_zero_at_budget",
                steps=outcome.steps,
                val_s=str(outcome.final_val_s),
                remainder="0",
            )
            em.emit(report, ["0", f"# reduced to zero at budget after {outcome.steps} steps"])
            return report
        res = outcome.result
        report["outcome"] = "remainder"
    else:
        o = _order(cfg, len(names))
        res = wnf_with_cofactors(f, G, o, track=args.certify)
    report.update(
        order=o.describe(),
        remainder=format_polynomial(res.remainder, names, o),
        steps=res.steps,
        max_t_size=res.max_t_size,
    )
    lines = [report["remainder"]]
    if args.certify:
        problems = certificate_problems(res, f, G, o)
        report["unit"] = format_polynomial(res.unit, names, o)
        report["cofactors"] = _fmt_polys(res.cofactors, names, o)
        report["certificate_ok"] = not problems
        report["certificate_problems"] = problems
        lines += [f"# unit: {report['unit']}"]
        lines += [f"# u{i + 1}: {u}" for i, u in enumerate(report["cofactors"])]
        lines += [f"# certificate: {'ok' if not problems else '; '.join(problems)}"]
    if args.stats:
        lines += [f"# steps: {res.steps}", f"# max_t_size: {res.max_t_size}"]
    em.emit(report, lines)
    if args.certify and problems:
        raise ComputationError("certificate check failed: " + "; ".join(problems))
    return report


class ComputationError(RuntimeError):
    pass


def _parse_mode(text: str):
    if text == "infinite":
        return "infinite"
    if text.startswith("finite:"):
        try:
            return Fraction(text[len("finite:"):])
        except (ValueError, ZeroDivisionError):
            pass
    raise ConfigError(f"mode must be 'infinite' or 'finite:R0', got {text!r}")


def _ideal(cfg, names, gens) -> IdealPresentation:
    o = _order(cfg, len(names))
    if not o.finite:
        raise ConfigError("ideal operations need finite log-radii")
    return IdealPresentation(gens, o.p, o.radii, o.tiebreak)


def _emit_ideal(cmd, J: IdealPresentation, names, em, extra=None):
    gb = J.groebner()
    report = {
        "command": cmd,
        "variables": list(names),
        "order": J.order.describe(),
        "generators": _fmt_polys(gb.elements, names, J.order),
        "leading_terms": _lt_records(gb, names),
    }
    if extra:
        report.update(extra)
    em.emit(report, report["generators"] or ["# zero ideal"])
    return report


def cmd_eliminate(cfg, args, em):
    names, groups = parse_input(_read_source(cfg), cfg.varnames)
    F = _single_group(groups)
    if args.var not in names:
        raise ConfigError(f"unknown variable {args.var!r}")
    k = names.index(args.var)
    I = _ideal(cfg, names, F)
    J = eliminate(I, k, _parse_mode(args.mode))
    rest = [v for v in names if v != args.var]
    return _emit_ideal("eliminate", J, rest, em, {"eliminated": args.var})


def _two_groups(cfg, what):
    names, groups = parse_input(_read_source(cfg), cfg.varnames)
    if len(groups) != 2 or not groups[0] or not groups[1]:
        raise ConfigError(f"{what} needs two nonempty blocks separated by '{SEPARATOR}'")
    return names, groups


def cmd_intersect(cfg, args, em):
    names, (a, b) = _two_groups(cfg, "intersect")
    J = intersect(_ideal(cfg, names, a), _ideal(cfg, names, b), _parse_mode(args.mode))
    return _emit_ideal("intersect", J, names, em)


def cmd_colon(cfg, args, em):
    names, (a, b) = _two_groups(cfg, "colon")
    I = _ideal(cfg, names, a)
    divisor = b[0] if len(b) == 1 else _ideal(cfg, names, b)
    return _emit_ideal("colon", colon(I, divisor, _parse_mode(args.mode)), names, em)


def cmd_saturate(cfg, args, em):
    names, (a, b) = _two_groups(cfg, "saturate")
    if len(b) != 1:
        raise ConfigError("saturate takes a single polynomial in the second block")
    J = saturate(_ideal(cfg, names, a), b[0], _parse_mode(args.mode), cross_check=args.cross_check)
    return _emit_ideal("saturate", J, names, em)


def _parse_samples(text: str, nvars: int) -> List[Tuple[Fraction, ...]]:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            out.append(parse_radii(chunk, nvars))
    if not out:
        raise ConfigError("no samples")
    return out


def cmd_fan(cfg, args, em):
    names, groups = parse_input(_read_source(cfg), cfg.varnames)
    F = _single_group(groups)
    n = len(names)
    try:
        if args.samples:
            samples = _parse_samples(args.samples, n)
        elif args.grid:
            samples = grid(args.grid, n)
        else:
            raise ConfigError("fan needs --samples or --grid")
        tiebreak = parse_order(cfg.order)
        check_prime(cfg.prime)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    I = IdealPresentation(F, cfg.prime, samples[0], tiebreak)
    report_obj = sample_initial_ideals(I, samples)
    entries = []
    lines = []
    for e in report_obj.entries:
        lt = [
            {
                "monomial": format_polynomial(
                    Polynomial._raw({m: Fraction(1)}, n), names
                ),
                "valuation": v,
            }
            for m, v in e.lt_set
        ]
        reps = [format_radii(r) for r in e.representatives]
        entries.append(
            {
                "lt_set": lt,
                "representatives": reps,
                "basis": _fmt_polys(e.basis.elements, names, e.basis.order),
            }
        )
        lines.append(
            "LT {"
            + ", ".join(f"{d['monomial']} (val {d['valuation']})" for d in lt)
            + "} at r = " + " | ".join(reps)
        )
    report = {"command": "fan", "variables": names, "entries": entries}
    if args.universal:
        G = candidate_universal_gb(I, samples)
        chk = check_universal(G, samples, cfg.prime, tiebreak)
        report["universal_candidate"] = _fmt_polys(G, names)
        report["universal_ok"] = chk.ok
        lines.append("# universal candidate: " + "; ".join(report["universal_candidate"]))
        lines.append(f"# passes on all samples: {chk.ok}")
    em.emit(report, lines)
    return report


def cmd_bench(cfg, args, em):
    try:
        F, names = system(args.system)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    o = _order(cfg, len(names))
    runs = []
    for _ in range(args.repeat):
        t0 = time.perf_counter()
        try:
            gb = groebner(F, o, timeout=args.timeout)
        except ReductionTimeout:
            runs.append({"status": "timeout", "seconds": time.perf_counter() - t0})
            continue
        runs.append(
            {
                "status": "ok",
                "seconds": time.perf_counter() - t0,
                "basis_size": len(gb),
                "minimal_size": len(minimalize(gb, check=False)),
                **_stats_view(gb.stats),
            }
        )
    report = {
        "command": "bench",
        "system": args.system,
        "order": o.describe(),
        "timeout": args.timeout,
        "runs": runs,
    }
    lines = []
    for i, r in enumerate(runs):
        if r["status"] == "timeout":
            lines.append(f"run {i + 1}: timeout after {r['seconds']:.2f}s (expected outcome for hard systems)")
        else:
            lines.append(
                f"run {i + 1}: {r['seconds']:.3f}s, basis {r['basis_size']}, "
                f"pairs {r['pairs']}, steps {r['reduction_steps']}"
            )
    em.emit(report, lines)
    return report


COMMANDS = {
    "gb": cmd_gb,
    "wnf": cmd_wnf,
    "eliminate": cmd_eliminate,
    "intersect": cmd_intersect,
    "colon": cmd_colon,
    "saturate": cmd_saturate,
    "fan": cmd_fan,
    "bench": cmd_bench,
}


# -- argument parsing ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="input file, or '-' for stdin")
    common.add_argument("--poly", action="append", default=[], help="inline polynomial line (repeatable)")
    common.add_argument("--prime", "-p", type=int, default=2)
    common.add_argument("--radii", "-r", default="0", help="comma-separated log-radii; one value is broadcast")
    common.add_argument("--order", default="grevlex", help="lex, grevlex or block(k;o1;o2)")
    common.add_argument("--vars", help="comma-separated variable names")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--stats", action="store_true", help="print statistics")
    common.add_argument("--stats-file", help="write the JSON report to this path")

    parser = argparse.ArgumentParser(
        prog="tategb", description="Gröbner bases in Tate algebras with Mora reductions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def overconv_flags(sp):
        sp.add_argument("--s-radii", help="overconvergence log-radii s >= r")
        sp.add_argument("--budget", help="valuation budget for val_s")
        sp.add_argument("--step-cap", type=int, default=10**6)

    sp = sub.add_parser("gb", parents=[common], help="Gröbner basis")
    sp.add_argument("--min", dest="minimal", action="store_true", default=True)
    sp.add_argument("--no-min", dest="minimal", action="store_false")
    sp.add_argument("--timeout", type=float, help="seconds before giving up")
    overconv_flags(sp)

    sp = sub.add_parser("wnf", parents=[common], help="weak normal form of the first polynomial")
    sp.add_argument("--certify", action="store_true", help="track and check the certificate")
    overconv_flags(sp)

    mode_help = "'infinite' or 'finite:R0'"
    sp = sub.add_parser("eliminate", parents=[common], help="eliminate one variable")
    sp.add_argument("--var", required=True)
    sp.add_argument("--mode", default="infinite", help=mode_help)
    for name, what in (("intersect", "intersection"), ("colon", "colon ideal I : J")):
        sp = sub.add_parser(name, parents=[common], help=f"{what} of two ideals")
        sp.add_argument("--mode", default="infinite", help=mode_help)
    sp = sub.add_parser("saturate", parents=[common], help="saturation by a polynomial")
    sp.add_argument("--mode", default="infinite", help=mode_help)
    sp.add_argument("--cross-check", action="store_true", help="compare with the iterated colon")

    sp = sub.add_parser("fan", parents=[common], help="sample initial ideals over log-radii")
    sp.add_argument("--samples", help="radii vectors separated by ';', e.g. '0;1/2;1'")
    sp.add_argument("--grid", action="append", help="lo:hi:step, once per variable or once for all")
    sp.add_argument("--universal", action="store_true", help="build and check a candidate universal basis")

    sp = sub.add_parser("bench", parents=[common], help="time a benchmark system")
    sp.add_argument("--system", required=True, help="katsura:N or cyclic:N")
    sp.add_argument("--repeat", type=int, default=1)
    sp.add_argument("--timeout", type=float, default=60.0)
    return parser


def _config(args) -> JobConfig:
    return JobConfig(
        subcommand=args.command,
        prime=args.prime,
        radii=args.radii,
        s_radii=getattr(args, "s_radii", None),
        order=args.order,
        source=args.input,
        inline=args.poly,
        varnames=[v.strip() for v in args.vars.split(",")] if args.vars else None,
        output_format=args.format,
    )


def _apply_memory_cap(em: Emitter):
    value = os.environ.get(MEMORY_ENV)
    if not value:
        return
    try:
        import resource

        limit = int(value) * 1024 * 1024
        resource.setrlimit(resource.RLIMIT_AS, (limit, limit))
    except (ValueError, OSError, ImportError) as exc:
        em.diag(f"warning: cannot apply {MEMORY_ENV}={value}: {exc}")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    em = Emitter(args.format, out, err)
    _apply_memory_cap(em)
    try:
        cfg = _config(args)
        report = COMMANDS[args.command](cfg, args, em)
        if args.stats_file:
            with open(args.stats_file, "w", encoding="utf-8") as fh:
                json.dump(report, fh, indent=2, sort_keys=True)
    except (ConfigError, ParseError) as exc:
        em.diag(f"error: {exc}")
        return 2
    except ValueError as exc:
        em.diag(f"error: {exc}")
        return 2
    except (EliminationError, ReductionLimit, ComputationError, MemoryError) as exc:
        em.diag(f"computation failed: {exc}")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
