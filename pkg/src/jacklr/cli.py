"""Command-line front end.

Exit codes: 0 success, 1 sweep or verification mismatch, 2 usage error,
3 verify target is not a minimal triple.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import report
from .config import ConfigError, RunConfig, load_config
from .partitions import Partition, format_partition, parse_partition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_NOT_MINIMAL = 0, 1, 2, 3

log = logging.getLogger("jacklr")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(p):
    p.add_argument("--format", choices=("json", "text"), default=None)
    p.add_argument("--d-convention", choices=("minus", "plus"), default=None)
    p.add_argument("--table", choices=("printed", "amended"), default=None)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--use-cache", action="store_true", default=None)
    p.add_argument("--config", default=None, help="key=value configuration file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="jacklr", description="Jack and Macdonald LR coefficients for three-row shapes")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", help="expand P_mu P_nu in the P basis")
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--vars", type=int, default=None, help="number of variables")
    p.add_argument("--qt", action="store_true", help="Macdonald instead of Jack")
    p.add_argument("--alpha", type=Fraction, default=None, help="specialize the Jack parameter")
    _common(p)

    for name, help_ in (("verify", "check the hook formula on one triple"), ("classify", "facets, filling type and hook grids")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--lambda", dest="lam", type=_partition, required=True)
        p.add_argument("--mu", type=_partition, required=True)
        p.add_argument("--nu", type=_partition, required=True)
        if name == "verify":
            p.add_argument("--qt", action="store_true")
        _common(p)

    p = sub.add_parser("sweep", help="verify every minimal triple up to a weight")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--qt", action="store_true")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--all-cases", action="store_true", help="also evaluate every applicable row")
    _common(p)

    p = sub.add_parser("enumerate", help="list minimal triples up to a weight")
    p.add_argument("--max-weight", type=int, default=None)
    _common(p)
    return parser


def _config(args) -> RunConfig:
    flags = {
        "d_convention": args.d_convention,
        "table": args.table,
        "cache_dir": args.cache_dir,
        "use_cache": args.use_cache,
        "format": args.format,
        "max_weight": getattr(args, "max_weight", None),
        "workers": getattr(args, "workers", None),
    }
    if getattr(args, "qt", False) and args.command == "sweep" and args.max_weight is not None:
        flags["max_weight_qt"] = flags.pop("max_weight")
    return load_config(flags, path=args.config)


def _emit(obj, text: str, fmt: str, out):
    if fmt == "json":
        out.write(report.dumps(obj) + "\n")
    else:
        out.write(text + "\n")


# ---------------------------------------------------------------------------


def cmd_expand(args, cfg: RunConfig, out) -> int:
    mu, nu = args.mu, args.nu
    n = args.vars if args.vars is not None else max(len(mu) + len(nu), 1)
    if n < max(len(mu), len(nu), 1):
        raise UsageError(f"--vars {n} is too small for the factors")
    if args.qt and args.alpha is not None:
        raise UsageError("--alpha applies to Jack expansions only")
    fmt = cfg.format or "text"
    rows, lines = [], []
    if args.qt:
        from .macdonald import product_coeffs_qt

        for lam, c in product_coeffs_qt(mu, nu, n).items():
            rows.append({"lambda": list(lam), "c": report.ratfunc2_json(c)})
            lines.append(f"{format_partition(lam)} : {c.to_text()}")
    else:
        from .jack import product_coeffs

        for lam, c in product_coeffs(mu, nu, n).items():
            if args.alpha is not None:
                v = c(args.alpha)
                if v == 0:
                    continue
                rows.append({"lambda": list(lam), "c": [v.numerator, v.denominator]})
                lines.append(f"{format_partition(lam)} : {v}")
            else:
                rows.append({"lambda": list(lam), "c": report.ratfunc_json(c)})
                lines.append(f"{format_partition(lam)} : {c.pretty()}")
    obj = {"mu": list(mu), "nu": list(nu), "vars": n, "qt": args.qt, "terms": rows}
    _emit(obj, "\n".join(lines), fmt, out)
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig, out) -> int:
    fmt = cfg.format or "json"
    if args.qt:
        from .macdonald import verify_triple_qt

        rep = verify_triple_qt(args.lam, args.mu, args.nu, convention=cfg.d_convention, table=cfg.table)
        obj = report.qt_report_json(rep)
        good = rep.match
    else:
        from .stanley import verify_triple

        rep = verify_triple(args.lam, args.mu, args.nu, convention=cfg.d_convention, table=cfg.table)
        obj = report.triple_report_json(rep)
        good = rep.ok
    text = "\n".join(f"{k}: {v}" for k, v in obj.items())
    _emit(obj, text, fmt, out)
    if not rep.minimal:
        return EXIT_NOT_MINIMAL
    return EXIT_OK if good else EXIT_MISMATCH


def cmd_classify(args, cfg: RunConfig, out) -> int:
    from . import horn, stanley

    lam, mu, nu = args.lam, args.mu, args.nu
    minimal, facets = horn.facet_status(lam, mu, nu)
    obj = {"lambda": list(lam), "mu": list(mu), "nu": list(nu), "minimal": minimal, "facets": facets}
    lines = [f"minimal: {minimal}", f"facets: {facets}"]
    if minimal:
        prof = horn.classify_filling(lam, mu, nu)
        case = facets[0]
        obj["case"] = case
        obj["filling"] = {"type": prof.label, "facet": prof.facet}
        lines += [f"case: {case}", f"filling type: {prof.label} (facet {prof.facet})"]
        try:
            dn = stanley.division_numbers(lam, mu, nu, case, cfg.d_convention, cfg.table)
        except stanley.FormulaError as exc:
            obj["division_numbers"] = None
            obj["error"] = str(exc)
            lines.append(f"error: {exc}")
        else:
            grids = stanley.hook_assignment(lam, mu, nu, dn)
            obj["division_numbers"] = dn.rows()
            obj["grids"] = grids
            lines += [f"division numbers: {dn.display()}", f"grids: {stanley.render_assignment(grids)}"]
        key = (tuple(lam), tuple(mu), tuple(nu))
        if key in stanley.PRINTED_ASSIGNMENTS:
            alt = stanley.PRINTED_ASSIGNMENTS[key]
            same = stanley.c_from_assignment(lam, mu, nu, alt) == stanley.oracle_c(lam, mu, nu, 3)
            obj["printed_alternative"] = {"grids": alt, "matches_oracle": same}
            lines.append(f"printed alternative: {stanley.render_assignment(alt)} (matches oracle: {same})")
    _emit(obj, "\n".join(lines), cfg.format or "text", out)
    return EXIT_OK


def cmd_sweep(args, cfg: RunConfig, out) -> int:
    from .sweep import run_sweep

    weight = cfg.max_weight_qt if args.qt else cfg.max_weight
    summary = run_sweep(
        weight,
        qt=args.qt,
        workers=cfg.workers,
        convention=cfg.d_convention,
        table=cfg.table,
        all_cases=args.all_cases,
        cache_dir=cfg.cache_dir if cfg.use_cache else None,
    )
    fmt = cfg.format or "text"
    if fmt == "json":
        print(f"wall time: {summary.seconds:.1f}s", file=sys.stderr)
    _emit(summary.to_json(), summary.to_text(), fmt, out)
    return EXIT_OK if summary.ok else EXIT_MISMATCH


def cmd_enumerate(args, cfg: RunConfig, out) -> int:
    from .horn import classify_cases, enumerate_minimal

    rows, lines = [], []
    for t in enumerate_minimal(cfg.max_weight):
        cases = classify_cases(*t)
        rows.append({"lambda": list(t[0]), "mu": list(t[1]), "nu": list(t[2]), "facets": cases})
        lines.append(" | ".join(format_partition(p) for p in t) + f" : {cases}")
    _emit(rows, "\n".join(lines), cfg.format or "text", out)
    return EXIT_OK


COMMANDS = {
    "expand": cmd_expand,
    "verify": cmd_verify,
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "enumerate": cmd_enumerate,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
        cfg = _config(args)
        if cfg.use_cache:
            from .cache import attach

            attach(cfg.cache_dir)
        return COMMANDS[args.command](args, cfg, out)
    except (UsageError, ConfigError, ValueError) as exc:
        print(f"jacklr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
