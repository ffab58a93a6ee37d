"""Command-line entry point.

Exit status: 0 on success, 1 on a domain error (caps, budgets, invalid
inputs), 2 on a malformed flag or group spec.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from importlib.resources import files
from pathlib import Path

from . import __version__
from .errors import HKError, ParseError
from .graded import hyperkahler_unit_verdict
from .groupspec import parse_group_spec
from .hodge import (
    BUILTIN_DIAMONDS,
    GUAN_MODES,
    HodgeDiamond,
    guan_b2_admissible,
    prymian_pipeline,
    salamon_check,
)
from .orbifold import (
    IDENTIFICATION_NOTE,
    K3_EULER,
    SeriesIncomplete,
    category_euler_series,
    euler_from_histogram,
    goettsche_coefficients,
)
from .permgroup import (
    DEFAULT_ELEMENT_CAP,
    DEFAULT_SUBSET_BUDGET,
    commuting_pair_orbit_histogram,
    homogeneity_profile,
    subgroup_scan,
)

AGL15_NOTE = (
    "order-20 group AGL(1,5) = F_5 x| F_5^*; the classification entry written "
    "'F_5^*' must mean this group, since F_5^* alone has order 4 and fixes a point"
)


def load_report_schema():
    """The JSON schema every ``--json`` report conforms to."""
    return json.loads(files("hkcat").joinpath("schemas/report.schema.json").read_text(encoding="utf-8"))


def _fraction(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _group_json(spec_text, group):
    return {
        "spec": spec_text,
        "degree": group.degree,
        "order": group.cached_order,
        "generators": [str(g) for g in group.generators],
    }


def _resolve(args):
    spec = parse_group_spec(args.group)
    return str(spec), spec.resolve()


def _profile_json(profile):
    return [{"k": k, "orbit_count": c} for k, c in profile.counts]


# -- subcommands: each returns (json_report, text_lines) ----------------------

def cmd_homog(args):
    label, group = _resolve(args)
    profile = homogeneity_profile(group, args.subset_budget)
    report = {
        "command": "homog",
        "group": _group_json(label, group),
        "profile": _profile_json(profile),
        "all_transitive": profile.all_transitive,
        "failing_k": profile.failing_ks,
    }
    lines = [f"group {label} (degree {group.degree})"]
    lines += [f"  k={k:<3d} orbits={c}" for k, c in profile.counts]
    lines.append(f"transitive on all k-subsets: {'yes' if profile.all_transitive else 'no'}")
    return report, lines


def cmd_unit(args):
    label, group = _resolve(args)
    verdict = hyperkahler_unit_verdict(group, args.subset_budget)
    report = {"command": "unit", "group": _group_json(label, group), **verdict.to_json()}
    dims = ", ".join(f"{d}:{v}" for d, v in verdict.invariant_dims.items())
    lines = [
        f"group {label} (degree {group.degree})",
        f"invariant dims (degree:dim): {dims}",
        f"hyper-Kaehler unit C[t]/t^{group.degree + 1}: {'yes' if verdict.is_hyper_kahler else 'no'}",
    ]
    if verdict.offending_degrees:
        lines.append("offending degrees: " + ", ".join(f"{d} (dim {v})" for d, v in verdict.offending_degrees))
    return report, lines


def cmd_scan(args):
    entries = subgroup_scan(args.n, args.subset_budget)
    classes = []
    lines = [f"subgroups of S{args.n} up to conjugacy: {len(entries)}"]
    for e in entries:
        note = AGL15_NOTE if (args.n == 5 and e.order == 20 and e.all_transitive) else None
        classes.append({
            "order": e.order,
            "generators": [str(g) for g in e.generators],
            "profile": _profile_json(e.profile),
            "all_transitive": e.all_transitive,
            "note": note,
        })
        mark = "PASS" if e.all_transitive else "    "
        text = f"  {mark} order {e.order:<4d} gens {', '.join(str(g) for g in e.generators)}"
        if note:
            text += f"  [note: {note}]"
        lines.append(text)
    passing = [c for c in classes if c["all_transitive"]]
    lines.append(f"passing classes: {len(passing)} (orders {', '.join(str(c['order']) for c in passing)})")
    report = {"command": "scan", "n": args.n, "classes": classes, "passing_count": len(passing)}
    return report, lines


def _load_diamond(source):
    if source in BUILTIN_DIAMONDS:
        return BUILTIN_DIAMONDS[source]
    text = Path(source).read_text(encoding="utf-8")
    if text.lstrip().startswith("{"):
        return HodgeDiamond.from_json(text)
    return HodgeDiamond.from_text(text)


def cmd_prymian(args):
    base = _load_diamond(args.diamond)
    run = prymian_pipeline(base, args.points, args.exceptional)
    coh = list(run.hh_cohomology.values)
    guan = {
        str(b2): {mode: guan_b2_admissible(b2, mode) for mode in GUAN_MODES} for b2 in (run.betti[2], 23)
    }
    report = {
        "command": "prymian",
        "singular_diamond": base.to_json(),
        "resolved_diamond": run.resolved.to_json(),
        "hh_homology_resolved": run.hh_resolved.to_json(),
        "hh_homology_category": run.hh_category.to_json(),
        "betti": list(run.betti),
        "salamon_lhs": _fraction(run.salamon.lhs),
        "salamon_rhs": _fraction(run.salamon.rhs),
        "guan": guan,
        "note": "guan bound: paper_literal is b2 < 8 or b2 = 23; inclusive is b2 <= 8 or b2 = 23",
        "hh": coh,
        "salamon": run.salamon.holds,
        "guan_b2_16": guan_b2_admissible(16),
    }
    lines = [
        f"singular fourfold ({args.diamond}):",
        base.pretty(),
        f"after blowing up {args.points} points:",
        run.resolved.pretty(),
        "HH_* of the resolution: " + _hh_text(run.hh_resolved),
        f"HH_* after removing {args.exceptional} exceptional objects: " + _hh_text(run.hh_category),
        "HH^* (Serre shift by 4): " + " ".join(map(str, coh)),
        f"Salamon relation (r=2): {_fraction(run.salamon.lhs)} vs {_fraction(run.salamon.rhs)} -> "
        + ("holds" if run.salamon.holds else "fails"),
        "Betti numbers of a hyper-Kaehler model: " + " ".join(map(str, run.betti)),
    ]
    for b2, modes in guan.items():
        lines.append(f"b2 = {b2} admissible: " + ", ".join(f"{m}={v}" for m, v in modes.items()))
    return report, lines


def _hh_text(hh):
    return ", ".join(f"hh_{k}={v}" for k, v in hh.nonzero().items())


def cmd_salamon(args):
    try:
        hh = [int(tok) for tok in args.hh.replace(" ", "").split(",") if tok]
    except ValueError:
        raise _FlagError(f"--hh expects comma-separated integers, got {args.hh!r}") from None
    res = salamon_check(hh, args.r)
    report = {
        "command": "salamon",
        "hh": hh,
        "r": args.r,
        "lhs": _fraction(res.lhs),
        "rhs": _fraction(res.rhs),
        "holds": res.holds,
    }
    lines = [f"lhs = {_fraction(res.lhs)}", f"rhs = {_fraction(res.rhs)}", "holds" if res.holds else "fails"]
    return report, lines


def cmd_orbifold(args):
    label, group = _resolve(args)
    hist = commuting_pair_orbit_histogram(group, args.cap)
    value = euler_from_histogram(hist, group.order(args.cap), args.e_base)
    report = {
        "command": "orbifold",
        "group": _group_json(label, group),
        "e_base": args.e_base,
        "histogram": {str(m): c for m, c in hist.items()},
        "commuting_pairs": sum(hist.values()),
        "euler": str(value),
        "note": IDENTIFICATION_NOTE,
    }
    lines = [
        f"group {label} (degree {group.degree}, order {group.cached_order})",
        "commuting pairs by orbit count: " + ", ".join(f"{m}:{c}" for m, c in hist.items()),
        f"orbifold Euler characteristic (e_base={args.e_base}): {value}",
        f"note: {IDENTIFICATION_NOTE}",
    ]
    return report, lines


def cmd_series(args):
    try:
        series = category_euler_series(args.family, args.max_n, args.e_base, args.cap)
        incomplete = None
    except SeriesIncomplete as exc:
        series, incomplete = exc.partial, str(exc)
    entries = series.to_json()
    oracle_note = None
    if args.oracle:
        if args.family == "Sn":
            oracle = goettsche_coefficients(args.max_n, args.e_base)
            for entry, e in zip(entries, series.entries):
                entry["oracle"] = str(oracle[e.n])
                entry["oracle_match"] = oracle[e.n] == e.euler
        else:
            oracle_note = f"no independent series oracle for family {args.family}"
            for entry in entries:
                entry["oracle"] = None
                entry["oracle_match"] = None
    report = {
        "command": "series",
        "family": args.family,
        "e_base": args.e_base,
        "max_n": args.max_n,
        "entries": entries,
        "complete": incomplete is None,
        "note": IDENTIFICATION_NOTE,
    }
    if oracle_note:
        report["oracle_note"] = oracle_note
    if incomplete:
        report["error"] = incomplete
    if args.out:
        Path(args.out).write_text(series.to_csv(), encoding="utf-8")
    lines = []
    for entry in entries:
        text = f"  n={entry['n']:<3d} {entry['label']:<12s} {entry['euler']}"
        if entry.get("oracle_match") is not None:
            text += "  oracle " + ("match" if entry["oracle_match"] else f"MISMATCH ({entry['oracle']})")
        lines.append(text)
    if oracle_note:
        lines.append(oracle_note)
    if incomplete:
        lines.append(f"stopped: {incomplete}")
    lines.append(f"note: {IDENTIFICATION_NOTE}")
    if incomplete:
        raise _Partial(report, lines, incomplete)
    return report, lines


class _FlagError(Exception):
    pass


class _Partial(Exception):
    def __init__(self, report, lines, message):
        super().__init__(message)
        self.report = report
        self.lines = lines


# -- argument parsing --------------------------------------------------------

def _int_at_least(lower):
    def convert(text):
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
        if value < lower:
            raise argparse.ArgumentTypeError(f"expected an integer >= {lower}, got {value}")
        return value
    return convert


_positive_int = _int_at_least(1)
_nonneg_int = _int_at_least(0)


def _add_global_flags(parser, suppress):
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=default(False), help="machine-readable output")
    parser.add_argument("--cap", type=_positive_int, default=default(DEFAULT_ELEMENT_CAP),
                        help="maximum group order to enumerate")
    parser.add_argument("--subset-budget", type=_positive_int, default=default(DEFAULT_SUBSET_BUDGET),
                        help="maximum number of k-subsets per orbit computation")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hkcat",
        description="Homogeneity, homological-unit, Hochschild and orbifold Euler computations.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help):
        p = sub.add_parser(name, help=help, description=help)
        _add_global_flags(p, suppress=True)
        p.set_defaults(func=func)
        return p

    p = add("homog", cmd_homog, "orbit counts on k-subsets and the all-k transitivity verdict")
    p.add_argument("--group", required=True, metavar="SPEC")
    p = add("unit", cmd_unit, "invariant dimensions of H^*(O_S)^{(x)n} and the hyper-Kaehler unit verdict")
    p.add_argument("--group", required=True, metavar="SPEC")
    p = add("scan", cmd_scan, "all subgroups of S_n (n <= 5) up to conjugacy with their verdicts")
    p.add_argument("--n", required=True, type=_positive_int)
    p = add("prymian", cmd_prymian, "Hodge diamond to Hochschild cohomology pipeline for the resolved Prymian")
    p.add_argument("--diamond", default="prymian_P0",
                   help="built-in name (%s) or a file in pyramid/JSON format" % ", ".join(BUILTIN_DIAMONDS))
    p.add_argument("--points", type=_nonneg_int, default=28, help="number of C^4/{+-1} points to blow up")
    p.add_argument("--exceptional", type=_nonneg_int, default=56, help="number of exceptional objects split off")
    p = add("salamon", cmd_salamon, "evaluate the Salamon relation on Hochschild cohomology numbers")
    p.add_argument("--hh", required=True, metavar="LIST", help="comma-separated hh^0,hh^1,...")
    p.add_argument("--r", required=True, type=_positive_int)
    p = add("orbifold", cmd_orbifold, "orbifold Euler characteristic of (S^n, G)")
    p.add_argument("--group", required=True, metavar="SPEC")
    p.add_argument("--e-base", type=int, default=K3_EULER)
    p = add("series", cmd_series, "orbifold Euler characteristics along a family of groups")
    p.add_argument("--family", required=True, choices=("Sn", "An", "sporadic"))
    p.add_argument("--max-n", required=True, type=_nonneg_int)
    p.add_argument("--e-base", type=int, default=K3_EULER)
    p.add_argument("--oracle", action="store_true", help="compare with the product-formula coefficients")
    p.add_argument("--out", metavar="FILE", help="also write the series as CSV")
    return parser


def _emit(report, lines, as_json, stream):
    if as_json:
        stream.write(json.dumps(report, indent=2) + "\n")
    else:
        stream.write("\n".join(lines) + "\n")


def main(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, lines = args.func(args)
    except _Partial as exc:
        _emit(exc.report, exc.lines, args.json, stdout)
        return 1
    except _FlagError as exc:
        return _fail(args, "flag_error", str(exc), 2, stdout, stderr)
    except ParseError as exc:
        details = {"offset": exc.offset, "expected": list(exc.expected)}
        return _fail(args, exc.code, str(exc), exc.exit_code, stdout, stderr, details)
    except HKError as exc:
        return _fail(args, exc.code, str(exc), exc.exit_code, stdout, stderr)
    except OSError as exc:
        return _fail(args, "io_error", str(exc), 1, stdout, stderr)
    _emit(report, lines, args.json, stdout)
    return 0


def _fail(args, code, message, status, stdout, stderr, details=None):
    if args.json:
        error = {"code": code, "message": message}
        if details:
            error.update(details)
        stdout.write(json.dumps({"command": args.command, "error": error}, indent=2) + "\n")
    else:
        stderr.write(f"hkcat {args.command}: {message}\n")
    return status


if __name__ == "__main__":
    sys.exit(main())
