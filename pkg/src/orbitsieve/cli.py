"""Command-line front end: loci, polynomials, verification reports, harmonics checks.

Five subcommands cover the library surface: ``locus`` enumerates a word family,
``poly`` prints a closed-form sieving polynomial, ``verify`` runs a fixed-point
check and prints its report, ``harmonics`` drives the quotient-ring pipeline, and
``suite`` runs the whole acceptance matrix.  Every subcommand renders to json, csv,
latex, or pretty text; identical invocations produce byte-identical output.

Exit codes: 0 all checks pass, 1 a verification found a genuine discrepancy,
2 usage or parameter error, 3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .errors import DomainError, InternalCheckError, ResourceBudgetError
from .harmonics import (
    DEFAULT_MAX_PAIRS,
    DEFAULT_MAX_POINTS,
    DEFAULT_MAX_VARS,
    associated_graded,
    buchberger,
    graded_frobenius,
    harmonics_json,
    hilbert_series,
    vanishing_ideal,
    verify_presentation,
)
from .loci import FAMILIES, Locus, enumerate_locus
from .qpoly import SparsePoly
from .sieving import (
    build_instance,
    normalize_family,
    oracle_csp_poly,
    sieving_polynomial,
    verify_bicsp,
    verify_csp,
)
from .suite import run_suite

FORMATS = ("json", "csv", "latex", "pretty")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise DomainError(message)


def _mu_arg(text: str) -> tuple[int, ...]:
    return tuple(int(part) for part in text.split(","))


def _build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=FORMATS, default="pretty")
    common.add_argument("--out", metavar="PATH", default=None)

    params = _Parser(add_help=False)
    params.add_argument("--n", type=int, default=None)
    params.add_argument("--k", type=int, default=None)
    params.add_argument("--mu", type=_mu_arg, default=None, help="comma-separated content, order preserved")
    params.add_argument("--a", type=int, default=None)

    budgets = _Parser(add_help=False)
    budgets.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    budgets.add_argument("--max-vars", type=int, default=DEFAULT_MAX_VARS)
    budgets.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)

    parser = _Parser(prog="orbitsieve", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_locus = sub.add_parser("locus", parents=[common, params], help="enumerate a word family")
    p_locus.add_argument("--family", required=True, choices=FAMILIES)
    p_locus.add_argument("--list", action="store_true", dest="list_words")

    p_poly = sub.add_parser("poly", parents=[common, params], help="print a closed-form sieving polynomial")
    p_poly.add_argument("--family", required=True, help="constructor id, e.g. wcomp-csp")

    p_verify = sub.add_parser("verify", parents=[common, params], help="run a sieving verification")
    p_verify.add_argument("--family", required=True, help="result id, e.g. word-bicsp-Y or thm-word-bicsp-Y")

    p_harm = sub.add_parser("harmonics", parents=[common, params, budgets], help="run the quotient-ring pipeline")
    p_harm.add_argument("--family", required=True, choices=FAMILIES)
    mode = p_harm.add_mutually_exclusive_group(required=True)
    mode.add_argument("--hilbert", action="store_true")
    mode.add_argument("--frobenius", action="store_true")
    mode.add_argument("--check-presentation", action="store_true", dest="check_presentation")
    mode.add_argument("--oracle", choices=("Sn", "Cn", "Hr"), default=None)
    p_harm.add_argument("--groebner", action="store_true", help="dump both bases (with --hilbert)")

    p_suite = sub.add_parser("suite", parents=[common], help="run the acceptance matrix")
    p_suite.add_argument("--max-n", type=int, default=None)
    p_suite.add_argument("--max-k", type=int, default=None)

    return parser


# -- rendering ---------------------------------------------------------------------------


def _csv_text(rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _latex_tabular(header: list[str], rows: list[list]) -> str:
    lines = ["\\begin{tabular}{" + "l" * len(header) + "}", "\\hline"]
    lines.append(" & ".join(header) + " \\\\")
    lines.append("\\hline")
    for row in rows:
        lines.append(" & ".join(str(cell) for cell in row) + " \\\\")
    lines += ["\\hline", "\\end{tabular}"]
    return "\n".join(lines)


def _poly_terms(p: SparsePoly) -> list[list[int]]:
    return [[eq, et, coeff] for (eq, et), coeff in p.sorted_terms()]


def _render_poly(data: dict, p: SparsePoly, fmt: str) -> str:
    if fmt == "pretty":
        return p.pretty()
    if fmt == "latex":
        return p.latex()
    if fmt == "csv":
        return _csv_text([["q_exponent", "t_exponent", "coefficient"]] + _poly_terms(p)).rstrip("\n")
    data = dict(data)
    data["pretty"] = p.pretty()
    data["terms"] = _poly_terms(p)
    return json.dumps(data, indent=2)


def _render_report(report, fmt: str) -> str:
    data = report.to_json_dict()
    if fmt == "json":
        return json.dumps(data, indent=2)
    rows = [[row["r"], "" if row["s"] is None else row["s"], row["fixed"], row["value"],
             "yes" if row["ok"] else "NO"] for row in data["rows"]]
    if fmt == "csv":
        return _csv_text([["r", "s", "fixed", "value", "ok"]] + rows).rstrip("\n")
    if fmt == "latex":
        return _latex_tabular(["r", "s", "fixed", "value", "ok"], rows)
    lines = ["verify " + data["family"] + "  " + _params_text(data["params"])]
    for side in ("q", "t"):
        if side in data["binding"]:
            b = data["binding"][side]
            extras = ", ".join(f"{key} {b[key]}" for key in ("step", "order", "perm") if key in b)
            lines.append(f"binding: {side} -> {b['action']} ({extras})")
    for note in data["notes"]:
        lines.append("note: " + note)
    lines.append("r s fixed value ok")
    for row in rows:
        lines.append(" ".join(str(cell) for cell in row))
    lines.append("all rows ok" if data["all_ok"] else "FAILED: some rows disagree")
    return "\n".join(lines)


def _params_text(params: dict) -> str:
    parts = []
    for key, value in params.items():
        if isinstance(value, list):
            value = ",".join(str(v) for v in value)
        parts.append(f"{key}={value}")
    return " ".join(parts)


# -- subcommands -------------------------------------------------------------------------


def _locus_from(ns) -> Locus:
    n = ns.n
    if ns.family == "tanisaki":
        if ns.mu is None:
            raise DomainError("tanisaki needs --mu")
        if n is None:
            n = sum(ns.mu)
    if ns.family == "springer" and n is None:
        raise DomainError("springer needs --n")
    if n is None:
        raise DomainError(f"family {ns.family!r} needs --n")
    return enumerate_locus(ns.family, n, ns.k, mu=ns.mu, a=ns.a)


def _cmd_locus(ns) -> tuple[int, str]:
    locus = _locus_from(ns)
    if locus.infeasible:
        print("warning: the parameter range admits no words", file=sys.stderr)
    data = locus.describe()
    data["size"] = locus.size
    data["infeasible"] = locus.infeasible
    if ns.list_words:
        data["words"] = [list(w) for w in locus.words]
    fmt = ns.output
    if fmt == "json":
        return 0, json.dumps(data, indent=2)
    if fmt == "csv":
        rows = [["field", "value"]] + [[key, _params_text({key: val}).split("=", 1)[1]]
                                       for key, val in data.items() if key != "words"]
        if ns.list_words:
            rows.append(["words", ";".join(" ".join(str(x) for x in w) for w in locus.words)])
        return 0, _csv_text(rows).rstrip("\n")
    if fmt == "latex":
        rows = [[key, _params_text({key: val}).split("=", 1)[1]] for key, val in data.items() if key != "words"]
        if ns.list_words:
            rows += [["word", " ".join(str(x) for x in w)] for w in locus.words]
        return 0, _latex_tabular(["field", "value"], rows)
    lines = ["locus " + _params_text(locus.describe()), f"size {locus.size}"]
    if ns.list_words:
        lines += [" ".join(str(x) for x in w) for w in locus.words]
    return 0, "\n".join(lines)


def _cmd_poly(ns) -> tuple[int, str]:
    family = normalize_family(ns.family)
    p = sieving_polynomial(family, n=ns.n, k=ns.k, mu=ns.mu, a=ns.a)
    params = {key: val for key, val in (("n", ns.n), ("k", ns.k), ("a", ns.a)) if val is not None}
    if ns.mu is not None:
        params["mu"] = list(ns.mu)
    return 0, _render_poly({"family": family, "params": params}, p, ns.output)


def _cmd_verify(ns) -> tuple[int, str]:
    inst = build_instance(ns.family, n=ns.n, k=ns.k, mu=ns.mu, a=ns.a)
    report = verify_bicsp(inst) if inst.bivariate else verify_csp(inst)
    return (0 if report.all_ok else 1), _render_report(report, ns.output)


def _cmd_harmonics(ns) -> tuple[int, str]:
    locus = _locus_from(ns)
    budgets = dict(max_points=ns.max_points, max_vars=ns.max_vars, max_pairs=ns.max_pairs)
    if ns.groebner and not ns.hilbert:
        raise DomainError("--groebner accompanies --hilbert")
    if ns.check_presentation:
        matches = verify_presentation(locus, **budgets)
        data = {"locus": locus.describe(), "presentation_matches": matches}
        code = 0 if matches else 1
        if ns.output == "json":
            return code, json.dumps(data, indent=2)
        text = "presentation matches" if matches else "FAILED: presentation does not match"
        if ns.output == "csv":
            return code, _csv_text([["field", "value"], ["presentation_matches", str(matches).lower()]]).rstrip("\n")
        if ns.output == "latex":
            return code, _latex_tabular(["field", "value"], [["presentation\\_matches", str(matches).lower()]])
        return code, text
    if ns.oracle:
        p = oracle_csp_poly(locus, ns.oracle, **budgets)
        return 0, _render_poly({"locus": locus.describe(), "group": ns.oracle}, p, ns.output)
    if ns.frobenius:
        frob = graded_frobenius(locus, **budgets)
        entries = [(list(lam), poly) for lam, poly in frob.items()]
        if ns.output == "json":
            data = {
                "locus": locus.describe(),
                "schur": [{"shape": lam, "pretty": poly.pretty(), "terms": _poly_terms(poly)}
                          for lam, poly in entries],
            }
            return 0, json.dumps(data, indent=2)
        rows = [[",".join(str(p) for p in lam), poly.pretty()] for lam, poly in entries]
        if ns.output == "csv":
            return 0, _csv_text([["shape", "coefficient"]] + rows).rstrip("\n")
        if ns.output == "latex":
            return 0, _latex_tabular(["shape", "coefficient"], rows)
        return 0, "\n".join(f"s[{shape}]: {coeff}" for shape, coeff in rows)
    gb_i = vanishing_ideal(locus, max_points=ns.max_points, max_vars=ns.max_vars)
    gb_t = buchberger(associated_graded(gb_i), max_pairs=ns.max_pairs)
    series = hilbert_series(gb_t.quotient_basis())
    if ns.groebner:
        if ns.output == "json":
            return 0, json.dumps(harmonics_json(locus, gb_i, gb_t), indent=2)
        lines = ["hilbert " + series.pretty()]
        lines += ["point-ideal generator: " + g.pretty() for g in gb_i.gens]
        lines += ["graded generator: " + g.pretty() for g in gb_t.gens]
        return 0, "\n".join(lines)
    return 0, _render_poly({"locus": locus.describe()}, series, ns.output)


def _cmd_suite(ns) -> tuple[int, str]:
    results = run_suite(max_n=ns.max_n, max_k=ns.max_k)
    all_ok = all(r.ok for r in results)
    code = 0 if all_ok else 1
    if ns.output == "json":
        data = {
            "criteria": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
            "all_ok": all_ok,
        }
        return code, json.dumps(data, indent=2)
    rows = [[r.name, "PASS" if r.ok else "FAIL", r.detail] for r in results]
    if ns.output == "csv":
        return code, _csv_text([["criterion", "status", "detail"]] + rows).rstrip("\n")
    if ns.output == "latex":
        return code, _latex_tabular(["criterion", "status", "detail"], rows)
    lines = [f"{status} {name}: {detail}" for name, status, detail in rows]
    lines.append("all criteria pass" if all_ok else "FAILED: some criteria did not pass")
    return code, "\n".join(lines)


_COMMANDS = {
    "locus": _cmd_locus,
    "poly": _cmd_poly,
    "verify": _cmd_verify,
    "harmonics": _cmd_harmonics,
    "suite": _cmd_suite,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        code, text = _COMMANDS[ns.command](ns)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InternalCheckError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    text = text + "\n"
    if ns.out is not None:
        with open(ns.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
