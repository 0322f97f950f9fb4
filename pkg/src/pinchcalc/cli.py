"""Command line front end and the verification harness.

Exit codes: 0 on success or a passing verification, 1 on a verification
violation, 2 on usage or domain errors.  --json swaps the human-readable
text for a single machine-readable report document.
"""

import argparse
import json
import sys

from .arith import ReducedFraction, cf_even_expand
from .criteria import (
    TheoremViolationError,
    counterexample_report,
    jvc_criterion,
    sign_sequence,
)
from .families import (
    FamilyId,
    closed_form_step,
    family_knot,
    verify_j_to_k,
    verify_k_independence,
)
from .pinch import TorusKnotParams, pinch_move, pinch_sequence
from .tangles import MatSL2, is_slice_family, mat_apply, surgery_result_knot

SCHEMA_VERSION = "1"

# Frozen expected pinch sequences for the small family members.  Kept as
# literal rows on purpose: the verify machinery diffs freshly computed
# sequences against data the engine cannot influence.
REFERENCE_ROWS_K = {
    1: [(4, 9), (2, 5), (0, 1)],
    2: [(8, 25), (6, 19), (4, 13), (2, 7), (0, 1)],
    3: [(12, 49), (10, 41), (8, 33), (6, 25), (4, 17), (2, 9), (0, 1)],
    4: [(16, 81), (14, 71), (12, 61), (10, 51), (8, 41), (6, 31), (4, 21),
        (2, 11), (0, 1)],
    5: [(20, 121), (18, 109), (16, 97), (14, 85), (12, 73), (10, 61), (8, 49),
        (6, 37), (4, 25), (2, 13), (0, 1)],
}
REFERENCE_ROWS_J = {
    2: [(8, 9), (6, 7), (4, 5), (2, 3), (0, 1)],
    3: [(12, 25), (10, 21), (8, 17), (6, 13), (4, 9), (2, 5), (0, 1)],
    4: [(16, 49), (14, 43), (12, 37), (10, 31), (8, 25), (6, 19), (4, 13),
        (2, 7), (0, 1)],
    5: [(20, 81), (18, 73), (16, 65), (14, 57), (12, 49), (10, 41), (8, 33),
        (6, 25), (4, 17), (2, 9), (0, 1)],
}


def fmt_fraction(f: ReducedFraction) -> str:
    """p/q with the sign shown on the denominator, e.g. 2/-9 for (-2, 9)."""
    if f.num < 0:
        return f"{-f.num}/{-f.den}"
    return f"{f.num}/{f.den}"


def fmt_cf(cf) -> str:
    return "[" + ",".join(str(a) for a in cf.coeffs) + "]"


def fmt_sign(s: int) -> str:
    return "+" if s > 0 else "-"


def fmt_knot(k: TorusKnotParams) -> str:
    return f"({k.p},{k.q})"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def step_payload(step) -> dict:
    return {
        "from": [step.source.p, step.source.q],
        "to": [step.target.p, step.target.q],
        "t": step.t,
        "h": step.h,
        "sign": fmt_sign(step.sign),
    }


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (inputs, results, text_lines, status)


def run_pinch_move(args):
    knot = TorusKnotParams(args.p, args.q)
    step = pinch_move(knot)
    results = step_payload(step)
    results["p_minus_2t"] = step.p_minus_2t
    results["q_minus_2h"] = step.q_minus_2h
    text = [
        f"{fmt_knot(step.source)} -> {fmt_knot(step.target)}  "
        f"t={step.t}  h={step.h}  sign={fmt_sign(step.sign)}"
    ]
    return {"p": args.p, "q": args.q}, results, text, "ok"


def run_pinch_seq(args):
    knot = TorusKnotParams(args.p, args.q)
    seq = pinch_sequence(knot)
    results = {
        "start": [knot.p, knot.q],
        "steps": [step_payload(s) for s in seq.steps],
        "pinch_number": seq.pinch_number,
    }
    text = []
    for s in seq.steps:
        text.append(
            f"{fmt_knot(s.source):>10} -> {fmt_knot(s.target):<10} "
            f"t={s.t:<6} h={s.h:<6} sign={fmt_sign(s.sign)}"
        )
    text.append(f"pinch number: {seq.pinch_number}")
    return {"p": args.p, "q": args.q}, results, text, "ok"


def run_pinch_number(args):
    knot = TorusKnotParams(args.p, args.q)
    n = pinch_sequence(knot).pinch_number
    results = {"start": [knot.p, knot.q], "pinch_number": n}
    return {"p": args.p, "q": args.q}, results, [str(n)], "ok"


def run_family(args):
    fid = FamilyId(args.family, args.n)
    knot = family_knot(fid)
    results = {
        "family": fid.family,
        "n": fid.n,
        "knot": [knot.p, knot.q],
        "trivial": fid.is_trivial,
    }
    suffix = " (unknot)" if fid.is_trivial else ""
    text = [f"{fid} = T{fmt_knot(knot)}{suffix}"]
    return {"family": args.family, "n": args.n}, results, text, "ok"


def run_surgery_knot(args):
    fid = FamilyId(args.family, args.n)
    bridge = surgery_result_knot(fid)
    cf = cf_even_expand(bridge.normalized)
    recognized = is_slice_family(cf)
    results = {
        "family": fid.family,
        "n": fid.n,
        "tangle1": [bridge.t1.num, bridge.t1.den],
        "tangle2": [bridge.t2.num, bridge.t2.den],
        "normalized": [bridge.normalized.num, bridge.normalized.den],
        "cf": list(cf.coeffs),
        "determinant": bridge.determinant(),
        "slice_recognized": recognized,
    }
    text = [
        f"{fid} bands leave the union of tangles "
        f"{fmt_fraction(bridge.t1)} and {fmt_fraction(bridge.t2)}",
        f"normalized fraction: {fmt_fraction(bridge.normalized)}",
        f"even continued fraction: {fmt_cf(cf)}",
        f"determinant: {bridge.determinant()}",
        f"slice family member: {_yesno(recognized)}",
    ]
    return {"family": args.family, "n": args.n}, results, text, "ok"


def run_tangle_cf(args):
    f = ReducedFraction(args.num, args.den)
    cf = cf_even_expand(f)
    results = {"fraction": [f.num, f.den], "cf": list(cf.coeffs)}
    return {"num": args.num, "den": args.den}, results, [fmt_cf(cf)], "ok"


def run_tangle_apply(args):
    m = MatSL2(args.a, args.b, args.c, args.d)
    f = ReducedFraction(args.num, args.den)
    image = mat_apply(m, f)
    results = {
        "matrix": [[m.a, m.b], [m.c, m.d]],
        "fraction": [f.num, f.den],
        "image": [image.num, image.den],
    }
    inputs = {
        "a": args.a, "b": args.b, "c": args.c, "d": args.d,
        "num": args.num, "den": args.den,
    }
    return inputs, results, [fmt_fraction(image)], "ok"


def run_jvc(args):
    knot = TorusKnotParams(args.p, args.q)
    verdict = jvc_criterion(knot)
    signs = sign_sequence(knot)
    results = {
        "knot": [knot.p, knot.q],
        "signs": [fmt_sign(s) for s in signs.signs],
        "negative_count": verdict.negative_count,
        "equals_pinch_minus_one": verdict.equals_pinch_minus_one,
    }
    text = [
        f"sign sequence: [{','.join(fmt_sign(s) for s in signs.signs)}]",
        f"negative count: {verdict.negative_count}",
        f"lower bound reaches pinch number - 1: "
        f"{_yesno(verdict.equals_pinch_minus_one)}",
    ]
    return {"p": args.p, "q": args.q}, results, text, "ok"


def run_report(args):
    fid = FamilyId(args.family, args.n)
    rep = counterexample_report(fid)
    results = {
        "family": fid.family,
        "n": fid.n,
        "knot": [rep.knot.p, rep.knot.q],
        "pinch_number": rep.pinch_number,
        "band_count": rep.band_count,
        "slice_fraction": [rep.slice_fraction.num, rep.slice_fraction.den],
        "slice_cf": list(rep.slice_cf.coeffs),
        "slice_recognized": rep.slice_recognized,
        "jvc_negative_count": rep.jvc_negative_count,
        "jvc_equals_pinch_minus_one": rep.jvc_equals_pinch_minus_one,
    }
    text = [
        f"{fid} = T{fmt_knot(rep.knot)}",
        f"pinch number: {rep.pinch_number}",
        f"band surgeries to a slice knot: {rep.band_count}",
        f"slice knot fraction: {fmt_fraction(rep.slice_fraction)}",
        f"even continued fraction: {fmt_cf(rep.slice_cf)}",
        f"slice family recognized: {_yesno(rep.slice_recognized)}",
        f"negative pinch signs: {rep.jvc_negative_count} "
        f"(equals pinch number - 1: {_yesno(rep.jvc_equals_pinch_minus_one)})",
    ]
    return {"family": args.family, "n": args.n}, results, text, "ok"


# ---------------------------------------------------------------------------
# verification harness


def check_reference_tables() -> dict:
    """Diff freshly computed pinch sequences against the frozen rows."""
    out = {}
    for family, rows in (("K", REFERENCE_ROWS_K), ("J", REFERENCE_ROWS_J)):
        matched = 0
        mismatches = []
        for n, expected in sorted(rows.items()):
            start = TorusKnotParams(*expected[0])
            chain = [(k.p, k.q) for k in pinch_sequence(start).knots()]
            if chain == expected:
                matched += 1
            else:
                mismatches.append({"n": n, "expected": expected, "got": chain})
        out[family] = {
            "matched": matched,
            "total": len(rows),
            "mismatches": mismatches,
        }
    return out


def check_pinch_numbers_and_closed_form(max_n: int) -> dict:
    """pinch number 2n plus step-by-step closed form agreement, both families."""
    checked = 0
    violations = []
    for family, lo in (("K", 1), ("J", 2)):
        for n in range(lo, max_n + 1):
            fid = FamilyId(family, n)
            seq = pinch_sequence(family_knot(fid))
            if seq.pinch_number != 2 * n:
                violations.append(
                    {"member": str(fid), "pinch_number": seq.pinch_number,
                     "expected": 2 * n}
                )
                continue
            knots = seq.knots()
            for k in range(2 * n + 1):
                formula = closed_form_step(n, fid.eps, k).canonical()
                if formula != knots[k].canonical():
                    violations.append(
                        {"member": str(fid), "k": k,
                         "closed_form": [formula.p, formula.q],
                         "engine": [knots[k].p, knots[k].q]}
                    )
            checked += 1
    return {"checked": checked, "violations": violations}


def check_j_to_k(max_n: int) -> dict:
    failures = [n for n in range(2, max_n + 1) if not verify_j_to_k(n)]
    return {"checked": max_n - 1, "violations": failures}


def check_k_independence(max_n: int) -> dict:
    return {"checked": max_n, "violations": verify_k_independence(max_n)}


def check_reports(max_n: int) -> dict:
    checked = 0
    violations = []
    for family, lo in (("K", 1), ("J", 2)):
        for n in range(lo, max_n + 1):
            try:
                counterexample_report(FamilyId(family, n))
                checked += 1
            except TheoremViolationError as exc:
                violations.append({"member": f"{family}_{n}", "error": str(exc)})
    return {"checked": checked, "violations": violations}


def verify_all(max_n: int, mode: str = "all") -> dict:
    """Run the requested verification sections and aggregate violations.

    Returns a full report document; status is "violation" when any section
    found one, "ok" otherwise.
    """
    if max_n < 2:
        raise ValueError(f"needs max_n >= 2, got {max_n}")
    results = {}
    if mode in ("tables", "all"):
        results["tables"] = check_reference_tables()
    if mode == "all":
        results["closed_form"] = check_pinch_numbers_and_closed_form(max_n)
    if mode in ("corollaries", "all"):
        results["j_to_k"] = check_j_to_k(max_n)
        results["k_independence"] = check_k_independence(max_n)
    if mode == "all":
        results["reports"] = check_reports(max_n)

    clean = True
    if "tables" in results:
        clean &= all(
            not results["tables"][fam]["mismatches"] for fam in ("K", "J")
        )
    for key in ("closed_form", "j_to_k", "k_independence", "reports"):
        if key in results:
            clean &= not results[key]["violations"]
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "inputs": {"mode": mode, "max_n": max_n},
        "results": results,
        "status": "ok" if clean else "violation",
    }


def verify_text(doc: dict) -> list[str]:
    results = doc["results"]
    max_n = doc["inputs"]["max_n"]
    text = []
    if "tables" in results:
        tk, tj = results["tables"]["K"], results["tables"]["J"]
        text.append(
            f"K: {tk['matched']}/{tk['total']} rows match, "
            f"J: {tj['matched']}/{tj['total']} rows match"
        )
    if "closed_form" in results:
        sec = results["closed_form"]
        text.append(
            f"pinch numbers and closed form: {sec['checked']} sequences checked, "
            f"{len(sec['violations'])} violations (n <= {max_n})"
        )
    if "j_to_k" in results:
        sec = results["j_to_k"]
        text.append(
            f"four pinches J_n -> K_(n-2): {sec['checked']} checked, "
            f"{len(sec['violations'])} violations"
        )
    if "k_independence" in results:
        sec = results["k_independence"]
        text.append(
            f"K sequences avoid other K members: m, n <= {sec['checked']}, "
            f"{len(sec['violations'])} collisions"
        )
    if "reports" in results:
        sec = results["reports"]
        text.append(
            f"counterexample reports: {sec['checked']} certified, "
            f"{len(sec['violations'])} violations"
        )
    text.append(f"status: {doc['status']}")
    return text


def run_verify(args):
    doc = verify_all(args.max_n, args.mode)
    return doc["inputs"], doc["results"], verify_text(doc), doc["status"]


# ---------------------------------------------------------------------------
# parser and dispatch


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS,
        help="emit a single machine-readable report document",
    )
    common.add_argument(
        "--quiet", action="store_true", default=argparse.SUPPRESS,
        help="suppress stdout; rely on the exit code",
    )

    parser = argparse.ArgumentParser(
        prog="pinchcalc",
        description="Pinch move calculus on torus knots.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def knot_args(p):
        p.add_argument("p", type=int)
        p.add_argument("q", type=int)

    def family_args(p):
        p.add_argument("family", choices=["K", "J"])
        p.add_argument("n", type=int)

    knot_args(sub.add_parser("pinch-move", parents=[common],
                             help="one pinch move with witnesses and sign"))
    knot_args(sub.add_parser("pinch-seq", parents=[common],
                             help="the full pinch sequence down to the unknot"))
    knot_args(sub.add_parser("pinch-number", parents=[common],
                             help="number of pinch moves to the unknot"))
    family_args(sub.add_parser("family", parents=[common],
                               help="the torus knot K_n or J_n"))
    family_args(sub.add_parser("surgery-knot", parents=[common],
                               help="two-bridge knot left by the band surgeries"))

    tangle = sub.add_parser("tangle", parents=[common],
                            help="rational tangle fraction operations")
    tsub = tangle.add_subparsers(dest="tangle_op", required=True)
    tcf = tsub.add_parser("cf", parents=[common],
                          help="all-even continued fraction of num/den")
    tcf.add_argument("num", type=int)
    tcf.add_argument("den", type=int)
    tap = tsub.add_parser("apply", parents=[common],
                          help="apply [[a,b],[c,d]] to the slope num/den")
    for name in ("a", "b", "c", "d"):
        tap.add_argument(name, type=int)
    tap.add_argument("num", type=int)
    tap.add_argument("den", type=int)

    knot_args(sub.add_parser("jvc", parents=[common],
                             help="sign sequence and the lower-bound criterion"))
    family_args(sub.add_parser("report", parents=[common],
                               help="full counterexample certificate"))

    ver = sub.add_parser("verify", parents=[common],
                         help="recompute and diff the published results")
    ver.add_argument("mode", choices=["tables", "corollaries", "all"])
    ver.add_argument("--max-n", type=int, default=50, dest="max_n")
    return parser


HANDLERS = {
    "pinch-move": run_pinch_move,
    "pinch-seq": run_pinch_seq,
    "pinch-number": run_pinch_number,
    "family": run_family,
    "surgery-knot": run_surgery_knot,
    "jvc": run_jvc,
    "report": run_report,
    "verify": run_verify,
}


def _document(command, inputs, results, status):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "status": status,
    }


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)

    command = args.command
    if command == "tangle":
        command = f"tangle {args.tangle_op}"
        handler = run_tangle_cf if args.tangle_op == "cf" else run_tangle_apply
    else:
        handler = HANDLERS[command]

    try:
        inputs, results, text, status = handler(args)
    except TheoremViolationError as exc:
        if not quiet:
            if as_json:
                doc = _document(command, {}, {"violation": str(exc)}, "violation")
                print(json.dumps(doc, separators=(",", ":")))
            print(f"pinchcalc: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError) as exc:
        if not quiet:
            if as_json:
                doc = _document(command, {}, {"error": str(exc)}, "error")
                print(json.dumps(doc, separators=(",", ":")))
            print(f"pinchcalc: {exc}", file=sys.stderr)
        return 2

    if not quiet:
        if as_json:
            doc = _document(command, inputs, results, status)
            print(json.dumps(doc, separators=(",", ":")))
        else:
            for line in text:
                print(line)
    return 0 if status == "ok" else 1


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))


if __name__ == "__main__":
    main()
