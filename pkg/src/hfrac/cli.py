"""Command-line frontend.

Subcommands: alpha | cover | fracchrom | minrank | hfrac | theta-circulant
| theta-lp | certify | verify | generate | reproduce.  Graphs are accepted
as expressions (``cycle:5``, ``strong(cycle:5,cycle:5)``, ``file:PATH``)
anywhere a graph is expected.  ``--json`` switches to canonical JSON that
is byte-identical across identical invocations.

Exit codes: 0 success, 2 verification failure, 3 budget exhausted (a
certified interval is still emitted), 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .budget import BUDGET_ENV_VAR, Budget
from .errors import (
    BudgetExhausted,
    DimensionMismatch,
    GraphParseError,
    GuardExceeded,
    PreconditionError,
    SearchCutoff,
    UnsupportedFamily,
    VerificationError,
)
from .fraccover import FractionalCover, cover_violation, fractional_clique_cover
from .graphs import DEFAULT_MAX_VERTICES, Graph, format_graph, generate, is_independent_set
from .independence import CliqueCover, alpha, clique_cover_leq, clique_cover_violation
from .minrank import FitCertificate, alon_certificate, cover_certificate, johnson_certificate, minrank_exact
from .report import BoundReport
from .reps import (
    DRep,
    PairRep,
    RankRRep,
    SubspaceRep,
    cycle_drep,
    drep_violation,
    hfrac_upper_search,
    pairrep_violation,
    rankrrep_violation,
    subspacerep_violation,
    tensor_dreps,
)
from .reproduce import run_claims
from .serialize import canonical_json, frac_str
from .theta import MatrixRep, OrthoRep, matrixrep_violation, orthorep_violation, theta_circulant, theta_johnson_lp

EXIT_OK = 0
EXIT_VERIFY_FAIL = 2
EXIT_BUDGET = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); usage errors are 64 here
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hfrac", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="canonical JSON output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--budget-ms", type=float, default=None,
                        help=f"search budget in ms (default: ${BUDGET_ENV_VAR})")
    common.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                        help="vertex-count guard for generated graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", parents=[common], help="exact independence number")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("cover", parents=[common], help="partition into at most k cliques")
    p.add_argument("--graph", required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("fracchrom", parents=[common], help="exact fractional clique cover value")
    p.add_argument("--graph", required=True)

    p = sub.add_parser("minrank", parents=[common], help="minimum fit-matrix rank over GF(p)")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)

    p = sub.add_parser("hfrac", parents=[common], help="certified interval for the fractional minrank bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--dmax", type=int, default=8)

    p = sub.add_parser("theta-circulant", parents=[common], help="closed-form theta for circulants")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connection", default="1", help="comma-separated offsets (default 1)")

    p = sub.add_parser("theta-lp", parents=[common], help="exact theta of the (p+1)-subset graph")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("certify", parents=[common], help="construct a certificate file")
    p.add_argument("--kind", required=True, choices=["johnson", "alon", "cover", "cycle-drep"])
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--graph")
    p.add_argument("--variant", choices=["P", "Q", "R"])
    p.add_argument("--modulus", type=int)
    p.add_argument("--power", type=int, default=1, help="tensor power (cycle-drep only)")
    p.add_argument("--out", help="write the certificate here instead of stdout")

    p = sub.add_parser("verify", parents=[common], help="re-verify a certificate file")
    p.add_argument("--cert", required=True)
    p.add_argument("--graph", help="overrides the expression embedded in the certificate")

    p = sub.add_parser("generate", parents=[common], help="emit a graph in text format")
    p.add_argument("--graph", required=True)
    p.add_argument("--out")

    p = sub.add_parser("reproduce", parents=[common], help="run the full claim suite")
    p.add_argument("--quick", action="store_true", help="skip the slowest claim")

    return parser


def _budget(args) -> Budget:
    if args.budget_ms is not None:
        return Budget(ms=args.budget_ms)
    return Budget.from_env()


def _graph(args) -> Graph:
    return generate(args.graph, max_vertices=args.max_vertices)


def _emit(args, human: str, payload: dict) -> None:
    print(canonical_json(payload) if args.json else human)


def _report_payload(report: BoundReport) -> dict:
    return report.to_json()


def _cmd_alpha(args) -> int:
    g = _graph(args)
    try:
        a, witness = alpha(g, _budget(args))
        report = BoundReport("alpha", args.graph, Fraction(a), Fraction(a),
                             ({"kind": "independent_set", "vertices": list(witness)},))
        _emit(args, str(a), _report_payload(report))
        return EXIT_OK
    except SearchCutoff as cut:
        report = BoundReport("alpha", args.graph, Fraction(cut.lower), Fraction(cut.upper),
                             ({"kind": "independent_set", "vertices": list(cut.witness or ())},))
        _emit(args, f"[{cut.lower}, {cut.upper}] (budget exhausted)", _report_payload(report))
        return EXIT_BUDGET


def _cmd_cover(args) -> int:
    g = _graph(args)
    try:
        cover = clique_cover_leq(g, args.k, _budget(args))
    except BudgetExhausted:
        _emit(args, "budget exhausted before the search resolved", {"status": "budget-exhausted"})
        return EXIT_BUDGET
    if cover is None:
        _emit(args, f"no partition into {args.k} cliques exists", {"cover": None})
        return EXIT_OK
    _emit(args, "\n".join(" ".join(map(str, cls)) for cls in cover.classes),
          cover.to_json(args.graph))
    return EXIT_OK


def _cmd_fracchrom(args) -> int:
    g = _graph(args)
    try:
        cover = fractional_clique_cover(g, _budget(args))
    except (BudgetExhausted, SearchCutoff):
        _emit(args, "budget exhausted before the LP converged", {"status": "budget-exhausted"})
        return EXIT_BUDGET
    _emit(args, frac_str(cover.value), cover.to_json(args.graph))
    return EXIT_OK


def _cmd_minrank(args) -> int:
    g = _graph(args)
    res = minrank_exact(g, args.p, _budget(args))
    witnesses: list = [res.certificate]
    if not res.exact and res.alpha_witness is not None:
        witnesses.append({"kind": "independent_set", "vertices": list(res.alpha_witness)})
    report = BoundReport(f"minrank[gf({args.p})]", args.graph,
                         Fraction(res.lower), Fraction(res.upper), tuple(witnesses))
    if res.exact:
        _emit(args, str(res.upper), _report_payload(report))
        return EXIT_OK
    _emit(args, f"[{res.lower}, {res.upper}] (search budget exhausted)", _report_payload(report))
    return EXIT_BUDGET


def _cmd_hfrac(args) -> int:
    g = _graph(args)
    report = hfrac_upper_search(g, args.p, dmax=args.dmax, budget=_budget(args))
    human = f"[{frac_str(report.lower)}, {frac_str(report.upper)}]"
    _emit(args, human, _report_payload(report))
    return EXIT_OK


def _cmd_theta_circulant(args) -> int:
    try:
        connection = {int(tok) for tok in args.connection.split(",") if tok.strip()}
    except ValueError as exc:
        raise UsageError(f"bad connection set: {args.connection!r}") from exc
    value = theta_circulant(args.n, connection)
    _emit(args, repr(value), {"param": "theta", "graph": f"circulant:{args.n}",
                              "connection": sorted(connection), "value": value})
    return EXIT_OK


def _cmd_theta_lp(args) -> int:
    value = theta_johnson_lp(args.p, args.n)
    _emit(args, frac_str(value),
          {"param": "theta", "graph": f"johnson:{args.p},{args.n}", "value": frac_str(value)})
    return EXIT_OK


def _cmd_certify(args) -> int:
    kind = args.kind
    if kind == "johnson":
        if args.p is None or args.n is None:
            raise UsageError("certify johnson needs --p and --n")
        cert = johnson_certificate(args.p, args.n)
        payload = cert.to_json(f"johnson:{args.p},{args.n}")
    elif kind == "alon":
        if args.variant is None or args.p is None or args.q is None or args.n is None:
            raise UsageError("certify alon needs --variant, --p, --q, --n")
        cert, _rep = alon_certificate(args.variant, args.p, args.q, args.n, args.modulus)
        base = f"alon:{args.p},{args.q},{args.n}"
        expr = base if args.variant == "P" else f"complement({base})"
        payload = cert.to_json(expr)
    elif kind == "cover":
        if args.graph is None or args.k is None or args.p is None:
            raise UsageError("certify cover needs --graph, --k, --p")
        g = _graph(args)
        cover = clique_cover_leq(g, args.k, _budget(args))
        if cover is None:
            print(f"no partition into {args.k} cliques exists", file=sys.stderr)
            return EXIT_VERIFY_FAIL
        payload = cover_certificate(g, cover, args.p).to_json(args.graph)
    else:  # cycle-drep
        if args.k is None or args.p is None:
            raise UsageError("certify cycle-drep needs --k and --p")
        rep = cycle_drep(args.k, args.p)
        expr = f"cycle:{2 * args.k + 1}"
        out = rep
        for _ in range(args.power - 1):
            out = tensor_dreps(out, rep)
            expr = f"strong({expr},cycle:{2 * args.k + 1})"
        payload = out.to_json(expr)

    text = canonical_json(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        if not args.json:
            print(f"wrote {args.out}")
    else:
        print(text)
    return EXIT_OK


def _verify_witness(obj: dict, g: Graph, report: dict | None = None) -> str | None:
    """None if the witness verifies (and attains its report end), else why not."""
    kind = obj.get("kind")
    if kind == "fit":
        cert = FitCertificate.from_json(obj)
        if not cert.check(g):
            return "fit certificate failed verification"
        if report is not None and Fraction(report["upper"]) < cert.claimed_rank:
            return "fit certificate does not attain the reported upper bound"
        return None
    if kind == "drep":
        rep = DRep.from_json(obj)
        failure = drep_violation(g, rep)
        if failure:
            return failure
        if report is not None and rep.ratio() != Fraction(report["upper"]):
            return "certificate ratio differs from the reported upper bound"
        return None
    if kind == "pairrep":
        return pairrep_violation(g, PairRep.from_json(obj))
    if kind == "rankrrep":
        return rankrrep_violation(g, RankRRep.from_json(obj))
    if kind == "subspacerep":
        return subspacerep_violation(g, SubspaceRep.from_json(obj))
    if kind == "fraccover":
        cover = FractionalCover.from_json(obj)
        return cover_violation(g, cover)
    if kind == "cliquecover":
        return clique_cover_violation(g, CliqueCover.from_json(obj))
    if kind == "orthorep":
        return orthorep_violation(g, OrthoRep.from_json(obj), obj.get("tol", 1e-9))
    if kind == "matrixrep":
        return matrixrep_violation(g, MatrixRep.from_json(obj), obj.get("tol", 1e-9))
    if kind == "independent_set":
        verts = obj["vertices"]
        if not is_independent_set(g, verts):
            return "vertex set is not independent"
        if report is not None and Fraction(report["lower"]) > len(verts):
            return "independent set does not attain the reported lower bound"
        return None
    return f"unknown certificate kind {kind!r}"


def _cmd_verify(args) -> int:
    import json

    with open(args.cert) as fh:
        obj = json.load(fh)
    expr = args.graph or obj.get("graph")
    if not expr:
        raise UsageError("certificate has no embedded graph; pass --graph")
    g = generate(expr, max_vertices=args.max_vertices)
    if obj.get("kind") is None and "witness_refs" in obj:  # a bound report
        failures = [f for w in obj["witness_refs"] if (f := _verify_witness(w, g, obj))]
        ok = not failures and Fraction(obj["lower"]) <= Fraction(obj["upper"])
        failure = failures[0] if failures else None
    else:
        failure = _verify_witness(obj, g)
        ok = failure is None
    if ok:
        _emit(args, "OK", {"verified": True, "graph": expr})
        return EXIT_OK
    _emit(args, f"FAIL: {failure}", {"verified": False, "graph": expr, "reason": failure})
    return EXIT_VERIFY_FAIL


def _cmd_generate(args) -> int:
    g = _graph(args)
    text = format_graph(g)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        if not args.json:
            print(f"wrote {args.out}")
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    results = run_claims(quick=args.quick, seed=args.seed)
    all_pass = all(r.passed for r in results)
    if args.json:
        print(canonical_json({"all_pass": all_pass, "claims": [r.to_json() for r in results]}))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} claims pass")
    return EXIT_OK if all_pass else EXIT_VERIFY_FAIL


_HANDLERS = {
    "alpha": _cmd_alpha,
    "cover": _cmd_cover,
    "fracchrom": _cmd_fracchrom,
    "minrank": _cmd_minrank,
    "hfrac": _cmd_hfrac,
    "theta-circulant": _cmd_theta_circulant,
    "theta-lp": _cmd_theta_lp,
    "certify": _cmd_certify,
    "verify": _cmd_verify,
    "generate": _cmd_generate,
    "reproduce": _cmd_reproduce,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DimensionMismatch, GraphParseError, GuardExceeded, PreconditionError, UnsupportedFamily) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    except FileNotFoundError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
