"""Command-line interface.

Deterministic text output by default; ``--json`` switches every subcommand
to a stable JSON schema (``"schema": 1``). Exit codes: 0 success, 1
verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .hopf import HElem, coproduct, parse_helem, print_helem, print_tensor
from .diamond import diamond, sigma
from .linalg import (
    basis_forests,
    basis_matrix,
    check_mod2_invertible,
    decompose,
    sigma_kernel,
)
from .relations import verify_fmn
from .rtm import rtm_apply
from .selfcheck import run_selfcheck
from .trees import ForestSyntaxError, enumerate_forests, enumerate_trees
from .words import PolySyntaxError, parse_poly, print_poly


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treealg",
        description="Exact computations with rooted trees, their coproduct, "
        "their word-algebra action, and the two-ladder relation family.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trees", help="enumerate rooted trees of a degree")
    p.add_argument("degree", type=int)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("forests", help="enumerate rooted forests of a degree")
    p.add_argument("degree", type=int)
    p.add_argument("--count-only", action="store_true")

    p = sub.add_parser("coproduct", help="tensor expansion of a forest combination")
    p.add_argument("element")

    p = sub.add_parser("apply", help="act with a forest combination on a polynomial")
    p.add_argument("element")
    p.add_argument("poly")

    p = sub.add_parser("sigma", help="polynomial value of a forest combination")
    p.add_argument("element")

    p = sub.add_parser("diamond", help="diamond product of two polynomials")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("relation", help="build (and verify) a relation instance")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("basis", help="degree-d basis family")
    p.add_argument("degree", type=int)
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--check-mod2", action="store_true")

    p = sub.add_parser("decompose", help="coefficients over the basis family")
    p.add_argument("element")

    p = sub.add_parser("kernel", help="basis of the degree-d relation space")
    p.add_argument("degree", type=int)

    p = sub.add_parser("selfcheck", help="run the built-in verification suite")
    p.add_argument("--max-degree", type=int, default=5)

    return parser


def _emit(args: argparse.Namespace, text_lines: list[str], payload: dict) -> None:
    if args.json:
        payload = {"schema": 1, "command": args.command, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _coeff_str(c) -> str:
    return str(c)


def _cmd_trees(args) -> int:
    ts = enumerate_trees(args.degree)
    if args.count_only:
        _emit(args, [str(len(ts))], {"degree": args.degree, "count": len(ts)})
    else:
        _emit(
            args,
            [t.encoding for t in ts],
            {
                "degree": args.degree,
                "count": len(ts),
                "trees": [t.encoding for t in ts],
            },
        )
    return 0


def _cmd_forests(args) -> int:
    fs = enumerate_forests(args.degree)
    if args.count_only:
        _emit(args, [str(len(fs))], {"degree": args.degree, "count": len(fs)})
    else:
        _emit(
            args,
            [f.encoding for f in fs],
            {
                "degree": args.degree,
                "count": len(fs),
                "forests": [f.encoding for f in fs],
            },
        )
    return 0


def _cmd_coproduct(args) -> int:
    elem = parse_helem(args.element)
    result = coproduct(elem)
    text = print_tensor(result)
    _emit(
        args,
        [text],
        {
            "input": print_helem(elem),
            "result": text,
            "terms": [
                {"left": f1.encoding, "right": f2.encoding, "coeff": _coeff_str(c)}
                for (f1, f2), c in sorted(
                    result.terms.items(),
                    key=lambda kv: (-kv[0][0].degree, kv[0][0].encoding, kv[0][1].encoding),
                )
            ],
        },
    )
    return 0


def _cmd_apply(args) -> int:
    elem = parse_helem(args.element)
    poly = parse_poly(args.poly)
    result = rtm_apply(elem, poly)
    text = print_poly(result)
    _emit(args, [text], {"input": print_helem(elem), "poly": print_poly(poly), "result": text})
    return 0


def _cmd_sigma(args) -> int:
    elem = parse_helem(args.element)
    text = print_poly(sigma(elem))
    _emit(args, [text], {"input": print_helem(elem), "result": text})
    return 0


def _cmd_diamond(args) -> int:
    left = parse_poly(args.left)
    right = parse_poly(args.right)
    text = print_poly(diamond(left, right))
    _emit(
        args,
        [text],
        {"left": print_poly(left), "right": print_poly(right), "result": text},
    )
    return 0


def _cmd_relation(args) -> int:
    try:
        report = verify_fmn(args.m, args.n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    relation_text = print_helem(report.relation)
    lines = [f"f_{args.m},{args.n} = {relation_text}"]
    payload: dict = {"m": args.m, "n": args.n, "relation": relation_text}
    if args.verify:
        lines += [
            f"sigma_is_zero: {report.sigma_is_zero}",
            f"rho_x_is_zero: {report.rho_x_is_zero}",
            f"r_identity_holds: {report.r_identity_holds}",
        ]
        payload.update(
            sigma_is_zero=report.sigma_is_zero,
            rho_x_is_zero=report.rho_x_is_zero,
            r_identity_holds=report.r_identity_holds,
        )
    _emit(args, lines, payload)
    return 0 if (not args.verify or report.all_ok) else 1


def _cmd_basis(args) -> int:
    if args.degree < 1:
        print("error: degree must be >= 1", file=sys.stderr)
        return 2
    forests = basis_forests(args.degree)
    lines = [f.encoding for f in forests]
    payload: dict = {
        "degree": args.degree,
        "forests": [f.encoding for f in forests],
    }
    if args.matrix:
        mat = basis_matrix(args.degree)
        lines += [" ".join(_coeff_str(e) for e in row) for row in mat.entries]
        payload["matrix"] = [[_coeff_str(e) for e in row] for row in mat.entries]
    if args.check_mod2:
        ok = check_mod2_invertible(args.degree)
        lines.append(f"mod2_invertible: {ok}")
        payload["mod2_invertible"] = ok
    _emit(args, lines, payload)
    return 0


def _cmd_decompose(args) -> int:
    elem = parse_helem(args.element)
    d = elem.homogeneous_degree()
    if d is None or d < 1:
        print("error: element must be homogeneous of degree >= 1", file=sys.stderr)
        return 2
    coeffs = decompose(elem, d)
    lines = [
        f"{u.encoding}: {_coeff_str(c)}" for u, c in coeffs.items()
    ]
    _emit(
        args,
        lines,
        {
            "input": print_helem(elem),
            "degree": d,
            "coefficients": {u.encoding: _coeff_str(c) for u, c in coeffs.items()},
        },
    )
    return 0


def _cmd_kernel(args) -> int:
    if args.degree < 1:
        print("error: degree must be >= 1", file=sys.stderr)
        return 2
    kernel = sigma_kernel(args.degree)
    lines = [print_helem(k) for k in kernel] or ["(empty)"]
    _emit(
        args,
        [f"dimension: {len(kernel)}"] + lines,
        {
            "degree": args.degree,
            "dimension": len(kernel),
            "basis": [print_helem(k) for k in kernel],
        },
    )
    return 0


def _cmd_selfcheck(args) -> int:
    results = list(run_selfcheck(args.max_degree))
    lines = [
        f"{'ok  ' if ok else 'FAIL'} {name}" for name, ok in results
    ]
    all_ok = all(ok for _, ok in results)
    lines.append("selfcheck passed" if all_ok else "selfcheck FAILED")
    _emit(
        args,
        lines,
        {
            "max_degree": args.max_degree,
            "checks": {name: ok for name, ok in results},
            "passed": all_ok,
        },
    )
    return 0 if all_ok else 1


_DISPATCH = {
    "trees": _cmd_trees,
    "forests": _cmd_forests,
    "coproduct": _cmd_coproduct,
    "apply": _cmd_apply,
    "sigma": _cmd_sigma,
    "diamond": _cmd_diamond,
    "relation": _cmd_relation,
    "basis": _cmd_basis,
    "decompose": _cmd_decompose,
    "kernel": _cmd_kernel,
    "selfcheck": _cmd_selfcheck,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (ForestSyntaxError, PolySyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
