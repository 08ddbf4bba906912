"""Command line interface.

Exit codes: 0 success, 1 verification failure, 2 invalid index pair,
3 unsupported product family.  JSON output is canonical (sorted keys,
sorted terms) and byte-stable for deterministic commands.  The default
seed for randomized suites can be set with the QKIG_SEED environment
variable; an explicit --seed wins.
"""

import argparse
import json
import os
import sys

from . import neighborhoods as nb, ring, verify
from .pairs import (
    InvalidPairError,
    basis_list,
    codim_schubert,
    dim_schubert,
    divisor_pair,
    dual_pair,
    require_valid,
    seidel_pair,
)

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_INVALID_PAIR = 2
EXIT_UNSUPPORTED = 3


def _parse_pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(
            f"expected a pair like 'a,b', got {text!r}")
    try:
        return (int(parts[0]), int(parts[1]))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _emit_element(element, as_json):
    if as_json:
        _emit_json(element.to_dict())
    else:
        print(element.to_text())


def _default_seed(args):
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("QKIG_SEED", "0"))


def cmd_basis(args):
    rows = []
    for a, b in basis_list(args.n):
        rows.append({
            "pair": [a, b],
            "dim": dim_schubert(args.n, a, b),
            "codim": codim_schubert(args.n, a, b),
            "dual": list(dual_pair(args.n, (a, b))),
        })
    if args.json:
        _emit_json({"n": args.n, "basis": rows})
    else:
        for r in rows:
            print(f"O_{{{r['pair'][0]},{r['pair'][1]}}}  dim={r['dim']} "
                  f"codim={r['codim']} dual=({r['dual'][0]},{r['dual'][1]})")
    return EXIT_OK


def cmd_mul_divisor(args):
    e = ring.RingElement.basis(args.n, require_valid(args.n, args.pair))
    if args.classical:
        out = ring.classical_chevalley(args.n, e)
    else:
        out = ring.quantum_chevalley(args.n, e)
    _emit_element(out, args.json)
    return EXIT_OK


def cmd_mul_seidel(args):
    e = ring.RingElement.basis(args.n, require_valid(args.n, args.pair))
    _emit_element(ring.seidel(args.n, e), args.json)
    return EXIT_OK


def cmd_product_special(args):
    out = ring.special_product(args.n, args.u, args.v)
    _emit_element(out, args.json)
    return EXIT_OK


def cmd_classify(args):
    n, u, v = args.n, require_valid(args.n, args.u), require_valid(args.n, args.v)
    per_degree = {str(d): nb.classify(n, u, v, d).to_dict() for d in (1, 2, 3)}
    payload = {
        "n": n, "u": list(u), "v": list(v),
        "C1": nb.condition_C1(n, u, v),
        "C2": nb.condition_C2(n, u, v),
        "L1": nb.condition_L1(n, u, v),
        "deg2_birational_case": nb.deg2_birational_case(n, u, v),
        "q_support": sorted(nb.q_support_product(n, u, v)),
        "richardson_dim": nb.richardson_dim_or_none(n, u, v),
        "dim_moduli": {str(d): nb.dim_moduli(n, u, v, d) for d in (0, 1, 2)},
        "by_degree": per_degree,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"u={u} v={v} n={n}")
        print(f"  C1={payload['C1']} C2={payload['C2']} L1={payload['L1']} "
              f"deg2_case={payload['deg2_birational_case']}")
        print(f"  q_support={payload['q_support']} "
              f"richardson_dim={payload['richardson_dim']}")
        for d in (1, 2, 3):
            c = per_degree[str(d)]
            print(f"  d={d}: birational={c['ev_birational']} "
                  f"two_to_one={c['ev_broken_two_to_one']} "
                  f"gamma_equal={c['gamma_equal']} "
                  f"dim_moduli={payload['dim_moduli'].get(str(d), '-')}")
    return EXIT_OK


def cmd_gamma(args):
    n, u, v = args.n, require_valid(args.n, args.u), require_valid(args.n, args.v)
    if args.broken:
        desc = nb.gamma_broken(n, u, v, args.deg)
    else:
        desc = nb.gamma_pair(n, u, v, args.deg)
    if args.json:
        _emit_json(desc.to_dict())
    else:
        if desc.kind == "meets":
            print(f"meets span(e_i : i in {list(desc.indices)}), dim {desc.dim}")
        elif desc.kind == "dim_only":
            note = f" ({desc.note})" if desc.note else ""
            print(f"dimension {desc.dim}{note}")
        else:
            print(desc.kind)
    return EXIT_OK


def cmd_richardson_expand(args):
    _emit_element(ring.richardson_special_expand(args.n, args.p), args.json)
    return EXIT_OK


def cmd_verify(args):
    seed = _default_seed(args)
    reports = verify.run_suite(args.suite, args.n_max, args.trials, seed)
    total_failures = 0
    for rep in reports:
        n_fail = len(rep["failures"])
        total_failures += n_fail
        status = "ok" if n_fail == 0 else "FAIL"
        print(f"{rep['suite']}: {status} ({rep['checks']} checks, "
              f"{n_fail} failures, params={rep['params']})")
        if n_fail:
            print(json.dumps(rep["failures"][:10], sort_keys=True, default=str))
    return EXIT_OK if total_failures == 0 else EXIT_SUITE_FAILURE


def cmd_table(args):
    n = args.n
    op_pair = divisor_pair(n) if args.op == "divisor" else seidel_pair(n)
    apply_op = ring.quantum_chevalley if args.op == "divisor" else ring.seidel
    rows = []
    for v in basis_list(n):
        prod = apply_op(n, ring.RingElement.basis(n, v))
        rows.append({"pair": list(v), "product": prod.to_dict()["terms"]})
    if args.format == "json":
        _emit_json({"n": n, "op": args.op, "by": list(op_pair), "rows": rows})
    else:
        a, b = op_pair
        for v, row in zip(basis_list(n), rows):
            prod = apply_op(n, ring.RingElement.basis(n, v))
            print(f"O_{{{a},{b}}} * O_{{{v[0]},{v[1]}}} = {prod.to_text()}")
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qkig",
        description="Exact products and curve neighborhoods for the quantum "
                    "K-theory of the symplectic Grassmannian of lines "
                    "IG(2, 2n).")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(fn=fn)
        p.add_argument("--n", type=int, required=True,
                       help="ambient parameter n >= 2 for IG(2, 2n)")
        return p

    p = add("basis", cmd_basis, help="list basis pairs with dim/codim/dual")
    p.add_argument("--json", action="store_true")

    p = add("mul-divisor", cmd_mul_divisor,
            help="product with the Schubert divisor class")
    p.add_argument("--pair", type=_parse_pair, required=True)
    p.add_argument("--classical", action="store_true",
                   help="classical K-theory product (q = 0)")
    p.add_argument("--json", action="store_true")

    p = add("mul-seidel", cmd_mul_seidel,
            help="product with the index-shift class O_{n-1,n}")
    p.add_argument("--pair", type=_parse_pair, required=True)
    p.add_argument("--json", action="store_true")

    p = add("product-special", cmd_product_special,
            help="closed-form product when (C1) or (C2) holds")
    p.add_argument("--u", type=_parse_pair, required=True)
    p.add_argument("--v", type=_parse_pair, required=True)
    p.add_argument("--json", action="store_true")

    p = add("classify", cmd_classify,
            help="index predicates, q-support and moduli dimensions")
    p.add_argument("--u", type=_parse_pair, required=True)
    p.add_argument("--v", type=_parse_pair, required=True)
    p.add_argument("--json", action="store_true")

    p = add("gamma", cmd_gamma, help="curve-neighborhood descriptor")
    p.add_argument("--u", type=_parse_pair, required=True)
    p.add_argument("--v", type=_parse_pair, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--broken", action="store_true",
                   help="broken chains with a degree-1 tail")
    p.add_argument("--json", action="store_true")

    p = add("richardson-expand", cmd_richardson_expand,
            help="basis expansion of the special Richardson class")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(json=False)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run the verification suites")
    p.set_defaults(fn=cmd_verify)
    p.add_argument("--suite", required=True,
                   choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=None,
                   help="default: QKIG_SEED environment variable, else 0")

    p = add("table", cmd_table, help="full operator table")
    p.add_argument("--op", required=True, choices=["divisor", "seidel"])
    p.add_argument("--format", default="text", choices=["json", "text"])

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except InvalidPairError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_PAIR
    except ring.UnsupportedFamilyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_PAIR


if __name__ == "__main__":
    sys.exit(main())
