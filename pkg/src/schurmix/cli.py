"""Command line interface; every subcommand wraps one library entry point.

Exit codes: 0 when the requested check holds (or plain output succeeded),
1 when a verified identity fails, 2 on invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .barquot import abacus, delta_sign, quotient, inverse_quotient
from .fock import lemma_co_sides
from .mixed import lhs, rect_shape, verify
from .partitions import Partition, StrictPartition, add_set, bar_core
from .polyring import shift2
from .schur import schur_q, schur_s


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _partition(text, strict=False):
    cls = StrictPartition if strict else Partition
    try:
        return cls.from_text(text)
    except ValueError as err:
        raise ValueError(f"bad partition {text!r}: {err}") from None


def _resolve_case(case, core, m, need_case=False):
    """Combine an optional case flag with either --core (signed) or --m."""
    if core is not None and m is not None:
        raise ValueError("give either --core or --m, not both")
    if core is not None:
        if case == "one" and core < 0:
            raise ValueError("case one needs a core index >= 0")
        if case == "zero" and core > 0:
            raise ValueError("case zero needs a core index <= 0")
        if case is None:
            case = "one" if core >= 0 else "zero"
        return case, abs(core)
    if m is None:
        raise ValueError("missing --core or --m")
    if case is None and need_case:
        raise ValueError("missing --case")
    return case, m


def _print_poly(poly, as_json):
    if as_json:
        print(json.dumps(poly.to_json_obj()))
    else:
        print(poly.pretty())


def cmd_core(ns):
    print(bar_core(ns.m).to_text())
    return 0


def cmd_quotient(ns):
    tri = quotient(_partition(ns.partition, strict=True))
    print(f"charge: {tri.charge}")
    print(f"q0: {tri.q0.to_text()}")
    print(f"q1: {tri.q1.to_text()}")
    return 0


def cmd_inverse(ns):
    lam = inverse_quotient(
        ns.charge,
        _partition(ns.q0, strict=True),
        _partition(ns.q1),
    )
    print(lam.to_text())
    return 0


def cmd_enumerate(ns):
    case, _ = _resolve_case(ns.case, ns.core, None)
    color = 1 if case == "one" else 0
    for mu in add_set(bar_core(ns.core), color, ns.ell):
        print(mu.to_text())
    return 0


def cmd_sign(ns):
    value = delta_sign(_partition(ns.partition, strict=True), ns.core)
    print(f"{value:+d}")
    return 0


def cmd_abacus(ns):
    print(abacus(_partition(ns.partition, strict=True), ns.core).render())
    return 0


def cmd_schur_s(ns):
    poly = schur_s(_partition(ns.partition))
    if ns.t2:
        poly = shift2(poly)
    _print_poly(poly, ns.json)
    return 0


def cmd_schur_q(ns):
    _print_poly(schur_q(_partition(ns.partition, strict=True)), ns.json)
    return 0


def cmd_expand(ns):
    case, m = _resolve_case(ns.case, ns.core, ns.m, need_case=True)
    total, terms = lhs(case, m, ns.n)
    if ns.json:
        print(
            json.dumps(
                {
                    "case": case,
                    "m": m,
                    "n": ns.n,
                    "terms": [
                        {
                            "mu": t.mu.to_text(),
                            "sign": t.sign,
                            "q0": t.q_index.to_text(),
                            "q1": t.s_index.to_text(),
                            "value": t.value.to_json_obj(),
                        }
                        for t in terms
                    ],
                    "total": total.to_json_obj(),
                }
            )
        )
    else:
        for t in terms:
            mark = "+" if t.sign > 0 else "-"
            print(f"{mark} mu={t.mu.to_text()} q0={t.q_index.to_text()} q1={t.s_index.to_text()}")
    return 0


def cmd_verify(ns):
    case, m = _resolve_case(ns.case, ns.core, ns.m, need_case=True)
    report = verify(case, m, ns.n)
    if ns.json:
        print(
            json.dumps(
                {
                    "case": report.case,
                    "core_index": report.core_index,
                    "n": report.n,
                    "equal": report.equal,
                    "lhs": report.lhs.to_json_obj(),
                    "rhs": report.rhs.to_json_obj(),
                    "difference": report.difference.to_json_obj(),
                    "terms": [
                        {
                            "mu": t.mu.to_text(),
                            "sign": t.sign,
                            "q0": t.q_index.to_text(),
                            "q1": t.s_index.to_text(),
                        }
                        for t in report.terms
                    ],
                }
            )
        )
    else:
        print(f"case: {case}")
        print(f"m: {m}")
        print(f"n: {ns.n}")
        print(f"core: {report.core_index}")
        print(f"rectangle: {rect_shape(case, m, ns.n)}")
        print(f"terms: {len(report.terms)}")
        print(f"equal: {'true' if report.equal else 'false'}")
    return 0 if report.equal else 1


def cmd_verify_all(ns):
    failures = 0
    checks = 0
    for case in ("one", "zero"):
        for m in range(ns.max_m + 1):
            for n in range(2 * m + 4):
                report = verify(case, m, n)
                checks += 1
                if not report.equal:
                    failures += 1
                print(f"{case} m={m} n={n} equal={'true' if report.equal else 'false'}")
    if failures:
        print(f"all: {checks} checks, {failures} failed")
        return 1
    print(f"all: {checks} checks, all equal")
    return 0


def cmd_fock_check(ns):
    case, _ = _resolve_case(ns.case, ns.core, None)
    color = 1 if case == "one" else 0
    left, right = lemma_co_sides(color, ns.core, ns.ell)
    print(f"case: {case}")
    print(f"core: {ns.core}")
    print(f"ell: {ns.ell}")
    print("divided-power side:")
    for lam, coeff in left.items():
        print(f"  {lam.to_text()}: {coeff}")
    print("weighted-sum side:")
    for lam, coeff in right.items():
        print(f"  {lam.to_text()}: {coeff}")
    equal = left == right
    print(f"equal: {'true' if equal else 'false'}")
    return 0 if equal else 1


def build_parser():
    parser = _Parser(prog="schurmix", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("core", help="print the core partition with a given index")
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("quotient", help="charge and quotient pair of a strict partition")
    p.add_argument("partition")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("inverse", help="rebuild a strict partition from quotient data")
    p.add_argument("--charge", type=int, required=True)
    p.add_argument("--q0", default="")
    p.add_argument("--q1", default="")
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("enumerate", help="node addition set of a core")
    p.add_argument("--case", choices=("one", "zero"))
    p.add_argument("--core", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("sign", help="bead pair sign of a strict partition")
    p.add_argument("partition")
    p.add_argument("--core", type=int, required=True)
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("abacus", help="render the three runner abacus")
    p.add_argument("partition")
    p.add_argument("--core", type=int, required=True)
    p.set_defaults(func=cmd_abacus)

    p = sub.add_parser("schur-s", help="S-polynomial of a partition")
    p.add_argument("partition")
    p.add_argument("--t2", action="store_true", help="substitute tj -> t2j")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_schur_s)

    p = sub.add_parser("schur-q", help="Q-polynomial of a strict partition")
    p.add_argument("partition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_schur_q)

    p = sub.add_parser("expand", help="list the signed Q*S terms of an expansion")
    p.add_argument("--case", choices=("one", "zero"))
    p.add_argument("--m", type=int)
    p.add_argument("--core", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="check one expansion identity")
    p.add_argument("--case", choices=("one", "zero"))
    p.add_argument("--m", type=int)
    p.add_argument("--core", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="sweep both cases up to a core bound")
    p.add_argument("--max-m", type=int, required=True)
    p.set_defaults(func=cmd_verify_all)

    p = sub.add_parser("fock-check", help="compare the divided power expansion")
    p.add_argument("--case", choices=("one", "zero"))
    p.add_argument("--core", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_fock_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        return ns.func(ns)
    except _UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())
