"""The ``redlab`` command.

Exit codes: 0 success, 1 mathematical negative, 2 input error, 3 a cap was
exhausted before an answer was reached.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bound
from .errors import CapExceeded, ConverseFails, CounterexampleFails, NotPrimary, RedlabError
from .groebner import ideal_contains
from .localred import check_reduction, is_integral_over, multiplicity
from .onedim import build_model, construct_elements, verify_converse, verify_counterexample
from .polyfield import PolyRing, monic_irreducibles, polys_from_text
from .redsearch import find_r_generated_reduction
from .reproduce import TARGETS, run_target
from .ringfile import load_ring_file

OK, NEGATIVE, INPUT_ERROR, CAP = 0, 1, 2, 3


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cap-power", "--cap", dest="cap_power", type=int, default=12,
                   help="largest s tried in I^(s+1) = J I^s (default 12)")
    p.add_argument("--cap-colength", type=int, default=64, help="largest N for m-adic stabilization (default 64)")
    p.add_argument("--window", type=int, default=3, help="difference window (default 3)")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for searches")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--seed", type=int, default=None, help="permute choices in constructions")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="redlab", description="Reductions of ideals in local rings over F_p.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="is SUB a reduction of IDEAL?")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--sub", required=True)
    _add_common(p)

    p = sub.add_parser("search", help="look for an r-generated reduction")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("-r", "--r", dest="r", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true", help="do not stop at the first reduction")
    _add_common(p)

    p = sub.add_parser("integral", help="is POLY integral over IDEAL?")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    _add_common(p)

    p = sub.add_parser("mult", help="Hilbert-Samuel multiplicity of an m-primary ideal")
    p.add_argument("--ring", required=True)
    p.add_argument("--ideal", required=True)
    _add_common(p)

    p = sub.add_parser("bound", help="generator threshold for M maximal ideals")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-ideals", type=int, required=True)
    _add_common(p)

    for name in ("onedim-construct", "onedim-verify"):
        p = sub.add_parser(name, help="semilocal CRT construction" if name.endswith("construct")
                           else "check every span of at most n combinations survives")
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--maximals", default=None,
                       help="comma-separated monic irreducibles in y (default: the first 1+p+...+p^n)")
        if name == "onedim-verify":
            p.add_argument("--converse", default=None,
                           help="comma-separated n+1 unit-spanning elements; run the converse check instead")
        _add_common(p)

    p = sub.add_parser("reproduce", help="run a worked example")
    p.add_argument("target", choices=list(TARGETS))
    _add_common(p)
    return parser


def _emit(args, payload: dict, lines: list) -> None:
    if args.json:
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
        return
    width = max((len(k) for k, _ in lines), default=0)
    for k, v in lines:
        sys.stdout.write(f"{k.ljust(width)}  {v}\n")


def _verdict_code(v) -> int:
    if v.is_reduction:
        return OK
    return NEGATIVE if v.is_negative else CAP


def _config(args) -> dict:
    return {"cap_colength": args.cap_colength, "window": args.window}


def _cmd_check(args) -> int:
    rf = load_ring_file(args.ring)
    I, J = rf.ideal(args.ideal), rf.ideal(args.sub)
    v = check_reduction(J, I, args.cap_power, **_config(args))
    _emit(args, v.to_json(), [("ideal", args.ideal), ("sub", args.sub), ("verdict", str(v))])
    return _verdict_code(v)


def _cmd_search(args) -> int:
    rf = load_ring_file(args.ring)
    I = rf.ideal(args.ideal)
    rep = find_r_generated_reduction(I, args.r, args.cap_power, exhaustive=args.exhaustive, jobs=args.jobs,
                                     **_config(args))
    lines = [("examined", rep.examined), ("not reductions", rep.not_reduction),
             ("inconclusive", len(rep.inconclusive))]
    for cand, v in rep.results:
        lines.append((str(cand.to_json()), str(v)))
    if rep.found:
        lines.append(("found", str(rep.found[0].to_json())))
    _emit(args, rep.to_json(), lines)
    if rep.found:
        return OK
    return CAP if rep.inconclusive else NEGATIVE


def _cmd_integral(args) -> int:
    rf = load_ring_file(args.ring)
    I = rf.ideal(args.ideal)
    f = polys_from_text(rf.ring.poly_ring, args.poly)
    if len(f) != 1:
        raise RedlabError("--poly takes exactly one polynomial")
    v = is_integral_over(f[0], I, args.cap_power, **_config(args))
    member = ideal_contains(I, f[0])
    payload = {"poly": str(f[0]), "in_ideal": member, "integral": v.to_json()}
    _emit(args, payload, [("poly", f[0]), ("in ideal", member), ("integral", str(v))])
    return _verdict_code(v)


def _cmd_mult(args) -> int:
    rf = load_ring_file(args.ring)
    rep = multiplicity(rf.ideal(args.ideal), args.cap_power, **_config(args))
    _emit(args, rep.to_json(), [("e", rep.e), ("d", rep.d), ("colengths", list(rep.colengths))])
    return OK


def _cmd_bound(args) -> int:
    q, M = args.q, args.max_ideals
    n = bound.min_generators(q, M)
    payload = {"q": q, "max_ideals": M, "n": n, "capacity": bound.capacity(q, n),
               "admits_principal": bound.admits_principal(q, M)}
    _emit(args, payload, [(k, v) for k, v in payload.items()])
    return OK


def _model(args):
    uni = PolyRing(args.p, ("y",))
    if args.maximals:
        polys = polys_from_text(uni, args.maximals, sep=",")
    else:
        t = bound.index_set_size(args.p, args.n)
        polys = [f for _, f in zip(range(t), monic_irreducibles(uni))]
    return build_model(args.p, polys)


def _cmd_onedim_construct(args) -> int:
    model = _model(args)
    x = construct_elements(model, args.n)
    payload = {"p": args.p, "n": args.n, "maximals": [str(m) for m in model.maximals]}
    payload.update(x.to_json())
    _emit(args, payload, [(f"x_{j}", f) for j, f in enumerate(x.x, start=1)])
    return OK


def _cmd_onedim_verify(args) -> int:
    model = _model(args)
    if args.converse:
        xs = polys_from_text(model.ring, args.converse, sep=",")
        rep = verify_converse(model, xs, args.n)
        payload = rep.to_json()
        _emit(args, payload, [("non-surviving", ", ".join(f"(i={i}, u={list(u)})" for i, u in rep.non_surviving)),
                           ("separated", True)])
        return OK
    x = construct_elements(model, args.n)
    rep = verify_counterexample(model, x, args.n)
    payload = {"elements": x.to_json(), "report": rep.to_json()}
    lines = [(str(c.to_json()), f"inside ({m})") for c, m in rep.covers]
    _emit(args, payload, lines)
    return OK


def _cmd_reproduce(args) -> int:
    out = run_target(args.target, args.cap_power, args.cap_colength, args.window, args.jobs, args.seed)
    lines = [("target", args.target)]
    for c in out["claims"]:
        mark = "ok  " if c["ok"] else "FAIL"
        lines.append((f"{mark} {c['claim']}", f"expected {c['expected']}, observed {c['observed']}"))
    _emit(args, out, lines)
    return OK if out["ok"] else NEGATIVE


COMMANDS = {
    "check": _cmd_check,
    "search": _cmd_search,
    "integral": _cmd_integral,
    "mult": _cmd_mult,
    "bound": _cmd_bound,
    "onedim-construct": _cmd_onedim_construct,
    "onedim-verify": _cmd_onedim_verify,
    "reproduce": _cmd_reproduce,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CapExceeded as exc:
        sys.stderr.write(f"redlab: cap exhausted: {exc}\n")
        return CAP
    except (NotPrimary, ConverseFails, CounterexampleFails) as exc:
        sys.stderr.write(f"redlab: {exc}\n")
        return NEGATIVE
    except (RedlabError, OSError, ValueError) as exc:
        sys.stderr.write(f"redlab: input error: {exc}\n")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
