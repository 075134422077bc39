"""Command-line frontend.

Subcommands: act, change-basis, pair, hom, generate, character, classify,
verify-paper.  All payloads and results are JSON with exact scalar strings;
output ordering is deterministic.  Exit codes: 0 success / all checks pass,
1 a verification check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import registry
from .errors import ObstructionAtIndex
from .explore import character_table, dual_generate, generate
from .hom import ModuleDescriptor, image_kernel, solve_by_recurrence, solve_intertwiner
from .module import Box, ModuleElement, Params, act_word, u_to_w, w_to_u
from .dual import pairing
from .scalars import format_scalar, parse_scalar
from .serialize import (
    box_to_json,
    element_from_json,
    element_to_json,
    indexset_to_json,
    param_from_json,
    params_to_json,
    parse_set_expr,
)
from .subquotient import classify as classify_set


def _window(args, fallback: int) -> int:
    if getattr(args, "window", None) is not None:
        return args.window
    if getattr(args, "global_window", None) is not None:
        return args.global_window
    return fallback


def _params_from_args(args) -> Params:
    if getattr(args, "symbolic", False):
        mu1 = param_from_json("symbolic", 1)
        mu2 = param_from_json("symbolic", 2)
        if args.mu1 is not None and args.mu1 != "symbolic":
            mu1 = parse_scalar(args.mu1)
        if args.mu2 is not None and args.mu2 != "symbolic":
            mu2 = parse_scalar(args.mu2)
        return Params(mu1, mu2)
    mu1 = args.mu1 if args.mu1 is not None else "1/3"
    mu2 = args.mu2 if args.mu2 is not None else "1/5"
    return Params(param_from_json(mu1, 1), param_from_json(mu2, 2))


def _descriptor(text: str, params: Params) -> ModuleDescriptor:
    text = text.strip()
    dual = False
    if text.startswith("dual:"):
        dual = True
        text = text[5:]
    return ModuleDescriptor(params, dual=dual, J=parse_set_expr(text))


def _load_element(args) -> ModuleElement:
    payload = args.element
    if payload == "-":
        payload = sys.stdin.read()
    obj = json.loads(payload)
    basis_flag = getattr(args, "basis", None)
    if basis_flag:
        if obj.get("basis", basis_flag) != basis_flag:
            raise ValueError(
                f"--basis {basis_flag} conflicts with element basis {obj['basis']}"
            )
        obj["basis"] = basis_flag
    # parameters may come from the global flags instead of the payload
    if "mu1" not in obj:
        obj["mu1"] = "symbolic" if args.symbolic else (args.mu1 or "1/3")
    if "mu2" not in obj:
        obj["mu2"] = "symbolic" if args.symbolic else (args.mu2 or "1/5")
    return element_from_json(obj)


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_act(args) -> int:
    v = _load_element(args)
    word = []
    if args.word:
        word = [g.strip() for g in args.word.split(",") if g.strip()]
    elif args.gen:
        word = [args.gen]
    out = act_word(word, v)
    _emit(element_to_json(out))
    return 0


def cmd_change_basis(args) -> int:
    v = _load_element(args)
    if args.to == "u":
        out = w_to_u(v)
    else:
        out = u_to_w(v)
    _emit(element_to_json(out))
    return 0


def cmd_pair(args) -> int:
    d = element_from_json(json.loads(args.eta))
    v = element_from_json(json.loads(args.w))
    _emit({"value": format_scalar(pairing(d, v))})
    return 0


def cmd_hom(args) -> int:
    params = _params_from_args(args)
    source = _descriptor(args.source, params)
    target = _descriptor(args.target, params)
    box = source.window(_window(args, 4))
    result = {
        "source": args.source,
        "target": args.target,
        "window": box_to_json(box),
        "params": params_to_json(params),
        "obstructions": [],
    }
    if args.recurrence:
        seed = tuple(int(x) for x in args.seed.split(","))
        try:
            sol = solve_by_recurrence(source, target, seed, Fraction(1), box)
            sols = [sol]
            result["dimension"] = 1
        except ObstructionAtIndex as e:
            result["obstructions"] = [
                {"index": list(e.index), "generator": e.generator, "detail": e.detail}
            ]
            result["dimension"] = 0
            sols = []
    else:
        sols = solve_intertwiner(source, target, box)
        result["dimension"] = len(sols)
    result["solutions"] = [
        {f"{k},{l},{m}": format_scalar(c) for (k, l, m), c in sorted(s.x.items())}
        for s in sols
    ]
    if len(sols) == 1 and params.mu2_integral():
        img, ker = image_kernel(sols[0])
        if img is not None:
            result["image"] = indexset_to_json(img)
            result["kernel"] = indexset_to_json(ker)
    _emit(result)
    return 0


def cmd_generate(args) -> int:
    params = _params_from_args(args)
    desc = _descriptor(args.set if not args.dual else f"dual:{args.set}", params)
    box = desc.window(_window(args, 3))
    start = []
    for chunk in args.start.split(";"):
        k, l, m = (int(x) for x in chunk.split(","))
        start.append((k, l, m))
    cert = (dual_generate(start, params, box) if (args.dual and desc.J is None)
            else generate(start, desc, box))
    _emit(
        {
            "descriptor": cert.descriptor,
            "params": params_to_json(params),
            "window": box_to_json(box),
            "start": [list(i) for i in cert.start],
            "verdict": cert.verdict,
            "reached": len(cert.reached),
            "missing": [list(i) for i in cert.missing[:20]],
        }
    )
    return 0


def cmd_character(args) -> int:
    params = _params_from_args(args)
    desc = _descriptor(args.set if not args.dual else f"dual:{args.set}", params)
    r = _window(args, 6)
    table = character_table(desc, r)
    keys = sorted(
        (s, t)
        for (s, t) in table
        if abs(s) <= r and -r <= t <= 0
    )
    _emit(
        {
            "params": params_to_json(params),
            "window": r,
            "table": {f"{s},{t}": table[(s, t)] for s, t in keys},
        }
    )
    return 0


def cmd_classify(args) -> int:
    if args.mu2 is None:
        args.mu2 = "0"  # classification only makes sense for integral mu2
    params = _params_from_args(args)
    J = parse_set_expr(args.set)
    if J is None:
        raise ValueError("classify needs a proper index set, not 'full'")
    r = _window(args, 3)
    box = Box.radius(r, params.mu2_int())
    kind = classify_set(J, box, params)
    _emit(
        {
            "set": indexset_to_json(J),
            "params": params_to_json(params),
            "window": r,
            "classification": kind,
        }
    )
    return 0


def cmd_verify_paper(args) -> int:
    names = None if args.check in (None, "all") else [args.check]
    threads = int(os.environ.get("GT_SL3_THREADS", "1") or "1")
    overrides = {}
    w = args.window if args.window is not None else args.global_window
    if w is not None:
        overrides["window"] = w
    reports = registry.run_all(names, max_threads=threads, **overrides)
    failed = 0
    for rep in reports:
        _emit(rep)
        if rep["verdict"] != "pass":
            failed += 1
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gtsl3",
        description="Exact engine for a two-parameter family of "
        "Gelfand-Tsetlin sl3-modules",
    )
    ap.add_argument("--mu1", help="first parameter, e.g. 1/3 or 'symbolic'")
    ap.add_argument("--mu2", help="second parameter, e.g. 0 or 'symbolic'")
    ap.add_argument("--symbolic", action="store_true",
                    help="run over the rational-function field")
    ap.add_argument("--window", type=int, dest="global_window",
                    help="default window radius for subcommands that take one")
    ap.add_argument("--json", action="store_true",
                    help="accepted for compatibility; output is always JSON")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("act", help="apply a generator or word to an element")
    p.add_argument("--basis", choices=("u", "w", "eta"),
                   help="basis tag when the element JSON omits one")
    p.add_argument("--gen", help="one of e1,e2,e12,f1,f2,f12,h1,h2")
    p.add_argument("--word", help="comma-separated word, leftmost acts last")
    p.add_argument("--element", required=True, help="element JSON, or - for stdin")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("change-basis", help="convert between u- and w-bases")
    p.add_argument("--to", choices=("u", "w"), required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(func=cmd_change_basis)

    p = sub.add_parser("pair", help="pair an eta-element with a w-element")
    p.add_argument("--eta", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_pair)

    p = sub.add_parser("hom", help="solve for diagonal intertwiners on a window")
    p.add_argument("--source", required=True)
    p.add_argument("--target", required=True)
    p.add_argument("--window", type=int)
    p.add_argument("--recurrence", action="store_true",
                   help="propagate ratio recurrences from a seed instead of solving")
    p.add_argument("--seed", default="0,0,0")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("generate", help="BFS generation certificate")
    p.add_argument("--start", required=True, help="semicolon-separated k,l,m triples")
    p.add_argument("--set", default="full")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--window", type=int)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("character", help="weight multiplicities over a cone")
    p.add_argument("--set", default="lbar>=0")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--window", type=int)
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("classify", help="submodule / quotient / subquotient")
    p.add_argument("--set", required=True)
    p.add_argument("--window", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-paper",
                       help="re-run the registered structural checks")
    p.add_argument("--check", help="check id, or 'all'")
    p.add_argument("--window", type=int)
    p.set_defaults(func=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, ZeroDivisionError, json.JSONDecodeError) as e:
        _emit({"error": type(e).__name__, "message": str(e)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
