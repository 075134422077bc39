"""JSON encoding and decoding for the wire-facing objects.

Scalars cross the boundary as exact strings, never floats: rationals as
"p/q" (denominator omitted when 1), symbolic values in the parenthesized
polynomial-fraction form.  A parameter may also be the literal string
"symbolic".  Term tables are emitted in lexicographic index order, so
output is byte-deterministic.
"""

from __future__ import annotations

from .module import Box, ModuleElement, Params
from .scalars import MU1, MU2, format_scalar, parse_scalar
from .subquotient import LBarSet


def param_to_json(value, which: int) -> str:
    sym = MU1 if which == 1 else MU2
    if value == sym:
        return "symbolic"
    return format_scalar(value)


def param_from_json(text: str, which: int):
    if text == "symbolic":
        return MU1 if which == 1 else MU2
    return parse_scalar(text)


def params_to_json(p: Params) -> dict:
    return {"mu1": param_to_json(p.mu1, 1), "mu2": param_to_json(p.mu2, 2)}


def params_from_json(obj) -> Params:
    return Params(param_from_json(obj["mu1"], 1), param_from_json(obj["mu2"], 2))


def element_to_json(v: ModuleElement) -> dict:
    out = params_to_json(v.params)
    out["basis"] = v.basis
    out["terms"] = [
        {"k": k, "l": l, "m": m, "c": format_scalar(c)}
        for (k, l, m), c in v.items()
    ]
    return out


def element_from_json(obj) -> ModuleElement:
    params = params_from_json(obj)
    terms = {}
    for t in obj.get("terms", []):
        idx = (int(t["k"]), int(t["l"]), int(t["m"]))
        c = parse_scalar(str(t["c"]))
        terms[idx] = terms.get(idx, 0) + c
    return ModuleElement(params, obj["basis"], terms)


def indexset_to_json(J: LBarSet) -> dict:
    parts = []
    for lo, hi in J.intervals:
        if lo is None and hi is None:
            parts.append("all")
        elif lo is None:
            parts.append({"le": hi})
        elif hi is None:
            parts.append({"ge": lo})
        elif lo == hi:
            parts.append({"eq": lo})
        else:
            parts.append({"in": [lo, hi]})
    if len(parts) == 1:
        return {"lbar": parts[0]}
    return {"lbar": {"union": parts}}


def _interval_from_json(piece) -> LBarSet:
    if piece == "all":
        return LBarSet.all()
    if "ge" in piece:
        return LBarSet.ge(int(piece["ge"]))
    if "le" in piece:
        return LBarSet.le(int(piece["le"]))
    if "eq" in piece:
        return LBarSet.eq(int(piece["eq"]))
    if "in" in piece:
        a, b = piece["in"]
        return LBarSet.between(int(a), int(b))
    raise ValueError(f"cannot parse index set piece {piece!r}")


def indexset_from_json(obj) -> LBarSet:
    body = obj["lbar"]
    if isinstance(body, dict) and "union" in body:
        out = LBarSet.empty()
        for piece in body["union"]:
            out = out.union(_interval_from_json(piece))
    else:
        out = _interval_from_json(body)
    if "shift" in obj:
        dk, dl = obj["shift"]
        out = out.shift(int(dl))
    return out


def parse_set_expr(text: str) -> LBarSet | None:
    """Command-line index set grammar: full | l01 | lbar>=N | lbar<=N |
    lbar=N | lbar in A..B."""
    text = text.strip().replace(" ", "")
    if text in ("full", "all"):
        return None
    if text == "l01":
        return LBarSet.between(0, 1)
    if text.startswith("lbar>="):
        return LBarSet.ge(int(text[6:]))
    if text.startswith("lbar<="):
        return LBarSet.le(int(text[6:]))
    if text.startswith("lbar="):
        return LBarSet.eq(int(text[5:]))
    if text.startswith("lbarin"):
        a, b = text[6:].split("..")
        return LBarSet.between(int(a), int(b))
    raise ValueError(f"cannot parse index set {text!r}")


def box_to_json(box: Box) -> dict:
    return {
        "kmin": box.kmin,
        "kmax": box.kmax,
        "lmin": box.lmin,
        "lmax": box.lmax,
        "mmax": box.mmax,
    }
