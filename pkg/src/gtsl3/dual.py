"""The dual module in its eta-basis.

eta_{k,l,m} is normalized against the w-basis by eta_{k,l,m}(w_{k,l,m}) = 1
and carries the same (h1, h2, f12*e12) eigenvalue triple as w_{k,l,m}.  The
action is twisted by the involution tau:  (X eta)(v) = -eta(tau(X) v).  We
work directly with the explicit eta-formulas rather than with functionals;
``pairing`` is the consistency bridge between the two pictures.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import BasisMismatch
from .module import BASIS_ACTIONS, ModuleElement, Params, basis_vector
from .scalars import scalar_is_zero


def eta_vector(params: Params, k: int, l: int, m: int) -> ModuleElement:
    return basis_vector(params, "eta", (k, l, m))


def act_eta_basis(gen: str, p: Params, idx):
    p.require_generic_sum()
    k, l, m = idx
    kb = p.kbar(k)
    lb = p.lbar(l)
    den = (kb + lb - 1) * (kb + lb - 2)
    if gen == "e1":
        out = [((k - 1, l, m), -(kb - 1) * (kb - 2) * (kb + lb + m - 1) / den)]
        if m > 0:
            out.append(((k, l + 1, m - 1), lb + 1))
        return out
    if gen == "e2":
        out = [((k, l - 1, m), -(lb - 1) * (lb - 2) * (kb + lb + m - 1) / den)]
        if m > 0:
            out.append(((k + 1, l, m - 1), -(kb + 1)))
        return out
    if gen == "h1":
        return [(idx, -2 * kb + lb - m)]
    if gen == "h2":
        return [(idx, kb - 2 * lb - m)]
    if gen == "f1":
        return [
            ((k + 1, l, m), kb + 1),
            ((k, l - 1, m + 1), (m + 1) * (lb - 1) * (lb - 2) / den),
        ]
    if gen == "f2":
        return [
            ((k, l + 1, m), lb + 1),
            ((k - 1, l, m + 1), -(m + 1) * (kb - 1) * (kb - 2) / den),
        ]
    if gen == "e12":
        return [((k, l, m - 1), kb + lb + m - 1)] if m > 0 else []
    if gen == "f12":
        return [((k, l, m + 1), Fraction(-(m + 1)))]
    raise ValueError(f"unknown generator {gen!r}")


BASIS_ACTIONS["eta"] = act_eta_basis


def pairing(d: ModuleElement, v: ModuleElement):
    """<d, v> for an eta-element against a w-element with equal parameters."""
    if d.basis != "eta" or v.basis != "w":
        raise BasisMismatch("pairing takes an eta-element and a w-element")
    if d.params != v.params:
        raise BasisMismatch("pairing needs equal parameters")
    total = Fraction(0)
    for idx, c in d.terms.items():
        other = v.terms.get(idx)
        if other is not None:
            total = total + c * other
    if scalar_is_zero(total):
        return Fraction(0)
    return total
