"""The module M_{mu1,mu2}: finitely supported elements over the index set
Z^2 x Z_{>=0}, the sl3 action in the u- and w-bases, change of basis, and
Gelfand-Tsetlin eigenvalue data.

Indices are plain tuples (k, l, m).  All action formulas shift indices by
at most one step, so finite support is preserved and the full module action
is computed exactly -- finite windows enter only in the search and solve
layers.  Throughout, kbar = k - mu1 and lbar = l - mu2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import liealg
from .errors import BasisMismatch, NonGenericParameters
from .scalars import (
    MU1,
    MU2,
    RatFunc,
    binomial,
    raising_factorial,
    scalar_is_integer,
    scalar_is_zero,
)


class Params:
    """The two module parameters plus decidable genericity predicates.

    Either both parameters are exact rationals (specialized mode) or at
    least one is a rational function (symbolic mode).  A symbolic parameter
    may still be an integer constant -- e.g. mu2 = 0 with mu1 left symbolic
    -- and the predicates see through that exactly.
    """

    __slots__ = ("mu1", "mu2")

    def __init__(self, mu1, mu2):
        self.mu1 = mu1 if isinstance(mu1, RatFunc) else Fraction(mu1)
        self.mu2 = mu2 if isinstance(mu2, RatFunc) else Fraction(mu2)

    @classmethod
    def symbolic(cls) -> "Params":
        return cls(MU1, MU2)

    @property
    def is_symbolic(self) -> bool:
        return isinstance(self.mu1, RatFunc) or isinstance(self.mu2, RatFunc)

    def mu1_integral(self) -> bool:
        return scalar_is_integer(self.mu1)

    def mu2_integral(self) -> bool:
        return scalar_is_integer(self.mu2)

    def sum_integral(self) -> bool:
        return scalar_is_integer(self.mu1 + self.mu2)

    def require_generic_sum(self):
        if self.sum_integral():
            raise NonGenericParameters("mu1 + mu2 must not be an integer")

    def mu2_int(self) -> int:
        from .errors import RequiresIntegralMu2

        if not self.mu2_integral():
            raise RequiresIntegralMu2("operation needs mu2 in Z")
        if isinstance(self.mu2, RatFunc):
            c = self.mu2.as_constant()
            return int(c)
        return int(self.mu2)

    def kbar(self, k: int):
        return k - self.mu1

    def lbar(self, l: int):
        return l - self.mu2

    def __eq__(self, other):
        return (
            isinstance(other, Params)
            and self.mu1 == other.mu1
            and self.mu2 == other.mu2
        )

    __hash__ = None

    def __repr__(self):
        return f"Params(mu1={self.mu1}, mu2={self.mu2})"


@dataclass(frozen=True)
class Box:
    """Finite index window: kmin<=k<=kmax, lmin<=l<=lmax, 0<=m<=mmax."""

    kmin: int
    kmax: int
    lmin: int
    lmax: int
    mmax: int

    @classmethod
    def radius(cls, r: int, lcenter: int = 0) -> "Box":
        return cls(-r, r, lcenter - r, lcenter + r, r)

    def contains(self, idx) -> bool:
        k, l, m = idx
        return (
            self.kmin <= k <= self.kmax
            and self.lmin <= l <= self.lmax
            and 0 <= m <= self.mmax
        )

    def __iter__(self):
        for k in range(self.kmin, self.kmax + 1):
            for l in range(self.lmin, self.lmax + 1):
                for m in range(self.mmax + 1):
                    yield (k, l, m)


class ModuleElement:
    """Finitely supported vector over one of the bases u, w, eta.

    Immutable by convention: operations return fresh elements, and stored
    coefficients are exact and nonzero.
    """

    __slots__ = ("params", "basis", "terms")

    def __init__(self, params: Params, basis: str, terms=None):
        if basis not in ("u", "w", "eta"):
            raise ValueError(f"unknown basis {basis!r}")
        self.params = params
        self.basis = basis
        data = {}
        if terms:
            for idx, c in terms.items():
                if idx[2] < 0:
                    raise ValueError(f"index {idx} has m < 0")
                if not scalar_is_zero(c):
                    data[idx] = c
        self.terms = data

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def items(self):
        return [(idx, self.terms[idx]) for idx in sorted(self.terms)]

    def _check_compatible(self, other: "ModuleElement"):
        if self.basis != other.basis:
            raise BasisMismatch(f"cannot combine {self.basis!r} with {other.basis!r}")
        if self.params != other.params:
            raise BasisMismatch("elements have different parameters")

    def __add__(self, other):
        self._check_compatible(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            s = terms.get(idx, 0) + c
            if scalar_is_zero(s):
                terms.pop(idx, None)
            else:
                terms[idx] = s
        out = ModuleElement.__new__(ModuleElement)
        out.params, out.basis, out.terms = self.params, self.basis, terms
        return out

    def __neg__(self):
        out = ModuleElement.__new__(ModuleElement)
        out.params, out.basis = self.params, self.basis
        out.terms = {idx: -c for idx, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ModuleElement":
        if scalar_is_zero(c):
            return ModuleElement(self.params, self.basis)
        out = ModuleElement.__new__(ModuleElement)
        out.params, out.basis = self.params, self.basis
        out.terms = {idx: c * v for idx, v in self.terms.items()}
        return out

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, ModuleElement):
            return NotImplemented
        if self.basis != other.basis or self.params != other.params:
            return False
        if set(self.terms) != set(other.terms):
            return False
        return all(self.terms[idx] == other.terms[idx] for idx in self.terms)

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return f"<zero {self.basis}-element>"
        bits = ", ".join(f"{idx}: {c}" for idx, c in self.items())
        return f"<{self.basis}-element {{{bits}}}>"


def basis_vector(params: Params, basis: str, idx) -> ModuleElement:
    if basis == "w":
        params.require_generic_sum()
    return ModuleElement(params, basis, {tuple(idx): Fraction(1)})


def u_vector(params, k, l, m) -> ModuleElement:
    return basis_vector(params, "u", (k, l, m))


def w_vector(params, k, l, m) -> ModuleElement:
    return basis_vector(params, "w", (k, l, m))


# ---------------------------------------------------------------------------
# single-basis-vector actions; each returns [(index, coefficient), ...]

def act_u_basis(gen: str, p: Params, idx):
    k, l, m = idx
    kb = p.kbar(k)
    lb = p.lbar(l)
    if gen == "e1":
        return [((k - 1, l, m), -kb)]
    if gen == "e2":
        out = [((k, l - 1, m), -lb)]
        if m > 0:
            out.append(((k + 1, l, m - 1), Fraction(m)))
        return out
    if gen == "h1":
        return [(idx, -2 * kb + lb - m)]
    if gen == "h2":
        return [(idx, kb - 2 * lb - m)]
    if gen == "f1":
        return [((k + 1, l, m), kb - lb + m), ((k, l - 1, m + 1), -lb)]
    if gen == "f2":
        return [((k, l + 1, m), lb), ((k - 1, l, m + 1), kb)]
    if gen == "e12":
        return [((k, l, m - 1), Fraction(-m))] if m > 0 else []
    if gen == "f12":
        return [((k, l, m + 1), kb + lb + m), ((k + 1, l + 1, m), lb)]
    raise ValueError(f"unknown generator {gen!r}")


def act_w_basis(gen: str, p: Params, idx):
    p.require_generic_sum()
    k, l, m = idx
    kb = p.kbar(k)
    lb = p.lbar(l)
    den = (kb + lb) * (kb + lb - 1)
    if gen == "e1":
        out = [((k - 1, l, m), -kb)]
        if m > 0:
            out.append(((k, l + 1, m - 1), -m * lb * (lb - 1) / den))
        return out
    if gen == "e2":
        out = [((k, l - 1, m), -lb)]
        if m > 0:
            out.append(((k + 1, l, m - 1), m * kb * (kb - 1) / den))
        return out
    if gen == "h1":
        return [(idx, -2 * kb + lb - m)]
    if gen == "h2":
        return [(idx, kb - 2 * lb - m)]
    if gen == "f1":
        return [
            ((k + 1, l, m), kb * (kb - 1) * (kb + lb + m) / den),
            ((k, l - 1, m + 1), -lb),
        ]
    if gen == "f2":
        return [
            ((k, l + 1, m), lb * (lb - 1) * (kb + lb + m) / den),
            ((k - 1, l, m + 1), kb),
        ]
    if gen == "e12":
        return [((k, l, m - 1), Fraction(-m))] if m > 0 else []
    if gen == "f12":
        return [((k, l, m + 1), kb + lb + m)]
    raise ValueError(f"unknown generator {gen!r}")


# basis tag -> single-vector action; dual.py registers "eta" on import
BASIS_ACTIONS = {"u": act_u_basis, "w": act_w_basis}


def act(gen: str, v: ModuleElement) -> ModuleElement:
    """Apply one generator symbol to an element, in the element's basis."""
    action = BASIS_ACTIONS[v.basis]
    terms = {}
    for idx, c in v.terms.items():
        for jdx, a in action(gen, v.params, idx):
            s = terms.get(jdx, 0) + c * a
            if scalar_is_zero(s):
                terms.pop(jdx, None)
            else:
                terms[jdx] = s
    return ModuleElement(v.params, v.basis, terms)


def act_lie(x: dict, v: ModuleElement) -> ModuleElement:
    """Linear extension to an arbitrary Lie algebra element {gen: coeff}."""
    out = ModuleElement(v.params, v.basis)
    for gen, c in x.items():
        out = out + act(gen, v).scale(c)
    return out


def act_cartan(h: dict, v: ModuleElement) -> ModuleElement:
    """Action of h = c1*h1 + c2*h2; every basis vector is an eigenvector."""
    if any(g not in ("h1", "h2") for g in h):
        raise ValueError("act_cartan needs an element of the Cartan span")
    c1 = h.get("h1", 0)
    c2 = h.get("h2", 0)
    a1h = liealg.ALPHA1[0] * c1 + liealg.ALPHA1[1] * c2
    a2h = liealg.ALPHA2[0] * c1 + liealg.ALPHA2[1] * c2
    p = v.params
    terms = {}
    for idx, c in v.terms.items():
        k, l, m = idx
        ev = -((p.kbar(k) + m) * a1h + (p.lbar(l) + m) * a2h)
        if not scalar_is_zero(ev):
            terms[idx] = c * ev
    return ModuleElement(p, v.basis, terms)


def act_word(word, v: ModuleElement) -> ModuleElement:
    """Apply a product of generators; leftmost factor acts last."""
    out = v
    for gen in reversed(tuple(word)):
        out = act(gen, out)
    return out


def casimir_apply(v: ModuleElement) -> ModuleElement:
    out = ModuleElement(v.params, v.basis)
    for c, word in liealg.casimir_word():
        out = out + act_word(word, v).scale(c)
    return out


def gt_eigenvalue(idx, p: Params):
    """Eigenvalue triple of (h1, h2, f12*e12) on the w-basis vector at idx."""
    k, l, m = idx
    kb = p.kbar(k)
    lb = p.lbar(l)
    return (-2 * kb + lb - m, kb - 2 * lb - m, -m * (kb + lb + m - 1))


def weight_of(idx, p: Params):
    """Cartan weight as its values on (h1, h2)."""
    ev = gt_eigenvalue(idx, p)
    return (ev[0], ev[1])


# ---------------------------------------------------------------------------
# change of basis

def w_to_u(v: ModuleElement) -> ModuleElement:
    """Expand w-vectors in the u-basis via the raising-factorial sum."""
    if v.basis != "w":
        raise BasisMismatch("w_to_u needs a w-basis element")
    p = v.params
    p.require_generic_sum()
    terms = {}
    for (k, l, m), c in v.terms.items():
        kb = p.kbar(k)
        lb = p.lbar(l)
        for n in range(m + 1):
            coeff = (
                c
                * binomial(m, n)
                * raising_factorial(lb, n)
                / raising_factorial(kb + lb, n)
            )
            if scalar_is_zero(coeff):
                continue
            jdx = (k + n, l + n, m - n)
            s = terms.get(jdx, 0) + coeff
            if scalar_is_zero(s):
                terms.pop(jdx, None)
            else:
                terms[jdx] = s
    return ModuleElement(p, "u", terms)


def u_to_w(v: ModuleElement) -> ModuleElement:
    """Inverse change of basis, u-vectors expanded over w-vectors."""
    if v.basis != "u":
        raise BasisMismatch("u_to_w needs a u-basis element")
    p = v.params
    p.require_generic_sum()
    terms = {}
    for (k, l, m), c in v.terms.items():
        kb = p.kbar(k)
        lb = p.lbar(l)
        for n in range(m + 1):
            coeff = (
                c
                * (-1) ** n
                * binomial(m, n)
                * raising_factorial(lb, n)
                / raising_factorial(kb + lb + n - 1, n)
            )
            if scalar_is_zero(coeff):
                continue
            jdx = (k + n, l + n, m - n)
            s = terms.get(jdx, 0) + coeff
            if scalar_is_zero(s):
                terms.pop(jdx, None)
            else:
                terms[jdx] = s
    return ModuleElement(p, "w", terms)
