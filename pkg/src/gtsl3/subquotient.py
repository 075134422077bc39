"""Subquotients supported on lbar-interval index sets, for mu2 in Z.

The only index predicates the structure theory needs constrain
lbar = l - mu2: half-lines, finite intervals, and finite unions of these.
A subquotient's action is the ambient w- or eta-action with every term
whose index leaves the set dropped.  Closure of a set under the ambient
action is checked exactly on a finite window; since the predicates only
involve lbar and no generator moves l by more than one, escapes in the k
or m direction cannot change membership and the window only bounds which
source indices get inspected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BasisMismatch
from .module import BASIS_ACTIONS, Box, ModuleElement, Params
from .scalars import scalar_is_zero
from . import dual as _dual  # noqa: F401  (registers the eta-basis action)

_INF = None  # stands for an unbounded interval end


class LBarSet:
    """Union of integer intervals in the lbar coordinate.

    Stored as a sorted tuple of disjoint, non-adjacent (lo, hi) pairs where
    lo is None for -infinity and hi is None for +infinity.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals):
        self.intervals = _normalize(intervals)

    @classmethod
    def ge(cls, c: int) -> "LBarSet":
        return cls([(c, _INF)])

    @classmethod
    def le(cls, c: int) -> "LBarSet":
        return cls([(_INF, c)])

    @classmethod
    def between(cls, a: int, b: int) -> "LBarSet":
        return cls([(a, b)])

    @classmethod
    def eq(cls, c: int) -> "LBarSet":
        return cls([(c, c)])

    @classmethod
    def empty(cls) -> "LBarSet":
        return cls([])

    @classmethod
    def all(cls) -> "LBarSet":
        return cls([(_INF, _INF)])

    def contains(self, lbar: int) -> bool:
        for lo, hi in self.intervals:
            if (lo is _INF or lbar >= lo) and (hi is _INF or lbar <= hi):
                return True
        return False

    def contains_index(self, idx, p: Params) -> bool:
        return self.contains(idx[1] - p.mu2_int())

    def shift(self, dl: int) -> "LBarSet":
        return LBarSet(
            [
                (lo if lo is _INF else lo + dl, hi if hi is _INF else hi + dl)
                for lo, hi in self.intervals
            ]
        )

    def union(self, other: "LBarSet") -> "LBarSet":
        return LBarSet(list(self.intervals) + list(other.intervals))

    def complement(self) -> "LBarSet":
        out = []
        cursor = _INF  # lower end of the uncovered region
        reached_top = False
        for lo, hi in self.intervals:
            if lo is not _INF:
                out.append((cursor, lo - 1))
            if hi is _INF:
                reached_top = True
                break
            cursor = hi + 1
        if not reached_top:
            out.append((cursor, _INF))
        return LBarSet(out)

    def difference(self, other: "LBarSet") -> "LBarSet":
        out = self
        for lo, hi in other.intervals:
            out = out._remove(lo, hi)
        return out

    def _remove(self, lo, hi) -> "LBarSet":
        kept = []
        for a, b in self.intervals:
            # portion below lo
            if lo is not _INF and (a is _INF or a < lo):
                top = lo - 1 if (b is _INF or b >= lo - 1) else b
                kept.append((a, top))
            # portion above hi
            if hi is not _INF and (b is _INF or b > hi):
                bottom = hi + 1 if (a is _INF or a <= hi + 1) else a
                kept.append((bottom, b))
            if lo is _INF and hi is _INF:
                continue
        return LBarSet(kept)

    def is_empty(self) -> bool:
        return not self.intervals

    def is_subset(self, other: "LBarSet") -> bool:
        return self.difference(other).is_empty()

    def is_bounded(self) -> bool:
        return all(lo is not _INF and hi is not _INF for lo, hi in self.intervals)

    def __eq__(self, other):
        return isinstance(other, LBarSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        if not self.intervals:
            return "lbar in {}"
        bits = []
        for lo, hi in self.intervals:
            if lo is _INF and hi is _INF:
                bits.append("all")
            elif lo is _INF:
                bits.append(f"lbar<={hi}")
            elif hi is _INF:
                bits.append(f"lbar>={lo}")
            elif lo == hi:
                bits.append(f"lbar={lo}")
            else:
                bits.append(f"lbar in [{lo},{hi}]")
        return " | ".join(bits)


def _normalize(intervals):
    cleaned = []
    for lo, hi in intervals:
        if lo is not _INF and hi is not _INF and lo > hi:
            continue
        cleaned.append((lo, hi))
    if not cleaned:
        return ()
    lo_key = lambda iv: float("-inf") if iv[0] is _INF else iv[0]
    hi_key = lambda iv: float("inf") if iv[1] is _INF else iv[1]
    cleaned.sort(key=lambda iv: (lo_key(iv), hi_key(iv)))
    merged = [cleaned[0]]
    for lo, hi in cleaned[1:]:
        plo, phi = merged[-1]
        if phi is _INF or lo is _INF or lo <= phi + 1:
            if phi is not _INF and (hi is _INF or hi > phi):
                merged[-1] = (plo, hi)
        else:
            merged.append((lo, hi))
    return tuple(merged)


LBAR_01 = LBarSet.between(0, 1)


# ---------------------------------------------------------------------------
# truncated actions

def subquot_indices(J: LBarSet, box: Box, p: Params):
    t = p.mu2_int()
    for idx in box:
        if J.contains(idx[1] - t):
            yield idx


def act_truncated(gen: str, v: ModuleElement, J: LBarSet) -> ModuleElement:
    """Ambient action followed by projection to J; support must lie in J."""
    if v.basis not in ("w", "eta"):
        raise BasisMismatch("subquotients live in the w- or eta-basis")
    p = v.params
    t = p.mu2_int()
    for idx in v.terms:
        if not J.contains(idx[1] - t):
            raise ValueError(f"support index {idx} outside {J!r}")
    action = BASIS_ACTIONS[v.basis]
    terms = {}
    for idx, c in v.terms.items():
        for jdx, a in action(gen, p, idx):
            if not J.contains(jdx[1] - t):
                continue
            s = terms.get(jdx, 0) + c * a
            if scalar_is_zero(s):
                terms.pop(jdx, None)
            else:
                terms[jdx] = s
    return ModuleElement(p, v.basis, terms)


@dataclass
class ClosureVerdict:
    closed: bool
    witnesses: list = field(default_factory=list)
    note: str = (
        "window bounds only the inspected source indices; k- and m-escapes "
        "cannot change lbar-membership"
    )

    def __bool__(self):
        return self.closed


def is_closed(J: LBarSet, basis: str, box: Box, p: Params) -> ClosureVerdict:
    """Does the ambient action keep every J-supported vector inside J?"""
    action = BASIS_ACTIONS[basis]
    t = p.mu2_int()
    witnesses = []
    for idx in subquot_indices(J, box, p):
        for gen in ("e1", "e2", "f1", "f2", "e12", "f12"):
            for jdx, c in action(gen, p, idx):
                if scalar_is_zero(c):
                    continue
                if not J.contains(jdx[1] - t):
                    witnesses.append((idx, gen, jdx))
    return ClosureVerdict(not witnesses, witnesses)


def classify(J: LBarSet, box: Box, p: Params, basis: str = "w") -> str:
    """submodule / quotient / subquotient / none, verified on the window."""
    cache = {}

    def closed(S: LBarSet) -> bool:
        if S not in cache:
            cache[S] = bool(is_closed(S, basis, box, p))
        return cache[S]

    if closed(J):
        return "submodule"
    if closed(J.complement()):
        return "quotient"
    # J2 \ J1 with both closed and J1 = J2 \ J
    lmin = box.lmin - p.mu2_int()
    lmax = box.lmax - p.mu2_int()
    bounds_lo = [_INF] + list(range(lmin, lmax + 1))
    bounds_hi = list(range(lmin, lmax + 1)) + [_INF]
    for lo in bounds_lo:
        for hi in bounds_hi:
            cand = LBarSet([(lo, hi)])
            if cand.is_empty() or not J.is_subset(cand):
                continue
            if closed(cand) and closed(cand.difference(J)):
                return "subquotient"
    return "none"


def shift_isomorphism(J: LBarSet, delta) -> LBarSet:
    """Translate an index set by an integral shift (dk, dl); only dl matters
    for lbar-constraints."""
    dk, dl = delta
    return J.shift(dl)


# ---------------------------------------------------------------------------
# specialized formulas for the lbar in {0,1} band

def act_l01_w_basis(gen: str, p: Params, idx):
    t = p.mu2_int()
    p.require_generic_sum()
    k, l, m = idx
    kb = p.kbar(k)
    lb = l - t
    if lb == 0:
        if gen == "e1":
            return [((k - 1, l, m), -kb)]
        if gen == "e2":
            return [((k + 1, l, m - 1), Fraction(m))] if m > 0 else []
        if gen == "f1":
            return [((k + 1, l, m), kb + m)]
        if gen == "f2":
            return [((k - 1, l, m + 1), kb)]
        if gen == "e12":
            return [((k, l, m - 1), Fraction(-m))] if m > 0 else []
        if gen == "f12":
            return [((k, l, m + 1), kb + m)]
    elif lb == 1:
        if gen == "e1":
            return [((k - 1, l, m), -kb)]
        if gen == "e2":
            out = [((k, l - 1, m), Fraction(-1))]
            if m > 0:
                out.append(((k + 1, l, m - 1), m * (kb - 1) / (kb + 1)))
            return out
        if gen == "f1":
            return [
                ((k + 1, l, m), (kb - 1) * (kb + m + 1) / (kb + 1)),
                ((k, l - 1, m + 1), Fraction(-1)),
            ]
        if gen == "f2":
            return [((k - 1, l, m + 1), kb)]
        if gen == "e12":
            return [((k, l, m - 1), Fraction(-m))] if m > 0 else []
        if gen == "f12":
            return [((k, l, m + 1), kb + m + 1)]
    else:
        raise ValueError(f"index {idx} outside the lbar in {{0,1}} band")
    if gen == "h1":
        return [(idx, -2 * kb + lb - m)]
    if gen == "h2":
        return [(idx, kb - 2 * lb - m)]
    raise ValueError(f"unknown generator {gen!r}")


def act_l01_eta_basis(gen: str, p: Params, idx):
    t = p.mu2_int()
    p.require_generic_sum()
    k, l, m = idx
    kb = p.kbar(k)
    lb = l - t
    if lb == 0:
        if gen == "e1":
            out = [((k - 1, l, m), -(kb + m - 1))]
            if m > 0:
                out.append(((k, l + 1, m - 1), Fraction(1)))
            return out
        if gen == "e2":
            return [((k + 1, l, m - 1), -(kb + 1))] if m > 0 else []
        if gen == "f1":
            return [((k + 1, l, m), kb + 1)]
        if gen == "f2":
            return [((k, l + 1, m), Fraction(1)), ((k - 1, l, m + 1), Fraction(-(m + 1)))]
        if gen == "e12":
            return [((k, l, m - 1), kb + m - 1)] if m > 0 else []
        if gen == "f12":
            return [((k, l, m + 1), Fraction(-(m + 1)))]
    elif lb == 1:
        if gen == "e1":
            return [((k - 1, l, m), -(kb - 2) * (kb + m) / kb)]
        if gen == "e2":
            return [((k + 1, l, m - 1), -(kb + 1))] if m > 0 else []
        if gen == "f1":
            return [((k + 1, l, m), kb + 1)]
        if gen == "f2":
            return [((k - 1, l, m + 1), -(m + 1) * (kb - 2) / kb)]
        if gen == "e12":
            return [((k, l, m - 1), kb + m)] if m > 0 else []
        if gen == "f12":
            return [((k, l, m + 1), Fraction(-(m + 1)))]
    else:
        raise ValueError(f"index {idx} outside the lbar in {{0,1}} band")
    if gen == "h1":
        return [(idx, -2 * kb + lb - m)]
    if gen == "h2":
        return [(idx, kb - 2 * lb - m)]
    raise ValueError(f"unknown generator {gen!r}")


def act_l01_fastpath(gen: str, v: ModuleElement) -> ModuleElement:
    """Action in the lbar in {0,1} subquotient via its displayed formulas.

    Equal to act_truncated(..., J = {lbar in [0,1]}) on every input; the
    equality is a test target, not an assumption.
    """
    table = act_l01_w_basis if v.basis == "w" else act_l01_eta_basis
    if v.basis not in ("w", "eta"):
        raise BasisMismatch("fast path needs a w- or eta-element")
    p = v.params
    terms = {}
    for idx, c in v.terms.items():
        for jdx, a in table(gen, p, idx):
            s = terms.get(jdx, 0) + c * a
            if scalar_is_zero(s):
                terms.pop(jdx, None)
            else:
                terms[jdx] = s
    return ModuleElement(p, v.basis, terms)
