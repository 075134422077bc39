"""Intertwiner computation between (sub)quotients of the module and its dual.

Both sides of every Hom problem here decompose into one-dimensional
simultaneous eigenspaces with matching eigenvalue triples, so an
intertwiner is diagonal: phi(b_i) = x_i b'_i for one unknown scalar per
index.  Matching coefficients in phi(X b_i) = X phi(b_i) turns each
(generator, index) pair into equations with at most two unknowns; a finite
window makes the system exactly solvable.

Boundary policy: equations are assembled at every window index and an
equation is skipped only when it touches an unknown outside the window.
Skipping can only enlarge the solution space, and the expected dimensions
are pinned at fixed window sizes, so spurious enlargement is caught.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import ObstructionAtIndex
from .module import BASIS_ACTIONS, Box, ModuleElement, Params
from .scalars import falling_factorial, raising_factorial, scalar_is_zero
from .solver import nullspace
from .subquotient import LBarSet


@dataclass
class ModuleDescriptor:
    """A (sub)quotient of the module (w-basis) or of its dual (eta-basis)."""

    params: Params
    dual: bool = False
    J: LBarSet | None = None

    @property
    def basis(self) -> str:
        return "eta" if self.dual else "w"

    def validate(self):
        self.params.require_generic_sum()
        if self.J is not None:
            self.params.mu2_int()

    def contains(self, idx) -> bool:
        if self.J is None:
            return True
        return self.J.contains(idx[1] - self.params.mu2_int())

    def indices(self, box: Box):
        return [idx for idx in box if self.contains(idx)]

    def action(self, gen: str, idx) -> dict:
        """{target index: coefficient} for the generator on one basis vector."""
        out = {}
        for jdx, c in BASIS_ACTIONS[self.basis](gen, self.params, idx):
            if scalar_is_zero(c) or not self.contains(jdx):
                continue
            out[jdx] = c
        return out

    def window(self, r: int) -> Box:
        lcenter = self.params.mu2_int() if self.params.mu2_integral() else 0
        return Box.radius(r, lcenter)

    def element(self, terms) -> ModuleElement:
        return ModuleElement(self.params, self.basis, terms)

    def describe(self) -> str:
        name = "dual" if self.dual else "plain"
        return f"{name}:{'full' if self.J is None else repr(self.J)}"


@dataclass
class HomSolution:
    """Diagonal intertwiner candidate phi(b_i) = x[i] b'_i on a window."""

    source: ModuleDescriptor
    target: ModuleDescriptor
    box: Box
    x: dict

    def value(self, idx):
        return self.x.get(tuple(idx), Fraction(0))

    def normalized(self) -> "HomSolution":
        for idx in sorted(self.x):
            if not scalar_is_zero(self.x[idx]):
                pivot = self.x[idx]
                scaled = {i: v / pivot for i, v in self.x.items()}
                return HomSolution(self.source, self.target, self.box, scaled)
        return self


def _check_problem(source: ModuleDescriptor, target: ModuleDescriptor):
    source.validate()
    target.validate()
    if source.params != target.params:
        raise ValueError("source and target need equal parameters")
    if (source.J is None) != (target.J is None) or (
        source.J is not None and source.J != target.J
    ):
        raise ValueError("source and target must share one index set")


def intertwiner_equations(source, target, box: Box):
    """All in-window coefficient-matching equations, as sparse rows."""
    _check_problem(source, target)
    indices = source.indices(box)
    inside = set(indices)
    rows = []
    for a in indices:
        for gen in ("e1", "e2", "f1", "f2", "e12", "f12"):
            src = source.action(gen, a)
            tgt = target.action(gen, a)
            for j in set(src) | set(tgt):
                if j not in inside:
                    if box.contains(j):
                        raise AssertionError("truncation kept an index outside J")
                    continue  # unknown outside the window: drop the equation
                row = {}
                cs = src.get(j)
                ct = tgt.get(j)
                if cs is not None:
                    row[j] = cs
                if ct is not None:
                    row[a] = row.get(a, 0) - ct
                row = {c: v for c, v in row.items() if not scalar_is_zero(v)}
                if row:
                    rows.append(row)
    return indices, rows


def solve_intertwiner(source, target, box: Box):
    """Exact basis of diagonal intertwiners on the window, seed-normalized."""
    if box.kmax - box.kmin < 2 or box.mmax < 1:
        raise ValueError("window too small: need at least one step of margin")
    indices, rows = intertwiner_equations(source, target, box)
    if not indices:
        raise ValueError("window does not meet the index set")
    basis = nullspace(rows, indices)
    return [
        HomSolution(source, target, box, vec).normalized() for vec in basis
    ]


def verify_solution(sol: HomSolution):
    """Violated equations for a coefficient family; empty list means exact."""
    indices, rows = intertwiner_equations(sol.source, sol.target, sol.box)
    bad = []
    for row in rows:
        total = 0
        for idx, coeff in row.items():
            total = total + coeff * sol.value(idx)
        if not scalar_is_zero(total):
            bad.append(row)
    return bad


_STEP_GENERATOR = {0: "e1", 1: "e2", 2: "e12"}


def solve_by_recurrence(source, target, seed_idx, seed_value, box: Box):
    """Propagate the one-step ratio recurrences outward from a seed.

    Steps in the k, l, m directions use the e1, e2, e12 comparison
    equations.  A vanishing ratio denominator aborts with
    ObstructionAtIndex: no invertible intertwiner passes through there.
    """
    _check_problem(source, target)
    seed_idx = tuple(seed_idx)
    if not (box.contains(seed_idx) and source.contains(seed_idx)):
        raise ValueError("seed index outside the window")
    x = {seed_idx: seed_value}
    queue = deque([seed_idx])
    inside = set(source.indices(box))
    while queue:
        a = queue.popleft()
        for axis in (0, 1, 2):
            gen = _STEP_GENERATOR[axis]
            for direction in (-1, +1):
                step = [0, 0, 0]
                step[axis] = direction
                nxt = (a[0] + step[0], a[1] + step[1], a[2] + step[2])
                if nxt in x or nxt not in inside:
                    continue
                # the comparison equation lives at the higher of the two
                hi, lo = (a, nxt) if direction < 0 else (nxt, a)
                cs = source.action(gen, hi).get(lo)
                ct = target.action(gen, hi).get(lo)
                cs_zero = cs is None or scalar_is_zero(cs)
                ct_zero = ct is None or scalar_is_zero(ct)
                if cs_zero and ct_zero:
                    continue  # no information along this edge
                if direction < 0:
                    # know x[hi], need x[lo]: cs*x[lo] = ct*x[hi]
                    if cs_zero:
                        raise ObstructionAtIndex(
                            hi, gen, "source coefficient vanishes"
                        )
                    value = (0 if ct_zero else ct * x[a]) / cs
                else:
                    # know x[lo], need x[hi]: cs*x[lo] = ct*x[hi]
                    if ct_zero:
                        raise ObstructionAtIndex(
                            hi, gen, "target coefficient vanishes"
                        )
                    value = (0 if cs_zero else cs * x[a]) / ct
                x[nxt] = value
                queue.append(nxt)
    missing = [i for i in inside if i not in x]
    if missing:
        raise ValueError(f"window indices unreachable from seed: {missing[:3]}")
    return HomSolution(source, target, box, x)


def image_kernel(sol: HomSolution):
    """(image, kernel) as lbar-interval sets, or None where levels are mixed.

    Levels touching the window boundary extend to the unbounded side when
    the descriptor's index set is unbounded there.
    """
    p = sol.source.params
    t = p.mu2_int()
    nonzero = {}
    for idx in sol.source.indices(sol.box):
        lev = idx[1] - t
        val = not scalar_is_zero(sol.x.get(idx, 0))
        if lev in nonzero and nonzero[lev] != val:
            return None, None
        nonzero[lev] = val
    J = sol.source.J if sol.source.J is not None else LBarSet.all()
    lo_window = sol.box.lmin - t
    hi_window = sol.box.lmax - t
    unbounded_below = any(lo is None for lo, _ in J.intervals)
    unbounded_above = any(hi is None for _, hi in J.intervals)

    def levels_to_set(levels):
        if not levels:
            return LBarSet.empty()
        runs = []
        start = prev = None
        for lev in sorted(levels):
            if start is None:
                start = prev = lev
            elif lev == prev + 1:
                prev = lev
            else:
                runs.append((start, prev))
                start = prev = lev
        runs.append((start, prev))
        out = []
        for lo, hi in runs:
            if lo == lo_window and unbounded_below:
                lo = None
            if hi == hi_window and unbounded_above:
                hi = None
            out.append((lo, hi))
        return LBarSet(out)

    image = levels_to_set({lev for lev, nz in nonzero.items() if nz})
    kernel = levels_to_set({lev for lev, nz in nonzero.items() if not nz})
    return image, kernel


# ---------------------------------------------------------------------------
# closed-form coefficient families

def closed_form_xabc(idx, p: Params):
    """Coefficients of the isomorphism from the dual onto the full module
    at parameters with mu1, mu2, mu1+mu2 all non-integral; normalized so the
    value at (0, 0, 0) is 1."""
    from .errors import NonGenericParameters

    if p.mu1_integral() or p.mu2_integral() or p.sum_integral():
        raise NonGenericParameters("family needs mu1, mu2, mu1+mu2 outside Z")
    k, l, m = idx
    kb = p.kbar(k)
    lb = p.lbar(l)
    mu1 = p.mu1
    mu2 = p.mu2
    out = (
        (-1) ** m
        * raising_factorial(kb + lb, m)
        * mu1
        * mu2
        / (kb * lb * math.factorial(m))
    )
    if k >= 0:
        out = out * raising_factorial(-mu1 - 1, k) / raising_factorial(-mu1 - mu2 - 1, k)
    else:
        out = out * falling_factorial(-2 - mu1 - mu2, -k) / falling_factorial(-2 - mu1, -k)
    if l >= 0:
        out = out * raising_factorial(-mu2 - 1, l) / raising_factorial(kb - mu2 - 1, l)
    else:
        out = out * falling_factorial(kb - mu2 - 2, -l) / falling_factorial(-2 - mu2, -l)
    return out


def closed_form_l01_phi(idx, p: Params):
    """Dual -> plain family on the lbar in {0,1} band: supported on lbar = 0,
    seed value 1 at (0, mu2, 0)."""
    t = p.mu2_int()
    k, l, m = idx
    lb = l - t
    if lb == 1:
        return Fraction(0)
    if lb != 0:
        raise ValueError(f"index {idx} outside the lbar in {{0,1}} band")
    kb = p.kbar(k)
    mu1 = p.mu1
    if m == 0:
        return -mu1 / kb
    return -mu1 * (-1) ** m * raising_factorial(kb + 1, m - 1) / math.factorial(m)


def closed_form_l01_psi(idx, p: Params):
    """Plain -> dual family on the lbar in {0,1} band: supported on lbar = 1,
    seed value 1 at (0, mu2+1, 0)."""
    t = p.mu2_int()
    k, l, m = idx
    lb = l - t
    if lb == 0:
        return Fraction(0)
    if lb != 1:
        raise ValueError(f"index {idx} outside the lbar in {{0,1}} band")
    kb = p.kbar(k)
    mu1 = p.mu1
    return (
        (-1) ** m
        * math.factorial(m)
        / raising_factorial(kb + 1, m)
        * kb
        * (kb - 1)
        / (mu1 * (mu1 + 1))
    )


def _k_branch(kb, lb, mu1, k: int):
    if k >= 0:
        return raising_factorial(lb - mu1 - 1, k) / raising_factorial(-mu1 - 1, k)
    return falling_factorial(-mu1 - 2, -k) / falling_factorial(lb - mu1 - 2, -k)


def closed_form_lge2(idx, p: Params):
    """Plain -> dual family supported on lbar >= 2, seed 1 at (0, mu2+2, 0)."""
    t = p.mu2_int()
    k, l, m = idx
    lb = l - t
    if lb < 2:
        return Fraction(0)
    kb = p.kbar(k)
    mu1 = p.mu1
    out = (
        (-1) ** m
        * math.factorial(m)
        / raising_factorial(kb + lb, m)
        * (-kb / mu1)
        * _k_branch(kb, lb, mu1, k)
    )
    if lb >= 3:
        middle = math.factorial(lb - 3) if lb >= 5 else 1
        out = out * lb * raising_factorial(1 - mu1, lb - 2) / (2 * (lb - 2) * middle)
    return out


def closed_form_lle_minus1(idx, p: Params):
    """Self-duality family on lbar <= -1, seed 1 at (0, mu2-1, 0).

    Satisfies the plain -> dual equation system exactly (solver-verified);
    the inverse coefficients give the dual -> plain direction.
    """
    t = p.mu2_int()
    k, l, m = idx
    lb = l - t
    if lb > -1:
        raise ValueError(f"index {idx} outside lbar <= -1")
    kb = p.kbar(k)
    mu1 = p.mu1
    out = (
        (-1) ** m
        * math.factorial(m)
        / raising_factorial(kb + lb, m)
        * (-kb / mu1)
        * _k_branch(kb, lb, mu1, k)
    )
    if lb <= -2:
        three_up = math.factorial(-lb + 1) // 2
        out = out * (-lb) * three_up / raising_factorial(mu1 + 3, -lb - 1)
    return out


def family_solution(name: str, source, target, box: Box) -> HomSolution:
    """Evaluate one named closed-form family over a window."""
    funcs = {
        "xabc": closed_form_xabc,
        "l01_phi": closed_form_l01_phi,
        "l01_psi": closed_form_l01_psi,
        "lge2": closed_form_lge2,
        "lle_minus1": closed_form_lle_minus1,
    }
    fn = funcs[name]
    p = source.params
    x = {}
    for idx in source.indices(box):
        v = fn(idx, p)
        if not scalar_is_zero(v):
            x[idx] = v
    return HomSolution(source, target, box, x)
