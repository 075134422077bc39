"""The fixed sl3 presentation: eight basis symbols, structure constants,
the involution tau, and the quadratic Casimir.

Structure constants are not typed in by hand.  They are generated at import
time from the 3x3 elementary-matrix realization (the oracle), which removes
transcription risk; the test suite re-derives the table independently and
checks the Jacobi identity on all 512 basis triples.

tau (h_i -> -h_i, e_1 <-> f_1, e_2 <-> f_2, e_12 <-> -f_12) is validated by
the oracle as a genuine automorphism: tau([x, y]) = [tau(x), tau(y)] holds
on all 64 basis pairs.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import scalar_is_zero

GENERATORS = ("e1", "e2", "e12", "f1", "f2", "f12", "h1", "h2")

_E = {}


def _unit(i, j):
    m = [[Fraction(0)] * 3 for _ in range(3)]
    m[i][j] = Fraction(1)
    return tuple(tuple(row) for row in m)


_E["e1"] = _unit(0, 1)
_E["e2"] = _unit(1, 2)
_E["e12"] = _unit(0, 2)
_E["f1"] = _unit(1, 0)
_E["f2"] = _unit(2, 1)
_E["f12"] = _unit(2, 0)
_E["h1"] = tuple(
    tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(_unit(0, 0), _unit(1, 1))
)
_E["h2"] = tuple(
    tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(_unit(1, 1), _unit(2, 2))
)


def matrix_oracle(gen: str):
    """3x3 matrix realization of a basis symbol, rows as tuples."""
    return _E[gen]


def mat_mul(x, y):
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def mat_sub(x, y):
    return tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(x, y))


def mat_bracket(x, y):
    return mat_sub(mat_mul(x, y), mat_mul(y, x))


def mat_trace(x) -> Fraction:
    return x[0][0] + x[1][1] + x[2][2]


def decompose(mat) -> dict:
    """Write a traceless 3x3 matrix in the eight-symbol basis."""
    if mat_trace(mat) != 0:
        raise ValueError("matrix is not traceless")
    coeffs = {
        "e1": mat[0][1],
        "e2": mat[1][2],
        "e12": mat[0][2],
        "f1": mat[1][0],
        "f2": mat[2][1],
        "f12": mat[2][0],
        "h1": mat[0][0],
        "h2": -mat[2][2],
    }
    return {g: c for g, c in coeffs.items() if c}


# {(x, y): {gen: coeff}} for all 64 ordered pairs
STRUCTURE = {
    (x, y): decompose(mat_bracket(_E[x], _E[y])) for x in GENERATORS for y in GENERATORS
}

# alpha_i(h_j) read off [h_j, e_i] = alpha_i(h_j) e_i
CARTAN_MATRIX = {
    (i, j): STRUCTURE[(f"h{j}", f"e{i}")].get(f"e{i}", Fraction(0))
    for i in (1, 2)
    for j in (1, 2)
}

ALPHA1 = (CARTAN_MATRIX[(1, 1)], CARTAN_MATRIX[(1, 2)])  # values on (h1, h2)
ALPHA2 = (CARTAN_MATRIX[(2, 1)], CARTAN_MATRIX[(2, 2)])
RHO = (ALPHA1[0] + ALPHA2[0], ALPHA1[1] + ALPHA2[1])


def lie(coeffs=None) -> dict:
    """A Lie algebra element as {generator: coefficient}, zeros dropped."""
    out = {}
    if coeffs:
        for g, c in coeffs.items():
            if g not in GENERATORS:
                raise ValueError(f"unknown generator {g!r}")
            if not scalar_is_zero(c):
                out[g] = c
    return out


def lie_add(x: dict, y: dict) -> dict:
    out = dict(x)
    for g, c in y.items():
        s = out.get(g, 0) + c
        if scalar_is_zero(s):
            out.pop(g, None)
        else:
            out[g] = s
    return out


def lie_scale(c, x: dict) -> dict:
    if scalar_is_zero(c):
        return {}
    return {g: c * v for g, v in x.items()}


def bracket(x: dict, y: dict) -> dict:
    """Bilinear extension of the structure-constant table."""
    out = {}
    for gx, cx in x.items():
        for gy, cy in y.items():
            for g, c in STRUCTURE[(gx, gy)].items():
                s = out.get(g, 0) + cx * cy * c
                if scalar_is_zero(s):
                    out.pop(g, None)
                else:
                    out[g] = s
    return out


_TAU = {
    "h1": {"h1": Fraction(-1)},
    "h2": {"h2": Fraction(-1)},
    "e1": {"f1": Fraction(1)},
    "f1": {"e1": Fraction(1)},
    "e2": {"f2": Fraction(1)},
    "f2": {"e2": Fraction(1)},
    "e12": {"f12": Fraction(-1)},
    "f12": {"e12": Fraction(-1)},
}


def tau(x) -> dict:
    """The standard involution, extended linearly."""
    if isinstance(x, str):
        return dict(_TAU[x])
    out = {}
    for g, c in x.items():
        for h, s in _TAU[g].items():
            out[h] = out.get(h, 0) + c * s
    return {g: c for g, c in out.items() if not scalar_is_zero(c)}


def trace_form(x: str, y: str) -> Fraction:
    return mat_trace(mat_mul(_E[x], _E[y]))


def _dual_basis():
    """g^i with tr(g_i g^j) = delta_ij, via the inverse Gram matrix."""
    gens = GENERATORS
    gram = [[trace_form(a, b) for b in gens] for a in gens]
    n = len(gens)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(gram)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    duals = []
    for i in range(n):
        duals.append({gens[j]: inv[j][i] for j in range(n) if inv[j][i]})
    return duals


def casimir_word():
    """Quadratic Casimir as a list of (coefficient, word) pairs.

    Words are generator tuples, leftmost applied last.  Built from dual
    bases for the trace form, so it commutes with every generator; the
    module layer checks that it acts by one common scalar.
    """
    terms = []
    for g, dual in zip(GENERATORS, _dual_basis()):
        for h, c in dual.items():
            terms.append((c, (g, h)))
    return terms
