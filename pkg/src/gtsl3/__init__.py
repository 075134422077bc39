"""Exact symbolic engine for a two-parameter family of Gelfand-Tsetlin
sl3-modules: three explicit bases, the full sl3 action, duals, subquotients,
and window-exact intertwiner solving."""

from . import dual as _dual  # noqa: F401  (registers the eta-basis action)
from .errors import (
    BasisMismatch,
    NonGenericParameters,
    ObstructionAtIndex,
    RequiresIntegralMu2,
)
from .module import (
    Box,
    ModuleElement,
    Params,
    act,
    act_cartan,
    act_lie,
    act_word,
    basis_vector,
    casimir_apply,
    gt_eigenvalue,
    u_to_w,
    u_vector,
    w_to_u,
    w_vector,
    weight_of,
)
from .dual import eta_vector, pairing
from .scalars import (
    MU1,
    MU2,
    BiPoly,
    RatFunc,
    Rational,
    binomial,
    falling_factorial,
    format_scalar,
    parse_scalar,
    raising_factorial,
)
from .sections import act_section
from .subquotient import LBarSet, act_l01_fastpath, act_truncated, classify, is_closed
from .hom import (
    HomSolution,
    ModuleDescriptor,
    closed_form_l01_phi,
    closed_form_l01_psi,
    closed_form_lge2,
    closed_form_lle_minus1,
    closed_form_xabc,
    image_kernel,
    solve_by_recurrence,
    solve_intertwiner,
)
from .explore import (
    GenerationCertificate,
    character_table,
    dual_generate,
    exact_sequence_check,
    generate,
    product_formula_character,
    relaxed_verma_check,
    split_eigencomponents,
)

__version__ = "0.1.0"

__all__ = [
    "BasisMismatch",
    "BiPoly",
    "Box",
    "GenerationCertificate",
    "HomSolution",
    "LBarSet",
    "ModuleDescriptor",
    "ModuleElement",
    "MU1",
    "MU2",
    "NonGenericParameters",
    "ObstructionAtIndex",
    "Params",
    "RatFunc",
    "Rational",
    "RequiresIntegralMu2",
    "act",
    "act_cartan",
    "act_l01_fastpath",
    "act_lie",
    "act_section",
    "act_truncated",
    "act_word",
    "basis_vector",
    "binomial",
    "casimir_apply",
    "character_table",
    "classify",
    "closed_form_l01_phi",
    "closed_form_l01_psi",
    "closed_form_lge2",
    "closed_form_lle_minus1",
    "closed_form_xabc",
    "dual_generate",
    "eta_vector",
    "exact_sequence_check",
    "falling_factorial",
    "format_scalar",
    "generate",
    "gt_eigenvalue",
    "image_kernel",
    "is_closed",
    "pairing",
    "parse_scalar",
    "product_formula_character",
    "raising_factorial",
    "relaxed_verma_check",
    "solve_by_recurrence",
    "solve_intertwiner",
    "split_eigencomponents",
    "u_to_w",
    "u_vector",
    "w_to_u",
    "w_vector",
    "weight_of",
]
