from fractions import Fraction

import pytest

from gtsl3.errors import ObstructionAtIndex
from gtsl3.hom import (
    ModuleDescriptor,
    closed_form_l01_phi,
    closed_form_l01_psi,
    closed_form_lge2,
    closed_form_lle_minus1,
    closed_form_xabc,
    family_solution,
    image_kernel,
    solve_by_recurrence,
    solve_intertwiner,
    verify_solution,
)
from gtsl3.module import Box, Params
from gtsl3.solver import nullspace
from gtsl3.subquotient import LBarSet

P0 = Params(Fraction(1, 3), Fraction(0))
PG = Params(Fraction(1, 3), Fraction(1, 5))


class TestNullspace:
    def test_unique_up_to_scale(self):
        rows = [{"x": Fraction(2), "y": Fraction(-1)}]
        basis = nullspace(rows, ["x", "y"])
        assert len(basis) == 1
        v = basis[0]
        assert v["x"] * Fraction(2) == v["y"]

    def test_forced_zero(self):
        rows = [{"x": Fraction(1)}, {"y": Fraction(1), "z": Fraction(-1)}]
        basis = nullspace(rows, ["x", "y", "z"])
        assert len(basis) == 1
        assert "x" not in basis[0]

    def test_full_rank_gives_empty_basis(self):
        rows = [
            {"x": Fraction(1), "y": Fraction(1)},
            {"x": Fraction(1), "y": Fraction(-1)},
        ]
        assert nullspace(rows, ["x", "y"]) == []

    def test_no_rows_gives_full_space(self):
        assert len(nullspace([], ["a", "b", "c"])) == 3


HOM_CASES = [
    # (J, source dual, target dual, image, kernel)
    (LBarSet.between(0, 1), True, False, LBarSet.eq(0), LBarSet.eq(1)),
    (LBarSet.between(0, 1), False, True, LBarSet.eq(1), LBarSet.eq(0)),
    (LBarSet.ge(1), True, False, LBarSet.eq(1), LBarSet.ge(2)),
    (LBarSet.ge(1), False, True, LBarSet.ge(2), LBarSet.eq(1)),
    (LBarSet.ge(0), True, False, LBarSet.eq(0), LBarSet.ge(1)),
    (LBarSet.ge(0), False, True, LBarSet.ge(2), LBarSet.between(0, 1)),
]


@pytest.mark.parametrize("J,sdual,tdual,img,ker", HOM_CASES)
def test_hom_spaces_are_lines_with_the_stated_image_and_kernel(
    J, sdual, tdual, img, ker
):
    src = ModuleDescriptor(P0, dual=sdual, J=J)
    tgt = ModuleDescriptor(P0, dual=tdual, J=J)
    sols = solve_intertwiner(src, tgt, src.window(4))
    assert len(sols) == 1
    got_img, got_ker = image_kernel(sols[0])
    assert got_img == img
    assert got_ker == ker


def test_identity_problem_has_constant_solution():
    tgt = ModuleDescriptor(PG, dual=False)
    sols = solve_intertwiner(tgt, tgt, Box.radius(3))
    assert len(sols) == 1
    assert set(sols[0].x.values()) == {Fraction(1)}


def test_full_self_duality_dimension_one_at_generic_parameters():
    src = ModuleDescriptor(PG, dual=True)
    tgt = ModuleDescriptor(PG, dual=False)
    sols = solve_intertwiner(src, tgt, Box.radius(4))
    assert len(sols) == 1


def test_phi_family_frozen_values_and_seed():
    assert closed_form_l01_phi((0, 0, 0), P0) == 1
    assert closed_form_l01_phi((1, 0, 0), P0) == Fraction(-1, 2)
    assert closed_form_l01_phi((0, 0, 1), P0) == Fraction(1, 3)
    assert closed_form_l01_phi((3, 1, 2), P0) == 0


def test_psi_family_frozen_values_and_seed():
    assert closed_form_l01_psi((0, 1, 0), P0) == 1
    assert closed_form_l01_psi((0, 0, 2), P0) == 0


def test_xabc_frozen_values():
    assert closed_form_xabc((0, 0, 0), PG) == 1
    assert closed_form_xabc((0, 0, 1), PG) == Fraction(8, 15)
    # one step in k equals the displayed ratio applied to the seed
    kb = PG.kbar(1)
    lb = PG.lbar(0)
    ratio = ((kb - 1) * (kb - 2) * (kb + lb - 1)) / (kb * (kb + lb - 1) * (kb + lb - 2))
    assert closed_form_xabc((1, 0, 0), PG) == ratio


def test_families_satisfy_their_equations_specialized():
    cases = [
        ("l01_phi", LBarSet.between(0, 1), True, False),
        ("l01_psi", LBarSet.between(0, 1), False, True),
        ("lge2", LBarSet.ge(0), False, True),
        ("lle_minus1", LBarSet.le(-1), False, True),
    ]
    for name, J, sdual, tdual in cases:
        src = ModuleDescriptor(P0, dual=sdual, J=J)
        tgt = ModuleDescriptor(P0, dual=tdual, J=J)
        fam = family_solution(name, src, tgt, src.window(3))
        assert verify_solution(fam) == [], name


def test_xabc_satisfies_equations_and_matches_recurrence():
    src = ModuleDescriptor(PG, dual=True)
    tgt = ModuleDescriptor(PG, dual=False)
    box = Box.radius(3)
    fam = family_solution("xabc", src, tgt, box)
    assert verify_solution(fam) == []
    rec = solve_by_recurrence(src, tgt, (0, 0, 0), Fraction(1), box)
    assert all(rec.value(i) == fam.value(i) for i in src.indices(box))


def test_solver_solution_is_proportional_to_the_family():
    J = LBarSet.between(0, 1)
    src = ModuleDescriptor(P0, dual=True, J=J)
    tgt = ModuleDescriptor(P0, dual=False, J=J)
    box = src.window(4)
    sol = solve_intertwiner(src, tgt, box)[0]
    fam = family_solution("l01_phi", src, tgt, box)
    scale = sol.value((0, 0, 0))
    assert all(sol.value(i) == scale * fam.value(i) for i in src.indices(box))


def test_recurrence_seed_scaling_is_linear():
    src = ModuleDescriptor(PG, dual=True)
    tgt = ModuleDescriptor(PG, dual=False)
    box = Box.radius(2)
    one = solve_by_recurrence(src, tgt, (0, 0, 0), Fraction(1), box)
    two = solve_by_recurrence(src, tgt, (0, 0, 0), Fraction(2), box)
    assert all(two.value(i) == 2 * one.value(i) for i in src.indices(box))


def test_obstruction_for_integral_mu2_on_the_e2_comparison():
    src = ModuleDescriptor(P0, dual=False)
    tgt = ModuleDescriptor(P0, dual=True)
    with pytest.raises(ObstructionAtIndex) as exc:
        solve_by_recurrence(src, tgt, (0, 0, 0), Fraction(1), Box.radius(3))
    assert exc.value.generator == "e2"
    assert exc.value.index[1] - P0.mu2_int() == 0  # the lbar = 0 wall


def test_obstruction_for_integral_mu1_on_the_e1_comparison():
    p = Params(Fraction(0), Fraction(1, 5))
    src = ModuleDescriptor(p, dual=False)
    tgt = ModuleDescriptor(p, dual=True)
    with pytest.raises(ObstructionAtIndex) as exc:
        solve_by_recurrence(src, tgt, (0, 0, 0), Fraction(1), Box.radius(3))
    assert exc.value.generator == "e1"
    assert exc.value.index[0] == 0  # kbar = k - 0 vanishes there


def test_no_obstruction_at_generic_parameters():
    src = ModuleDescriptor(PG, dual=False)
    tgt = ModuleDescriptor(PG, dual=True)
    sol = solve_by_recurrence(src, tgt, (0, 0, 0), Fraction(1), Box.radius(2))
    assert all(v != 0 for v in sol.x.values())


def test_lle_family_direction_is_plain_to_dual():
    J = LBarSet.le(-1)
    plain = ModuleDescriptor(P0, dual=False, J=J)
    dualm = ModuleDescriptor(P0, dual=True, J=J)
    box = plain.window(3)
    fam = family_solution("lle_minus1", plain, dualm, box)
    assert verify_solution(fam) == []
    # inverse coefficients solve the opposite direction
    inv = family_solution("lle_minus1", dualm, plain, box)
    inv.x = {i: 1 / v for i, v in fam.x.items()}
    assert verify_solution(inv) == []


def test_lle_seed_and_sample_value():
    assert closed_form_lle_minus1((0, -1, 0), P0) == 1
    assert closed_form_lge2((0, 2, 0), P0) == 1
    assert closed_form_lge2((0, 0, 0), P0) == 0  # below the support


def test_descriptor_validation():
    with pytest.raises(ValueError):
        solve_intertwiner(
            ModuleDescriptor(P0, dual=True, J=LBarSet.ge(0)),
            ModuleDescriptor(P0, dual=False, J=LBarSet.ge(1)),
            Box.radius(2),
        )
    bad = Params(Fraction(1, 3), Fraction(2, 3))
    from gtsl3.errors import NonGenericParameters

    with pytest.raises(NonGenericParameters):
        solve_intertwiner(
            ModuleDescriptor(bad, dual=True), ModuleDescriptor(bad, dual=False),
            Box.radius(2),
        )
