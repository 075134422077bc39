from fractions import Fraction

import pytest

from gtsl3.explore import (
    character_table,
    characters_agree,
    dual_generate,
    exact_sequence_check,
    generate,
    product_formula_character,
    relaxed_verma_check,
    split_eigencomponents,
)
from gtsl3.hom import ModuleDescriptor
from gtsl3.module import Box, ModuleElement, Params, w_vector
from gtsl3.subquotient import LBarSet

P0 = Params(Fraction(1, 3), Fraction(0))
PG = Params(Fraction(1, 3), Fraction(1, 5))


class TestEigensplit:
    def test_two_components_separated_by_h1(self):
        v = w_vector(PG, 0, 0, 0) + w_vector(PG, 1, 0, 0)
        comps, sep = split_eigencomponents(v)
        assert len(comps) == 2
        assert sep == (1, 0, 0)
        triples = {c[0][0] for c in comps}
        assert triples == {Fraction(7, 15), Fraction(-23, 15)}

    def test_single_term(self):
        comps, _ = split_eigencomponents(w_vector(PG, 2, -1, 3))
        assert len(comps) == 1

    def test_same_index_collapses(self):
        v = w_vector(PG, 0, 0, 0) + w_vector(PG, 0, 0, 0).scale(Fraction(2))
        comps, _ = split_eigencomponents(v)
        assert len(comps) == 1
        assert comps[0][1].terms == {(0, 0, 0): Fraction(3)}

    def test_collision_parameters_need_a_casimir_style_separator(self):
        pc = Params(Fraction(1, 3), Fraction(2, 3))
        v = ModuleElement(pc, "u", {(0, 0, 3): Fraction(1), (2, 2, 1): Fraction(1)})
        comps, _ = split_eigencomponents(v)
        assert len(comps) == 1  # the triples genuinely collide there


class TestGeneration:
    def test_generic_parameters_cover_from_any_start(self):
        desc = ModuleDescriptor(PG, dual=False)
        box = Box.radius(3)
        cert = generate([(2, -1, 3)], desc, box)
        assert cert.covers
        assert len(cert.reached) == 7 * 7 * 4

    def test_monotone_in_window_and_start_set(self):
        desc = ModuleDescriptor(P0, dual=False)
        small = generate([(0, -1, 0)], desc, Box.radius(2))
        large = generate([(0, -1, 0)], desc, Box.radius(3))
        assert set(small.reached) <= set(large.reached)
        more = generate([(0, -1, 0), (0, 2, 0)], desc, Box.radius(3))
        assert set(large.reached) <= set(more.reached)

    def test_integral_mu2_start_on_the_wall_stays_in_its_layer(self):
        desc = ModuleDescriptor(P0, dual=False)
        cert = generate([(0, 0, 0)], desc, Box.radius(3))
        assert not cert.covers
        assert {i[1] for i in cert.reached} == {0}

    def test_integral_mu2_start_below_reaches_only_lbar_le_0(self):
        desc = ModuleDescriptor(P0, dual=False)
        cert = generate([(0, -1, 0)], desc, Box.radius(3))
        assert {i[1] for i in cert.reached} == {-3, -2, -1, 0}
        assert {i[1] for i in cert.missing} == {1, 2, 3}

    def test_paths_record_how_indices_were_reached(self):
        desc = ModuleDescriptor(PG, dual=False)
        cert = generate([(0, 0, 0)], desc, Box.radius(2))
        idx = (1, 0, 0)
        assert idx in cert.paths
        parent, gen = cert.paths[idx]
        assert parent in set(cert.reached)

    def test_simple_layer_covers_from_one_start(self):
        desc = ModuleDescriptor(P0, dual=False, J=LBarSet.ge(2))
        cert = generate([(1, 3, 1)], desc, desc.window(3))
        assert cert.covers

    def test_empty_start_is_an_error(self):
        with pytest.raises(ValueError):
            generate([], ModuleDescriptor(PG, dual=False), Box.radius(2))


class TestDualCyclicity:
    def test_integral_mu2_cyclic_vectors(self):
        box = Box.radius(3)
        for k0 in (-2, 0, 2):
            cert = dual_generate([(k0, 0, 0)], P0, box)
            assert cert.covers, k0

    def test_generic_parameters_any_start(self):
        cert = dual_generate([(1, 0, 2)], PG, Box.radius(3))
        assert cert.covers


class TestCharacters:
    def test_base_weight_has_multiplicity_one(self):
        desc = ModuleDescriptor(P0, dual=True, J=LBarSet.ge(0))
        table = character_table(desc, 4)
        assert table[(0, 0)] == 1

    def test_two_indices_share_the_weight_one_alpha2_below(self):
        # (0, mu2+1, 0) and (-1, mu2, 1) both sit at the base weight - alpha2
        desc = ModuleDescriptor(P0, dual=True, J=LBarSet.ge(0))
        table = character_table(desc, 4)
        assert table[(0, -1)] == 2

    def test_product_formula_matches_enumeration(self):
        desc = ModuleDescriptor(P0, dual=True, J=LBarSet.ge(0))
        assert characters_agree(character_table(desc, 6),
                                product_formula_character((0, 0), 6), 6) == []

    def test_dual_and_plain_tables_agree(self):
        a = ModuleDescriptor(P0, dual=True, J=LBarSet.ge(0))
        b = ModuleDescriptor(P0, dual=False, J=LBarSet.ge(0))
        assert character_table(a, 4) == character_table(b, 4)


class TestRelaxedVerma:
    @pytest.mark.parametrize("case", [1, 2, 3, 4, 5])
    def test_case_passes(self, case):
        rep = relaxed_verma_check(case, P0, r=5)
        assert rep["verdict"] == "pass", rep

    def test_frozen_f1e1_eigenvalues(self):
        from gtsl3.subquotient import act_truncated

        cases = [
            (LBarSet.ge(0), (0, 0, 0), Fraction(-4, 9)),
            (LBarSet.ge(1), (1, 1, 0), Fraction(8, 9)),
            (LBarSet.ge(2), (0, 2, 0), Fraction(-28, 9)),
        ]
        for J, idx, expected in cases:
            v = ModuleElement(P0, "eta", {idx: Fraction(1)})
            out = act_truncated("f1", act_truncated("e1", v, J), J)
            assert out.terms == {idx: expected}


def test_exact_sequence_report():
    rep = exact_sequence_check(P0)
    assert rep["verdict"] == "pass"
    assert rep["checks"]["lbar0-closed-in-band"]
    assert rep["checks"]["lbar1-not-closed-in-band"]
    assert rep["checks"]["witness-is-f1-to-m-plus-1"]
    assert rep["checks"]["quotient-action-matches-layer"]
    assert rep["witnesses"]
