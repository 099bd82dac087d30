"""Graded dimensions (dual oracle), monomial bases, effective cone, weight
form, irrelevant ideal and the shift identity."""

import itertools
from fractions import Fraction

import pytest

from toric_cox.cox import (
    cox_data,
    divisor_in_class,
    effective_cone,
    effective_weight_form,
    graded_dimension,
    irrelevant_ideal,
    monomial_basis,
    section_polytope,
    shift_module_degree,
)
from toric_cox.errors import NotComplete, NotSmooth
from toric_cox.fans import Fan, TorusInvariantDivisor
from toric_cox.polyhedral import cone_contains, polytope_lattice_points


class TestCoxData:
    def test_variable_count_is_dim_plus_rank(self, corpus_cox):
        for name, cd in corpus_cox.items():
            assert cd.num_vars == cd.fan.dim + cd.cl_rank, name

    def test_rejects_incomplete_fan(self):
        with pytest.raises(NotComplete):
            cox_data(Fan.make(2, [[1, 0], [0, 1]], [[0, 1]]))

    def test_rejects_singular_fan(self):
        with pytest.raises(NotSmooth):
            cox_data(Fan.make(2, [[1, 0], [1, 2]], [[0, 1]]))

    def test_custom_names(self, p2):
        cd = cox_data(p2, variable_names=("x", "y", "z"))
        assert str(cd.monomial((1, 2, 0))) == "x*y^2"


class TestGradedDimension:
    def test_p2_degree_two(self, corpus_cox):
        assert graded_dimension(corpus_cox["p2"], (2,)) == 6

    def test_constants(self, corpus_cox):
        for cd in corpus_cox.values():
            assert graded_dimension(cd, (0,) * cd.cl_rank) == 1

    def test_hirzebruch_fiber_class(self, corpus_cox):
        cd = corpus_cox["hirzebruch_1"]
        # two monomials in the fiber class (the two fiber variables)
        assert graded_dimension(cd, (1, 0)) == 2

    def test_binomial_series_on_p2(self, corpus_cox):
        cd = corpus_cox["p2"]
        for d in range(7):
            assert graded_dimension(cd, (d,)) == (d + 1) * (d + 2) // 2

    def test_oracles_agree_on_window(self, corpus_cox):
        for name in ("p1", "p2", "p1xp1", "hirzebruch_2"):
            cd = corpus_cox[name]
            for lam in itertools.product(range(-3, 4), repeat=cd.cl_rank):
                graded_dimension(cd, lam)  # raises OracleMismatch on any bug


class TestMonomialBasis:
    def test_p2_linear_forms(self, corpus_cox):
        assert monomial_basis(corpus_cox["p2"], (1,)) == (
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        )

    def test_outside_effective_cone(self, corpus_cox):
        assert monomial_basis(corpus_cox["hirzebruch_1"], (-1, 0)) == ()

    def test_p1xp1_bidegree_one_one(self, corpus_cox):
        basis = monomial_basis(corpus_cox["p1xp1"], (1, 1))
        assert len(basis) == 4

    def test_length_matches_dimension(self, corpus_cox):
        for name in ("p2", "hirzebruch_1", "delpezzo6"):
            cd = corpus_cox[name]
            for lam in itertools.product(range(0, 2), repeat=cd.cl_rank):
                assert len(monomial_basis(cd, lam)) == graded_dimension(cd, lam)

    def test_every_monomial_has_the_right_class(self, corpus_cox):
        cd = corpus_cox["delpezzo6"]
        lam = (1, 1, 1, 1)
        for e in monomial_basis(cd, lam):
            assert cd.degree_of_exponent(e) == lam


class TestEffectiveCone:
    def test_p2(self, corpus_cox):
        assert effective_cone(corpus_cox["p2"]).generators == ((1,),)

    def test_hirzebruch_one(self, corpus_cox):
        # quadrant in the (fiber, section) basis; the interior degree (1,1)
        # of the fourth variable is not extremal
        eff = effective_cone(corpus_cox["hirzebruch_1"])
        assert eff.generators == ((0, 1), (1, 0))

    def test_p1xp1_quadrant(self, corpus_cox):
        assert effective_cone(corpus_cox["p1xp1"]).generators == ((0, 1), (1, 0))

    def test_positive_dimensions_only_inside(self, corpus_cox):
        for name in ("p2", "p1xp1", "hirzebruch_3"):
            cd = corpus_cox[name]
            eff = effective_cone(cd)
            for lam in itertools.product(range(-3, 4), repeat=cd.cl_rank):
                if graded_dimension(cd, lam) > 0:
                    assert cone_contains(eff, lam)

    def test_lattice_points_of_cone_are_realized_on_corpus(self, corpus_cox):
        # the converse direction, checked empirically on a bounded window
        for name, cd in corpus_cox.items():
            eff = effective_cone(cd)
            radius = 2 if cd.cl_rank <= 2 else 1
            for lam in itertools.product(range(-radius, radius + 1), repeat=cd.cl_rank):
                if cone_contains(eff, lam):
                    assert graded_dimension(cd, lam) > 0 or not any(lam), (name, lam)


class TestWeightForm:
    def test_p2(self, corpus_cox):
        assert effective_weight_form(corpus_cox["p2"]).coefficients == (1,)

    def test_hirzebruch_one(self, corpus_cox):
        form = effective_weight_form(corpus_cox["hirzebruch_1"])
        assert form.coefficients == (1, 1)
        # reads (1, 2) in the alternative basis used in test_fans; the values
        # on the variable degrees are basis independent
        cd = corpus_cox["hirzebruch_1"]
        assert [form(d) for d in cd.variable_degrees()] == [1, 1, 1, 2]

    def test_p1xp1(self, corpus_cox):
        assert effective_weight_form(corpus_cox["p1xp1"]).coefficients == (1, 1)

    def test_at_least_one_on_variable_degrees(self, corpus_cox):
        for cd in corpus_cox.values():
            form = effective_weight_form(cd)
            assert all(form(d) >= 1 for d in cd.variable_degrees())

    def test_linearity_on_monomials(self, corpus_cox):
        cd = corpus_cox["hirzebruch_2"]
        form = effective_weight_form(cd)
        weights = [form(d) for d in cd.variable_degrees()]
        for e in monomial_basis(cd, (2, 1)):
            weight = sum(a * b for a, b in zip(weights, e))
            assert weight == form(cd.degree_of_exponent(e))


class TestIrrelevantIdeal:
    def test_p2_is_the_maximal_ideal(self, corpus_cox):
        # complements of the three maximal cones are the single rays
        ideal = irrelevant_ideal(corpus_cox["p2"])
        assert ideal.generators == ((0, 0, 1), (0, 1, 0), (1, 0, 0))

    def test_p1(self, corpus_cox):
        assert irrelevant_ideal(corpus_cox["p1"]).generators == ((0, 1), (1, 0))

    def test_p1xp1_quadratic_monomials(self, corpus_cox):
        ideal = irrelevant_ideal(corpus_cox["p1xp1"])
        # one product x_i * x_j per maximal cone complement: exactly the
        # pairs mixing the two rulings
        assert ideal.generators == (
            (0, 1, 0, 1),
            (0, 1, 1, 0),
            (1, 0, 0, 1),
            (1, 0, 1, 0),
        )

    def test_generators_pairwise_incomparable(self, corpus_cox):
        for cd in corpus_cox.values():
            gens = irrelevant_ideal(cd).generators
            for a, b in itertools.permutations(gens, 2):
                assert not all(x >= y for x, y in zip(a, b))


class TestShiftModuleDegree:
    def test_zero_divisor(self, corpus_cox):
        cd = corpus_cox["p2"]
        assert shift_module_degree(cd, TorusInvariantDivisor.make([0, 0, 0])) == (0,)

    def test_p2_two_lines(self, corpus_cox):
        cd = corpus_cox["p2"]
        assert shift_module_degree(cd, TorusInvariantDivisor.make([1, 1, 0])) == (2,)

    def test_hirzebruch_one_section_ray(self, corpus_cox):
        cd = corpus_cox["hirzebruch_1"]
        divisor = TorusInvariantDivisor.make([0, 1, 0, 0])
        assert shift_module_degree(cd, divisor) == (0, 1)

    def test_sections_match_shifted_ring_pieces(self, corpus_cox):
        # dim H^0(O(D + D_mu)) computed from the translated polytope equals
        # the ring piece in class mu + shift, for a window of mu
        cd = corpus_cox["hirzebruch_1"]
        divisor = TorusInvariantDivisor.make([1, 0, 2, 1])
        shift = shift_module_degree(cd, divisor)
        for mu in itertools.product(range(-2, 3), repeat=2):
            twist = divisor_in_class(cd, mu)
            polytope = section_polytope(cd, divisor + twist)
            sections = len(polytope_lattice_points(polytope))
            target = tuple(a + b for a, b in zip(mu, shift))
            assert sections == graded_dimension(cd, target)


class TestGradedPolynomialArithmetic:
    def test_degree_and_homogeneity(self, corpus_cox):
        cd = corpus_cox["p2"]
        p = cd.monomial((1, 1, 0)) + cd.monomial((0, 0, 2))
        assert p.degree == (2,)
        q = p + cd.monomial((1, 0, 0))
        assert q.degree is None and not q.is_homogeneous()

    def test_product_rule_for_classes(self, corpus_cox):
        cd = corpus_cox["hirzebruch_1"]
        a = cd.monomial((1, 0, 0, 0))
        b = cd.monomial((0, 0, 0, 1), Fraction(1, 2))
        assert (a * b).degree == (2, 1)

    def test_partial_derivative(self, corpus_cox):
        cd = corpus_cox["p2"]
        p = cd.monomial((1, 2, 0))
        assert p.partial(1) == cd.monomial((1, 1, 0), 2)
        assert p.partial(2).is_zero()
