"""Fan validation, class groups, Cartier data, transitions and ampleness."""

import itertools

import pytest

from toric_cox.errors import MalformedFan, NotComplete, RaysDontSpan
from toric_cox.fans import (
    Fan,
    TorusInvariantDivisor,
    anticanonical,
    cartier_data,
    cech_transitions,
    class_group,
    fan_from_json,
    fan_to_json,
    is_ample,
    validate_fan,
)
from toric_cox.lattice import IntegerMatrix, kernel_basis, hermite_basis


def unimodular_change_of_basis(q_from: IntegerMatrix, q_to: IntegerMatrix):
    """T with T * q_from = q_to, if one exists; used to compare degree matrices
    computed in different class-lattice bases."""
    from toric_cox.lattice import solve_integer, smith_normal_form

    rows = []
    for i in range(q_to.rows):
        # solve row_i(T) * q_from = row_i(q_to), i.e. q_from^T x = target
        x = solve_integer(q_from.transpose(), q_to.row(i))
        if x is None:
            return None
        rows.append(x)
    t = IntegerMatrix.from_rows(rows)
    _, d, _ = smith_normal_form(t)
    if all(d.entries[i][i] == 1 for i in range(t.rows)):
        return t
    return None


class TestValidateFan:
    def test_projective_plane(self, p2):
        report = validate_fan(p2)
        assert (report.simplicial, report.smooth, report.complete) == (True, True, True)

    def test_affine_plane_incomplete(self):
        fan = Fan.make(2, [[1, 0], [0, 1]], [[0, 1]])
        assert validate_fan(fan).complete is False

    def test_singular_cone(self):
        fan = Fan.make(2, [[1, 0], [1, 2]], [[0, 1]])
        report = validate_fan(fan)
        assert report.simplicial and not report.smooth

    def test_every_corpus_fan_is_smooth_complete(self, corpus):
        for name, fan in corpus.items():
            report = validate_fan(fan)
            assert report.smooth and report.complete, name

    @pytest.mark.parametrize(
        "rays, cones, fragment",
        [
            ([[2, 0], [0, 1], [-1, -1]], [[0, 1], [1, 2], [0, 2]], "primitive"),
            ([[1, 0], [1, 0], [-1, -1]], [[0, 1], [1, 2], [0, 2]], "coincide"),
            ([[1, 0], [0, 1]], [[0, 5]], "missing ray"),
            ([[1, 0], [0, 1], [-1, -1]], [[0, 1]], "no maximal cone"),
            ([[1, 0], [0, 1]], [[0, 1], [0]], "nested"),
            ([[1, 0], [0, 1]], [[0, 0, 1]], "repeats"),
        ],
    )
    def test_malformed_inputs_cite_the_problem(self, rays, cones, fragment):
        with pytest.raises(MalformedFan, match=fragment):
            validate_fan(Fan.make(2, rays, cones))

    def test_overlapping_cones_rejected(self):
        # two cones overlap in a two-dimensional region but share one ray
        fan = Fan.make(2, [[1, 0], [0, 1], [-1, 2]], [[0, 1], [0, 2]])
        with pytest.raises(MalformedFan, match="intersect"):
            validate_fan(fan)

    def test_json_round_trip(self, p2):
        assert fan_from_json(fan_to_json(p2)) == p2


class TestClassGroup:
    def test_projective_plane(self, p2):
        pres, q = class_group(p2)
        assert pres.free_rank == 1 and pres.is_free
        assert q.matrix.entries == ((1, 1, 1),)

    def test_p1xp1_degrees(self, p1xp1):
        _, q = class_group(p1xp1)
        assert q.matrix.columns() == ((1, 0), (1, 0), (0, 1), (0, 1))

    def test_hirzebruch_one_degrees(self, hirzebruch_1):
        _, q = class_group(hirzebruch_1)
        # canonical basis here is (fiber class, section class)
        assert q.matrix.columns() == ((1, 0), (0, 1), (1, 0), (1, 1))
        # equivalent, up to a unimodular change of basis, to the presentation
        # with degrees (1,0), (-1,1), (1,0), (0,1)
        other = IntegerMatrix.from_rows([[1, -1, 1, 0], [0, 1, 0, 1]])
        t = unimodular_change_of_basis(q.matrix, other)
        assert t is not None
        assert t.mul(q.matrix).entries == other.entries

    def test_rays_must_span(self):
        fan = Fan.make(2, [[1, 0], [-1, 0]], [[0], [1]])
        with pytest.raises(RaysDontSpan):
            class_group(fan)

    def test_rank_and_exactness_on_corpus(self, corpus):
        for name, fan in corpus.items():
            pres, q = class_group(fan)
            assert pres.is_free, name
            assert pres.free_rank == fan.n_rays - fan.dim, name
            div = fan.ray_matrix()
            assert q.matrix.mul(div).is_zero(), name
            kernel = kernel_basis(q.matrix)
            assert hermite_basis(kernel.columns(), fan.n_rays) == hermite_basis(
                div.columns(), fan.n_rays
            ), name

    def test_principal_divisors_have_degree_zero(self, corpus):
        for fan in corpus.values():
            _, q = class_group(fan)
            for m in range(fan.dim):
                unit = [0] * fan.dim
                unit[m] = 1
                principal = fan.ray_matrix().mat_vec(unit)
                assert not any(q(principal))


class TestCartierData:
    def test_projective_plane_coordinate_divisor(self, p2):
        data = cartier_data(p2, TorusInvariantDivisor.make([1, 0, 0]))
        assert data.characters[0] == (-1, 0)  # cone on rays 0,1

    def test_zero_divisor(self, p2):
        data = cartier_data(p2, TorusInvariantDivisor.make([0, 0, 0]))
        assert all(m == (0, 0) for m in data.characters)

    def test_p1_anticanonical(self, p1):
        data = cartier_data(p1, TorusInvariantDivisor.make([1, 1]))
        assert data.characters == ((-1,), (1,))

    def test_defining_equations_hold_on_corpus(self, corpus):
        for fan in corpus.values():
            divisor = TorusInvariantDivisor.make(range(fan.n_rays))
            data = cartier_data(fan, divisor)
            for cone, m in zip(fan.max_cones, data.characters):
                for i in cone:
                    pairing = sum(a * b for a, b in zip(m, fan.rays[i]))
                    assert pairing == -divisor.coefficients[i]


class TestCechTransitions:
    def test_zero_divisor_trivial(self, p2):
        cocycle = cech_transitions(p2, TorusInvariantDivisor.make([0, 0, 0]))
        assert all(v == (0, 0) for _, v in cocycle.transitions)

    def test_projective_plane_value(self, p2):
        cocycle = cech_transitions(p2, TorusInvariantDivisor.make([1, 0, 0]))
        # canonical cone order is (0,1), (0,2), (1,2); the transition from
        # the chart on rays 0,1 to the chart on rays 1,2 is (-1,0) - (0,0)
        assert p2.max_cones == ((0, 1), (0, 2), (1, 2))
        assert cocycle.exponent(0, 2) == (-1, 0)

    def test_additivity(self, hirzebruch_1):
        d1 = TorusInvariantDivisor.make([0, 0, 1, 0])
        d2 = TorusInvariantDivisor.make([0, 0, 0, 1])
        lhs = cech_transitions(hirzebruch_1, d1 + d2)
        rhs = cech_transitions(hirzebruch_1, d1) + cech_transitions(hirzebruch_1, d2)
        assert lhs == rhs

    def test_cocycle_identity_on_corpus(self, corpus):
        for fan in corpus.values():
            divisor = TorusInvariantDivisor.make([1] * fan.n_rays)
            cocycle = cech_transitions(fan, divisor)
            indices = range(len(fan.max_cones))
            for s, t in itertools.permutations(indices, 2):
                assert cocycle.exponent(s, t) == tuple(
                    -x for x in cocycle.exponent(t, s)
                )
            for s, t, u in itertools.permutations(indices, 3):
                summed = tuple(
                    a + b
                    for a, b in zip(cocycle.exponent(s, t), cocycle.exponent(t, u))
                )
                assert summed == cocycle.exponent(s, u)


class TestIsAmple:
    def test_coordinate_divisor_on_p2(self, p2):
        assert is_ample(p2, TorusInvariantDivisor.make([1, 0, 0]))

    def test_zero_divisor_not_ample(self, p2):
        assert not is_ample(p2, TorusInvariantDivisor.make([0, 0, 0]))

    def test_semiample_class_on_hirzebruch(self, hirzebruch_1):
        assert not is_ample(hirzebruch_1, TorusInvariantDivisor.make([0, 0, 0, 1]))

    def test_incomplete_fan_rejected(self):
        fan = Fan.make(2, [[1, 0], [0, 1]], [[0, 1]])
        with pytest.raises(NotComplete):
            is_ample(fan, TorusInvariantDivisor.make([1, 1]))

    def test_anticanonical_ample_exactly_on_fano_corpus(self, corpus):
        fano = {"p1", "p2", "p1xp1", "hirzebruch_0", "hirzebruch_1", "delpezzo6"}
        for name, fan in corpus.items():
            assert is_ample(fan, anticanonical(fan)) == (name in fano), name


class TestAnticanonical:
    def test_p2_class(self, p2):
        _, q = class_group(p2)
        assert q(anticanonical(p2).coefficients) == (3,)

    def test_hirzebruch_one_class(self, hirzebruch_1):
        _, q = class_group(hirzebruch_1)
        # (3, 2) in the canonical (fiber, section) basis; the same class reads
        # (1, 2) in the basis used by test_hirzebruch_one_degrees
        assert q(anticanonical(hirzebruch_1).coefficients) == (3, 2)
        t = IntegerMatrix.from_rows([[1, -1], [0, 1]])
        assert t.mat_vec((3, 2)) == (1, 2)

    def test_p1_class(self, p1):
        _, q = class_group(p1)
        assert q(anticanonical(p1).coefficients) == (2,)

    def test_coefficients_all_one(self, corpus):
        for fan in corpus.values():
            assert anticanonical(fan).coefficients == (1,) * fan.n_rays
