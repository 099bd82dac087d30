"""The Cox ring of a smooth complete fan as a graded polynomial ring.

One variable per ray, graded by the divisor class group through the degree
map.  Graded pieces are never materialized globally; each piece is
enumerated on demand, and its dimension is always computed by two
independent oracles (exponent-fiber counting against section-polytope
counting) which must agree.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import OracleMismatch, TorsionClassGroup
from .fans import Fan, TorusInvariantDivisor, class_group, require_smooth_complete
from .lattice import LatticeMap, Vector, solve_integer
from .polyhedral import (
    RationalCone,
    RationalPolytope,
    WeightForm,
    cone_from_generators,
    polytope_lattice_points,
    strictly_positive_form,
)


@dataclass(frozen=True)
class CoxData:
    """Variables-to-rays correspondence with the class-group grading."""

    fan: Fan
    cl_rank: int
    degree_map: LatticeMap
    variable_names: tuple[str, ...]

    @property
    def num_vars(self) -> int:
        return self.fan.n_rays

    def variable_degrees(self) -> tuple[Vector, ...]:
        return self.degree_map.matrix.columns()

    def degree_of_exponent(self, exponents: Sequence[int]) -> Vector:
        return self.degree_map(exponents)

    def monomial(self, exponents: Sequence[int], coefficient: int | Fraction = 1) -> "GradedPolynomial":
        return make_polynomial(self, {tuple(int(e) for e in exponents): Fraction(coefficient)})

    def variable(self, index: int) -> "GradedPolynomial":
        e = [0] * self.num_vars
        e[index] = 1
        return self.monomial(e)

    def zero(self) -> "GradedPolynomial":
        return make_polynomial(self, {})

    def one(self) -> "GradedPolynomial":
        return self.monomial((0,) * self.num_vars)


def cox_data(fan: Fan, variable_names: Sequence[str] | None = None) -> CoxData:
    """Build the graded-ring data of a smooth complete fan.

    Rejects fans whose class group has torsion: the grading lattice must
    be free for everything downstream.
    """
    require_smooth_complete(fan)
    presentation, degree_map = class_group(fan)
    if not presentation.is_free:
        raise TorsionClassGroup(
            f"class group has invariant factors {presentation.invariant_factors}"
        )
    if variable_names is None:
        variable_names = tuple(f"x{i}" for i in range(fan.n_rays))
    else:
        variable_names = tuple(variable_names)
        if len(variable_names) != fan.n_rays:
            raise ValueError("need one variable name per ray")
    return CoxData(
        fan=fan,
        cl_rank=presentation.free_rank,
        degree_map=degree_map,
        variable_names=variable_names,
    )


@dataclass(eq=True)
class GradedPolynomial:
    """Polynomial with exact rational coefficients in the Cox variables."""

    cox: CoxData
    terms: dict[Vector, Fraction] = field(default_factory=dict)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> Vector | None:
        """Common class of all monomials, or None when inhomogeneous (or zero)."""
        degrees = {self.cox.degree_of_exponent(e) for e in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({self.cox.degree_of_exponent(e) for e in self.terms}) <= 1

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.cox.num_vars, Fraction(0))

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, Fraction(0)) + c
        return make_polynomial(self.cox, merged)

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + (-1) * other

    def __neg__(self) -> "GradedPolynomial":
        return (-1) * self

    def __mul__(self, other: "GradedPolynomial | int | Fraction") -> "GradedPolynomial":
        if isinstance(other, (int, Fraction)):
            return make_polynomial(self.cox, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        out: dict[Vector, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return make_polynomial(self.cox, out)

    __rmul__ = __mul__

    def partial(self, index: int) -> "GradedPolynomial":
        """Formal partial derivative with respect to one variable."""
        out: dict[Vector, Fraction] = {}
        for e, c in self.terms.items():
            if e[index] == 0:
                continue
            lowered = list(e)
            lowered[index] -= 1
            out[tuple(lowered)] = out.get(tuple(lowered), Fraction(0)) + c * e[index]
        return make_polynomial(self.cox, out)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            factors = [
                name if power == 1 else f"{name}^{power}"
                for name, power in zip(self.cox.variable_names, e)
                if power
            ]
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts)


def make_polynomial(cox: CoxData, terms: Mapping[Sequence[int], int | Fraction]) -> GradedPolynomial:
    cleaned: dict[Vector, Fraction] = {}
    for e, c in terms.items():
        coeff = Fraction(c)
        if coeff:
            key = tuple(int(x) for x in e)
            if len(key) != cox.num_vars or any(x < 0 for x in key):
                raise ValueError(f"bad exponent vector {key}")
            cleaned[key] = coeff
    return GradedPolynomial(cox, cleaned)


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal by its minimal generating exponents (pairwise incomparable)."""

    generators: tuple[Vector, ...]


@functools.lru_cache(maxsize=None)
def effective_cone(cd: CoxData) -> RationalCone:
    """Cone spanned by the variable degrees; every graded piece is spanned by monomials."""
    return cone_from_generators(cd.variable_degrees(), cd.cl_rank)


@functools.lru_cache(maxsize=None)
def effective_weight_form(cd: CoxData) -> WeightForm:
    """Integral form positive on all nonzero effective classes, >= 1 on variable degrees."""
    form = strictly_positive_form(effective_cone(cd), cd.cl_rank)
    for degree in cd.variable_degrees():
        if form(degree) < 1:
            raise AssertionError("weight form below 1 on a variable degree")
    return form


# Largest-so-far fiber-count tables, keyed by the grading data.
_FIBER_TABLES: dict[CoxData, tuple[int, dict[Vector, int]]] = {}


def _fiber_counts(cd: CoxData, max_weight: int) -> dict[Vector, int]:
    """Number of monomials per class, for all classes of weight <= max_weight.

    Dynamic program over the variables: extending by one variable adds a
    geometric series along its degree, which the single ascending sweep
    over weight levels realizes in place.  Independent of any polytope
    geometry, so it can serve as one side of the dual-oracle check.
    """
    cached = _FIBER_TABLES.get(cd)
    if cached is not None and cached[0] >= max_weight:
        return cached[1]
    form = effective_weight_form(cd)
    zero = (0,) * cd.cl_rank
    levels: list[dict[Vector, int]] = [dict() for _ in range(max_weight + 1)]
    levels[0][zero] = 1
    for degree in cd.variable_degrees():
        w = form(degree)
        if w < 1:
            raise AssertionError("variable of nonpositive weight")
        for level in range(0, max_weight - w + 1):
            target = levels[level + w]
            for mu, count in list(levels[level].items()):
                nu = tuple(a + b for a, b in zip(mu, degree))
                target[nu] = target.get(nu, 0) + count
    table: dict[Vector, int] = {}
    for level_counts in levels:
        for mu, count in level_counts.items():
            table[mu] = table.get(mu, 0) + count
    _FIBER_TABLES[cd] = (max_weight, table)
    return table


def _fiber_dimension(cd: CoxData, class_vector: Vector) -> int:
    weight = effective_weight_form(cd)(class_vector)
    if weight < 0:
        return 0
    if any(class_vector) and weight == 0:
        return 0
    return _fiber_counts(cd, weight).get(class_vector, 0)


def section_polytope(cd: CoxData, divisor: TorusInvariantDivisor) -> RationalPolytope:
    """Characters m with div(m) + D >= 0; its lattice points give the sections of O(D)."""
    return RationalPolytope.from_inequalities(
        [(ray, a) for ray, a in zip(cd.fan.rays, divisor.coefficients)],
        cd.fan.dim,
    )


def divisor_in_class(cd: CoxData, class_vector: Sequence[int]) -> TorusInvariantDivisor:
    """A deterministic invariant divisor with the given class (the grading is surjective)."""
    lift = solve_integer(cd.degree_map.matrix, class_vector)
    if lift is None:
        raise AssertionError("degree map is surjective; lift must exist")
    return TorusInvariantDivisor(lift)


def _polytope_dimension(cd: CoxData, class_vector: Vector) -> int:
    divisor = divisor_in_class(cd, class_vector)
    return len(polytope_lattice_points(section_polytope(cd, divisor)))


def graded_dimension(cd: CoxData, class_vector: Sequence[int]) -> int:
    """Dimension of the graded piece, checked against two independent oracles."""
    lam = tuple(int(x) for x in class_vector)
    if len(lam) != cd.cl_rank:
        raise ValueError(f"class vector length {len(lam)} != rank {cd.cl_rank}")
    by_fiber = _fiber_dimension(cd, lam)
    by_polytope = _polytope_dimension(cd, lam)
    if by_fiber != by_polytope:
        raise OracleMismatch(
            f"fiber count {by_fiber} != polytope count {by_polytope} at {lam}"
        )
    return by_fiber


def monomial_basis(cd: CoxData, class_vector: Sequence[int]) -> tuple[Vector, ...]:
    """Exponent vectors of the monomials of one class, lexicographically sorted."""
    lam = tuple(int(x) for x in class_vector)
    form = effective_weight_form(cd)
    budget = form(lam)
    if budget < 0 or (budget == 0 and any(lam)):
        return ()
    degrees = cd.variable_degrees()
    weights = [form(d) for d in degrees]
    n = cd.num_vars
    found: list[Vector] = []

    def extend(prefix: list[int], remaining: Vector, budget_left: int) -> None:
        index = len(prefix)
        if index == n:
            if not any(remaining):
                found.append(tuple(prefix))
            return
        limit = budget_left // weights[index]
        for e in range(limit + 1):
            rest = tuple(a - e * b for a, b in zip(remaining, degrees[index]))
            extend(prefix + [e], rest, budget_left - e * weights[index])

    extend([], lam, budget)
    return tuple(sorted(found))


def irrelevant_ideal(cd: CoxData) -> MonomialIdeal:
    """Generated by the products of the variables outside each maximal cone."""
    raw = []
    for cone in cd.fan.max_cones:
        outside = set(range(cd.num_vars)) - set(cone)
        raw.append(tuple(1 if i in outside else 0 for i in range(cd.num_vars)))
    minimal = []
    for e in sorted(set(raw)):
        if not any(other != e and all(a >= b for a, b in zip(e, other)) for other in raw):
            minimal.append(e)
    return MonomialIdeal(tuple(minimal))


def shift_module_degree(cd: CoxData, divisor: TorusInvariantDivisor) -> Vector:
    """Class shift identifying the section module of O(D) with the shifted ring."""
    if len(divisor.coefficients) != cd.num_vars:
        raise ValueError("divisor has the wrong number of coefficients")
    return cd.degree_map(divisor.coefficients)
