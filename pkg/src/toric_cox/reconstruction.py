"""Inverse construction: from grading data back to the fan.

Given a surjective degree matrix and a class in the interior of the
effective cone, the rays are read off from the kernel of the grading (Gale
duality) and the fan is the normal fan of the polytope cut out by any
integral lift of the class.  The result is always validated; failures are
structured errors, never partial fans.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import (
    DegenerateRay,
    MalformedFan,
    NotAmpleLift,
    NotSmooth,
    NotSurjective,
)
from .fans import (
    Fan,
    TorusInvariantDivisor,
    anticanonical,
    class_group,
    is_ample,
    require_smooth_complete,
    validate_fan,
)
from .lattice import (
    IntegerMatrix,
    Vector,
    cokernel,
    kernel_basis,
    primitive_vector,
    rational_rank,
    solve_integer,
)
from .polyhedral import (
    RationalPolytope,
    cone_contains,
    cone_from_generators,
    polytope_vertices,
    recession_cone,
)


@dataclass(frozen=True)
class GradingInput:
    """Degree matrix (rows = class lattice) plus a distinguished ample class."""

    degree_matrix: IntegerMatrix
    ample_class: Vector

    def __post_init__(self) -> None:
        if len(self.ample_class) != self.degree_matrix.rows:
            raise ValueError("class vector length must match the matrix row count")


def grading_from_json(text: str) -> GradingInput:
    data = json.loads(text)
    if not isinstance(data, dict) or "Q" not in data or "w" not in data:
        raise MalformedFan("grading file must be an object with keys 'Q' and 'w'")
    q = data["Q"]
    w = data["w"]
    if not isinstance(q, list) or not all(
        isinstance(row, list) and all(isinstance(x, int) for x in row) for row in q
    ):
        raise MalformedFan("'Q' must be a list of integer rows")
    if not isinstance(w, list) or not all(isinstance(x, int) for x in w):
        raise MalformedFan("'w' must be an integer vector")
    return GradingInput(IntegerMatrix.from_rows(q), tuple(w))


def _require_surjective(q: IntegerMatrix) -> None:
    presentation = cokernel(q)
    if presentation.free_rank or presentation.invariant_factors:
        raise NotSurjective("grading matrix does not surject onto the class lattice")


def gale_dual_rays(gi: GradingInput) -> IntegerMatrix:
    """Primitivized rows of the canonical kernel basis of the grading matrix."""
    _require_surjective(gi.degree_matrix)
    kernel = kernel_basis(gi.degree_matrix)
    rows = []
    for i in range(kernel.rows):
        row = kernel.row(i)
        if not any(row):
            raise DegenerateRay(f"kernel row {i} is zero")
        rows.append(primitive_vector(row))
    return IntegerMatrix.from_rows(rows)


def _row_multiplier(row: Vector) -> int:
    g = 0
    for x in row:
        g = gcd(g, x)
    return g


def _reconstruct_from_kernel(
    q: IntegerMatrix,
    ample_class: Vector,
    kernel: IntegerMatrix,
    lift: Sequence[int] | None = None,
) -> Fan:
    n = kernel.cols
    rays = []
    for i in range(kernel.rows):
        row = kernel.row(i)
        if not any(row):
            raise DegenerateRay(f"kernel row {i} is zero")
        if _row_multiplier(row) != 1:
            raise NotSmooth(f"kernel row {i} is not primitive; grading is not smooth toric data")
        rays.append(row)
    effective = cone_from_generators(q.columns(), q.rows)
    if not cone_contains(effective, ample_class, "relative_interior"):
        raise NotAmpleLift("class is not interior to the effective cone")
    if lift is None:
        lift = solve_integer(q, ample_class)
        if lift is None:
            raise NotAmpleLift("class does not lift to an integral divisor")
    else:
        if q.mat_vec(lift) != tuple(ample_class):
            raise ValueError("provided lift has the wrong class")
    polytope = RationalPolytope.from_inequalities(
        [(ray, a) for ray, a in zip(rays, lift)], n
    )
    if recession_cone(polytope).generators:
        raise NotAmpleLift("lifted polyhedron is unbounded; rays do not positively span")
    vertices = polytope_vertices(polytope)
    if not vertices or _affine_rank(vertices) != n:
        raise NotAmpleLift("lifted polytope is not full-dimensional")
    max_cones = []
    active_anywhere: set[int] = set()
    for vertex in vertices:
        active = tuple(
            i
            for i, (ray, a) in enumerate(zip(rays, lift))
            if sum(c * x for c, x in zip(ray, vertex)) == -a
        )
        active_anywhere.update(active)
        max_cones.append(active)
    if active_anywhere != set(range(len(rays))):
        raise NotAmpleLift("some ray is inactive on the lifted polytope")
    fan = Fan.make(n, rays, sorted(max_cones))
    try:
        report = validate_fan(fan)
    except MalformedFan as exc:
        raise NotSmooth(f"normal fan is not a valid smooth fan: {exc}") from exc
    if not (report.smooth and report.complete):
        raise NotSmooth("normal fan is not smooth and complete")
    return fan


def _affine_rank(points: Sequence[tuple[Fraction, ...]]) -> int:
    if len(points) < 2:
        return 0
    base = points[0]
    diffs = []
    for p in points[1:]:
        delta = [x - y for x, y in zip(p, base)]
        denominator = 1
        for value in delta:
            denominator = denominator * value.denominator // gcd(denominator, value.denominator)
        diffs.append([int(x * denominator) for x in delta])
    return rational_rank(diffs)


def reconstruct_fan(gi: GradingInput) -> Fan:
    """Normal fan of a lifted polytope for the given grading and interior class.

    Errors: NotSurjective (grading not onto), DegenerateRay (a zero kernel
    row), NotSmooth (non-primitive kernel row or a non-unimodular vertex
    cone), NotAmpleLift (degenerate polytope or inactive ray).
    """
    _require_surjective(gi.degree_matrix)
    kernel = kernel_basis(gi.degree_matrix)
    return _reconstruct_from_kernel(gi.degree_matrix, gi.ample_class, kernel)


def roundtrip_check(f: Fan, ample_divisor: TorusInvariantDivisor) -> bool:
    """Fan -> grading -> fan is the identity, using the fan's own ray matrix as kernel.

    The divisor must be ample; the comparison is literal on the ray matrix
    (same order) and on the maximal cones as sets.
    """
    require_smooth_complete(f)
    if not is_ample(f, ample_divisor):
        raise NotAmpleLift("divisor is not ample")
    _, degree_map = class_group(f)
    target_class = degree_map(ample_divisor.coefficients)
    rebuilt = _reconstruct_from_kernel(degree_map.matrix, target_class, f.ray_matrix())
    return rebuilt.rays == f.rays and set(map(frozenset, rebuilt.max_cones)) == set(
        map(frozenset, f.max_cones)
    )


@dataclass(frozen=True)
class SplittingCertificate:
    """Witness that the section module splits with one line-bundle twist per ray."""

    rank: int
    degree_multiset: tuple[Vector, ...]
    anticanonical_check: bool
    divisor_match: bool


def splitting_certificate(f: Fan) -> SplittingCertificate:
    """Rank and twist classes of the canonical splitting, with the degree-sum check."""
    require_smooth_complete(f)
    _, degree_map = class_group(f)
    degrees = sorted(degree_map.matrix.columns())
    total = tuple(sum(col) for col in zip(*degrees))
    anticanonical_class = degree_map(anticanonical(f).coefficients)
    column_set = set(degree_map.matrix.columns())
    return SplittingCertificate(
        rank=f.n_rays,
        degree_multiset=tuple(degrees),
        anticanonical_check=(total == anticanonical_class),
        divisor_match=all(d in column_set for d in degrees),
    )
