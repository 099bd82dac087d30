"""Fans of toric varieties.

Structural validation, divisor class group with its degree map, Cartier
data of invariant divisors, ampleness, the anticanonical divisor and the
transition exponents of local trivializations.

Conventions fixed here and relied on everywhere else:

* the divisor map sends a character ``m`` to the pairing vector
  ``(<m, v_ray>)_ray``, so its matrix has one row per ray;
* the local equation of a divisor on the chart of a maximal cone ``s`` is
  the character ``-m_s``, and the transition exponent between charts is
  ``g[s, t] = m_s - m_t``.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .errors import MalformedFan, NotCartier, NotComplete, NotSmooth, RaysDontSpan
from .lattice import (
    AbelianGroupPresentation,
    IntegerMatrix,
    LatticeMap,
    Vector,
    cokernel,
    hermite_basis,
    kernel_basis,
    rational_rank,
    smith_normal_form,
    solve_integer,
)
from .polyhedral import cone_from_generators, cone_intersection


@dataclass(frozen=True)
class Fan:
    """Rays (primitive vectors in the cocharacter lattice) plus maximal cones as ray-index sets."""

    dim: int
    rays: tuple[Vector, ...]
    max_cones: tuple[tuple[int, ...], ...]

    @staticmethod
    def make(dim: int, rays: Sequence[Sequence[int]], max_cones: Sequence[Sequence[int]]) -> "Fan":
        """Canonical form: each cone sorted, cones sorted; rays keep their order."""
        return Fan(
            dim=dim,
            rays=tuple(tuple(int(x) for x in r) for r in rays),
            max_cones=tuple(sorted(tuple(sorted(int(i) for i in cone)) for cone in max_cones)),
        )

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def ray_matrix(self) -> IntegerMatrix:
        """The divisor map as a matrix: one row per ray, acting on characters."""
        return IntegerMatrix.from_rows(self.rays)

    def cone_rays(self, cone: Sequence[int]) -> tuple[Vector, ...]:
        return tuple(self.rays[i] for i in cone)


def fan_from_json(text: str) -> Fan:
    data = json.loads(text)
    if not isinstance(data, dict):
        raise MalformedFan("fan file must contain a JSON object")
    for key in ("dim", "rays", "max_cones"):
        if key not in data:
            raise MalformedFan(f"missing key {key!r}")
    dim = data["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise MalformedFan("dim must be a positive integer")
    rays = data["rays"]
    cones = data["max_cones"]
    if not isinstance(rays, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rays
    ):
        raise MalformedFan("rays must be a list of integer vectors")
    if not isinstance(cones, list) or not all(
        isinstance(c, list) and all(isinstance(i, int) for i in c) for c in cones
    ):
        raise MalformedFan("max_cones must be a list of index lists")
    return Fan.make(dim, rays, cones)


def fan_to_json(f: Fan) -> str:
    payload = {
        "dim": f.dim,
        "rays": [list(r) for r in f.rays],
        "max_cones": [list(c) for c in sorted(f.max_cones)],
    }
    return json.dumps(payload, separators=(", ", ": "))


@dataclass(frozen=True)
class FanReport:
    simplicial: bool
    smooth: bool
    complete: bool


def _check_structure(f: Fan) -> None:
    for i, ray in enumerate(f.rays):
        if len(ray) != f.dim:
            raise MalformedFan(f"ray {i} has length {len(ray)}, expected {f.dim}")
        if not any(ray):
            raise MalformedFan(f"ray {i} is zero")
        g = 0
        for x in ray:
            g = gcd(g, x)
        if g != 1:
            raise MalformedFan(f"ray {i} is not primitive")
    for i, j in itertools.combinations(range(f.n_rays), 2):
        if f.rays[i] == f.rays[j]:
            raise MalformedFan(f"rays {i} and {j} coincide")
    if not f.max_cones:
        raise MalformedFan("fan has no maximal cones")
    used: set[int] = set()
    for k, cone in enumerate(f.max_cones):
        if not cone:
            raise MalformedFan(f"cone {k} is empty")
        if len(set(cone)) != len(cone):
            raise MalformedFan(f"cone {k} repeats a ray index")
        for i in cone:
            if not 0 <= i < f.n_rays:
                raise MalformedFan(f"cone {k} references missing ray {i}")
        used.update(cone)
    if used != set(range(f.n_rays)):
        missing = sorted(set(range(f.n_rays)) - used)
        raise MalformedFan(f"ray {missing[0]} occurs in no maximal cone")
    for a, b in itertools.combinations(range(len(f.max_cones)), 2):
        if set(f.max_cones[a]) <= set(f.max_cones[b]) or set(f.max_cones[b]) <= set(f.max_cones[a]):
            raise MalformedFan(f"cones {a} and {b} are nested; maximal cones must be incomparable")


def _is_simplicial(f: Fan) -> bool:
    return all(
        rational_rank(f.cone_rays(cone)) == len(cone) for cone in f.max_cones
    )


def _check_face_intersections(f: Fan) -> None:
    cones = [
        cone_from_generators(f.cone_rays(c), f.dim) for c in f.max_cones
    ]
    for a, b in itertools.combinations(range(len(f.max_cones)), 2):
        shared = sorted(set(f.max_cones[a]) & set(f.max_cones[b]))
        expected = cone_from_generators([f.rays[i] for i in shared], f.dim)
        actual = cone_intersection(cones[a], cones[b])
        if actual.generators != expected.generators:
            raise MalformedFan(
                f"cones {a} and {b} intersect beyond their shared rays"
            )


def _is_smooth(f: Fan) -> bool:
    # Rays of each maximal cone must extend to a lattice basis: the Smith
    # diagonal of the ray matrix is all ones (for square matrices, det +-1).
    for cone in f.max_cones:
        matrix = IntegerMatrix.from_rows(f.cone_rays(cone))
        _, d, _ = smith_normal_form(matrix)
        diag = [d.entries[i][i] for i in range(min(d.rows, d.cols))]
        if len(diag) < len(cone) or any(x != 1 for x in diag):
            return False
    return True


def _is_complete(f: Fan) -> bool:
    # Facet pairing; only valid for simplicial full-dimensional fans.
    if any(len(cone) != f.dim for cone in f.max_cones):
        return False
    facet_count: dict[frozenset[int], int] = {}
    for cone in f.max_cones:
        for facet in itertools.combinations(cone, f.dim - 1):
            key = frozenset(facet)
            facet_count[key] = facet_count.get(key, 0) + 1
    return all(count == 2 for count in facet_count.values())


@functools.lru_cache(maxsize=None)
def validate_fan(f: Fan) -> FanReport:
    """Structural validation plus the simplicial / smooth / complete flags.

    Structural violations raise MalformedFan naming the offending ray or
    cone.  Completeness is decided by facet pairing, which is sound for
    the simplicial full-dimensional fans this package supports;
    non-simplicial input is reported as neither smooth nor complete.
    """
    _check_structure(f)
    simplicial = _is_simplicial(f)
    if not simplicial:
        return FanReport(simplicial=False, smooth=False, complete=False)
    _check_face_intersections(f)
    return FanReport(
        simplicial=True,
        smooth=_is_smooth(f),
        complete=_is_complete(f),
    )


def require_smooth_complete(f: Fan) -> FanReport:
    report = validate_fan(f)
    if not report.smooth:
        raise NotSmooth("fan has a non-unimodular maximal cone")
    if not report.complete:
        raise NotComplete("fan is not complete")
    return report


@dataclass(frozen=True)
class TorusInvariantDivisor:
    """An invariant divisor as its coefficient vector, one integer per ray."""

    coefficients: Vector

    @staticmethod
    def make(coefficients: Sequence[int]) -> "TorusInvariantDivisor":
        return TorusInvariantDivisor(tuple(int(x) for x in coefficients))

    def __add__(self, other: "TorusInvariantDivisor") -> "TorusInvariantDivisor":
        return TorusInvariantDivisor(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "TorusInvariantDivisor":
        return TorusInvariantDivisor(tuple(-a for a in self.coefficients))


def class_group(f: Fan) -> tuple[AbelianGroupPresentation, LatticeMap]:
    """Divisor class group and the degree map Z^rays -> Cl.

    The class lattice basis is the Hermite basis of the annihilator of the
    divisor map, so the degree matrix is canonical.  Exactness of
    divisors -> classes is verified on the spot for torsion-free groups.
    """
    validate_fan(f)
    div = f.ray_matrix()
    if rational_rank(f.rays) != f.dim:
        raise RaysDontSpan("rays do not span the ambient space")
    presentation = cokernel(div)
    degree_map = LatticeMap(presentation.projection)
    if presentation.is_free:
        for m in range(f.dim):
            unit = [0] * f.dim
            unit[m] = 1
            if any(degree_map(div.mat_vec(unit))):
                raise AssertionError("degree map fails to kill principal divisors")
        image_basis = hermite_basis(div.columns(), f.n_rays)
        kernel = kernel_basis(degree_map.matrix)
        if hermite_basis(kernel.columns(), f.n_rays) != image_basis:
            raise AssertionError("kernel of the degree map differs from the divisor image")
    return presentation, degree_map


@dataclass(frozen=True)
class CartierData:
    """Per maximal cone, the character m_s with <m_s, v_ray> = -a_ray on the cone."""

    characters: tuple[Vector, ...]


def cartier_data(f: Fan, divisor: TorusInvariantDivisor) -> CartierData:
    report = validate_fan(f)
    if not report.smooth:
        raise NotSmooth("Cartier data computed only on smooth fans")
    if len(divisor.coefficients) != f.n_rays:
        raise ValueError("divisor has the wrong number of coefficients")
    characters = []
    for cone in f.max_cones:
        rows = IntegerMatrix.from_rows(f.cone_rays(cone))
        rhs = [-divisor.coefficients[i] for i in cone]
        solution = solve_integer(rows, rhs)
        if solution is None:
            raise NotCartier(f"no integral trivialization on cone {cone}")
        characters.append(solution)
    return CartierData(tuple(characters))


@dataclass(frozen=True)
class CechCocycle:
    """Transition exponents g[s, t] = m_s - m_t for ordered pairs of maximal cones."""

    transitions: tuple[tuple[tuple[int, int], Vector], ...]

    def exponent(self, s: int, t: int) -> Vector:
        for key, value in self.transitions:
            if key == (s, t):
                return value
        raise KeyError((s, t))

    def __add__(self, other: "CechCocycle") -> "CechCocycle":
        if len(self.transitions) != len(other.transitions):
            raise ValueError("cocycles over different covers")
        merged = []
        for (key, value), (key2, value2) in zip(self.transitions, other.transitions):
            if key != key2:
                raise ValueError("cocycles over different covers")
            merged.append((key, tuple(a + b for a, b in zip(value, value2))))
        return CechCocycle(tuple(merged))


def cech_transitions(f: Fan, divisor: TorusInvariantDivisor) -> CechCocycle:
    data = cartier_data(f, divisor)
    pairs = []
    for s, t in itertools.permutations(range(len(f.max_cones)), 2):
        diff = tuple(a - b for a, b in zip(data.characters[s], data.characters[t]))
        pairs.append(((s, t), diff))
    return CechCocycle(tuple(pairs))


def is_ample(f: Fan, divisor: TorusInvariantDivisor) -> bool:
    """Strict convexity of the support function on a smooth complete fan."""
    require_smooth_complete(f)
    data = cartier_data(f, divisor)
    for k, cone in enumerate(f.max_cones):
        inside = set(cone)
        m = data.characters[k]
        for rho in range(f.n_rays):
            if rho in inside:
                continue
            if sum(a * b for a, b in zip(m, f.rays[rho])) <= -divisor.coefficients[rho]:
                return False
    return True


def anticanonical(f: Fan) -> TorusInvariantDivisor:
    validate_fan(f)
    return TorusInvariantDivisor((1,) * f.n_rays)
