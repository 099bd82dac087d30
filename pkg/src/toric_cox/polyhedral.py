"""Exact rational cones and polytopes.

Cones are stored in canonical double description: a minimal generator set
together with the matching facet-normal set, both primitive and sorted, so
duality is an involution on the nose.  All enumeration is exact; the sizes
this package handles (ambient dimension below ~10, a handful of
generators) make brute-force subset enumeration the simplest correct
choice.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .errors import NotPointed, UnboundedPolytope
from .lattice import (
    IntegerMatrix,
    Vector,
    kernel_basis,
    primitive_vector,
    rational_rank,
    solve_rational,
)


def _unit_vectors(dim: int) -> list[Vector]:
    out = []
    for i in range(dim):
        e = [0] * dim
        e[i] = 1
        out.append(tuple(e))
        out.append(tuple(-x for x in e))
    return out


def _dual_generators(vectors: Sequence[Vector], dim: int) -> tuple[Vector, ...]:
    """Minimal generator set of {y : <g, y> >= 0 for all g in vectors}.

    Lineality (the kernel of the stacked vectors) contributes plus/minus
    basis pairs; the pointed part is found by brute force over subsets of
    rank one less than the input rank, which at desk scale is cheap and
    provably finds every extreme ray exactly once up to dedup.
    """
    rows = sorted({primitive_vector(v) for v in vectors if any(v)})
    if not rows:
        return tuple(sorted(_unit_vectors(dim)))
    matrix = IntegerMatrix.from_rows(rows)
    lineality = kernel_basis(matrix).columns()
    out: set[Vector] = set()
    for basis_vec in lineality:
        p = primitive_vector(basis_vec)
        out.add(p)
        out.add(tuple(-x for x in p))
    rank = rational_rank(rows)
    if rank >= 1:
        for subset in itertools.combinations(rows, rank - 1):
            stacked = list(subset) + [list(l) for l in lineality]
            if stacked:
                candidates = kernel_basis(IntegerMatrix.from_rows(stacked))
            else:
                candidates = IntegerMatrix.identity(dim)
            if candidates.cols != 1:
                continue
            y = candidates.column(0)
            products = [sum(a * b for a, b in zip(g, y)) for g in rows]
            if all(p >= 0 for p in products):
                out.add(primitive_vector(y))
            elif all(p <= 0 for p in products):
                out.add(primitive_vector(tuple(-x for x in y)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class RationalCone:
    """Polyhedral cone in canonical form: minimal primitive generators and facet normals.

    The cone is exactly {x : <normal, x> >= 0 for every facet normal}; a
    lower-dimensional cone carries its cutting equations as plus/minus
    normal pairs, a cone with lineality carries plus/minus generator pairs.
    """

    ambient_dim: int
    generators: tuple[Vector, ...]
    facet_normals: tuple[Vector, ...]

    def contains(self, point: Sequence[int], mode: Literal["closure", "relative_interior"] = "closure") -> bool:
        return cone_contains(self, point, mode)

    @property
    def dim(self) -> int:
        return rational_rank(self.generators) if self.generators else 0

    def is_pointed(self) -> bool:
        gens = set(self.generators)
        return not any(tuple(-x for x in g) in gens for g in gens)


def cone_from_generators(generators: Sequence[Sequence[int]], ambient_dim: int) -> RationalCone:
    gens = [tuple(int(x) for x in g) for g in generators]
    if any(len(g) != ambient_dim for g in gens):
        raise ValueError("generator dimension mismatch")
    normals = _dual_generators([g for g in gens], ambient_dim)
    canonical = _dual_generators(normals, ambient_dim)
    return RationalCone(ambient_dim, canonical, normals)


def cone_from_inequalities(normals: Sequence[Sequence[int]], ambient_dim: int) -> RationalCone:
    norm = [tuple(int(x) for x in h) for h in normals]
    gens = _dual_generators(norm, ambient_dim)
    canonical_normals = _dual_generators(gens, ambient_dim)
    return RationalCone(ambient_dim, gens, canonical_normals)


def dual_cone(c: RationalCone) -> RationalCone:
    """The cone {y : <y, x> >= 0 for all x in c}; an involution in canonical form."""
    return RationalCone(c.ambient_dim, c.facet_normals, c.generators)


def cone_contains(
    c: RationalCone,
    point: Sequence[int],
    mode: Literal["closure", "relative_interior"] = "closure",
) -> bool:
    if len(point) != c.ambient_dim:
        raise ValueError(f"point dimension {len(point)} != ambient {c.ambient_dim}")
    if mode not in ("closure", "relative_interior"):
        raise ValueError(f"unknown mode {mode!r}")
    normals = set(c.facet_normals)
    for h in c.facet_normals:
        value = sum(a * b for a, b in zip(h, point))
        if mode == "closure":
            if value < 0:
                return False
        else:
            is_equation = tuple(-x for x in h) in normals
            if is_equation:
                if value != 0:
                    return False
            elif value <= 0:
                return False
    return True


def cone_intersection(a: RationalCone, b: RationalCone) -> RationalCone:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return cone_from_inequalities(list(a.facet_normals) + list(b.facet_normals), a.ambient_dim)


@dataclass(frozen=True)
class RationalPolytope:
    """Intersection of half spaces <normal, m> >= -offset."""

    ambient_dim: int
    inequalities: tuple[tuple[Vector, int], ...]

    @staticmethod
    def from_inequalities(items: Sequence[tuple[Sequence[int], int]], ambient_dim: int) -> "RationalPolytope":
        ineqs = tuple((tuple(int(x) for x in normal), int(offset)) for normal, offset in items)
        if any(len(n) != ambient_dim for n, _ in ineqs):
            raise ValueError("inequality dimension mismatch")
        return RationalPolytope(ambient_dim, ineqs)

    def satisfies(self, point: Sequence[int | Fraction]) -> bool:
        return all(
            sum(a * b for a, b in zip(normal, point)) >= -offset
            for normal, offset in self.inequalities
        )


def recession_cone(p: RationalPolytope) -> RationalCone:
    return cone_from_inequalities([normal for normal, _ in p.inequalities], p.ambient_dim)


def polytope_vertices(p: RationalPolytope) -> tuple[tuple[Fraction, ...], ...]:
    """All vertices, by exact solves over dimension-sized subsets of the inequalities."""
    d = p.ambient_dim
    seen: set[tuple[Fraction, ...]] = set()
    for subset in itertools.combinations(p.inequalities, d):
        rows = [normal for normal, _ in subset]
        rhs = [-offset for _, offset in subset]
        solution = solve_rational(rows, rhs)
        if solution is None:
            continue
        if p.satisfies(solution):
            seen.add(solution)
    return tuple(sorted(seen))


def polytope_lattice_points(p: RationalPolytope) -> tuple[Vector, ...]:
    """All integer points of a bounded polytope, sorted lexicographically.

    Raises UnboundedPolytope when the recession cone is nonzero; scans the
    integer bounding box of the vertex set otherwise.
    """
    if recession_cone(p).generators:
        raise UnboundedPolytope("polytope has a recession direction")
    vertices = polytope_vertices(p)
    if not vertices:
        return ()
    ranges = []
    for c in range(p.ambient_dim):
        coords = [v[c] for v in vertices]
        ranges.append(range(math.ceil(min(coords)), math.floor(max(coords)) + 1))
    return tuple(pt for pt in itertools.product(*ranges) if p.satisfies(pt))


@dataclass(frozen=True)
class WeightForm:
    """Integral linear form, nonnegative on a fixed effective cone and >= 1 on its
    nonzero lattice points."""

    coefficients: Vector

    def __call__(self, v: Sequence[int]) -> int:
        if len(v) != len(self.coefficients):
            raise ValueError("length mismatch")
        return sum(a * b for a, b in zip(self.coefficients, v))


def hilbert_basis(c: RationalCone) -> tuple[Vector, ...]:
    """Minimal generating set of the monoid of lattice points of a pointed cone.

    Bounded enumeration: every irreducible element lies in the zonotope of
    the generators, so scanning its integer bounding box suffices at desk
    scale.
    """
    if not c.is_pointed():
        raise NotPointed("Hilbert basis requires a pointed cone")
    if not c.generators:
        return ()
    ranges = []
    for coord in range(c.ambient_dim):
        lo = sum(min(0, g[coord]) for g in c.generators)
        hi = sum(max(0, g[coord]) for g in c.generators)
        ranges.append(range(lo, hi + 1))
    candidates = [
        pt
        for pt in itertools.product(*ranges)
        if any(pt) and cone_contains(c, pt, "closure")
    ]
    candidate_set = set(candidates)
    basis = []
    for h in candidates:
        reducible = False
        for a in candidate_set:
            if a == h:
                continue
            diff = tuple(x - y for x, y in zip(h, a))
            if cone_contains(c, diff, "closure") and any(diff):
                reducible = True
                break
        if not reducible:
            basis.append(h)
    return tuple(sorted(basis))


def strictly_positive_form(eff: RationalCone, lattice_rank: int) -> WeightForm:
    """Deterministic integral form positive on every nonzero lattice point of ``eff``.

    Rule: sum the primitive generators of the dual cone, then rescale by
    the least positive integer making the form >= 1 on the Hilbert basis.
    For integral data the rescale is always 1, but the rule is kept
    explicit.
    """
    if eff.ambient_dim != lattice_rank:
        raise ValueError("cone does not live in the stated lattice")
    if not eff.is_pointed():
        raise NotPointed("effective cone contains a line")
    base = tuple(sum(col) for col in zip(*eff.facet_normals)) if eff.facet_normals else (0,) * lattice_rank
    values = []
    for h in hilbert_basis(eff):
        value = sum(a * b for a, b in zip(base, h))
        if value <= 0:
            raise NotPointed("dual-ray sum fails to be positive; cone is degenerate")
        values.append(value)
    scale = max((-(-1 // v) for v in values), default=1)
    form = WeightForm(tuple(scale * x for x in base))
    for g in eff.generators:
        if form(g) <= 0:
            raise NotPointed("form not positive on a generator")
    return form
