"""Invariant suite run by the ``verify`` CLI command and the corpus script.

Every check is deterministic (fixed seed for the randomized ones) so two
runs on the same input produce identical reports.  The windows here are
deliberately modest to keep a single CLI run fast; the test suite
exercises the same identities over wider ranges.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .cox import cox_data, effective_weight_form, graded_dimension
from .errors import ToricCoxError
from .euler import (
    build_euler_module,
    derivation,
    euler_contract,
    graded_generation_check,
    induced_algebra_generators,
    monomials_of_weight_at_most,
)
from .fans import (
    Fan,
    TorusInvariantDivisor,
    anticanonical,
    cech_transitions,
    class_group,
    is_ample,
    validate_fan,
)
from .lattice import hermite_basis, kernel_basis
from .reconstruction import roundtrip_check, splitting_certificate


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _exactness_check(fan: Fan) -> CheckResult:
    presentation, degree_map = class_group(fan)
    div = fan.ray_matrix()
    composed_zero = degree_map.matrix.mul(div).is_zero()
    kernel = kernel_basis(degree_map.matrix)
    spans = hermite_basis(kernel.columns(), fan.n_rays) == hermite_basis(
        div.columns(), fan.n_rays
    )
    rank_ok = presentation.free_rank == fan.n_rays - fan.dim and presentation.is_free
    passed = composed_zero and spans and rank_ok
    return CheckResult(
        "class group exactness",
        passed,
        f"degrees kill principal divisors: {composed_zero}; "
        f"kernel spans divisor image: {spans}; rank {presentation.free_rank} "
        f"= {fan.n_rays} rays - dim {fan.dim}: {rank_ok}",
    )


def _dual_oracle_check(fan: Fan, radius: int) -> CheckResult:
    cd = cox_data(fan)
    window = itertools.product(range(-radius, radius + 1), repeat=cd.cl_rank)
    count = 0
    try:
        for lam in window:
            graded_dimension(cd, lam)
            count += 1
    except ToricCoxError as exc:
        return CheckResult("dual oracle dimensions", False, str(exc))
    return CheckResult(
        "dual oracle dimensions",
        True,
        f"{count} classes with coordinates in [-{radius}, {radius}] agree",
    )


def _euler_identity_check(fan: Fan, bound: int) -> tuple[CheckResult, CheckResult]:
    cd = cox_data(fan)
    em = build_euler_module(cd)
    form = effective_weight_form(cd)
    checked = 0
    identity_failures = 0
    image_failures = 0
    for e in monomials_of_weight_at_most(cd, bound):
        s = cd.monomial(e)
        lam = cd.degree_of_exponent(e)
        image = euler_contract(em, derivation(em, s), form)
        if image != form(lam) * s:
            identity_failures += 1
        if image.constant_term() != 0:
            image_failures += 1
        if any(e):
            witness = euler_contract(em, derivation(em, s) * Fraction(1, form(lam)), form)
            if witness != s:
                image_failures += 1
        checked += 1
    identity = CheckResult(
        "euler identity",
        identity_failures == 0,
        f"{checked} monomials of weight <= {bound}; failures: {identity_failures}",
    )
    image = CheckResult(
        "contraction image and surjectivity",
        image_failures == 0,
        f"constant terms vanish and witnesses recover monomials; failures: {image_failures}",
    )
    return identity, image


def _generation_checks(fan: Fan, bound: int) -> tuple[CheckResult, CheckResult]:
    cd = cox_data(fan)
    em = build_euler_module(cd)
    form = effective_weight_form(cd)
    try:
        images = induced_algebra_generators(em, form)
        transfer_ok = len(images) == em.rank
    except AssertionError:
        transfer_ok = False
    transfer = CheckResult(
        "generation transfer",
        transfer_ok,
        f"contracted module basis gives {em.rank} positive multiples of the variables",
    )
    weights = [form(d) for d in cd.variable_degrees()]
    variables = [
        tuple(1 if j == i else 0 for j in range(cd.num_vars)) for i in range(cd.num_vars)
    ]
    ok = graded_generation_check(weights, variables, bound)
    spanning = CheckResult(
        "graded generation",
        ok,
        f"candidates span all weighted pieces up to weight {bound}: {ok}",
    )
    return transfer, spanning


def _cech_check(fan: Fan, pairs: int, seed: int) -> CheckResult:
    rng = random.Random(seed)
    cocycle_ok = True
    additive_ok = True
    n_cones = len(fan.max_cones)
    for _ in range(pairs):
        coeffs_a = [rng.randint(-3, 3) for _ in range(fan.n_rays)]
        coeffs_b = [rng.randint(-3, 3) for _ in range(fan.n_rays)]
        div_a = TorusInvariantDivisor.make(coeffs_a)
        div_b = TorusInvariantDivisor.make(coeffs_b)
        trans_a = cech_transitions(fan, div_a)
        trans_b = cech_transitions(fan, div_b)
        trans_sum = cech_transitions(fan, div_a + div_b)
        if trans_sum != trans_a + trans_b:
            additive_ok = False
        for s, t, u in itertools.permutations(range(n_cones), 3):
            left = tuple(
                a + b for a, b in zip(trans_a.exponent(s, t), trans_a.exponent(t, u))
            )
            if left != trans_a.exponent(s, u):
                cocycle_ok = False
    passed = cocycle_ok and additive_ok
    return CheckResult(
        "cech cocycle",
        passed,
        f"cocycle identity on all triples: {cocycle_ok}; additivity on {pairs} random pairs: {additive_ok}",
    )


def _first_ample_divisor(fan: Fan, max_coeff: int = 2) -> TorusInvariantDivisor | None:
    for coeffs in itertools.product(range(max_coeff + 1), repeat=fan.n_rays):
        divisor = TorusInvariantDivisor(coeffs)
        if is_ample(fan, divisor):
            return divisor
    return None


def _roundtrip_check(fan: Fan) -> CheckResult:
    divisor = anticanonical(fan)
    if not is_ample(fan, divisor):
        divisor = _first_ample_divisor(fan)
    if divisor is None:
        return CheckResult("round trip", False, "no ample divisor with coefficients <= 2")
    ok = roundtrip_check(fan, divisor)
    return CheckResult(
        "round trip",
        ok,
        f"rebuilt from grading with divisor {list(divisor.coefficients)}: {ok}",
    )


def _certificate_check(fan: Fan) -> CheckResult:
    certificate = splitting_certificate(fan)
    ok = (
        certificate.rank == fan.n_rays
        and certificate.anticanonical_check
        and certificate.divisor_match
    )
    return CheckResult(
        "splitting certificate",
        ok,
        f"rank {certificate.rank}; twist classes sum to the anticanonical class: "
        f"{certificate.anticanonical_check}",
    )


def run_verification(
    fan: Fan,
    euler_weight_bound: int = 4,
    window_radius: int = 2,
    cech_pairs: int = 5,
    seed: int = 2024,
) -> tuple[CheckResult, ...]:
    """All invariant checks on one smooth complete fan, deterministically."""
    report = validate_fan(fan)
    results = [
        CheckResult(
            "fan validation",
            report.smooth and report.complete,
            f"simplicial: {report.simplicial}; smooth: {report.smooth}; complete: {report.complete}",
        )
    ]
    if not (report.smooth and report.complete):
        return tuple(results)
    results.append(_exactness_check(fan))
    results.append(_dual_oracle_check(fan, window_radius))
    identity, image = _euler_identity_check(fan, euler_weight_bound)
    results.append(identity)
    results.append(image)
    results.extend(_generation_checks(fan, euler_weight_bound))
    results.append(_cech_check(fan, cech_pairs, seed))
    results.append(_roundtrip_check(fan))
    results.append(_certificate_check(fan))
    return tuple(results)
