"""Seeded randomized invariant battery backing the `verify` CLI command."""

from __future__ import annotations

import json
import math

import numpy as np

from .family import (
    ConditionViolated,
    ReflectionForm,
    SignChoice,
    _apply_array,
    dense_matrix,
    isometry_residual,
    make_spec,
    reflection_form,
)
from .grover import corollary_equivalence_check
from .optimal import amplify_optimal, optimal_theta, theta_sweep
from .search import SearchProblem, one_step_search
from .state import StateVector

TWO_PI = 2.0 * math.pi

# Dense-backed checks (matrix reconstruction, involution products) run at a
# clamped dimension so `verify` stays fast at any requested n.
DENSE_CHECK_MAX = 256


def random_unit_vector(rng: np.random.Generator, n: int) -> StateVector:
    """Normalize a standard-normal sample; the documented generator contract."""
    while True:
        raw = rng.standard_normal(n)
        norm = float(np.linalg.norm(raw))
        if norm > 1e-6:
            return StateVector(n, raw / norm)


def run_verification(seed: int, n: int, cases: int = 100) -> dict:
    """Run the invariant battery; returns a JSON-ready summary dict.

    Deterministic for a fixed (seed, n, cases): the artifact bytes are
    reproducible run to run.  Matrix-free checks use the full dimension n;
    dense checks use min(n, DENSE_CHECK_MAX).
    """
    rng = np.random.default_rng(seed)
    sign_pool = SignChoice.enumerate()
    dense_n = min(n, DENSE_CHECK_MAX)
    checks: list[dict] = []

    def record(name: str, worst: float, tolerance: float) -> None:
        checks.append(
            {
                "name": name,
                "worst": float(worst),
                "tolerance": tolerance,
                "passed": bool(worst <= tolerance),
            }
        )

    worst_iso = 0.0
    worst_ellipse = 0.0
    for i in range(cases):
        spec = make_spec(n, float(rng.uniform(0.0, TWO_PI)), sign_pool[i % len(sign_pool)])
        vec = random_unit_vector(rng, n)
        worst_iso = max(worst_iso, isometry_residual(spec, vec))
        worst_ellipse = max(
            worst_ellipse, abs((n - 1) * spec.gamma0**2 + spec.beta0**2 - 1.0)
        )
    record("isometry_residual", worst_iso, 1e-10)
    record("ellipse_constraint", worst_ellipse, 1e-12)

    worst_dense = 0.0
    worst_linear = 0.0
    for _ in range(8):
        spec = make_spec(
            dense_n, float(rng.uniform(0.0, TWO_PI)), sign_pool[int(rng.integers(32))]
        )
        vec = random_unit_vector(rng, dense_n)
        dense_out = dense_matrix(spec) @ vec.amplitudes
        worst_dense = max(
            worst_dense, float(np.max(np.abs(dense_out - _apply_array(spec, vec.amplitudes))))
        )
        other = random_unit_vector(rng, dense_n)
        alpha, beta = (float(x) for x in rng.uniform(-2.0, 2.0, size=2))
        combined = _apply_array(spec, alpha * vec.amplitudes + beta * other.amplitudes)
        split = alpha * _apply_array(spec, vec.amplitudes) + beta * _apply_array(
            spec, other.amplitudes
        )
        worst_linear = max(worst_linear, float(np.max(np.abs(combined - split))))
    record("dense_matches_apply", worst_dense, 1e-12)
    record("linearity", worst_linear, 1e-12)

    worst_refl = 0.0
    worst_invol = 0.0
    condition_violations_detected = True
    eye = np.eye(dense_n)
    for signs in sign_pool:
        spec = make_spec(dense_n, float(rng.uniform(0.0, TWO_PI)), signs)
        form = reflection_form(spec)
        if signs.admits_reflection and isinstance(form, ReflectionForm):
            axis = form.u.amplitudes
            rebuilt = form.overall_sign * (eye - 2.0 * np.outer(axis, axis))
            dense = dense_matrix(spec)
            worst_refl = max(worst_refl, float(np.max(np.abs(dense - rebuilt))))
            worst_invol = max(worst_invol, float(np.max(np.abs(dense @ dense - eye))))
        elif not (isinstance(form, ConditionViolated) and not signs.admits_reflection):
            condition_violations_detected = False
    record("reflection_reconstruction", worst_refl, 1e-12)
    record("reflection_involution", worst_invol, 1e-10)
    record("reflection_condition_detected", 0.0 if condition_violations_detected else 1.0, 0.0)

    record("grover_embedding_gap", corollary_equivalence_check(dense_n), 1e-12)

    worst_sweep = 0.0
    worst_grad = 0.0
    probes = 0
    while probes < 3:
        vec = random_unit_vector(rng, n)
        if float(np.sum(vec.amplitudes[1:])) == 0.0:
            continue
        probes += 1
        _, report = amplify_optimal(vec)
        sweep_max = max(amp for _, amp in theta_sweep(vec, points=200))
        worst_sweep = max(worst_sweep, sweep_max - report.post_amplitude0)
        theta_star = optimal_theta(vec)
        h = 1e-6
        signs = SignChoice.all_plus()
        up = abs(float(_apply_array(make_spec(n, theta_star + h, signs), vec.amplitudes)[0]))
        down = abs(float(_apply_array(make_spec(n, theta_star - h, signs), vec.amplitudes)[0]))
        worst_grad = max(worst_grad, abs(up - down) / (2.0 * h))
    record("sweep_never_exceeds_optimum", worst_sweep, 1e-9)
    record("stationarity_gradient", worst_grad, 1e-5)

    marked = int(rng.integers(n))
    found, amplitude = one_step_search(SearchProblem(n, marked))
    record("one_step_search_amplitude", abs(amplitude - 1.0), 1e-9)
    record("one_step_search_found_marked", 0.0 if found == marked else 1.0, 0.0)

    return {
        "seed": seed,
        "n": n,
        "cases": cases,
        "checks": checks,
        "passed": all(check["passed"] for check in checks),
    }


def dumps_verification(summary: dict) -> str:
    return json.dumps(summary, indent=2) + "\n"
