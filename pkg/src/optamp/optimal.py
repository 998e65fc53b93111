"""Mixing-angle selection that maximizes component 0 for a given input vector."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterOutOfRange, SumZero
from .family import SignChoice, _apply_array, make_spec
from .state import StateVector, format_float

TWO_PI = 2.0 * math.pi

SWEEP_HEADER = "theta,amplitude0,probability0"

# Post-application probability within this distance of 1 counts as absolute.
ABSOLUTE_TOL = 1e-9

SweepRow = tuple[float, float]


@dataclass(frozen=True)
class AmplifyReport:
    """Outcome of one amplification at the optimal (or a requested) angle.

    ``post_amplitude0`` and ``post_probability0`` store magnitudes; the
    amplified vector itself keeps its signs.
    """

    theta_star: float
    pre_amplitude0: float
    post_amplitude0: float
    post_probability0: float
    absolute: bool

    def to_json(self) -> str:
        obj = {
            "theta_star": self.theta_star,
            "pre_amplitude0": self.pre_amplitude0,
            "post_amplitude0": self.post_amplitude0,
            "post_probability0": self.post_probability0,
            "absolute": self.absolute,
        }
        return json.dumps(obj, indent=2) + "\n"


def optimal_theta(a: StateVector) -> float:
    """The mixing angle maximizing the post-application magnitude of component 0.

    Solves the stationarity condition

        -sin(theta) * a[0] + cos(theta) * sum(a[1:]) / sqrt(n - 1) == 0

    on the maximizing branch, i.e. atan2(sum(a[1:]), a[0] * sqrt(n - 1)),
    returned in [0, 2*pi).  Raises :class:`SumZero` when sum(a[1:]) == 0:
    no family member can then increase component 0 at all.
    """
    tail_sum = float(np.sum(a.amplitudes[1:]))
    if tail_sum == 0.0:
        raise SumZero("sum of components 1..n-1 is zero; component 0 is already extremal")
    theta = math.atan2(tail_sum, float(a.amplitudes[0]) * math.sqrt(a.n - 1))
    return theta % TWO_PI


def amplify_optimal(
    a: StateVector, signs: SignChoice | None = None
) -> tuple[StateVector, AmplifyReport]:
    """Apply the family member at the optimal angle.

    With S = sum(a[1:]), component 0 afterwards carries magnitude
    sqrt(a[0]**2 + S**2/(n-1)) and every other component i holds
    eps2 * (a[i] - S/(n-1)): the mean of the off-0 components is subtracted
    from each, and the freed weight lands on component 0.
    """
    if signs is None:
        signs = SignChoice.all_plus()
    theta_star = optimal_theta(a)
    spec = make_spec(a.n, theta_star, signs)
    out = _apply_array(spec, a.amplitudes)
    post_amplitude = abs(float(out[0]))
    report = AmplifyReport(
        theta_star=theta_star,
        pre_amplitude0=float(a.amplitudes[0]),
        post_amplitude0=post_amplitude,
        post_probability0=post_amplitude**2,
        absolute=post_amplitude**2 >= 1.0 - ABSOLUTE_TOL,
    )
    return StateVector.unnormalized(a.n, out), report


def theta_sweep(
    a: StateVector, signs: SignChoice | None = None, points: int = 1000
) -> list[SweepRow]:
    """Post-application magnitude of component 0 over an even grid on [0, 2*pi).

    Brute-force companion to :func:`optimal_theta`: the sweep maximum never
    exceeds the optimum beyond roundoff.
    """
    if points < 2:
        raise ParameterOutOfRange(f"points must be at least 2, got {points}")
    if signs is None:
        signs = SignChoice.all_plus()
    rows: list[SweepRow] = []
    for k in range(points):
        theta = TWO_PI * k / points
        out = _apply_array(make_spec(a.n, theta, signs), a.amplitudes)
        rows.append((theta, abs(float(out[0]))))
    return rows


def is_absolute_optimal(report: AmplifyReport) -> bool:
    """True when the post-application probability of component 0 is 1 within tolerance."""
    return report.post_probability0 >= 1.0 - ABSOLUTE_TOL


def dumps_sweep_csv(rows: list[SweepRow]) -> str:
    lines = [SWEEP_HEADER]
    for theta, amp in rows:
        lines.append(f"{format_float(theta)},{format_float(amp)},{format_float(amp * amp)}")
    return "\n".join(lines) + "\n"


def write_sweep_csv(rows: list[SweepRow], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_sweep_csv(rows))
