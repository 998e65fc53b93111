"""Classic fixed-axis search: flip, diffusion about the uniform vector, their product."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ParameterOutOfRange
from .family import DENSE_CAP_DEFAULT, SignChoice, dense_matrix, make_spec_from_beta0
from .state import StateVector, format_float

TRACE_HEADER = "step,amplitude0,probability0"

TraceRow = tuple[int, float, float]


def flip_operator_apply(a: StateVector) -> StateVector:
    """Negate component 0 and leave the rest untouched; self-inverse."""
    out = a.amplitudes.copy()
    out[0] = -out[0]
    return StateVector.unnormalized(a.n, out)


def diffusion_apply(a: StateVector) -> StateVector:
    """Reflect about the uniform superposition: a_i -> 2*mean(a) - a_i."""
    arr = a.amplitudes
    return StateVector.unnormalized(a.n, 2.0 * float(np.mean(arr)) - arr)


def grover_apply(a: StateVector) -> StateVector:
    """One search iteration: flip component 0, then diffuse."""
    return diffusion_apply(flip_operator_apply(a))


@dataclass(frozen=True)
class GroverOperator:
    """Dense views of the flip Z, uniform projector P, diffusion D, and D @ Z."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DimensionError(f"dimension must be at least 2, got {self.n}")

    def flip_matrix(self) -> np.ndarray:
        z = np.eye(self.n)
        z[0, 0] = -1.0
        return z

    def projector(self) -> np.ndarray:
        """|v><v| for the uniform unit vector v."""
        return np.full((self.n, self.n), 1.0 / self.n)

    def diffusion_matrix(self) -> np.ndarray:
        return -np.eye(self.n) + 2.0 * self.projector()

    def matrix(self) -> np.ndarray:
        """The full iteration operator, diffusion after flip."""
        return self.diffusion_matrix() @ self.flip_matrix()


def grover_iterate(a: StateVector, steps: int) -> list[TraceRow]:
    """Iterate the search operator, recording (step, |a[0]|, a[0]**2) from step 0."""
    if steps < 0:
        raise ParameterOutOfRange(f"steps must be nonnegative, got {steps}")
    current = a
    amp = abs(float(current.amplitudes[0]))
    rows: list[TraceRow] = [(0, amp, amp * amp)]
    for step in range(1, steps + 1):
        current = grover_apply(current)
        amp = abs(float(current.amplitudes[0]))
        rows.append((step, amp, amp * amp))
    return rows


def corollary_equivalence_check(n: int, cap: int = DENSE_CAP_DEFAULT) -> float:
    """Max entrywise gap between the embedded family member and the classic operator.

    The embedding uses the Grover sign pattern with beta0 = (n - 2)/n and
    positive gamma0; the gap should vanish to roundoff.
    """
    spec = make_spec_from_beta0(n, (n - 2) / n, +1, SignChoice.grover())
    gap = dense_matrix(spec, cap=cap) - GroverOperator(n).matrix()
    return float(np.max(np.abs(gap)))


def dumps_trace_csv(rows: list[TraceRow]) -> str:
    lines = [TRACE_HEADER]
    for step, amp, prob in rows:
        lines.append(f"{step},{format_float(amp)},{format_float(prob)}")
    return "\n".join(lines) + "\n"


def write_trace_csv(rows: list[TraceRow], path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_trace_csv(rows))
