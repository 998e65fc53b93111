"""Marked-item search: a relabeling involution plus one optimal amplification."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DimensionError, ParameterOutOfRange
from .grover import grover_iterate
from .optimal import amplify_optimal
from .state import StateVector


@dataclass(frozen=True)
class SearchProblem:
    """Dimension plus the single marked basis index."""

    n: int
    marked: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DimensionError(f"dimension must be at least 2, got {self.n}")
        if not 0 <= self.marked < self.n:
            raise ParameterOutOfRange(f"marked index {self.marked} outside [0, {self.n})")

    def predicate(self, index: int) -> bool:
        """The membership test: true exactly on the marked index."""
        return index == self.marked

    @classmethod
    def from_predicate(cls, n: int, predicate: Callable[[int], bool]) -> SearchProblem:
        """Locate the marked index by evaluating the predicate on every basis index."""
        hits = [i for i in range(n) if predicate(i)]
        if len(hits) != 1:
            raise ParameterOutOfRange(
                f"predicate must mark exactly one index in [0, {n}), marked {len(hits)}"
            )
        return cls(n, hits[0])


def relabel_apply(p: SearchProblem, a: StateVector) -> StateVector:
    """Swap components 0 and marked; an exact involution, identity when marked == 0."""
    if a.n != p.n:
        raise DimensionError(f"state has dimension {a.n}, problem expects {p.n}")
    out = a.amplitudes.copy()
    out[0], out[p.marked] = out[p.marked], out[0]
    return StateVector.unnormalized(a.n, out)


def relabel_matrix(p: SearchProblem) -> np.ndarray:
    """The relabeling involution as a permutation matrix (differs from the
    identity in at most four entries)."""
    m = np.eye(p.n)
    if p.marked != 0:
        m[0, 0] = m[p.marked, p.marked] = 0.0
        m[0, p.marked] = m[p.marked, 0] = 1.0
    return m


def one_step_search(p: SearchProblem) -> tuple[int, float]:
    """Run the single-application search from the uniform start.

    Conjugates the optimal amplifier for the uniform vector by the
    relabeling involution and returns (argmax index of squared amplitude,
    its magnitude).  For a valid problem the index is the marked one and
    the magnitude is 1 up to roundoff.
    """
    start = StateVector.uniform(p.n)
    relabeled = relabel_apply(p, start)
    amplified, _ = amplify_optimal(relabeled)
    out = relabel_apply(p, amplified)
    found = int(np.argmax(out.amplitudes**2))
    return found, abs(float(out.amplitudes[found]))


@dataclass(frozen=True)
class ComparisonReport:
    """One-application search versus the iterated classic operator.

    ``grover_peak_step`` is the first local maximum of the probability
    trace, the step at which an iterated run would stop; the trace keeps
    oscillating afterwards and can climb higher on later swings.
    ``grover_first_step_above_half`` is None when no step within the cap
    exceeds probability 1/2.
    """

    n: int
    marked: int
    one_step_probability: float
    grover_peak_step: int
    grover_peak_probability: float
    grover_first_step_above_half: Optional[int]

    def to_json(self) -> str:
        obj = {
            "n": self.n,
            "marked": self.marked,
            "one_step_probability": self.one_step_probability,
            "grover_peak_step": self.grover_peak_step,
            "grover_peak_probability": self.grover_peak_probability,
            "grover_first_step_above_half": self.grover_first_step_above_half,
        }
        return json.dumps(obj, indent=2) + "\n"


def _first_local_max(probs: list[float]) -> int:
    for step in range(len(probs) - 1):
        if probs[step + 1] <= probs[step]:
            return step
    return len(probs) - 1


def compare_with_grover(p: SearchProblem, max_steps: int) -> ComparisonReport:
    """Contrast the one-application search with up to ``max_steps`` classic iterations."""
    if max_steps < 1:
        raise ParameterOutOfRange(f"max_steps must be at least 1, got {max_steps}")
    _, amplitude = one_step_search(p)
    trace = grover_iterate(StateVector.uniform(p.n), max_steps)
    probs = [row[2] for row in trace]
    peak = _first_local_max(probs)
    first_above = next((step for step, prob in enumerate(probs) if prob > 0.5), None)
    return ComparisonReport(
        n=p.n,
        marked=p.marked,
        one_step_probability=amplitude**2,
        grover_peak_step=peak,
        grover_peak_probability=probs[peak],
        grover_first_step_above_half=first_above,
    )
