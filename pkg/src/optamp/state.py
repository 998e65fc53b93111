"""Real unit vectors over the computational basis, plus their JSON file format."""

from __future__ import annotations

import json
import math
from dataclasses import InitVar, dataclass

import numpy as np

from .errors import DimensionError, NormalizationError, StateFormatError

NORM_TOL = 1e-9


def format_float(x: float) -> str:
    # 17 significant digits round-trip any IEEE double exactly.
    return format(float(x), ".17g")


@dataclass(frozen=True, eq=False)
class StateVector:
    """Vector of real amplitudes, unit norm by default.

    The constructor enforces sum(a_i^2) == 1 within ``NORM_TOL``.  Use
    :meth:`unnormalized` for intermediate values (linear combinations,
    operator outputs) whose norm is established elsewhere.  The amplitude
    array is read-only, so instances can be shared freely across threads.
    """

    n: int
    amplitudes: np.ndarray
    check_norm: InitVar[bool] = True

    def __post_init__(self, check_norm: bool) -> None:
        if self.n < 2:
            raise DimensionError(f"dimension must be at least 2, got {self.n}")
        arr = np.array(self.amplitudes, dtype=np.float64)
        if arr.ndim != 1 or arr.shape[0] != self.n:
            raise DimensionError(f"expected {self.n} amplitudes, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise StateFormatError("amplitudes must all be finite")
        if check_norm:
            sq = float(arr @ arr)
            if abs(sq - 1.0) > NORM_TOL:
                raise NormalizationError(
                    f"squared norm {sq!r} deviates from 1 by more than {NORM_TOL}"
                )
        arr.flags.writeable = False
        object.__setattr__(self, "amplitudes", arr)

    @classmethod
    def unnormalized(cls, n: int, amplitudes) -> StateVector:
        """Construct without the unit-norm check; length and finiteness still apply."""
        return cls(n, amplitudes, check_norm=False)

    @classmethod
    def uniform(cls, n: int) -> StateVector:
        """The equal-weight superposition (1, ..., 1)/sqrt(n)."""
        return cls(n, np.full(n, 1.0 / math.sqrt(n)))

    @classmethod
    def basis(cls, n: int, index: int) -> StateVector:
        """The basis vector with a single unit component at ``index``."""
        if not 0 <= index < n:
            raise DimensionError(f"basis index {index} outside [0, {n})")
        arr = np.zeros(n)
        arr[index] = 1.0
        return cls(n, arr)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def normalized(self) -> StateVector:
        """Rescale to exact unit norm."""
        norm = self.norm()
        if norm == 0.0:
            raise NormalizationError("cannot normalize the zero vector")
        return StateVector(self.n, self.amplitudes / norm)

    def __repr__(self) -> str:
        shown = ", ".join(f"{x:.6g}" for x in self.amplitudes[:4])
        suffix = ", ..." if self.n > 4 else ""
        return f"StateVector(n={self.n}, [{shown}{suffix}])"


def dumps_state_vector(state: StateVector) -> str:
    """Serialize to the shared JSON format with 17-significant-digit floats."""
    body = ", ".join(format_float(x) for x in state.amplitudes)
    return f'{{"n": {state.n}, "amplitudes": [{body}]}}\n'


def loads_state_vector(text: str) -> StateVector:
    """Parse the shared JSON format; structural errors raise StateFormatError."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict) or set(obj) != {"n", "amplitudes"}:
        raise StateFormatError('expected an object with exactly "n" and "amplitudes"')
    n, amps = obj["n"], obj["amplitudes"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise StateFormatError('"n" must be an integer')
    if not isinstance(amps, list) or not all(
        isinstance(x, (int, float)) and not isinstance(x, bool) for x in amps
    ):
        raise StateFormatError('"amplitudes" must be a list of numbers')
    if len(amps) != n:
        raise StateFormatError(f'"n" is {n} but {len(amps)} amplitudes were given')
    return StateVector(n, amps)


def save_state_vector(state: StateVector, path) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_state_vector(state))


def load_state_vector(path) -> StateVector:
    with open(path, "r", encoding="utf-8") as handle:
        return loads_state_vector(handle.read())
