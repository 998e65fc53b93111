"""Command-line front end: amplify, sweep, grover, search, compare, verify."""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional

from .errors import ParameterOutOfRange
from .family import SignChoice, make_spec
from .family import apply as apply_spec
from .grover import dumps_trace_csv, grover_iterate
from .optimal import (
    ABSOLUTE_TOL,
    AmplifyReport,
    amplify_optimal,
    dumps_sweep_csv,
    theta_sweep,
)
from .search import SearchProblem, compare_with_grover, one_step_search
from .state import StateVector, dumps_state_vector, load_state_vector
from .verify import dumps_verification, run_verification

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """One CLI invocation, fully resolved."""

    command: str
    n: Optional[int] = None
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    theta: str = "auto"
    signs: SignChoice = field(default_factory=SignChoice.all_plus)
    points: int = 1000
    marked: int = 0
    max_steps: Optional[int] = None
    seed: int = 0


def _emit(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _state_sibling(path: str) -> str:
    """Where `amplify` writes the post vector next to its report."""
    stem = path[:-5] if path.endswith(".json") else path
    return stem + ".state.json"


def _input_state(config: RunConfig) -> StateVector:
    if config.input_path is not None:
        return load_state_vector(config.input_path)
    if config.n is None:
        raise ParameterOutOfRange("provide --input or --n")
    return StateVector.uniform(config.n)


def _default_steps(n: int) -> int:
    return math.ceil(2.0 * math.sqrt(n))


def _cmd_amplify(config: RunConfig) -> int:
    state = _input_state(config)
    if config.theta == "auto":
        out, report = amplify_optimal(state, config.signs)
    else:
        spec = make_spec(state.n, float(config.theta), config.signs)
        out = apply_spec(spec, state)
        post = abs(float(out.amplitudes[0]))
        report = AmplifyReport(
            theta_star=spec.theta,
            pre_amplitude0=float(state.amplitudes[0]),
            post_amplitude0=post,
            post_probability0=post**2,
            absolute=post**2 >= 1.0 - ABSOLUTE_TOL,
        )
    _emit(report.to_json(), config.output_path)
    if config.output_path is not None:
        _emit(dumps_state_vector(out), _state_sibling(config.output_path))
    return EXIT_OK


def _cmd_sweep(config: RunConfig) -> int:
    state = _input_state(config)
    rows = theta_sweep(state, config.signs, config.points)
    _emit(dumps_sweep_csv(rows), config.output_path)
    return EXIT_OK


def _cmd_grover(config: RunConfig) -> int:
    state = _input_state(config)
    steps = config.max_steps if config.max_steps is not None else _default_steps(state.n)
    rows = grover_iterate(state, steps)
    _emit(dumps_trace_csv(rows), config.output_path)
    return EXIT_OK


def _cmd_search(config: RunConfig) -> int:
    problem = SearchProblem(config.n, config.marked)
    found, amplitude = one_step_search(problem)
    obj = {
        "n": problem.n,
        "marked": problem.marked,
        "found_index": found,
        "amplitude": amplitude,
        "probability": amplitude**2,
    }
    _emit(json.dumps(obj, indent=2) + "\n", config.output_path)
    return EXIT_OK


def _cmd_compare(config: RunConfig) -> int:
    problem = SearchProblem(config.n, config.marked)
    steps = config.max_steps if config.max_steps is not None else _default_steps(problem.n)
    report = compare_with_grover(problem, steps)
    _emit(report.to_json(), config.output_path)
    return EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    summary = run_verification(config.seed, config.n if config.n is not None else 64)
    _emit(dumps_verification(summary), config.output_path)
    return EXIT_OK if summary["passed"] else EXIT_VERIFY_FAILED


_COMMANDS = {
    "amplify": _cmd_amplify,
    "sweep": _cmd_sweep,
    "grover": _cmd_grover,
    "search": _cmd_search,
    "compare": _cmd_compare,
    "verify": _cmd_verify,
}


def run(config: RunConfig) -> int:
    """Execute one resolved invocation; exceptions propagate to main()."""
    return _COMMANDS[config.command](config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="optamp",
        description="Amplitude amplification operators, optimal-angle selection, "
        "and one-step marked-item search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, with_input: bool = True) -> None:
        if with_input:
            p.add_argument("--input", dest="input_path", help="state-vector JSON file")
            p.add_argument("--n", type=int, help="dimension for the uniform start (when no --input)")
        p.add_argument("--output", dest="output_path", help="artifact file (stdout when omitted)")

    def add_signs(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--signs",
            type=SignChoice.from_string,
            default=SignChoice.all_plus(),
            help="five comma-separated signs, e.g. '+1,-1,+1,+1,+1' (default all +1)",
        )

    p = sub.add_parser("amplify", help="amplify component 0 of a vector")
    add_io(p)
    add_signs(p)
    p.add_argument(
        "--theta",
        default="auto",
        help="mixing angle in radians, or 'auto' for the optimal one (default auto); "
        "with --output, the post vector lands next to the report as *.state.json",
    )

    p = sub.add_parser("sweep", help="post-amplitude of component 0 over a theta grid (CSV)")
    add_io(p)
    add_signs(p)
    p.add_argument("--points", type=int, default=1000, help="grid resolution (default 1000)")

    p = sub.add_parser("grover", help="iterate the classic search operator (CSV trace)")
    add_io(p)
    p.add_argument(
        "--max-steps",
        dest="max_steps",
        type=int,
        help="iterations to record (default ceil(2*sqrt(n)))",
    )

    p = sub.add_parser("search", help="one-step search for a marked index (JSON)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--marked", type=int, required=True)
    add_io(p, with_input=False)

    p = sub.add_parser("compare", help="one-step search versus iterated classic search (JSON)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--marked", type=int, required=True)
    p.add_argument("--max-steps", dest="max_steps", type=int, help="classic iteration cap")
    add_io(p, with_input=False)

    p = sub.add_parser("verify", help="seeded randomized invariant battery (JSON)")
    p.add_argument("--seed", type=int, default=0, help="generator seed (numpy default_rng)")
    p.add_argument("--n", type=int, default=64, help="dimension of the checked vectors")
    add_io(p, with_input=False)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    config = RunConfig(command=args.command)
    for name in ("n", "input_path", "output_path", "theta", "signs", "points", "marked", "max_steps", "seed"):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(config, name, getattr(args, name))
    return config


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return run(_config_from_args(args))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
