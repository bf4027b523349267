"""Command line front end: verification runs, q sweeps, tightness search.

Three subcommands share one record schema:

* ``verify`` streams one record per random trial and exits 0 only when
  every trial satisfies the master inequality at the given tolerance;
* ``sweep`` evaluates one stored instance across a q grid;
* ``search`` hunts for near-equality instances and prints the best one
  in the instance-file format, so it can be fed straight back to sweep.

Exit codes: 0 success, 1 verified violations, 2 invalid input.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .bounds import BoundReport, bound_report
from .errors import QcboundsError
from .generators import SeededRng, random_density, random_hermitian
from .instances import instance_payload, load_instance, render_document
from .search import maximize_tightness, sweep_q

CSV_COLUMNS = (
    "dim",
    "q",
    "regime",
    "lambda_min",
    "lambda_max",
    "var_a",
    "var_b",
    "product",
    "robertson",
    "naive_q",
    "refined",
    "slack",
    "ratio",
)
# Every 16th, 17th and 18th trial pins q to a boundary value so the exact
# regime edges are always exercised.
BOUNDARY_Q = (-1.0, 0.0, 1.0)
BOUNDARY_PERIOD = 16
_UINT64_BOUND = 2**64


@dataclass(frozen=True)
class TrialPlan:
    """Everything a verification run depends on, in one validated value."""

    dims: tuple[int, ...]
    trials_per_dim: int
    q_lo: float
    q_hi: float
    rank_policy: str
    seed: int
    tolerance_rel: float
    output_format: str

    def problems(self) -> list[str]:
        """Return human-readable reasons the plan is invalid, if any."""
        out = []
        if not self.dims:
            out.append("dims must not be empty")
        elif any(d < 1 for d in self.dims):
            out.append("every dim must be >= 1")
        if self.trials_per_dim < 1:
            out.append("trials must be >= 1")
        if not (np.isfinite(self.q_lo) and np.isfinite(self.q_hi)):
            out.append("q bounds must be finite")
        elif self.q_lo > self.q_hi:
            out.append("q-lo must not exceed q-hi")
        if self.rank_policy not in ("full", "mixed"):
            out.append(f"unknown rank policy {self.rank_policy!r}")
        if not 0 <= self.seed < _UINT64_BOUND:
            out.append("seed must be an unsigned 64-bit integer")
        if not (np.isfinite(self.tolerance_rel) and self.tolerance_rel > 0):
            out.append("tolerance must be positive")
        if self.output_format not in ("csv", "json"):
            out.append(f"unknown output format {self.output_format!r}")
        return out


@dataclass(frozen=True)
class _TrialOutcome:
    index: int
    report: BoundReport
    violated: bool
    replay: dict | None


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except QcboundsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def cmd_verify(plan: TrialPlan, out=None, workers: int = 1) -> int:
    """Run the Monte Carlo verification described by ``plan``."""
    problems = plan.problems()
    if problems:
        for problem in problems:
            print(f"invalid plan: {problem}", file=sys.stderr)
        return 2
    if workers < 1:
        print("invalid plan: workers must be >= 1", file=sys.stderr)
        return 2

    trials = [
        (dim, plan.trials_per_dim * pos + t)
        for pos, dim in enumerate(plan.dims)
        for t in range(plan.trials_per_dim)
    ]

    def run(trial: tuple[int, int]) -> _TrialOutcome:
        return _run_trial(plan, *trial)

    violations: list[_TrialOutcome] = []
    with _out_stream(out) as stream, contextlib.ExitStack() as stack:
        _emit_header(stream, plan.output_format)
        if workers == 1:
            outcomes = map(run, trials)
        else:
            pool = stack.enter_context(ThreadPoolExecutor(max_workers=workers))
            outcomes = pool.map(run, trials)
        for outcome in outcomes:
            _emit_record(stream, plan.output_format, outcome.report, outcome.replay)
            if outcome.violated:
                violations.append(outcome)

    for outcome in violations:
        path = Path(f"violation_{outcome.index}.json")
        path.write_text(render_document(outcome.replay) + "\n", encoding="utf-8")
    if violations:
        print(
            f"{len(violations)} violation(s) at tolerance {plan.tolerance_rel!r}; "
            f"instances written to violation_<index>.json",
            file=sys.stderr,
        )
        return 1
    return 0


def cmd_sweep(
    instance_file, q_lo: float, q_hi: float, steps: int, output_format: str, out=None
) -> int:
    """Evaluate a stored instance on a uniform q grid, endpoints included."""
    if steps < 1:
        print("invalid sweep: steps must be >= 1", file=sys.stderr)
        return 2
    if not (np.isfinite(q_lo) and np.isfinite(q_hi)) or q_lo > q_hi:
        print("invalid sweep: need finite q-lo <= q-hi", file=sys.stderr)
        return 2
    if output_format not in ("csv", "json"):
        print(f"invalid sweep: unknown format {output_format!r}", file=sys.stderr)
        return 2
    state, a, b = load_instance(instance_file)
    grid = np.linspace(q_lo, q_hi, steps)
    reports = sweep_q(state, a, b, grid)
    with _out_stream(out) as stream:
        _emit_header(stream, output_format)
        for report in reports:
            _emit_record(stream, output_format, report, None)
    return 0


def cmd_search(n: int, q: float, budget: int, seed: int, out=None) -> int:
    """Search for a near-equality instance and print it as an instance file."""
    result = maximize_tightness(n, q, budget, SeededRng(seed))
    state, a, b, q_used = result.best_instance
    document = instance_payload(state, a, b)
    document["q"] = q_used
    document["search"] = {
        "best_ratio": result.best_ratio,
        "evaluations": result.evaluations,
        "trajectory": [[index, ratio] for index, ratio in result.trajectory],
    }
    with _out_stream(out) as stream:
        stream.write(render_document(document) + "\n")
    print(
        f"search: best_ratio={result.best_ratio!r} "
        f"evaluations={result.evaluations} (n={n}, q={q!r}, seed={seed})",
        file=sys.stderr,
    )
    return 0


def _run_trial(plan: TrialPlan, dim: int, index: int) -> _TrialOutcome:
    base = SeededRng(plan.seed, index)
    slot = index % BOUNDARY_PERIOD
    if slot < len(BOUNDARY_Q):
        q = BOUNDARY_Q[slot]
    else:
        q = float(base.split(0).generator().uniform(plan.q_lo, plan.q_hi))
    if plan.rank_policy == "mixed" and index % 2 == 1 and dim >= 2:
        rank = int(base.split(1).generator().integers(1, dim))
    else:
        rank = dim
    state = random_density(dim, rank, base.split(2))
    a = random_hermitian(dim, base.split(3))
    b = random_hermitian(dim, base.split(4))
    report = bound_report(state, a, b, q)
    violated = bool(report.slack < -plan.tolerance_rel * max(1.0, report.product))
    replay = None
    if violated:
        replay = instance_payload(state, a, b)
        replay["q"] = report.q
        replay["report"] = _record_fields(report)
    return _TrialOutcome(index=index, report=report, violated=violated, replay=replay)


def _record_fields(report: BoundReport) -> dict:
    fields = {}
    for column in CSV_COLUMNS:
        value = getattr(report, column)
        fields[column] = value.value if column == "regime" else value
    return fields


def _emit_header(stream, output_format: str) -> None:
    if output_format == "csv":
        stream.write(",".join(CSV_COLUMNS) + "\n")


def _emit_record(stream, output_format: str, report: BoundReport, replay) -> None:
    fields = _record_fields(report)
    if output_format == "csv":
        stream.write(",".join(_csv_cell(fields[c]) for c in CSV_COLUMNS) + "\n")
        return
    if replay is not None:
        fields["violation"] = True
        fields["instance"] = {k: replay[k] for k in ("dim", "rho", "a", "b")}
    stream.write(json.dumps(fields) + "\n")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


@contextlib.contextmanager
def _out_stream(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad dims {text!r}: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcbounds",
        description="Verify and explore spectrum-weighted uncertainty bounds "
        "for q-deformed commutators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", help="Monte Carlo verification of the master inequality"
    )
    verify.add_argument("--dims", type=_parse_dims, default=(2, 3, 4))
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--q-lo", type=float, default=-3.0)
    verify.add_argument("--q-hi", type=float, default=3.0)
    verify.add_argument("--rank-policy", choices=("full", "mixed"), default="mixed")
    verify.add_argument("--tolerance", type=float, default=1e-9)
    verify.add_argument("--format", choices=("csv", "json"), default="csv")
    verify.add_argument("--out", default=None)
    verify.add_argument("--workers", type=int, default=1)
    verify.set_defaults(handler=_handle_verify)

    sweep = sub.add_parser("sweep", help="evaluate one stored instance over a q grid")
    sweep.add_argument("instance")
    sweep.add_argument("--q-lo", type=float, default=-1.0)
    sweep.add_argument("--q-hi", type=float, default=1.0)
    sweep.add_argument("--steps", type=int, default=11)
    sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    sweep.add_argument("--out", default=None)
    sweep.set_defaults(handler=_handle_sweep)

    search = sub.add_parser("search", help="search for near-equality instances")
    search.add_argument("--n", type=int, default=2)
    search.add_argument("--q", type=float, default=1.0)
    search.add_argument("--budget", type=int, default=5000)
    search.add_argument("--seed", type=int, default=0)
    search.add_argument("--out", default=None)
    search.set_defaults(handler=_handle_search)

    return parser


def _handle_verify(args) -> int:
    plan = TrialPlan(
        dims=args.dims,
        trials_per_dim=args.trials,
        q_lo=args.q_lo,
        q_hi=args.q_hi,
        rank_policy=args.rank_policy,
        seed=args.seed,
        tolerance_rel=args.tolerance,
        output_format=args.format,
    )
    return cmd_verify(plan, out=args.out, workers=args.workers)


def _handle_sweep(args) -> int:
    return cmd_sweep(
        args.instance, args.q_lo, args.q_hi, args.steps, args.format, out=args.out
    )


def _handle_search(args) -> int:
    if args.n < 2:
        print("invalid search: n must be >= 2", file=sys.stderr)
        return 2
    if args.budget < 1:
        print("invalid search: budget must be >= 1", file=sys.stderr)
        return 2
    if not np.isfinite(args.q):
        print("invalid search: q must be finite", file=sys.stderr)
        return 2
    if not 0 <= args.seed < _UINT64_BOUND:
        print("invalid search: seed must be an unsigned 64-bit integer", file=sys.stderr)
        return 2
    return cmd_search(args.n, args.q, args.budget, args.seed, out=args.out)
