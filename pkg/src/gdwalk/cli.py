"""Command line entry point: ``gdwalk <command> --steps 1,-1 ...``.

Results go to stdout, statistics and diagnostics to stderr.  Exit codes:
0 success, 2 invalid input, 3 budget exceeded, 4 no recurrence found,
5 verification failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from .area import area_equation, q_system
from .core import UsageError, parse_polynomial
from .enumerate import series_vector
from .groebner import Budget, BudgetExceeded
from .guess import estimate_area_constant, guess_recurrence
from .render import equation_from_obj, render_json, series_obj, system_obj
from .verify import EQ_TABLE, AlgebraicEquation, verify_series
from .walks import StepSet, build_straight_system, straight_equation

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_NO_GUESS, EXIT_VERIFY = 0, 2, 3, 4, 5

COMMANDS = ("system", "equation", "area-equation", "enumerate", "guess", "verify",
            "asymptotics", "reproduce")


@dataclass
class RunConfig:
    command: str
    steps: Optional[StepSet] = None
    strict: bool = False
    terms: Optional[int] = None
    moment: int = 0
    budget: Budget = field(default_factory=Budget)
    format: str = "text"
    q: bool = False
    equation: Optional[str] = None
    equation_file: Optional[str] = None
    max_order: int = 4
    max_deg: int = 4
    only: Optional[List[int]] = None
    stretch: bool = False


def parse_steps(text: str) -> StepSet:
    """Comma separated integers, duplicates dropped."""
    try:
        steps = [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError:
        raise UsageError(f"steps must be comma separated integers, got {text!r}") from None
    if not steps:
        raise UsageError("at least one step is required")
    return StepSet(steps)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gdwalk", description="Generalized Dyck walks: equations, counts and area statistics.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--steps", help="comma separated step set, e.g. 2,1,0,-1,-2")
    p.add_argument("--strict", action="store_true", help="walks touching the axis only at their ends")
    p.add_argument("--q", action="store_true", help="system: print the area (q) functional system")
    p.add_argument("--terms", type=int, help="number of series terms (enumerate, guess, verify, asymptotics)")
    p.add_argument("--moment", type=int, default=0, help="area moment r (0 counts walks)")
    p.add_argument("--equation", help="verify: equation in t and X, e.g. 't^2*X^2 - X + 1'")
    p.add_argument("--equation-file", help="verify: file with an equation as text or JSON")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--max-deg", type=int, default=4)
    p.add_argument("--max-pairs", type=int, default=Budget.max_pairs)
    p.add_argument("--max-degree", type=int, default=Budget.max_degree)
    p.add_argument("--max-basis", type=int, default=Budget.max_basis)
    p.add_argument("--timeout-seconds", type=float, default=None)
    p.add_argument("--only", help="reproduce: comma separated criterion numbers")
    p.add_argument("--stretch", action="store_true",
                   help="reproduce: also sweep every subset of {-3..3} (slow)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    if ns.command != "reproduce" and not ns.steps:
        raise UsageError(f"{ns.command} needs --steps")
    for name in ("terms", "max_pairs", "max_degree", "max_basis", "max_order", "max_deg"):
        value = getattr(ns, name)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")
    if ns.moment < 0:
        raise UsageError("--moment must be nonnegative")
    only = None
    if ns.only:
        try:
            only = [int(x) for x in ns.only.split(",") if x]
        except ValueError:
            raise UsageError("--only takes comma separated criterion numbers") from None
    return RunConfig(
        command=ns.command,
        steps=parse_steps(ns.steps) if ns.steps else None,
        strict=ns.strict,
        terms=ns.terms,
        moment=ns.moment,
        budget=Budget(ns.max_pairs, ns.max_degree, ns.max_basis, ns.timeout_seconds),
        format=ns.format,
        q=ns.q,
        equation=ns.equation,
        equation_file=ns.equation_file,
        max_order=ns.max_order,
        max_deg=ns.max_deg,
        only=only,
        stretch=ns.stretch,
    )


class _Out:
    def __init__(self, stdout, stderr):
        self.stdout = stdout
        self.stderr = stderr

    def line(self, text: str = ""):
        self.stdout.write(text + "\n")

    def note(self, text: str):
        self.stderr.write(text + "\n")


def _stats_note(out: _Out, stats: list):
    for s in stats:
        out.note("groebner: " + ", ".join(f"{k}={v}" for k, v in s.as_dict().items()))


def _equation_for(cfg: RunConfig, stats: list) -> AlgebraicEquation:
    if cfg.moment == 0:
        return straight_equation(cfg.steps, cfg.strict, cfg.budget, stats)
    if cfg.moment == 1:
        return area_equation(cfg.steps, cfg.strict, cfg.budget, stats)
    raise UsageError("equations are available for moments 0 and 1 only")


def _read_equation(cfg: RunConfig):
    text = cfg.equation
    if cfg.equation_file:
        try:
            with open(cfg.equation_file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.equation_file}: {exc}") from None
    if text is None:
        return None
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            poly = equation_from_obj(json.loads(stripped))
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad equation JSON: {exc}") from None
    else:
        poly = parse_polynomial(stripped, EQ_TABLE)
    return AlgebraicEquation(poly, cfg.steps, cfg.strict, cfg.moment)


def _emit_series(cfg: RunConfig, out: _Out, series: Sequence):
    if cfg.format == "json":
        out.line(render_json(list(series)))
    else:
        out.line(" ".join(series_obj(series)))


def _cmd_system(cfg: RunConfig, out: _Out) -> int:
    system = q_system(cfg.steps, cfg.strict) if cfg.q else build_straight_system(cfg.steps, cfg.strict)
    if cfg.format == "json":
        out.line(render_json(system))
        return EXIT_OK
    for line in system_obj(system)["equations"]:
        out.line(line)
    return EXIT_OK


def _cmd_equation(cfg: RunConfig, out: _Out) -> int:
    stats: list = []
    eq = _equation_for(cfg, stats)
    _stats_note(out, stats)
    out.line(render_json(eq) if cfg.format == "json" else eq.render())
    return EXIT_OK


def _cmd_enumerate(cfg: RunConfig, out: _Out) -> int:
    n = 30 if cfg.terms is None else cfg.terms
    if n < 1:
        raise UsageError("--terms must be at least 1")
    _emit_series(cfg, out, series_vector(cfg.steps, n - 1, cfg.moment, cfg.strict))
    return EXIT_OK


def _cmd_guess(cfg: RunConfig, out: _Out) -> int:
    need = (cfg.max_order + 1) * (cfg.max_deg + 1) + cfg.max_order + 10
    n = max(need, cfg.terms or 0)
    series = series_vector(cfg.steps, n - 1, cfg.moment, cfg.strict)
    rec = guess_recurrence(series, cfg.max_order, cfg.max_deg)
    if rec is None:
        out.note(f"no recurrence of order <= {cfg.max_order} and degree <= {cfg.max_deg} fits {n} terms")
        return EXIT_NO_GUESS
    if cfg.format == "json":
        obj = rec.as_dict()
        obj["initial"] = series_obj(series[:rec.seed_length])
        out.line(render_json(obj))
    else:
        out.line(rec.render())
        out.line("initial: " + " ".join(series_obj(series[:rec.seed_length])))
    return EXIT_OK


def _cmd_verify(cfg: RunConfig, out: _Out) -> int:
    eq = _read_equation(cfg)
    if eq is None:
        stats: list = []
        eq = _equation_for(cfg, stats)
        _stats_note(out, stats)
    N = cfg.terms if cfg.terms is not None else max(40, eq.poly.degree("t") + 5)
    report = verify_series(eq, series_vector(cfg.steps, N, cfg.moment, cfg.strict), N)
    out.note(f"equation: {eq.render()}")
    out.line(render_json(report) if cfg.format == "json" else report.render())
    return EXIT_OK if report.passed else EXIT_VERIFY


def _cmd_asymptotics(cfg: RunConfig, out: _Out) -> int:
    est = estimate_area_constant(cfg.steps, cfg.terms or 400)
    if cfg.format == "json":
        out.line(render_json(est))
        return EXIT_OK
    out.line(f"period: {est.period}")
    for n, e in est.points[-10:]:
        out.line(f"e({n}) = {e}")
    out.line(f"extrapolated: {est.extrapolated}")
    out.line(f"differences decreasing: {est.differences_decreasing}")
    return EXIT_OK


def _cmd_reproduce(cfg: RunConfig, out: _Out) -> int:
    from . import reproduce

    chosen = [c for i, c in enumerate(reproduce.CRITERIA, 1) if not cfg.only or i in cfg.only]
    outcomes = []
    for crit in chosen:
        if crit is reproduce.criterion_9:
            outcome = crit(budget=cfg.budget, progress=out.note)
        elif crit is reproduce.criterion_5:
            outcome = crit(budget=cfg.budget)
        else:
            outcome = crit()
        outcomes.append(outcome)
        if cfg.format == "text":
            out.line(outcome.line())
    if cfg.stretch:
        outcome = reproduce.criterion_9(budget=cfg.budget, progress=out.note,
                                        subsets=reproduce.nontrivial_subsets(tuple(range(3, -4, -1))))
        outcome.title = "stretch: equations vs DP series for all subsets of {-3..3}"
        outcomes.append(outcome)
        if cfg.format == "text":
            out.line(outcome.line())
    if cfg.format == "json":
        out.line(render_json({"criteria": [
            {"number": o.number, "title": o.title, "passed": o.passed, "detail": o.detail,
             "seconds": round(o.seconds, 3)} for o in outcomes]}))
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_VERIFY


HANDLERS = {
    "system": _cmd_system,
    "equation": lambda cfg, out: _cmd_equation(RunConfig(**{**cfg.__dict__, "moment": 0}), out),
    "area-equation": lambda cfg, out: _cmd_equation(RunConfig(**{**cfg.__dict__, "moment": 1}), out),
    "enumerate": _cmd_enumerate,
    "guess": _cmd_guess,
    "verify": _cmd_verify,
    "asymptotics": _cmd_asymptotics,
    "reproduce": _cmd_reproduce,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    out = _Out(stdout or sys.stdout, stderr or sys.stderr)
    try:
        return HANDLERS[cfg.command](cfg, out)
    except UsageError as exc:
        out.note(f"error: {exc}")
        return EXIT_USAGE
    except BudgetExceeded as exc:
        out.note(f"budget exceeded: {exc.reason}")
        _stats_note(out, [exc.stats])
        return EXIT_BUDGET


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    return run(cfg, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
