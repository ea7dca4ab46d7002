"""Command-line interface.

Exit codes: 0 on success, 2 for configuration problems (bad scenario file,
bad flags), 3 for numeric/domain errors raised during evaluation.
"""

from __future__ import annotations

import argparse
import sys

from .core import DomainError, db_to_transmittance
from .decoy import optimal_mu
from .practical import accumulation_time, choice_probabilities, max_slow_probability, multi_pulse_qber
from .presets import figure_preset
from .scenario import ConfigError, evaluate, load_scenario
from .sweep import (
    MODE_TO_ROLE,
    crossover_distance,
    format_rate,
    max_secure_distance,
    save_curves_csv,
    sweep,
    sweep_preset,
)

# Reference slow-arm efficiency for the schedule command: 21 dB channel,
# 0.16 receiver optics, 3 dB switch, 0.5 detector efficiency.
DEFAULT_OVERALL_ETA = db_to_transmittance(21.0) * 0.16 * db_to_transmittance(3.0) * 0.5


def _fmt_distance(value: float | None) -> str:
    return "none" if value is None else f"{value:.2f}"


def _cmd_rate(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.config)
    print(format_rate(evaluate(scenario, args.length)))
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.config)
    curve = sweep(scenario, args.lmin, args.lmax, args.step)
    save_curves_csv({MODE_TO_ROLE[scenario.mode]: curve}, args.out)
    return 0


def _cmd_figure(args: argparse.Namespace) -> int:
    preset = figure_preset(args.id)
    save_curves_csv(sweep_preset(preset), args.out)
    return 0


def _cmd_maxdist(args: argparse.Namespace) -> int:
    scenario = load_scenario(args.config)
    print(_fmt_distance(max_secure_distance(scenario, args.lmax)))
    return 0


def _cmd_crossover(args: argparse.Namespace) -> int:
    scenario_a = load_scenario(args.config_a)
    others = [load_scenario(path) for path in args.config_b]
    print(_fmt_distance(crossover_distance(scenario_a, others, args.lmax)))
    return 0


def _cmd_mu_opt(args: argparse.Namespace) -> int:
    print(f"{optimal_mu(args.edet, args.f):.6f}")
    return 0


def _cmd_schedule(args: argparse.Namespace) -> int:
    p0, p1, pm = choice_probabilities(args.p, args.k)
    print(f"p0 {format_rate(p0)}")
    print(f"p1 {format_rate(p1)}")
    print(f"pm {format_rate(pm)}")
    print(f"multi_pulse_qber {format_rate(multi_pulse_qber(args.p, args.k))}")
    p_max = max_slow_probability(args.k, args.qber_budget)
    print(f"p_max {'inf' if p_max == float('inf') else format_rate(p_max)}")
    seconds = accumulation_time(args.p, args.rep_rate, args.mu, args.overall_eta, args.target_counts)
    print(f"accumulation_s {format_rate(seconds)}")
    print(f"accumulation_hours {format_rate(seconds / 3600.0)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualdet",
        description="Secret key rates for QKD receivers pairing a fast noisy "
        "detector with a slow quiet one.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", help="raw key rate of a scenario at one length")
    p.add_argument("--config", required=True, help="scenario JSON file")
    p.add_argument("--length", required=True, type=float, help="fiber length, km")
    p.set_defaults(func=_cmd_rate)

    p = sub.add_parser("sweep", help="sweep a scenario over a length grid to CSV")
    p.add_argument("--config", required=True, help="scenario JSON file")
    p.add_argument("--lmin", type=float, default=0.0)
    p.add_argument("--lmax", type=float, default=250.0)
    p.add_argument("--step", type=float, default=1.0)
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("figure", help="emit a built-in preset's curves to CSV")
    p.add_argument("--id", required=True, type=int, help="preset id, 1..9")
    p.add_argument("--out", required=True, help="output CSV path")
    p.set_defaults(func=_cmd_figure)

    p = sub.add_parser("maxdist", help="largest length with a positive rate")
    p.add_argument("--config", required=True)
    p.add_argument("--lmax", type=float, default=250.0, help="search limit, km")
    p.set_defaults(func=_cmd_maxdist)

    p = sub.add_parser("crossover", help="where scenario A stops beating scenario B")
    p.add_argument("--config-a", required=True)
    p.add_argument(
        "--config-b", required=True, action="append",
        help="may be given twice to compare against the best of two scenarios",
    )
    p.add_argument("--lmax", type=float, default=250.0)
    p.set_defaults(func=_cmd_crossover)

    p = sub.add_parser("mu-opt", help="self-consistent signal intensity for decoy BB84")
    p.add_argument("--edet", required=True, type=float, help="misalignment error")
    p.add_argument("--f", required=True, type=float, help="error-correction efficiency")
    p.set_defaults(func=_cmd_mu_opt)

    p = sub.add_parser("schedule", help="slow-detector routing probabilities and limits")
    p.add_argument("--p", required=True, type=float, help="slow-arm routing probability")
    p.add_argument("--k", required=True, type=int, help="pulses per response window")
    p.add_argument("--qber-budget", type=float, default=0.01)
    p.add_argument("--rep-rate", type=float, default=1e9, help="pulse rate, Hz")
    p.add_argument("--mu", type=float, default=1.0, help="mean photons per pulse")
    p.add_argument(
        "--overall-eta", type=float, default=DEFAULT_OVERALL_ETA,
        help="source-to-click efficiency of the slow arm "
        "(default: 21 dB channel, 0.16 optics, 3 dB switch, 0.5 detector)",
    )
    p.add_argument("--target-counts", type=float, default=1e6)
    p.set_defaults(func=_cmd_schedule)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, ZeroDivisionError, OverflowError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
