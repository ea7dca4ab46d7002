"""Distance sweeps, secure-distance and crossover finding, CSV emission.

Raw rates may be negative; curves carry both the raw value (for root
finding) and the value clamped at zero (for plotting). Distance searches
use a coarse grid to bracket a sign change, then bisection to 0.01 km.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence, TextIO

from .core import DomainError, bisect_sign_change
from .scenario import Scenario, evaluate

#: Half-width of the bracket accepted by the distance bisections, km.
DISTANCE_TOL = 0.01

CSV_HEADER = ("length_km", "rate_dual_bps", "rate_fast_bps", "rate_slow_bps")
CURVE_ROLES = ("dual", "fast", "slow")
MODE_TO_ROLE = {"dual": "dual", "dual_no_pa": "dual", "single_fast": "fast", "single_slow": "slow"}


class CurvePoint(NamedTuple):
    length_km: float
    rate_bps: float  # clamped at zero
    raw_rate_bps: float


@dataclass(frozen=True)
class RateCurve:
    points: tuple[CurvePoint, ...]

    def __post_init__(self) -> None:
        lengths = [p.length_km for p in self.points]
        if any(b <= a for a, b in zip(lengths, lengths[1:])):
            raise DomainError("curve lengths must be strictly increasing")
        for p in self.points:
            if p.rate_bps != max(0.0, p.raw_rate_bps):
                raise DomainError("clamped rate must equal max(0, raw rate)")

    @property
    def lengths(self) -> list[float]:
        return [p.length_km for p in self.points]


def length_grid(l_min: float, l_max: float, step: float) -> list[float]:
    """Inclusive grid l_min, l_min+step, ... up to l_max."""
    if l_min < 0.0 or not l_min < l_max:
        raise DomainError(f"need 0 <= l_min < l_max, got [{l_min}, {l_max}]")
    if step <= 0.0:
        raise DomainError(f"step must be > 0, got {step}")
    n = int((l_max - l_min) / step + 1e-9)
    return [l_min + i * step for i in range(n + 1)]


def sweep(scenario: Scenario, l_min: float, l_max: float, step: float) -> RateCurve:
    """Evaluate the scenario on the inclusive grid."""
    points = []
    for length in length_grid(l_min, l_max, step):
        raw = evaluate(scenario, length)
        points.append(CurvePoint(length, max(0.0, raw), raw))
    return RateCurve(tuple(points))


def max_secure_distance(
    scenario: Scenario, l_max_search: float, coarse_step: float = 1.0
) -> float | None:
    """Largest length in [0, l_max_search] with a positive raw rate.

    None if the rate is non-positive already at length 0; l_max_search if
    it is still positive there. Otherwise the zero crossing, to 0.01 km.
    """
    grid = length_grid(0.0, l_max_search, coarse_step)
    rates = [evaluate(scenario, length) for length in grid]
    positive = [i for i, r in enumerate(rates) if r > 0.0]
    if not positive:
        return None
    last = positive[-1]
    if last == len(grid) - 1:
        return l_max_search
    return bisect_sign_change(
        lambda length: evaluate(scenario, length), grid[last], grid[last + 1], tol=DISTANCE_TOL / 5
    )


def crossover_distance(
    scenario_a: Scenario,
    scenario_b: Scenario | Sequence[Scenario],
    l_max_search: float,
    coarse_step: float = 1.0,
) -> float | None:
    """Smallest length where rate_a - rate_b turns from positive to non-positive.

    scenario_b may be a sequence, in which case the comparison is against
    the pointwise best (envelope) of its members. None when no such sign
    change occurs in [0, l_max_search].
    """
    others: tuple[Scenario, ...]
    if isinstance(scenario_b, Scenario):
        others = (scenario_b,)
    else:
        others = tuple(scenario_b)
        if not others:
            raise DomainError("scenario_b must contain at least one scenario")

    def diff(length: float) -> float:
        return evaluate(scenario_a, length) - max(evaluate(s, length) for s in others)

    grid = length_grid(0.0, l_max_search, coarse_step)
    diffs = [diff(length) for length in grid]
    for i in range(len(grid) - 1):
        if diffs[i] > 0.0 and diffs[i + 1] <= 0.0:
            if diffs[i + 1] == 0.0 and i + 2 < len(grid) and diffs[i + 2] > 0.0:
                # Tangency within the cell: no strict crossing to bisect.
                warnings.warn(
                    f"curves touch near {grid[i + 1]:.2f} km without crossing; "
                    "reporting the bracketing cell midpoint",
                    stacklevel=2,
                )
                return 0.5 * (grid[i] + grid[i + 1])
            return bisect_sign_change(diff, grid[i], grid[i + 1], tol=DISTANCE_TOL / 5)
    return None


# ---------------------------------------------------------------------------
# CSV emission: LF line endings, lengths to 2 decimals, rates in scientific
# notation with 6 significant digits, absent columns left empty.


def format_length(length_km: float) -> str:
    return f"{length_km:.2f}"


def format_rate(rate_bps: float) -> str:
    return f"{rate_bps:.5e}"


def write_curves_csv(curves: Mapping[str, RateCurve], out: TextIO) -> None:
    """Write clamped-rate curves keyed by role ('dual', 'fast', 'slow')."""
    unknown = set(curves) - set(CURVE_ROLES)
    if unknown:
        raise DomainError(f"unknown curve roles: {sorted(unknown)}")
    if not curves:
        raise DomainError("no curves to write")
    grids = {tuple(c.lengths) for c in curves.values()}
    if len(grids) != 1:
        raise DomainError("all curves must share one length grid")

    out.write(",".join(CSV_HEADER) + "\n")
    lengths = next(iter(grids))
    by_role = {role: curves.get(role) for role in CURVE_ROLES}
    for i, length in enumerate(lengths):
        cells = [format_length(length)]
        for role in CURVE_ROLES:
            curve = by_role[role]
            cells.append(format_rate(curve.points[i].rate_bps) if curve else "")
        out.write(",".join(cells) + "\n")


def save_curves_csv(curves: Mapping[str, RateCurve], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_curves_csv(curves, fh)


def read_curves_csv(path: str | Path) -> tuple[list[float], dict[str, list[float | None]]]:
    """Parse a curves CSV back into lengths and per-role clamped rates."""
    with open(path, encoding="utf-8", newline="") as fh:
        lines = fh.read().splitlines()
    if not lines or tuple(lines[0].split(",")) != CSV_HEADER:
        raise DomainError(f"unexpected CSV header in {path}")
    lengths: list[float] = []
    columns: dict[str, list[float | None]] = {role: [] for role in CURVE_ROLES}
    for line in lines[1:]:
        cells = line.split(",")
        if len(cells) != len(CSV_HEADER):
            raise DomainError(f"malformed CSV row: {line!r}")
        lengths.append(float(cells[0]))
        for role, cell in zip(CURVE_ROLES, cells[1:]):
            columns[role].append(float(cell) if cell else None)
    return lengths, columns


def sweep_preset(preset, roles: Iterable[str] = CURVE_ROLES) -> dict[str, RateCurve]:
    """Sweep the preset's scenarios over its grid, keyed by role."""
    return {
        role: sweep(preset.scenarios[role], preset.l_min, preset.l_max, preset.step)
        for role in roles
    }
