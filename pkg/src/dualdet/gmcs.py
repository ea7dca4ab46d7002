"""Gaussian-modulated coherent-state (CV) QKD rates, direct and reverse
reconciliation, against individual attacks.

All noises are referred to the channel input: transmission loss G shows up
as vacuum noise (1-G)/G, and detector excess noise is divided by G. The
dual-detector receiver measures with a quiet detector a small fraction of
the time and uses that arm's noise budget to bound the eavesdropper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import DomainError, GmcsSource, HomodyneSpec, LinkSpec


class MismatchedEfficiencyError(DomainError):
    """Reverse reconciliation needs both homodyne detectors to share g_det.

    The eavesdropper bound on the receiver's data depends on the overall
    transmittance, so a quiet arm with a different efficiency says nothing
    about the keyed arm.
    """


@dataclass(frozen=True)
class GmcsNoiseBudget:
    """Input-referred noise decomposition for one detector arm.

    g: overall transmittance (channel * detector * optional switch).
    chi_vac: vacuum noise (1-g)/g from transmission loss.
    eps: total excess noise eps_pre + eps_det/g.
    chi: equivalent input noise chi_vac + eps.
    """

    g: float
    chi_vac: float
    eps: float
    chi: float

    def __post_init__(self) -> None:
        if not 0.0 < self.g <= 1.0:
            raise DomainError(f"g must be in (0, 1], got {self.g}")
        if self.chi_vac < 0.0:
            raise DomainError(f"chi_vac must be >= 0, got {self.chi_vac}")
        if self.chi != self.chi_vac + self.eps:
            raise DomainError("chi must equal chi_vac + eps")


def noise_budget(
    source: GmcsSource, det: HomodyneSpec, link: LinkSpec, include_switch: bool = False
) -> GmcsNoiseBudget:
    """Build the input-referred noise budget for one detector arm."""
    g = link.g_ch * det.g_det
    if include_switch:
        g *= link.switch_transmittance
    if g == 0.0:
        raise DomainError("overall transmittance is zero")
    chi_vac = (1.0 - g) / g
    eps = source.eps_pre + det.eps_det / g
    return GmcsNoiseBudget(g=g, chi_vac=chi_vac, eps=eps, chi=chi_vac + eps)


def mutual_info_ab(v: float, chi: float) -> float:
    """Mutual information (1/2)*log2[(v+chi)/(1+chi)] in bits per pulse.

    Symmetric between the two reconciliation directions, so it serves both
    the sender-referenced and receiver-referenced key maps.
    """
    if v < 1.0:
        raise DomainError(f"v must be >= 1, got {v}")
    if chi < 0.0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    return 0.5 * math.log2((v + chi) / (1.0 + chi))


def info_ae(v: float, chi: float) -> float:
    """Eavesdropper information on the sender: (1/2)*log2[(v+1/chi)/(1+1/chi)].

    At chi = 0 the channel is lossless and noiseless and the expression's
    limit is 0 bits; that edge is returned directly.
    """
    if v < 1.0:
        raise DomainError(f"v must be >= 1, got {v}")
    if chi < 0.0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    if chi == 0.0:
        return 0.0
    inv = 1.0 / chi
    return 0.5 * math.log2((v + inv) / (1.0 + inv))


def info_be(v: float, chi: float, g: float) -> float:
    """Eavesdropper information on the receiver: (1/2)*log2[g^2*(v+chi)*(1/v+chi)]."""
    if v < 1.0:
        raise DomainError(f"v must be >= 1, got {v}")
    if chi < 0.0:
        raise DomainError(f"chi must be >= 0, got {chi}")
    if not 0.0 < g <= 1.0:
        raise DomainError(f"g must be in (0, 1], got {g}")
    if chi == 0.0:
        # v*(1/v) rounds off exact 1; at chi = 0 the argument is exactly g^2.
        return math.log2(g)
    arg = g * g * (v + chi) * (1.0 / v + chi)
    if arg <= 0.0:
        raise DomainError(f"log argument must be > 0, got {arg}")
    return 0.5 * math.log2(arg)


def gmcs_dr_rate_single(source: GmcsSource, det: HomodyneSpec, link: LinkSpec) -> float:
    """Direct-reconciliation rate in bits/s for one detector, no switch."""
    budget = noise_budget(source, det, link)
    return det.rep_rate * (
        source.beta * mutual_info_ab(source.v, budget.chi) - info_ae(source.v, budget.chi)
    )


def gmcs_dr_rate_dual(
    source: GmcsSource, fast: HomodyneSpec, slow: HomodyneSpec, link: LinkSpec
) -> float:
    """Direct-reconciliation rate in bits/s with the fast arm keyed.

    Both arms sit behind the switch, so both budgets include its loss. The
    vacuum-noise term is shared (taken from the keyed arm); each arm
    contributes its own excess noise.
    """
    fast_budget = noise_budget(source, fast, link, include_switch=True)
    slow_budget = noise_budget(source, slow, link, include_switch=True)
    chi_vac = fast_budget.chi_vac
    return fast.rep_rate * (
        source.beta * mutual_info_ab(source.v, chi_vac + fast_budget.eps)
        - info_ae(source.v, chi_vac + slow_budget.eps)
    )


def gmcs_rr_rate_single(source: GmcsSource, det: HomodyneSpec, link: LinkSpec) -> float:
    """Reverse-reconciliation rate in bits/s for one detector, no switch."""
    budget = noise_budget(source, det, link)
    return det.rep_rate * (
        source.beta * mutual_info_ab(source.v, budget.chi)
        - info_be(source.v, budget.chi, budget.g)
    )


def gmcs_rr_rate_dual(
    source: GmcsSource, fast: HomodyneSpec, slow: HomodyneSpec, link: LinkSpec
) -> float:
    """Reverse-reconciliation rate in bits/s with the fast arm keyed.

    Requires identical detection efficiencies on the two arms; otherwise
    the quiet arm's eavesdropper bound does not transfer to the keyed arm.
    """
    if fast.g_det != slow.g_det:
        raise MismatchedEfficiencyError(
            f"detector efficiencies differ: {fast.g_det} vs {slow.g_det}"
        )
    fast_budget = noise_budget(source, fast, link, include_switch=True)
    slow_budget = noise_budget(source, slow, link, include_switch=True)
    chi_vac = fast_budget.chi_vac
    return fast.rep_rate * (
        source.beta * mutual_info_ab(source.v, chi_vac + fast_budget.eps)
        - info_be(source.v, chi_vac + slow_budget.eps, fast_budget.g)
    )
