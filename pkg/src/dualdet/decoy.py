"""Asymptotic decoy-state BB84 with a weak coherent (Poisson) source.

With ideal decoy states the signal gain/QBER and the single-photon
gain/QBER are known exactly, so the rate bound needs no linear program.
Error correction is paid on all signal detections; privacy amplification
only on the single-photon fraction, which is where a quiet second
detector helps: it tightens the single-photon error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    E0,
    DomainError,
    LinkSpec,
    SpdSpec,
    binary_entropy,
    bisect_sign_change,
    db_to_transmittance,
)
from .bb84 import BASIS_FACTORS


@dataclass(frozen=True)
class DecoyConfig:
    """Source intensity and protocol constants.

    mu: mean photon number of the signal state.
    drop_pa: diagnostic mode that omits the privacy-amplification term,
        showing how much of the rate loss is error correction alone.
    """

    mu: float
    basis_factor: float = 0.5
    f_ec: float = 1.22
    drop_pa: bool = False

    def __post_init__(self) -> None:
        if self.mu <= 0.0:
            raise DomainError(f"mu must be > 0, got {self.mu}")
        if self.basis_factor not in BASIS_FACTORS:
            raise DomainError(f"basis_factor must be 0.5 or 1.0, got {self.basis_factor}")
        if self.f_ec < 1.0:
            raise DomainError(f"f_ec must be >= 1, got {self.f_ec}")


def _overall_eta(spd: SpdSpec, link: LinkSpec, extra_loss: float) -> float:
    if not 0.0 < extra_loss <= 1.0:
        raise DomainError(f"extra_loss must be in (0, 1], got {extra_loss}")
    return link.g_ch * link.g_bob * extra_loss * spd.eta_d


def decoy_signal_gain(mu: float, spd: SpdSpec, link: LinkSpec, extra_loss: float = 1.0) -> float:
    """Gain of the signal state: Q_mu = y0 + 1 - exp(-eta*mu)."""
    eta = _overall_eta(spd, link, extra_loss)
    return spd.y0 + 1.0 - math.exp(-eta * mu)


def decoy_signal_qber(mu: float, spd: SpdSpec, link: LinkSpec, extra_loss: float = 1.0) -> float:
    """Overall QBER of the signal state."""
    eta = _overall_eta(spd, link, extra_loss)
    gain = decoy_signal_gain(mu, spd, link, extra_loss)
    if gain == 0.0:
        raise ZeroDivisionError("signal gain is zero; QBER undefined")
    return (E0 * spd.y0 + spd.e_det * (1.0 - math.exp(-eta * mu))) / gain


def decoy_single_photon_gain(mu: float, spd: SpdSpec, link: LinkSpec, extra_loss: float = 1.0) -> float:
    """Gain of the single-photon pulses: Q_1 = (y0 + eta) * mu * exp(-mu)."""
    eta = _overall_eta(spd, link, extra_loss)
    return (spd.y0 + eta) * mu * math.exp(-mu)


def decoy_single_photon_qber(mu: float, spd: SpdSpec, link: LinkSpec, extra_loss: float = 1.0) -> float:
    """QBER of the single-photon pulses.

    The Poisson weight mu*exp(-mu) cancels against the same factor in the
    single-photon gain, so the result is independent of mu.
    """
    eta = _overall_eta(spd, link, extra_loss)
    gain_1 = decoy_single_photon_gain(mu, spd, link, extra_loss)
    if gain_1 == 0.0:
        raise ZeroDivisionError("single-photon gain is zero; QBER undefined")
    return (E0 * spd.y0 + spd.e_det * eta) * mu * math.exp(-mu) / gain_1


def decoy_rate_single(spd: SpdSpec, link: LinkSpec, cfg: DecoyConfig) -> float:
    """Key rate in bits/s for one detector, no routing switch in the path."""
    q_mu = decoy_signal_gain(cfg.mu, spd, link)
    e_mu = decoy_signal_qber(cfg.mu, spd, link)
    q_1 = decoy_single_photon_gain(cfg.mu, spd, link)
    per_pulse = q_1 - cfg.f_ec * q_mu * binary_entropy(e_mu)
    if not cfg.drop_pa:
        per_pulse -= q_1 * binary_entropy(decoy_single_photon_qber(cfg.mu, spd, link))
    return cfg.basis_factor * spd.rep_rate * per_pulse


def decoy_rate_dual(fast: SpdSpec, slow: SpdSpec, link: LinkSpec, cfg: DecoyConfig) -> float:
    """Key rate in bits/s with gains and error correction from the fast
    detector and the privacy-amplification error bound from the slow one.

    Switch loss applies to both detectors' parameters.
    """
    extra = db_to_transmittance(link.switch_loss)
    q_mu = decoy_signal_gain(cfg.mu, fast, link, extra)
    e_mu = decoy_signal_qber(cfg.mu, fast, link, extra)
    q_1 = decoy_single_photon_gain(cfg.mu, fast, link, extra)
    per_pulse = q_1 - cfg.f_ec * q_mu * binary_entropy(e_mu)
    if not cfg.drop_pa:
        per_pulse -= q_1 * binary_entropy(decoy_single_photon_qber(cfg.mu, slow, link, extra))
    return cfg.basis_factor * fast.rep_rate * per_pulse


def optimal_mu(e_det: float, f_ec: float, residual_tol: float = 1e-10) -> float:
    """Solve (1 - mu) * exp(-mu) = f_ec * H2(e_det) / (1 - H2(e_det)) for mu.

    The left side falls strictly from 1 to 0 as mu goes from 0 to 1, so a
    root exists and is unique whenever the right side lies in (0, 1).
    Found by bisection; the returned value has residual below residual_tol.
    """
    if not 0.0 < e_det < 0.5:
        raise DomainError(f"e_det must be in (0, 0.5), got {e_det}")
    if f_ec < 1.0:
        raise DomainError(f"f_ec must be >= 1, got {f_ec}")
    h = binary_entropy(e_det)
    rhs = f_ec * h / (1.0 - h)
    if not 0.0 < rhs < 1.0:
        raise DomainError(
            f"no root: f_ec*H2(e_det)/(1-H2(e_det)) = {rhs} falls outside (0, 1)"
        )
    root = bisect_sign_change(
        lambda mu: (1.0 - mu) * math.exp(-mu) - rhs, 0.0, 1.0, tol=1e-14
    )
    residual = abs((1.0 - root) * math.exp(-root) - rhs)
    if residual >= residual_tol:
        raise DomainError(f"bisection residual {residual} exceeds {residual_tol}")
    return root
