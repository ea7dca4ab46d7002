"""Scenario configuration: protocol + detectors + link, loadable from JSON.

A scenario is the unit the sweep tools evaluate: one protocol, one
detector configuration (single or dual), one link. Single-detector modes
never see the routing switch, so link.switch_loss only affects dual modes.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Union

from . import bb84, decoy, gmcs
from .core import DomainError, GmcsSource, HomodyneSpec, LinkSpec, SpdSpec

PROTOCOLS = ("bb84_single_photon", "decoy_bb84", "gmcs_dr", "gmcs_rr")
MODES = ("single_fast", "single_slow", "dual", "dual_no_pa")
SPD_PROTOCOLS = ("bb84_single_photon", "decoy_bb84")

Detector = Union[SpdSpec, HomodyneSpec]
ProtocolConfig = Union[bb84.Bb84Config, decoy.DecoyConfig, GmcsSource]


class ConfigError(ValueError):
    """A scenario file or scenario object is malformed or inconsistent."""


@dataclass(frozen=True)
class Scenario:
    protocol: str
    mode: str
    link: LinkSpec
    config: ProtocolConfig
    fast: Detector | None = None
    slow: Detector | None = None

    def __post_init__(self) -> None:
        validate_scenario(self)

    def at_length(self, length_km: float) -> "Scenario":
        """Copy of this scenario with the link length replaced."""
        return dataclasses.replace(self, link=dataclasses.replace(self.link, length=length_km))


def validate_scenario(s: Scenario) -> None:
    if s.protocol not in PROTOCOLS:
        raise ConfigError(f"unknown protocol {s.protocol!r}; expected one of {PROTOCOLS}")
    if s.mode not in MODES:
        raise ConfigError(f"unknown mode {s.mode!r}; expected one of {MODES}")
    if s.mode == "dual_no_pa" and s.protocol != "decoy_bb84":
        raise ConfigError("mode 'dual_no_pa' only applies to protocol 'decoy_bb84'")

    detector_cls = SpdSpec if s.protocol in SPD_PROTOCOLS else HomodyneSpec
    for label, det in (("fast", s.fast), ("slow", s.slow)):
        if det is not None and not isinstance(det, detector_cls):
            raise ConfigError(
                f"{label} detector kind {type(det).__name__} does not match "
                f"protocol {s.protocol!r} (expected {detector_cls.__name__})"
            )

    config_cls = {
        "bb84_single_photon": bb84.Bb84Config,
        "decoy_bb84": decoy.DecoyConfig,
        "gmcs_dr": GmcsSource,
        "gmcs_rr": GmcsSource,
    }[s.protocol]
    if not isinstance(s.config, config_cls):
        raise ConfigError(
            f"config kind {type(s.config).__name__} does not match protocol "
            f"{s.protocol!r} (expected {config_cls.__name__})"
        )

    if s.mode in ("dual", "dual_no_pa"):
        if s.fast is None or s.slow is None:
            raise ConfigError(f"mode {s.mode!r} needs both a fast and a slow detector")
        if s.protocol == "gmcs_rr" and s.fast.g_det != s.slow.g_det:
            raise ConfigError(
                "reverse reconciliation with dual detectors requires equal "
                f"detection efficiencies, got {s.fast.g_det} and {s.slow.g_det}"
            )
    elif s.mode == "single_fast" and s.fast is None:
        raise ConfigError("mode 'single_fast' needs a fast detector")
    elif s.mode == "single_slow" and s.slow is None:
        raise ConfigError("mode 'single_slow' needs a slow detector")


def evaluate(scenario: Scenario, length_km: float) -> float:
    """Raw (unclamped) key rate in bits/s at the given fiber length."""
    s = scenario.at_length(length_km)
    protocol, mode = s.protocol, s.mode

    if protocol == "bb84_single_photon":
        if mode == "dual":
            return bb84.bb84_rate_dual(s.fast, s.slow, s.link, s.config)
        det = s.fast if mode == "single_fast" else s.slow
        return bb84.bb84_rate_single(det, s.link, s.config)

    if protocol == "decoy_bb84":
        cfg = s.config
        if mode == "dual_no_pa":
            cfg = dataclasses.replace(cfg, drop_pa=True)
            mode = "dual"
        if mode == "dual":
            return decoy.decoy_rate_dual(s.fast, s.slow, s.link, cfg)
        det = s.fast if mode == "single_fast" else s.slow
        return decoy.decoy_rate_single(det, s.link, cfg)

    if protocol == "gmcs_dr":
        if mode == "dual":
            return gmcs.gmcs_dr_rate_dual(s.config, s.fast, s.slow, s.link)
        det = s.fast if mode == "single_fast" else s.slow
        return gmcs.gmcs_dr_rate_single(s.config, det, s.link)

    if mode == "dual":
        return gmcs.gmcs_rr_rate_dual(s.config, s.fast, s.slow, s.link)
    det = s.fast if mode == "single_fast" else s.slow
    return gmcs.gmcs_rr_rate_single(s.config, det, s.link)


# ---------------------------------------------------------------------------
# JSON loading

_LINK_KEYS = {"alpha_db_per_km", "length_km", "g_bob", "switch_loss_db"}
_SPD_KEYS = {"rep_rate_hz", "eta_d", "y0", "e_det"}
_HOMODYNE_KEYS = {"rep_rate_hz", "g_det", "eps_det"}
_CONFIG_KEYS = {
    "bb84_single_photon": ({"basis_factor", "f_ec"}, set()),
    "decoy_bb84": ({"mu", "basis_factor", "f_ec"}, {"drop_pa"}),
    "gmcs_dr": ({"v", "beta"}, {"eps_pre"}),
    "gmcs_rr": ({"v", "beta"}, {"eps_pre"}),
}


def _check_keys(obj: dict, required: set, optional: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise ConfigError(f"{where} must be a JSON object")
    unknown = set(obj) - required - optional
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")
    missing = required - set(obj)
    if missing:
        raise ConfigError(f"missing keys in {where}: {sorted(missing)}")


def _parse_detector(entry: Any, index: int) -> Detector:
    where = f"detectors[{index}]"
    if not isinstance(entry, dict) or len(entry) != 1:
        raise ConfigError(f"{where} must be an object with exactly one detector kind")
    kind, fields = next(iter(entry.items()))
    if kind == "spd":
        _check_keys(fields, _SPD_KEYS, set(), where)
        return SpdSpec(
            rep_rate=fields["rep_rate_hz"],
            eta_d=fields["eta_d"],
            y0=fields["y0"],
            e_det=fields["e_det"],
        )
    if kind == "homodyne":
        _check_keys(fields, _HOMODYNE_KEYS, set(), where)
        return HomodyneSpec(
            rep_rate=fields["rep_rate_hz"],
            g_det=fields["g_det"],
            eps_det=fields["eps_det"],
        )
    raise ConfigError(f"{where}: unknown detector kind {kind!r}; expected 'spd' or 'homodyne'")


def _parse_config(obj: Any, protocol: str) -> ProtocolConfig:
    required, optional = _CONFIG_KEYS[protocol]
    _check_keys(obj, required, optional, "config")
    if protocol == "bb84_single_photon":
        return bb84.Bb84Config(basis_factor=obj["basis_factor"], f_ec=obj["f_ec"])
    if protocol == "decoy_bb84":
        return decoy.DecoyConfig(
            mu=obj["mu"],
            basis_factor=obj["basis_factor"],
            f_ec=obj["f_ec"],
            drop_pa=obj.get("drop_pa", False),
        )
    return GmcsSource(v=obj["v"], beta=obj["beta"], eps_pre=obj.get("eps_pre", 0.0))


def scenario_from_dict(data: Any) -> Scenario:
    """Build and validate a Scenario from decoded JSON."""
    _check_keys(data, {"protocol", "mode", "link", "detectors", "config"}, set(), "scenario")
    protocol = data["protocol"]
    if protocol not in PROTOCOLS:
        raise ConfigError(f"unknown protocol {protocol!r}; expected one of {PROTOCOLS}")

    link_obj = data["link"]
    _check_keys(link_obj, {"alpha_db_per_km"}, _LINK_KEYS - {"alpha_db_per_km"}, "link")
    detectors = data["detectors"]
    if not isinstance(detectors, list) or not 1 <= len(detectors) <= 2:
        raise ConfigError("detectors must be an array of 1 or 2 entries (fast first)")

    try:
        link = LinkSpec(
            alpha=link_obj["alpha_db_per_km"],
            length=link_obj.get("length_km", 0.0),
            g_bob=link_obj.get("g_bob", 1.0),
            switch_loss=link_obj.get("switch_loss_db", 0.0),
        )
        parsed = [_parse_detector(d, i) for i, d in enumerate(detectors)]
        config = _parse_config(data["config"], protocol)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"malformed scenario: {exc}") from exc

    mode = data["mode"]
    if len(parsed) == 2:
        fast, slow = parsed
    elif mode == "single_slow":
        fast, slow = None, parsed[0]
    else:
        fast, slow = parsed[0], None

    try:
        return Scenario(protocol=protocol, mode=mode, link=link, config=config, fast=fast, slow=slow)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc


def load_scenario(path: str | Path) -> Scenario:
    """Load a scenario from a JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    return scenario_from_dict(data)
