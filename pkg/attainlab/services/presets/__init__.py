"""Preset library: models that come with their own couplings."""
import inspect
from typing import Any, Callable, Dict

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.presets.elliptic import elliptic_solution, mean_value, sine_projection
from attainlab.services.presets.finite import preset_finite
from attainlab.services.presets.neutral import neutral_quasipolynomial, preset_neutral
from attainlab.services.presets.wave import preset_wave
from attainlab.services.spectral.types import ModalSystem

PRESETS: Dict[str, Callable[..., ModalSystem]] = {
    "wave": preset_wave,
    "finite": preset_finite,
    "neutral": preset_neutral,
}


def build_preset(name: str, params: Dict[str, Any]) -> ModalSystem:
    """Build a registered preset from keyword parameters."""
    if name not in PRESETS:
        raise InvalidArgumentError(f"unknown preset '{name}', expected one of {sorted(PRESETS)}")
    builder = PRESETS[name]
    accepted = inspect.signature(builder).parameters
    unknown = sorted(set(params) - set(accepted))
    if unknown:
        raise InvalidArgumentError(f"preset '{name}' does not take {unknown}")
    return builder(**params)


def describe_presets() -> Dict[str, Dict[str, Any]]:
    """Parameter names and defaults of every preset."""
    listing = {}
    for name, builder in PRESETS.items():
        params = {}
        for pname, param in inspect.signature(builder).parameters.items():
            params[pname] = None if param.default is inspect.Parameter.empty else param.default
        listing[name] = {"parameters": params, "summary": inspect.getdoc(builder).splitlines()[0]}
    return listing


__all__ = [
    "PRESETS",
    "build_preset",
    "describe_presets",
    "elliptic_solution",
    "mean_value",
    "sine_projection",
    "preset_finite",
    "preset_neutral",
    "neutral_quasipolynomial",
    "preset_wave",
]
