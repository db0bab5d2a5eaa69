"""Closed-form models for microstrip impedance and patch-antenna resonance.

These functions are the ground truth used to generate training sweeps and
to score surrogates. They work on plain floats.

Example::

    >>> from txml.analytic import MicrostripGeometry, microstrip_impedance
    >>> round(microstrip_impedance(MicrostripGeometry(eps_r=2.0, w_over_h=2.0)), 3)
    68.781

References:
    K. C. Gupta, R. Garg, I. J. Bahl, "Microstrip Lines and Slotlines", 1979.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConfigurationError, DomainError, SingularityError, UnknownKindError

# Exactly 3e8: the 9.5 mm effective patch length only back-solves to a round
# number with this value.
SPEED_OF_LIGHT = 3.0e8

# Pole of the fringing correction factor (eps_eff - 0.258).
_DELTA_L_POLE = 0.258

VARIANTS = ("standard", "printed")


@dataclass(frozen=True)
class PhysicalConstants:
    c_m_per_s: float = SPEED_OF_LIGHT


@dataclass(frozen=True)
class MicrostripGeometry:
    """Microstrip cross-section reduced to the two quantities the model uses.

    The quasi-static formulas are only valid for wide strips, so
    ``w_over_h`` must be at least 1.
    """

    eps_r: float
    w_over_h: float

    def __post_init__(self):
        _check_eps_r(self.eps_r)
        if not math.isfinite(self.w_over_h) or self.w_over_h < 1.0:
            raise DomainError(f"microstrip formulas need w/h >= 1, got {self.w_over_h!r}")


@dataclass(frozen=True)
class PatchGeometry:
    """Rectangular patch over a ground plane.

    Frequency is driven either by the physical patch length together with
    the substrate height (``L + 2*dL``), or by an already calibrated
    ``effective_length_m``. Exactly one of the two forms must be given.
    """

    eps_r: float
    w_over_h: float
    substrate_height_m: float | None = None
    patch_length_m: float | None = None
    effective_length_m: float | None = None

    def __post_init__(self):
        _check_eps_r(self.eps_r)
        _check_positive("w_over_h", self.w_over_h)
        for name in ("substrate_height_m", "patch_length_m", "effective_length_m"):
            value = getattr(self, name)
            if value is not None:
                _check_positive(name, value)
        physical = self.patch_length_m is not None and self.substrate_height_m is not None
        partial = (self.patch_length_m is None) != (self.substrate_height_m is None)
        calibrated = self.effective_length_m is not None
        if calibrated and (physical or partial):
            raise ConfigurationError(
                "give either effective_length_m or patch_length_m + substrate_height_m, not both"
            )
        if not calibrated and not physical:
            raise ConfigurationError(
                "patch frequency needs effective_length_m or patch_length_m + substrate_height_m"
            )


def _check_eps_r(eps_r: float) -> None:
    if not math.isfinite(eps_r) or eps_r < 1.0:
        raise DomainError(f"eps_r must be >= 1, got {eps_r!r}")


def _check_positive(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name} must be positive, got {value!r}")


def effective_permittivity(eps_r: float, w_over_h: float) -> float:
    """Effective dielectric constant seen by the quasi-TEM mode.

    Args:
        eps_r: substrate relative permittivity, >= 1.
        w_over_h: strip (or patch) width over substrate height, > 0.

    Returns:
        A value in ``[1, eps_r]``.
    """
    _check_eps_r(eps_r)
    _check_positive("w_over_h", w_over_h)
    return (eps_r + 1.0) / 2.0 + (eps_r - 1.0) / 2.0 / math.sqrt(1.0 + 12.0 / w_over_h)


def microstrip_impedance(geom: MicrostripGeometry) -> float:
    """Characteristic impedance in ohms of a wide microstrip line."""
    u = geom.w_over_h
    eps_eff = effective_permittivity(geom.eps_r, u)
    # Parenthesized term divides: the multiplier form does not reproduce
    # the published impedance values.
    return 120.0 * math.pi / (math.sqrt(eps_eff) * (u + 1.393 + (2.0 / 3.0) * math.log(u + 1.444)))


def patch_length_extension(
    eps_eff: float,
    w_over_h: float,
    substrate_height_m: float,
    variant: str = "standard",
) -> float:
    """Fringing-field length extension at each radiating edge, in meters.

    ``standard`` is the usual Hammerstad form with the ``(w/h + 0.8)``
    divisor; ``printed`` omits that divisor, so
    ``printed == standard * (w/h + 0.8)``.
    """
    if variant not in VARIANTS:
        raise UnknownKindError(f"unknown length-extension variant {variant!r}")
    if not math.isfinite(eps_eff):
        raise DomainError(f"eps_eff must be finite, got {eps_eff!r}")
    if eps_eff <= _DELTA_L_POLE:
        raise SingularityError(
            f"eps_eff={eps_eff!r} is at or below the pole {_DELTA_L_POLE} of the length correction"
        )
    _check_positive("w_over_h", w_over_h)
    _check_positive("substrate_height_m", substrate_height_m)
    delta = (
        0.412
        * substrate_height_m
        * (eps_eff + 0.3)
        * (w_over_h + 0.264)
        / (eps_eff - _DELTA_L_POLE)
    )
    if variant == "standard":
        delta /= w_over_h + 0.8
    return delta


def patch_resonant_frequency(
    geom: PatchGeometry,
    variant: str = "standard",
    constants: PhysicalConstants = PhysicalConstants(),
) -> float:
    """Resonant frequency in hertz of the dominant patch mode."""
    eps_eff = effective_permittivity(geom.eps_r, geom.w_over_h)
    if geom.effective_length_m is not None:
        length = geom.effective_length_m
    else:
        dl = patch_length_extension(eps_eff, geom.w_over_h, geom.substrate_height_m, variant)
        length = geom.patch_length_m + 2.0 * dl
    return constants.c_m_per_s / (2.0 * math.sqrt(eps_eff) * length)


# kind -> unit of the target quantity
LINE_KINDS = {
    "microstrip_impedance": "ohm",
    "patch_frequency": "hertz",
}

PATCH_PARAMS = ("effective_length_m", "patch_length_m", "substrate_height_m")


def line_model(kind: str, variant: str = "standard") -> Callable[..., float]:
    """Return a pure evaluator ``f(eps_r, w_over_h, **fixed_params)`` for ``kind``.

    Microstrip evaluators take no fixed params. Patch evaluators accept the
    length fields of :class:`PatchGeometry` as keywords.
    """
    if kind == "microstrip_impedance":

        def evaluate(eps_r: float, w_over_h: float, **fixed_params: float) -> float:
            if fixed_params:
                raise ConfigurationError(
                    f"microstrip impedance takes no fixed params, got {sorted(fixed_params)}"
                )
            return microstrip_impedance(MicrostripGeometry(eps_r, w_over_h))

    elif kind == "patch_frequency":
        if variant not in VARIANTS:
            raise UnknownKindError(f"unknown length-extension variant {variant!r}")

        def evaluate(eps_r: float, w_over_h: float, **fixed_params: float) -> float:
            unknown = set(fixed_params) - set(PATCH_PARAMS)
            if unknown:
                raise ConfigurationError(f"unknown patch params {sorted(unknown)}")
            return patch_resonant_frequency(PatchGeometry(eps_r, w_over_h, **fixed_params), variant)

    else:
        raise UnknownKindError(f"unknown line kind {kind!r}; known: {sorted(LINE_KINDS)}")
    evaluate.kind = kind
    return evaluate


def min_w_over_h(kind: str) -> float:
    """Lower bound (inclusive) on w/h for ``kind``; 0 means strictly positive."""
    if kind == "microstrip_impedance":
        return 1.0
    if kind == "patch_frequency":
        return 0.0
    raise UnknownKindError(f"unknown line kind {kind!r}")
