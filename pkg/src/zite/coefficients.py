"""Refractive index n(r, theta) and boundary parameter eta(theta).

Volume coefficients are evaluated as ``f(r, theta)``; boundary coefficients
as ``f(theta)``. Constants may serve as either.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import ConfigError, PositivityError

VOLUME = "volume"
BOUNDARY = "boundary"


def _n1(r, t):
    return 4.0 - r**2 * (1.0 - 0.5 * np.sin(t))


def _n2(r, t):
    return 4.0 + r**2 * (1.0 - 0.5 * np.sin(t))


def _eta1(t):
    return 1.0 / (1.0 + 2.0 * np.sin(t) ** 2)


def _eta2(t):
    return 1.0 + 2.0 * np.sin(t) ** 2


# name -> (domain, evaluator, declared (min, max))
PRESETS = {
    "n1": (VOLUME, _n1, (2.5, 4.0)),
    "n2": (VOLUME, _n2, (4.0, 5.5)),
    "eta1": (BOUNDARY, _eta1, (1.0 / 3.0, 1.0)),
    "eta2": (BOUNDARY, _eta2, (1.0, 3.0)),
}


@dataclass(frozen=True)
class Coefficient:
    """A positive coefficient: a constant, a named preset, or a user evaluator."""

    kind: str
    domain: Optional[str] = None
    value: Optional[float] = None
    name: Optional[str] = None
    func: Optional[Callable] = field(default=None, compare=False, repr=False)
    declared_bounds: Optional[tuple[float, float]] = None

    @classmethod
    def constant(cls, value: float) -> "Coefficient":
        value = float(value)
        if not value > 0.0:
            raise PositivityError(f"constant coefficient must be positive, got {value}")
        return cls("constant", None, value, None, None, (value, value))

    @classmethod
    def preset(cls, name: str) -> "Coefficient":
        if name not in PRESETS:
            raise KeyError(f"unknown preset {name!r}; known: {sorted(PRESETS)}")
        domain, func, bounds = PRESETS[name]
        return cls("preset", domain, None, name, func, bounds)

    @classmethod
    def user(cls, func: Callable, domain: str, bounds=None) -> "Coefficient":
        if domain not in (VOLUME, BOUNDARY):
            raise ValueError(f"domain must be {VOLUME!r} or {BOUNDARY!r}")
        return cls("user", domain, None, "user", func, bounds)

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    def spec(self) -> str:
        """Config-file spelling (``const:<v>`` or ``preset:<name>``)."""
        if self.kind == "constant":
            return f"const:{self.value!r}"
        if self.kind == "preset":
            return f"preset:{self.name}"
        raise ValueError("user coefficients have no config spelling")

    def __str__(self) -> str:
        return self.spec() if self.kind != "user" else "user"


def _checked(vals, what: str) -> np.ndarray:
    vals = np.asarray(vals, dtype=float)
    if np.any(~(vals > 0.0)):
        bad = vals[~(vals > 0.0)]
        raise PositivityError(f"{what} is not strictly positive (found {bad.flat[0]:g})")
    return vals


def eval_n(c: Coefficient, r, theta):
    """Evaluate a volume coefficient; raises PositivityError on non-positive values."""
    if c.kind == "constant":
        shape = np.broadcast(np.asarray(r), np.asarray(theta)).shape
        out = np.full(shape, c.value)
    else:
        if c.domain != VOLUME:
            raise ValueError(f"{c} is a boundary coefficient, not a volume one")
        out = np.broadcast_to(c.func(np.asarray(r, float), np.asarray(theta, float)),
                              np.broadcast(np.asarray(r), np.asarray(theta)).shape)
    out = _checked(out, f"coefficient {c}")
    return float(out) if out.ndim == 0 else out


def eval_eta(c: Coefficient, theta):
    """Evaluate a boundary coefficient; raises PositivityError on non-positive values."""
    if c.kind == "constant":
        out = np.full(np.shape(theta), c.value)
    else:
        if c.domain != BOUNDARY:
            raise ValueError(f"{c} is a volume coefficient, not a boundary one")
        out = np.broadcast_to(c.func(np.asarray(theta, float)), np.shape(theta))
    out = _checked(out, f"coefficient {c}")
    return float(out) if out.ndim == 0 else out


def sampled_bounds(c: Coefficient, radial=None, angular=None) -> tuple[float, float]:
    """Declared bounds if any, otherwise min/max over the quadrature grid."""
    if c.declared_bounds is not None:
        return c.declared_bounds
    from .quadrature import default_rules

    if radial is None or angular is None:
        radial, angular = default_rules()
    t = angular.nodes
    if c.domain == VOLUME:
        vals = eval_n(c, radial.nodes[:, None], t[None, :])
    else:
        vals = eval_eta(c, t)
    return float(np.min(vals)), float(np.max(vals))


def parse_coefficient(spec: str, domain: str) -> Coefficient:
    """Parse ``const:<float>`` or ``preset:<name>`` for the given domain."""
    kind, sep, arg = spec.strip().partition(":")
    if not sep:
        raise ConfigError(f"coefficient spec {spec!r} must look like const:<v> or preset:<name>")
    if kind == "const":
        try:
            value = float(arg)
        except ValueError:
            raise ConfigError(f"bad constant in {spec!r}") from None
        if not np.isfinite(value) or value <= 0.0:
            raise ConfigError(f"constant coefficient must be positive and finite: {spec!r}")
        return Coefficient.constant(value)
    if kind == "preset":
        if arg not in PRESETS:
            raise ConfigError(f"unknown preset {arg!r}")
        if PRESETS[arg][0] != domain:
            raise ConfigError(f"preset {arg!r} is a {PRESETS[arg][0]} coefficient")
        return Coefficient.preset(arg)
    raise ConfigError(f"unknown coefficient kind {kind!r} in {spec!r}")
