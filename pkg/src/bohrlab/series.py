"""Truncated complex power series and the enlarged-disk geometry.

The basic value type is an immutable coefficient vector a_0..a_N together
with optional tail metadata: a certificate that |a_n| <= C * q**n for every
index beyond the stored order.  All arithmetic is plain double precision;
the tail metadata is what lets the downstream evaluators report rigorous
truncation bounds instead of silently dropping mass.

Everything here is a pure function of immutable inputs, so values can be
shared freely across threads and parameter sweeps.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as _npoly

__all__ = [
    "DEFAULT_ORDER",
    "TailBound",
    "PowerSeries",
    "DiskDomain",
    "add",
    "mul",
    "differentiate",
    "numeric_taylor",
    "recenter_affine",
    "recenter_affine_inverse",
    "reconstruction_error",
]

# Extremal-family coefficients decay like q**n with q < 1; at this order the
# neglected majorant tail is far below every tolerance used by the solvers.
DEFAULT_ORDER = 2048


@dataclass(frozen=True)
class TailBound:
    """Certificate |a_n| <= C * q**n for all coefficients beyond the stored order."""

    q: float
    C: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.q < 1.0:
            raise ValueError(f"tail ratio must lie in [0, 1), got {self.q}")
        if not (math.isfinite(self.C) and self.C >= 0.0):
            raise ValueError(f"tail constant must be finite and nonnegative, got {self.C}")


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients a_0..a_N of an analytic function.

    The arithmetic never depends on where the expansion is centered; a series
    about a point c is evaluated by passing z - c to :meth:`evaluate`.
    """

    coeffs: np.ndarray
    tail: TailBound | None = None

    def __post_init__(self) -> None:
        arr = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if arr.size == 0:
            raise ValueError("a series needs at least its constant coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series coefficients must be finite")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def polynomial(cls, coeffs) -> "PowerSeries":
        """A series that is exactly the stored polynomial (provably zero tail)."""
        return cls(np.asarray(coeffs, dtype=np.complex128), TailBound(0.0, 0.0))

    @classmethod
    def constant(cls, value: complex, order: int = 0) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c, TailBound(0.0, 0.0))

    @classmethod
    def zero(cls, order: int = 0) -> "PowerSeries":
        return cls.constant(0.0, order)

    # ------------------------------------------------------------------
    # views

    @property
    def order(self) -> int:
        """Truncation order N; ``coeffs`` holds a_0..a_N."""
        return self.coeffs.size - 1

    def abs_coeffs(self) -> np.ndarray:
        return np.abs(self.coeffs)

    def evaluate(self, z):
        """Evaluate at z (scalar or array).  For a series about c pass z - c."""
        return _npoly.polyval(z, self.coeffs)

    def __call__(self, z):
        return self.evaluate(z)

    # ------------------------------------------------------------------
    # serialization: {"coeffs": [[re, im], ...], "order": N, "tail": {...} | null}

    def to_dict(self) -> dict:
        tail = None if self.tail is None else {"q": self.tail.q, "C": self.tail.C}
        return {
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
            "order": self.order,
            "tail": tail,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PowerSeries":
        coeffs = np.array([complex(re, im) for re, im in data["coeffs"]])
        if data.get("order") is not None and int(data["order"]) != len(coeffs) - 1:
            raise ValueError("order field disagrees with the coefficient count")
        tail = data.get("tail")
        return cls(coeffs, None if tail is None else TailBound(float(tail["q"]), float(tail["C"])))


def add(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Coefficientwise sum, truncated to the smaller order.

    Tail certificates combine by sum (C1+C2, max ratio), but only when both
    operands are stored to the same order; otherwise the dropped high-order
    coefficients of the longer operand are not covered by either certificate
    and the result carries no tail bound.
    """
    n = min(p.order, q.order)
    coeffs = p.coeffs[: n + 1] + q.coeffs[: n + 1]
    tail = None
    if p.tail is not None and q.tail is not None and p.order == q.order:
        tail = TailBound(max(p.tail.q, q.tail.q), p.tail.C + q.tail.C)
    return PowerSeries(coeffs, tail)


def mul(p: PowerSeries, q: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller order.

    The truncation drops cross terms, so no geometric tail certificate is
    propagated.
    """
    n = min(p.order, q.order)
    coeffs = np.convolve(p.coeffs, q.coeffs)[: n + 1]
    return PowerSeries(coeffs)


def differentiate(p: PowerSeries) -> PowerSeries:
    """Termwise derivative; the result is one order shorter."""
    if p.order == 0:
        return PowerSeries.zero()
    return PowerSeries(p.coeffs[1:] * np.arange(1, p.order + 1))


def _sample_on_circle(f: Callable, z: np.ndarray) -> np.ndarray:
    try:
        vals = np.asarray(f(z), dtype=np.complex128)
        if vals.shape == z.shape:
            return vals
    except Exception:
        pass
    return np.array([complex(f(w)) for w in z], dtype=np.complex128)


def numeric_taylor(f: Callable, order: int, rho: float = 0.5, samples: int | None = None) -> PowerSeries:
    """Taylor coefficients about 0 of a black-box analytic function.

    Computes a_n = (2*pi)^-1 * integral of f(rho e^{i t}) e^{-i n t} dt / rho**n
    with uniform trapezoid sampling, i.e. one FFT over ``samples`` points on
    the circle of radius ``rho``.  The default uses 8 samples per requested
    order, which keeps the aliasing error geometrically small; roundoff grows
    like eps / rho**n, so callers extracting high orders should raise ``rho``.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    if not 0.0 < rho < 1.0:
        raise ValueError("sampling radius must lie in (0, 1)")
    m = 8 * order if samples is None else int(samples)
    if m < 8 * order:
        raise ValueError("need at least 8 samples per coefficient order")
    z = rho * np.exp(2j * np.pi * np.arange(m) / m)
    vals = _sample_on_circle(f, z)
    if not np.all(np.isfinite(vals)):
        raise ValueError("function produced non-finite samples on the circle")
    coeffs = np.fft.fft(vals)[: order + 1] / m
    coeffs = coeffs / rho ** np.arange(order + 1)
    return PowerSeries(coeffs)


def reconstruction_error(p: PowerSeries, f: Callable, radius: float, n_points: int = 64) -> float:
    """Max deviation |p(z) - f(z)| over a circle, as an a-posteriori accuracy report."""
    z = radius * np.exp(2j * np.pi * np.arange(n_points) / n_points)
    vals = _sample_on_circle(f, z)
    return float(np.max(np.abs(p.evaluate(z) - vals)))


def _check_gamma(gamma: float) -> None:
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"gamma must lie in [0, 1), got {gamma}")


def recenter_affine(p: PowerSeries, gamma: float) -> PowerSeries:
    """Rescale a series about gamma into its unit-disk counterpart.

    Given g(z) = sum alpha_n (z - gamma)^n, returns G with b_n =
    alpha_n * (1-gamma)^n, so that g = G((z - gamma)/(1 - gamma)).
    """
    _check_gamma(gamma)
    scale = (1.0 - gamma) ** np.arange(p.order + 1)
    tail = None
    if p.tail is not None:
        tail = TailBound(p.tail.q * (1.0 - gamma), p.tail.C)
    return PowerSeries(p.coeffs * scale, tail)


def recenter_affine_inverse(p: PowerSeries, gamma: float) -> PowerSeries:
    """Inverse of :func:`recenter_affine`: divide coefficient n by (1-gamma)^n."""
    _check_gamma(gamma)
    scale = (1.0 - gamma) ** np.arange(p.order + 1)
    tail = None
    if p.tail is not None and p.tail.q / (1.0 - gamma) < 1.0:
        tail = TailBound(p.tail.q / (1.0 - gamma), p.tail.C)
    return PowerSeries(p.coeffs / scale, tail)


@dataclass(frozen=True)
class DiskDomain:
    """Round domain |z + g/(1-g)| < 1/(1-g) for g in [0, 1).

    It always contains the unit disk and is internally tangent to it at
    z = 1; g = 0 recovers the unit disk itself.
    """

    gamma: float

    def __post_init__(self) -> None:
        _check_gamma(self.gamma)

    @property
    def center(self) -> float:
        return -self.gamma / (1.0 - self.gamma)

    @property
    def radius(self) -> float:
        return 1.0 / (1.0 - self.gamma)

    @property
    def coefficient_ratio_sup(self) -> float:
        """sup |a_n| / (1 - |a_0|^2) over bounded analytic functions on the domain."""
        return 1.0 / (1.0 + self.gamma)

    def contains(self, z) -> np.ndarray:
        return np.abs(np.asarray(z) - self.center) < self.radius

    def from_unit_disk(self, z):
        """Affine bijection sending the unit disk onto this domain."""
        return (np.asarray(z) - self.gamma) / (1.0 - self.gamma)

    def to_unit_disk(self, w):
        """Inverse of :meth:`from_unit_disk`; contracts the domain into the unit disk."""
        return self.gamma + (1.0 - self.gamma) * np.asarray(w)
