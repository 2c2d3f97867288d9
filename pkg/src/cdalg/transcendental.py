"""Exponential map, principal logarithm, and k-th roots.

The exponential of a pure imaginary element has the closed form

    exp(a) = cos(||a||) e0 + sin(||a||) a/||a||

and a general element x = r*e0 + a maps to e^r * exp(a).  The inverse
maps go through the polar form (magnitude, angle, unit direction), with
the angle restricted to [0, pi]; negative real multiples of e0 have no
principal direction and need an explicit fallback.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import core
from .core import CdElement
from .errors import NoPrincipalDirection, NotPure, Overflow, ZeroElement

PURITY_EPS = 1e-12
DEGENERACY_EPS = 1e-12
SMALL_ANGLE = 1e-4
EXP_ARG_MAX = 709.0  # math.exp overflows just past 709.78


def _sinc(t: float) -> float:
    # sin(t)/t with a Taylor branch to avoid 0/0 and precision loss.
    if abs(t) < SMALL_ANGLE:
        t2 = t * t
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0
    return math.sin(t) / t


def _require_pure(x: CdElement) -> CdElement:
    r, im = core.split(x)
    if abs(r) > PURITY_EPS * core.norm(x):
        raise NotPure(f"real part {r} exceeds purity threshold")
    return im


def exp_pure(a: CdElement) -> CdElement:
    """Exponential of a pure imaginary element; lands on the unit sphere.

    exp(0) = e0.  The real part of `a` must be negligible relative to
    ||a||, otherwise NotPure is raised.
    """
    im = _require_pure(a)
    t = core.norm(im)
    out = im.coeffs * _sinc(t)
    out[0] = math.cos(t)
    return CdElement._wrap(a.level, out)


def exp(x: CdElement) -> CdElement:
    """Exponential of any element: e^r times the pure exponential.

    The result's norm equals e^r exactly in the closed form; raises
    Overflow when e^r is not representable.
    """
    r, a = core.split(x)
    if r > EXP_ARG_MAX:
        raise Overflow(f"exp({r}) is not representable in double precision")
    t = core.norm(a)
    out = a.coeffs * _sinc(t)
    out[0] = math.cos(t)
    out *= math.exp(r)
    return CdElement._wrap(x.level, out)


@dataclass(frozen=True)
class PolarForm:
    """Polar data of a nonzero element.

    magnitude is ||x||; angle lies in [0, pi]; direction is a unit pure
    element, or the zero element with `degenerate` set when x is a real
    multiple of e0 (angle 0 for positive, pi for negative).
    """

    magnitude: float
    angle: float
    direction: CdElement
    degenerate: bool

    def reconstruct(self) -> CdElement:
        out = self.direction.coeffs * math.sin(self.angle)
        out = out + 0.0  # own a writable copy
        out[0] = math.cos(self.angle)
        out *= self.magnitude
        return CdElement._wrap(self.direction.level, out)


def to_polar(x: CdElement) -> PolarForm:
    """Split a nonzero element into magnitude, angle, and unit direction."""
    if core.is_effectively_zero(x):
        raise ZeroElement("zero element has no polar form")
    m = core.norm(x)
    unit = core.scale(x, 1.0 / m)
    s, b = core.split(unit)
    nb = core.norm(b)
    if nb > DEGENERACY_EPS:
        return PolarForm(m, math.atan2(nb, s), core.scale(b, 1.0 / nb), False)
    angle = 0.0 if s > 0.0 else math.pi
    return PolarForm(m, angle, core.zero(x.level), True)


def _resolve_direction(p: PolarForm, fallback_dir: CdElement | None) -> CdElement:
    if not p.degenerate:
        return p.direction
    if p.angle == 0.0:
        return p.direction  # zero direction; angle 0 makes it irrelevant
    if fallback_dir is None:
        raise NoPrincipalDirection(
            "negative real multiple of e0; supply a fallback direction"
        )
    im = _require_pure(fallback_dir)
    n = core.norm(im)
    if n <= DEGENERACY_EPS:
        raise ZeroElement("fallback direction must be nonzero")
    return core.scale(im, 1.0 / n)


def log_principal(x: CdElement, fallback_dir: CdElement | None = None) -> CdElement:
    """Principal logarithm: ln(||x||) e0 + angle * direction.

    Inverts `exp` up to the principal branch (angle in [0, pi]).  For
    negative real multiples of e0 the direction is taken from
    `fallback_dir`, or NoPrincipalDirection is raised.
    """
    p = to_polar(x)
    direction = _resolve_direction(p, fallback_dir)
    out = direction.coeffs * p.angle
    out = out + 0.0
    out[0] = math.log(p.magnitude)
    return CdElement._wrap(x.level, out)


def k_root(x: CdElement, k: int, fallback_dir: CdElement | None = None) -> CdElement:
    """Principal k-th root via the polar form.

    Returns ||x||^(1/k) * exp((angle/k) * direction); raising the result
    to the k-th power reproduces x.  Degenerate negative reals need
    `fallback_dir` just like the logarithm.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    p = to_polar(x)
    direction = _resolve_direction(p, fallback_dir)
    t = p.angle / k
    out = direction.coeffs * math.sin(t)
    out = out + 0.0
    out[0] = math.cos(t)
    out *= p.magnitude ** (1.0 / k)
    return CdElement._wrap(x.level, out)


def scale_map(x: CdElement, k: int) -> CdElement:
    """Componentwise scaling x -> k*x."""
    return core.scale(x, float(k))
