"""Elements of the Cayley-Dickson algebras and their ring arithmetic.

The level-n algebra is R^(2^n) under the doubling product

    (a, b)(x, y) = (ax - conj(y)b, ya + b conj(x))

with level 0 the reals, level 1 the complex numbers, level 2 the
quaternions, level 3 the octonions, and so on.  All operations here are
pure functions on immutable values.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import LengthMismatch, LevelMismatch, NonFinite, ZeroElement

# Largest level the constructors accept (256 coefficients).  Raising it is
# safe but the basis-product tables grow as 4**level.
MAX_LEVEL = 8

ZERO_EPS = 1e-12


def dim_of(level: int) -> int:
    """Dimension 2**level of the level-n algebra."""
    return 1 << level


class CdElement:
    """One element: a level plus a read-only vector of 2^level coefficients.

    Index i holds the coefficient of the basis vector e_i; index 0 is the
    real part.  Instances never mutate, so they are freely shareable
    across threads.
    """

    __slots__ = ("level", "coeffs")

    def __init__(self, level: int, coeffs) -> None:
        if not isinstance(level, int) or not 0 <= level <= MAX_LEVEL:
            raise ValueError(f"level must be an integer in [0, {MAX_LEVEL}], got {level!r}")
        arr = np.array(coeffs, dtype=np.float64)
        if arr.ndim != 1 or arr.size != dim_of(level):
            raise LengthMismatch(
                f"level {level} needs {dim_of(level)} coefficients, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise NonFinite("coefficients must be finite")
        arr.flags.writeable = False
        self.level = level
        self.coeffs = arr

    @classmethod
    def _wrap(cls, level: int, arr: np.ndarray) -> "CdElement":
        # Fast path for freshly computed float64 arrays the caller owns.
        el = object.__new__(cls)
        arr.flags.writeable = False
        el.level = level
        el.coeffs = arr
        return el

    def __add__(self, other):
        if isinstance(other, CdElement):
            return add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, CdElement):
            return sub(self, other)
        return NotImplemented

    def __neg__(self):
        return CdElement._wrap(self.level, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, CdElement):
            return multiply(self, other)
        if isinstance(other, (int, float)):
            return scale(self, float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return scale(self, float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return scale(self, 1.0 / float(other))
        return NotImplemented

    def __pow__(self, k):
        if isinstance(k, int):
            return power_int(self, k)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CdElement):
            return NotImplemented
        return self.level == other.level and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        return f"CdElement(level={self.level}, coeffs={self.coeffs.tolist()})"


def make_element(level: int, coeffs) -> CdElement:
    """Build an element, validating length and finiteness."""
    return CdElement(level, coeffs)


def zero(level: int) -> CdElement:
    return CdElement._wrap(level, np.zeros(dim_of(level)))


def one(level: int) -> CdElement:
    """The unit element e0."""
    return basis(level, 0)


def basis(level: int, index: int) -> CdElement:
    """The canonical basis vector e_index."""
    d = dim_of(level)
    if not 0 <= index < d:
        raise ValueError(f"basis index {index} out of range [0, {d})")
    arr = np.zeros(d)
    arr[index] = 1.0
    return CdElement._wrap(level, arr)


def from_real(level: int, r: float) -> CdElement:
    arr = np.zeros(dim_of(level))
    arr[0] = float(r)
    return CdElement(level, arr)


def _require_same_level(x: CdElement, y: CdElement) -> None:
    if x.level != y.level:
        raise LevelMismatch(f"levels differ: {x.level} vs {y.level}")


def add(x: CdElement, y: CdElement) -> CdElement:
    _require_same_level(x, y)
    return CdElement._wrap(x.level, x.coeffs + y.coeffs)


def sub(x: CdElement, y: CdElement) -> CdElement:
    _require_same_level(x, y)
    return CdElement._wrap(x.level, x.coeffs - y.coeffs)


def scale(x: CdElement, s: float) -> CdElement:
    return CdElement._wrap(x.level, x.coeffs * float(s))


@lru_cache(maxsize=None)
def _basis_tables(level: int):
    """Arrays (K, S) with e_i * e_j = S[i, j] * e_{K[i, j]}.

    Built by unrolling the doubling product one level at a time; every
    basis product is a single signed basis vector, so the full bilinear
    product reduces to a signed scatter-add over these tables.
    """
    if level == 0:
        return np.zeros((1, 1), dtype=np.intp), np.ones((1, 1))
    k0, s0 = _basis_tables(level - 1)
    h = dim_of(level - 1)
    k = np.empty((2 * h, 2 * h), dtype=np.intp)
    s = np.empty((2 * h, 2 * h))
    # cs[j] is the sign picked up by conjugating e_j at the lower level.
    cs = np.where(np.arange(h) == 0, 1.0, -1.0)
    # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
    k[:h, :h] = k0
    s[:h, :h] = s0
    # (e_i, 0)(0, e_j) = (0, e_j e_i)
    k[:h, h:] = h + k0.T
    s[:h, h:] = s0.T
    # (0, e_i)(e_j, 0) = (0, e_i conj(e_j))
    k[h:, :h] = h + k0
    s[h:, :h] = s0 * cs[None, :]
    # (0, e_i)(0, e_j) = (-conj(e_j) e_i, 0)
    k[h:, h:] = k0.T
    s[h:, h:] = s0.T * (-cs)[None, :]
    k.flags.writeable = False
    s.flags.writeable = False
    return k, s


def multiply(x: CdElement, y: CdElement) -> CdElement:
    """Doubling product of two elements at the same level.

    Evaluated through the cached basis-product tables; agrees with the
    direct recursion in :func:`multiply_reference` to rounding error.
    """
    _require_same_level(x, y)
    k, s = _basis_tables(x.level)
    contrib = np.multiply.outer(x.coeffs, y.coeffs)
    contrib *= s
    out = np.bincount(k.ravel(), weights=contrib.ravel(), minlength=x.coeffs.size)
    return CdElement._wrap(x.level, out)


def _conj_arr(a: np.ndarray) -> np.ndarray:
    out = -a
    out[0] = a[0]
    return out


def _multiply_rec(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.size == 1:
        return x * y
    h = x.size // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    first = _multiply_rec(a, c) - _multiply_rec(_conj_arr(d), b)
    second = _multiply_rec(d, a) + _multiply_rec(b, _conj_arr(c))
    return np.concatenate((first, second))


def multiply_reference(x: CdElement, y: CdElement) -> CdElement:
    """Doubling product by direct recursion on the two halves.

    Base case is real multiplication; each level applies
    (a, b)(x, y) = (ax - conj(y)b, ya + b conj(x)) with four half-size
    products.  Slower than :func:`multiply` but defines the semantics.
    """
    _require_same_level(x, y)
    return CdElement._wrap(x.level, _multiply_rec(x.coeffs, y.coeffs))


def conjugate(x: CdElement) -> CdElement:
    """Negate every coefficient except the real one.

    Coincides with the recursive form conj((x1, x2)) = (conj(x1), -x2).
    """
    return CdElement._wrap(x.level, _conj_arr(x.coeffs))


def inner(x: CdElement, y: CdElement) -> float:
    """Euclidean inner product of the coefficient vectors."""
    _require_same_level(x, y)
    return float(np.dot(x.coeffs, y.coeffs))


def norm_sq(x: CdElement) -> float:
    return float(np.dot(x.coeffs, x.coeffs))


def norm(x: CdElement) -> float:
    return math.sqrt(norm_sq(x))


def split(x: CdElement) -> tuple[float, CdElement]:
    """Decompose x = r*e0 + a with a pure imaginary; exact."""
    r = float(x.coeffs[0])
    arr = x.coeffs.copy()
    arr[0] = 0.0
    return r, CdElement._wrap(x.level, arr)


def is_effectively_zero(x: CdElement) -> bool:
    """Scale-aware zero test: ||x|| <= eps * max(1, max|coeff|)."""
    peak = float(np.max(np.abs(x.coeffs)))
    return norm(x) <= ZERO_EPS * max(1.0, peak)


def inverse(x: CdElement) -> CdElement:
    """Multiplicative inverse conj(x) / ||x||^2."""
    if is_effectively_zero(x):
        raise ZeroElement("cannot invert an element with negligible norm")
    return scale(conjugate(x), 1.0 / norm_sq(x))


def power_int(x: CdElement, k: int) -> CdElement:
    """Integer power of x.

    Positive powers multiply in the reference order x * x^(k-1); k = 0
    returns e0 (rejecting the zero element); negative powers raise the
    inverse to -k.
    """
    if k <= 0 and is_effectively_zero(x):
        raise ZeroElement("zero element has no k-th power for k <= 0")
    if k == 0:
        return one(x.level)
    if k < 0:
        return power_int(inverse(x), -k)
    acc = x
    for _ in range(k - 1):
        acc = multiply(x, acc)
    return acc


def embed_up(x: CdElement, second) -> CdElement:
    """Pair x with a second component to form a level-(n+1) element.

    `second` may be an element of the same level or a real number r,
    which stands for r*e0.
    """
    if x.level + 1 > MAX_LEVEL:
        raise ValueError(f"embedding above MAX_LEVEL={MAX_LEVEL} is not supported")
    if isinstance(second, CdElement):
        _require_same_level(x, second)
        tail = second.coeffs
    else:
        tail = np.zeros(x.coeffs.size)
        tail[0] = float(second)
    return CdElement._wrap(x.level + 1, np.concatenate((x.coeffs, tail)))


def element_to_dict(x: CdElement) -> dict:
    """JSON-ready form {"level": n, "coeffs": [...]}."""
    return {"level": x.level, "coeffs": [float(c) for c in x.coeffs]}


def element_from_dict(d: dict) -> CdElement:
    """Parse the JSON object form, rejecting wrong-length arrays."""
    if not isinstance(d, dict) or "level" not in d or "coeffs" not in d:
        raise ValueError("element object needs 'level' and 'coeffs' fields")
    level = d["level"]
    if isinstance(level, bool) or not isinstance(level, int):
        raise ValueError(f"level must be an integer, got {level!r}")
    coeffs = d["coeffs"]
    if not isinstance(coeffs, (list, tuple)):
        raise LengthMismatch("'coeffs' must be an array of numbers")
    for c in coeffs:
        if isinstance(c, bool) or not isinstance(c, (int, float)):
            raise NonFinite(f"coefficient {c!r} is not a number")
    return CdElement(level, coeffs)
