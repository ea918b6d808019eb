"""Exact arithmetic in the tower Q ⊂ K ⊂ L.

K = Q[α]/(α³ + α² − 2α − 1) is the cubic cyclic field of discriminant 49 and
L = K[θ]/(f) with f = θ³ + (α−2)θ² − (α+1)θ + 1 is a cyclic cubic extension
of K.  Elements are stored as coordinate triples in the power bases
(1, α, α²) and (1, θ, θ²) and are reduced eagerly after every product, so
equality is coordinate equality.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Iterable
from typing import Generic, TypeVar, Union

from gmpy2 import mpq

from .linalg import solve

Rational = type(mpq())
RationalLike = Union[int, str, "mpq"]

T = TypeVar("T")

_RATIONAL_TEXT = re.compile(r"[+-]?\d+(\s*/\s*\d+)?")


class InconsistencyError(ArithmeticError):
    """An identity that must hold by construction was violated."""


def rat(value) -> mpq:
    """Coerce ``value`` (int, mpq, Fraction or ``"num/den"`` string) to an exact rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, str):
        value = value.strip()
        if not _RATIONAL_TEXT.fullmatch(value):
            raise ValueError(f"not an exact rational: {value!r}")
    try:
        return mpq(value)
    except ZeroDivisionError:
        raise
    except (TypeError, ValueError) as exc:
        raise ValueError(f"not an exact rational: {value!r}") from exc


_ZERO = mpq(0)
_ONE = mpq(1)


class KElem:
    """a0 + a1·α + a2·α² with rational coordinates."""

    __slots__ = ("coeffs",)

    def __init__(self, a0: RationalLike = 0, a1: RationalLike = 0, a2: RationalLike = 0):
        self.coeffs = (rat(a0), rat(a1), rat(a2))

    @classmethod
    def _raw(cls, a0, a1, a2) -> KElem:
        obj = object.__new__(cls)
        obj.coeffs = (a0, a1, a2)
        return obj

    @classmethod
    def coerce(cls, value) -> KElem:
        if isinstance(value, KElem):
            return value
        return cls(value)

    def __repr__(self) -> str:
        return f"KElem({', '.join(str(c) for c in self.coeffs)})"

    def __str__(self) -> str:
        return _format_poly(self.coeffs, "α")

    def __eq__(self, other) -> bool:
        if isinstance(other, KElem):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.coeffs == (other, _ZERO, _ZERO)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __neg__(self) -> KElem:
        a0, a1, a2 = self.coeffs
        return KElem._raw(-a0, -a1, -a2)

    def __add__(self, other) -> KElem:
        if not isinstance(other, KElem):
            if isinstance(other, (int, Rational)):
                a0, a1, a2 = self.coeffs
                return KElem._raw(a0 + other, a1, a2)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return KElem._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2])

    __radd__ = __add__

    def __sub__(self, other) -> KElem:
        if not isinstance(other, KElem):
            if isinstance(other, (int, Rational)):
                a0, a1, a2 = self.coeffs
                return KElem._raw(a0 - other, a1, a2)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return KElem._raw(a[0] - b[0], a[1] - b[1], a[2] - b[2])

    def __rsub__(self, other) -> KElem:
        return (-self) + other

    def __mul__(self, other) -> KElem:
        if not isinstance(other, KElem):
            if isinstance(other, (int, Rational)):
                a0, a1, a2 = self.coeffs
                return KElem._raw(a0 * other, a1 * other, a2 * other)
            return NotImplemented
        a0, a1, a2 = self.coeffs
        b0, b1, b2 = other.coeffs
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        # α³ = −α² + 2α + 1,  α⁴ = 3α² − α − 1
        return KElem._raw(c0 + c3 - c4, c1 + 2 * c3 - c4, c2 - c3 + 3 * c4)

    def __rmul__(self, other) -> KElem:
        if isinstance(other, (int, Rational)):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> KElem:
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division by zero in K")
            return self * (_ONE / other)
        return self * KElem.coerce(other).inverse()

    def __rtruediv__(self, other) -> KElem:
        return KElem.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> KElem:
        return _power(self, n, K_ONE)

    def regular_matrix(self) -> list[list[mpq]]:
        """Matrix of multiplication by self on the basis (1, α, α²); columns are images."""
        cols = [(self * b).coeffs for b in (K_ONE, ALPHA, ALPHA_SQ)]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def inverse(self) -> KElem:
        if not self:
            raise ZeroDivisionError("zero has no inverse in K")
        return KElem._raw(*solve(self.regular_matrix(), [_ONE, _ZERO, _ZERO]))

    def sigma(self, power: int = 1) -> KElem:
        power %= 3
        if power == 0:
            return self
        _, img1, img2 = _SIGMA_BASIS_IMAGES[power]
        a0, a1, a2 = self.coeffs
        return img1 * a1 + img2 * a2 + a0

    def norm(self) -> mpq:
        """N_{K/Q}(self) = self·σ(self)·σ²(self)."""
        prod = self * self.sigma(1) * self.sigma(2)
        n0, n1, n2 = prod.coeffs
        if n1 or n2:
            raise InconsistencyError(f"K-norm is not rational: {prod!r}")
        return n0


K_ZERO = KElem()
K_ONE = KElem(1)
ALPHA = KElem(0, 1)
ALPHA_SQ = KElem(0, 0, 1)
PI = KElem(-2, -1, 1)  # α² − α − 2, norm 7

_SIGMA_ALPHA = KElem(1, -1, -1)  # σ(α) = −α² − α + 1


def _sigma_once(a: KElem) -> KElem:
    a0, a1, a2 = a.coeffs
    return _SIGMA_ALPHA * a1 + _SIGMA_ALPHA * _SIGMA_ALPHA * a2 + a0


_SIGMA2_ALPHA = _sigma_once(_SIGMA_ALPHA)
_SIGMA_BASIS_IMAGES = {
    1: (K_ONE, _SIGMA_ALPHA, _SIGMA_ALPHA * _SIGMA_ALPHA),
    2: (K_ONE, _SIGMA2_ALPHA, _SIGMA2_ALPHA * _SIGMA2_ALPHA),
}


class LElem:
    """l0 + l1·θ + l2·θ² with coordinates in K."""

    __slots__ = ("coeffs",)

    def __init__(self, l0=0, l1=0, l2=0):
        self.coeffs = (KElem.coerce(l0), KElem.coerce(l1), KElem.coerce(l2))

    @classmethod
    def _raw(cls, l0, l1, l2) -> LElem:
        obj = object.__new__(cls)
        obj.coeffs = (l0, l1, l2)
        return obj

    @classmethod
    def coerce(cls, value) -> LElem:
        if isinstance(value, LElem):
            return value
        return cls(KElem.coerce(value))

    def __repr__(self) -> str:
        return f"LElem({', '.join(repr(c) for c in self.coeffs)})"

    def __str__(self) -> str:
        return _format_poly([f"({c})" if c else _ZERO for c in self.coeffs], "θ")

    def __eq__(self, other) -> bool:
        if isinstance(other, LElem):
            return self.coeffs == other.coeffs
        if isinstance(other, (KElem, int, Rational)):
            return self.coeffs == (KElem.coerce(other), K_ZERO, K_ZERO)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __neg__(self) -> LElem:
        a0, a1, a2 = self.coeffs
        return LElem._raw(-a0, -a1, -a2)

    def __add__(self, other) -> LElem:
        if not isinstance(other, LElem):
            if isinstance(other, (KElem, int, Rational)):
                a0, a1, a2 = self.coeffs
                return LElem._raw(a0 + other, a1, a2)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return LElem._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2])

    __radd__ = __add__

    def __sub__(self, other) -> LElem:
        if not isinstance(other, LElem):
            if isinstance(other, (KElem, int, Rational)):
                a0, a1, a2 = self.coeffs
                return LElem._raw(a0 - other, a1, a2)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return LElem._raw(a[0] - b[0], a[1] - b[1], a[2] - b[2])

    def __rsub__(self, other) -> LElem:
        return (-self) + other

    def __mul__(self, other) -> LElem:
        if not isinstance(other, LElem):
            if isinstance(other, (KElem, int, Rational)):
                a0, a1, a2 = self.coeffs
                return LElem._raw(a0 * other, a1 * other, a2 * other)
            return NotImplemented
        a0, a1, a2 = self.coeffs
        b0, b1, b2 = other.coeffs
        c0 = a0 * b0
        c1 = a0 * b1 + a1 * b0
        c2 = a0 * b2 + a1 * b1 + a2 * b0
        c3 = a1 * b2 + a2 * b1
        c4 = a2 * b2
        t3, t4 = _THETA3, _THETA4
        return LElem._raw(
            c0 + c3 * t3[0] + c4 * t4[0],
            c1 + c3 * t3[1] + c4 * t4[1],
            c2 + c3 * t3[2] + c4 * t4[2],
        )

    def __rmul__(self, other) -> LElem:
        if isinstance(other, (KElem, int, Rational)):
            return self * other
        return NotImplemented

    def __truediv__(self, other) -> LElem:
        if isinstance(other, (KElem, int, Rational)):
            return self * (1 / KElem.coerce(other))
        return self * other.inverse()

    def __pow__(self, n: int) -> LElem:
        return _power(self, n, L_ONE)

    def in_K(self) -> bool:
        return not self.coeffs[1] and not self.coeffs[2]

    def regular_matrix(self) -> list[list[KElem]]:
        cols = [(self * b).coeffs for b in (L_ONE, THETA, THETA_SQ)]
        return [[cols[j][i] for j in range(3)] for i in range(3)]

    def inverse(self) -> LElem:
        if not self:
            raise ZeroDivisionError("zero has no inverse in L")
        return LElem._raw(*solve(self.regular_matrix(), [K_ONE, K_ZERO, K_ZERO]))

    def phi(self, power: int = 1) -> LElem:
        """Apply the K-automorphism φ^power, where φ(θ) = −θ² + (1−α)θ + 2."""
        power %= 3
        if power == 0:
            return self
        _, img1, img2 = _PHI_BASIS_IMAGES[power]
        a0, a1, a2 = self.coeffs
        return img1 * a1 + img2 * a2 + a0

    def sigma_coeffs(self, power: int = 1) -> LElem:
        """Apply σ^power to each K-coordinate (θ is left alone)."""
        return LElem._raw(*(c.sigma(power) for c in self.coeffs))

    def norm(self) -> KElem:
        """N_{L/K}(self) = self·φ(self)·φ²(self)."""
        prod = self * self.phi(1) * self.phi(2)
        if not prod.in_K():
            raise InconsistencyError(f"L/K-norm does not lie in K: {prod!r}")
        return prod.coeffs[0]


# θ³ = (2 − α)θ² + (α + 1)θ − 1
_P2, _P1, _P0 = KElem(2, -1), KElem(1, 1), KElem(-1)
_THETA3 = (_P0, _P1, _P2)
# θ⁴ = θ·θ³ = (p2² + p1)θ² + (p2·p1 + p0)θ + p2·p0
_THETA4 = (_P2 * _P0, _P2 * _P1 + _P0, _P2 * _P2 + _P1)

L_ZERO = LElem()
L_ONE = LElem(1)
THETA = LElem(0, 1)
THETA_SQ = LElem(0, 0, 1)
LAMBDA = LElem(KElem(0, 1, 1), KElem(1, -1), KElem(-1))  # (α² + α) + (1 − α)θ − θ²

_PHI_THETA = LElem(2, KElem(1, -1), -1)


def _phi_once(a: LElem) -> LElem:
    a0, a1, a2 = a.coeffs
    return _PHI_THETA * a1 + _PHI_THETA * _PHI_THETA * a2 + a0


_PHI2_THETA = _phi_once(_PHI_THETA)
_PHI_BASIS_IMAGES = {
    1: (L_ONE, _PHI_THETA, _PHI_THETA * _PHI_THETA),
    2: (L_ONE, _PHI2_THETA, _PHI2_THETA * _PHI2_THETA),
}


class CubicPoly(Generic[T]):
    """c3·x³ + c2·x² + c1·x + c0 over an arbitrary coefficient ring."""

    __slots__ = ("coeffs",)

    def __init__(self, c3: T, c2: T, c1: T, c0: T):
        self.coeffs = (c3, c2, c1, c0)

    def __repr__(self) -> str:
        return "CubicPoly({}, {}, {}, {})".format(*self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, CubicPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def map_coeffs(self, fn: Callable[[T], object]) -> CubicPoly:
        return CubicPoly(*(fn(c) for c in self.coeffs))

    def evaluate(self, x, lift: Callable[[T], object] = lambda c: c):
        """Horner evaluation; ``lift`` embeds coefficients into the ring of ``x``."""
        c3, c2, c1, c0 = self.coeffs
        acc = lift(c3)
        for c in (c2, c1, c0):
            acc = acc * x + lift(c)
        return acc

    __call__ = evaluate


MINPOLY_ALPHA: CubicPoly[mpq] = CubicPoly(mpq(1), mpq(1), mpq(-2), mpq(-1))
F_THETA: CubicPoly[KElem] = CubicPoly(K_ONE, KElem(-2, 1), KElem(-1, -1), K_ONE)


def _power(x, n: int, one):
    if n < 0:
        return _power(x.inverse(), -n, one)
    result = one
    base = x
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def _format_poly(coeffs: Iterable, var: str) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"
