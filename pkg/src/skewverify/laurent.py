"""Truncated twisted Laurent series over D with x·a = σ̃(a)·x.

A series is a finite map exponent → nonzero coefficient, plus a cutoff: every
coefficient at an exponent below the cutoff is known (zero if absent), and
nothing is known from the cutoff on.  ``math.inf`` as cutoff marks an exact
(finite) series such as x, t or a constant.

Products are truncated by relative precision: if a is known to x^ca and b to
x^cb, then a·b is known to x^min(v(a)+cb, ca+v(b)).
"""

from __future__ import annotations

import math
import random
from collections.abc import Mapping
from dataclasses import dataclass
from functools import total_ordering

from .algebra import (
    BASIS,
    D_ONE,
    D_THETA,
    D_U,
    D_ZERO,
    DElem,
    InnerWitness,
    OuterAut,
    aut_inverse_apply,
    d_inv,
)
from .randoms import random_d

EXACT = math.inf
DEFAULT_PRECISION = 12


class InsufficientPrecisionError(ArithmeticError):
    pass


@total_ordering
@dataclass(frozen=True)
class XadicValue:
    """Additive form of the x-adic valuation: v = δ^exponent for any fixed 0 < δ < 1.

    ``exponent`` is ``None`` for the zero series (v(0) = 0 multiplicatively,
    +∞ additively).  Ordering follows the exponent, so a larger XadicValue
    means a smaller multiplicative value.
    """

    exponent: int | None

    @property
    def is_infinite(self) -> bool:
        return self.exponent is None

    def _key(self):
        return math.inf if self.exponent is None else self.exponent

    def __lt__(self, other: XadicValue) -> bool:
        return self._key() < other._key()

    def __add__(self, other: XadicValue) -> XadicValue:
        if self.is_infinite or other.is_infinite:
            return XadicValue(None)
        return XadicValue(self.exponent + other.exponent)

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.exponent)


class TwistedLaurentRing:
    """D((x, σ̃)): holds σ̃ and the inner witness d, which also gives σ̃⁻¹."""

    def __init__(self, aut: OuterAut, witness: InnerWitness, default_precision: int = DEFAULT_PRECISION):
        self.aut = aut
        self.witness = witness
        self.default_precision = default_precision
        self._negative_images: dict[int, tuple[DElem, ...]] = {}

    def twist(self, a: DElem, n: int) -> DElem:
        """σ̃^n(a) for any integer n."""
        if n >= 0:
            return self.aut.apply(a, n)
        images = self._inverse_basis_images(-n)
        acc = D_ZERO
        for k, img in zip(a.k_coords(), images):
            if k:
                acc = acc + img * k.sigma(n)
        return acc

    def _inverse_basis_images(self, m: int) -> tuple[DElem, ...]:
        if m == 0:
            return tuple(BASIS)
        if m not in self._negative_images:
            prev = self._inverse_basis_images(m - 1)
            self._negative_images[m] = tuple(aut_inverse_apply(self.aut, self.witness, b) for b in prev)
        return self._negative_images[m]

    def series(self, coeffs: Mapping[int, DElem], cutoff: float = EXACT) -> TSeries:
        return TSeries(self, coeffs, cutoff)

    def constant(self, a) -> TSeries:
        return TSeries(self, {0: DElem.coerce(a)}, EXACT)

    def monomial(self, a, exponent: int) -> TSeries:
        return TSeries(self, {exponent: DElem.coerce(a)}, EXACT)

    @property
    def x(self) -> TSeries:
        return self.monomial(D_ONE, 1)

    @property
    def one(self) -> TSeries:
        return self.constant(D_ONE)

    def zero(self, cutoff: float = EXACT) -> TSeries:
        return TSeries(self, {}, cutoff)


class TSeries:
    __slots__ = ("coeffs", "cutoff", "ring")

    def __init__(self, ring: TwistedLaurentRing, coeffs: Mapping[int, DElem], cutoff: float = EXACT):
        self.ring = ring
        self.cutoff = cutoff
        self.coeffs = {i: c for i, c in sorted(coeffs.items()) if c and i < cutoff}

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_exponent(self) -> int | None:
        return next(iter(self.coeffs), None)

    @property
    def is_exact(self) -> bool:
        return self.cutoff == EXACT

    def coefficient(self, i: int) -> DElem:
        if i >= self.cutoff:
            raise InsufficientPrecisionError(f"coefficient of x^{i} is beyond the cutoff {self.cutoff}")
        return self.coeffs.get(i, D_ZERO)

    def _floor(self) -> float:
        """v(a) for nonzero a; the cutoff for a zero series (all we know is a ∈ O(x^cutoff))."""
        return self.cutoff if self.is_zero else self.min_exponent

    def __repr__(self) -> str:
        terms = [f"({c})*x^{i}" for i, c in self.coeffs.items()]
        if not self.is_exact:
            terms.append(f"O(x^{self.cutoff})")
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        """Equal coefficients on the common window (exact series: identical)."""
        if not isinstance(other, TSeries):
            return NotImplemented
        c = min(self.cutoff, other.cutoff)
        keys = {i for i in self.coeffs if i < c} | {i for i in other.coeffs if i < c}
        return all(self.coeffs.get(i, D_ZERO) == other.coeffs.get(i, D_ZERO) for i in keys)

    __hash__ = None

    def __neg__(self) -> TSeries:
        return TSeries(self.ring, {i: -c for i, c in self.coeffs.items()}, self.cutoff)

    def __add__(self, other) -> TSeries:
        return ts_add(self, _lift(self.ring, other))

    __radd__ = __add__

    def __sub__(self, other) -> TSeries:
        return ts_add(self, -_lift(self.ring, other))

    def __rsub__(self, other) -> TSeries:
        return ts_add(_lift(self.ring, other), -self)

    def __mul__(self, other) -> TSeries:
        return ts_mul(self, _lift(self.ring, other))

    def __rmul__(self, other) -> TSeries:
        return ts_mul(_lift(self.ring, other), self)

    def __pow__(self, n: int) -> TSeries:
        if n < 0:
            return ts_inv(self) ** (-n)
        result = self.ring.one
        for _ in range(n):
            result = result * self
        return result

    def valuation(self) -> XadicValue:
        return ts_valuation(self)

    def in_valuation_ring(self) -> bool:
        """Membership in B_v = {Σ_{i≥0} a_i x^i}."""
        return ts_valuation(self) >= XadicValue(0)

    def in_maximal_ideal(self) -> bool:
        """Membership in M_v = {Σ_{i≥1} a_i x^i}."""
        return ts_valuation(self) >= XadicValue(1)

    def residue(self) -> DElem:
        """Image in the residue ring B_v/M_v, identified with D·x⁰."""
        if not self.in_valuation_ring():
            raise ValueError("series is not in the valuation ring")
        return self.coefficient(0)


def _lift(ring: TwistedLaurentRing, value) -> TSeries:
    if isinstance(value, TSeries):
        if value.ring is not ring:
            raise ValueError("series belong to different rings")
        return value
    return ring.constant(value)


def ts_add(a: TSeries, b: TSeries) -> TSeries:
    cutoff = min(a.cutoff, b.cutoff)
    out = {i: c for i, c in a.coeffs.items() if i < cutoff}
    for i, c in b.coeffs.items():
        if i < cutoff:
            out[i] = out[i] + c if i in out else c
    return TSeries(a.ring, out, cutoff)


def ts_mul(a: TSeries, b: TSeries) -> TSeries:
    """Σ a_i x^i · Σ b_j x^j = Σ a_i σ̃^i(b_j) x^{i+j}."""
    ring = a.ring
    cutoff = min(a._floor() + b.cutoff, a.cutoff + b._floor())
    out: dict[int, DElem] = {}
    for i, ai in a.coeffs.items():
        for j, bj in b.coeffs.items():
            if i + j >= cutoff:
                break
            term = ai * ring.twist(bj, i)
            out[i + j] = out[i + j] + term if i + j in out else term
    return TSeries(ring, out, cutoff)


def ts_inv(a: TSeries, precision: int | None = None) -> TSeries:
    """Inverse to the relative precision of ``a`` (``precision`` terms for exact input).

    Coefficients s_m of the inverse are solved in order from
    a_k·σ̃^k(s_{m−k}) = δ_{m,0} − Σ_{i>k} a_i·σ̃^i(s_{m−i}).
    """
    if a.is_zero:
        raise ZeroDivisionError("zero series has no inverse")
    ring = a.ring
    k = a.min_exponent
    rel = a.cutoff - k
    if precision is None:
        precision = ring.default_precision
    n_terms = int(min(rel, precision))
    lead_inv = d_inv(a.coeffs[k])
    if a.is_exact and len(a.coeffs) == 1:
        # (c·x^k)⁻¹ = x^{−k}·c⁻¹ = σ̃^{−k}(c⁻¹)·x^{−k}, exactly
        return ring.monomial(ring.twist(lead_inv, -k), -k)
    s: dict[int, DElem] = {}
    for m in range(n_terms):
        rhs = D_ONE if m == 0 else D_ZERO
        for i, ai in a.coeffs.items():
            if i == k:
                continue
            if m - i < -k:
                break
            sj = s.get(m - i)
            if sj is not None and sj:
                rhs = rhs - ai * ring.twist(sj, i)
        s[m - k] = ring.twist(lead_inv * rhs, -k)
    return TSeries(ring, s, -k + n_terms)


def ts_valuation(a: TSeries) -> XadicValue:
    return XadicValue(a.min_exponent)


def make_t(ring: TwistedLaurentRing) -> TSeries:
    """The central element t = d⁻¹·x³."""
    return ring.monomial(ring.witness.d_inverse, 3)


def check_t_central(
    ring: TwistedLaurentRing,
    rng: random.Random | None = None,
    samples: int = 20,
) -> dict[str, bool]:
    """Exact commutation of t with θ, u, x and ``samples`` random constants.

    Every product here is of two exact single-term series, so each comparison
    is one identity in D.
    """
    rng = rng or random.Random(0)
    t = make_t(ring)

    def commutes(y: TSeries) -> bool:
        return t * y == y * t

    results = {
        "C1": commutes(ring.constant(D_THETA)),
        "C2": commutes(ring.constant(D_U)),
        "C3": commutes(ring.x),
    }
    results["C4"] = all(commutes(ring.constant(random_d(rng))) for _ in range(samples))
    return results
