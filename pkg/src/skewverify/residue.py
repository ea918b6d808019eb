"""Finite-field computations behind the ramification and root-of-unity facts.

Residue fields are small (F₂, F₇, F₈), so every predicate is decided by
exhaustive search.  The prime (π) of K is never built as an ideal; its residue
map is the concrete substitution α ↦ 2 mod 7, and the prime (2) maps K onto
F₈ = F₂[ᾱ]/(ᾱ³ + ᾱ² + 1) coordinate-wise.

A second part models a tamely, totally ramified cyclic extension in equal
characteristic: E = F_q((s)) with σ(s) = ζ·s for a primitive n-th root of
unity ζ.  Residues of σ(a)/a for uniformizers a are computed from truncated
series.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from functools import cached_property
from itertools import product

from .field_tower import F_THETA, MINPOLY_ALPHA, CubicPoly, KElem, rat


class ResidueError(ValueError):
    pass


class NoWitnessError(ArithmeticError):
    pass


class InsufficientPrecisionError(ArithmeticError):
    pass


class FiniteField:
    """F_q = F_p[y]/(modulus) for a monic irreducible modulus of degree k ≤ 3.

    ``modulus`` lists coefficients from the constant term up and must be monic.
    Omitting it gives the prime field F_p.
    """

    def __init__(self, p: int, modulus: Sequence[int] | None = None):
        if p < 2 or any(p % d == 0 for d in range(2, math.isqrt(p) + 1)):
            raise ValueError(f"{p} is not prime")
        if modulus is None:
            modulus = (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        self.p = p
        self.modulus = modulus
        self.degree = len(modulus) - 1
        if not 1 <= self.degree <= 3:
            raise ValueError("only extensions of degree 1..3 are supported")
        self.order = p**self.degree
        if self.degree > 1 and any(_eval_int_poly(modulus, r, p) == 0 for r in range(p)):
            # rootlessness is irreducibility for degree 2 and 3
            raise ValueError(f"modulus {modulus} is reducible over F_{p}")

    def __repr__(self) -> str:
        if self.degree == 1:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __call__(self, value) -> FqElem:
        if isinstance(value, FqElem):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FqElem(self, (value % self.p,) + (0,) * (self.degree - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.degree:
            raise ValueError("too many coordinates for this field")
        return FqElem(self, coeffs + (0,) * (self.degree - len(coeffs)))

    @property
    def zero(self) -> FqElem:
        return self(0)

    @property
    def one(self) -> FqElem:
        return self(1)

    @property
    def gen(self) -> FqElem:
        """The class of y (for prime fields, 0 is returned as there is no generator)."""
        return self((0, 1)) if self.degree > 1 else self.zero

    def elements(self) -> Iterator[FqElem]:
        for coeffs in product(range(self.p), repeat=self.degree):
            yield FqElem(self, coeffs[::-1])

    def from_rational(self, value) -> FqElem:
        q = rat(value)
        den = int(q.denominator)
        if den % self.p == 0:
            raise ResidueError(f"denominator of {q} is divisible by {self.p}")
        return self(int(q.numerator) * pow(den, -1, self.p) % self.p)

    @cached_property
    def primitive_element(self) -> FqElem:
        """The first element (in enumeration order) generating F_q^×."""
        for x in self.elements():
            if x and x.multiplicative_order() == self.order - 1:
                return x
        raise ArithmeticError("no primitive element found")  # pragma: no cover

    def root_of_unity(self, n: int) -> FqElem:
        """A fixed primitive n-th root of unity: g^((q−1)/n) for the primitive element g."""
        if (self.order - 1) % n:
            raise ValueError(f"F_{self.order} has no primitive {n}-th root of unity")
        return self.primitive_element ** ((self.order - 1) // n)


class FqElem:
    __slots__ = ("coeffs", "field")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def value(self) -> int:
        """Integer representative for prime-field elements."""
        if self.field.degree != 1:
            raise ValueError("value is only defined in a prime field")
        return self.coeffs[0]

    def __repr__(self) -> str:
        if self.field.degree == 1:
            return f"{self.coeffs[0]} mod {self.field.p}"
        return f"FqElem({self.coeffs}, F_{self.field.order})"

    def __str__(self) -> str:
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = ("", "a", "a^2")[i]
                terms.append(mono if c == 1 and i else f"{c}{mono}")
        return " + ".join(terms) or "0"

    def _coerce(self, other) -> FqElem:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (FqElem, int)):
            other = self._coerce(other)
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __neg__(self) -> FqElem:
        p = self.field.p
        return FqElem(self.field, tuple(-c % p for c in self.coeffs))

    def __add__(self, other) -> FqElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other) -> FqElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> FqElem:
        return (-self) + other

    def __mul__(self, other) -> FqElem:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        p, k, mod = f.p, f.degree, f.modulus
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] += a * b
        for top in range(2 * k - 2, k - 1, -1):
            c = prod[top] % p
            if c:
                for i in range(k):
                    prod[top - k + i] -= c * mod[i]
        return FqElem(f, tuple(c % p for c in prod[:k]))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> FqElem:
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FqElem:
        if not self:
            raise ZeroDivisionError(f"zero has no inverse in F_{self.field.order}")
        return self ** (self.field.order - 2)

    def __truediv__(self, other) -> FqElem:
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> FqElem:
        return self._coerce(other) * self.inverse()

    def multiplicative_order(self) -> int:
        if not self:
            raise ValueError("zero has no multiplicative order")
        x, n = self, 1
        while x != 1:
            x, n = x * self, n + 1
        return n


def _eval_int_poly(coeffs_low_first: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs_low_first):
        acc = (acc * x + c) % p
    return acc


F2 = FiniteField(2)
F7 = FiniteField(7)
F8 = FiniteField(2, (1, 0, 1, 1))  # ᾱ³ + ᾱ² + 1


def poly_over(field: FiniteField, *coeffs) -> CubicPoly:
    """Cubic with coefficients (c3, c2, c1, c0) coerced into ``field``."""
    return CubicPoly(*(field(c) for c in coeffs))


def roots(poly: CubicPoly, field: FiniteField) -> list[FqElem]:
    """All roots in ``field``, by evaluating at every element."""
    return [x for x in field.elements() if not poly.evaluate(x)]


def cubic_is_irreducible(poly: CubicPoly, field: FiniteField) -> bool:
    """A cubic over a field is irreducible iff it has no root there."""
    if not poly.coeffs[0]:
        raise ValueError("leading coefficient must be nonzero")
    return not roots(poly, field)


def reduce_minpoly_mod(p: int) -> CubicPoly:
    """x³ + x² − 2x − 1 with coefficients reduced into F_p."""
    field = FiniteField(p)
    return CubicPoly(*(field.from_rational(c) for c in MINPOLY_ALPHA.coeffs))


def total_ramification_witness(p: int) -> FqElem:
    """The unique r ∈ F_p with minpoly ≡ (x − r)³ mod p."""
    field = FiniteField(p)
    target = reduce_minpoly_mod(p)
    hits = [r for r in field.elements() if _cube_of_linear(field, r) == target]
    if len(hits) != 1:
        raise NoWitnessError(f"minimal polynomial is not a cube of a linear factor mod {p}")
    return hits[0]


def total_ramification_witness_7() -> FqElem:
    return total_ramification_witness(7)


def _cube_of_linear(field: FiniteField, r: FqElem) -> CubicPoly:
    # (x − r)³ = x³ − 3r·x² + 3r²·x − r³
    return CubicPoly(field.one, -3 * r, 3 * r * r, -(r * r * r))


RESIDUE_TAGS = ("two", "pi")


def residue_field(prime_tag: str) -> FiniteField:
    if prime_tag == "two":
        return F8
    if prime_tag == "pi":
        return F7
    raise ValueError(f"unknown prime {prime_tag!r}; expected one of {RESIDUE_TAGS}")


def residue_map(a: KElem, prime_tag: str) -> FqElem:
    """Image of a ∈ K in the residue field of (2) or (π).

    At (2) the coordinates are reduced individually (α ↦ ᾱ ∈ F₈); at (π) the
    substitution α ↦ 2 mod 7 is used.  Coordinates must be integral at the prime.
    """
    field = residue_field(prime_tag)
    if prime_tag == "two":
        return FqElem(field, tuple(F2.from_rational(c).value for c in a.coeffs))
    a0, a1, a2 = (field.from_rational(c) for c in a.coeffs)
    return a0 + a1 * 2 + a2 * 4


def reduce_f_at_residue(prime_tag: str) -> CubicPoly:
    """f = x³ + (α−2)x² − (α+1)x + 1 with coefficients mapped into the residue field."""
    return F_THETA.map_coeffs(lambda c: residue_map(c, prime_tag))


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def mu_in_Fq(n: int, q: int) -> bool:
    """True iff F_q contains a primitive n-th root of unity, i.e. n | q − 1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    if not is_prime_power(q):
        raise ValueError(f"{q} is not a prime power")
    if math.gcd(n, q) != 1:
        raise ValueError(f"n = {n} is not prime to the characteristic of F_{q}")
    return (q - 1) % n == 0


DEFAULT_SERIES_PRECISION = 16


class ResidueSeries:
    """Truncated Laurent series Σ_{k ≤ i < k+N} a_i s^i over F_q.

    ``coeffs[0]`` is the coefficient of s^k.  A series whose known window is
    entirely zero is kept as such (``is_zero``), with ``start`` the first
    unknown exponent.
    """

    __slots__ = ("coeffs", "field", "start")

    def __init__(self, field: FiniteField, start: int, coeffs: Sequence):
        coeffs = [field(c) for c in coeffs]
        lead = next((i for i, c in enumerate(coeffs) if c), None)
        if lead is None:
            self.field, self.start, self.coeffs = field, start + len(coeffs), ()
        else:
            self.field, self.start, self.coeffs = field, start + lead, tuple(coeffs[lead:])

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def cutoff(self) -> int:
        return self.start + len(self.coeffs)

    def valuation(self) -> int:
        if self.is_zero:
            raise InsufficientPrecisionError("series vanishes on its whole window")
        return self.start

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*s^{self.start + i}" for i, c in enumerate(self.coeffs) if c)
        return f"ResidueSeries({terms or '0'} + O(s^{self.cutoff}))"

    def __mul__(self, other: ResidueSeries) -> ResidueSeries:
        if self.is_zero or other.is_zero:
            return ResidueSeries(self.field, self.start + other.start, [])
        n = min(self.precision, other.precision)
        out = [self.field.zero] * n
        for i in range(n):
            a = self.coeffs[i]
            if a:
                for j in range(n - i):
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return ResidueSeries(self.field, self.start + other.start, out)

    def inverse(self) -> ResidueSeries:
        if self.is_zero:
            raise InsufficientPrecisionError("cannot invert a series with no known nonzero term")
        n = self.precision
        lead_inv = self.coeffs[0].inverse()
        out = [lead_inv]
        for m in range(1, n):
            acc = self.field.zero
            for i in range(1, m + 1):
                acc = acc + self.coeffs[i] * out[m - i]
            out.append(-acc * lead_inv)
        return ResidueSeries(self.field, -self.start, out)

    def __truediv__(self, other: ResidueSeries) -> ResidueSeries:
        return self * other.inverse()

    def substitute_scaled(self, c: FqElem) -> ResidueSeries:
        """The image under s ↦ c·s."""
        return ResidueSeries(
            self.field,
            self.start,
            [a * c ** (self.start + i) for i, a in enumerate(self.coeffs)],
        )

    def residue(self) -> FqElem:
        """Residue class of a unit (valuation 0)."""
        if self.valuation() != 0:
            raise ValueError("only units have a residue in F_q^×")
        return self.coeffs[0]


def delta_residue(a: ResidueSeries, scale: FqElem) -> FqElem:
    """Residue of Δ(a) = τ(a)/a for the automorphism τ: s ↦ scale·s."""
    if a.is_zero:
        raise InsufficientPrecisionError("cannot determine a from its window")
    quotient = a.substitute_scaled(scale) / a
    return quotient.residue()


def tame_delta_residue(q: int, n: int, a: ResidueSeries, zeta: FqElem | None = None) -> FqElem:
    """Residue of σ(a)/a for a uniformizer a of F_q((s)), where σ(s) = ζ·s.

    ``zeta`` defaults to the field's fixed primitive n-th root of unity; the
    result is that primitive n-th root whatever uniformizer is chosen.
    """
    field = a.field
    if field.order != q:
        raise ValueError(f"series lives over F_{field.order}, not F_{q}")
    if n < 1 or (q - 1) % n:
        raise ValueError(f"n = {n} must divide q − 1 = {q - 1}")
    if zeta is None:
        zeta = field.root_of_unity(n)
    elif zeta.multiplicative_order() != n:
        raise ValueError(f"{zeta} is not a primitive {n}-th root of unity")
    if a.valuation() != 1:
        raise ValueError("a must be a uniformizer (valuation 1)")
    return delta_residue(a, zeta)
