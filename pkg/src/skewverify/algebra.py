"""The cyclic algebra D = (L/K, φ, 2π) and its outer automorphism σ̃.

D = L ⊕ Lu ⊕ Lu² with u³ = 2π and u·l = φ(l)·u.  Elements are written with
L-coefficients on the left.  K is the centre of D, so every K-linear map on D
is given by its values on the nine basis elements θ^j·u^i.
"""

from __future__ import annotations

from collections.abc import Sequence

from .constants import (
    D_ENTRIES,
    LAMBDA_COORDS,
    THETA_IMAGE_DENOMINATOR,
    THETA_IMAGE_NUMERATORS,
)
from .field_tower import (
    F_THETA,
    K_ONE,
    K_ZERO,
    L_ZERO,
    PI,
    THETA,
    CubicPoly,
    InconsistencyError,
    KElem,
    LElem,
    Rational,
)
from .linalg import SingularMatrixError, solve

U_CUBED = PI * 2


class DElem:
    """e0 + e1·u + e2·u² with e_i ∈ L."""

    __slots__ = ("coeffs",)

    def __init__(self, e0=0, e1=0, e2=0):
        self.coeffs = (LElem.coerce(e0), LElem.coerce(e1), LElem.coerce(e2))

    @classmethod
    def _raw(cls, e0, e1, e2) -> DElem:
        obj = object.__new__(cls)
        obj.coeffs = (e0, e1, e2)
        return obj

    @classmethod
    def coerce(cls, value) -> DElem:
        if isinstance(value, DElem):
            return value
        return cls(LElem.coerce(value))

    @classmethod
    def from_k_coords(cls, coords: Sequence[KElem]) -> DElem:
        """Inverse of :meth:`k_coords`: nine K-coordinates ordered by (u-power, θ-power)."""
        c = list(coords)
        if len(c) != 9:
            raise ValueError("expected nine K-coordinates")
        return cls._raw(*(LElem._raw(*c[3 * i : 3 * i + 3]) for i in range(3)))

    def k_coords(self) -> list[KElem]:
        return [k for e in self.coeffs for k in e.coeffs]

    def __repr__(self) -> str:
        return f"DElem({', '.join(repr(c) for c in self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for i, e in enumerate(self.coeffs):
            if e:
                mono = ("", "*u", "*u^2")[i]
                terms.append(f"[{e}]{mono}")
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        if isinstance(other, DElem):
            return self.coeffs == other.coeffs
        if isinstance(other, (LElem, KElem, int, Rational)):
            return self.coeffs == (LElem.coerce(other), L_ZERO, L_ZERO)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __neg__(self) -> DElem:
        a0, a1, a2 = self.coeffs
        return DElem._raw(-a0, -a1, -a2)

    def __add__(self, other) -> DElem:
        if not isinstance(other, DElem):
            if isinstance(other, (LElem, KElem, int, Rational)):
                a0, a1, a2 = self.coeffs
                return DElem._raw(a0 + other, a1, a2)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return DElem._raw(a[0] + b[0], a[1] + b[1], a[2] + b[2])

    __radd__ = __add__

    def __sub__(self, other) -> DElem:
        if not isinstance(other, DElem):
            if isinstance(other, (LElem, KElem, int, Rational)):
                a0, a1, a2 = self.coeffs
                return DElem._raw(a0 - other, a1, a2)
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        return DElem._raw(a[0] - b[0], a[1] - b[1], a[2] - b[2])

    def __rsub__(self, other) -> DElem:
        return (-self) + other

    def __mul__(self, other) -> DElem:
        if not isinstance(other, DElem):
            if isinstance(other, (KElem, int, Rational)):
                # central scalars
                a0, a1, a2 = self.coeffs
                return DElem._raw(a0 * other, a1 * other, a2 * other)
            if isinstance(other, LElem):
                other = DElem._raw(other, L_ZERO, L_ZERO)
            else:
                return NotImplemented
        return d_mul(self, other)

    def __rmul__(self, other) -> DElem:
        if isinstance(other, (KElem, int, Rational)):
            return self * other
        if isinstance(other, LElem):
            a0, a1, a2 = self.coeffs
            return DElem._raw(other * a0, other * a1, other * a2)
        return NotImplemented

    def __truediv__(self, other) -> DElem:
        if isinstance(other, (KElem, int, Rational)):
            return self * (1 / KElem.coerce(other))
        return self * d_inv(DElem.coerce(other))

    def __pow__(self, n: int) -> DElem:
        if n < 0:
            return d_inv(self) ** (-n)
        result, base = D_ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> DElem:
        return d_inv(self)


def d_mul(a: DElem, b: DElem) -> DElem:
    """(l·u^i)(m·u^j) = l·φ^i(m)·u^{i+j}, with u³ = 2π."""
    out = [L_ZERO] * 5
    b_twisted = [b.coeffs, [m.phi(1) for m in b.coeffs], [m.phi(2) for m in b.coeffs]]
    for i, l in enumerate(a.coeffs):
        if not l:
            continue
        row = b_twisted[i]
        for j in range(3):
            m = row[j]
            if m:
                out[i + j] = out[i + j] + l * m
    return DElem._raw(
        out[0] + out[3] * U_CUBED,
        out[1] + out[4] * U_CUBED,
        out[2],
    )


D_ZERO = DElem()
D_ONE = DElem(1)
D_U = DElem(0, 1)
D_THETA = DElem(THETA)
D_ALPHA = DElem(KElem(0, 1))

# basis θ^j·u^i enumerated in (i, j) order, matching DElem.k_coords
def _basis_element(i: int, j: int) -> DElem:
    coords = [K_ZERO] * 9
    coords[3 * i + j] = K_ONE
    return DElem.from_k_coords(coords)


BASIS = [_basis_element(i, j) for i in range(3) for j in range(3)]


def d_inv(a: DElem) -> DElem:
    """Two-sided inverse via the 9×9 left-regular system over K."""
    if not a:
        raise ZeroDivisionError("zero has no inverse in D")
    columns = [(a * b).k_coords() for b in BASIS]
    matrix = [[columns[c][r] for c in range(9)] for r in range(9)]
    try:
        sol = solve(matrix, D_ONE.k_coords())
    except SingularMatrixError as exc:
        raise InconsistencyError(f"element is a zero divisor in D: {a!r}") from exc
    return DElem.from_k_coords(sol)


def _apply_semilinear(images: Sequence[DElem], sigma_power: int, a: DElem) -> DElem:
    acc = D_ZERO
    for k, img in zip(a.k_coords(), images):
        if k:
            acc = acc + img * k.sigma(sigma_power)
    return acc


class OuterAut:
    """σ̃ on D, given by σ on K together with the images of θ and u.

    The map is the σ-semilinear extension σ̃(Σ k_ij θ^j u^i) = Σ σ(k_ij)·Θ^j·U^i.
    With ``verify=True`` construction fails unless the images satisfy the
    defining relations of D (so the extension is a well-defined homomorphism).
    """

    def __init__(self, theta_image: DElem, u_image: DElem, *, verify: bool = True):
        self.theta_image = theta_image
        self.u_image = u_image
        self.sigma_power = 1
        theta_pows = [D_ONE, theta_image, theta_image * theta_image]
        u_pows = [D_ONE, u_image, u_image * u_image]
        self._images = {1: tuple(theta_pows[j] * u_pows[i] for i in range(3) for j in range(3))}
        if verify:
            failed = [name for name, ok in defining_relations(self).items() if not ok]
            if failed:
                raise InconsistencyError(f"automorphism data violates {', '.join(failed)}")

    @property
    def lam(self) -> LElem:
        """λ with σ̃(u) = λ·u."""
        e0, e1, e2 = self.u_image.coeffs
        if e0 or e2:
            raise ValueError("u-image is not of the form λ·u")
        return e1

    def basis_images(self, power: int) -> tuple[DElem, ...]:
        if power not in self._images:
            prev = self.basis_images(power - 1)
            self._images[power] = tuple(self.apply(b) for b in prev)
        return self._images[power]

    def apply(self, a: DElem, power: int = 1) -> DElem:
        if power < 0:
            raise ValueError("negative powers need an inner witness; use aut_inverse_apply")
        if power == 0:
            return a
        return _apply_semilinear(self.basis_images(power), power, a)

    __call__ = apply

    @classmethod
    def from_data(cls, numerators=THETA_IMAGE_NUMERATORS, denominator=THETA_IMAGE_DENOMINATOR,
                  lam: LElem | None = None, *, verify: bool = True) -> OuterAut:
        if lam is None:
            lam = LElem(*(KElem(*k) for k in LAMBDA_COORDS))
        theta_image = theta_image_from_matrix(numerators, denominator)
        return cls(theta_image, DElem(0, lam), verify=verify)


def theta_image_from_matrix(numerators, denominator) -> DElem:
    """(1/denominator)·Σ c_ij θ^i u^j; ``numerators[i][j]`` is a K-coordinate triple."""
    scale = 1 / Rational(denominator)
    return DElem(
        *(LElem(*(KElem(*numerators[i][j]) * scale for i in range(3))) for j in range(3))
    )


def d_from_matrix(entries) -> DElem:
    """Σ d_ij θ^i u^j."""
    return DElem(*(LElem(*(KElem(*entries[i][j]) for i in range(3))) for j in range(3)))


class InnerWitness:
    """An element d with σ̃³ = Inn(d) and σ̃(d) = d, with its inverse cached."""

    def __init__(self, d: DElem):
        self.d = d
        self.d_inverse = d_inv(d)
        if d * self.d_inverse != D_ONE:
            raise InconsistencyError("d·d⁻¹ ≠ 1")

    def conjugate(self, a: DElem) -> DElem:
        """d·a·d⁻¹."""
        return self.d * a * self.d_inverse

    @classmethod
    def from_data(cls, entries=D_ENTRIES) -> InnerWitness:
        return cls(d_from_matrix(entries))


def aut_apply(s: OuterAut, a: DElem, power: int = 1) -> DElem:
    return s.apply(a, power)


def aut_inverse_apply(s: OuterAut, w: InnerWitness, a: DElem) -> DElem:
    """σ̃⁻¹(a) = σ̃²(d⁻¹·a·d)."""
    return s.apply(w.d_inverse * a * w.d, 2)


def eval_poly_in_D(p: CubicPoly, twist: int, a: DElem) -> DElem:
    """Evaluate p^{σ^twist} at a; the K-coefficients are central in D."""
    return p.evaluate(a, lambda c: DElem(KElem.coerce(c).sigma(twist)))


def defining_relations(s: OuterAut) -> dict[str, bool]:
    """The three relations that make the semilinear extension well defined."""
    sides = _relation_sides(s, None)
    return {name: lhs == rhs for name, (lhs, rhs) in sides.items() if name in ("R1", "R2", "R3")}


def relation_sides(s: OuterAut, w: InnerWitness) -> dict[str, tuple[object, object]]:
    """Both sides of every published identity, keyed R1..R7."""
    return _relation_sides(s, w)


def _relation_sides(s: OuterAut, w: InnerWitness | None) -> dict[str, tuple[object, object]]:
    U, Th = s.u_image, s.theta_image
    sides: dict[str, tuple[object, object]] = {
        "R1": (U * U * U, DElem(U_CUBED.sigma(1))),
        "R2": (U * Th, s.apply(DElem(THETA.phi(1))) * U),
        "R3": (eval_poly_in_D(F_THETA, 1, Th), D_ZERO),
    }
    if w is None:
        return sides
    sides["R4"] = (s.apply(D_THETA, 3), w.conjugate(D_THETA))
    sides["R5"] = (s.apply(D_U, 3), w.conjugate(D_U))
    sides["R6"] = (s.apply(w.d), w.d)
    try:
        lam = s.lam
        sides["R7"] = (lam.norm(), PI.sigma(1) / PI)
    except (ValueError, InconsistencyError) as exc:
        sides["R7"] = (exc, PI.sigma(1) / PI)
    return sides


def check_relations(s: OuterAut, w: InnerWitness) -> dict[str, bool]:
    """Exact truth value of each identity R1..R7 (see :func:`relation_sides`)."""
    return {name: lhs == rhs for name, (lhs, rhs) in relation_sides(s, w).items()}


RELATION_LABELS = {
    "R1": "σ̃(u)³ = σ(2π)",
    "R2": "σ̃(u)·σ̃(θ) = σ̃(φ(θ))·σ̃(u)",
    "R3": "f^σ(σ̃(θ)) = 0",
    "R4": "σ̃³(θ) = d·θ·d⁻¹",
    "R5": "σ̃³(u) = d·u·d⁻¹",
    "R6": "σ̃(d) = d",
    "R7": "N_{L/K}(λ) = σ(π)/π",
}
