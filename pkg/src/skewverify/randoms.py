"""Seeded random elements with small heights, for property checks."""

from __future__ import annotations

import random

from gmpy2 import mpq

from .algebra import DElem
from .field_tower import KElem, LElem
from .residue import DEFAULT_SERIES_PRECISION, FiniteField, ResidueSeries

DENOMINATORS = (1, 2, 3)


def random_rational(rng: random.Random) -> mpq:
    return mpq(rng.randint(-9, 9), rng.choice(DENOMINATORS))


def random_k(rng: random.Random) -> KElem:
    return KElem(*(random_rational(rng) for _ in range(3)))


def random_l(rng: random.Random) -> LElem:
    return LElem(*(random_k(rng) for _ in range(3)))


def random_d(rng: random.Random) -> DElem:
    return DElem(*(random_l(rng) for _ in range(3)))


def nonzero(gen, rng: random.Random):
    while True:
        a = gen(rng)
        if a:
            return a


def random_series(rng: random.Random, ring, precision: int, min_exponents=range(-2, 3), density: float = 0.5):
    """A nonzero series with relative precision ``precision``.

    The leading coefficient is nonzero and the others are nonzero with
    probability ``density``.
    """
    k = rng.choice(min_exponents)
    coeffs = {k: nonzero(random_d, rng)}
    for i in range(k + 1, k + precision):
        if rng.random() < density:
            coeffs[i] = random_d(rng)
    return ring.series(coeffs, k + precision)


def random_uniformizer(rng: random.Random, field: FiniteField, precision: int = DEFAULT_SERIES_PRECISION) -> ResidueSeries:
    """s·(u0 + u1·s + …) with u0 ≠ 0 and random higher terms."""
    elements = list(field.elements())
    lead = rng.choice(elements[1:] if not elements[0] else [e for e in elements if e])
    return ResidueSeries(field, 1, [lead] + [rng.choice(elements) for _ in range(precision - 1)])
