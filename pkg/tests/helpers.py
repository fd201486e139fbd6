"""Shared randomized-value generators for the test suite (seeded, exact)."""

import random
from fractions import Fraction

from d21link.ring import QuarterLaurent, RatFunc
from d21link.superlinalg import SuperMap, SuperSpace


def random_quarter_laurent(rng: random.Random, max_terms: int = 4,
                           exponent_span: int = 8) -> QuarterLaurent:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exponent = rng.randint(-exponent_span, exponent_span)
        terms[exponent] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return QuarterLaurent(terms)


def random_nonzero_quarter_laurent(rng: random.Random) -> QuarterLaurent:
    while True:
        poly = random_quarter_laurent(rng)
        if not poly.is_zero():
            return poly


def random_ratfunc(rng: random.Random) -> RatFunc:
    return RatFunc(random_quarter_laurent(rng),
                   random_nonzero_quarter_laurent(rng))


def random_even_map(rng: random.Random, space: SuperSpace,
                    density: float = 0.4) -> SuperMap:
    entries = {}
    for row in range(space.dim):
        for col in range(space.dim):
            if space.parity(row) != space.parity(col):
                continue
            if rng.random() < density:
                coeff = rng.randint(-3, 3)
                if coeff:
                    entries[(row, col)] = RatFunc.constant(coeff)
    return SuperMap(space, space, entries)


def random_homogeneous_map(rng: random.Random, space: SuperSpace,
                           parity: int, density: float = 0.4) -> SuperMap:
    entries = {}
    for row in range(space.dim):
        for col in range(space.dim):
            if (space.parity(row) ^ space.parity(col)) != parity:
                continue
            if rng.random() < density:
                coeff = rng.randint(-3, 3)
                if coeff:
                    entries[(row, col)] = RatFunc.constant(coeff)
    return SuperMap(space, space, entries, parity)
