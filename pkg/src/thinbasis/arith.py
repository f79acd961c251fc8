"""Exact integer primitives used by every other module.

Naturals are plain Python ints (unbounded); nonnegativity is validated at
the boundaries and nothing here ever rounds, truncates, or overflows.
Intermediate magnitudes in the basis constructions grow exponentially, so
exactness is not optional.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import InvalidParamsError


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return (g, u, v) with a*u + b*v = g = gcd(a, b).

    Inputs must be nonnegative and not both zero (gcd(0, 0) admits no
    certificate).
    """
    if a < 0 or b < 0:
        raise InvalidParamsError("ext_gcd arguments must be nonnegative")
    if a == 0 and b == 0:
        raise InvalidParamsError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


@dataclass(frozen=True)
class BezoutCert:
    """gcd of a sequence together with coefficients witnessing it.

    Invariant: sum(a[i] * coeffs[i]) == g == gcd(a).  Coefficients are not
    canonical; only the identity is contractual.
    """

    g: int
    coeffs: tuple[int, ...]


def bezout_multi(a: Sequence[int]) -> BezoutCert:
    """Fold ext_gcd left to right, back-propagating coefficients.

    Requires a nonempty sequence of naturals with at least one positive
    entry.
    """
    if len(a) == 0:
        raise InvalidParamsError("bezout_multi requires a nonempty sequence")
    if any(x < 0 for x in a):
        raise InvalidParamsError("bezout_multi arguments must be nonnegative")
    if all(x == 0 for x in a):
        raise InvalidParamsError("bezout_multi requires at least one positive entry")
    g = a[0]
    coeffs = [1]
    for x in a[1:]:
        if g == 0 and x == 0:
            coeffs.append(0)
            continue
        g, u, v = ext_gcd(g, x)
        coeffs = [c * u for c in coeffs]
        coeffs.append(v)
    return BezoutCert(g=g, coeffs=tuple(coeffs))


def radical(m: int) -> int:
    """Product of the distinct primes dividing m; radical(1) == 1.

    Trial division only: callers feed it small numbers (differences of
    residues), never anything worth a factorization library.
    """
    if m < 1:
        raise InvalidParamsError("radical requires m >= 1")
    rad = 1
    if m % 2 == 0:
        rad = 2
        while m % 2 == 0:
            m //= 2
    p = 3
    while p * p <= m:
        if m % p == 0:
            rad *= p
            while m % p == 0:
                m //= p
        p += 2
    if m > 1:
        rad *= m
    return rad


def pairwise_coprime(a: Sequence[int]) -> bool:
    """True iff gcd(a[i], a[j]) == 1 for every pair i < j."""
    if any(x < 1 for x in a):
        raise InvalidParamsError("pairwise_coprime requires positive entries")
    return all(math.gcd(x, y) == 1 for x, y in combinations(a, 2))


def binom(n: int, k: int) -> int:
    """Exact binomial coefficient; k > n yields 0."""
    if k > n:
        return 0
    return math.comb(n, k)


def nth_root_floor(n: int, h: int) -> int:
    """floor(n ** (1/h)) computed exactly, by Newton iteration on ints."""
    if n < 0:
        raise InvalidParamsError("nth_root_floor requires n >= 0")
    if h < 1:
        raise InvalidParamsError("nth_root_floor requires h >= 1")
    if n == 0:
        return 0
    if h == 1:
        return n
    # seed strictly above the root: 2**ceil(bits/h) >= n**(1/h)
    x = 1 << -(-n.bit_length() // h)
    while True:
        y = ((h - 1) * x + n // x ** (h - 1)) // h
        if y >= x:
            break
        x = y
    while x ** h > n:
        x -= 1
    while (x + 1) ** h <= n:
        x += 1
    return x
