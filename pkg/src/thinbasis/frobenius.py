"""Coprime-multiples basis: an initial segment plus h arithmetic rays.

For generators a'_1..a'_h with gcd 1 there is a least C such that every
n >= C is a nonnegative combination sum a'_i * v_i.  The set
[0, C-1] union a'_1*N0 union ... union a'_h*N0 is then a basis of order
h: small n are taken whole, large n split along the combination.  It is
a deliberately fat basis (each ray alone has linearly many elements), in
contrast to the thin constructions in the rest of the package.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass

from .decompose import Decomposition, Term
from .errors import DomainError, InvalidParamsError


def _reach_table(aprime: tuple[int, ...]) -> list[int | None]:
    """Predecessor table over [0, min*max]: which generator last reached n.

    table[n] is an index into aprime, or None when n is unreachable;
    table[0] is reachable with no generator (sentinel -1).  The largest
    unreachable value is known to fall below min*max, so the window
    suffices to read off the threshold.
    """
    limit = min(aprime) * max(aprime)
    table: list[int | None] = [None] * (limit + 1)
    table[0] = -1
    for n in range(1, limit + 1):
        for idx, a in enumerate(aprime):
            if a <= n and table[n - a] is not None:
                table[n] = idx
                break
    return table


def threshold(aprime) -> int:
    """Least C with every n >= C a nonnegative combination of the generators."""
    params = FrobeniusParams(tuple(aprime))
    return params.C


@dataclass(frozen=True)
class FrobeniusParams:
    """Generators (gcd 1, each positive) plus the derived threshold C."""

    aprime: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "aprime", tuple(self.aprime))
        if not self.aprime:
            raise InvalidParamsError("at least one generator is required")
        if any(a < 1 for a in self.aprime):
            raise InvalidParamsError("generators must be positive")
        if math.gcd(*self.aprime) != 1:
            raise InvalidParamsError(
                "generators must have gcd 1, otherwise no threshold exists"
            )
        table = _reach_table(self.aprime)
        unreachable = [n for n, t in enumerate(table) if t is None]
        object.__setattr__(self, "_table", table)
        object.__setattr__(self, "C", unreachable[-1] + 1 if unreachable else 0)

    @property
    def h(self) -> int:
        return len(self.aprime)


def _combination(params: FrobeniusParams, n: int) -> list[int]:
    """Multiplicities v with sum a'_i*v_i = n, valid for any n >= C."""
    table = params._table
    v = [0] * params.h
    amin = min(params.aprime)
    imin = params.aprime.index(amin)
    if n >= len(table):
        # peel multiples of the smallest generator back into the table
        q = (n - len(table) + 1 + amin - 1) // amin
        v[imin] += q
        n -= q * amin
    while n:
        idx = table[n]
        assert idx is not None and idx >= 0  # n >= C is always reachable
        v[idx] += 1
        n -= params.aprime[idx]
    return v


def frobenius_decompose(params: FrobeniusParams, n: int) -> Decomposition:
    """Exactly h basis elements summing to n.

    n below C is itself an element of the initial segment and is padded
    with zeros; otherwise each generator contributes the multiple
    a'_i * v_i from a witness combination.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    if n < params.C:
        terms = (Term(n),) + (Term(0),) * (params.h - 1)
        return Decomposition(n=n, terms=terms)
    v = _combination(params, n)
    terms = tuple(
        Term(a * vi, factor=(a, vi)) if vi else Term(0)
        for a, vi in zip(params.aprime, v)
    )
    return Decomposition(n=n, terms=terms)


def frobenius_member(params: FrobeniusParams, x: int) -> bool:
    """True iff x < C or x is a multiple of some generator."""
    if x < 0:
        return False
    return x < params.C or any(x % a == 0 for a in params.aprime)


def frobenius_enumerate_up_to(params: FrobeniusParams, x: int) -> list[int]:
    """Sorted, deduplicated elements of the basis in [0, x]."""
    if x < 0:
        return []
    streams = [range(0, min(x, params.C - 1) + 1)] if params.C > 0 else []
    streams.extend(range(0, x + 1, a) for a in params.aprime)
    out: list[int] = []
    for e in heapq.merge(*streams):
        if not out or e != out[-1]:
            out.append(e)
    return out


def frobenius_count(params: FrobeniusParams, x: int) -> int:
    """Counting function over [1, x], closed form.

    Multiples of any generator are counted by inclusion-exclusion over
    subset lcms; the initial segment contributes whatever small values
    are not already multiples.
    """
    if x < 1:
        return 0
    total = 0
    for size in range(1, params.h + 1):
        for subset in itertools.combinations(params.aprime, size):
            sign = 1 if size % 2 else -1
            total += sign * (x // math.lcm(*subset))
    for m in range(1, min(params.C - 1, x) + 1):
        if all(m % a for a in params.aprime):
            total += 1
    return total
