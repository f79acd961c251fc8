"""Constructive decomposition of n into exactly h basis elements.

Two layers.  The bounded diophantine solver finds nonnegative v_i with
sum a_i*v_i = n for the cofactors of a single scheme row, with explicit
per-coordinate bounds; the construction is Bezout coefficients scaled by
n, reduced coordinate-by-coordinate modulo s_i, with the adjustment
absorbed into the last coordinate.  On top of that, basis_decompose
picks the stratum t matching n's size and turns the v_i into basis
elements a_i*v_i, padding with zeros so the answer always has exactly
h summands.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import bezout_multi
from .errors import DomainError
from .shatrovskii import (
    SchemeRow,
    ShatParams,
    _stratum,
    ell,
    member,
    scheme_product,
)


@dataclass(frozen=True)
class Term:
    """One summand: a basis element, with its factorization when it has one.

    Elements taken from the initial interval (including 0) carry no
    factor; elements from a stratum carry factor = (a, v) with
    element == a * v.
    """

    element: int
    factor: tuple[int, int] | None = None

    def __post_init__(self):
        if self.element < 0:
            raise DomainError("term element must be nonnegative")
        if self.factor is not None:
            a, v = self.factor
            if a * v != self.element:
                raise DomainError(f"factor {a}*{v} does not equal element {self.element}")


@dataclass(frozen=True)
class Decomposition:
    """Exactly h terms summing to n."""

    n: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        total = sum(t.element for t in self.terms)
        if total != self.n:
            raise DomainError(f"terms sum to {total}, expected {self.n}")

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(t.element for t in self.terms)


def diophantine_decompose(row: SchemeRow, n: int, L: int) -> tuple[int, ...]:
    """Solve sum a_i*v_i = n with 0 <= v_i <= L // a_i, constructively.

    Requires (h-1)*S_k < n <= L.  The gcd of the cofactors a_i is 1, so
    Bezout coefficients scaled by n solve the equation over the signed
    integers; reducing coordinate i modulo s_i (for all but the last
    coordinate) and folding the difference into the last keeps the sum
    at n while pinning every coordinate into range.  The construction
    additionally guarantees v_i < s_i for i < h and v_h >= 1.
    """
    h = len(row.a)
    floor_n = (h - 1) * row.S
    if n <= floor_n:
        raise DomainError(f"n must exceed (h-1)*S_k = {floor_n}, got {n}")
    if n > L:
        raise DomainError(f"n must be at most L = {L}, got {n}")

    cert = bezout_multi(row.a)
    assert cert.g == 1  # scheme rows have jointly coprime cofactors
    u = [c * n for c in cert.coeffs]
    v = []
    carry = 0
    for i in range(h - 1):
        vi = u[i] % row.s[i]
        carry += (u[i] - vi) // row.s[i]
        v.append(vi)
    v.append(u[-1] + row.s[-1] * carry)

    assert sum(ai * vi for ai, vi in zip(row.a, v)) == n
    return tuple(v)


def find_t(params: ShatParams, n: int) -> int:
    """Stratum index: unique t >= 1 with (h-1)*S_{k1+ell(t)} < n <= (h-1)*S_{k1+ell(t+1)}.

    Defined only for n above the initial interval, n > (h-1)*S_{k1}.
    The thresholds grow like S_{k1}**t, so the linear scan is short.
    """
    hm1 = params.h - 1
    if n <= hm1 * scheme_product(params, params.k1):
        raise DomainError(
            f"find_t requires n > (h-1)*S_k1 = {hm1 * scheme_product(params, params.k1)}, got {n}"
        )
    t = 1
    while n > hm1 * scheme_product(params, params.k1 + ell(params, t + 1)):
        t += 1
    return t


def basis_decompose(params: ShatParams, n: int) -> Decomposition:
    """Write any n >= 0 as a sum of exactly h basis elements.

    Small n (at most (h-1)*S_{k1}) lie in the initial interval and are
    padded with zeros.  Larger n fall into stratum t = find_t(n); the
    diophantine solver with L = (h-1)*S_{k1+ell(t+1)} then produces
    multipliers within the stratum's bounds, so every nonzero product
    a_i*v_i is a basis element by construction.
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    h = params.h
    if n <= (h - 1) * scheme_product(params, params.k1):
        terms = (Term(n),) + (Term(0),) * (h - 1)
        return Decomposition(n=n, terms=terms)

    t = find_t(params, n)
    row, _ = _stratum(params, t)
    L = (h - 1) * scheme_product(params, params.k1 + ell(params, t + 1))
    v = diophantine_decompose(row, n, L)
    terms = []
    for ai, vi in zip(row.a, v):
        if vi == 0:
            terms.append(Term(0))
        else:
            element = ai * vi
            assert member(params, element)
            terms.append(Term(element, factor=(ai, vi)))
    return Decomposition(n=n, terms=tuple(terms))
