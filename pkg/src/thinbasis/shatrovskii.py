"""The Shatrovskii scheme: arithmetic-progression moduli and their basis.

For an order h >= 2, strictly increasing pairwise coprime residues
r_1 < ... < r_h and a step P, the scheme at index k >= 1 consists of

    s_{i,k} = k*P + r_i        (pairwise coprime, strictly increasing)
    S_k     = prod_i s_{i,k}
    a_{i,k} = S_k / s_{i,k}    (strictly decreasing, jointly coprime)

P must be at least r_h - r_1 and divisible by every prime that divides
some difference r_j - r_i; that is what forces the s_{i,k} to be pairwise
coprime for every k.

A start index k1 >= k0(h) fixes the stratum sequence ell(t): for t >= 1,
ell(t) is the unique index with

    S_{k1 + ell(t)} <= S_{k1} ** t < S_{k1 + ell(t) + 1},

which exists and is strictly increasing because S_k grows strictly but,
from k0(h) on, by less than a factor of two per step.  Stratum t
contributes the multiples

    V(t) = { a_{i, k1+ell(t)} * v : 1 <= i <= h, 1 <= v <= v_bound(t, i) }

and the basis is  [0, (h-1)*S_{k1}]  union  V(1) union V(2) union ...
Its counting function stays below a constant times x**(1/h), which is why
the construction is worth the trouble.
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .arith import pairwise_coprime, radical
from .errors import InvalidParamsError


def k0(h: int) -> int:
    """Smallest start index from which S_{k+1} < 2*S_k is guaranteed.

    Equal to floor(1/(2**(1/h) - 1)) + 1, but computed by the exact
    integer predicate "2*m**h <= (m+1)**h" so that no floating-point
    rounding near the threshold can shift the answer.
    """
    if h < 2:
        raise InvalidParamsError("order h must be at least 2")
    m = 1
    while 2 * m ** h <= (m + 1) ** h:
        m += 1
    return m  # == (largest qualifying m) + 1


def choose_P(r: Sequence[int]) -> int:
    """Smallest valid step P for the residues r.

    P must be a multiple of every prime dividing some difference
    r_j - r_i, and at least r_h - r_1: take the radical R of the product
    of all differences and round r_h - r_1 up to a multiple of R.
    """
    _validate_residues(len(r), r)
    diff_product = 1
    for i in range(len(r)):
        for j in range(i + 1, len(r)):
            diff_product *= r[j] - r[i]
    rad = radical(diff_product)
    span = r[-1] - r[0]
    return rad * -(-span // rad)


def _validate_residues(h: int, r: Sequence[int]) -> None:
    if h < 2:
        raise InvalidParamsError("order h must be at least 2")
    if len(r) != h:
        raise InvalidParamsError(f"r must contain exactly h = {h} values, got {len(r)}")
    if any(x < 1 for x in r):
        raise InvalidParamsError("r values must be positive")
    if any(r[i] >= r[i + 1] for i in range(len(r) - 1)):
        raise InvalidParamsError("r must be strictly increasing")
    if not pairwise_coprime(r):
        raise InvalidParamsError("r must be pairwise relatively prime")


def _validate_step(r: Sequence[int], P: int) -> None:
    if P < 1:
        raise InvalidParamsError("P must be positive")
    span = r[-1] - r[0]
    if P < span:
        raise InvalidParamsError(f"P must be at least r_h - r_1 = {span}, got {P}")
    for i in range(len(r)):
        for j in range(i + 1, len(r)):
            rad = radical(r[j] - r[i])
            if P % rad != 0:
                raise InvalidParamsError(
                    f"every prime dividing r_j - r_i must divide P: "
                    f"{r[j]} - {r[i]} = {r[j] - r[i]} has a prime factor not in P = {P}"
                )


@dataclass(frozen=True)
class ShatParams:
    """Validated scheme parameters (h, r, P, k1).

    P defaults to choose_P(r) and k1 to k0(h) when omitted.  Validation
    happens once here; everything downstream assumes it.
    """

    h: int
    r: tuple[int, ...]
    P: int | None = None
    k1: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(self.r))
        _validate_residues(self.h, self.r)
        if self.P is None:
            object.__setattr__(self, "P", choose_P(self.r))
        _validate_step(self.r, self.P)
        k_min = k0(self.h)
        if self.k1 is None:
            object.__setattr__(self, "k1", k_min)
        if self.k1 < k_min:
            raise InvalidParamsError(f"k1 must be at least k0(h) = {k_min}, got {self.k1}")
        object.__setattr__(self, "_ells", EllSeq(self))
        # stratum cache: t -> (SchemeRow at k1+ell(t), per-i multiplier bounds)
        object.__setattr__(self, "_strata", {})

    @property
    def k0(self) -> int:
        return k0(self.h)

    @property
    def ells(self) -> "EllSeq":
        return self._ells


@dataclass(frozen=True)
class SchemeRow:
    """One index k of the scheme: moduli s, product S, cofactors a."""

    k: int
    s: tuple[int, ...]
    S: int
    a: tuple[int, ...]


def scheme_product(params: ShatParams, k: int) -> int:
    """S_k = prod_i (k*P + r_i), without building the full row."""
    S = 1
    for ri in params.r:
        S *= k * params.P + ri
    return S


def scheme_row(params: ShatParams, k: int) -> SchemeRow:
    """Moduli, product, and cofactors at index k >= 1."""
    if k < 1:
        raise InvalidParamsError(f"scheme index k must be at least 1, got {k}")
    s = tuple(k * params.P + ri for ri in params.r)
    S = 1
    for si in s:
        S *= si
    a = tuple(S // si for si in s)
    return SchemeRow(k=k, s=s, S=S, a=a)


class EllSeq:
    """Lazily extended stratum indices ell(0), ell(1), ell(2), ...

    ell(0) = 0 is a defined anchor; for t >= 1, ell(t) is the unique
    index with S_{k1+ell(t)} <= S_{k1}**t < S_{k1+ell(t)+1}.  Values are
    found by galloping then binary search on the strictly increasing map
    k -> S_k, and cached.  Extension happens under a lock so concurrent
    readers always observe a consistent, append-only list.
    """

    def __init__(self, params: ShatParams):
        self.params = params
        self._vals = [0]
        self._lock = threading.Lock()

    def value(self, t: int) -> int:
        if t < 0:
            raise InvalidParamsError("stratum index t must be nonnegative")
        if t < len(self._vals):
            return self._vals[t]
        with self._lock:
            while len(self._vals) <= t:
                self._vals.append(self._locate(len(self._vals)))
        return self._vals[t]

    def _locate(self, t: int) -> int:
        p = self.params
        target = scheme_product(p, p.k1) ** t
        lo = self._vals[-1]  # previous ell already satisfies S_{k1+lo} <= target
        step = 1
        while scheme_product(p, p.k1 + lo + step) <= target:
            lo += step
            step *= 2
        hi = lo + step
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if scheme_product(p, p.k1 + mid) <= target:
                lo = mid
            else:
                hi = mid
        return lo


def ell(params: ShatParams, t: int) -> int:
    """Stratum index ell(t); ell(0) = 0 by convention."""
    return params.ells.value(t)


def _stratum(params: ShatParams, t: int) -> tuple[SchemeRow, tuple[int, ...]]:
    """Row at k1+ell(t) plus multiplier bounds, cached per parameter set.

    The cache dict is only ever written with values that are functions of
    the key, so racing writers are benign.
    """
    cached = params._strata.get(t)
    if cached is None:
        row = scheme_row(params, params.k1 + ell(params, t))
        L = (params.h - 1) * scheme_product(params, params.k1 + ell(params, t + 1))
        bounds = tuple(L // ai for ai in row.a)
        cached = (row, bounds)
        params._strata[t] = cached
    return cached


def v_bound(params: ShatParams, t: int, i: int) -> int:
    """Largest multiplier v admitted for cofactor i in stratum t.

    Equals floor((h-1) * S_{k1+ell(t+1)} / a_{i, k1+ell(t)}); i is
    1-based to match the scheme's subscripts.
    """
    if t < 1:
        raise InvalidParamsError("v_bound requires a stratum index t >= 1")
    if not 1 <= i <= params.h:
        raise InvalidParamsError(f"cofactor index i must lie in [1, {params.h}], got {i}")
    _, bounds = _stratum(params, t)
    return bounds[i - 1]


def member(params: ShatParams, x: int) -> bool:
    """True iff x lies in the basis.

    x is a member iff x <= (h-1)*S_{k1}, or some stratum t has a
    cofactor a with a | x and x/a within v_bound(t, i).  Only strata
    with smallest element a_{h, k1+ell(t)} <= x need to be examined,
    and that smallest element grows strictly with t.
    """
    if x < 0:
        return False
    if x <= (params.h - 1) * scheme_product(params, params.k1):
        return True
    t = 1
    while True:
        row, bounds = _stratum(params, t)
        if row.a[-1] > x:
            return False
        for ai, vmax in zip(row.a, bounds):
            if ai <= x and x % ai == 0 and x // ai <= vmax:
                return True
        t += 1


def _streams(params: ShatParams, x: int) -> list[Iterable[int]]:
    """Sorted element streams whose union is the basis restricted to [0, x]."""
    streams: list[Iterable[int]] = []
    top = (params.h - 1) * scheme_product(params, params.k1)
    streams.append(range(0, min(x, top) + 1))
    t = 1
    while True:
        row, bounds = _stratum(params, t)
        if row.a[-1] > x:
            break
        for ai, vmax in zip(row.a, bounds):
            hi = min(vmax, x // ai)
            if hi >= 1:
                streams.append(range(ai, ai * hi + 1, ai))
        t += 1
    return streams


def _merged(params: ShatParams, x: int) -> Iterator[int]:
    # ordered merge with dedup: the interval and the V(t) arms overlap
    last = -1
    for e in heapq.merge(*_streams(params, x)):
        if e != last:
            last = e
            yield e


def enumerate_up_to(params: ShatParams, x: int) -> list[int]:
    """All basis elements in [0, x], sorted ascending, deduplicated."""
    if x < 0:
        return []
    return list(_merged(params, x))


def count(params: ShatParams, x: int) -> int:
    """Counting function A(x): basis elements a with 1 <= a <= x."""
    if x < 1:
        return 0
    return sum(1 for e in _merged(params, x) if e)
