"""Brute-force coverage checking and counting-function analytics.

The coverage kernel treats subsets of [0, N] as big-int bit arrays and
computes the h-fold sumset by h-1 passes of shifted OR: one pass maps a
reachable set R to the union of R << a over basis elements a.  Summands
of any n <= N are themselves <= N, so truncating everything to N + 1
bits loses nothing.  A pass can be split across processes by output
range: bits [lo, hi] of the result depend only on bits [lo - a, hi] of
R, so each worker extracts the windows it needs from a shared read-only
copy of R and the merge is a disjoint OR.

Ratios A(x) / x**(1/h) are never materialized as floats.  Comparisons
cross-multiply (A**h against c**h * x) and the reported decimal is the
integer 6-digit fixed-point rendering of the exact root.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .arith import binom, nth_root_floor
from .bases import BasisHandle
from .errors import InvalidParamsError, ResourceLimitError
from .shatrovskii import ShatParams, count as shat_count, scheme_product

MEM_CAP_ENV = "THINBASIS_MEM_CAP_BYTES"


@dataclass(frozen=True)
class CoverageReport:
    """Outcome of h-fold sumset coverage over [0, N].

    first_gap, when present, is the least n in [0, N] that is not a sum
    of exactly h basis elements; covered means there is none.
    """

    N: int
    h: int
    covered: bool
    first_gap: int | None
    elements_used: int


@dataclass(frozen=True)
class ProfileRow:
    """One sampled point: counting function and exact ratio A**h / x."""

    x: int
    A: int
    ratio_num: int
    ratio_den: int
    ratio_decimal: str


@dataclass(frozen=True)
class ThinnessProfile:
    kind: str
    h: int
    rows: tuple[ProfileRow, ...]


@dataclass(frozen=True)
class BoundRow:
    x: int
    A: int
    holds: bool


@dataclass(frozen=True)
class ThinnessBoundReport:
    """Exact check of A(x)**h < constant**h * x at each sampled x."""

    constant: int
    rows: tuple[BoundRow, ...]
    all_hold: bool
    max_ratio_decimal: str


def ratio_decimal(A: int, x: int, h: int) -> str:
    """A / x**(1/h) as a 6-digit fixed-point decimal string, rounded down."""
    if x < 1:
        raise InvalidParamsError("ratio requires x >= 1")
    scaled = nth_root_floor(A**h * 10 ** (6 * h) // x, h)
    return f"{scaled // 10**6}.{scaled % 10**6:06d}"


def _max_ratio(pairs: list[tuple[int, int]], h: int) -> str:
    """Decimal rendering of max A / x**(1/h) over (x, A) pairs."""
    if not pairs:
        return "0.000000"
    best_x, best_a = pairs[0]
    for x, a in pairs[1:]:
        if a**h * best_x > best_a**h * x:
            best_x, best_a = x, a
    return ratio_decimal(best_a, best_x, h)


def _bitset(elements) -> int:
    bits = 0
    for e in elements:
        bits |= 1 << e
    return bits


def _convolve_serial(reach: int, elements, mask: int) -> int:
    acc = 0
    for a in elements:
        acc |= reach << a
    return acc & mask


def _extract(buf: bytes, start_bit: int, nbits: int) -> int:
    """Bits [start_bit, start_bit + nbits) of buf as an int."""
    if nbits <= 0:
        return 0
    lo_byte = start_bit // 8
    hi_byte = (start_bit + nbits + 7) // 8
    window = int.from_bytes(buf[lo_byte:hi_byte], "little")
    return (window >> (start_bit % 8)) & ((1 << nbits) - 1)


def _convolve_chunk(reach_bytes: bytes, elements, lo: int, hi: int) -> tuple[int, int]:
    """Bits [lo, hi] of the shifted-OR pass, from a serialized reach set."""
    width = hi - lo + 1
    acc = 0
    for a in elements:
        if a > hi:
            break  # elements ascend; later ones cannot land in the chunk
        src_lo = max(0, lo - a)
        window = _extract(reach_bytes, src_lo, hi - a - src_lo + 1)
        acc |= window << (src_lo + a - lo)
    return lo, acc & ((1 << width) - 1)


def _convolve_parallel(pool: ProcessPoolExecutor, reach: int, elements, N: int, jobs: int) -> int:
    reach_bytes = reach.to_bytes(N // 8 + 1, "little")
    step = -(-(N + 1) // jobs)
    futures = [
        pool.submit(_convolve_chunk, reach_bytes, elements, lo, min(N, lo + step - 1))
        for lo in range(0, N + 1, step)
    ]
    acc = 0
    for fut in futures:
        lo, chunk = fut.result()
        acc |= chunk << lo
    return acc


def required_coverage_bytes(N: int, jobs: int = 1) -> int:
    """Rough peak-allocation estimate for coverage_check on [0, N].

    The serial kernel holds about four live copies of the bit array
    (reach, the shifted temporary, the accumulator, the final mask);
    each extra worker holds its own serialized copy.
    """
    nbytes = N // 8 + 1
    return (3 + max(1, jobs)) * nbytes


def coverage_check(
    basis: BasisHandle,
    h: int,
    N: int,
    jobs: int = 1,
    mem_cap_bytes: int | None = None,
) -> CoverageReport:
    """Check that every n in [0, N] is a sum of exactly h basis elements.

    Raises a resource error before allocating when the estimated peak
    exceeds mem_cap_bytes (default: the THINBASIS_MEM_CAP_BYTES
    environment variable, unset meaning no cap).
    """
    if h < 1:
        raise InvalidParamsError("order h must be at least 1")
    if N < 0:
        raise InvalidParamsError("N must be nonnegative")
    if jobs < 1:
        raise InvalidParamsError("jobs must be at least 1")

    if mem_cap_bytes is None:
        cap_env = os.environ.get(MEM_CAP_ENV)
        mem_cap_bytes = int(cap_env) if cap_env else None
    required = required_coverage_bytes(N, jobs)
    if mem_cap_bytes is not None and required > mem_cap_bytes:
        raise ResourceLimitError(
            f"coverage over [0, {N}] needs about {required} bytes, "
            f"cap is {mem_cap_bytes}",
            required_bytes=required,
            cap_bytes=mem_cap_bytes,
        )

    elements = basis.enumerate_up_to(N)
    mask = (1 << (N + 1)) - 1
    reach = _bitset(elements) & mask
    if jobs == 1 or N + 1 < jobs:
        for _ in range(h - 1):
            reach = _convolve_serial(reach, elements, mask)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for _ in range(h - 1):
                reach = _convolve_parallel(pool, reach, elements, N, jobs)

    missing = ~reach & mask
    first_gap = None if missing == 0 else (missing & -missing).bit_length() - 1
    return CoverageReport(
        N=N,
        h=h,
        covered=missing == 0,
        first_gap=first_gap,
        elements_used=len(elements),
    )


def counting_lower_bound_check(basis: BasisHandle, h: int, N: int) -> tuple[bool, int | None]:
    """Check x + 1 <= binom(A(x) + h, h) for every x in [0, N].

    Returns (True, None) or (False, first violating x).  Only meaningful
    for sets already known to be bases of order h on the range.
    """
    if h < 1:
        raise InvalidParamsError("order h must be at least 1")
    positives = [e for e in basis.enumerate_up_to(N) if e >= 1]
    running = 0
    idx = 0
    for x in range(N + 1):
        while idx < len(positives) and positives[idx] <= x:
            running += 1
            idx += 1
        if x + 1 > binom(running + h, h):
            return False, x
    return True, None


def thinness_bound_check(params: ShatParams, xs) -> ThinnessBoundReport:
    """Exact check of A(x) < 24*h*(h-1)*S_{k1} * x**(1/h) at each x.

    The inequality is evaluated as A(x)**h < constant**h * x over the
    integers; the report also carries the largest sampled ratio as a
    decimal, for the record.
    """
    constant = 24 * params.h * (params.h - 1) * scheme_product(params, params.k1)
    rows = []
    pairs = []
    for x in xs:
        if x < 1:
            raise InvalidParamsError("bound check requires x >= 1")
        A = shat_count(params, x)
        rows.append(BoundRow(x=x, A=A, holds=A**params.h < constant**params.h * x))
        pairs.append((x, A))
    return ThinnessBoundReport(
        constant=constant,
        rows=tuple(rows),
        all_hold=all(r.holds for r in rows),
        max_ratio_decimal=_max_ratio(pairs, params.h),
    )


def thinness_profile(basis: BasisHandle, xs) -> ThinnessProfile:
    """Sample A(x) and the exact ratio A**h / x over a schedule of x values."""
    rows = []
    for x in xs:
        if x < 1:
            raise InvalidParamsError("profile requires x >= 1")
        A = basis.count(x)
        rows.append(
            ProfileRow(
                x=x,
                A=A,
                ratio_num=A**basis.order,
                ratio_den=x,
                ratio_decimal=ratio_decimal(A, x, basis.order),
            )
        )
    return ThinnessProfile(kind=basis.kind, h=basis.order, rows=tuple(rows))


def doubling_schedule(X: int) -> list[int]:
    """Doubling x values up to X, starting at 1024 (or 1 for small X)."""
    if X < 1:
        return []
    x = 1024 if X >= 1024 else 1
    out = []
    while x <= X:
        out.append(x)
        x *= 2
    return out
