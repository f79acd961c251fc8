"""Command handlers shared by the CLI and the HTTP service.

Each handler resolves a construction from the given parameters, runs
the requested computation, and returns a wire envelope (a plain dict,
already JSON-safe).  Both user surfaces are thin shells around these
functions, so their outputs are identical by construction.
"""

from __future__ import annotations

import random

from .bases import BasisHandle, FrobeniusBasis, GAdicBasis, ShatrovskiiBasis
from .errors import InvalidParamsError
from .frobenius import FrobeniusParams
from .gadic import GAdicParams
from .shatrovskii import ShatParams, ell, k0, scheme_row
from .verify import (
    _max_ratio,
    coverage_check,
    doubling_schedule,
    thinness_profile,
)
from .wire import envelope

CONSTRUCT_ROWS = 5  # scheme rows shown by handle_construct
CONSTRUCT_ELLS = 5  # stratum indices shown by handle_construct
SPOT_CHECK_SAMPLES = 100


def resolve_basis(
    *,
    h: int | None = None,
    r=None,
    P: int | None = None,
    k1: int | None = None,
    g: int | None = None,
    aprime=None,
) -> BasisHandle:
    """Pick a construction from the parameter mix.

    aprime selects the coprime-multiples basis, g the base-g digit
    basis, and h with r the progression scheme.  h alongside aprime is
    tolerated (verification can check a different order than the
    construction's own); other mixtures are rejected.
    """
    if aprime is not None:
        if r is not None or g is not None or P is not None or k1 is not None:
            raise InvalidParamsError("aprime cannot be combined with r, g, P, or k1")
        return FrobeniusBasis(FrobeniusParams(tuple(aprime)))
    if g is not None:
        if r is not None or P is not None or k1 is not None:
            raise InvalidParamsError("g cannot be combined with r, P, or k1")
        if h is None:
            raise InvalidParamsError("the base-g construction requires h")
        return GAdicBasis(GAdicParams(g=g, h=h))
    if h is None or r is None:
        raise InvalidParamsError("the progression scheme requires both h and r")
    return ShatrovskiiBasis(ShatParams(h=h, r=tuple(r), P=P, k1=k1))


def handle_construct(**params) -> dict:
    basis = resolve_basis(**params)
    if isinstance(basis, ShatrovskiiBasis):
        p = basis.params
        result = {
            "h": p.h,
            "r": list(p.r),
            "P": p.P,
            "k0": k0(p.h),
            "k1": p.k1,
            "rows": [
                {"k": row.k, "s": list(row.s), "S": row.S, "a": list(row.a)}
                for row in (scheme_row(p, k) for k in range(p.k1, p.k1 + CONSTRUCT_ROWS + 1))
            ],
            "ell": [{"t": t, "ell": ell(p, t)} for t in range(CONSTRUCT_ELLS + 1)],
        }
    else:
        result = basis.describe()
    return envelope(basis.kind, "construct", result)


def handle_decompose(n: int, **params) -> dict:
    basis = resolve_basis(**params)
    if not hasattr(basis, "decompose"):
        raise InvalidParamsError(f"{basis.kind} has no constructive decomposition")
    dec = basis.decompose(n)
    result = {
        "n": dec.n,
        "terms": [
            {"element": t.element, "factor": list(t.factor) if t.factor else None}
            for t in dec.terms
        ],
    }
    return envelope(basis.kind, "decompose", result)


def handle_enumerate(x: int, **params) -> dict:
    basis = resolve_basis(**params)
    elements = basis.enumerate_up_to(x)
    result = {"x": x, "elements": elements, "count": sum(1 for e in elements if e)}
    return envelope(basis.kind, "enumerate", result)


def handle_verify(N: int, jobs: int = 1, seed: int = 0, **params) -> dict:
    basis = resolve_basis(**params)
    order = params.get("h") or basis.order
    report = coverage_check(basis, order, N, jobs=jobs)
    result = {
        "N": report.N,
        "h": report.h,
        "covered": report.covered,
        "first_gap": report.first_gap,
        "elements_used": report.elements_used,
        "jobs": jobs,
    }
    if order == basis.order and hasattr(basis, "decompose"):
        result["spot_check"] = _spot_check(basis, N, seed)
    return envelope(basis.kind, "verify", result)


def _spot_check(basis: BasisHandle, N: int, seed: int) -> dict:
    """Re-verify random targets through the constructive decomposition."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(SPOT_CHECK_SAMPLES):
        n = rng.randint(0, N)
        dec = basis.decompose(n)
        ok = sum(dec.elements) == n and all(basis.member(e) for e in dec.elements)
        failures += 0 if ok else 1
    return {"samples": SPOT_CHECK_SAMPLES, "seed": seed, "failures": failures}


def _profile_part(basis: BasisHandle, xs: list[int]) -> dict:
    prof = thinness_profile(basis, xs)
    return {
        "construction": basis.kind,
        "params": basis.describe(),
        "rows": [
            {
                "x": row.x,
                "A": row.A,
                "ratio_num": row.ratio_num,
                "ratio_den": row.ratio_den,
                "ratio_decimal": row.ratio_decimal,
            }
            for row in prof.rows
        ],
        "max_ratio_decimal": _max_ratio([(row.x, row.A) for row in prof.rows], basis.order),
    }


def handle_profile(x: int, **params) -> dict:
    basis = resolve_basis(**params)
    xs = doubling_schedule(x)
    result = {"x_max": x, "schedule": xs} | _profile_part(basis, xs)
    return envelope(basis.kind, "profile", result)


def handle_compare(x: int, **params) -> dict:
    """Profile the available constructions side by side on one schedule."""
    xs = doubling_schedule(x)
    parts = [_profile_part(resolve_basis(h=params.get("h"), r=params.get("r"),
                                         P=params.get("P"), k1=params.get("k1")), xs)]
    parts.append(_profile_part(resolve_basis(h=params.get("h"), g=params.get("g") or 2), xs))
    if params.get("aprime") is not None:
        parts.append(_profile_part(resolve_basis(aprime=params["aprime"]), xs))
    return envelope("multi", "compare", {"x_max": x, "schedule": xs, "parts": parts})
