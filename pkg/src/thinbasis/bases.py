"""Uniform set-level view of a basis: membership, enumeration, counting.

Verification and profiling code only needs those three operations plus a
kind tag and the order h, so each construction gets a thin handle, and
arbitrary finite sets get one too for use as brute-force fixtures.  The
counting function A(x) counts elements in [1, x]; 0 is a member of
every basis here but never counted.
"""

from __future__ import annotations

from abc import ABC, abstractmethod

from . import frobenius as _frob
from . import gadic as _gadic
from . import shatrovskii as _shat
from .decompose import Decomposition, basis_decompose
from .errors import InvalidParamsError
from .frobenius import FrobeniusParams
from .gadic import GAdicParams
from .shatrovskii import ShatParams


class BasisHandle(ABC):
    """Membership, sorted enumeration, and counting for one basis."""

    kind: str
    order: int

    @abstractmethod
    def member(self, x: int) -> bool: ...

    @abstractmethod
    def enumerate_up_to(self, x: int) -> list[int]: ...

    @abstractmethod
    def count(self, x: int) -> int: ...

    @abstractmethod
    def describe(self) -> dict: ...


class ShatrovskiiBasis(BasisHandle):
    kind = "shatrovskii"

    def __init__(self, params: ShatParams):
        self.params = params
        self.order = params.h

    def member(self, x: int) -> bool:
        return _shat.member(self.params, x)

    def enumerate_up_to(self, x: int) -> list[int]:
        return _shat.enumerate_up_to(self.params, x)

    def count(self, x: int) -> int:
        return _shat.count(self.params, x)

    def decompose(self, n: int) -> Decomposition:
        return basis_decompose(self.params, n)

    def describe(self) -> dict:
        p = self.params
        return {"kind": self.kind, "h": p.h, "r": list(p.r), "P": p.P, "k1": p.k1}


class GAdicBasis(BasisHandle):
    kind = "gadic"

    def __init__(self, params: GAdicParams):
        self.params = params
        self.order = params.h

    def member(self, x: int) -> bool:
        p = self.params
        return x >= 0 and any(_gadic.gadic_member(p, i, x) for i in range(1, p.h + 1))

    def enumerate_up_to(self, x: int) -> list[int]:
        return _gadic.rs_enumerate_up_to(self.params, x)

    def count(self, x: int) -> int:
        return _gadic.rs_count(self.params, x)

    def decompose(self, n: int) -> Decomposition:
        from .decompose import Term

        parts = _gadic.rs_decompose(self.params, n)
        return Decomposition(n=n, terms=tuple(Term(p) for p in parts))

    def describe(self) -> dict:
        p = self.params
        return {
            "kind": self.kind,
            "g": p.g,
            "h": p.h,
            "class_of": {str(res): comp for res, comp in sorted(p.class_of.items())},
        }


class FrobeniusBasis(BasisHandle):
    kind = "frobenius"

    def __init__(self, params: FrobeniusParams):
        self.params = params
        self.order = params.h

    def member(self, x: int) -> bool:
        return _frob.frobenius_member(self.params, x)

    def enumerate_up_to(self, x: int) -> list[int]:
        return _frob.frobenius_enumerate_up_to(self.params, x)

    def count(self, x: int) -> int:
        return _frob.frobenius_count(self.params, x)

    def decompose(self, n: int) -> Decomposition:
        return _frob.frobenius_decompose(self.params, n)

    def describe(self) -> dict:
        p = self.params
        return {"kind": self.kind, "aprime": list(p.aprime), "h": p.h, "C": p.C}


class ExplicitBasis(BasisHandle):
    """A finite set given outright; the fixture kind for verifier tests."""

    kind = "explicit-finite"

    def __init__(self, elements, order: int = 1):
        elems = sorted(set(elements))
        if elems and elems[0] < 0:
            raise InvalidParamsError("elements must be nonnegative")
        self.elements = elems
        self._set = set(elems)
        self.order = order

    def member(self, x: int) -> bool:
        return x in self._set

    def enumerate_up_to(self, x: int) -> list[int]:
        return [e for e in self.elements if e <= x]

    def count(self, x: int) -> int:
        return sum(1 for e in self.elements if 1 <= e <= x)

    def describe(self) -> dict:
        return {"kind": self.kind, "size": len(self.elements)}
