"""Base-g digit constructions, including the Raikov-Stohr thin basis.

Split the digit positions 0, 1, 2, ... by residue mod h into h classes
and let component i hold every number whose nonzero base-g digits sit
only at positions of class i.  Routing each digit of n to its
component's part shows the components form an additive system of order
h; the union of the components (the Raikov-Stohr set, for g = 2 and the
canonical classes) is then a thin basis of order h.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParamsError


def _default_classes(h: int) -> dict[int, int]:
    # canonical assignment: position residue i-1 belongs to component i
    return {res: res + 1 for res in range(h)}


@dataclass(frozen=True)
class GAdicParams:
    """Base g >= 2, order h >= 1, and a residue-to-component assignment.

    class_of maps each position residue 0..h-1 to a component index in
    [1, h]; the default puts residue i-1 in component i.  Because the
    map is total, every digit position belongs to exactly one component.
    """

    g: int
    h: int
    class_of: dict[int, int] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.g < 2:
            raise InvalidParamsError("base g must be at least 2")
        if self.h < 1:
            raise InvalidParamsError("order h must be at least 1")
        if self.class_of is None:
            object.__setattr__(self, "class_of", _default_classes(self.h))
        if sorted(self.class_of.keys()) != list(range(self.h)):
            raise InvalidParamsError("class_of must assign every residue 0..h-1")
        if any(not 1 <= i <= self.h for i in self.class_of.values()):
            raise InvalidParamsError(f"component indices must lie in [1, {self.h}]")


def _digit_positions(g: int, x: int):
    """Yield (position, digit) for the nonzero base-g digits of x."""
    pos = 0
    while x:
        x, d = divmod(x, g)
        if d:
            yield pos, d
        pos += 1


def gadic_member(params: GAdicParams, i: int, x: int) -> bool:
    """True iff every nonzero base-g digit of x sits in component i's positions."""
    if not 1 <= i <= params.h:
        raise InvalidParamsError(f"component index i must lie in [1, {params.h}], got {i}")
    if x < 0:
        return False
    return all(params.class_of[pos % params.h] == i for pos, _ in _digit_positions(params.g, x))


def rs_decompose(params: GAdicParams, n: int) -> tuple[int, ...]:
    """Split n into h parts, one per component, by routing digits.

    Each base-g digit of n goes to the component owning its position, so
    the parts sum to n and part i passes gadic_member(i, .) by
    construction.
    """
    if n < 0:
        raise InvalidParamsError("n must be nonnegative")
    parts = [0] * params.h
    for pos, d in _digit_positions(params.g, n):
        parts[params.class_of[pos % params.h] - 1] += d * params.g ** pos
    return tuple(parts)


def _component_elements(params: GAdicParams, i: int, x: int) -> list[int]:
    """All elements of component i in [0, x], unsorted.

    Walks digit choices over the allowed positions up to the highest
    power of g not exceeding x; branches that already exceed x are cut.
    """
    positions = []
    power = 1
    pos = 0
    while power <= x:
        if params.class_of[pos % params.h] == i:
            positions.append(power)
        power *= params.g
        pos += 1
    elements = [0]
    for power in positions:
        grown = []
        for base in elements:
            for d in range(1, params.g):
                val = base + d * power
                if val <= x:
                    grown.append(val)
        elements.extend(grown)
    return elements


def rs_enumerate_up_to(params: GAdicParams, x: int) -> list[int]:
    """Sorted, deduplicated union of all components restricted to [0, x]."""
    if x < 0:
        return []
    union: set[int] = set()
    for i in range(1, params.h + 1):
        union.update(_component_elements(params, i, x))
    return sorted(union)


def rs_count(params: GAdicParams, x: int) -> int:
    """Counting function of the union basis: elements in [1, x]."""
    if x < 1:
        return 0
    # components pairwise intersect in {0} only (their position sets are
    # disjoint), so counts add up once 0 is dropped from each
    return sum(len(_component_elements(params, i, x)) - 1 for i in range(1, params.h + 1))
