"""Abstract engine for concrete finite groups.

A group is handed around as a GroupRealization: an identity element plus
multiply/inverse callables over opaque elements.  Elements only need to be
hashable and totally ordered within one realization (permutations are image
tuples, tuple groups are coefficient tuples, table groups are integers,
direct products are pairs).  For every realization used here the identity is
the least element under that order, which downstream code relies on when it
sorts class representatives.

Enumeration does a breadth-first closure of the generators and is cached on
the realization behind a lock, so repeated conjugacy/character computations
share one element list.
"""

from __future__ import annotations

import itertools
import math
import threading
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import CapExceeded, SelfCheckFailed

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "GroupRealization",
    "GroupData",
    "enumerate_elements",
    "element_order",
    "exponent",
    "derived_subgroup_order",
    "direct_product",
    "group_data",
]

DEFAULT_ELEMENT_CAP = 50_000


class GroupRealization:
    """A finite group presented by identity / multiply / inverse callables."""

    def __init__(
        self,
        identity,
        multiply: Callable,
        inverse: Callable,
        generators: Iterable,
        descriptor: str,
        expected_order: int | None = None,
    ):
        self.identity = identity
        self.multiply = multiply
        self.inverse = inverse
        self.generators = list(generators)
        if not self.generators:
            self.generators = [identity]
        self.descriptor = descriptor
        self.expected_order = expected_order
        self._elements: tuple | None = None
        self._index: dict | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        return f"GroupRealization({self.descriptor!r})"


def _closure(identity, multiply, generators, cap: int, what: str) -> set:
    """Breadth-first closure of the generators under multiplication."""
    els = {identity}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for g in generators:
                y = multiply(x, g)
                if y not in els:
                    els.add(y)
                    new.append(y)
                    if len(els) > cap:
                        raise CapExceeded(
                            f"{what}: closure exceeded cap of {cap} elements"
                        )
        frontier = new
    return els


def enumerate_elements(group: GroupRealization, cap: int = DEFAULT_ELEMENT_CAP):
    """All elements of the group, sorted; cached after the first call."""
    with group._lock:
        if group._elements is None:
            els = _closure(
                group.identity,
                group.multiply,
                group.generators,
                cap,
                group.descriptor,
            )
            if group.expected_order is not None and len(els) != group.expected_order:
                raise SelfCheckFailed(
                    f"{group.descriptor}: realized {len(els)} elements, "
                    f"expected {group.expected_order}"
                )
            group._elements = tuple(sorted(els))
            group._index = {x: i for i, x in enumerate(group._elements)}
        if len(group._elements) > cap:
            raise CapExceeded(
                f"{group.descriptor}: order {len(group._elements)} exceeds cap {cap}"
            )
        return group._elements


def element_index(group: GroupRealization) -> dict:
    """element -> position in the sorted element list."""
    enumerate_elements(group)
    return group._index


def element_order(group: GroupRealization, x) -> int:
    k = 1
    y = x
    while y != group.identity:
        y = group.multiply(y, x)
        k += 1
    return k


def exponent(group: GroupRealization, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    """lcm of the element orders."""
    out = 1
    for x in enumerate_elements(group, cap):
        out = math.lcm(out, element_order(group, x))
    return out


def derived_subgroup_order(group: GroupRealization, cap: int = DEFAULT_ELEMENT_CAP) -> int:
    """Order of the commutator subgroup.

    Generator-pair commutators are closed into a subgroup, then repeatedly
    conjugated by the group generators and re-closed until stable; the result
    is the normal closure of the commutators, which is the derived subgroup.
    """
    mul = group.multiply
    inv = group.inverse
    gens = group.generators
    comms = {
        mul(mul(inv(g), inv(h)), mul(g, h))
        for g, h in itertools.product(gens, repeat=2)
    }
    comms.discard(group.identity)
    if not comms:
        return 1
    sub = _closure(group.identity, mul, sorted(comms), cap, group.descriptor)
    while True:
        new = set()
        for g in gens:
            gi = inv(g)
            for x in sub:
                y = mul(gi, mul(x, g))
                if y not in sub:
                    new.add(y)
        if not new:
            return len(sub)
        sub = _closure(
            group.identity, mul, sorted(sub | new), cap, group.descriptor
        )


def direct_product(g: GroupRealization, h: GroupRealization) -> GroupRealization:
    """External direct product; elements are (a, b) pairs."""
    gmul, hmul = g.multiply, h.multiply
    ginv, hinv = g.inverse, h.inverse

    def mul(x, y):
        return (gmul(x[0], y[0]), hmul(x[1], y[1]))

    def inv(x):
        return (ginv(x[0]), hinv(x[1]))

    gens = [(a, h.identity) for a in g.generators]
    gens += [(g.identity, b) for b in h.generators]
    expected = None
    if g.expected_order is not None and h.expected_order is not None:
        expected = g.expected_order * h.expected_order
    return GroupRealization(
        identity=(g.identity, h.identity),
        multiply=mul,
        inverse=inv,
        generators=gens,
        descriptor=f"prod({g.descriptor},{h.descriptor})",
        expected_order=expected,
    )


@dataclass(frozen=True)
class GroupData:
    """Headline facts computed from a realization."""

    descriptor: str
    order: int
    exponent: int
    derived_order: int
    abelianization_order: int


def group_data(group: GroupRealization, cap: int = DEFAULT_ELEMENT_CAP) -> GroupData:
    order = len(enumerate_elements(group, cap))
    derived = derived_subgroup_order(group, cap)
    return GroupData(
        descriptor=group.descriptor,
        order=order,
        exponent=exponent(group, cap),
        derived_order=derived,
        abelianization_order=order // derived,
    )
