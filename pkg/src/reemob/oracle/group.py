"""Small finite permutation groups with dense Cayley tables.

A FiniteGroup carries the complete element list (identity first) and the
int32 multiplication table the closure kernels consume.  Intended scale is
a few hundred elements; the enumeration bound guards anything bigger.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import perm
from .perm import Perm


class OracleBoundError(ValueError):
    """The group exceeds the configured brute-force bound."""


@dataclass
class FiniteGroup:
    degree: int
    elements: list[Perm]
    generators: list[int]
    cayley: np.ndarray = field(repr=False)
    inverse: np.ndarray = field(repr=False)
    orders: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, p: Perm) -> int:
        return self.elements.index(p)

    def elements_of_order(self, k: int) -> np.ndarray:
        """Indices of elements of order exactly k."""
        return np.nonzero(self.orders == k)[0].astype(np.int32)

    def all_indices(self) -> np.ndarray:
        return np.arange(len(self.elements), dtype=np.int32)


def closure(generators: list[Perm], bound: int | None = None) -> FiniteGroup:
    """The group generated by the permutations, by breadth-first products."""
    if not generators:
        raise ValueError("need at least one generator")
    degree = len(generators[0])
    for g in generators:
        if len(g) != degree:
            raise ValueError(f"degree mismatch: {len(g)} vs {degree}")
        if not perm.is_permutation(g):
            raise ValueError(f"not a permutation: {g}")

    ident = perm.identity(degree)
    elements: list[Perm] = [ident]
    seen = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = perm.compose(x, g)
                if y not in seen:
                    if bound is not None and len(elements) >= bound:
                        raise OracleBoundError(f"group exceeds bound {bound}")
                    seen[y] = len(elements)
                    elements.append(y)
                    nxt.append(y)
        frontier = nxt

    n = len(elements)
    cayley = np.empty((n, n), np.int32)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            cayley[i, j] = seen[perm.compose(a, b)]
    inverse = np.empty(n, np.int32)
    for i, a in enumerate(elements):
        inverse[i] = seen[perm.inverse(a)]
    orders = np.array([perm.order_of(a) for a in elements], np.int32)
    gen_idx = sorted({seen[g] for g in generators})
    return FiniteGroup(degree=degree, elements=elements, generators=gen_idx, cayley=cayley, inverse=inverse, orders=orders)


def from_group_file(text: str, bound: int | None = None) -> FiniteGroup:
    return closure(perm.parse_group_file(text), bound=bound)
