"""Ground truth: full subgroup lattices of small permutation groups.

Subgroups are stored as membership bitmasks (bit i = element i), so
containment is mask inclusion and intersection is bitwise and.  The lattice
Moebius function is assigned straight from its defining relation, and
generating-tuple counts are literal: every candidate tuple is closed and
compared against the full group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..inversion import TUPLE_SHAPE, Target
from ._backend import get_backend
from .group import FiniteGroup, OracleBoundError

DEFAULT_BOUND = 600


def _mask_from_bools(member: np.ndarray) -> int:
    packed = np.packbits(member.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def _indices_from_mask(mask: int, n: int) -> list[int]:
    return [i for i in range(n) if (mask >> i) & 1]


@dataclass
class SubgroupLattice:
    group: FiniteGroup
    masks: list[int]
    sizes: list[int]
    mu: list[int] | None = None
    _order_masks: dict[int, int] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.masks)

    @property
    def full_index(self) -> int:
        return len(self.masks) - 1  # nodes are sorted by size; G is last

    def leq(self, i: int, j: int) -> bool:
        """Containment: node i is a subgroup of node j."""
        return self.masks[i] & ~self.masks[j] == 0

    def members(self, i: int) -> list[int]:
        return _indices_from_mask(self.masks[i], len(self.group))

    def order_mask(self, k: int) -> int:
        """Bitmask of all group elements of order exactly k."""
        if k not in self._order_masks:
            self._order_masks[k] = _mask_from_bools(self.group.orders == k)
        return self._order_masks[k]

    def sigma_node(self, i: int, target: Target) -> int:
        """Tuples in node i satisfying the target's order relations."""
        result = 1
        for constraint in TUPLE_SHAPE[target]:
            if constraint is None:
                result *= self.sizes[i]
            else:
                result *= (self.masks[i] & self.order_mask(constraint)).bit_count()
        return result

    def maximal_indices(self) -> list[int]:
        """Proper subgroups not contained in any other proper subgroup."""
        out = []
        for i in range(len(self.masks) - 1):
            if not any(self.leq(i, j) for j in range(len(self.masks) - 1) if j != i):
                out.append(i)
        return out


def enumerate_subgroups(g: FiniteGroup, bound: int = DEFAULT_BOUND) -> SubgroupLattice:
    """Every subgroup of g, by closing cyclic seeds under join-with-element.

    Joins only need one representative generator per cyclic subgroup outside
    the current node, since <H, x> = <H, <x>>.
    """
    if len(g) > bound:
        raise OracleBoundError(f"|G| = {len(g)} exceeds bound {bound}")
    backend = get_backend()
    n = len(g)
    cayley = g.cayley

    singles = backend.closure_masks_batch(cayley, np.arange(n, dtype=np.int32).reshape(-1, 1))
    cyclic_rep: dict[int, int] = {}
    for i in range(n):
        mask = _mask_from_bools(singles[i])
        cyclic_rep.setdefault(mask, i)

    gens: dict[int, tuple[int, ...]] = {}
    for mask, rep in cyclic_rep.items():
        gens[mask] = (rep,) if rep != 0 else ()
    full_mask = (1 << n) - 1

    queue = sorted(gens)
    known = set(gens)
    while queue:
        next_queue = []
        for mask in queue:
            if mask == full_mask:
                continue
            seed = gens[mask]
            outside = [rep for cmask, rep in cyclic_rep.items() if cmask & ~mask]
            if not outside:
                continue
            rows = np.array([list(seed) + [rep] for rep in sorted(outside)], np.int32)
            if rows.shape[1] == 0:
                continue
            joined = backend.closure_masks_batch(cayley, rows)
            for row_idx in range(rows.shape[0]):
                jmask = _mask_from_bools(joined[row_idx])
                if jmask not in known:
                    known.add(jmask)
                    gens[jmask] = tuple(rows[row_idx])
                    next_queue.append(jmask)
        queue = sorted(next_queue)

    masks = sorted(known, key=lambda m: (m.bit_count(), m))
    sizes = [m.bit_count() for m in masks]
    return SubgroupLattice(group=g, masks=masks, sizes=sizes)


def lattice_mobius(lat: SubgroupLattice) -> SubgroupLattice:
    """Assign mu from the defining relation: sum over K >= H of mu(K) = [H == G]."""
    count = len(lat.masks)
    mu = [0] * count
    mu[lat.full_index] = 1
    # nodes are sorted by size ascending, so walk downwards from G
    for i in range(count - 2, -1, -1):
        acc = 0
        for j in range(i + 1, count):
            if lat.sizes[j] > lat.sizes[i] and lat.leq(i, j):
                acc += mu[j]
        mu[i] = -acc
    lat.mu = mu
    return lat


def _candidates(g: FiniteGroup, target: Target) -> list[np.ndarray]:
    out = []
    for constraint in TUPLE_SHAPE[target]:
        out.append(g.all_indices() if constraint is None else g.elements_of_order(constraint))
    return out


def brute_force_phi(g: FiniteGroup, target: Target, bound: int = DEFAULT_BOUND) -> int:
    """Literal count of generating tuples satisfying the target's relations."""
    if len(g) > bound:
        raise OracleBoundError(f"|G| = {len(g)} exceeds bound {bound}")
    cands = _candidates(g, target)
    backend = get_backend()
    if len(cands) == 2:
        return int(backend.count_generating_pairs(g.cayley, cands[0], cands[1], len(g)))
    if len(cands) == 3:
        return int(backend.count_generating_triples(g.cayley, cands[0], cands[1], cands[2], len(g)))
    raise ValueError(f"unsupported tuple arity {len(cands)}")


def verify_hall_inversion(g: FiniteGroup, target: Target, lat: SubgroupLattice | None = None, bound: int = DEFAULT_BOUND) -> bool:
    """Does sum over all subgroups of mu(H) sigma(H) equal the literal count?"""
    if lat is None:
        lat = lattice_mobius(enumerate_subgroups(g, bound=bound))
    elif lat.mu is None:
        lat = lattice_mobius(lat)
    inverted = sum(lat.mu[i] * lat.sigma_node(i, target) for i in range(len(lat)))
    return inverted == brute_force_phi(g, target, bound=bound)


def intersections_of_maximals(lat: SubgroupLattice) -> set[int]:
    """All masks obtainable as intersections of nonempty sets of maximal subgroups."""
    maximal = [lat.masks[i] for i in lat.maximal_indices()]
    closed = set(maximal)
    frontier = set(maximal)
    while frontier:
        new = set()
        for a in frontier:
            for b in maximal:
                c = a & b
                if c not in closed:
                    new.add(c)
        closed |= new
        frontier = new
    return closed


def verify_maximal_intersection(lat: SubgroupLattice) -> bool:
    """Nonzero mu only at G or at intersections of maximal subgroups."""
    if lat.mu is None:
        lattice_mobius(lat)
    allowed = intersections_of_maximals(lat)
    full = lat.masks[lat.full_index]
    for i, mask in enumerate(lat.masks):
        if lat.mu[i] != 0 and mask != full and mask not in allowed:
            return False
    return True


def conjugate_mask(g: FiniteGroup, mask: int, by: int) -> int:
    """Image of a subgroup mask under conjugation by the element with index `by`."""
    inv = int(g.inverse[by])
    out = 0
    for i in _indices_from_mask(mask, len(g)):
        out |= 1 << int(g.cayley[g.cayley[inv, i], by])
    return out
