"""Brute-force subgroup-lattice oracle for small permutation groups."""

from ._backend import backend_name, get_backend
from .group import FiniteGroup, OracleBoundError, closure, from_group_file
from .lattice import (
    DEFAULT_BOUND,
    SubgroupLattice,
    brute_force_phi,
    conjugate_mask,
    enumerate_subgroups,
    intersections_of_maximals,
    lattice_mobius,
    verify_hall_inversion,
    verify_maximal_intersection,
)
from .perm import cycle_string, parse_group_file

__all__ = [
    "DEFAULT_BOUND",
    "FiniteGroup",
    "OracleBoundError",
    "SubgroupLattice",
    "backend_name",
    "brute_force_phi",
    "closure",
    "conjugate_mask",
    "cycle_string",
    "enumerate_subgroups",
    "from_group_file",
    "get_backend",
    "intersections_of_maximals",
    "lattice_mobius",
    "parse_group_file",
    "verify_hall_inversion",
    "verify_maximal_intersection",
]
