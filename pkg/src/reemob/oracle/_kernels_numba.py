"""Numba-compiled hot loops for subgroup closure and generating-tuple counts.

All kernels operate on an int32 Cayley table where index 0 is the identity.
Subgroup closure is the orbit of the identity under right multiplication by
the seed elements; every element is visited once, so a closure costs
O(|H| * #seeds) table lookups.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def closure_masks_batch(cayley, seeds):
    """Closure membership masks for each row of seeds (shape (B, k))."""
    n = cayley.shape[0]
    b = seeds.shape[0]
    out = np.zeros((b, n), np.bool_)
    stack = np.empty(n, np.int32)
    for row in range(b):
        member = out[row]
        member[0] = True
        stack[0] = 0
        top = 1
        while top > 0:
            top -= 1
            x = stack[top]
            for j in range(seeds.shape[1]):
                y = cayley[x, seeds[row, j]]
                if not member[y]:
                    member[y] = True
                    stack[top] = y
                    top += 1
    return out


@njit(cache=True)
def _closure_size(cayley, member, stack, a, b, c):
    """Size of <a, b[, c]> (c < 0 means absent); member is scratch."""
    n = cayley.shape[0]
    for i in range(n):
        member[i] = False
    member[0] = True
    stack[0] = 0
    top = 1
    size = 1
    while top > 0:
        top -= 1
        x = stack[top]
        y = cayley[x, a]
        if not member[y]:
            member[y] = True
            stack[top] = y
            top += 1
            size += 1
        y = cayley[x, b]
        if not member[y]:
            member[y] = True
            stack[top] = y
            top += 1
            size += 1
        if c >= 0:
            y = cayley[x, c]
            if not member[y]:
                member[y] = True
                stack[top] = y
                top += 1
                size += 1
    return size


@njit(cache=True)
def count_generating_pairs(cayley, xs, ys, full_size):
    n = cayley.shape[0]
    member = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int32)
    count = 0
    for i in range(xs.shape[0]):
        for j in range(ys.shape[0]):
            if _closure_size(cayley, member, stack, xs[i], ys[j], -1) == full_size:
                count += 1
    return count


@njit(cache=True)
def count_generating_triples(cayley, xs, ys, zs, full_size):
    n = cayley.shape[0]
    member = np.zeros(n, np.bool_)
    stack = np.empty(n, np.int32)
    count = 0
    for i in range(xs.shape[0]):
        for j in range(ys.shape[0]):
            for k in range(zs.shape[0]):
                if _closure_size(cayley, member, stack, xs[i], ys[j], zs[k]) == full_size:
                    count += 1
    return count


NAME = "numba"
