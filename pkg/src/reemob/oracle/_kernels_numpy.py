"""Pure-numpy fallback kernels, API-identical to the numba versions.

Closures for a whole batch of seed tuples are advanced level by level: the
frontier of every batch row is multiplied by that row's seeds in one fancy-
indexing pass, so the python-level loop runs once per BFS level rather than
once per element.
"""

import numpy as np

_CHUNK = 4096


def closure_masks_batch(cayley, seeds):
    """Closure membership masks for each row of seeds (shape (B, k))."""
    b = seeds.shape[0]
    n = cayley.shape[0]
    member = np.zeros((b, n), bool)
    member[:, 0] = True
    frontier = np.zeros((b, n), bool)
    frontier[:, 0] = True
    while True:
        rows, cols = np.nonzero(frontier)
        if rows.size == 0:
            break
        new = np.zeros((b, n), bool)
        for j in range(seeds.shape[1]):
            new[rows, cayley[cols, seeds[rows, j]]] = True
        new &= ~member
        member |= new
        frontier = new
    return member


def _closure_sizes_chunk(cayley, seeds):
    return closure_masks_batch(cayley, seeds).sum(axis=1)


def count_generating_pairs(cayley, xs, ys, full_size):
    count = 0
    pair_x, pair_y = np.meshgrid(xs, ys, indexing="ij")
    flat = np.stack([pair_x.ravel(), pair_y.ravel()], axis=1).astype(np.int32)
    for start in range(0, flat.shape[0], _CHUNK):
        sizes = _closure_sizes_chunk(cayley, flat[start : start + _CHUNK])
        count += int((sizes == full_size).sum())
    return count


def count_generating_triples(cayley, xs, ys, zs, full_size):
    count = 0
    gx, gy, gz = np.meshgrid(xs, ys, zs, indexing="ij")
    flat = np.stack([gx.ravel(), gy.ravel(), gz.ravel()], axis=1).astype(np.int32)
    for start in range(0, flat.shape[0], _CHUNK):
        sizes = _closure_sizes_chunk(cayley, flat[start : start + _CHUNK])
        count += int((sizes == full_size).sum())
    return count


NAME = "numpy"
