"""Permutations as image tuples, plus the cycle-notation group file format.

Group files are plain text, one permutation per line in cycle notation with
1-based points, e.g. "(1 2 3)(4 5)".  Lines starting with "#" and blank
lines are ignored; the degree is the largest point mentioned anywhere.
"""

from __future__ import annotations

import math
import re

Perm = tuple[int, ...]


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[x] for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def order_of(p: Perm) -> int:
    """Element order, as the lcm of the cycle lengths."""
    seen = [False] * len(p)
    result = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        result = math.lcm(result, length)
    return result


def cycle_string(p: Perm) -> str:
    """Cycle notation with 1-based points; identity renders as '()'."""
    seen = [False] * len(p)
    parts = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        x = p[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = p[x]
        parts.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(parts) if parts else "()"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _parse_cycles(line: str) -> list[list[int]]:
    stripped = re.sub(r"\s+", " ", line).strip()
    if stripped == "()":
        return []
    leftovers = _CYCLE_RE.sub("", stripped).strip()
    if leftovers:
        raise ValueError(f"could not parse permutation line {line!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        body = body.strip()
        if not body:
            continue
        points = [int(tok) for tok in re.split(r"[,\s]+", body)]
        if any(pt < 1 for pt in points):
            raise ValueError(f"points are 1-based; got {points} in {line!r}")
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle {body!r}")
        cycles.append(points)
    return cycles


def parse_group_file(text: str) -> list[Perm]:
    """Parse a group file into permutations on a common degree."""
    raw: list[list[list[int]]] = []
    degree = 0
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        cycles = _parse_cycles(line)
        raw.append(cycles)
        for cyc in cycles:
            degree = max(degree, max(cyc))
    if not raw:
        raise ValueError("group file contains no permutations")
    degree = max(degree, 1)
    perms = []
    for cycles in raw:
        images = list(range(degree))
        for cyc in cycles:
            for i, pt in enumerate(cyc):
                images[pt - 1] = cyc[(i + 1) % len(cyc)] - 1
        perms.append(tuple(images))
    return perms
