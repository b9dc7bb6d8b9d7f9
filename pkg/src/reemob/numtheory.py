"""Exact number theory underlying the Ree-group catalog.

Everything here is plain integer arithmetic: the classical Moebius
function, divisor lists, the three Hall-subgroup orders

    a1(m) = 3^m + 1,
    a2(m) = 3^m - 3^((m+1)/2) + 1,
    a3(m) = 3^m + 3^((m+1)/2) + 1      (m odd, a1*a2*a3 = 3^(3m) + 1)

and the divisibility routing that decides, for l | n, which of
a1(n), a2(n), a3(n) each a_i(l) divides.  The routing rule is a pure
congruence classification of n/l; `verify_unique_divisibility` is the
independent big-integer witness for it and never takes the congruence
shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def moebius(n: int) -> int:
    """Classical Moebius function: 1, (-1)^d for d distinct primes, 0 on squares."""
    if n < 1:
        raise ValueError(f"moebius requires n >= 1, got {n}")
    if n == 1:
        return 1
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    """All divisors of n in increasing order."""
    if n < 1:
        raise ValueError(f"divisors requires n >= 1, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class HallOrders:
    """The three odd Hall-subgroup orders attached to an odd exponent m."""

    m: int
    a1: int
    a2: int
    a3: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a1, self.a2, self.a3)


def hall_orders(m: int) -> HallOrders:
    """Hall orders (a1, a2, a3) at odd m; satisfies a1*a2*a3 = 3^(3m)+1."""
    if m < 1 or m % 2 == 0:
        raise ValueError(f"hall_orders requires odd m >= 1, got {m}")
    q = 3**m
    s = 3 ** ((m + 1) // 2)
    orders = HallOrders(m=m, a1=q + 1, a2=q - s + 1, a3=q + s + 1)
    assert orders.a1 * orders.a2 * orders.a3 == 3 ** (3 * m) + 1
    return orders


@dataclass(frozen=True)
class HallRouting:
    """Divisibility targets: a_i(l) divides a_{target[i]}(n), for l | n odd.

    targets is indexed by i-1 for i in {1,2,3}.  target 1 is forced for a1;
    for a2, a3 the classification of r = n/l (always odd) is:

        3 | r            -> both divide a1(n)
        r = +-1 mod 12   -> a2 -> a2,  a3 -> a3
        r = +-5 mod 12   -> a2 -> a3,  a3 -> a2
    """

    l: int
    n: int
    targets: tuple[int, int, int]

    @property
    def target_of_a1(self) -> int:
        return self.targets[0]

    @property
    def target_of_a2(self) -> int:
        return self.targets[1]

    @property
    def target_of_a3(self) -> int:
        return self.targets[2]


def _check_divisor_pair(l: int, n: int) -> None:
    if l < 1 or n < 1:
        raise ValueError(f"need positive l, n; got l={l}, n={n}")
    if l % 2 == 0 or n % 2 == 0:
        raise ValueError(f"need odd l, n; got l={l}, n={n}")
    if n % l != 0:
        raise ValueError(f"{l} does not divide {n}")


def route_hall_divisibility(l: int, n: int) -> HallRouting:
    """Routing record for the pair l | n, by the congruence rule on n/l."""
    _check_divisor_pair(l, n)
    r = n // l
    if r % 3 == 0:
        targets = (1, 1, 1)
    elif r % 12 in (1, 11):
        targets = (1, 2, 3)
    else:  # r odd and coprime to 3, so r mod 12 is 5 or 7
        targets = (1, 3, 2)
    return HallRouting(l=l, n=n, targets=targets)


def verify_unique_divisibility(l: int, n: int) -> bool:
    """Big-integer witness for the routing rule.

    True iff for each i with a_i(l) > 1, exactly one of a1(n), a2(n), a3(n)
    is divisible by a_i(l), and that one is the routed target.  Checked by
    literal divmod only.
    """
    _check_divisor_pair(l, n)
    small = hall_orders(l).as_tuple()
    big = hall_orders(n).as_tuple()
    routing = route_hall_divisibility(l, n)
    for i in (1, 2, 3):
        d = small[i - 1]
        if d == 1:
            continue  # divides everything; uniqueness is vacuous
        hits = [j for j in (1, 2, 3) if big[j - 1] % d == 0]
        if hits != [routing.targets[i - 1]]:
            return False
    return True


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)
