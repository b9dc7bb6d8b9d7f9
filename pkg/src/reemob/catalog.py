"""Subgroup-class catalog of the simple small Ree groups R(3^n), n odd >= 3.

A conjugacy class of subgroups is identified by a tag and a field
parameter h | n.  The catalog knows, for every class: the subgroup order,
the Moebius value mu_G, the class size [G : N_G(H)], element counts by
exact element order (2, 3, 6, 9), and the table of overgroup classes with
multiplicities nu_K(H) = number of conjugates of K containing a fixed H.

Ten families carry nonzero mu_G and drive all inversion sums:

    tag        subgroup                              mu_G
    R(h)       subfield subgroup R(3^h)              mu(n/h)
    N3(h)      Hall normaliser a3(h):6              -mu(n/h)
    N2(h)      Hall normaliser a2(h):6, h>1         -mu(n/h)
    P(h)       parabolic (3^h)^(1+1+1):(3^h-1)      -mu(n/h)
    Ct(h)      involution centraliser 2xL2(3^h)     -mu(n/h), h>1
    CtOmega(h) point stabiliser in Ct, h>1           mu(n/h)
    NV(h)      four-group normaliser, h>1           -mu(n/h)
    CV(h)      four-group centraliser, h>1          3*mu(n/h)
    Ct1        2 x L2(3)                            -2*mu(n)
    E          Sylow 2-subgroup 2^3                 21*mu(n)

The remaining classes (dihedral DH2/DH3, elementary abelian F, cyclic C0,
V, C6star, C3star, C2, I) have mu_G = 0 but are kept first-class so their
overgroup tables can be checked against the defining relation
sum_{K >= H} mu_G(K) = [H == G].
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .numtheory import divisors, hall_orders, moebius, route_hall_divisibility


class ClassTag(Enum):
    R = "R"
    P = "P"
    CT = "Ct"
    NV = "NV"
    N2 = "N2"
    N3 = "N3"
    CV = "CV"
    DH2 = "DH2"
    DH3 = "DH3"
    CT_OMEGA = "CtOmega"
    F = "F"
    C0 = "C0"
    CT1 = "Ct1"
    E = "E"
    V = "V"
    C6_STAR = "C6star"
    C3_STAR = "C3star"
    C2 = "C2"
    I = "I"


# Classes with no field parameter of their own; h is pinned to n.
PARAMETERLESS = frozenset(
    {ClassTag.CT1, ClassTag.E, ClassTag.V, ClassTag.C6_STAR, ClassTag.C3_STAR, ClassTag.C2, ClassTag.I}
)

# Parametrised classes that only exist for h > 1 (their h = 1 member is
# listed elsewhere: NV(1)=Ct1, CV(1)=E, CtOmega(1)=C6star, F(1)=C3star,
# C0(1)=C2, N2(1) degenerates, DH2(1) degenerates to C2).
_REQUIRES_H_GT_1 = frozenset(
    {ClassTag.N2, ClassTag.CT, ClassTag.NV, ClassTag.CV, ClassTag.CT_OMEGA, ClassTag.F, ClassTag.C0, ClassTag.DH2}
)

_NONZERO_MU_ORDER = (
    ClassTag.R,
    ClassTag.N3,
    ClassTag.N2,
    ClassTag.P,
    ClassTag.CT,
    ClassTag.CT_OMEGA,
    ClassTag.NV,
    ClassTag.CV,
    ClassTag.CT1,
    ClassTag.E,
)

_ZERO_MU_ORDER = (
    ClassTag.DH2,
    ClassTag.DH3,
    ClassTag.F,
    ClassTag.C0,
    ClassTag.V,
    ClassTag.C6_STAR,
    ClassTag.C3_STAR,
    ClassTag.C2,
    ClassTag.I,
)


@dataclass(frozen=True)
class ClassInstance:
    tag: ClassTag
    h: int

    def __str__(self) -> str:
        if self.tag in PARAMETERLESS:
            return self.tag.value
        return f"{self.tag.value}({self.h})"


@dataclass(frozen=True)
class GroupParams:
    n: int
    q: int
    order: int


@dataclass(frozen=True)
class ClassRecord:
    instance: ClassInstance
    subgroup_order: int
    mobius: int
    class_size: int
    elem_counts: dict[int, int]


@dataclass(frozen=True)
class OvergroupTable:
    subject: ClassInstance
    rows: tuple[tuple[ClassInstance, int], ...]


def _validate_n(n: int) -> None:
    if n % 2 == 0:
        raise ValueError(f"R(3^n) needs odd n, got {n}")
    if n == 1:
        raise ValueError("R(3) is not simple and is out of scope; need n >= 3")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")


def group_order(n: int) -> int:
    """|R(3^n)| = 3^(3n) (3^(3n)+1) (3^n-1)."""
    _validate_n(n)
    q3 = 3 ** (3 * n)
    return q3 * (q3 + 1) * (3**n - 1)


def aut_order(n: int) -> int:
    """|Aut(R(3^n))| = n * |R(3^n)| (outer part: field automorphisms)."""
    return n * group_order(n)


def group_params(n: int) -> GroupParams:
    _validate_n(n)
    return GroupParams(n=n, q=3**n, order=group_order(n))


def is_applicable(tag: ClassTag, h: int, n: int) -> bool:
    """Does class (tag, h) occur inside R(3^n)?"""
    if tag in PARAMETERLESS:
        return h == n
    if h < 1 or n % h != 0:
        return False
    if tag in _REQUIRES_H_GT_1 and h == 1:
        return False
    if tag in (ClassTag.DH2, ClassTag.DH3):
        # dihedral classes only exist when the subfield tower leaves room
        # for a four-group on top: 3h | n
        return n % (3 * h) == 0
    return True


def instance(tag: ClassTag, h: int, n: int) -> ClassInstance:
    """Validated ClassInstance constructor."""
    _validate_n(n)
    if not is_applicable(tag, h, n):
        raise ValueError(f"class {tag.value}(h={h}) is not applicable at n={n}")
    return ClassInstance(tag, h)


def class_instances(n: int) -> list[ClassInstance]:
    """Every applicable class at level n; nonzero-mu families first."""
    _validate_n(n)
    out: list[ClassInstance] = []
    for tag in _NONZERO_MU_ORDER + _ZERO_MU_ORDER:
        if tag in PARAMETERLESS:
            out.append(ClassInstance(tag, n))
        else:
            out.extend(ClassInstance(tag, h) for h in divisors(n) if is_applicable(tag, h, n))
    return out


def subgroup_order(inst: ClassInstance) -> int:
    q = 3**inst.h
    tag = inst.tag
    if tag is ClassTag.R:
        return q**3 * (q**3 + 1) * (q - 1)
    if tag is ClassTag.P:
        return q**3 * (q - 1)
    if tag is ClassTag.CT:
        return q * (q * q - 1)
    if tag is ClassTag.CT_OMEGA:
        return q * (q - 1)
    if tag is ClassTag.NV:
        return 6 * (q + 1)
    if tag is ClassTag.CV:
        return 2 * (q + 1)
    if tag is ClassTag.N2:
        return 6 * hall_orders(inst.h).a2
    if tag is ClassTag.N3:
        return 6 * hall_orders(inst.h).a3
    if tag is ClassTag.DH2:
        return 2 * hall_orders(inst.h).a2
    if tag is ClassTag.DH3:
        return 2 * hall_orders(inst.h).a3
    if tag is ClassTag.F:
        return q
    if tag is ClassTag.C0:
        return q - 1
    return {ClassTag.CT1: 24, ClassTag.E: 8, ClassTag.V: 4, ClassTag.C6_STAR: 6, ClassTag.C3_STAR: 3, ClassTag.C2: 2, ClassTag.I: 1}[tag]


def normaliser_order(inst: ClassInstance, n: int) -> int:
    """|N_G(H)| for a representative H of the class, inside G = R(3^n)."""
    tag = inst.tag
    qn = 3**n
    if tag in (ClassTag.R, ClassTag.P, ClassTag.CT, ClassTag.NV, ClassTag.N2, ClassTag.N3, ClassTag.CT_OMEGA, ClassTag.CT1):
        return subgroup_order(inst)  # self-normalising
    if tag is ClassTag.CV:
        return 6 * (3**inst.h + 1)  # its four-group normaliser
    if tag in (ClassTag.DH2, ClassTag.DH3):
        # (2^2 x H):3 -- a four-group centralises the dihedral since 3h | n
        return 12 * subgroup_order(inst)
    if tag is ClassTag.F:
        return 3 ** (2 * n) * (3**inst.h - 1)
    if tag is ClassTag.C0:
        return 2 * (qn - 1)
    if tag is ClassTag.E:
        return 168  # 2^3:7:3
    if tag is ClassTag.V:
        return 6 * (qn + 1)
    if tag is ClassTag.C6_STAR:
        return 2 * qn
    if tag is ClassTag.C3_STAR:
        return 2 * qn * qn
    if tag is ClassTag.C2:
        return qn * (qn * qn - 1)
    if tag is ClassTag.I:
        return group_order(n)
    raise AssertionError(tag)


def mobius_value(inst: ClassInstance, n: int) -> int:
    """mu_G of the class, as a multiple of the number-theoretic mu(n/h)."""
    tag = inst.tag
    if tag is ClassTag.R:
        return moebius(n // inst.h)
    if tag in (ClassTag.N2, ClassTag.N3, ClassTag.P, ClassTag.CT, ClassTag.NV):
        return -moebius(n // inst.h)
    if tag is ClassTag.CT_OMEGA:
        return moebius(n // inst.h)
    if tag is ClassTag.CV:
        return 3 * moebius(n // inst.h)
    if tag is ClassTag.CT1:
        return -2 * moebius(n)
    if tag is ClassTag.E:
        return 21 * moebius(n)
    return 0


def class_size(inst: ClassInstance, n: int) -> int:
    order = group_order(n)
    norm = normaliser_order(inst, n)
    size, rem = divmod(order, norm)
    if rem:
        raise AssertionError(f"normaliser order of {inst} does not divide |G| at n={n}")
    return size


def element_count(inst: ClassInstance, k: int) -> int:
    """Number of elements of order exactly k in the class's subgroups (k in 2,3,6,9)."""
    if k not in (2, 3, 6, 9):
        raise ValueError(f"element order {k} is not tabulated (supported: 2, 3, 6, 9)")
    q = 3**inst.h
    tag = inst.tag
    if tag is ClassTag.R:
        counts = {
            2: q * q * (q * q - q + 1),
            3: (q**3 + 1) * (q * q - 1),
            6: q * q * (q**3 + 1) * (q - 1),
            9: q * q * (q**3 + 1) * (q - 1),
        }
    elif tag is ClassTag.P:
        counts = {2: q * q, 3: q * q - 1, 6: q * q * (q - 1), 9: q * q * (q - 1)}
    elif tag is ClassTag.CT:
        counts = {2: q * q - q + 1, 3: q * q - 1, 6: q * q - 1, 9: 0}
    elif tag is ClassTag.CT_OMEGA:
        counts = {2: 1, 3: q - 1, 6: q - 1, 9: 0}
    elif tag is ClassTag.NV:
        counts = {2: q + 4, 3: 2 * (q + 1), 6: 2 * (q + 1), 9: 0}
    elif tag is ClassTag.CV:
        counts = {2: q + 4, 3: 0, 6: 0, 9: 0}
    elif tag is ClassTag.N2:
        a = hall_orders(inst.h).a2
        counts = {2: a, 3: 2 * a, 6: 2 * a, 9: 0}
    elif tag is ClassTag.N3:
        a = hall_orders(inst.h).a3
        counts = {2: a, 3: 2 * a, 6: 2 * a, 9: 0}
    elif tag is ClassTag.DH2:
        counts = {2: hall_orders(inst.h).a2, 3: 0, 6: 0, 9: 0}
    elif tag is ClassTag.DH3:
        counts = {2: hall_orders(inst.h).a3, 3: 0, 6: 0, 9: 0}
    elif tag is ClassTag.F:
        counts = {2: 0, 3: q - 1, 6: 0, 9: 0}
    elif tag is ClassTag.C0:
        counts = {2: 1, 3: 0, 6: 0, 9: 0}  # cyclic of even order coprime to 3
    elif tag is ClassTag.CT1:
        counts = {2: 7, 3: 8, 6: 8, 9: 0}
    elif tag is ClassTag.E:
        counts = {2: 7, 3: 0, 6: 0, 9: 0}
    elif tag is ClassTag.V:
        counts = {2: 3, 3: 0, 6: 0, 9: 0}
    elif tag is ClassTag.C6_STAR:
        counts = {2: 1, 3: 2, 6: 2, 9: 0}
    elif tag is ClassTag.C3_STAR:
        counts = {2: 0, 3: 2, 6: 0, 9: 0}
    elif tag is ClassTag.C2:
        counts = {2: 1, 3: 0, 6: 0, 9: 0}
    elif tag is ClassTag.I:
        counts = {2: 0, 3: 0, 6: 0, 9: 0}
    else:
        raise AssertionError(tag)
    return counts[k]


def iso_label(inst: ClassInstance) -> str:
    """Human-readable isomorphism type, for CLI tables."""
    h = inst.h
    q = 3**h
    tag = inst.tag
    if tag is ClassTag.R:
        return f"R(3^{h})"
    if tag is ClassTag.P:
        return f"(3^{h})^(1+1+1):{q - 1}"
    if tag is ClassTag.CT:
        return f"2 x L2(3^{h})"
    if tag is ClassTag.CT_OMEGA:
        return f"2 x (3^{h}:{(q - 1) // 2})"
    if tag is ClassTag.NV:
        return f"(2^2 x D{(q + 1) // 2}):3"
    if tag is ClassTag.CV:
        return f"2^2 x D{(q + 1) // 2}"
    if tag is ClassTag.N2:
        return f"{hall_orders(h).a2}:6"
    if tag is ClassTag.N3:
        return f"{hall_orders(h).a3}:6"
    if tag is ClassTag.DH2:
        return f"D{2 * hall_orders(h).a2}"
    if tag is ClassTag.DH3:
        return f"D{2 * hall_orders(h).a3}"
    if tag is ClassTag.F:
        return f"3^{h} (elementary abelian)"
    if tag is ClassTag.C0:
        return f"C{q - 1}"
    return {ClassTag.CT1: "2 x L2(3)", ClassTag.E: "2^3", ClassTag.V: "2^2", ClassTag.C6_STAR: "C6", ClassTag.C3_STAR: "C3", ClassTag.C2: "C2", ClassTag.I: "1"}[inst.tag]


def class_record(inst: ClassInstance, n: int) -> ClassRecord:
    _validate_n(n)
    if not is_applicable(inst.tag, inst.h, n):
        raise ValueError(f"class {inst} is not applicable at n={n}")
    return ClassRecord(
        instance=inst,
        subgroup_order=subgroup_order(inst),
        mobius=mobius_value(inst, n),
        class_size=class_size(inst, n),
        elem_counts={k: element_count(inst, k) for k in (2, 3, 6, 9)},
    )


def nu_count(overgroup: ClassInstance, subject: ClassInstance, n_kh: int, n: int) -> Fraction:
    """nu_K(H) = [G:N_G(K)] * N(K,H) / [G:N_G(H)] as an exact rational.

    n_kh is the caller-supplied count N(K, H) of G-conjugates of the subject
    contained in one representative of the overgroup class.
    """
    return Fraction(class_size(overgroup, n) * n_kh, class_size(subject, n))


def _hall_overgroup_at(subject_index: int, h: int, k: int) -> ClassInstance:
    """Hall-normaliser-type class at level k containing the cyclic core a_i(h)."""
    routing = route_hall_divisibility(h, k)
    j = routing.targets[subject_index - 1]
    if j == 1:
        return ClassInstance(ClassTag.NV, k)
    return ClassInstance(ClassTag.N2 if j == 2 else ClassTag.N3, k)


def overgroup_table(inst: ClassInstance, n: int) -> OvergroupTable:
    """All tabulated proper overgroup classes of inst with their nu counts.

    For subjects whose Moebius value is nonzero the rows are exactly the
    cancelling ladders that force mu_G; for zero-mu subjects the rows sum
    (weighted by nu * mu_G) to zero.  The full group appears as the R(n) row
    where applicable.  The table is empty only for inst = R(n) = G.
    """
    _validate_n(n)
    tag, h = inst.tag, inst.h
    if not is_applicable(tag, h, n):
        raise ValueError(f"class {inst} is not applicable at n={n}")
    ks = [k for k in divisors(n) if k % h == 0] if tag not in PARAMETERLESS else divisors(n)
    rows: list[tuple[ClassInstance, int]] = []

    def exact(a: int, b: int) -> int:
        quot, rem = divmod(a, b)
        if rem:
            raise AssertionError(f"non-integral nu {a}/{b} in table of {inst} at n={n}")
        return quot

    def add(t: ClassTag, k: int, nu: int) -> None:
        if nu < 1:
            raise AssertionError(f"non-positive nu {nu} for {t.value}({k}) over {inst}")
        k_eff = n if t in PARAMETERLESS else k
        if not is_applicable(t, k_eff, n):
            raise AssertionError(f"table of {inst} references inapplicable class {t.value}({k_eff}) at n={n}")
        rows.append((ClassInstance(t, k_eff), nu))

    if tag is ClassTag.R:
        for k in ks:
            if k > h:
                add(ClassTag.R, k, 1)

    elif tag is ClassTag.P:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            if k > h:
                add(ClassTag.P, k, 1)

    elif tag is ClassTag.CT:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            if k > h:
                add(ClassTag.CT, k, 1)

    elif tag is ClassTag.NV:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            if k > h:
                add(ClassTag.NV, k, 1)

    elif tag in (ClassTag.N2, ClassTag.N3):
        i = 2 if tag is ClassTag.N2 else 3
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            over = _hall_overgroup_at(i, h, k)
            if over != inst:
                add(over.tag, over.h, 1)

    elif tag is ClassTag.CV:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            add(ClassTag.NV, k, 1)
        for k in ks:
            add(ClassTag.CT, k, 3)
        for k in ks:
            if k > h:
                add(ClassTag.CV, k, 1)

    elif tag is ClassTag.CT_OMEGA:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            add(ClassTag.P, k, 1)
        for k in ks:
            add(ClassTag.CT, k, 1)
        for k in ks:
            if k > h:
                add(ClassTag.CT_OMEGA, k, 1)

    elif tag is ClassTag.F:
        for k in ks:
            add(ClassTag.R, k, 3 ** (2 * (n - k)))
        for k in ks:
            add(ClassTag.P, k, 3 ** (2 * (n - k)))
        for k in ks:
            add(ClassTag.CT, k, 3 ** (2 * n - k))
        for k in ks:
            add(ClassTag.CT_OMEGA, k, 3 ** (2 * n - k))
        for k in ks:
            if k > h:
                add(ClassTag.F, k, exact(3**k - 1, 3**h - 1))

    elif tag is ClassTag.C0:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            add(ClassTag.CT, k, 1)
        for k in ks:
            add(ClassTag.P, k, 2)
        for k in ks:
            add(ClassTag.CT_OMEGA, k, 2)
        for k in ks:
            if k > h:
                add(ClassTag.C0, k, 1)

    elif tag in (ClassTag.DH2, ClassTag.DH3):
        i = 2 if tag is ClassTag.DH2 else 3
        for k in ks:
            if (k // h) % 3 == 0:
                # the dihedral is centralised by a four-group at this level
                add(ClassTag.R, k, 1)
                add(ClassTag.NV, k, 1)
                add(ClassTag.CT, k, 3)
                add(ClassTag.CV, k, 1)
            else:
                over = _hall_overgroup_at(i, h, k)
                add(ClassTag.R, k, 4)
                add(over.tag, over.h, 4)

    elif tag is ClassTag.CT1:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, 1)
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, 1)

    elif tag is ClassTag.E:
        for k in ks:
            add(ClassTag.R, k, 1)
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, 7)
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, 7)
        add(ClassTag.CT1, n, 7)
        for k in ks:
            if k > 1:
                add(ClassTag.CV, k, 7)

    elif tag is ClassTag.V:
        big = 3**n + 1
        for k in ks:
            add(ClassTag.R, k, exact(big, 3**k + 1))
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, exact(big, 3**k + 1))
        for k in ks:
            if k > 1:
                add(ClassTag.CV, k, exact(big, 3**k + 1))
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, exact(3 * big, 3**k + 1))
        # four-groups not conjugate inside the overgroup contribute separately
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, exact(3 * big, 2))
        for k in ks:
            if k > 1:
                add(ClassTag.CV, k, exact(3 * big, 2))
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, big)
        add(ClassTag.CT1, n, exact(7 * big, 4))
        add(ClassTag.E, n, exact(big, 4))

    elif tag in (ClassTag.C6_STAR, ClassTag.C3_STAR):
        six = tag is ClassTag.C6_STAR
        small = (lambda k: 3 ** (n - k)) if six else (lambda k: 3 ** (2 * (n - k)))
        mid = (lambda k: 3 ** (n - k)) if six else (lambda k: 3 ** (2 * n - k))
        hall_nu = 3 ** (n - 1) if six else 3 ** (2 * n - 1)
        for k in ks:
            add(ClassTag.R, k, small(k))
        for k in ks:
            add(ClassTag.P, k, small(k))
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, mid(k))
        for k in ks:
            if k > 1:
                add(ClassTag.CT_OMEGA, k, mid(k))
        for k in ks:
            add(ClassTag.N3, k, hall_nu)
        for k in ks:
            if k > 1:
                add(ClassTag.N2, k, hall_nu)
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, hall_nu)
        add(ClassTag.CT1, n, hall_nu)

    elif tag is ClassTag.C2:
        t = 3**n * (3 ** (2 * n) - 1)
        hall_nu = exact(3 ** (n - 1) * (3 ** (2 * n) - 1), 2)
        for k in ks:
            add(ClassTag.R, k, exact(t, 3**k * (3 ** (2 * k) - 1)))
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, exact(t, 3**k * (3 ** (2 * k) - 1)))
        for k in ks:
            add(ClassTag.P, k, exact(t, 3**k * (3**k - 1)))
        for k in ks:
            if k > 1:
                add(ClassTag.CT_OMEGA, k, exact(t, 3**k * (3**k - 1)))
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, exact(t, 2 * (3**k + 1)))
        for k in ks:
            if k > 1:
                add(ClassTag.CV, k, exact(t, 2 * (3**k + 1)))
        for k in ks:
            if k > 1:
                add(ClassTag.CT, k, exact(t, 3**k + 1))
        for k in ks:
            add(ClassTag.N3, k, hall_nu)
        for k in ks:
            if k > 1:
                add(ClassTag.N2, k, hall_nu)
        for k in ks:
            if k > 1:
                add(ClassTag.NV, k, hall_nu)
        for k in ks:
            if k > 1:
                add(ClassTag.CV, k, hall_nu)
        add(ClassTag.CT1, n, exact(7 * hall_nu, 4))
        add(ClassTag.E, n, exact(hall_nu, 4))

    elif tag is ClassTag.I:
        for over in class_instances(n):
            if mobius_value(over, n) != 0:
                add(over.tag, over.h, class_size(over, n))

    else:
        raise AssertionError(tag)

    return OvergroupTable(subject=inst, rows=tuple(rows))
