"""Periodic continued fractions with an explicit type (N, k)."""
from __future__ import annotations

import math
from dataclasses import dataclass

from . import cfcore
from .cfcore import Fcf
from .exactnum import TowerElem, common_radicand, is_element, normalize, render
from .matrix2 import (
    Mat2,
    ProjPoint,
    QuadPoly,
    as_point,
    eigen_at,
    group_of_quad_membership,
    mat_of_fcf,
    quad,
    roots,
    stabilizer_membership,
)


class Pcf:
    """``[b1, ..., bN; a1, ..., ak]``; the split between the parts is data."""

    __slots__ = ("initial", "repeating")

    def __init__(self, initial, repeating):
        b, a = tuple(map(normalize, initial)), tuple(map(normalize, repeating))
        if not a:
            raise ValueError("the repeating part needs at least one entry")
        for c in b + a:
            if isinstance(c, TowerElem) or not is_element(c):
                raise TypeError(f"bad partial quotient {c!r}")
        common_radicand(b + a)
        self.initial = b
        self.repeating = a

    @property
    def type(self) -> tuple[int, int]:
        return len(self.initial), len(self.repeating)

    @property
    def N(self) -> int:
        return len(self.initial)

    @property
    def k(self) -> int:
        return len(self.repeating)

    def term(self, n: int):
        """Partial quotient c_n, n >= 1."""
        if n <= self.N:
            return self.initial[n - 1]
        return self.repeating[(n - self.N - 1) % self.k]

    def prefix(self, n: int) -> list:
        return [self.term(i) for i in range(1, n + 1)]

    def retype(self, extra: int = 0, periods: int = 1) -> "Pcf":
        """Same infinite sequence with ``extra`` more initial terms and the
        period repeated ``periods`` times."""
        n = self.N + extra
        return Pcf(self.prefix(n), [self.term(n + i) for i in range(1, periods * self.k + 1)])

    def __eq__(self, other):
        if isinstance(other, Pcf):
            return self.initial == other.initial and self.repeating == other.repeating
        return NotImplemented

    def __hash__(self):
        return hash((self.initial, self.repeating))

    def __repr__(self):
        return f"Pcf({str(self)})"

    def __str__(self):
        b = ",".join(render(c) for c in self.initial)
        a = ",".join(render(c) for c in self.repeating)
        return f"[{b}; {a}]"


# ---------------------------------------------------------------------------
# equality notions


def cf_equal(p: Pcf, q: Pcf) -> bool:
    """Same infinite sequence, whatever the types."""
    n = max(p.N, q.N) + p.k * q.k // math.gcd(p.k, q.k)
    return all(p.term(i) == q.term(i) for i in range(1, n + 1))


def k_equal(p: Pcf, q: Pcf) -> bool:
    return p.k == q.k and cf_equal(p, q)


def equal(p: Pcf, q: Pcf) -> bool:
    return p.type == q.type and cf_equal(p, q)


# ---------------------------------------------------------------------------
# unfolding, folding and the class group


def unfold(p: Pcf) -> Fcf:
    if p.N == 0:
        return Fcf._trusted(p.repeating)
    tail = (0,) + tuple(-c for c in reversed(p.initial)) + (0,)
    return Fcf._trusted(p.initial + p.repeating + tail)


def fold(f) -> Pcf:
    """The purely periodic PCF repeating the word ``f``."""
    if isinstance(f, cfcore.FcfClass):
        f = f.reduced
    return Pcf((), tuple(f))


class PcfClass:
    """Class of PCFs, held by its reduced purely periodic representative."""

    __slots__ = ("reduced_rcf",)

    def __init__(self, reduced_rcf: Pcf):
        if reduced_rcf.N != 0 or not unfold(reduced_rcf).is_reduced():
            raise ValueError(f"{reduced_rcf} is not a reduced purely periodic PCF")
        self.reduced_rcf = reduced_rcf

    def fcf_class(self) -> cfcore.FcfClass:
        return cfcore.FcfClass(unfold(self.reduced_rcf))

    def __eq__(self, other):
        if isinstance(other, PcfClass):
            return self.reduced_rcf == other.reduced_rcf
        return NotImplemented

    def __hash__(self):
        return hash(("pcfclass", self.reduced_rcf))

    def __mul__(self, other):
        if isinstance(other, PcfClass):
            return star(self, other)
        return NotImplemented

    def __repr__(self):
        return f"PcfClass({self.reduced_rcf})"

    def __str__(self):
        return str(self.reduced_rcf)


IDENTITY = PcfClass(Pcf((), (0, 0)))


def _unfolded(p) -> Fcf:
    if isinstance(p, PcfClass):
        return unfold(p.reduced_rcf)
    return unfold(p)


def normal_form(p) -> PcfClass:
    if isinstance(p, PcfClass):
        return p
    return PcfClass(fold(cfcore.reduce(unfold(p))))


def equivalent(p, q) -> bool:
    return normal_form(p) == normal_form(q)


def star(p, q) -> PcfClass:
    return PcfClass(fold(cfcore.reduce(_unfolded(p) + _unfolded(q))))


def galois_dual(p: Pcf) -> Pcf:
    return Pcf(p.initial + (0,), tuple(-c for c in reversed(p.repeating)))


def inverse(p) -> PcfClass:
    if isinstance(p, PcfClass):
        p = p.reduced_rcf
    return normal_form(galois_dual(p))


def type1_star(p: Pcf, q: Pcf) -> Pcf:
    """Product of two type (1, k) PCFs as a type (1, k + k') PCF."""
    if p.N != 1 or q.N != 1:
        raise ValueError("type1_star needs PCFs of type (1, k)")
    b, bb = p.initial[0], q.initial[0]
    a, aa = list(p.repeating), list(q.repeating)
    a[-1] = a[-1] + bb - b
    aa[-1] = aa[-1] - bb + b
    return Pcf((b,), a + aa)


# ---------------------------------------------------------------------------
# matrices and characters


def e_matrix(p) -> Mat2:
    return mat_of_fcf(_unfolded(p))


@dataclass(frozen=True)
class Character:
    root: object  # ProjPoint, or None for a scalar E
    value: object
    is_unit_norm: bool


def characters(p) -> list[Character]:
    """Eigenvalue characters at the roots of Quad(P); two entries always."""
    e = e_matrix(p)
    det = e.det()
    q = quad(e)
    if q.is_zero():
        ok = e.m11 * e.m11 == det and det in (1, -1)
        return [Character(None, e.m11, ok), Character(None, e.m11, ok)]
    rp = roots(q)
    vals = [eigen_at(e, r) for r in rp.roots]
    prod = vals[0] * vals[1]
    ok = prod == det and det in (1, -1)
    return [Character(r, v, ok) for r, v in zip(rp.roots, vals)]


def character_at(p, beta):
    return eigen_at(e_matrix(p), beta)


def pcf_subgroup_membership(p, target) -> bool:
    """Membership of ``p`` in the subgroup attached to a root, a quadratic,
    a matrix or a reference PCF."""
    e = e_matrix(p)
    if isinstance(target, QuadPoly):
        return group_of_quad_membership(e, target)
    if isinstance(target, Mat2):
        return group_of_quad_membership(e, quad(target))
    if isinstance(target, (Pcf, PcfClass)):
        return group_of_quad_membership(e, quad(e_matrix(target)))
    return stabilizer_membership(e, as_point(target))


def quad_of(p) -> QuadPoly:
    return quad(e_matrix(p))


def roots_of(p):
    return roots(quad_of(p))


def convergent(p: Pcf, n: int) -> ProjPoint:
    """C_n = D(c1)...D(cn) applied to infinity."""
    m = mat_of_fcf(p.prefix(n)) if n > 0 else Mat2.identity()
    return ProjPoint(m.m11, m.m21)


def prefix_matrix(p: Pcf, n: int) -> Mat2:
    return mat_of_fcf(p.prefix(n)) if n > 0 else Mat2.identity()
