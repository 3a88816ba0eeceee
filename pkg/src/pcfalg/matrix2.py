"""2x2 matrices over the exact rings, their fixed-point quadratics and the
limits of iterated linear fractional maps."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import interval
from .exactnum import (
    EmbeddingError,
    QuadElem,
    TowerElem,
    abs_cmp,
    adjoin_sqrt,
    div,
    elem_key,
    is_real_embedded,
    render,
    sign,
    sqrt_in_field,
)
from .kernels import fold_word


class Mat2:
    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11, m12, m21, m22):
        self.m11, self.m12, self.m21, self.m22 = m11, m12, m21, m22

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def scalar(cls, c) -> "Mat2":
        return cls(c, 0, 0, c)

    @classmethod
    def D(cls, x) -> "Mat2":
        return cls(x, 1, 1, 0)

    def entries(self) -> tuple:
        return self.m11, self.m12, self.m21, self.m22

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self):
        return self.m11 + self.m22

    def __mul__(self, other):
        if isinstance(other, Mat2):
            a, b, c, d = self.entries()
            e, f, g, h = other.entries()
            return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
        return Mat2(*(x * other for x in self.entries()))

    def __rmul__(self, other):
        return Mat2(*(other * x for x in self.entries()))

    def __add__(self, other):
        return Mat2(*(x + y for x, y in zip(self.entries(), other.entries())))

    def __sub__(self, other):
        return Mat2(*(x - y for x, y in zip(self.entries(), other.entries())))

    def __neg__(self):
        return Mat2(*(-x for x in self.entries()))

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Mat2.identity()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "Mat2":
        dt = self.det()
        if dt == 0:
            raise ZeroDivisionError("singular matrix")
        return Mat2(div(self.m22, dt), div(-self.m12, dt), div(-self.m21, dt), div(self.m11, dt))

    def apply(self, v: tuple) -> tuple:
        p, q = v
        return self.m11 * p + self.m12 * q, self.m21 * p + self.m22 * q

    def __eq__(self, other):
        if isinstance(other, Mat2):
            return all(x == y for x, y in zip(self.entries(), other.entries()))
        return NotImplemented

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Mat2({str(self)})"

    def __str__(self):
        r = [render(x) for x in self.entries()]
        return f"[[{r[0]},{r[1]}],[{r[2]},{r[3]}]]"


def mat_of_fcf(f) -> Mat2:
    """D(c1)...D(cn) for a word (or class) [c1, ..., cn]."""
    q = f.reduced.quotients if hasattr(f, "reduced") else getattr(f, "quotients", f)
    return Mat2(*fold_word(list(q)))


def is_scalar(m: Mat2) -> bool:
    return m.m12 == 0 and m.m21 == 0 and m.m11 == m.m22


# ---------------------------------------------------------------------------
# projective points


def _collapse(x):
    if isinstance(x, TowerElem) and x.c1 == 0:
        return x.c0
    return x


class ProjPoint:
    """Point of the projective line; ``value`` is None for infinity."""

    __slots__ = ("value",)

    def __init__(self, p, q=1):
        if q == 0:
            if p == 0:
                raise ValueError("(0, 0) is not a projective point")
            self.value = None
        else:
            self.value = _collapse(p if q == 1 else div(p, q))

    @classmethod
    def inf(cls) -> "ProjPoint":
        return cls(1, 0)

    @property
    def is_inf(self) -> bool:
        return self.value is None

    def vector(self) -> tuple:
        return (1, 0) if self.value is None else (self.value, 1)

    def __eq__(self, other):
        if isinstance(other, ProjPoint):
            if self.value is None or other.value is None:
                return self.value is None and other.value is None
            try:
                return self.value == other.value
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash(self.value) if self.value is not None else hash("inf")

    def key(self) -> tuple:
        return (1,) if self.value is None else (0, elem_key(self.value))

    def __repr__(self):
        return f"ProjPoint({str(self)})"

    def __str__(self):
        return "inf" if self.value is None else render(self.value)


INF = ProjPoint(1, 0)


def as_point(x) -> ProjPoint:
    if isinstance(x, ProjPoint):
        return x
    if x is None:
        return INF
    return ProjPoint(x)


def mobius(m: Mat2, beta) -> ProjPoint:
    if m.det() == 0:
        raise ZeroDivisionError("singular matrix")
    return ProjPoint(*m.apply(as_point(beta).vector()))


# ---------------------------------------------------------------------------
# fixed-point quadratics


class QuadPoly:
    """``A X^2 + B X + C``."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A, B, C):
        self.A, self.B, self.C = A, B, C

    def coeffs(self) -> tuple:
        return self.A, self.B, self.C

    def is_zero(self) -> bool:
        return self.A == 0 and self.B == 0 and self.C == 0

    def degree(self) -> int:
        if self.A != 0:
            return 2
        if self.B != 0:
            return 1
        return 0 if self.C != 0 else -1

    def discriminant(self):
        return self.B * self.B - 4 * self.A * self.C

    def at(self, beta) -> object:
        """Homogeneous value A p^2 + B p q + C q^2."""
        p, q = as_point(beta).vector()
        return self.A * p * p + self.B * p * q + self.C * q * q

    def __add__(self, other):
        return QuadPoly(self.A + other.A, self.B + other.B, self.C + other.C)

    def __mul__(self, c):
        return QuadPoly(c * self.A, c * self.B, c * self.C)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, QuadPoly):
            return all(x == y for x, y in zip(self.coeffs(), other.coeffs()))
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs())

    def __repr__(self):
        return f"QuadPoly({str(self)})"

    def __str__(self):
        out = ""
        for c, mono in zip(self.coeffs(), ("X^2", "X", "")):
            if c == 0:
                continue
            s = render(c)
            simple = "+" not in s.lstrip("-") and "-" not in s.lstrip("-")
            if mono:
                if s == "1":
                    term = mono
                elif s == "-1":
                    term = "-" + mono
                else:
                    term = (s if simple else f"({s})") + "*" + mono
            else:
                term = s if simple else f"({s})"
            if out and not term.startswith("-"):
                out += "+"
            out += term
        return out or "0"


def quad(m: Mat2) -> QuadPoly:
    return QuadPoly(m.m21, m.m22 - m.m11, -m.m12)


def proportion(q1: QuadPoly, q2: QuadPoly):
    """``c`` with ``q1 == c * q2`` (q2 nonzero), or None."""
    c = None
    for x, y in zip(q1.coeffs(), q2.coeffs()):
        if y != 0:
            c = div(x, y)
            break
    if c is None:
        return None
    return c if q1 == q2 * c else None


@dataclass(frozen=True)
class RootPair:
    kind: str  # "double_root", "zero_poly" or "two_roots"
    roots: tuple

    def __contains__(self, beta) -> bool:
        if self.kind == "zero_poly":
            return True
        return as_point(beta) in self.roots


def _sqrt_of(x):
    r = sqrt_in_field(x)
    return r if r is not None else adjoin_sqrt(x)


def roots(q: QuadPoly) -> RootPair:
    deg = q.degree()
    if deg < 0:
        return RootPair("zero_poly", ())
    if deg == 0:
        return RootPair("double_root", (INF, INF))
    if deg == 1:
        return RootPair("two_roots", (ProjPoint(-q.C, q.B), INF))
    b = div(q.B, q.A)
    c = div(q.C, q.A)
    disc = b * b - 4 * c
    if disc == 0:
        r = ProjPoint(div(-b, 2))
        return RootPair("double_root", (r, r))
    s = _sqrt_of(disc)
    half = div(1, 2)
    return RootPair("two_roots", (ProjPoint((s - b) * half), ProjPoint((-s - b) * half)))


def eigen_at(m: Mat2, beta):
    """Eigenvalue of ``m`` on the line through v(beta)."""
    beta = as_point(beta)
    if quad(m).at(beta) != 0:
        raise ValueError(f"{beta} is not a fixed point")
    return _eigen_unchecked(m, beta)


def _eigen_unchecked(m: Mat2, beta: ProjPoint):
    if beta.is_inf:
        return m.m11
    return _collapse(m.m21 * beta.value + m.m22)


def quad_linear_relation(a: Mat2, b: Mat2):
    """``(kappa, lam, mu)`` with ``kappa*b == lam*a + mu*I`` or None."""
    qa, qb = quad(a), quad(b)
    if qa.is_zero() and qb.is_zero():
        kappa, lam = 1, 1
    elif qa.is_zero():
        kappa, lam = 0, 1
    elif qb.is_zero():
        kappa, lam = 1, 0
    else:
        lam = proportion(qb, qa)
        if lam is None:
            return None
        kappa = 1
    mu = kappa * b.m11 - lam * a.m11
    rest = b * kappa - a * lam
    if not (rest.m12 == 0 and rest.m21 == 0 and rest.m22 == mu):
        return None
    return kappa, lam, mu


def stabilizer_membership(m: Mat2, beta) -> bool:
    return mobius(m, beta) == as_point(beta)


def group_of_quad_membership(m: Mat2, q: QuadPoly) -> bool:
    qm = quad(m)
    if qm.is_zero():
        return True
    if q.is_zero():
        return False
    return proportion(qm, q) is not None


# ---------------------------------------------------------------------------
# eigenvalue magnitudes and power limits


@dataclass(frozen=True)
class EigenData:
    kind: str  # "zero_quad", "double_root", "gap" or "equal_magnitude"
    plus: Optional[ProjPoint] = None
    minus: Optional[ProjPoint] = None
    lam_plus: object = None
    lam_minus: object = None
    tie: bool = False


def _in_base(x) -> bool:
    return not (isinstance(x, TowerElem) and x.c1 != 0)


def _all_real(*xs) -> bool:
    return all(is_real_embedded(x) for x in xs)


def compare_magnitudes(lam1, lam2, tau) -> int:
    """Sign of |lam1| - |lam2| for the two eigenvalues of one matrix."""
    if _in_base(lam1) and _in_base(lam2):
        c = abs_cmp(_collapse(lam1), _collapse(lam2))
        if c is not None:
            return c
    s = lam1 - lam2
    delta = _collapse(s * s)
    if _in_base(delta) and _in_base(tau):
        # |lam1|^2 - |lam2|^2 = Re(tau * conj(s)); it vanishes exactly when
        # tau^2 * conj(s^2) is a real number <= 0
        cd = delta.conj() if isinstance(delta, QuadElem) and delta.d < 0 else delta
        w = _collapse(tau * tau * cd)
        if isinstance(w, QuadElem) and w.d < 0 and w.b != 0:
            pass
        elif sign(w) <= 0:
            return 0
        if _all_real(tau, delta):
            return sign(tau) * sign(s)
    return _numeric_cmp(lam1, lam2)


def _numeric_cmp(lam1, lam2, start_bits: int = 64, max_bits: int = 1 << 14) -> int:
    """Separate two magnitudes known to differ by rigorous enclosures."""
    bits = start_bits
    while bits <= max_bits:
        a = interval.complex_eval(lam1, bits).abs2()
        b = interval.complex_eval(lam2, bits).abs2()
        d = (a - b).sign()
        if d is not None:
            return d
        bits *= 2
    raise EmbeddingError("eigenvalue magnitudes could not be separated")


def eigen_data(m: Mat2) -> EigenData:
    q = quad(m)
    if q.is_zero():
        return EigenData("zero_quad", lam_plus=m.m11, lam_minus=m.m11)
    rp = roots(q)
    if rp.kind == "double_root":
        r = rp.roots[0]
        lam = _eigen_unchecked(m, r)
        return EigenData("double_root", r, r, lam, lam)
    r1, r2 = rp.roots
    l1, l2 = _eigen_unchecked(m, r1), _eigen_unchecked(m, r2)
    c = compare_magnitudes(l1, l2, m.trace())
    if c == 0:
        if r2.key() < r1.key():
            r1, r2, l1, l2 = r2, r1, l2, l1
        return EigenData("equal_magnitude", r1, r2, l1, l2, tie=True)
    if c < 0:
        r1, r2, l1, l2 = r2, r1, l2, l1
    return EigenData("gap", r1, r2, l1, l2)


@dataclass(frozen=True)
class PowerLimit:
    case: str
    limit: Optional[ProjPoint]
    eigen: EigenData

    @property
    def divergent(self) -> bool:
        return self.limit is None


def power_limit(m: Mat2, beta, eigen: Optional[EigenData] = None) -> PowerLimit:
    """Limit of m^n * beta as n grows, decided exactly."""
    if m.det() == 0:
        raise ZeroDivisionError("singular matrix")
    beta = as_point(beta)
    ed = eigen if eigen is not None else eigen_data(m)
    if ed.kind == "zero_quad":
        return PowerLimit("zero_quad", beta, ed)
    if ed.kind == "double_root":
        return PowerLimit("double_root", ed.plus, ed)
    if ed.kind == "gap":
        return PowerLimit("gap", ed.minus if beta == ed.minus else ed.plus, ed)
    if beta == ed.plus or beta == ed.minus:
        return PowerLimit("equal_magnitude", beta, ed)
    return PowerLimit("equal_magnitude", None, ed)
