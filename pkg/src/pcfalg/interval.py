"""Rigorous dyadic interval arithmetic.

Endpoints are binary floating values ``m * 2**e`` with ``m`` kept to at most
``prec`` significant bits; every operation rounds its lower endpoint down and
its upper endpoint up, so an enclosure never loses the exact value.  The
precision travels with each interval, there is no global context.
"""
from __future__ import annotations

import math
import numbers
from decimal import Decimal, localcontext
from fractions import Fraction


def _round(m: int, e: int, prec: int, up: bool) -> tuple[int, int]:
    n = m.bit_length() - prec
    if n <= 0:
        return m, e
    if up:
        return -((-m) >> n), e + n
    return m >> n, e + n


def _from_rational(x, prec: int, up: bool) -> tuple[int, int]:
    p, q = int(x.numerator), int(x.denominator)
    if q == 1:
        return _round(p, 0, prec, up)
    # choose shift so the quotient has about prec bits
    shift = prec + q.bit_length() - p.bit_length() + 2
    if shift < 0:
        shift = 0
    num = p << shift
    m = -((-num) // q) if up else num // q
    return _round(m, -shift, prec, up)


def _to_fraction(m: int, e: int) -> Fraction:
    return Fraction(m << e) if e >= 0 else Fraction(m, 1 << -e)


def _cmp(a: tuple[int, int], b: tuple[int, int]) -> int:
    (ma, ea), (mb, eb) = a, b
    e = min(ea, eb)
    x = ma << (ea - e)
    y = mb << (eb - e)
    return (x > y) - (x < y)


def _add(a, b, prec, up):
    (ma, ea), (mb, eb) = a, b
    e = min(ea, eb)
    return _round((ma << (ea - e)) + (mb << (eb - e)), e, prec, up)


def _mul(a, b, prec, up):
    return _round(a[0] * b[0], a[1] + b[1], prec, up)


def _div(a, b, prec, up):
    (ma, ea), (mb, eb) = a, b
    if ma == 0:
        return 0, 0
    shift = prec + mb.bit_length() - ma.bit_length() + 2
    if shift < 0:
        shift = 0
    num = ma << shift
    if mb < 0:
        num, mb = -num, -mb
    m = -((-num) // mb) if up else num // mb
    return _round(m, ea - eb - shift, prec, up)


def _sqrt(a, prec, up):
    m, e = a
    if m == 0:
        return 0, 0
    if e % 2:
        m, e = m << 1, e - 1
    shift = max(0, 2 * prec - m.bit_length() + 2)
    shift += shift % 2
    m <<= shift
    e -= shift
    r = math.isqrt(m)
    if up and r * r != m:
        r += 1
    return _round(r, e // 2, prec, up)


def _neg(a):
    return -a[0], a[1]


class Interval:
    """Closed real interval ``[lo, hi]`` with dyadic endpoints."""

    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo, hi, prec: int):
        self.lo = lo
        self.hi = hi
        self.prec = prec

    @classmethod
    def point(cls, x, prec: int) -> "Interval":
        return cls(_from_rational(x, prec, False), _from_rational(x, prec, True), prec)

    @classmethod
    def hull(cls, a: "Interval", b: "Interval") -> "Interval":
        lo = a.lo if _cmp(a.lo, b.lo) <= 0 else b.lo
        hi = a.hi if _cmp(a.hi, b.hi) >= 0 else b.hi
        return cls(lo, hi, min(a.prec, b.prec))

    def _coerce(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        if isinstance(other, numbers.Rational):
            return Interval.point(other, self.prec)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = min(self.prec, o.prec)
        return Interval(_add(self.lo, o.lo, p, False), _add(self.hi, o.hi, p, True), p)

    __radd__ = __add__

    def __neg__(self):
        return Interval(_neg(self.hi), _neg(self.lo), self.prec)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        p = min(self.prec, o.prec)
        cands_lo = [_mul(x, y, p, False) for x in (self.lo, self.hi) for y in (o.lo, o.hi)]
        cands_hi = [_mul(x, y, p, True) for x in (self.lo, self.hi) for y in (o.lo, o.hi)]
        lo = cands_lo[0]
        for c in cands_lo[1:]:
            if _cmp(c, lo) < 0:
                lo = c
        hi = cands_hi[0]
        for c in cands_hi[1:]:
            if _cmp(c, hi) > 0:
                hi = c
        return Interval(lo, hi, p)

    __rmul__ = __mul__

    def inverse(self) -> "Interval":
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        one = (1, 0)
        p = self.prec
        return Interval(_div(one, self.hi, p, False), _div(one, self.lo, p, True), p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def square(self) -> "Interval":
        m = self * self
        if self.contains_zero():
            return Interval((0, 0), m.hi, m.prec)
        return m

    def sqrt(self) -> "Interval":
        if self.lo[0] < 0:
            if self.hi[0] < 0:
                raise ValueError("square root of a negative interval")
            lo = (0, 0)
        else:
            lo = _sqrt(self.lo, self.prec, False)
        return Interval(lo, _sqrt(self.hi, self.prec, True), self.prec)

    def abs(self) -> "Interval":
        if self.lo[0] >= 0:
            return self
        if self.hi[0] <= 0:
            return -self
        hi = self.hi if _cmp(self.hi, _neg(self.lo)) >= 0 else _neg(self.lo)
        return Interval((0, 0), hi, self.prec)

    def contains_zero(self) -> bool:
        return self.lo[0] <= 0 <= self.hi[0]

    def sign(self):
        """+1, -1, or None when the interval contains zero."""
        if self.lo[0] > 0:
            return 1
        if self.hi[0] < 0:
            return -1
        return None

    @property
    def lo_q(self) -> Fraction:
        return _to_fraction(*self.lo)

    @property
    def hi_q(self) -> Fraction:
        return _to_fraction(*self.hi)

    def mid(self) -> Fraction:
        return (self.lo_q + self.hi_q) / 2

    def width(self) -> Fraction:
        return self.hi_q - self.lo_q

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo_q <= x <= self.hi_q

    def __float__(self):
        return float(self.mid())

    def __repr__(self):
        return f"Interval([{float(self.lo_q)!r}, {float(self.hi_q)!r}])"


class ComplexBox:
    """Rectangular complex enclosure ``re + i*im``."""

    __slots__ = ("re", "im")

    def __init__(self, re: Interval, im: Interval):
        self.re = re
        self.im = im

    @classmethod
    def point(cls, x, prec: int) -> "ComplexBox":
        return cls(Interval.point(x, prec), Interval.point(0, prec))

    @property
    def prec(self) -> int:
        return min(self.re.prec, self.im.prec)

    def _coerce(self, other):
        if isinstance(other, ComplexBox):
            return other
        if isinstance(other, Interval):
            return ComplexBox(other, Interval.point(0, other.prec))
        if isinstance(other, numbers.Rational):
            return ComplexBox.point(other, self.prec)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ComplexBox(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexBox(-self.re, -self.im)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ComplexBox(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.is_real() and o.is_real():
            return ComplexBox(self.re * o.re, Interval.point(0, self.prec))
        return ComplexBox(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def abs2(self) -> Interval:
        return self.re.square() + self.im.square()

    def inverse(self) -> "ComplexBox":
        if self.is_real():
            return ComplexBox(self.re.inverse(), self.im)
        n = self.abs2()
        return ComplexBox(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def is_real(self) -> bool:
        return self.im.lo[0] == 0 and self.im.hi[0] == 0

    def sqrt(self) -> "ComplexBox":
        """Principal square root (enclosure is valid across the branch cut)."""
        if self.is_real():
            s = self.re.sign()
            if s is not None and s > 0 or self.re.lo[0] == 0:
                return ComplexBox(self.re.sqrt(), self.im)
            if s is not None and s < 0:
                return ComplexBox(Interval.point(0, self.prec), (-self.re).sqrt())
        r = self.abs2().sqrt()
        half = Fraction(1, 2)
        re = ((r + self.re) * half).sqrt()
        im = ((r - self.re) * half).sqrt()
        sy = self.im.sign()
        if sy == -1:
            im = -im
        elif sy is None:
            im = Interval.hull(-im, im)
        return ComplexBox(re, im)

    def contains(self, z) -> bool:
        if isinstance(z, complex):
            return self.re.contains(Fraction(z.real)) and self.im.contains(Fraction(z.imag))
        return self.re.contains(z) and self.im.contains(0)

    def radius(self) -> Fraction:
        return max(self.re.width(), self.im.width()) / 2

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"ComplexBox({self.re!r}, {self.im!r})"


# ---------------------------------------------------------------------------
# evaluation of exact values

GUARD_BITS = 24


def complex_eval(x, precision_bits: int) -> ComplexBox:
    """Rigorous enclosure of the embedded value of an exact ring element."""
    from .exactnum import QuadElem, TowerElem

    prec = precision_bits + GUARD_BITS
    return _eval(x, prec, QuadElem, TowerElem)


def _eval(x, prec, QuadElem, TowerElem) -> ComplexBox:
    if isinstance(x, TowerElem):
        c0 = _eval(x.c0, prec, QuadElem, TowerElem)
        if x.c1 == 0:
            return c0
        c1 = _eval(x.c1, prec, QuadElem, TowerElem)
        s = _eval(x.delta, prec, QuadElem, TowerElem).sqrt()
        return c0 + c1 * s
    if isinstance(x, QuadElem):
        a = ComplexBox.point(x.a, prec)
        if x.b == 0:
            return a
        r = Interval.point(abs(x.d), prec).sqrt()
        zero = Interval.point(0, prec)
        unit = ComplexBox(r, zero) if x.d > 0 else ComplexBox(zero, r)
        return a + unit * ComplexBox.point(x.b, prec)
    return ComplexBox.point(x, prec)


def real_eval(x, precision_bits: int) -> Interval:
    box = complex_eval(x, precision_bits)
    return box.re


def _decimal_of(q: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        v = Decimal(q.numerator) / Decimal(q.denominator)
        return format(v, "g") if v != 0 else "0"


def decimal_str(x, digits: int = 30) -> str:
    """Decimal approximation of an exact value with ``digits`` significant digits."""
    bits = int(digits * 3.33) + 16
    box = complex_eval(x, bits)
    re = _decimal_of(box.re.mid(), digits)
    if box.is_real() or _tiny(box.im):
        return re
    im = _decimal_of(box.im.mid(), digits)
    if box.re.contains(0) and _tiny(box.re):
        return f"{im}i"
    if im.startswith("-"):
        return f"{re}{im}i"
    return f"{re}+{im}i"


def _tiny(iv: Interval) -> bool:
    return iv.lo[0] == 0 and iv.hi[0] == 0
