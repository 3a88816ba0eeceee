"""Exact coefficient arithmetic.

Three kinds of values are used throughout the package:

* rationals, stored as plain ``int`` or a fraction type (``gmpy2.mpq`` when
  available, :class:`fractions.Fraction` otherwise; both are accepted as
  input);
* :class:`QuadElem`, an element ``a + b*sqrt(d)`` of a quadratic field;
* :class:`TowerElem`, an element ``c0 + c1*sqrt(delta)`` of a quadratic
  extension of a quadratic (or rational) base field.

The embedding into the complex numbers is fixed: ``sqrt(d)`` is the positive
root for ``d > 0`` and ``i*sqrt(|d|)`` for ``d < 0``; the same convention is
used for ``sqrt(delta)`` over a real base.  Over a complex base the principal
branch is used.
"""
from __future__ import annotations

import math
import numbers
from fractions import Fraction
from typing import Optional, Union

try:
    from gmpy2 import mpq as _mpq

    _MPQ = type(_mpq(0))
except ImportError:  # pragma: no cover
    _mpq = Fraction
    _MPQ = Fraction

Rational = Union[int, Fraction]
_FRACS = (Fraction, _MPQ)


class TowerMismatch(ValueError):
    """Raised when values from different quadratic towers are combined."""


class EmbeddingError(ValueError):
    """Raised when an operation needs a real embedding the value lacks."""


def _is_rat(x) -> bool:
    t = type(x)
    return t is int or t is _MPQ or t is Fraction


def rat(x) -> Rational:
    """Normalize a rational so integral values are plain ints and the rest
    use the fast fraction type."""
    t = type(x)
    if t is int:
        return x
    if t is _MPQ:
        return int(x.numerator) if x.denominator == 1 else x
    if isinstance(x, _FRACS):
        if x.denominator == 1:
            return int(x.numerator)
        return x if type(x) is _MPQ else _mpq(x.numerator, x.denominator)
    if isinstance(x, numbers.Integral) and not isinstance(x, bool):
        return int(x)
    raise TypeError(f"not a rational: {x!r}")


def normalize(x):
    """Canonical storage form of any ring element."""
    return rat(x) if _is_rat(x) else x


def frac(n, d=1) -> Rational:
    """The rational n/d in normalized form."""
    return rat(_mpq(n, d))


def _rdiv(p: Rational, q: Rational) -> Rational:
    if q == 0:
        raise ZeroDivisionError("division by zero")
    if type(p) is int and type(q) is int:
        if p % q == 0:
            return p // q
        return _mpq(p, q)
    return rat(_mpq(p) / _mpq(q))


# ---------------------------------------------------------------------------
# integer helpers

_SMALL_PRIMES: list[int] = []


def _primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(n + 1) if sieve[i]]


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Return ``(s, m)`` with ``n == s*s*m``, ``s > 0`` and ``m`` squarefree.

    The sign of ``n`` stays in ``m``.
    """
    if n == 0:
        raise ValueError("0 has no squarefree part")
    global _SMALL_PRIMES
    if not _SMALL_PRIMES:
        _SMALL_PRIMES = _primes_upto(20000)
    sign = -1 if n < 0 else 1
    r = abs(n)
    s = 1
    m = 1
    for p in _SMALL_PRIMES:
        if p * p > r:
            break
        if r % p:
            continue
        e = 0
        while r % p == 0:
            r //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            m *= p
    if r > 1:
        t = math.isqrt(r)
        if t * t == r:
            s *= t
        elif r < _SMALL_PRIMES[-1] ** 2:
            m *= r
        else:
            from sympy import factorint

            for p, e in factorint(r).items():
                s *= p ** (e // 2)
                if e % 2:
                    m *= p
    return s, sign * m


def rational_sqrt(x: Rational) -> Optional[Rational]:
    """Exact nonnegative square root of a rational, or None."""
    x = rat(x)
    if x < 0:
        return None
    if type(x) is int:
        r = math.isqrt(x)
        return r if r * r == x else None
    n, d = int(x.numerator), int(x.denominator)
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return frac(rn, rd)
    return None


# ---------------------------------------------------------------------------
# quadratic field elements


class QuadElem:
    """``a + b*sqrt(d)`` with rational ``a, b`` and squarefree ``d``."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d in (0, 1) or not isinstance(d, int):
            raise ValueError(f"bad radicand {d!r}")
        self.a = rat(a)
        self.b = rat(b)
        self.d = d

    @classmethod
    def checked(cls, a, b, d: int) -> "QuadElem":
        s, m = squarefree_decompose(d)
        if s != 1:
            raise ValueError(f"radicand {d} is not squarefree")
        return cls(a, b, d)

    # coercion ---------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, QuadElem):
            if other.d == self.d:
                return other
            if other.b == 0:
                return QuadElem(other.a, 0, self.d)
            if self.b == 0:
                return None  # caller retries with roles swapped
            raise TowerMismatch(f"sqrt({self.d}) vs sqrt({other.d})")
        if _is_rat(other):
            return QuadElem(other, 0, self.d)
        return NotImplemented

    def _binop(self, other, fn):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return fn(QuadElem(self.a, 0, other.d), other)
        return fn(self, o)

    # arithmetic -------------------------------------------------------
    def __add__(self, other):
        if type(other) is QuadElem and other.d == self.d:
            return _quad(self.a + other.a, self.b + other.b, self.d)
        if _is_rat(other):
            return _quad(self.a + other, self.b, self.d)
        return self._binop(other, lambda x, y: QuadElem(x.a + y.a, x.b + y.b, x.d))

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is QuadElem and other.d == self.d:
            return _quad(self.a - other.a, self.b - other.b, self.d)
        if _is_rat(other):
            return _quad(self.a - other, self.b, self.d)
        return self._binop(other, lambda x, y: QuadElem(x.a - y.a, x.b - y.b, x.d))

    def __rsub__(self, other):
        if _is_rat(other):
            return _quad(other - self.a, -self.b, self.d)
        return self._binop(other, lambda x, y: QuadElem(y.a - x.a, y.b - x.b, x.d))

    def __mul__(self, other):
        if type(other) is QuadElem and other.d == self.d:
            a, b, c, e = self.a, self.b, other.a, other.b
            return _quad(a * c + self.d * b * e, a * e + b * c, self.d)
        if _is_rat(other):
            return _quad(self.a * other, self.b * other, self.d)
        return self._binop(
            other,
            lambda x, y: QuadElem(x.a * y.a + x.d * x.b * y.b, x.a * y.b + x.b * y.a, x.d),
        )

    __rmul__ = __mul__

    def __neg__(self):
        return _quad(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def conj(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.d)

    def norm(self) -> Rational:
        """Field norm ``a^2 - d b^2`` (equals ``|x|^2`` when ``d < 0``)."""
        return rat(self.a * self.a - self.d * self.b * self.b)

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return QuadElem(_rdiv(self.a, n), _rdiv(-self.b, n), self.d)

    def __truediv__(self, other):
        if _is_rat(other):
            return QuadElem(_rdiv(self.a, other), _rdiv(self.b, other), self.d)
        if isinstance(other, QuadElem):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_rat(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadElem(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, QuadElem):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if _is_rat(other):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    @property
    def is_real(self) -> bool:
        return self.d > 0 or self.b == 0

    def __repr__(self):
        return f"QuadElem({self.a!s}, {self.b!s}, {self.d})"

    def __str__(self):
        return render(self)


# ---------------------------------------------------------------------------
# one quadratic tower level


def _quad(a, b, d: int) -> QuadElem:
    """Unchecked constructor for arithmetic results."""
    q = object.__new__(QuadElem)
    q.a = rat(a)
    q.b = rat(b)
    q.d = d
    return q


def _base_d(x) -> Optional[int]:
    if isinstance(x, QuadElem):
        return x.d
    return None


class TowerElem:
    """``c0 + c1*sqrt(delta)`` with ``c0, c1, delta`` in one base field.

    ``delta`` is assumed not to be a square in the base; values are produced
    by :func:`adjoin_sqrt`, which guarantees that.
    """

    __slots__ = ("c0", "c1", "delta")

    def __init__(self, c0, c1, delta):
        if isinstance(delta, TowerElem) or isinstance(c0, TowerElem) or isinstance(c1, TowerElem):
            raise TypeError("towers are one level deep")
        if delta == 0:
            raise ValueError("zero radicand")
        self.c0 = _norm_base(c0)
        self.c1 = _norm_base(c1)
        self.delta = _norm_base(delta)

    def _lift(self, other):
        if isinstance(other, TowerElem):
            if other.delta == self.delta and _base_d(other.delta) == _base_d(self.delta):
                return other
            if other.c1 == 0:
                return TowerElem(other.c0, 0, self.delta)
            if self.c1 == 0:
                return None
            return _relift(other, self.delta)
        if isinstance(other, QuadElem) or (
            _is_rat(other)
        ):
            return TowerElem(other, 0, self.delta)
        return NotImplemented

    def _binop(self, other, fn):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o is None:
            return fn(TowerElem(self.c0, 0, other.delta), other)
        return fn(self, o)

    def __add__(self, other):
        return self._binop(other, lambda x, y: TowerElem(x.c0 + y.c0, x.c1 + y.c1, x.delta))

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda x, y: TowerElem(x.c0 - y.c0, x.c1 - y.c1, x.delta))

    def __rsub__(self, other):
        return self._binop(other, lambda x, y: TowerElem(y.c0 - x.c0, y.c1 - x.c1, x.delta))

    def __mul__(self, other):
        return self._binop(
            other,
            lambda x, y: TowerElem(
                x.c0 * y.c0 + x.c1 * y.c1 * x.delta, x.c0 * y.c1 + x.c1 * y.c0, x.delta
            ),
        )

    __rmul__ = __mul__

    def __neg__(self):
        return TowerElem(-self.c0, -self.c1, self.delta)

    def __pos__(self):
        return self

    def conj(self) -> "TowerElem":
        return TowerElem(self.c0, -self.c1, self.delta)

    def rel_norm(self):
        """Norm down to the base field: ``c0^2 - c1^2 delta``."""
        return _norm_base(self.c0 * self.c0 - self.c1 * self.c1 * self.delta)

    def inverse(self) -> "TowerElem":
        n = self.rel_norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return TowerElem(div(self.c0, n), div(-self.c1, n), self.delta)

    def __truediv__(self, other):
        if isinstance(other, TowerElem):
            return self * other.inverse()
        if (isinstance(other, QuadElem) or _is_rat(other)):
            return TowerElem(div(self.c0, other), div(self.c1, other), self.delta)
        return NotImplemented

    def __rtruediv__(self, other):
        if (isinstance(other, QuadElem) or _is_rat(other)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = TowerElem(1, 0, self.delta)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, TowerElem):
            if self.c1 == 0 or other.c1 == 0:
                return self.c1 == 0 and other.c1 == 0 and self.c0 == other.c0
            if self.c0 != other.c0:
                return False
            if self.delta != other.delta:
                try:
                    other = _relift(other, self.delta)
                except TowerMismatch:
                    return False
            return self.c1 == other.c1
        if (isinstance(other, QuadElem) or _is_rat(other)):
            return self.c1 == 0 and self.c0 == other
        return NotImplemented

    def __hash__(self):
        # c0 does not depend on which radicand represents the extension
        if self.c1 == 0:
            return hash(self.c0)
        return hash(("tower", self.c0))

    def __bool__(self):
        return bool(self.c0 != 0 or self.c1 != 0)

    def __repr__(self):
        return f"TowerElem({self.c0!r}, {self.c1!r}, {self.delta!r})"

    def __str__(self):
        return render(self)


RingElem = Union[int, Fraction, "QuadElem", "TowerElem"]


def _relift(x: TowerElem, delta) -> TowerElem:
    """Rewrite ``x`` over radicand ``delta`` when the two radicands differ by
    a square of the base field; the sign is fixed by the embedding."""
    r = sqrt_in_field(div(x.delta, delta))
    if r is None:
        raise TowerMismatch(f"sqrt({render(x.delta)}) vs sqrt({render(delta)})")
    from .interval import complex_eval

    bits = 64
    while True:
        want = complex_eval(TowerElem(0, 1, x.delta), bits)
        have = complex_eval(TowerElem(0, r, delta), bits)
        # exactly one of want - have, want + have vanishes
        if (want - have).abs2().sign() == 1:
            return TowerElem(x.c0, -x.c1 * r, delta)
        if (want + have).abs2().sign() == 1:
            return TowerElem(x.c0, x.c1 * r, delta)
        bits *= 2


def _norm_base(x):
    if isinstance(x, QuadElem):
        return x
    return rat(x)


def div(x, y):
    """Exact division for any pair of ring elements."""
    if _is_rat(x):
        if _is_rat(y):
            return _rdiv(x, y)
    if y == 0:
        raise ZeroDivisionError("division by zero")
    return x / y


def is_element(x) -> bool:
    return _is_rat(x) or isinstance(x, (QuadElem, TowerElem))


def field_signature(x) -> tuple:
    """Identify the smallest tower a value must live in.

    ``()`` for rationals (and tagged rationals), ``(d,)`` for quadratic values
    and ``(d, delta)`` for genuine tower values.
    """
    if isinstance(x, QuadElem):
        return () if x.b == 0 else (x.d,)
    if isinstance(x, TowerElem):
        if x.c1 == 0:
            return field_signature(x.c0)
        return (_base_d(x.delta) or _common_d(x.c0, x.c1), x.delta)
    return ()


def _common_d(*xs) -> Optional[int]:
    for x in xs:
        if isinstance(x, QuadElem) and x.b != 0:
            return x.d
    return None


def common_radicand(values) -> Optional[int]:
    """Shared ``d`` of a collection of base elements; raises on mismatch."""
    d = None
    for v in values:
        if isinstance(v, TowerElem):
            raise TypeError("tower values are not allowed here")
        if isinstance(v, QuadElem) and v.b != 0:
            if d is None:
                d = v.d
            elif d != v.d:
                raise TowerMismatch(f"mixed radicands sqrt({d}) and sqrt({v.d})")
    return d


# ---------------------------------------------------------------------------
# square roots


def sqrt_in_field(x):
    """A square root of ``x`` inside the field of ``x``, or None.

    For rationals only rational roots are returned.  The root returned is the
    one matching the fixed embedding (nonnegative real, or principal branch).
    """
    if isinstance(x, TowerElem):
        if x.c1 == 0:
            r = sqrt_in_field(x.c0)
            return None if r is None else TowerElem(r, 0, x.delta)
        return None
    if not isinstance(x, QuadElem):
        return rational_sqrt(x)
    a, b, d = x.a, x.b, x.d
    if b == 0:
        r = rational_sqrt(a)
        if r is not None:
            return QuadElem(r, 0, d)
        v = rational_sqrt(_rdiv(a, d))
        if v is not None:
            return QuadElem(0, v, d)
        return None
    n2 = x.norm()
    n = rational_sqrt(n2)
    if n is None:
        return None
    for cand in (n, -n):
        u2 = _rdiv(a + cand, 2)
        u = rational_sqrt(u2)
        if u is None or u == 0:
            continue
        v = _rdiv(b, 2 * u)
        r = QuadElem(u, v, d)
        if r * r == x:
            return _principal(r)
    return None


def _principal(r: QuadElem) -> QuadElem:
    if r.d > 0:
        return r if sign(r) >= 0 else -r
    # re = a, im = b*sqrt(|d|)
    if r.a > 0 or (r.a == 0 and r.b >= 0):
        return r
    return -r


def adjoin_sqrt(x):
    """Return ``s`` with ``s*s == x``, extending the field when needed.

    Rationals extend to a quadratic field with squarefree radicand; quadratic
    values extend to a :class:`TowerElem` whose radicand has its rational
    square content removed.
    """
    if isinstance(x, TowerElem):
        if x.c1 != 0:
            raise TowerMismatch("cannot adjoin a square root above one tower level")
        x = x.c0
    r = sqrt_in_field(x)
    if r is not None:
        return r
    if not isinstance(x, QuadElem):
        x = rat(x)
        p, q = (x, 1) if type(x) is int else (int(x.numerator), int(x.denominator))
        s, m = squarefree_decompose(p * q)
        return QuadElem(0, frac(s, q), m)
    a, b, d = x.a, x.b, x.d
    fa, fb = _mpq(a), _mpq(b)
    da, db = int(fa.denominator), int(fb.denominator)
    lcm = da * db // math.gcd(da, db)
    A = int(fa * lcm * lcm)
    B = int(fb * lcm * lcm)
    g = math.gcd(A, B)
    s, _ = squarefree_decompose(g)
    delta = QuadElem(A // (s * s), B // (s * s), d)
    return TowerElem(0, frac(s, lcm), delta)


# ---------------------------------------------------------------------------
# real embedding: exact sign and magnitude


def is_real_embedded(x) -> bool:
    """True when the embedded value is known to be real from its form."""
    if isinstance(x, QuadElem):
        return x.d > 0 or x.b == 0
    if isinstance(x, TowerElem):
        if x.c1 == 0:
            return is_real_embedded(x.c0)
        if not (is_real_embedded(x.c0) and is_real_embedded(x.c1) and is_real_embedded(x.delta)):
            return False
        return sign(x.delta) > 0
    return True


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def sign(x) -> int:
    """Exact sign of ``x`` under the real embedding."""
    if _is_rat(x):
        return _sgn(x)
    if isinstance(x, QuadElem):
        if x.b == 0:
            return _sgn(x.a)
        if x.d < 0:
            raise EmbeddingError("value is not real under the complex embedding")
        sa, sb = _sgn(x.a), _sgn(x.b)
        if sa == 0 or sa == sb:
            return sb
        if sb == 0:
            return sa
        # opposite signs: compare a^2 with d b^2
        c = _sgn(x.a * x.a - x.d * x.b * x.b)
        return sa if c > 0 else (sb if c < 0 else 0)
    if isinstance(x, TowerElem):
        if x.c1 == 0:
            return sign(x.c0)
        if sign(x.delta) <= 0:
            raise EmbeddingError("tower value with negative radicand is not real")
        s0, s1 = sign(x.c0), sign(x.c1)
        if s0 == 0 or s0 == s1:
            return s1
        if s1 == 0:
            return s0
        c = sign(x.c0 * x.c0 - x.c1 * x.c1 * x.delta)
        return s0 if c > 0 else (s1 if c < 0 else 0)
    raise TypeError(f"not a ring element: {x!r}")


def abs2(x):
    """Exact ``|x|^2`` as a real-embedded element, or None if unavailable."""
    if _is_rat(x):
        return x * x
    if isinstance(x, QuadElem):
        if x.d < 0:
            return x.norm()
        return x * x
    if isinstance(x, TowerElem):
        if x.c1 == 0:
            return abs2(x.c0)
        if not (is_real_embedded(x.c0) and is_real_embedded(x.c1) and is_real_embedded(x.delta)):
            return None
        if sign(x.delta) > 0:
            return x * x
        return _norm_base(x.c0 * x.c0 - x.c1 * x.c1 * x.delta)
    raise TypeError(f"not a ring element: {x!r}")


def _complex_base_tower(x) -> bool:
    if not isinstance(x, TowerElem) or x.c1 == 0:
        return False
    return not all(is_real_embedded(v) for v in (x.c0, x.c1, x.delta))


def abs_cmp_one(x) -> int:
    """Compare ``|x|`` with 1; returns -1 (less), 0 (equal) or +1 (greater)."""
    if _complex_base_tower(x):
        raise EmbeddingError("tower over a complex base: use complex_eval")
    if is_real_embedded(x):
        if sign(x - 1) > 0 or sign(x + 1) < 0:
            return 1
        if x == 1 or x == -1:
            return 0
        return -1
    return sign(abs2(x) - 1)


def abs_cmp(x, y) -> Optional[int]:
    """Exact comparison of ``|x|`` and ``|y|``; None when not decidable exactly."""
    mx, my = abs2(x), abs2(y)
    if mx is None or my is None:
        return None
    try:
        return sign(mx - my)
    except TowerMismatch:
        return None


# ---------------------------------------------------------------------------
# rendering


def _render_rat(x: Rational) -> str:
    x = rat(x)
    if type(x) is int:
        return str(x)
    return f"{x.numerator}/{x.denominator}"


def _coef_times(c: Rational, unit: str) -> str:
    c = rat(c)
    if c == 1:
        return unit
    if c == -1:
        return "-" + unit
    return f"{_render_rat(c)}*{unit}"


def _join(head: str, tail: str) -> str:
    if not head:
        return tail
    if tail.startswith("-"):
        return head + tail
    return head + "+" + tail


def render(x) -> str:
    """Canonical text form, re-readable by :func:`pcfalg.parsing.parse_elem`."""
    if _is_rat(x):
        return _render_rat(x)
    if isinstance(x, QuadElem):
        if x.b == 0:
            return _render_rat(x.a)
        tail = _coef_times(x.b, f"sqrt({x.d})")
        return _join(_render_rat(x.a) if x.a != 0 else "", tail)
    if isinstance(x, TowerElem):
        if x.c1 == 0:
            return render(x.c0)
        unit = f"sqrt({render(x.delta)})"
        c1 = x.c1
        if isinstance(c1, QuadElem) and c1.b == 0:
            c1 = c1.a
        if isinstance(c1, QuadElem):
            if c1.a == 0:
                tail = _coef_times(c1.b, f"sqrt({c1.d})") + "*" + unit
            else:
                tail = f"({render(c1)})*{unit}"
        else:
            tail = _coef_times(c1, unit)
        return _join(render(x.c0) if x.c0 != 0 else "", tail)
    raise TypeError(f"not a ring element: {x!r}")


def elem_key(x) -> tuple:
    """Deterministic total-order key used for tie-breaking."""
    if isinstance(x, TowerElem):
        return (2, elem_key(x.c0), elem_key(x.c1))
    if isinstance(x, QuadElem):
        return (1, _mpq(x.a), _mpq(x.b))
    return (1, _mpq(x), _mpq(0))


def is_integral(x) -> bool:
    """Integrality in the ring of integers of Q or Q(sqrt d)."""
    if isinstance(x, TowerElem):
        raise TypeError("integrality is only defined for base elements")
    if not isinstance(x, QuadElem):
        return _mpq(x).denominator == 1
    a, b = _mpq(x.a), _mpq(x.b)
    if a.denominator == 1 and b.denominator == 1:
        return True
    if x.d % 4 == 1:
        a2, b2 = 2 * a, 2 * b
        return (
            a2.denominator == 1
            and b2.denominator == 1
            and (a2.numerator - b2.numerator) % 2 == 0
        )
    return False


def norm_to_q(x) -> Rational:
    """Absolute norm down to Q of a base element."""
    if isinstance(x, QuadElem):
        if x.b == 0:
            return rat(x.a * x.a)
        return x.norm()
    return rat(x)


def is_unit(x) -> bool:
    """Unit test in the ring of integers (rationals: only +-1)."""
    if not is_integral(x):
        return False
    if isinstance(x, QuadElem) and x.b != 0:
        return x.norm() in (1, -1)
    v = x.a if isinstance(x, QuadElem) else x
    return v in (1, -1)
