"""Finite continued-fraction words and their group of classes.

A word ``[c1, ..., cn]`` stands for the formal product D(c1)...D(cn) with
``D(x) = [[x, 1], [1, 0]]``.  Two words are equivalent when one can be turned
into the other by the rewrite ``(x, 0, y) -> (x + y)`` applied at interior
positions and its reverse.  Every class has exactly one reduced word, i.e. a
word without interior zeros.
"""
from __future__ import annotations

from .exactnum import TowerElem, common_radicand, is_element, normalize, render
from .kernels import prefix_columns, reduce_word


class Fcf:
    """A nonempty finite word of partial quotients."""

    __slots__ = ("quotients",)

    def __init__(self, quotients):
        q = tuple(normalize(c) for c in quotients)
        if not q:
            raise ValueError("a continued-fraction word needs at least one entry")
        for c in q:
            if isinstance(c, TowerElem) or not is_element(c):
                raise TypeError(f"bad partial quotient {c!r}")
        common_radicand(q)
        self.quotients = q

    @classmethod
    def _trusted(cls, q: tuple) -> "Fcf":
        """Wrap quotients already known to be valid."""
        f = object.__new__(cls)
        f.quotients = q
        return f

    def __len__(self):
        return len(self.quotients)

    def __iter__(self):
        return iter(self.quotients)

    def __getitem__(self, i):
        return self.quotients[i]

    def __add__(self, other):
        if not isinstance(other, Fcf):
            return NotImplemented
        q = self.quotients + other.quotients
        common_radicand(q)
        return Fcf._trusted(q)

    def __eq__(self, other):
        if isinstance(other, Fcf):
            return self.quotients == other.quotients
        return NotImplemented

    def __hash__(self):
        return hash(self.quotients)

    def is_reduced(self) -> bool:
        return all(c != 0 for c in self.quotients[1:-1])

    def __repr__(self):
        return f"Fcf({str(self)})"

    def __str__(self):
        return "[" + ",".join(render(c) for c in self.quotients) + "]"


def _as_fcf(f) -> Fcf:
    if isinstance(f, Fcf):
        return f
    if isinstance(f, FcfClass):
        return f.reduced
    return Fcf(f)


class FcfClass:
    """An equivalence class, held by its reduced word."""

    __slots__ = ("reduced",)

    def __init__(self, reduced: Fcf):
        if not reduced.is_reduced():
            raise ValueError(f"{reduced} has interior zeros")
        self.reduced = reduced

    def __eq__(self, other):
        if isinstance(other, FcfClass):
            return self.reduced == other.reduced
        return NotImplemented

    def __hash__(self):
        return hash(("class", self.reduced.quotients))

    def __mul__(self, other):
        if isinstance(other, FcfClass):
            return star(self, other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        out = IDENTITY
        for _ in range(n):
            out = star(out, self)
        return out

    @property
    def parity(self) -> int:
        return parity(self)

    @property
    def det_char(self) -> int:
        return det_char(self)

    def __repr__(self):
        return f"FcfClass({self.reduced})"

    def __str__(self):
        return str(self.reduced)


def reduce(f) -> FcfClass:
    """Class of ``f`` with its unique reduced representative."""
    f = _as_fcf(f)
    return FcfClass(Fcf._trusted(tuple(reduce_word(f.quotients))))


def interior_zeros(f) -> list[int]:
    """Positions where a single rewrite step applies."""
    q = _as_fcf(f).quotients
    return [i for i in range(1, len(q) - 1) if q[i] == 0]


def rewrite_at(f, i: int) -> Fcf:
    """Apply ``(x, 0, y) -> (x + y)`` at interior position ``i``."""
    q = _as_fcf(f).quotients
    if not (0 < i < len(q) - 1) or q[i] != 0:
        raise ValueError(f"no interior zero at position {i}")
    return Fcf(q[: i - 1] + (q[i - 1] + q[i + 1],) + q[i + 2 :])


def expand_at(f, i: int, x, y) -> Fcf:
    """Reverse rewrite: replace entry ``i`` by ``(x, 0, y)`` where ``x + y`` equals it."""
    q = _as_fcf(f).quotients
    if q[i] != x + y:
        raise ValueError("split does not add up")
    return Fcf(q[:i] + (x, 0, y) + q[i + 1 :])


IDENTITY = FcfClass(Fcf((0, 0)))


def star(f, g) -> FcfClass:
    """Group law: class of the concatenation."""
    a, b = _as_fcf(f), _as_fcf(g)
    if isinstance(f, FcfClass) and isinstance(g, FcfClass):
        return reduce(Fcf(a.quotients + b.quotients))
    return reduce(a + b)


def star_word(f) -> Fcf:
    """The formal inverse word [0, -cn, ..., -c1, 0]."""
    q = _as_fcf(f).quotients
    return Fcf((0,) + tuple(-c for c in reversed(q)) + (0,))


def inverse(f) -> FcfClass:
    return reduce(star_word(f))


def parity(f) -> int:
    """Length of the reduced word modulo 2 (a class invariant)."""
    return len(_as_fcf(f).quotients) % 2


def det_char(f) -> int:
    return -1 if parity(f) else 1


def convergents(f) -> list[tuple]:
    """Pairs (p_k, q_k), k = 1..n, read off the first column of D(c1)...D(ck)."""
    return [tuple(pq) for pq in prefix_columns(list(_as_fcf(f).quotients))]


# ---------------------------------------------------------------------------
# free-product words


class _JLetter:
    __slots__ = ()

    def __repr__(self):
        return "j"

    def __reduce__(self):
        return "J_LETTER"


J_LETTER = _JLetter()


class FreeWord:
    """Alternating word in the order-two letter j and additive letters."""

    __slots__ = ("letters",)

    def __init__(self, letters):
        self.letters = _canonical(letters)

    def __eq__(self, other):
        if isinstance(other, FreeWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return len(self.letters)

    def j_count(self) -> int:
        return sum(1 for x in self.letters if x is J_LETTER)

    def __str__(self):
        parts = []
        for x in self.letters:
            if x is J_LETTER:
                parts.append("j")
            else:
                s = render(x)
                parts.append(s if s.lstrip("-").isdigit() else f"({s})")
        return "".join(parts) if parts else "1"

    def __repr__(self):
        return f"FreeWord({str(self)})"


def _canonical(letters) -> tuple:
    st = []
    for x in letters:
        if x is J_LETTER:
            if st and st[-1] is J_LETTER:
                st.pop()
            else:
                st.append(x)
        else:
            if x == 0:
                continue
            if st and st[-1] is not J_LETTER:
                s = st.pop() + x
                if s != 0:
                    st.append(s)
            else:
                st.append(x)
    return tuple(st)


def to_free_word(f) -> FreeWord:
    """Image under D(x) -> x j."""
    letters = []
    for c in _as_fcf(f).quotients:
        letters.append(c)
        letters.append(J_LETTER)
    return FreeWord(letters)


def from_free_word(w: FreeWord) -> FcfClass:
    """Inverse map: j -> [0] and x -> [x, 0]."""
    q = []
    for x in w.letters:
        if x is J_LETTER:
            q.append(0)
        else:
            q.extend((x, 0))
    if not q:
        return IDENTITY
    return reduce(Fcf(q))


def J() -> FcfClass:
    return FcfClass(Fcf((0,)))


def U(x) -> FcfClass:
    """Class of [x, 0] (upper unipotent image)."""
    return FcfClass(Fcf((x, 0)))


def L(y) -> FcfClass:
    """Class of [0, y] (lower unipotent image)."""
    return FcfClass(Fcf((0, y)))


def ul_factorization(f) -> list[tuple[str, object]]:
    """Write an even class as a product of U(x) and L(y) generators."""
    w = to_free_word(f)
    if w.j_count() % 2:
        raise ValueError("only even classes factor into U and L generators")
    out = []
    seen = 0
    for x in w.letters:
        if x is J_LETTER:
            seen += 1
        else:
            out.append(("U" if seen % 2 == 0 else "L", x))
    return out


def from_ul(factors) -> FcfClass:
    out = IDENTITY
    for kind, x in factors:
        out = star(out, U(x) if kind == "U" else L(x))
    return out
