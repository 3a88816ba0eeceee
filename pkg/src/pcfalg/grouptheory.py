"""Kernel certificates for the map from word classes to matrices, and the
generator relations behind the amalgam presentation of SL2(Z)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cfcore import Fcf, FcfClass, IDENTITY, inverse, reduce, star
from .exactnum import QuadElem, div, is_unit, render
from .matrix2 import Mat2, mat_of_fcf


@dataclass(frozen=True)
class KernelCertificate:
    word: Fcf
    image: Mat2
    verdict: str  # "identity", "negative_identity" or "nontrivial"

    @property
    def class_is_trivial(self) -> bool:
        return reduce(self.word) == IDENTITY

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "image": str(self.image),
            "verdict": self.verdict,
            "class_is_trivial": self.class_is_trivial,
        }


def _verdict(m: Mat2) -> str:
    if m == Mat2.identity():
        return "identity"
    if m == Mat2.scalar(-1):
        return "negative_identity"
    return "nontrivial"


def certify(word) -> KernelCertificate:
    f = word if isinstance(word, Fcf) else Fcf(word)
    m = mat_of_fcf(f)
    return KernelCertificate(f, m, _verdict(m))


def c_element(a) -> FcfClass:
    """c(a) = |[a, -1/a, a]|, mapping to diag(a, -1/a)."""
    if a == 0:
        raise ZeroDivisionError("c(a) needs a nonzero a")
    return reduce([a, -div(1, a), a])


def _cls(*q) -> FcfClass:
    return reduce(list(q))


def k_generator_words(a, b, x) -> dict:
    """The three generator families of the kernel subgroup, as classes."""
    ab = div(1, a * b)
    return {
        "c1_square": star(c_element(1), c_element(1)),
        "c_product": star(star(c_element(a), c_element(b)), star(c_element(ab), c_element(1))),
        "c_commute": star(
            star(star(_cls(x), c_element(a)), _cls(0, a * a * x, 0)), c_element(-a)
        ),
    }


def verify_k_generators(a, b, x) -> bool:
    if a == 0 or b == 0:
        raise ZeroDivisionError("a and b must be invertible")
    ident = Mat2.identity()
    return all(mat_of_fcf(w) == ident for w in k_generator_words(a, b, x).values())


def six_term_word(x, y, z) -> Fcf:
    """[x, y, z, a, w, b] with w = -x - z - xyz, a = xy/w, b = yz/w."""
    w = -x - z - x * y * z
    if x == 0 or y == 0 or z == 0 or w == 0:
        raise ValueError("x, y, z and w must be nonzero")
    return Fcf([x, y, z, div(x * y, w), w, div(y * z, w)])


VARIANTS = ("inverse", "four", "three", "alpha")


def six_term_kernel(x, variant: str, alpha=None) -> KernelCertificate:
    if x == 0:
        raise ZeroDivisionError("x must be nonzero")
    if variant == "inverse":
        f = six_term_word(x, -div(1, x), x)
    elif variant == "four":
        f = six_term_word(x, -div(4, x), x)
    elif variant == "three":
        f = six_term_word(x, -div(3, x), x)
    elif variant == "alpha":
        if alpha is None or alpha == 0:
            raise ZeroDivisionError("the alpha variant needs a nonzero alpha")
        f = six_term_word(x, alpha, -div(1, alpha))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return certify(f)


# small-norm elements of imaginary quadratic rings: (x, claimed |x|^2, variant)
EXCEPTIONS = (
    (QuadElem(1, 1, -1), 2, "four"),
    (QuadElem(Fraction(1, 2), Fraction(1, 2), -7), 2, "four"),
    (QuadElem(0, 1, -2), 2, "four"),
    (QuadElem(Fraction(3, 2), Fraction(1, 2), -3), 3, "three"),
    (QuadElem(1, 1, -2), 3, "three"),
    (QuadElem(Fraction(1, 2), Fraction(1, 2), -11), 3, "three"),
    (QuadElem(0, 1, -3), 3, "three"),
)


def exception_report() -> list:
    out = []
    for x, n2, variant in EXCEPTIONS:
        cert = six_term_kernel(x, variant)
        out.append(
            {
                "x": render(x),
                "norm": x.norm(),
                "claimed_norm": n2,
                "variant": variant,
                "verdict": cert.verdict,
                "nonzero_nonunits": all(c != 0 and not is_unit(c) for c in cert.word),
                "class_is_trivial": cert.class_is_trivial,
            }
        )
    return out


ALPHA = _cls(1, -1)
BETA = _cls(1, -1, 1, 0)


def amalgam_relations(samples=range(-5, 6)) -> dict:
    """Named checks, each True when the identity holds exactly."""
    a, b = ALPHA, BETA
    c1, cm1 = c_element(1), c_element(-1)
    ident = Mat2.identity()
    binv = inverse(b)
    checks = {
        "M(alpha)": mat_of_fcf(a) == Mat2(0, 1, -1, 1),
        "M(beta)": mat_of_fcf(b) == Mat2(0, 1, -1, 0),
        "alpha^3 = c(1)c(-1)": a**3 == star(c1, cm1),
        "beta^2 = c(1)c(-1)^-1": b**2 == star(c1, inverse(cm1)),
        "beta = c(1)[0]": b == star(c1, _cls(0)),
        "c(-1)^-1 = [0,1,-1,1,0]": inverse(cm1) == _cls(0, 1, -1, 1, 0),
        "M(alpha^6) = I": mat_of_fcf(a**6) == ident,
        "M(alpha^3 beta^2) = I": mat_of_fcf(star(a**3, b**2)) == ident,
        "M(beta^4) = I": mat_of_fcf(b**4) == ident,
        "M(c(1)c(-1)) = -I": mat_of_fcf(star(c1, cm1)) == Mat2.scalar(-1),
        "U(-1) = beta^-1 alpha": star(binv, a) == _cls(-1, 0),
        "L(-1) = beta^-1 alpha^2": star(binv, a**2) == _cls(0, -1),
        "c(1)c(-1)c(1)c(-1) = alpha^6": star(star(c1, cm1), star(c1, cm1)) == a**6,
        "c(-1)^2 = beta^-2 alpha^3": star(cm1, cm1) == star(b**-2, a**3),
        "c(1)^2 = beta alpha^-3 beta": star(c1, c1) == star(star(b, a**-3), b),
    }
    ok1 = ok2 = True
    for x in samples:
        X, Xi = _cls(x), inverse(_cls(x))
        lhs = star(star(c1, c1), star(Xi, star(_cls(x - 1, 1, -1, x - 1, 1, -1), X)))
        rhs = star(Xi, star(_cls(x, 1, -1, x, 1, -1), X))
        ok1 = ok1 and lhs == rhs
        lhs = star(star(cm1, cm1), star(Xi, star(_cls(x + 1, -1, 1, x + 1, -1, 1), X)))
        rhs = star(Xi, star(_cls(x, -1, 1, x, -1, 1), X))
        ok2 = ok2 and lhs == rhs
    checks["K(Z) shift identity with c(1)^2"] = ok1
    checks["K(Z) shift identity with c(-1)^2"] = ok2
    return checks
