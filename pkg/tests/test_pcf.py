import functools
import random

import pytest

import gen
from pcfalg import pcf
from pcfalg.cfcore import Fcf, expand_at, reduce
from pcfalg.exactnum import QuadElem, adjoin_sqrt
from pcfalg.matrix2 import Mat2, ProjPoint, QuadPoly, proportion
from pcfalg.pcf import Pcf

R2 = QuadElem(0, 1, 2)
P1 = Pcf([1], [2])
P2 = Pcf([1], [2, 2, 2])
P3 = Pcf([2], [-2, 4])
P5 = Pcf([QuadElem(442, 312, 2)], [QuadElem(-298532, 211094, 2), QuadElem(884, 624, 2)])


def _d_product(word):
    return functools.reduce(lambda m, x: m * Mat2.D(x), word, Mat2.identity())


def test_type_and_terms():
    p = Pcf([3, 0, -3, 4], [0, 1, 0, -5])
    assert p.type == (4, 4)
    assert p.prefix(10) == [3, 0, -3, 4, 0, 1, 0, -5, 0, 1]
    with pytest.raises(ValueError):
        Pcf([1], [])


def test_unfold_examples():
    assert pcf.unfold(Pcf([3, 0, -3, 4], [0, 1, 0, -5])) == Fcf([3, 0, -3, 4, 0, 1, 0, -5, 0, -4, 3, 0, -3, 0])
    assert pcf.unfold(Pcf([], [4, 5, 6])) == Fcf([4, 5, 6])
    assert pcf.unfold(P1) == Fcf([1, 2, 0, -1, 0])


def test_normal_form_examples():
    assert pcf.normal_form(Pcf([3, 0, -3, 4], [0, 1, 0, -5])).reduced_rcf == Pcf([], [0, -4])
    for b in ([], [5], [1, 2, 3]):
        assert pcf.normal_form(Pcf(b, [0, 0])) == pcf.IDENTITY
    assert reduce([1, 2, 0, -1, 0]).reduced == Fcf([1, 1, 0])
    assert pcf.normal_form(P1).reduced_rcf == Pcf([], [1, 1, 0])
    assert pcf.e_matrix(Pcf([], [1, 1, 0])) == pcf.e_matrix(P1)


def test_star_examples():
    assert pcf.star(P1, P3) == pcf.normal_form(Pcf([1], [3, -2, 3]))
    assert pcf.star(pcf.star(P1, P1), P1) == pcf.normal_form(P2)
    assert pcf.star(P1, pcf.inverse(P1)) == pcf.IDENTITY


def test_type1_star_examples():
    assert pcf.type1_star(P1, P3) == Pcf([1], [3, -2, 3])
    assert pcf.type1_star(P1, P1) == Pcf([1], [2, 2])
    ident = Pcf([1], [0, 0])
    assert pcf.normal_form(pcf.type1_star(P1, ident)) == pcf.normal_form(P1)
    with pytest.raises(ValueError):
        pcf.type1_star(Pcf([], [1]), P1)


def test_e_matrix_examples():
    assert pcf.e_matrix(P1) == Mat2.D(1) * Mat2.D(2) * Mat2.D(1).inverse()
    assert pcf.e_matrix(Pcf([1], [3, -2, 3])) == Mat2(-7, -10, -5, -7)


def test_characters_examples():
    chars = {c.root: c.value for c in pcf.characters(P1)}
    assert chars == {ProjPoint(R2): 1 + R2, ProjPoint(-R2): 1 - R2}
    chars = {c.root: c.value for c in pcf.characters(P3)}
    assert chars == {ProjPoint(R2): QuadElem(-3, -2, 2), ProjPoint(-R2): QuadElem(-3, 2, 2)}
    c5 = pcf.characters(P5)
    assert c5[0].value * c5[1].value == 1
    assert c5[0].root == ProjPoint(adjoin_sqrt(2 + R2))


def test_characters_of_identity():
    chars = pcf.characters(pcf.IDENTITY)
    assert [c.value for c in chars] == [1, 1]
    assert all(c.root is None and c.is_unit_norm for c in chars)


def test_subgroup_membership_examples():
    assert pcf.pcf_subgroup_membership(P2, pcf.e_matrix(P1))
    assert pcf.pcf_subgroup_membership(P1, R2)
    assert not pcf.pcf_subgroup_membership(P1, QuadPoly(1, 0, -3))
    assert pcf.pcf_subgroup_membership(P3, P1)


def test_equality_notions():
    p = Pcf([1], [2, 3])
    q = p.retype(1)
    r = p.retype(0, 2)
    assert pcf.cf_equal(p, q) and pcf.cf_equal(p, r)
    assert pcf.k_equal(p, q) and not pcf.k_equal(p, r)
    assert not pcf.equal(p, q) and pcf.equal(p, p)


def test_convergent_p5():
    assert pcf.convergent(P5, 2) == ProjPoint((QuadElem(11502, 8105, 2)) / 52)


# ---------------------------------------------------------------------------
# properties


@pytest.fixture(scope="module")
def pool():
    return gen.pcf_pool(31, 400, kinds=("int", "rat", "quad"), engineered=0.1)


def test_e_matrix_class_invariant(pool):
    rng = random.Random(32)
    for p in pool:
        f = pcf.unfold(p)
        i = rng.randrange(len(f))
        x = gen.entry(rng, "int", 0)
        g = expand_at(f, i, x, f[i] - x)
        assert _d_product(g) == pcf.e_matrix(p)
        m = _d_product(p.initial)
        assert pcf.e_matrix(p) == m * _d_product(p.repeating) * m.inverse()


def test_k_equal_retyping_preserves_invariants(pool):
    rng = random.Random(33)
    for p in pool:
        q = p.retype(rng.randint(1, 4))
        assert pcf.k_equal(p, q)
        assert pcf.e_matrix(p) == pcf.e_matrix(q)
        assert pcf.quad_of(p) == pcf.quad_of(q)
        assert pcf.equivalent(p, q)


@pytest.mark.parametrize("m", [2, 3])
def test_period_multiple(pool, m):
    for p in pool[:150]:
        q = p.retype(0, m)
        assert pcf.e_matrix(p) ** m == pcf.e_matrix(q)
        qa, qb = pcf.quad_of(p), pcf.quad_of(q)
        if not qa.is_zero() and not qb.is_zero():
            assert proportion(qb, qa) is not None


def test_unit_check(pool):
    for p in pool:
        chars = pcf.characters(p)
        det = pcf.e_matrix(p).det()
        assert det == (-1) ** len(pcf.unfold(p))
        assert chars[0].value * chars[1].value == det
        assert chars[0].is_unit_norm


def test_character_multiplicativity_example():
    prod = pcf.type1_star(P1, P3)
    for beta in (ProjPoint(R2), ProjPoint(-R2)):
        assert pcf.character_at(prod, beta) == pcf.character_at(P1, beta) * pcf.character_at(P3, beta)


def test_character_multiplicativity(pool):
    # powers of one PCF share its roots, so characters must multiply
    for p in pool[:200]:
        rs = pcf.roots_of(p)
        if rs.kind == "zero_poly":
            continue
        sq = pcf.star(p, p)
        cube = pcf.star(sq, p)
        for beta in rs.roots:
            lam = pcf.character_at(p, beta)
            assert pcf.character_at(sq, beta) == lam * lam
            assert pcf.character_at(cube, beta) == lam * lam * lam
