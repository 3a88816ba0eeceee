"""Acceptance criteria AC1-AC10.

Each criterion is one or more ``test_acN_*`` functions; the conftest hook
prints a PASS/FAIL line per criterion at the end of the run.
"""
import functools
import itertools
import random
from fractions import Fraction

import pytest

import gen
from pcfalg import cfcore, grouptheory, pcf
from pcfalg.cfcore import Fcf, expand_at, reduce, rewrite_at
from pcfalg.convergence import (
    CONVERGENT,
    STRICTLY_DIVERGENT,
    STRICTLY_QUASI,
    classify,
    float_oracle,
    residue_matrices,
    structural_violations,
)
from pcfalg.exactnum import QuadElem, TowerElem, adjoin_sqrt, div, is_unit
from pcfalg.interval import complex_eval
from pcfalg.matrix2 import Mat2, ProjPoint, QuadPoly, mat_of_fcf, quad_linear_relation
from pcfalg.pcf import Pcf

R2 = QuadElem(0, 1, 2)
P1 = Pcf([1], [2])
P2 = Pcf([1], [2, 2, 2])
P3 = Pcf([2], [-2, 4])
P4 = Pcf([1], [3, -2, 3])
P5 = Pcf([QuadElem(442, 312, 2)], [QuadElem(-298532, 211094, 2), QuadElem(884, 624, 2)])
SQRT2_PT = ProjPoint(R2)
BETA5 = adjoin_sqrt(2 + R2)


def _d_product(word):
    """Left fold of D matrices, independent of the word kernels."""
    return functools.reduce(lambda m, x: m * Mat2.D(x), word, Mat2.identity())


# ---------------------------------------------------------------------------
# AC1


def test_ac1_normal_forms():
    assert reduce([0, -2, 0, 2, 0, 3, 0, 5]).reduced == Fcf([0, 8])
    nf = pcf.normal_form(Pcf([3, 0, -3, 4], [0, 1, 0, -5]))
    assert nf.reduced_rcf == Pcf([], [0, -4])


# ---------------------------------------------------------------------------
# AC2


def test_ac2_matrix_table():
    assert pcf.e_matrix(P1) == Mat2(1, 2, 1, 1)
    assert pcf.e_matrix(P2) == Mat2(7, 10, 5, 7) == pcf.e_matrix(P1) ** 3
    assert pcf.e_matrix(P3) == Mat2(-3, -4, -2, -3)
    assert pcf.e_matrix(P4) == Mat2(-7, -10, -5, -7)
    assert pcf.e_matrix(P5) == Mat2(
        QuadElem(-228487, 161564, 2),
        QuadElem(-174876, 123656, 2),
        QuadElem(-298532, 211094, 2),
        QuadElem(-228487, 161564, 2),
    )
    # E(P) = M_N D(a_1..a_k) M_N^{-1}, via plain D products
    for p in (P1, P2, P3, P4, P5):
        m = _d_product(p.initial)
        assert pcf.e_matrix(p) == m * _d_product(p.repeating) * m.inverse()


# ---------------------------------------------------------------------------
# AC3


def test_ac3_quad_proportionality():
    e1 = pcf.e_matrix(P1)
    for p, lam in ((P2, 5), (P3, -2), (P4, -5)):
        kappa, got, _mu = quad_linear_relation(e1, pcf.e_matrix(p))
        assert (kappa, got) == (1, lam)
        assert pcf.quad_of(p) == pcf.quad_of(P1) * lam
    assert quad_linear_relation(e1, pcf.e_matrix(P2)) == (1, 5, 2)
    target = QuadPoly(1, 0, -2 - R2) * QuadElem(-298532, 211094, 2)
    assert pcf.quad_of(P5) == target


# ---------------------------------------------------------------------------
# AC4


def _char_map(p):
    return {c.root: c.value for c in pcf.characters(p)}


def test_ac4_characters():
    one_p = 1 + R2
    c1 = _char_map(P1)
    assert c1[SQRT2_PT] == one_p and c1[ProjPoint(-R2)] == 1 - R2
    assert one_p * (1 - R2) == -1
    assert _char_map(P2)[SQRT2_PT] == QuadElem(7, 5, 2) == one_p**3
    assert _char_map(P3)[SQRT2_PT] == QuadElem(-3, -2, 2)
    assert _char_map(P4)[SQRT2_PT] == QuadElem(-7, -5, 2) == one_p * QuadElem(-3, -2, 2)
    chars = pcf.characters(P5)
    assert chars[0].value * chars[1].value == 1
    assert chars[0].is_unit_norm
    for c in chars:
        assert isinstance(c.value, TowerElem) and c.value.rel_norm() != 0
        assert is_unit(c.value.rel_norm())
    m11 = QuadElem(-228487, 161564, 2)
    m21 = QuadElem(-298532, 211094, 2)
    assert {c.value for c in chars} == {m11 + m21 * BETA5, m11 - m21 * BETA5}


# ---------------------------------------------------------------------------
# AC5


def test_ac5_star_example():
    assert pcf.star(P1, P3) == pcf.normal_form(Pcf([1], [3, -2, 3]))
    assert pcf.type1_star(P1, P3) == Pcf([1], [3, -2, 3])


@pytest.mark.parametrize("kind", ["int", "rat", "quad"])
def test_ac5_galois_dual_inverts(kind):
    rng = random.Random(55 + len(kind))
    n = 334 if kind != "quad" else 332
    for _ in range(n):
        p = gen.random_pcf(rng, kind, max_n=4, max_k=5)
        dual = pcf.galois_dual(p)
        assert pcf.star(p, dual) == pcf.IDENTITY
        assert pcf.star(dual, p) == pcf.IDENTITY
        assert pcf.e_matrix(p) * pcf.e_matrix(dual) == Mat2.identity()


# ---------------------------------------------------------------------------
# AC6


def test_ac6_worked_examples_classification():
    for p in (P1, P2, P3, P4):
        rep = classify(p)
        assert rep.behavior == CONVERGENT
        assert rep.limit == SQRT2_PT
    rep = classify(P5)
    assert rep.behavior == CONVERGENT
    assert rep.limit == ProjPoint(BETA5)
    assert pcf.convergent(P5, 2) == ProjPoint(div(QuadElem(11502, 8105, 2), 52))


# ---------------------------------------------------------------------------
# AC7


def test_ac7_split_family():
    rng = random.Random(7)
    for _ in range(50):
        a = gen.small_rat(rng)
        b = gen.small_rat(rng) or Fraction(1, 3)
        rep = classify(Pcf([a, b], [0, 0]))
        assert rep.behavior == STRICTLY_DIVERGENT
        assert rep.limits() == [ProjPoint(a), ProjPoint(a + 1 / b)]


@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(-2, 3), Fraction(1, 7), QuadElem(0, 1, 2) - 1])
def test_ac7_small_a_family(a):
    rep = classify(Pcf([], [a, 0, -div(1, a)]))
    assert rep.behavior == STRICTLY_QUASI
    assert rep.limits() == [ProjPoint(a), ProjPoint(-div(1, a)), ProjPoint(-div(1, a))]
    q = classify(Pcf([], [a - div(1, a)]))
    assert q.behavior == CONVERGENT and q.limit == ProjPoint(-div(1, a))


@pytest.mark.parametrize("k", [3, 5, 7, 9])
@pytest.mark.parametrize("c", [2, -3, Fraction(1, 2), Fraction(5, 3)])
def test_ac7_slim_majority(k, c):
    for a, b in ((0, 1), (2, -1), (Fraction(1, 2), 3)):
        rep = classify(Pcf([a, b], [c, -div(1, c), c] + [0] * (k - 3)))
        assert rep.behavior == STRICTLY_QUASI
        assert rep.majority[:2] == (k, (k + 1) // 2)


def _fib(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@pytest.mark.parametrize("k", range(4, 11))
def test_ac7_fibonacci(k):
    f1, f2 = _fib(k - 1), _fib(k - 2)
    for a, b in ((0, 1), (1, 2), (-3, Fraction(1, 2)), (Fraction(2, 5), -4)):
        rep = classify(Pcf([a, b], [1] * (k - 1) + [Fraction(-f2, f1)]))
        assert rep.behavior == STRICTLY_QUASI
        assert rep.majority[:2] == (k, k - 1)
        assert rep.eigen.minus == ProjPoint(a + Fraction(1) / b)
        assert rep.eigen.plus == ProjPoint(a + Fraction(f1) / (b * f1 + f2))


# ---------------------------------------------------------------------------
# AC8: property suites


@functools.lru_cache(maxsize=None)
def _terminals(word):
    """All irreducible words reachable by rewriting, explored exhaustively."""
    zeros = [i for i in range(1, len(word) - 1) if word[i] == 0]
    if not zeros:
        return frozenset([word])
    out = set()
    for i in zeros:
        out |= _terminals(word[: i - 1] + (word[i - 1] + word[i + 1],) + word[i + 2 :])
    return frozenset(out)


def test_ac8_confluence_exhaustive():
    alphabet = (-2, -1, 0, 1, 2)
    count = 0
    for n in range(1, 7):
        for w in itertools.product(alphabet, repeat=n):
            ends = _terminals(w)
            assert len(ends) == 1
            assert reduce(list(w)).reduced == Fcf(next(iter(ends)))
            count += 1
    assert count >= 10**4


def test_ac8_confluence_random_paths():
    rng = random.Random(81)
    for _ in range(10**4):
        f = Fcf(gen.word(rng, rng.randint(1, 14), rng.choice(("int", "rat")), 0.45))
        g = f
        while True:
            zs = cfcore.interior_zeros(g)
            if not zs:
                break
            g = rewrite_at(g, rng.choice(zs))
        assert g == reduce(f).reduced


def test_ac8_homomorphism_and_det():
    rng = random.Random(82)
    for _ in range(10**4):
        kind = rng.choice(("int", "int", "rat", "quad"))
        f = gen.word(rng, rng.randint(1, 8), kind)
        g = gen.word(rng, rng.randint(1, 8), kind)
        mf, mg = mat_of_fcf(f), mat_of_fcf(g)
        assert mat_of_fcf(f + g) == mf * mg
        assert mf == _d_product(f)
        assert mf.det() == (-1) ** len(f)
        assert mat_of_fcf(reduce(f)) == mf


def _rotation_oracle(rep):
    k = len(rep)
    return [_d_product(rep[j:] + rep[:j]) for j in range(1, k + 1)]


@pytest.fixture(scope="module")
def engineered_pool():
    return gen.pcf_pool(83, 10**4, kinds=("int", "int", "rat", "rat", "quad"), engineered=0.6)


def test_ac8_heavy_nonadjacent_and_zero_forcing(engineered_pool):
    seen_heavy = seen_pairs = 0
    for n, p in enumerate(engineered_pool):
        res = residue_matrices(p)
        a, k = list(p.repeating), p.k
        if n % 4 == 0:
            assert [r.matrix for r in res] == _rotation_oracle(a)
        heavy = [r.heavy for r in res]
        seen_heavy += any(heavy)
        for j in range(k):
            if heavy[j] and k > 1:
                assert not heavy[(j + 1) % k]
            if heavy[j] and heavy[(j + 2) % k]:
                seen_pairs += 1
                assert a[(j + 2) % k] == 0
    assert seen_heavy > 1000 and seen_pairs > 100


@pytest.fixture(scope="module")
def classified_pool(engineered_pool):
    return [(p, classify(p)) for p in engineered_pool]


def _rewrite(rng, p):
    """An equivalent PCF: an expansion x,0,y of one entry, a 0,0 insertion,
    or a retyping with the same period length."""
    move = rng.randrange(4)
    if move == 0:
        return p.retype(rng.randint(1, 3))
    part = "initial" if (move == 1 and p.N) else "repeating"
    seq = list(getattr(p, part))
    i = rng.randrange(len(seq))
    if move == 3:
        seq[i + 1 : i + 1] = [0, 0]
    else:
        x = gen.entry(rng, "int", 0.2)
        seq = list(expand_at(Fcf(seq), i, x, seq[i] - x))
    if part == "initial":
        return Pcf(seq, p.repeating)
    return Pcf(p.initial, seq)


def test_ac8_equivalence_respects_quasiconvergence(classified_pool):
    rng = random.Random(84)
    both_conv = 0
    for p, rp in classified_pool:
        q = _rewrite(rng, p)
        assert pcf.equivalent(p, q)
        rq = classify(q)
        assert rp.quasiconvergent == rq.quasiconvergent
        if rp.behavior == CONVERGENT and rq.behavior == CONVERGENT:
            both_conv += 1
            assert rp.limit == rq.limit
    assert both_conv > 1000


def _strict_majority(rep):
    if not all(r.has_limit for r in rep.residues):
        return False
    lims = rep.limits()
    best = max(sum(1 for y in lims if y == x) for x in lims)
    return len(lims) < 2 * best < 2 * len(lims)


def test_ac8_strict_quasiconvergence_structure(classified_pool):
    sq = 0
    for p, rep in classified_pool:
        assert (rep.behavior == STRICTLY_QUASI) == _strict_majority(rep)
        assert structural_violations(rep) == []
        sq += rep.behavior == STRICTLY_QUASI
    assert sq > 1000


# ---------------------------------------------------------------------------
# AC9


def test_ac9_k_generators():
    rng = random.Random(9)
    samples = []
    for _ in range(20):
        samples.append(tuple(rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(2)) + (rng.randint(-5, 5),))
        samples.append((gen.small_rat(rng) or 1, gen.small_rat(rng) or -1, gen.small_rat(rng)))
        a = gen.small_quad(rng) or R2
        b = gen.small_quad(rng) or 1 + R2
        samples.append((a, b, gen.small_quad(rng)))
    for a, b, x in samples:
        assert grouptheory.verify_k_generators(a, b, x)
        for w in grouptheory.k_generator_words(a, b, x).values():
            assert _d_product(w.reduced) == Mat2.identity()


def test_ac9_exception_table():
    rows = grouptheory.exception_report()
    assert len(rows) == len(grouptheory.EXCEPTIONS)
    for row in rows:
        assert row["verdict"] == "identity"
        assert row["norm"] == row["claimed_norm"]
        assert row["claimed_norm"] in (2, 3)
        assert row["nonzero_nonunits"]
        assert not row["class_is_trivial"]
    for x, _, variant in grouptheory.EXCEPTIONS:
        cert = grouptheory.six_term_kernel(x, variant)
        assert _d_product(list(cert.word)) == Mat2.identity()


def test_ac9_amalgam():
    checks = grouptheory.amalgam_relations()
    assert all(checks.values()), [k for k, v in checks.items() if not v]
    binv = cfcore.inverse(grouptheory.BETA)
    assert cfcore.star(binv, grouptheory.ALPHA).reduced == Fcf([-1, 0])
    assert cfcore.star(binv, grouptheory.ALPHA**2).reduced == Fcf([0, -1])


# ---------------------------------------------------------------------------
# AC10


def _gap_ratio(rep):
    lp = complex_eval(rep.eigen.lam_plus, 96).abs2()
    lm = complex_eval(rep.eigen.lam_minus, 96).abs2()
    return float(lp.lo_q / lm.hi_q) ** 0.5


def test_ac10_oracle_agreement():
    rng = random.Random(10)
    checked = 0
    worst = 0.0
    while checked < 200:
        p = gen.random_pcf(rng, "int", max_n=3, max_k=4)
        rep = classify(p)
        if rep.behavior != CONVERGENT or rep.eigen.kind != "gap" or _gap_ratio(rep) <= 1.001:
            continue
        oracle = float_oracle(p, 1000, 128, stop_tol=1e-15)
        for o in oracle:
            assert o.periods <= 1000
            d = o.distance_to(rep.limit, 256)
            worst = max(worst, d)
            assert d < 1e-9, (str(p), o)
        checked += 1
    assert worst < 1e-9


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
