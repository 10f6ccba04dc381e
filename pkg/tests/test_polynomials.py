import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hendecafold.polynomials import (
    IdenticallyZeroDenominator,
    RatFunc,
    RatPoly,
    X,
    count_real_roots,
    isolate_real_roots,
    poly_gcd,
    ratfunc_substitute,
    refine_root,
    sturm_chain,
)

# the hendecagon quintic, ascending coefficients
QUINTIC = RatPoly.of(1, 3, -3, -4, 1, 1)


def bisect_oracle(f, lo, hi, tol=1e-12):
    """Plain float bisection, independent of the Sturm machinery."""
    flo = f(lo)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


# -- ring arithmetic ------------------------------------------------------

def test_eval_quintic_at_one():
    # 1 + 1 - 4 - 3 + 3 + 1 summed by hand
    assert QUINTIC(1) == -1
    assert QUINTIC(0) == 1
    assert QUINTIC(-1) == -1


def test_compose_square_with_shift():
    assert (X * X).compose(X + 1) == RatPoly.of(1, 2, 1)


def test_derivative_power():
    assert RatPoly.of(0, 0, 0, 0, 0, 1).derivative() == RatPoly.of(0, 0, 0, 0, 5)


def test_divmod_roundtrip():
    a = RatPoly.of(2, -3, 0, 1, 5)
    b = RatPoly.of(1, 1, 2)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_zero_poly_properties():
    z = RatPoly()
    assert z.is_zero and z.degree == -1
    assert (z + QUINTIC) == QUINTIC
    with pytest.raises(ZeroDivisionError):
        divmod(QUINTIC, z)


@given(st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6),
                max_size=5),
       st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=6),
                max_size=5))
def test_mul_matches_pointwise_eval(ca, cb):
    a, b = RatPoly(ca), RatPoly(cb)
    prod = a * b
    for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 3)):
        assert prod(x) == a(x) * b(x)


def test_gcd_of_shared_factor():
    shared = RatPoly.of(-1, 1)          # x - 1
    a = shared * RatPoly.of(2, 0, 1)
    b = shared * RatPoly.of(-3, 1)
    assert poly_gcd(a, b) == shared.monic()


# -- rational functions ----------------------------------------------------

def test_ratfunc_reduces_to_lowest_terms():
    f = RatFunc(RatPoly.of(-1, 0, 1), RatPoly.of(1, 1))  # (x^2-1)/(x+1)
    assert f.num == RatPoly.of(-1, 1)
    assert f.den == RatPoly.of(1)


def test_ratfunc_den_monic():
    f = RatFunc(RatPoly.of(1), RatPoly.of(2, 4))
    assert f.den.lc == 1
    assert f(Fraction(1)) == Fraction(1, 6)


def test_substitute_constant_and_identity():
    const = RatFunc.constant(Fraction(5, 2))
    assert ratfunc_substitute(const, RatFunc.constant(9)) == const
    sq = RatFunc(X * X)
    assert ratfunc_substitute(sq, RatFunc(X)) == sq


def test_substitute_eliminates_to_quintic():
    # s(t) = -t/(t^2-1) - 3/2 pushed through (2s^2 - 13/2)/(2s + 3),
    # then compared against -t^2: clearing denominators yields the quintic.
    s_of_t = RatFunc(RatPoly.of(Fraction(3, 2), -1, Fraction(-3, 2)),
                     RatPoly.of(-1, 0, 1))
    target = RatFunc(RatPoly.of(Fraction(-13, 2), 0, 2), RatPoly.of(3, 2))
    image = ratfunc_substitute(target, s_of_t)
    difference = image - RatFunc(-(X * X))
    assert difference.num.monic() == QUINTIC
    assert difference.den == RatPoly.of(0, -1, 0, 1)  # t*(t^2 - 1), monic


def test_substitute_zero_denominator():
    f = RatFunc(RatPoly.of(1), RatPoly.of(-1, 0, 1))  # 1/(x^2-1)
    with pytest.raises(IdenticallyZeroDenominator):
        ratfunc_substitute(f, RatFunc.constant(1))


@given(st.fractions(min_value=-5, max_value=5, max_denominator=8),
       st.fractions(min_value=-5, max_value=5, max_denominator=8))
def test_ratfunc_field_ops_agree_with_eval(p, q):
    f = RatFunc(X + p, X * X + 1)
    g = RatFunc(RatPoly.of(q, 0, 1), X + 7)
    x = Fraction(1, 2)
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)
    assert (f - g)(x) == f(x) - g(x)


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5),
                min_size=1, max_size=4),
       st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=5),
                min_size=2, max_size=4))
def test_ratfunc_always_coprime_and_monic(num_coeffs, den_coeffs):
    num, den = RatPoly(num_coeffs), RatPoly(den_coeffs)
    if den.is_zero:
        return
    f = RatFunc(num, den)
    assert f.den.is_zero is False
    assert f.den.lc == 1
    assert poly_gcd(f.num, f.den).degree <= 0


# -- root isolation ---------------------------------------------------------

def test_quintic_has_exactly_five_real_roots():
    ivs = isolate_real_roots(QUINTIC)
    assert len(ivs) == 5
    assert all(iv.multiplicity_free for iv in ivs)
    assert count_real_roots(QUINTIC) == 5


def test_no_real_roots():
    assert isolate_real_roots(RatPoly.of(1, 0, 1)) == []
    assert count_real_roots(RatPoly.of(1, 0, 1)) == 0


def test_sqrt2_brackets():
    ivs = isolate_real_roots(RatPoly.of(-2, 0, 1))
    assert len(ivs) == 2
    roots = sorted(refine_root(RatPoly.of(-2, 0, 1), iv) for iv in ivs)
    oracle = bisect_oracle(lambda x: x * x - 2, 1.0, 2.0)
    assert abs(roots[1] - oracle) < 1e-12
    assert abs(roots[0] + oracle) < 1e-12


def test_refine_quintic_largest_root():
    ivs = isolate_real_roots(QUINTIC)
    largest = refine_root(QUINTIC, ivs[-1])
    assert abs(largest - 2 * math.cos(2 * math.pi / 11)) < 1e-12


def test_all_five_roots_match_vertex_cosines():
    ivs = isolate_real_roots(QUINTIC)
    roots = sorted(refine_root(QUINTIC, iv) for iv in ivs)
    expected = sorted(2 * math.cos(2 * math.pi * k / 11) for k in range(1, 6))
    assert len(roots) == len(expected)
    for r, e in zip(roots, expected):
        assert abs(r - e) < 1e-12


def test_refined_root_stays_in_interval():
    for iv in isolate_real_roots(QUINTIC):
        r = refine_root(QUINTIC, iv)
        assert float(iv.lo) <= r <= float(iv.hi)


def test_rational_root_hit_exactly():
    p = RatPoly.of(Fraction(-1, 2), 1)  # x - 1/2
    (iv,) = isolate_real_roots(p)
    assert refine_root(p, iv) == 0.5


def test_repeated_roots_isolated_once():
    p = RatPoly.of(-1, 1) * RatPoly.of(-1, 1) * RatPoly.of(2, 1)
    ivs = isolate_real_roots(p)
    assert len(ivs) == 2
    assert not ivs[0].multiplicity_free


def test_sturm_chain_shape():
    chain = sturm_chain(QUINTIC)
    assert chain[0] == QUINTIC.monic()
    assert chain[1] == QUINTIC.derivative().monic()
    degrees = [q.degree for q in chain]
    assert degrees == sorted(degrees, reverse=True)


@settings(deadline=None, max_examples=60)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=4),
                min_size=1, max_size=6))
def test_sturm_count_matches_sign_scan(roots):
    # build a polynomial from known rational roots, possibly repeated
    p = RatPoly.of(1)
    for r in roots:
        p = p * RatPoly.of(-r, 1)
    assert count_real_roots(p) == len(set(roots))
    # brute-force scan: count sign changes of the square-free part on a fine
    # grid over the root region; distinct generated roots differ by >= 1/12,
    # far above the 0.0025 grid spacing
    g = p.square_free_part()
    n = 4001
    xs = [-5.0 + 10.0 * i / (n - 1) for i in range(n)]
    crossings, prev_sign = 0, None
    for v in (g(x) for x in xs):
        if v == 0.0:
            crossings += 1
            prev_sign = None
            continue
        sign = v > 0
        if prev_sign is not None and sign != prev_sign:
            crossings += 1
        prev_sign = sign
    assert crossings == len(set(roots))


@settings(deadline=None, max_examples=40)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3),
                min_size=1, max_size=5, unique=True))
def test_refined_roots_stay_bracketed_and_accurate(roots):
    p = RatPoly.of(1)
    for r in roots:
        p = p * RatPoly.of(-r, 1)
    ivs = isolate_real_roots(p)
    assert len(ivs) == len(roots)
    for iv, expected in zip(ivs, sorted(roots)):
        refined = refine_root(p, iv)
        assert float(iv.lo) <= refined <= float(iv.hi)
        assert abs(refined - float(expected)) < 1e-11


def test_isolation_intervals_disjoint_and_certified():
    for p in (QUINTIC, RatPoly.of(0, -1, 0, 1), RatPoly.of(-6, 11, -6, 1)):
        ivs = isolate_real_roots(p)
        for a, b in zip(ivs, ivs[1:]):
            assert a.hi <= b.lo
        for iv in ivs:
            assert count_real_roots(p, iv.lo, iv.hi) == 1
            assert p(iv.lo) != 0 and p(iv.hi) != 0
