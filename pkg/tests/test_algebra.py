import random
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hibi.algebra import (
    CERTIFIED, INCONCLUSIVE, DegreeDropped, ModulusMismatch, NoAdmissiblePrime,
    NotPrimeModulus, NotSquarefree, UniPolyP, UniPolyQ, degree_pattern,
    factor_mod_p, feasible_factor_degrees, irreducibility_certificate,
    reduction_pattern, squarefree_mod_p, upoly_gcd_mod_p, x_d_minus_x_minus_1,
)

F18 = x_d_minus_x_minus_1(18)


def P(coeffs, p):
    return UniPolyP.from_ints(coeffs, p)


def from_balanced(text_coeffs, p):
    """Coefficients listed highest degree first."""
    return P(list(reversed(text_coeffs)), p)


def test_gcd_common_root():
    assert upoly_gcd_mod_p(P([-1, 0, 1], 5), P([-1, 1], 5)) == P([4, 1], 5)


def test_gcd_with_zero_is_monic_input():
    f = P([1, 2, 3], 5)
    assert upoly_gcd_mod_p(f, P([], 5)) == f.monic()


def test_gcd_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        upoly_gcd_mod_p(P([1, 1], 3), P([1, 1], 5))


@pytest.mark.parametrize("p", [3, 5])
def test_gcd_f_fprime_is_one_matches_discriminant(p):
    # independent oracle: f is squarefree mod p iff p does not divide disc(f)
    x = sympy.symbols("x")
    disc = sympy.discriminant(x**18 - x - 1, x)
    assert disc % p != 0
    fp = F18.reduce(p)
    assert upoly_gcd_mod_p(fp, fp.derivative()) == P([1], p)


def test_squarefree_examples():
    assert squarefree_mod_p(P([-1, 0, 1], 5))
    assert not squarefree_mod_p(P([1, -2, 1], 5))
    assert squarefree_mod_p(F18.reduce(3))


def test_factor_published_mod3():
    fl = factor_mod_p(F18.reduce(3))
    expected = {
        from_balanced([1, -1, -1], 3),
        from_balanced([1, -1, 0, 1], 3),
        from_balanced([1, -1, 1, 0, 0, 1, -1, -1, -1, 1, 1, -1, 0, 1], 3),
    }
    assert fl.unit.residue == 1
    assert {g for g, m in fl.factors} == expected
    assert all(m == 1 for _, m in fl.factors)


def test_factor_published_mod5():
    fl = factor_mod_p(F18.reduce(5))
    big = from_balanced([1, -2, -1, 2, 1, -2, -1, 2, 1, -2, -1, 2, 1, -2, -1, 2, 1, 2], 5)
    assert [g for g, _ in fl.factors] == [P([2, 1], 5), big]


def test_factor_x2_minus_1():
    fl = factor_mod_p(P([-1, 0, 1], 5))
    assert [g for g, _ in fl.factors] == [P([1, 1], 5), P([4, 1], 5)]


def test_factor_canonical_order_and_multiplicity():
    f = P([1, 1], 7) ** 3 * P([1, 0, 1], 7) * 3
    fl = factor_mod_p(f)
    assert fl.unit.residue == 3
    assert [(g.degree, m) for g, m in fl.factors] == [(1, 3), (2, 1)]


def test_factor_inseparable_char_2():
    # (X^2 + X + 1)^2 = X^4 + X^2 + 1 over F_2 has zero derivative
    f = P([1, 0, 1, 0, 1], 2)
    assert f.derivative().is_zero()
    fl = factor_mod_p(f)
    assert fl.factors == ((P([1, 1, 1], 2), 2),)


def test_degree_patterns():
    assert degree_pattern(F18.reduce(3)) == (2, 3, 13)
    assert degree_pattern(F18.reduce(5)) == (1, 17)
    assert degree_pattern(P([1, 0, 1], 3)) == (2,)


def test_degree_pattern_errors():
    with pytest.raises(NotSquarefree):
        degree_pattern(P([1, -2, 1], 5))
    with pytest.raises(DegreeDropped):
        reduction_pattern(UniPolyQ((1, 0, 3)), 3)


def test_not_prime_modulus():
    with pytest.raises(NotPrimeModulus, match="modulus must be prime"):
        P([1, 1], 4)


@pytest.mark.parametrize("pattern, expected", [
    ((2, 3, 13), {0, 2, 3, 5, 13, 15, 16, 18}),
    ((1, 17), {0, 1, 17, 18}),
    ((), {0}),
])
def test_feasible_degrees(pattern, expected):
    assert feasible_factor_degrees(pattern) == expected


def test_certificate_published_pair():
    cert = irreducibility_certificate(F18, [3, 5])
    assert cert.verdict == CERTIFIED
    assert cert.intersection == frozenset()
    proper = [{e for e in w.feasible if 0 < e < 18} for w in cert.witnesses]
    assert proper == [{2, 3, 5, 13, 15, 16}, {1, 17}]


def test_certificate_reducible_inconclusive():
    assert irreducibility_certificate(UniPolyQ((-1, 0, 1)), [3, 5]).verdict == INCONCLUSIVE


def test_certificate_x4_plus_1_inconclusive():
    f = UniPolyQ((1, 0, 0, 0, 1))
    for p in (3, 5, 7, 11, 13):
        assert 2 in factor_mod_p(f.reduce(p)).degrees()
    assert irreducibility_certificate(f, [3, 5, 7, 11, 13]).verdict == INCONCLUSIVE


def test_certificate_skips_bad_primes():
    # X^2 + 1 is not squarefree mod 2; mod 3 it is irreducible
    cert = irreducibility_certificate(UniPolyQ((1, 0, 1)), [2, 3])
    assert [w.prime for w in cert.witnesses] == [3]
    assert cert.rejected == ((2, "not squarefree"),)
    assert cert.verdict == CERTIFIED
    with pytest.raises(NoAdmissiblePrime):
        irreducibility_certificate(UniPolyQ((1, 0, 1)), [2])


# -- properties

PRIMES = [2, 3, 5, 7, 101]


@st.composite
def polys_mod_p(draw, max_degree=12):
    p = draw(st.sampled_from(PRIMES))
    coeffs = draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=max_degree + 1))
    f = UniPolyP.from_ints(coeffs, p)
    if f.is_zero():
        f = UniPolyP.constant(1, p)
    return f


@settings(max_examples=150, deadline=None)
@given(polys_mod_p(), st.integers(0, 2**32))
def test_reassembly(f, seed):
    fl = factor_mod_p(f, seed)
    assert fl.expand() == f
    assert all(g.is_monic() and g.degree >= 1 for g, _ in fl.factors)
    assert len({g for g, _ in fl.factors}) == len(fl.factors)
    keys = [g.sort_key() for g, _ in fl.factors]
    assert keys == sorted(keys)


@settings(max_examples=150, deadline=None)
@given(polys_mod_p(), st.integers(0, 2**32), st.integers(0, 2**32))
def test_seed_independence(f, s1, s2):
    assert factor_mod_p(f, s1) == factor_mod_p(f, s2)


@settings(max_examples=150, deadline=None)
@given(polys_mod_p())
def test_pattern_consistency_and_sum(f):
    if f.degree < 1 or not squarefree_mod_p(f):
        return
    pat = degree_pattern(f)
    assert sorted(pat) == factor_mod_p(f).degrees()
    assert sum(pat) == f.degree


@settings(max_examples=60, deadline=None)
@given(polys_mod_p(max_degree=6))
def test_factors_are_irreducible_by_brute_force(f):
    # no monic factor of degree <= deg/2 divides any returned factor
    p = f.p
    for g, _ in factor_mod_p(f).factors:
        for k in range(1, g.degree // 2 + 1):
            if p ** k > 2000:
                break
            for tail in product(range(p), repeat=k):
                h = UniPolyP(tail + (1,), p)
                assert not (g % h).is_zero()


# -- certificate soundness against exhaustive trial factorization over Z

def _divisors(n):
    n = abs(n)
    ds = [d for d in range(1, n + 1) if n % d == 0]
    return ds + [-d for d in ds]


def has_proper_factor(coeffs):
    """Monic integer f of degree <= 6: search every monic factor of degree
    1..3.  A factor g satisfies g(a) | f(a) at a = 0, 1, -1, and for
    degree <= 3 those three values pin g down (Kronecker)."""
    x = sympy.symbols("x")
    f = sympy.Poly(list(reversed(coeffs)), x)
    d = f.degree()
    vals = {a: int(f.eval(a)) for a in (0, 1, -1)}
    if any(v == 0 for v in vals.values()):
        return d > 1
    for k in range(1, d // 2 + 1):
        for v0 in _divisors(vals[0]):
            for v1 in _divisors(vals[1]):
                for vm in _divisors(vals[-1]):
                    if k == 1:
                        # x + c with c = v0; check the other values
                        c = v0
                        if 1 + c != v1 or -1 + c != vm:
                            continue
                        g = sympy.Poly(x + c, x)
                    elif k == 2:
                        c = v0
                        b = v1 - 1 - c
                        if 1 - b + c != vm:
                            continue
                        g = sympy.Poly(x**2 + b * x + c, x)
                    else:
                        c = v0
                        s, t = v1 - 1 - c, vm + 1 - c  # a + b, a - b
                        if (s + t) % 2:
                            continue
                        a, b = (s + t) // 2, (s - t) // 2
                        g = sympy.Poly(x**3 + a * x**2 + b * x + c, x)
                    if f.rem(g).is_zero:
                        return True
    return False


def test_kronecker_oracle_sanity():
    assert has_proper_factor([-1, 0, 1])
    assert has_proper_factor([1, 0, 0, 0, 1]) is False
    assert has_proper_factor([1, 0, 2, 0, 1])  # (x^2+1)^2
    assert has_proper_factor([2, 4, 5, 3, 1])  # (x^2+x+1)(x^2+2x+2)
    x = sympy.symbols("x")
    rng = random.Random(7)
    for _ in range(150):
        cs = [rng.randint(-3, 3) for _ in range(rng.randint(2, 6))] + [1]
        _, factors = sympy.factor_list(sympy.Poly(list(reversed(cs)), x))
        expect = len(factors) > 1 or factors[0][1] > 1
        assert has_proper_factor(cs) == expect


def test_certificate_soundness_random_corpus():
    rng = random.Random(2024)
    primes = [2, 3, 5, 7, 11, 13, 17, 19]
    certified = 0
    for _ in range(1500):
        d = rng.randint(2, 6)
        cs = [rng.randint(-3, 3) for _ in range(d)] + [1]
        f = UniPolyQ(tuple(cs))
        try:
            cert = irreducibility_certificate(f, primes)
        except NoAdmissiblePrime:
            continue
        if cert.verdict == CERTIFIED:
            certified += 1
            assert not has_proper_factor(cs), cs
    assert certified > 300
