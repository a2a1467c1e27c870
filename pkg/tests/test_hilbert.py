import random

import pytest
from hypothesis import given, settings, strategies as st

from hibi.groebner import Ideal, Ring, homogenize_ideal
from hibi.hilbert import (
    MonomialIdeal, NegativePoleOrder, NotArtinian, PoincareSeries, h_vector,
    hilbert_numerator, lam_mul, lt_ideal, one_minus_lambda_power, order_ideal,
    pivot_variable, poincare_series, reduce_poincare, series_coefficients,
    standard_monomials,
)

Q18 = (1, 3, 5, 4, 4, 1)


@pytest.fixture(scope="module")
def m18():
    R = Ring(("X", "Y", "Z"))
    X, Y, Z = R.gens()
    return homogenize_ideal(Ideal(R, (X ** 18 - X - 1, Y - X ** 3, Z - X * Y)), "W")


def test_lt_ideal_of_m(m18):
    M = lt_ideal(m18.groebner())
    want = {(1, 1, 0, 0), (3, 0, 0, 0), (2, 0, 1, 0), (0, 3, 0, 0),
            (0, 2, 3, 0), (0, 1, 4, 0), (0, 0, 5, 0)}
    assert set(M.generators) == want


def test_lt_ideal_trivial():
    R = Ring(("X", "Y"))
    assert set(lt_ideal(Ideal(R, R.gens()).groebner()).generators) == {(1, 0), (0, 1)}
    assert lt_ideal(Ideal(R, ()).groebner()).generators == ()


def test_minimal_generators():
    M = MonomialIdeal(2, [(1, 0), (2, 0), (1, 1), (0, 3)])
    assert set(M.generators) == {(1, 0), (0, 3)}


def test_numerator_trivial():
    assert hilbert_numerator(MonomialIdeal(3, ())) == [1]
    assert hilbert_numerator(MonomialIdeal(1, [(1,)])) == [1, -1]
    assert hilbert_numerator(MonomialIdeal(2, [(0, 0)])) == []


def test_numerator_m(m18):
    N = hilbert_numerator(lt_ideal(m18.groebner()))
    assert N == lam_mul(list(Q18), one_minus_lambda_power(3))


def test_reduce_examples():
    S = reduce_poincare(one_minus_lambda_power(4), 4)
    assert (S.numerator, S.pole_order) == ((1,), 0)
    S = reduce_poincare(lam_mul(list(Q18), one_minus_lambda_power(3)), 4)
    assert (S.numerator, S.pole_order) == (Q18, 1)
    S = reduce_poincare(lam_mul(list(Q18), one_minus_lambda_power(3)), 5)
    assert (S.numerator, S.pole_order) == (Q18, 2)
    with pytest.raises(NegativePoleOrder):
        reduce_poincare(one_minus_lambda_power(3), 2)


def test_h_vector_examples():
    h = h_vector(PoincareSeries(Q18, 1))
    assert h.entries == Q18 and h.dimension == 1 and h.multiplicity == 18
    h = h_vector(poincare_series(MonomialIdeal(3, ())))
    assert h.entries == (1,) and h.dimension == 3 and h.multiplicity == 1


def test_series_coefficients_examples():
    assert series_coefficients(PoincareSeries((1,), 2), 3) == [1, 2, 3, 4]
    assert series_coefficients(PoincareSeries(Q18, 1), 6) == [1, 4, 9, 13, 17, 18, 18]
    assert series_coefficients(PoincareSeries((1, 1), 0), 3) == [1, 1, 0, 0]
    with pytest.raises(ValueError):
        series_coefficients(PoincareSeries((1,), 0), -1)


def test_standard_monomials_examples(m18):
    assert standard_monomials(MonomialIdeal(2, [(1, 0), (0, 1)]), 4)[0] == [1, 0, 0, 0, 0]
    assert standard_monomials(MonomialIdeal(2, ()), 2)[0] == [1, 2, 3]
    # set W = 0: drop the last coordinate of LT(M)
    lt = lt_ideal(m18.groebner())
    image = MonomialIdeal(3, [g[:3] for g in lt.generators])
    assert standard_monomials(image, 6)[0] == [1, 3, 5, 4, 4, 1, 0]


def test_order_ideal_trivial():
    oi = order_ideal(MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    assert oi.monomials == ((0, 0, 0),) and oi.maximal == ((0, 0, 0),) and oi.pure
    with pytest.raises(NotArtinian):
        order_ideal(MonomialIdeal(2, ()))


def test_order_ideal_is_divisor_closed():
    M = MonomialIdeal(3, [(1, 1, 0), (3, 0, 0), (2, 0, 1), (0, 3, 0), (0, 2, 3), (0, 1, 4), (0, 0, 5)])
    oi = order_ideal(M)
    s = set(oi.monomials)
    for m in s:
        for i in range(3):
            if m[i]:
                assert tuple(e - (j == i) for j, e in enumerate(m)) in s
    assert len(oi) == sum(poincare_series(M).numerator) == 18
    assert oi.maximal_degrees == (2, 4, 4, 5) and not oi.pure


# -- randomized oracle suite

def random_monomial_ideal(rng: random.Random) -> MonomialIdeal:
    n = rng.randint(1, 5)
    gens = []
    for _ in range(rng.randint(0, 6)):
        d = rng.randint(1, 6)
        m = [0] * n
        for _ in range(d):
            m[rng.randrange(n)] += 1
        gens.append(tuple(m))
    return MonomialIdeal(n, gens)


def _unreduced_coefficients(N, n, D):
    # expand N / (1 - lambda)^n directly
    return series_coefficients(PoincareSeries(tuple(N), n), D) if N else [0] * (D + 1)


def test_oracle_random_corpus():
    rng = random.Random(7)
    for _ in range(200):
        M = random_monomial_ideal(rng)
        D = max((sum(g) for g in M.generators), default=0) + M.nvars
        S = poincare_series(M)
        assert series_coefficients(S, D) == standard_monomials(M, D)[0]
        N = hilbert_numerator(M)
        assert hilbert_numerator(M, pivot_variable) == N
        assert _unreduced_coefficients(N, M.nvars, D) == series_coefficients(S, D)
        if S.numerator:
            assert sum(S.numerator) != 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.tuples(*[st.integers(0, 4)] * n), max_size=5))))
def test_oracle_hypothesis(args):
    n, gens = args
    M = MonomialIdeal(n, gens)
    D = 8
    assert series_coefficients(poincare_series(M), D) == standard_monomials(M, D)[0]
