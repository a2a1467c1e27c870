import pytest
from hypothesis import given, strategies as st

from hibi.algebra import UniPolyQ, x_d_minus_x_minus_1
from hibi.galois import (
    IrreducibilityNotCertified, NotSquarefreeAt, PatternB1Failed, PatternB2Failed,
    SearchExhausted, certify_symmetric_galois, find_witness_primes, matches_b1,
    matches_b2,
)

PUBLISHED_PRIMES = {18: (3, 5), 22: (29, 107), 26: (19, 67), 30: (5, 53)}


@pytest.mark.parametrize("pattern, d, expected", [
    ((1, 17), 18, True),
    ((2, 3, 13), 18, False),
    ((1, 1), 2, True),
])
def test_matches_b1(pattern, d, expected):
    assert matches_b1(pattern, d) is expected


@pytest.mark.parametrize("pattern, d, expected", [
    ((2, 3, 13), 18, True),
    ((2, 2, 14), 18, False),
    ((2,), 2, True),
    ((1, 17), 18, False),
])
def test_matches_b2(pattern, d, expected):
    assert matches_b2(pattern, d) is expected


@given(st.lists(st.integers(1, 9), min_size=1, max_size=7), st.randoms())
def test_b_tests_ignore_entry_order(pattern, rnd):
    d = sum(pattern)
    shuffled = list(pattern)
    rnd.shuffle(shuffled)
    assert matches_b1(pattern, d) == matches_b1(shuffled, d)
    assert matches_b2(pattern, d) == matches_b2(shuffled, d)


def test_search_d18():
    found = find_witness_primes(x_d_minus_x_minus_1(18), 100)
    assert (found.b1.prime, found.b1.pattern) == (5, (1, 17))
    assert (found.b2.prime, found.b2.pattern) == (3, (2, 3, 13))
    assert found.certified


def test_search_d22_and_published_pair_validates():
    f = x_d_minus_x_minus_1(22)
    found = find_witness_primes(f, 200)
    assert found.b1 is not None and found.b2 is not None
    cert = certify_symmetric_galois(f, (29, 107))
    assert {cert.b1.prime, cert.b2.prime} == {29, 107}


def test_search_deterministic():
    f = x_d_minus_x_minus_1(26)
    assert find_witness_primes(f, 500) == find_witness_primes(f, 500)


def test_search_reducible_exhausts():
    with pytest.raises(SearchExhausted) as exc:
        find_witness_primes(UniPolyQ((-1, 0, 1)), 300)
    assert exc.value.partial["irreducibility"] is None


@pytest.mark.parametrize("d", sorted(PUBLISHED_PRIMES))
def test_published_certificates(d):
    cert = certify_symmetric_galois(x_d_minus_x_minus_1(d), PUBLISHED_PRIMES[d])
    assert cert.conclusion == f"S_{d}"
    assert {cert.b1.prime, cert.b2.prime} == set(PUBLISHED_PRIMES[d])
    assert cert.validate()


def test_d18_roles():
    cert = certify_symmetric_galois(x_d_minus_x_minus_1(18), (3, 5))
    assert (cert.b1.prime, cert.b1.pattern) == (5, (1, 17))
    assert (cert.b2.prime, cert.b2.pattern) == (3, (2, 3, 13))
    assert [w.prime for w in cert.irreducibility.witnesses] == [3, 5]


def test_reducible_with_pair():
    with pytest.raises(IrreducibilityNotCertified):
        certify_symmetric_galois(UniPolyQ((-1, 0, 1)), (3, 5), bound=200)


def test_pattern_failures():
    f = x_d_minus_x_minus_1(18)
    with pytest.raises(PatternB1Failed):
        certify_symmetric_galois(f, (3, 3))
    with pytest.raises(PatternB2Failed):
        certify_symmetric_galois(f, (5, 5))


def test_not_squarefree_prime():
    # X^2 + 1 is (X+1)^2 mod 2
    with pytest.raises(NotSquarefreeAt):
        certify_symmetric_galois(UniPolyQ((1, 0, 1)), (2, 3))


def test_certificate_detects_tampering():
    cert = certify_symmetric_galois(x_d_minus_x_minus_1(18), (3, 5))
    from dataclasses import replace
    bad = replace(cert, b1=replace(cert.b1, prime=3))
    assert not bad.validate()
