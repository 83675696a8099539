import cmath
import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from chamberlocal.exactfield import (GF, QQ, Matrix, cyclotomic, cyclotomic_polynomial, matrix_rank,
                                     poly_mul, root_of_unity, smallest_prime_with_roots)


def test_cyclotomic_small_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


@pytest.mark.parametrize("M", range(1, 61))
def test_cyclotomic_matches_sympy(M):
    x = sympy.Symbol("x")
    expected = sympy.Poly(sympy.cyclotomic_poly(M, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(M)) == [int(c) for c in expected]


@pytest.mark.parametrize("M", range(1, 61))
def test_product_of_cyclotomics_is_xM_minus_1(M):
    prod = (1,)
    for d in range(1, M + 1):
        if M % d == 0:
            prod = poly_mul(prod, cyclotomic_polynomial(d))
    assert prod == (-1,) + (0,) * (M - 1) + (1,)


def test_field_examples():
    K4 = cyclotomic(4)
    assert K4.zeta() * K4.zeta() == K4(-1)
    assert GF(5)(2).inverse() == GF(5)(3)
    K6 = cyclotomic(6)
    z = K6.zeta()
    assert z + z.inverse() == K6(1)
    # zeta_6^-1 = zeta_6^5 computed by repeated multiplication
    assert z.inverse() == z * z * z * z * z


def test_field_errors():
    with pytest.raises(ValueError):
        GF(5)(1) + GF(7)(1)
    with pytest.raises(ZeroDivisionError):
        cyclotomic(5).zero().inverse()
    with pytest.raises(ZeroDivisionError):
        GF(3)(3).inverse()
    with pytest.raises(ValueError):
        GF(4)


def test_root_of_unity_examples():
    assert root_of_unity(cyclotomic(6), 6, 3) == cyclotomic(6)(-1)
    # subgroup of order 3 in F_7^* is {1, 2, 4}: smallest generator is 2
    assert root_of_unity(GF(7), 3, 1) == GF(7)(2)
    assert root_of_unity(cyclotomic(4), 2, 0) == cyclotomic(4).one()
    with pytest.raises(ValueError):
        root_of_unity(GF(7), 4, 1)
    with pytest.raises(ValueError):
        root_of_unity(cyclotomic(6), 4, 1)


@pytest.mark.parametrize("field,order", [(cyclotomic(12), 12), (cyclotomic(12), 4), (GF(13), 12), (GF(17), 8)])
def test_root_of_unity_is_homomorphism(field, order):
    one = field.one()
    assert root_of_unity(field, order, order) == one
    for a, b in itertools.product(range(order), repeat=2):
        assert root_of_unity(field, order, a) * root_of_unity(field, order, b) == root_of_unity(field, order, a + b)
    # exact order
    assert all(root_of_unity(field, order, 1) ** k != one for k in range(1, order))


def test_smallest_prime_with_roots():
    assert [smallest_prime_with_roots(2 * m) for m in (2, 3, 4)] == [5, 7, 17]


def _embed(x, M):
    z = cmath.exp(2j * cmath.pi / M)
    return sum(float(c) * z ** k for k, c in enumerate(x.coefficients()))


cyclo_fields = st.sampled_from([cyclotomic(M) for M in (1, 3, 4, 5, 8, 12)])
small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def cyclo_elems(draw, field=None):
    K = field or draw(cyclo_fields)
    coeffs = draw(st.lists(small, min_size=K.degree, max_size=K.degree))
    return K.from_coefficients(coeffs)


@given(cyclo_elems())
def test_cyclotomic_inverse(a):
    if a.is_zero():
        return
    assert a * a.inverse() == a.field.one()


@given(st.data())
def test_cyclotomic_ops_match_complex_embedding(data):
    K = data.draw(cyclo_fields)
    a, b = data.draw(cyclo_elems(K)), data.draw(cyclo_elems(K))
    for got, want in ((a + b, _embed(a, K.M) + _embed(b, K.M)), (a * b, _embed(a, K.M) * _embed(b, K.M)),
                      (a - b, _embed(a, K.M) - _embed(b, K.M))):
        assert abs(_embed(got, K.M) - want) < 1e-9


@given(st.sampled_from([2, 3, 5, 7, 101]), st.integers())
def test_prime_inverse(p, k):
    a = GF(p)(k)
    if a:
        assert a * a.inverse() == GF(p).one()


@given(small)
def test_rational_inverse(x):
    if x:
        assert QQ(x) * QQ(x).inverse() == QQ(1)


def test_rank_examples():
    assert matrix_rank(Matrix(QQ, 0, 4, ())) == 0
    assert matrix_rank(Matrix.from_rows(QQ, [[1, 2], [2, 4]])) == 1
    K = cyclotomic(4)
    i = K.zeta()
    A = Matrix.from_rows(K, [[i, 1], [1, -i]])
    # second row is -i times the first
    assert [(-i) * x for x in A.row_lists()[0]] == A.row_lists()[1]
    assert matrix_rank(A) == 1


def _brute_rank_mod_p(rows, p):
    # |row space| = p^rank
    span = set()
    for coeffs in itertools.product(range(p), repeat=len(rows)):
        span.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % p for j in range(len(rows[0]))))
    rank = 0
    while p ** rank < len(span):
        rank += 1
    return rank


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 4), st.integers(1, 4), st.randoms())
def test_rank_mod_p_against_span_count(p, r, c, rnd):
    rows = [[rnd.randrange(p) for _ in range(c)] for _ in range(r)]
    A = Matrix.from_rows(GF(p), rows)
    assert matrix_rank(A) == _brute_rank_mod_p(rows, p)


@settings(max_examples=60)
@given(st.integers(0, 5), st.integers(0, 5), st.randoms())
def test_rank_rational_properties(r, c, rnd):
    rows = [[Fraction(rnd.randint(-2, 2), rnd.randint(1, 3)) for _ in range(c)] for _ in range(r)]
    A = Matrix.from_rows(QQ, rows, cols=c)
    rank = matrix_rank(A)
    assert rank == matrix_rank(A.transpose()) <= min(r, c)
    if r and c:
        assert rank == sympy.Matrix(rows).rank()


@settings(max_examples=30)
@given(st.data())
def test_rank_cyclotomic_transpose(data):
    K = data.draw(st.sampled_from([cyclotomic(4), cyclotomic(6), cyclotomic(8)]))
    r, c = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    z = K.zeta()
    rows = [[z ** data.draw(st.integers(0, K.M)) * data.draw(st.integers(-1, 1)) for _ in range(c)] for _ in range(r)]
    A = Matrix.from_rows(K, rows)
    assert matrix_rank(A) == matrix_rank(A.transpose())


def test_json_rendering():
    K = cyclotomic(8)
    assert (K.zeta() / 2).to_json() == [0, "1/2", 0, 0]
    assert GF(5)(7).to_json() == 2
    assert QQ(Fraction(3, 6)).to_json() == "1/2"


def test_pickle_roundtrip():
    import pickle
    x = cyclotomic(12).zeta() ** 5
    assert pickle.loads(pickle.dumps(x)) == x
