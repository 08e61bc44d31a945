from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lmov.arith import divisors
from lmov.qa import (
    ExactDivisionError,
    LaurentQA,
    RationalQ,
    RationalQA,
    ZBasisError,
    exact_div,
    one_minus_q_pow,
    quantum_int,
    quantum_prod,
    quantum_ratio,
    to_z_basis,
)

# ---------------------------------------------------------------------------
# strategies
# ---------------------------------------------------------------------------

coeffs = st.integers(-9, 9)
keys = st.tuples(st.integers(-6, 6), st.integers(-4, 4))
laurents = st.dictionaries(keys, coeffs, max_size=6).map(LaurentQA)
nonzero_laurents = laurents.filter(lambda f: not f.is_zero())


# ---------------------------------------------------------------------------
# LaurentQA basics
# ---------------------------------------------------------------------------


def test_quantum_int_values():
    assert quantum_int(0).is_zero()
    assert quantum_int(2) == LaurentQA({(2, 0): 1, (-2, 0): -1})
    assert quantum_int(-3) == quantum_int(3).scale(-1)
    assert quantum_int(3, "a") == LaurentQA({(0, 3): 1, (0, -3): -1})


def test_quantum_prod():
    assert quantum_prod(()).is_one()
    assert quantum_prod((2, 1)) == quantum_int(2) * quantum_int(1)


def test_quantum_ratio_matches_division():
    for k in range(-4, 5):
        for n in range(1, 5):
            if k == 0:
                assert quantum_ratio(k, n).is_zero()
            else:
                assert quantum_ratio(k, n) == exact_div(
                    quantum_int(k * n), quantum_int(n)
                ), (k, n)
    # algebraic limit at base zero
    assert quantum_ratio(5, 0) == LaurentQA.monomial(c=5)
    assert quantum_ratio(-5, 0) == LaurentQA.monomial(c=-5)


@given(laurents, laurents)
def test_mul_commutes(f, g):
    assert f * g == g * f


@given(laurents, laurents, laurents)
def test_mul_distributes(f, g, h):
    assert f * (g + h) == f * g + f * h


def test_adams_examples():
    assert quantum_int(1).adams(2) == quantum_int(2)  # q^(1/2)-q^(-1/2) -> q-1/q
    assert quantum_int(3, "a").adams(1) == quantum_int(3, "a")


@given(laurents, st.integers(1, 4), st.integers(1, 4))
def test_adams_composes(f, d, e):
    assert f.adams(d).adams(e) == f.adams(d * e)


@given(laurents, laurents, st.integers(1, 5))
def test_adams_is_ring_hom(f, g, d):
    assert (f * g).adams(d) == f.adams(d) * g.adams(d)
    assert (f + g).adams(d) == f.adams(d) + g.adams(d)


@given(nonzero_laurents, nonzero_laurents)
def test_exact_div_roundtrip(f, g):
    assert exact_div(f * g, g) == f


def test_exact_div_examples():
    assert exact_div(quantum_int(2), quantum_int(1)) == LaurentQA(
        {(1, 0): 1, (-1, 0): 1}
    )
    with pytest.raises(ExactDivisionError) as ei:
        exact_div(quantum_int(1) * quantum_int(1), quantum_int(2))
    assert ei.value.remainder is not None and not ei.value.remainder.is_zero()
    with pytest.raises(ExactDivisionError):
        exact_div(quantum_int(6), quantum_int(2) * quantum_int(3))
    assert exact_div(
        quantum_int(6) * quantum_int(1), quantum_int(2) * quantum_int(3)
    ) == LaurentQA({(2, 0): 1, (0, 0): -1, (-2, 0): 1})


def test_exact_div_bivariate_divisor():
    f = LaurentQA({(0, 2): 1, (0, 0): -1})  # a - 1
    g = LaurentQA({(1, 2): 2, (1, 0): -2, (3, -2): 1, (3, -4): -1})
    assert exact_div(f * g, f) == g
    with pytest.raises(ExactDivisionError):
        exact_div(f * g + LaurentQA.one(), f)


# ---------------------------------------------------------------------------
# z^2 basis
# ---------------------------------------------------------------------------


def test_z_basis_examples():
    assert to_z_basis(LaurentQA({(2, 0): 1, (0, 0): -2, (-2, 0): 1})).entries == {
        (1, 0): 1
    }
    assert to_z_basis(LaurentQA({(2, 0): 1, (-2, 0): 1})).entries == {
        (1, 0): 1,
        (0, 0): 2,
    }
    with pytest.raises(ZBasisError):
        to_z_basis(LaurentQA({(1, 0): 1}))
    with pytest.raises(ZBasisError):
        to_z_basis(LaurentQA({(2, 0): 1}))  # not palindromic


def test_z_basis_quantum_square_identity():
    # {2}^2 = z^2 (z^2 + 4)
    assert to_z_basis(quantum_int(2) * quantum_int(2)).entries == {
        (2, 0): 1,
        (1, 0): 4,
    }


@given(
    st.lists(
        st.tuples(st.integers(0, 4), st.integers(-3, 3), st.integers(-9, 9)),
        min_size=1,
        max_size=6,
    )
)
def test_z_basis_roundtrip(terms):
    z2 = quantum_int(1) * quantum_int(1)
    f = LaurentQA.zero()
    for g, v, c in terms:
        f = f + (z2**g).scale(c).shift(dv=v)
    table = to_z_basis(f)
    assert table.expand() == f


def test_z_basis_rows_shape():
    t = to_z_basis(quantum_int(1) * quantum_int(1) * LaurentQA.monomial(v=1))
    assert t.rows() == [{"g": 1, "two_q": 1, "n": 1}]
    assert t.is_integral()


# ---------------------------------------------------------------------------
# cyclotomic bookkeeping
# ---------------------------------------------------------------------------


def _cyclotomics(limit):
    # Phi_n via exact division of x^n - 1 by the proper cyclotomic factors
    phis = {}
    for n in range(1, limit + 1):
        num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
        for d in divisors(n):
            if d == n:
                continue
            q, r = _polydiv(num, phis[d])
            assert not any(r)
            num = q
        phis[n] = num
    return phis


def _polydiv(a, b):
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db]
        if c % b[-1]:
            raise AssertionError("non-exact step")
        t = c // b[-1]
        q[i] = t
        for j, y in enumerate(b):
            a[i + j] -= t * y
    return q, a[:db]


def test_quantum_int_cyclotomic_factorization():
    phis = _cyclotomics(30)
    for n in range(1, 31):
        prod = LaurentQA.one()
        for d in divisors(n):
            prod = prod * LaurentQA({(2 * i, 0): c for i, c in enumerate(phis[d]) if c})
        assert quantum_int(n).shift(du=n) == prod, n


# ---------------------------------------------------------------------------
# RationalQ / RationalQA
# ---------------------------------------------------------------------------


def test_rationalq_normalization():
    # (q - 1)/(q^(1/2) - 1) reduces to q^(1/2) + 1 with monic denominator
    r = RationalQ((-1, 0, 1), (-1, 1), 0)
    assert r.is_laurent()
    assert r.to_laurent() == LaurentQA({(1, 0): 1, (0, 0): 1})


def test_rationalq_arithmetic():
    one_minus_q = one_minus_q_pow(1)
    half = RationalQ.one() / one_minus_q
    assert half * one_minus_q == RationalQ.one()
    assert half + half == RationalQ((2,), (1,)) / one_minus_q
    assert (half - half).is_zero()
    assert one_minus_q_pow(3) / one_minus_q == RationalQ((1, 0, 1, 0, 1), (1,))


def test_rationalq_adams():
    one_minus_q = one_minus_q_pow(1)
    inv = RationalQ.one() / one_minus_q
    assert inv.adams(2) == RationalQ.one() / one_minus_q_pow(2)
    m = RationalQ.monomial(3, Fraction(1, 2))
    assert m.adams(2) == RationalQ.monomial(6, Fraction(1, 2))


@given(st.integers(-8, 8), st.integers(1, 4))
def test_rationalq_monomial_shift_mul(u, d):
    m = RationalQ.monomial(u)
    assert m * m == RationalQ.monomial(2 * u)
    assert m.adams(d) == RationalQ.monomial(u * d)


def test_rationalqa_slices_and_laurent():
    f = quantum_int(1, "a") * quantum_int(2)
    qa = RationalQA.from_laurent(f)
    assert qa.as_laurent() == f
    den = RationalQ.from_laurent(quantum_int(2))
    g = qa.div_rational(den)
    assert g.as_laurent() == quantum_int(1, "a")
    h = qa.div_rational(RationalQ.from_laurent(quantum_int(3)))
    assert h.as_laurent() is None


def test_rationalqa_top_a():
    f = RationalQA.from_laurent(quantum_int(3, "a"))
    v, top = f.top_a()
    assert v == 3 and top == RationalQ.one()


def test_laurent_json_roundtrip():
    f = LaurentQA({(1, -2): Fraction(3, 2), (0, 0): -4})
    assert LaurentQA.from_json_obj(f.to_json_obj()) == f


# field-style randomized stress of the gcd-normalized representation

polys = st.lists(st.integers(-6, 6), min_size=1, max_size=5).filter(any)
rationals = st.builds(
    lambda n, d, off: RationalQ(tuple(n), tuple(d), off),
    polys,
    polys,
    st.integers(-4, 4),
)


@given(rationals, rationals, rationals)
def test_rationalq_field_identities(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert (a - b) + b == a
    if not b.is_zero():
        assert (a / b) * b == a
    assert a * b == b * a


@given(rationals, st.integers(1, 3))
def test_rationalq_adams_respects_ops(a, d):
    b = a * a + a
    assert b.adams(d) == a.adams(d) * a.adams(d) + a.adams(d)
