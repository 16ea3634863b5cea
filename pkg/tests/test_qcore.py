"""Core arithmetic: Laurent polynomials, fractions, q-series, primitives."""

from fractions import Fraction

import pytest

from skeintails.errors import (
    ConsistencyError,
    DivergentProductError,
    DomainError,
    PrecisionError,
    RepresentationError,
)
from skeintails.qcore import (
    QSeries,
    VFraction,
    VLaurent,
    delta_n,
    poch_finite,
    poch_inf,
    poch_inf_step,
    qbinom,
    quantum_fact,
    quantum_int,
    series_div,
    series_mul,
    to_q_series,
)


def q_dict_mul(a: dict, b: dict) -> dict:
    """Independent dict-convolution oracle used to freeze expected values."""
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


class TestVLaurent:
    def test_zero_is_empty(self):
        assert VLaurent({0: 0, 3: 0}).terms == {}
        assert VLaurent.zero().is_zero()

    def test_arithmetic_exact(self):
        p = VLaurent({2: 1, -2: 1})
        q = VLaurent({2: 1, -2: -1})
        assert (p + q) == VLaurent({2: 2})
        assert (p * q) == VLaurent({4: 1, -4: -1})
        assert (p - p).is_zero()

    def test_pow_and_shift(self):
        p = VLaurent({0: 1, 4: -1})
        assert p**0 == VLaurent.one()
        assert p**3 == p * p * p
        assert p.shift(4) == VLaurent({4: 1, 8: -1})

    def test_div_exact_and_remainder(self):
        a = quantum_int(6) * quantum_int(5)
        assert a.div_exact(quantum_int(5)) == quantum_int(6)
        with pytest.raises(ConsistencyError):
            (quantum_int(5) + VLaurent.one()).div_exact(quantum_int(2))

    def test_json_round_trip(self):
        p = VLaurent({-3: Fraction(1, 2), 5: -2})
        assert VLaurent.from_json_obj(p.to_json_obj()) == p


class TestVFraction:
    def test_cross_equality(self):
        a = VFraction(quantum_int(4), quantum_int(2))
        # [4]/[2] = q + 1/q as a polynomial identity
        assert a == VFraction.from_poly(VLaurent({4: 1, -4: 1}))

    def test_to_vlaurent_checks_exactness(self):
        good = VFraction(quantum_int(2) * quantum_int(3), quantum_int(3))
        assert good.to_vlaurent() == quantum_int(2)
        with pytest.raises(ConsistencyError):
            VFraction(VLaurent.one(), quantum_int(2)).to_vlaurent()

    def test_field_ops(self):
        a = VFraction(VLaurent.one(), quantum_int(2))
        b = VFraction(quantum_int(3), quantum_int(2))
        assert a + b == VFraction(VLaurent.one() + quantum_int(3), quantum_int(2))
        assert (a / a) == VFraction.one()
        assert a * quantum_int(2) == VFraction.one()
        assert (a - a).is_zero()
        assert a**-1 == VFraction.from_poly(quantum_int(2))


class TestQuantumPrimitives:
    def test_quantum_int_examples(self):
        assert quantum_int(0).is_zero()
        assert quantum_int(2) == VLaurent({2: 1, -2: 1})
        assert quantum_int(3) == VLaurent({4: 1, 0: 1, -4: 1})

    def test_quantum_int_defining_identity(self):
        # [n] (q^(1/2) - q^(-1/2)) = q^(n/2) - q^(-n/2), for n <= 30
        step = VLaurent({2: 1, -2: -1})
        for n in range(31):
            want = VLaurent({2 * n: 1}) - VLaurent({-2 * n: 1})
            assert quantum_int(n) * step == want

    def test_delta_examples(self):
        assert delta_n(0) == VLaurent.one()
        assert delta_n(1) == VLaurent({2: -1, -2: -1})
        assert delta_n(2) == VLaurent({4: 1, 0: 1, -4: 1})
        for n in range(31):
            sign = -1 if n % 2 else 1
            assert delta_n(n) == quantum_int(n + 1).scale(sign)

    def test_quantum_fact(self):
        assert quantum_fact(0) == VLaurent.one()
        assert quantum_fact(2) == quantum_int(2)
        # independent term-by-term product for [3]!
        expect = q_dict_mul(dict(quantum_int(2).terms), dict(quantum_int(3).terms))
        assert quantum_fact(3) == VLaurent(expect)

    def test_poch_finite_examples(self):
        assert poch_finite(1, 1, 0) == VLaurent.one()
        assert poch_finite(1, 1, 2) == VLaurent.from_q_dict({0: 1, 1: -1, 2: -1, 3: 1})
        assert poch_finite(-1, 1, 1) == VLaurent.from_q_dict({0: 1, 1: 1})

    def test_poch_split_property(self):
        for m in range(13):
            for n in range(13 - m):
                lhs = poch_finite(1, 1, m + n)
                rhs = poch_finite(1, 1, m) * poch_finite(1, m + 1, n)
                assert lhs == rhs

    def test_factorization_identity(self):
        # [n]! (1-q)^n q^((n^2-n)/4) = (q;q)_n for n <= 15
        one_minus_q = VLaurent.from_q_dict({0: 1, 1: -1})
        for n in range(16):
            lhs = quantum_fact(n) * one_minus_q**n * VLaurent.monomial(1, n * n - n)
            assert lhs == poch_finite(1, 1, n)

    def test_qbinom(self):
        for n in range(6):
            assert qbinom(n, 0) == VLaurent.one()
        assert qbinom(2, 1) == VLaurent.from_q_dict({0: 1, 1: 1})
        # derived independently: (q;q)_4 / ((q;q)_2 (q;q)_2)
        assert qbinom(4, 2) == VLaurent.from_q_dict({0: 1, 1: 1, 2: 2, 3: 1, 4: 1})
        with pytest.raises(DomainError):
            qbinom(3, 4)
        with pytest.raises(DomainError):
            qbinom(3, -1)

    def test_qbinom_symmetry_and_pascal(self):
        for n in range(1, 21):
            for i in range(n + 1):
                assert qbinom(n, i) == qbinom(n, n - i)
                if 1 <= i <= n:
                    pascal = qbinom(n - 1, i - 1) if i >= 1 else VLaurent.zero()
                    if i <= n - 1:
                        pascal = pascal + VLaurent.q_power(i) * qbinom(n - 1, i)
                    assert qbinom(n, i) == pascal

    def test_qbinom_nonneg_integers(self):
        for n in range(10):
            for i in range(n + 1):
                for c in qbinom(n, i).terms.values():
                    assert c == int(c) and c > 0


class TestPochInf:
    def test_small(self):
        s = poch_inf(1, 2)
        assert s.shift == 0 and list(s.coeffs) == [1, -1]

    def test_pentagonal_prefix(self):
        # independent oracle: multiply factors (1-q)...(1-q^7) with dicts
        prod = {0: 1}
        for j in range(1, 8):
            prod = q_dict_mul(prod, {0: 1, j: -1})
        want = [prod.get(e, 0) for e in range(7)]
        assert [int(c) for c in poch_inf(1, 7).coeffs] == want

    def test_step_two(self):
        s = poch_inf(2, 4)
        assert list(map(int, s.coeffs)) == [1, 0, -1, -1]

    def test_divergent(self):
        with pytest.raises(DivergentProductError):
            poch_inf(0, 5)
        with pytest.raises(DivergentProductError):
            poch_inf_step(1, 0, 5)

    def test_truncation_stability(self):
        a = poch_inf(1, 12)
        b = poch_inf(1, 40)
        assert a == b.with_order(12)


class TestQSeries:
    def test_to_q_series_examples(self):
        s = to_q_series(VLaurent({4: 1, 8: 1}))
        assert s.shift == 1 and list(map(int, s.coeffs)) == [1, 1]
        s = to_q_series(VLaurent({-4: 1, 0: 2, 4: 1}))
        assert s.shift == -1 and list(map(int, s.coeffs)) == [1, 2, 1]
        with pytest.raises(RepresentationError):
            to_q_series(VLaurent({2: 1, 4: 1}))
        with pytest.raises(DomainError):
            to_q_series(VLaurent.zero())

    def test_fractional_shift_metadata(self):
        s = to_q_series(VLaurent({2: 1, 6: 1}))
        assert s.v_shift == 2
        from skeintails.tails_engine import agree_to_order

        with pytest.raises(RepresentationError):
            agree_to_order(s, s, 1)

    def test_series_mul_examples(self):
        a = QSeries(0, [1, -1, 0, 0])
        b = QSeries(0, [1, 1, 1, 1])
        assert list(map(int, series_mul(a, b).coeffs)) == [1, 0, 0, 0]
        one = QSeries.one(4)
        assert series_mul(a, one) == a

    def test_series_mul_poch_concatenation(self):
        a = to_q_series(poch_finite(1, 1, 2)).with_order(12)
        b = to_q_series(poch_finite(1, 3, 2)).with_order(12)
        c = to_q_series(poch_finite(1, 1, 4)).with_order(12)
        assert series_mul(a, b) == c

    def test_series_div(self):
        geo = series_div(QSeries.one(6), QSeries(0, [1, -1], exact=True), order=6)
        assert list(map(int, geo.coeffs)) == [1] * 6
        a = QSeries(2, [3, 1, 4, 1])
        assert series_div(a, a) == QSeries.one(4)
        with pytest.raises(DomainError):
            series_div(a, QSeries.zero(4))

    def test_series_div_round_trip(self):
        a = to_q_series(poch_finite(1, 1, 4)).with_order(10)
        b = to_q_series(poch_finite(1, 1, 2)).with_order(10)
        q = series_div(a, b)
        assert q == to_q_series(poch_finite(1, 3, 2)).with_order(10)
        assert series_mul(q, b) == a

    def test_mul_associative_commutative(self):
        a = QSeries(0, [1, 2, 3, 4, 5])
        b = QSeries(1, [1, -1, 1, -1, 1])
        c = QSeries(-2, [2, 0, 1, 0, 2])
        assert series_mul(a, b) == series_mul(b, a)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))

    def test_div_inverts_mul(self):
        a = QSeries(0, [1, 2, 3, 4, 5])
        b = QSeries(1, [2, -1, 1, -1, 1])
        assert series_div(series_mul(a, b), b) == a

    def test_order_propagation_min(self):
        a = QSeries(0, [1, 1, 1])
        b = QSeries(0, [1, -1, 0, 0, 0, 7])
        assert series_mul(a, b).order == 3
        assert (a + b).order == 3

    def test_precision_error_on_extension(self):
        with pytest.raises(PrecisionError):
            QSeries(0, [1, 2]).with_order(5)

    def test_exact_padding(self):
        s = to_q_series(VLaurent.one())
        assert s.with_order(5).order == 5
        assert all(c == 0 for c in s.with_order(5).coeffs[1:])

    def test_json_round_trip(self):
        s = QSeries(-2, [1, Fraction(1, 3), 0, 5])
        obj = s.to_json_obj()
        assert obj["variable"] == "q" and obj["order"] == s.order
        assert QSeries.from_json_obj(obj) == s
