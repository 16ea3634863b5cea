"""Temperley-Lieb diagram algebra and Jones-Wenzl projector laws."""

import math

import pytest

from skeintails.errors import CapacityError, DomainError
from skeintails.qcore import VFraction, VLaurent, delta_n, quantum_fact, quantum_int
from skeintails.tl_oracle import (
    Matching,
    OracleConfig,
    TLElement,
    coeff_of,
    enumerate_matchings,
    hook_matching,
    jones_wenzl,
    match_mul,
)


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


class TestMatchings:
    def test_counts_are_catalan(self):
        for n in range(11):
            assert len(enumerate_matchings(n)) == catalan(n)

    def test_all_planar_and_distinct(self):
        for n in range(7):
            ms = enumerate_matchings(n)
            assert len(set(ms)) == len(ms)
            assert all(m.is_planar() for m in ms)

    def test_parens_encoding_is_canonical(self):
        ms = enumerate_matchings(4)
        words = [m.to_parens() for m in ms]
        assert len(set(words)) == len(words)
        assert words == sorted(words)
        assert all(w.count("(") == 4 for w in words)

    def test_identity_multiplication(self):
        ident = Matching.identity(3)
        m, loops = match_mul(ident, ident)
        assert m == ident and loops == 0

    def test_cup_cap_squared(self):
        e1 = next(iter(TLElement.generator(2, 1).terms))
        m, loops = match_mul(e1, e1)
        assert m == e1 and loops == 1

    def test_zigzag(self):
        e1 = next(iter(TLElement.generator(3, 1).terms))
        e2 = next(iter(TLElement.generator(3, 2).terms))
        m, loops = match_mul(e1, e2)
        # bottom cup (0,1), strand bottom2 -> top3, top cap (4,5)
        assert loops == 0
        assert m == Matching.from_pairs(3, [(0, 1), (2, 3), (4, 5)])

    def test_strand_mismatch(self):
        with pytest.raises(DomainError):
            match_mul(Matching.identity(2), Matching.identity(3))


class TestTLAlgebra:
    def test_generator_relations(self):
        # e_i^2 = delta e_i and e_i e_{i+1} e_i = e_i, on 4 strands
        delta = VFraction.from_poly(VLaurent({2: -1, -2: -1}))
        for i in (1, 2, 3):
            e = TLElement.generator(4, i)
            assert e * e == e.scale(delta)
        e1, e2 = TLElement.generator(4, 1), TLElement.generator(4, 2)
        assert e1 * e2 * e1 == e1
        assert e2 * e1 * e2 == e2

    def test_far_generators_commute(self):
        e1, e3 = TLElement.generator(4, 1), TLElement.generator(4, 3)
        assert e1 * e3 == e3 * e1


class TestJonesWenzl:
    def test_base_and_first_unfolding(self):
        f1 = jones_wenzl(1)
        assert f1 == TLElement.identity(1)
        f2 = jones_wenzl(2)
        e1 = next(iter(TLElement.generator(2, 1).terms))
        assert coeff_of(f2, Matching.identity(2)) == VFraction.one()
        assert coeff_of(f2, e1) == VFraction(VLaurent.one(), quantum_int(2))

    def test_identity_coefficient_is_one(self):
        for n in range(1, 7):
            assert coeff_of(jones_wenzl(n), Matching.identity(n)) == VFraction.one()

    def test_idempotence(self):
        for n in range(1, 7):
            f = jones_wenzl(n)
            assert f * f == f

    def test_annihilation(self):
        for n in range(2, 7):
            f = jones_wenzl(n)
            for i in range(1, n):
                e = TLElement.generator(n, i)
                assert (e * f).is_zero()
                assert (f * e).is_zero()

    def test_trace_closure(self):
        for n in range(1, 7):
            assert jones_wenzl(n).trace_close() == VFraction.from_poly(delta_n(n))

    def test_partial_closure(self):
        for total in range(2, 7):
            for m in range(1, total):
                n = total - m
                closed = jones_wenzl(total).partial_close(m)
                ratio = VFraction(delta_n(total), delta_n(n))
                assert closed == jones_wenzl(n).scale(ratio)

    def test_absorption(self):
        for total in range(2, 7):
            for m in range(1, total):
                tensor = jones_wenzl(m).tensor_with(jones_wenzl(total - m))
                f = jones_wenzl(total)
                assert f * tensor == f
                assert tensor * f == f

    def test_capacity_limit(self):
        with pytest.raises(CapacityError):
            jones_wenzl(4, OracleConfig(max_box_color=3))
        with pytest.raises(DomainError):
            jones_wenzl(-1)

    def test_concurrent_construction_is_consistent(self):
        # the memo cache must behave as if computed once
        from concurrent.futures import ThreadPoolExecutor

        import skeintails.tl_oracle as tl

        tl._jw_cache.clear()
        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(lambda _: jones_wenzl(5), range(16)))
        assert all(r == results[0] for r in results)
        assert results[0].trace_close() == VFraction.from_poly(delta_n(5))


class TestMorrisonHooks:
    def test_hook_is_planar(self):
        for n in range(1, 4):
            assert hook_matching(n).is_planar()

    def test_hook_coefficients(self):
        # coeff of the fully nested turn-back diagram in f(2n) = ([n]!)^2/[2n]!
        for n in (1, 2, 3):
            got = coeff_of(jones_wenzl(2 * n), hook_matching(n))
            want = VFraction(quantum_fact(n) ** 2, quantum_fact(2 * n))
            assert got == want

    def test_hook_n1_value(self):
        assert coeff_of(jones_wenzl(2), hook_matching(1)) == VFraction(
            VLaurent.one(), quantum_int(2)
        )

    def test_coeff_of_mismatch(self):
        with pytest.raises(DomainError):
            coeff_of(jones_wenzl(2), Matching.identity(3))
