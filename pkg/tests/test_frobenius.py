import random

import pytest

from thinbasis.errors import InvalidParamsError
from thinbasis.frobenius import (
    FrobeniusParams,
    frobenius_count,
    frobenius_decompose,
    frobenius_enumerate_up_to,
    frobenius_member,
    threshold,
)

from oracles import naive_representable

F35 = FrobeniusParams((3, 5))


class TestThreshold:
    def test_examples(self):
        assert threshold((3, 5)) == 8
        assert threshold((1, 7)) == 0
        assert threshold((6, 10, 15)) == 30

    def test_gcd_above_one_rejected(self):
        with pytest.raises(InvalidParamsError, match="gcd 1"):
            threshold((4, 6))

    def test_nonpositive_rejected(self):
        with pytest.raises(InvalidParamsError):
            threshold((0, 3))

    def test_matches_naive_search(self):
        for aprime in ((3, 5), (6, 10, 15), (2, 7), (5, 7, 9), (1, 4)):
            C = threshold(aprime)
            for n in range(C, C + 101):
                assert naive_representable(aprime, n)
            if C > 0:
                assert not naive_representable(aprime, C - 1)

    def test_minimality_window(self):
        # C-1 unreachable, then a full run of min(aprime) reachable values
        for aprime in ((3, 5), (6, 10, 15), (7, 11)):
            C = threshold(aprime)
            assert not naive_representable(aprime, C - 1)
            for n in range(C, C + min(aprime)):
                assert naive_representable(aprime, n)


class TestMember:
    def test_examples(self):
        assert frobenius_member(F35, 9)
        assert frobenius_member(F35, 0)
        assert not frobenius_member(F35, 13)
        assert frobenius_member(F35, 7)  # initial segment
        assert not frobenius_member(F35, -3)


class TestDecompose:
    def test_examples(self):
        assert frobenius_decompose(F35, 7).elements == (7, 0)
        dec = frobenius_decompose(F35, 8)
        assert sorted(dec.elements) == [3, 5]
        assert frobenius_decompose(F35, 0).elements == (0, 0)

    def test_round_trip(self):
        rng = random.Random(5)
        for params in (F35, FrobeniusParams((6, 10, 15)), FrobeniusParams((2, 3, 7))):
            for _ in range(300):
                n = rng.randint(0, 10**9)
                dec = frobenius_decompose(params, n)
                assert len(dec.terms) == params.h
                assert sum(dec.elements) == n
                assert all(frobenius_member(params, e) for e in dec.elements)

    def test_factors_use_generators(self):
        dec = frobenius_decompose(FrobeniusParams((6, 10, 15)), 31)
        for term, a in zip(dec.terms, (6, 10, 15)):
            if term.factor is not None:
                assert term.factor[0] == a
                assert term.element % a == 0


class TestSetView:
    def test_enumerate_small(self):
        # [0,7] from the initial segment, then multiples of 3 and 5
        assert frobenius_enumerate_up_to(F35, 13) == [0, 1, 2, 3, 4, 5, 6, 7, 9, 10, 12]

    def test_enumerate_negative(self):
        assert frobenius_enumerate_up_to(F35, -1) == []

    def test_count_matches_enumeration(self):
        for params in (F35, FrobeniusParams((6, 10, 15)), FrobeniusParams((1, 9))):
            for x in (0, 1, 13, 100, 2345):
                elems = frobenius_enumerate_up_to(params, x)
                assert frobenius_count(params, x) == sum(1 for e in elems if e)

    def test_count_closed_form_large(self):
        # inclusion-exclusion for multiples of 3 or 5 in [1, x], plus {1,2,4,7}
        x = 10**12
        expected = x // 3 + x // 5 - x // 15 + 4
        assert frobenius_count(F35, x) == expected
