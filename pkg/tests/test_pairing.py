"""Algebraic laws and serialization of the two bilinear suites."""

import os
import random

import pytest

from pbcap.errors import DecodeError, GroupMismatchError
from pbcap.pairing import Group, H2_BYTES, Scalar

BILINEARITY_DRAWS = {"mock": 100, "production": 100}


def _draws(suite):
    return BILINEARITY_DRAWS[suite.name]


class TestBilinearity:
    def test_non_degeneracy(self, any_suite):
        assert not any_suite.pair(any_suite.gen_a, any_suite.gen_b).is_identity()

    def test_bilinearity_random_exponents(self, any_suite, rng):
        s = any_suite
        base = s.pair(s.gen_a, s.gen_b)
        for _ in range(_draws(s)):
            a = rng.randrange(1, s.order)
            b = rng.randrange(1, s.order)
            assert s.pair(s.gen_a ** a, s.gen_b ** b) == base ** (a * b % s.order)

    def test_small_exponent_identity(self, any_suite):
        s = any_suite
        lhs = s.pair(s.gen_a ** 2, s.gen_b ** 3)
        assert lhs == s.pair(s.gen_a, s.gen_b) ** 6

    def test_identity_pairs_to_identity(self, any_suite, rng):
        s = any_suite
        y = s.gen_b ** rng.randrange(1, s.order)
        assert s.pair(s.identity(Group.A), y).is_identity()

    def test_group_mismatch_rejected(self, any_suite):
        s = any_suite
        with pytest.raises(GroupMismatchError):
            s.pair(s.gen_b, s.gen_b)
        with pytest.raises(GroupMismatchError):
            s.pair(s.gen_a, s.gen_a)


class TestHashToGroupA:
    def test_deterministic(self, any_suite):
        a = any_suite.hash_to_group_a(b"RecordedBy(Test,Nurse)")
        b = any_suite.hash_to_group_a(b"RecordedBy(Test,Nurse)")
        assert a == b
        assert a.to_bytes() == b.to_bytes()

    def test_distinct_messages_distinct_points(self, any_suite):
        a = any_suite.hash_to_group_a(b"RecordedBy(Test,Nurse)")
        b = any_suite.hash_to_group_a(b"DiagnosedBy(Report,Doctor)")
        assert a.to_bytes() != b.to_bytes()

    def test_output_in_group_a(self, any_suite):
        e = any_suite.hash_to_group_a(b"anything")
        assert e.group is Group.A
        # must survive a strict decode (on curve, right subgroup)
        assert any_suite.element_from_bytes(Group.A, e.to_bytes()) == e

    def test_mock_hash_exposes_discrete_log(self, mock_suite):
        e = mock_suite.hash_to_group_a(b"RecordedBy(Test,Nurse)")
        d = mock_suite.discrete_log(e)
        assert mock_suite.gen_a ** d == e


class TestHashToBits:
    def test_deterministic_and_32_bytes(self, any_suite, rng):
        t = any_suite.pair(any_suite.gen_a, any_suite.gen_b) ** rng.randrange(1, any_suite.order)
        assert any_suite.hash_to_bits(t) == any_suite.hash_to_bits(t)
        assert len(any_suite.hash_to_bits(t)) == H2_BYTES

    def test_identity_digest_is_reproducible_constant(self, any_suite):
        t = any_suite.identity(Group.T)
        assert any_suite.hash_to_bits(t) == any_suite.hash_to_bits(any_suite.identity(Group.T))

    def test_no_collisions_over_many_draws(self, mock_suite, rng):
        base = mock_suite.pair(mock_suite.gen_a, mock_suite.gen_b)
        seen = set()
        for _ in range(10_000):
            t = base ** rng.randrange(1, mock_suite.order)
            seen.add(mock_suite.hash_to_bits(t))
        assert len(seen) == 10_000

    def test_rejects_source_group_elements(self, any_suite):
        with pytest.raises(GroupMismatchError):
            any_suite.hash_to_bits(any_suite.gen_a)


class TestRandomScalar:
    def test_never_zero(self, mock_suite):
        rng = random.Random(1)
        assert all(mock_suite.random_scalar(rng).value != 0 for _ in range(100_000))

    def test_in_range(self, any_suite, rng):
        for _ in range(1000):
            s = any_suite.random_scalar(rng)
            assert 1 <= s.value <= any_suite.order - 1

    def test_no_repeats_over_1000_draws(self, any_suite, rng):
        values = {any_suite.random_scalar(rng).value for _ in range(1000)}
        assert len(values) == 1000

    def test_seeded_sequence_reproducible(self, any_suite):
        seq1 = [any_suite.random_scalar(random.Random(42)).value for _ in range(1)]
        seq2 = [any_suite.random_scalar(random.Random(42)).value for _ in range(1)]
        a = random.Random(7)
        b = random.Random(7)
        assert [any_suite.random_scalar(a).value for _ in range(50)] == [
            any_suite.random_scalar(b).value for _ in range(50)
        ]
        assert seq1 == seq2

    def test_scalar_rejects_zero(self):
        with pytest.raises(ValueError):
            Scalar(0)


class TestSerialization:
    @pytest.mark.parametrize("group", [Group.A, Group.B, Group.T])
    def test_round_trip_random_elements(self, any_suite, rng, group):
        s = any_suite
        n = 100 if s.name == "mock" else 25
        if group is Group.T:
            gen = s.pair(s.gen_a, s.gen_b)
        else:
            gen = s.gen_a if group is Group.A else s.gen_b
        for _ in range(n):
            e = gen ** rng.randrange(1, s.order)
            assert s.element_from_bytes(group, e.to_bytes()) == e

    def test_equality_is_canonical_bytes_equality(self, any_suite, rng):
        k = rng.randrange(1, any_suite.order)
        a = any_suite.gen_a ** k
        b = any_suite.gen_a ** k
        assert a == b and a.to_bytes() == b.to_bytes()
        c = any_suite.gen_a ** (k + 1)
        assert a != c and a.to_bytes() != c.to_bytes()

    def test_random_bytes_rejected_or_in_subgroup(self, prod_suite):
        rng = random.Random(13)
        sizes = {Group.A: 33, Group.B: 65, Group.T: 384}
        for group, size in sizes.items():
            for _ in range(30):
                blob = bytes(rng.getrandbits(8) for _ in range(size))
                try:
                    e = prod_suite.element_from_bytes(group, blob)
                except DecodeError:
                    continue
                assert (e ** prod_suite.order).is_identity()

    def test_wrong_length_rejected(self, any_suite):
        with pytest.raises(DecodeError):
            any_suite.element_from_bytes(Group.A, b"\x01\x02\x03")


class TestMockVsProductionAgreement:
    """Every law checked on the mock holds on the production suite too."""

    def test_shared_identities(self, mock_suite, prod_suite, rng):
        for s in (mock_suite, prod_suite):
            e = s.pair(s.gen_a, s.gen_b)
            a, b = rng.randrange(2, 1000), rng.randrange(2, 1000)
            assert s.pair(s.gen_a ** a, s.gen_b ** b) == e ** (a * b)
            assert s.pair(s.gen_a ** a, s.gen_b) == s.pair(s.gen_a, s.gen_b ** a)
            assert (e ** s.order).is_identity()

    def test_only_mock_exposes_exponents(self, mock_suite, prod_suite):
        assert hasattr(mock_suite, "discrete_log")
        assert not hasattr(prod_suite, "discrete_log")
