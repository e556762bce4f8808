import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invseq.core import InversionSequence, PatternSet, avoids_all, length3_patterns
from invseq.oracle import (
    DEFAULT_BOUND,
    OracleBoundError,
    WordConstraint,
    count_avoiders,
    count_words,
    enumerate_avoiders,
    oracle_bound,
)
from conftest import all_inversion_sequences

ALL_PATTERNS = sorted(str(p) for p in length3_patterns())


def brute_count(n, patterns):
    return sum(
        avoids_all(InversionSequence(s), patterns)
        for s in all_inversion_sequences(n)
    )


class TestCountAvoiders:
    @pytest.mark.parametrize(
        "specs",
        [
            ("001",),
            ("000", "010", "110", "120"),
            ("100", "102", "201"),
            ("010", "101", "110", "120", "201", "210"),
            ("012",),
            ("00",),
            ("011", "201"),
        ],
    )
    def test_matches_unpruned_filter(self, specs):
        ps = PatternSet.of(*specs)
        for n in range(7):
            assert count_avoiders(n, ps) == brute_count(n, ps)

    def test_avoiding_001_gives_powers_of_two(self):
        ps = PatternSet.of("001")
        assert [count_avoiders(n, ps) for n in range(1, 9)] == [
            2 ** (n - 1) for n in range(1, 9)
        ]

    def test_empty_pattern_set_counts_everything(self):
        import math

        ps = PatternSet.of()
        assert [count_avoiders(n, ps) for n in range(7)] == [
            math.factorial(n) for n in range(7)
        ]

    @settings(max_examples=60, deadline=None)
    @given(st.sets(st.sampled_from(ALL_PATTERNS), min_size=1, max_size=4))
    def test_random_pattern_sets(self, specs):
        ps = PatternSet.of(*sorted(specs))
        for n in range(6):
            assert count_avoiders(n, ps) == brute_count(n, ps)


class TestBound:
    def test_default_bound_guards(self):
        with pytest.raises(OracleBoundError):
            count_avoiders(DEFAULT_BOUND + 1, PatternSet.of("00"))

    def test_override_wins(self):
        # avoiding 00 forces all-distinct values, hence a unique sequence
        assert count_avoiders(DEFAULT_BOUND + 1, PatternSet.of("00"), bound=12) == 1

    def test_env_var(self, monkeypatch):
        monkeypatch.setenv("INVSEQ_ORACLE_BOUND", "3")
        assert oracle_bound() == 3
        with pytest.raises(OracleBoundError):
            count_avoiders(4, PatternSet.of("001"))
        assert oracle_bound(8) == 8


class TestEnumerate:
    def test_lexicographic_and_consistent(self):
        ps = PatternSet.of("000", "010", "110", "120")
        for n in range(7):
            seqs = enumerate_avoiders(n, ps)
            assert len(seqs) == count_avoiders(n, ps)
            vals = [s.values for s in seqs]
            assert vals == sorted(vals)
            assert all(avoids_all(s, ps) for s in seqs)


def brute_words(constraint):
    from invseq.core import word_contains

    k, b = constraint.length, constraint.max_letter
    total = 0
    for w in itertools.product(range(1, b + 1), repeat=k):
        if constraint.surjective and set(w) != set(range(1, b + 1)):
            continue
        if not any(word_contains(w, p) for p in constraint.forbidden):
            total += 1
    return total


class TestCountWords:
    @pytest.mark.parametrize("surjective", [False, True])
    @pytest.mark.parametrize(
        "forbidden", [(), ("212", "112", "213"), ("111", "212", "112", "213")]
    )
    def test_matches_brute_force(self, forbidden, surjective):
        for k in range(7):
            for b in range(1, 6):
                if surjective and b > k:
                    continue
                c = WordConstraint.of(k, b, forbidden, surjective)
                assert count_words(c) == brute_words(c), (k, b, forbidden, surjective)

    def test_forbidden_words_normalised(self):
        a = WordConstraint.of(5, 3, [(2, 1, 2)])
        b = WordConstraint.of(5, 3, ["101"])
        assert a.forbidden == b.forbidden
        assert count_words(a) == count_words(b)

    def test_single_letter_pattern_forbids_all(self):
        assert count_words(WordConstraint.of(4, 2, [(1,)])) == 0

    def test_surjective_needs_enough_length(self):
        with pytest.raises(ValueError):
            WordConstraint.of(2, 3, (), surjective=True)
