import random

import pytest

from translocsearch.automaton import OpCounter, SearchState, automaton_search
from translocsearch.dawg import ROOT, build_dawg, suffix_state
from translocsearch.dp import dp_search
from translocsearch.oracle import naive_search
from translocsearch.seqcore import encode, infer_alphabet

from helpers import (
    EX2_X,
    EX2_Y,
    EX3_X,
    EX3_Y,
    EX4_X,
    EX4_Y,
    bits,
    brute_factor_suffix_ends,
    encode_pair,
    rand_str,
)


def search_str(x: str, y: str):
    pat, txt = encode_pair(x, y)
    return automaton_search(pat, txt)


class TestSearch:
    def test_known_two_swap_match(self):
        report, _ = search_str(EX2_X, EX2_Y)
        assert report.end_positions == (12,)

    def test_interior_exact_occurrence(self):
        report, _ = search_str("abc", "xabcx")
        assert report.end_positions == (4,)

    def test_unequal_length_swap(self):
        report, _ = search_str("abc", "bca")
        assert report.end_positions == (3,)

    def test_agrees_with_dp_on_example_strings(self):
        pat, txt = encode_pair(EX4_X, EX4_Y)
        report, _ = automaton_search(pat, txt)
        assert report.end_positions == dp_search(pat, txt).end_positions

    def test_accepts_plain_iterable_of_codes(self):
        pat, txt = encode_pair("ab", "ba")
        report, _ = automaton_search(pat, iter(txt.codes))
        assert report.end_positions == (2,)

    def test_empty_pattern_rejected(self):
        with pytest.raises(ValueError, match="empty pattern"):
            SearchState(encode("", infer_alphabet("")))


class TestStep:
    def test_symbol_outside_pattern(self):
        alphabet = infer_alphabet("abc")
        state = SearchState(encode("abc", alphabet))
        matched = state.step(alphabet.sentinel)
        assert matched is False
        assert state.config(1).state == ROOT
        assert state.config(1).length == 0
        assert bits(state.prefix_set(1)) == {0}

    def test_first_position_extension_only(self):
        pat, txt = encode_pair("ab", "ab")
        state = SearchState(pat)
        state.step(txt.codes[0])
        assert bits(state.prefix_set(1)) == {0, 1}

    def test_single_swap_hand_trace(self):
        pat, txt = encode_pair("ab", "ba")
        state = SearchState(pat)
        assert state.step(txt.codes[0]) is False
        assert bits(state.prefix_set(1)) == {0}
        assert state.step(txt.codes[1]) is True
        assert 2 in bits(state.prefix_set(2))

    def test_counters_monotone(self):
        pat, txt = encode_pair(EX2_X, EX2_Y + EX2_Y)
        state = SearchState(pat)
        last = (0, 0, 0, 0, 0)
        for code in txt.codes:
            state.step(code)
            c = state.counter
            now = (
                c.delta_steps,
                c.suffix_hops,
                c.inner_iterations,
                c.endpos_queries,
                c.insertions,
            )
            assert all(b >= a for a, b in zip(last, now))
            last = now


class TestFactorEndSets:
    def test_example_text_prefix(self):
        pat, txt = encode_pair(EX3_X, EX3_Y)
        state = SearchState(pat)
        for code in txt.codes[:5]:
            state.step(code)
        assert bits(state.factor_end_set(5, 3)) == {3, 7, 13}
        assert bits(state.factor_end_set(5, 2)) == {3, 7, 10, 13}

    def test_full_length_equals_state_end_positions(self):
        pat, txt = encode_pair(EX3_X, EX3_Y)
        state = SearchState(pat)
        for code in txt.codes[:5]:
            state.step(code)
        cfg = state.config(5)
        assert state.factor_end_set(5, cfg.length) == state.dawg.endpos[cfg.state]

    def test_too_long_suffix_gives_empty_set(self):
        pat, txt = encode_pair("ab", "zzz")
        state = SearchState(pat)
        for code in txt.codes:
            state.step(code)
        assert state.factor_end_set(3, 1) == 0
        assert state.factor_end_set(3, 2) == 0

    def test_matches_brute_force(self):
        rng = random.Random(101)
        for _ in range(30):
            sigma = rng.choice([2, 4])
            x = rand_str(rng, sigma, rng.randint(1, 10))
            y = rand_str(rng, sigma, rng.randint(0, 30))
            pat, txt = encode_pair(x, y)
            state = SearchState(pat)
            for j, code in enumerate(txt.codes, start=1):
                state.step(code)
                for k in range(1, state.config(j).length + 1):
                    assert bits(state.factor_end_set(j, k)) == (
                        brute_factor_suffix_ends(x, y[:j], k)
                    ), (x, y, j, k)


class TestCountdownWalk:
    def test_agrees_with_random_access_suffix_state(self):
        # the translocation loops step u to its suffix link exactly when h
        # reaches the link length; the result must equal suffix_state for
        # every start length valid for the state
        rng = random.Random(59)
        for _ in range(20):
            x = rand_str(rng, rng.choice([2, 4]), rng.randint(1, 16))
            d = build_dawg(encode(x, infer_alphabet(x)))
            for q in range(1, d.state_count):
                low = d.lens[d.suf[q]] + 1
                for start in range(low, d.lens[q] + 1):
                    u = q
                    for h in range(start, 0, -1):
                        if d.link_len[u] == h:
                            u = d.suf[u]
                        assert u == suffix_state(d, q, h), (x, q, start, h)


class TestEquivalence:
    def test_against_dp_random(self):
        rng = random.Random(71)
        for _ in range(50):
            sigma = rng.choice([2, 4, 20])
            x = rand_str(rng, sigma, rng.randint(1, 16))
            y = rand_str(rng, sigma, rng.randint(0, 200))
            pat, txt = encode_pair(x, y)
            report, _ = automaton_search(pat, txt)
            assert report.end_positions == dp_search(pat, txt).end_positions, (
                x,
                y,
            )

    def test_against_enumeration_oracle_random(self):
        rng = random.Random(83)
        for _ in range(250):
            sigma = rng.choice([2, 4])
            x = rand_str(rng, sigma, rng.randint(1, 8))
            y = rand_str(rng, sigma, rng.randint(len(x), 20))
            pat, txt = encode_pair(x, y)
            report, _ = automaton_search(pat, txt)
            assert report.end_positions == naive_search(pat, txt).end_positions


class TestResourceBounds:
    def test_footprint_independent_of_text_length(self):
        rng = random.Random(97)
        x = rand_str(rng, 4, 16)
        pat = encode(x, infer_alphabet(x))
        footprints = []
        for n in (1_000, 5_000):
            state = SearchState(pat)
            r = random.Random(5)
            for _ in range(n):
                state.step(r.randrange(4))
            # every live mask stays within its m+1-bit budget
            assert all(p.bit_length() <= pat.length + 1 for p in state.prefix_sets)
            footprints.append(state.footprint())
        assert footprints[0] == footprints[1]

    def test_unary_worst_case_step_bound(self):
        m, n = 6, 24
        pat, txt = encode_pair("a" * m, "a" * n)
        state = SearchState(pat)
        bound = (m + 1) * m * (m + 1)
        before = 0
        for code in txt.codes:
            state.step(code)
            after = state.counter.inner_iterations
            assert after - before <= bound
            before = after

    def test_disjoint_alphabets_do_no_inner_work(self):
        pat, txt = encode_pair("aaa", "bbbbbbbb")
        report, counter = automaton_search(pat, txt)
        assert report.end_positions == ()
        assert counter.inner_iterations == 0


def test_opcounter_starts_at_zero():
    c = OpCounter()
    assert (
        c.delta_steps,
        c.suffix_hops,
        c.inner_iterations,
        c.endpos_queries,
        c.insertions,
    ) == (0, 0, 0, 0, 0)
