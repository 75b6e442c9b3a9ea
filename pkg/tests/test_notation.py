import random

import pytest
from hypothesis import given, settings, strategies as st

from commgraph import (
    ParseError,
    PTrans,
    UNDEF,
    empty,
    format_cycles,
    format_tabular,
    identity,
    parse_chain_cycle,
    parse_element,
    parse_idempotent,
    parse_tabular,
    power,
)


class TestTabular:
    def test_cycle(self):
        assert parse_tabular("2 3 4 1") == PTrans(4, (1, 2, 3, 0))

    def test_idempotent_display(self):
        assert parse_tabular("3 4 3 4") == PTrans(4, (2, 3, 2, 3))

    def test_partial(self):
        assert parse_tabular("2 - 4 1") == PTrans(4, (1, UNDEF, 3, 0))
        assert parse_tabular("2 - 4 1").dom() == {0, 2, 3}

    def test_bad_token_has_position(self):
        with pytest.raises(ParseError) as err:
            parse_tabular("2 x 4 1")
        assert err.value.pos == 2

    def test_out_of_range_label(self):
        with pytest.raises(ParseError):
            parse_tabular("2 5 4 1")

    def test_wrong_count(self):
        with pytest.raises(ParseError):
            parse_tabular("2 3 4 1", n=5)

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_tabular("   ")


class TestChainCycle:
    def test_n4_witness(self):
        assert parse_chain_cycle("[1 2 3](3 4)", 4) == PTrans(4, (1, 2, 3, 2))

    def test_n6_witness(self):
        t = parse_chain_cycle("[6 4 1 2](2 3 5)", 6)
        assert t == PTrans(6, (1, 2, 4, 0, 1, 3))

    def test_eight_cycle(self):
        t = parse_chain_cycle("(1 2 3 4 5 6 7 8)")
        assert t.n == 8 and t.is_full_cycle()

    def test_chain_into_chain(self):
        t = parse_chain_cycle("[1 2][2 3](3 4)", 4)
        assert t == PTrans(4, (1, 2, 3, 2))

    def test_uncovered_labels_stay_undefined(self):
        t = parse_chain_cycle("(1 2)", 4)
        assert t == PTrans.from_pairs(4, {0: 1, 1: 0})
        assert not t.is_full()

    def test_pure_cycles_covering_make_permutation(self):
        assert parse_chain_cycle("(1 3)(2 4)").is_permutation()

    def test_full_iff_covering(self):
        assert parse_chain_cycle("[1 2](2 3)", 3).is_full()
        assert not parse_chain_cycle("[1 2](2 3)", 4).is_full()

    def test_duplicate_image(self):
        with pytest.raises(ParseError) as err:
            parse_chain_cycle("[1 2](1 3)")
        assert "two images" in str(err.value)

    def test_dangling_attachment(self):
        with pytest.raises(ParseError) as err:
            parse_chain_cycle("[1 2 3]")
        assert "attachment" in str(err.value)

    def test_single_label_chain_rejected(self):
        with pytest.raises(ParseError):
            parse_chain_cycle("[3](1 2 3)")

    def test_label_beyond_n(self):
        with pytest.raises(ParseError):
            parse_chain_cycle("(1 5)", 4)

    def test_unbalanced(self):
        with pytest.raises(ParseError):
            parse_chain_cycle("(1 2")

    def test_fixed_point_cycle(self):
        assert parse_chain_cycle("(1)(2)") == identity(2)


class TestIdempotent:
    def test_n6_display(self):
        t = parse_idempotent("{2 6 -> 2}{3 4 -> 3}{5 1 -> 5}")
        assert t == PTrans(6, (4, 1, 2, 2, 4, 1))
        assert format_tabular(t) == "5 2 3 3 5 2"

    def test_n8_display(self):
        t = parse_idempotent("{1 8 -> 1}{2 5 7 -> 2}{3 4 6 -> 3}")
        assert format_tabular(t) == "1 2 3 3 2 3 2 1"

    def test_singleton(self):
        assert parse_idempotent("{1 -> 1}") == identity(1)

    def test_rep_must_be_inside(self):
        with pytest.raises(ParseError):
            parse_idempotent("{2 6 -> 3}")

    def test_overlapping_blocks(self):
        with pytest.raises(ParseError) as err:
            parse_idempotent("{1 2 -> 1}{2 3 -> 3}")
        assert "two blocks" in str(err.value)

    def test_missing_arrow(self):
        with pytest.raises(ParseError):
            parse_idempotent("{1 2}")

    @settings(max_examples=60, deadline=None)
    @given(st.integers(min_value=1, max_value=6), st.randoms(use_true_random=False))
    def test_output_always_idempotent(self, n, rnd):
        labels = list(range(1, n + 1))
        rnd.shuffle(labels)
        cut = rnd.randint(1, n)
        blocks = []
        start = 0
        while start < cut:
            end = rnd.randint(start + 1, cut)
            block = labels[start:end]
            blocks.append(f"{{{' '.join(map(str, block))} -> {rnd.choice(block)}}}")
            start = end
        assert parse_idempotent("".join(blocks), n).is_idempotent()


class TestElementDispatch:
    def test_power_suffix(self):
        base = parse_chain_cycle("(1 2 3 4 5 6)")
        assert parse_element("(1 2 3 4 5 6)^3") == power(base, 3)

    def test_power_on_tabular(self):
        assert parse_element("2 3 4 1^2") == power(parse_tabular("2 3 4 1"), 2)

    def test_bad_power(self):
        with pytest.raises(ParseError):
            parse_element("(1 2)^0")

    def test_dispatch(self):
        assert parse_element("{1 2 -> 1}") == parse_idempotent("{1 2 -> 1}")
        assert parse_element("- 1 -") == PTrans(3, (UNDEF, 0, UNDEF))

    def test_empty_text(self):
        with pytest.raises(ParseError):
            parse_element("  ")


class TestFormatting:
    def test_tabular_empty(self):
        assert format_tabular(empty(3)) == "- - -"

    def test_cycles_of_square(self):
        sq = power(parse_tabular("2 3 4 1"), 2)
        assert format_cycles(sq) == "(1 3)(2 4)"

    def test_cycles_include_fixed_points(self):
        t = parse_tabular("2 1 3 4")
        assert format_cycles(t) == "(1 2)(3)(4)"

    def test_round_trip_tabular_random(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(1, 7)
            t = PTrans.decode(rng.randrange((n + 1) ** n), n)
            assert parse_tabular(format_tabular(t)) == t

    def test_round_trip_cycles_random(self):
        rng = random.Random(12)
        for _ in range(200):
            n = rng.randint(1, 7)
            images = list(range(n))
            rng.shuffle(images)
            t = PTrans(n, tuple(images))
            assert parse_chain_cycle(format_cycles(t), n) == t
