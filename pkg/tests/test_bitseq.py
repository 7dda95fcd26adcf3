import random
from fractions import Fraction

import pytest

from uns.bitseq import (
    LEFT,
    RIGHT,
    LeftPart,
    NotationError,
    PeriodicBits,
    RightPart,
    UniversalRational,
    canonicalize,
    complement,
    decode_left,
    decode_right,
    decode_universal,
    encode_fraction,
    encode_integer,
    encode_left_rational,
    encode_universal,
    flip,
    format_left,
    format_right,
    format_universal,
    from_index_set,
    normalize,
    parse_left,
    parse_universal,
    render_index_set,
    render_universal_set,
    to_index_set,
)

# ---------------------------------------------------------------------------
# oracles


def right_partial_sum(part: RightPart, n: int) -> Fraction:
    """Plain partial sum of the first n weights; the decoded value must
    sit within 2^-n above it."""
    total = Fraction(0)
    for i in range(n):
        total += Fraction(part.bits.bit_at(i), 1 << (i + 1))
    return total


def left_low_bits(part: LeftPart, n: int) -> int:
    v = 0
    for i in range(n):
        v |= part.bits.bit_at(i) << i
    return v


def random_periodic(rng: random.Random, max_pre=6, max_per=5) -> PeriodicBits:
    pre = tuple(rng.randint(0, 1) for _ in range(rng.randint(0, max_pre)))
    per = tuple(rng.randint(0, 1) for _ in range(rng.randint(1, max_per)))
    return PeriodicBits(pre, per)


def random_rational(rng: random.Random, max_den=200) -> Fraction:
    q = rng.randint(1, max_den)
    p = rng.randint(-max_den * 4, max_den * 4)
    return Fraction(p, q)


# ---------------------------------------------------------------------------
# worked constants


def test_left_periodic_block_evaluates_geometrically():
    left = parse_left("(101)001001.")
    assert decode_left(left) == Fraction(-257, 7)
    # the same split by hand: static 9 over six places, block 5 repeating
    assert 9 + 5 * Fraction(2**6, 1 - 2**3) == Fraction(-257, 7)


def test_right_alternating_block_is_two_thirds():
    assert decode_right(parse_universal(".(10)").right) == Fraction(2, 3)


def test_right_one_tail_is_three_quarters():
    assert decode_right(parse_universal(".10(1)").right) == Fraction(3, 4)


@pytest.mark.parametrize(
    "value, text",
    [
        (19, "(0)10011."),
        (-27, "(1)00101."),
        (-1, "(1)."),
        (0, "(0)."),
        (5, "(0)101."),
        (-2, "(1)0."),
    ],
)
def test_integer_encodings(value, text):
    assert format_left(encode_integer(value)) == text
    assert decode_left(parse_left(text)) == value


@pytest.mark.parametrize(
    "num, den, text",
    [
        (2, 3, ".(10)"),
        (3, 4, ".10(1)"),
        (1, 2, ".0(1)"),
        (1, 3, ".(01)"),
        (1, 6, ".0(01)"),
        (5, 6, ".1(10)"),
    ],
)
def test_fraction_encodings(num, den, text):
    assert format_right(encode_fraction(Fraction(num, den))) == text


def test_two_way_encoding_splits_at_the_floor():
    assert format_universal(encode_universal(Fraction(59, 3))) == "(0)10011.(10)"
    assert format_universal(encode_universal(Fraction(-59, 3))) == "(1)01100.(01)"


def test_left_rational_with_odd_denominator():
    assert format_left(encode_left_rational(Fraction(-257, 7))) == "(101)001001."
    assert format_left(encode_left_rational(Fraction(257, 7))) == "(010)110111."
    with pytest.raises(ValueError):
        encode_left_rational(Fraction(1, 2))


# ---------------------------------------------------------------------------
# decoding against partial sums


def test_right_decode_matches_partial_sums():
    rng = random.Random(101)
    for _ in range(200):
        part = RightPart(random_periodic(rng))
        value = decode_right(part)
        low = right_partial_sum(part, 64)
        assert low <= value <= low + Fraction(1, 1 << 64)


def test_left_decode_agrees_with_low_bits_two_adically():
    # low n bits match the value modulo 2^n, odd denominators
    rng = random.Random(202)
    for _ in range(200):
        q = rng.randrange(1, 100, 2)
        p = rng.randint(-300, 300)
        value = Fraction(p, q)
        part = encode_left_rational(value)
        for n in (1, 5, 16):
            inv = pow(value.denominator, -1, 1 << n)
            assert left_low_bits(part, n) == value.numerator * inv % (1 << n)


def test_negative_one_is_all_ones():
    part = encode_integer(-1)
    assert left_low_bits(part, 20) == (1 << 20) - 1


# ---------------------------------------------------------------------------
# round trips and uniqueness


def test_encode_decode_round_trip():
    rng = random.Random(303)
    seen = {}
    for _ in range(500):
        value = random_rational(rng)
        u = encode_universal(value)
        assert decode_universal(u) == value
        text = format_universal(u)
        if text in seen:
            assert seen[text] == value
        seen[text] = value
    assert len(set(seen.values())) == len(seen)


def test_canonical_right_parts_never_terminate():
    rng = random.Random(404)
    for _ in range(300):
        value = random_rational(rng)
        u = encode_universal(value)
        if not u.right.is_zero:
            assert any(u.right.bits.period)
            assert not all(
                b == 1 for b in u.right.bits.preperiod + u.right.bits.period
            )


# ---------------------------------------------------------------------------
# normalization


@pytest.mark.parametrize(
    "before, after, orientation",
    [
        (".10(10)", ".(10)", RIGHT),
        (".11(0)", ".10(1)", RIGHT),
        (".1(0)", ".0(1)", RIGHT),
        (".(1111)", ".(1)", RIGHT),
        (".000(0)", ".(0)", RIGHT),
        ("(1)1.", "(1).", LEFT),
        ("(10)1.", "(01).", LEFT),
        ("(0101)01.", "(01).", LEFT),
    ],
)
def test_normalize_examples(before, after, orientation):
    u = parse_universal(before if orientation == RIGHT else before)
    bits = u.right.bits if orientation == RIGHT else u.left.bits
    normalized = normalize(bits, orientation)
    expected = parse_universal(after)
    want = expected.right.bits if orientation == RIGHT else expected.left.bits
    assert normalized == want


def test_normalize_preserves_value_and_is_idempotent():
    rng = random.Random(505)
    for _ in range(300):
        bits = random_periodic(rng)
        for orientation, wrap, decode in (
            (LEFT, LeftPart, decode_left),
            (RIGHT, RightPart, decode_right),
        ):
            out = normalize(bits, orientation)
            assert normalize(out, orientation) == out
            assert decode(wrap(out)) == decode(wrap(bits))


def test_encoders_emit_already_minimal_forms():
    rng = random.Random(606)
    for _ in range(200):
        u = encode_universal(random_rational(rng))
        assert normalize(u.left.bits, LEFT) == u.left.bits
        assert normalize(u.right.bits, RIGHT) == u.right.bits


# ---------------------------------------------------------------------------
# complement


def test_complement_of_worked_left_form():
    u = parse_universal("(101)001001.")
    out = complement(u)
    assert format_universal(out) == "(010)110111.(0)"
    assert decode_universal(out) == Fraction(257, 7)


def test_complement_of_two_way_form():
    out = complement(parse_universal("(0).(10)"))
    assert format_universal(out) == "(1).(01)"
    assert decode_universal(out) == Fraction(-2, 3)


def test_complement_negates_and_involutes():
    rng = random.Random(707)
    for _ in range(300):
        value = random_rational(rng)
        u = encode_universal(value)
        c = complement(u)
        assert decode_universal(c) == -value
        assert complement(c) == u


def test_complement_handles_the_zero_tail_carry():
    # complementing a zero right side produces all ones, worth exactly
    # one carry into the left part
    assert decode_universal(complement(encode_universal(19))) == -19
    assert decode_universal(complement(encode_universal(0))) == 0


def test_complement_of_raw_terminating_form():
    out = complement(parse_universal("(0).11001(0)"))
    assert decode_universal(out) == Fraction(-25, 32)


# ---------------------------------------------------------------------------
# flip


def test_flip_mirrors_the_worked_integer():
    out = flip(parse_universal("(0)10011.(0)"))
    assert format_universal(out) == "(0).11001(0)"
    assert decode_universal(out) == Fraction(25, 32)


def test_flip_of_two_thirds_mirror_evaluates_to_minus_third():
    out = flip(parse_universal("(0).(10)"))
    assert decode_universal(out) == Fraction(-1, 3)


def test_flip_is_a_bitwise_involution():
    rng = random.Random(808)
    for _ in range(300):
        u = UniversalRational(
            LeftPart(random_periodic(rng)), RightPart(random_periodic(rng))
        )
        assert flip(flip(u)) == u


def test_flip_canonical_mode_normalizes():
    out = flip(parse_universal("(1)."), raw=False)
    assert format_universal(out) == "(0)1.(0)"
    assert out.canonical


# ---------------------------------------------------------------------------
# index sets


def test_index_sets_of_worked_examples():
    left19 = to_index_set(parse_universal("(0)10011.").left)
    assert left19.finite == (0, 1, 4)
    assert left19.tail is None

    left27 = to_index_set(parse_universal("(1)00101.").left)
    assert left27.finite == (0, 2)
    assert left27.tail == (5, 1, (0,))

    right23 = to_index_set(parse_universal(".(10)").right)
    assert right23.finite == ()
    assert right23.tail == (1, 2, (0,))


def test_index_set_round_trip_is_bitwise_on_minimal_forms():
    # the set view cannot distinguish "(0)" from "(00)", so faithfulness
    # is up to normalization
    rng = random.Random(909)
    for _ in range(300):
        for wrap, orientation in ((LeftPart, LEFT), (RightPart, RIGHT)):
            part = wrap(normalize(random_periodic(rng), orientation))
            assert from_index_set(to_index_set(part)) == part


def test_index_set_rendering():
    assert render_index_set(to_index_set(parse_universal("(1)00101.").left)) == (
        "-{...,8,7,6,5,2,0}"
    )
    assert render_index_set(to_index_set(parse_universal(".(10)").right)) == (
        "{1,3,5,7,...}+"
    )
    assert render_universal_set(encode_universal(Fraction(-59, 3))) == (
        "-{...,8,7,6,5,3,2 : 2,4,6,8,...}+"
    )


def test_from_index_set_rejects_malformed_views():
    from uns.bitseq import IndexSetView

    with pytest.raises(ValueError):
        from_index_set(IndexSetView(LEFT, (0,), (3, 2, (0, 2))))
    with pytest.raises(ValueError):
        from_index_set(IndexSetView(RIGHT, (0,), None))  # below base
    with pytest.raises(ValueError):
        from_index_set(IndexSetView(LEFT, (5,), (2, 1, (0,))))  # past tail


# ---------------------------------------------------------------------------
# notation


@pytest.mark.parametrize(
    "text",
    ["(101)001001.", "(0)10011.(10)", ".(10)", "(1).", ".10(1)", "."],
)
def test_notation_round_trip(text):
    u = parse_universal(text)
    assert parse_universal(format_universal(u)) == u


def test_parse_defaults_omitted_blocks_to_zero():
    assert parse_universal("101.") == parse_universal("(0)101.(0)")


@pytest.mark.parametrize(
    "bad", ["", "101", "(2)1.", "1.()", "(.)", "1..0", "(01.", "1.2"]
)
def test_parse_rejects_garbage(bad):
    with pytest.raises(NotationError):
        parse_universal(bad)


def test_parse_left_requires_empty_right_side():
    with pytest.raises(NotationError):
        parse_left("(0)1.01")


def test_canonicalize_marks_and_minimizes():
    u = parse_universal("(00)0101.11(0)")
    c = canonicalize(u)
    assert c.canonical
    assert decode_universal(c) == decode_universal(u)
    assert format_universal(c) == "(0)101.10(1)"
