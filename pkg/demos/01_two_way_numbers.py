"""
Two-way binary numbers
======================

A rational is a pair of eventually periodic bit sequences around the
binary point.  Digits run leftward forever too, and that is enough to
hold every negative number without a sign.
"""

from fractions import Fraction

from uns.bitseq import (
    complement,
    decode_universal,
    encode_universal,
    flip,
    format_universal,
    parse_universal,
    render_universal_set,
)

# integers first: 19 is plain binary with a zero tail on the left
u19 = encode_universal(19)
print("19      ->", format_universal(u19))

# a negative integer is an all-ones tail, the two's complement pattern
# continued forever
u27 = encode_universal(-27)
print("-27     ->", format_universal(u27))

# fractions repeat on the right of the point
print("2/3     ->", format_universal(encode_universal(Fraction(2, 3))))
print("59/3    ->", format_universal(encode_universal(Fraction(59, 3))))

# dyadic rationals refuse to terminate: 3/4 ends in repeating ones
print("3/4     ->", format_universal(encode_universal(Fraction(3, 4))))

# complement flips every bit; the value comes out negated
c = complement(encode_universal(Fraction(59, 3)))
print("~59/3   ->", format_universal(c), "=", decode_universal(c))

# flip mirrors the whole sequence around the point
f = flip(parse_universal("(0).(10)"))
print("flip of .(10) ->", format_universal(f), "=", decode_universal(f))

# and a number is also just a set of bit positions
print("19 as a set:  ", render_universal_set(u19))
print("-27 as a set: ", render_universal_set(u27))
print("2/3 as a set: ", render_universal_set(encode_universal(Fraction(2, 3))))

# round trip everything in sight
for v in (19, -27, Fraction(2, 3), Fraction(-257, 7), Fraction(59, 3)):
    assert decode_universal(encode_universal(v)) == v
print("round trips exact")
