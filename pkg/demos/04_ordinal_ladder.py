"""
Ordinals below epsilon_0
========================

Cantor normal form makes ordinal arithmetic a finite computation: a
sum of w-powers with natural coefficients, kept sorted.  The same
tower that exploded the integers climbs to epsilon_0 here.
"""

from uns.ordinals import (
    EPSILON_0,
    format_ordinal,
    fundamental,
    omega_hyper,
    omega_hyper_limit,
    ord_add,
    ord_cmp,
    ord_mul,
    ord_pow,
    parse_ordinal,
)

w = parse_ordinal("w")
one = parse_ordinal("1")

# addition absorbs from the left, so it refuses to commute
print("1 + w =", format_ordinal(ord_add(one, w)))
print("w + 1 =", format_ordinal(ord_add(w, one)))

a = parse_ordinal("w^2 + w*3")
b = parse_ordinal("w^(w + 1)*2 + 4")
print("sum   ", format_ordinal(ord_add(a, b)))
print("product", format_ordinal(ord_mul(a, b)))
print("power  ", format_ordinal(ord_pow(parse_ordinal("w + 1"), parse_ordinal("2"))))

# finite bases collapse: 2^w is already w
print("2^w    =", format_ordinal(ord_pow(parse_ordinal("2"), w)))
print("2^(w^2) =", format_ordinal(ord_pow(parse_ordinal("2"), parse_ordinal("w^2"))))

# the omega tower, level by level
for n in range(1, 4):
    print(f"tower of {n}:", format_ordinal(omega_hyper(2, n)))
for k in range(3):
    lim = omega_hyper_limit(k)
    print(f"level-{k} limit:", format_ordinal(lim) if lim is not EPSILON_0 else str(lim))

# every limit ordinal is approached along a fundamental sequence
for text in ("w", "w^2", "w^w", "w^(w + 1)"):
    e = parse_ordinal(text)
    steps = [format_ordinal(fundamental(e, n)) for n in (1, 2, 3)]
    print(f"{text}[1..3] =", ", ".join(steps))

# epsilon_0 is the wall: its fundamental sequence is the tower itself
print("eps_0[3] =", format_ordinal(fundamental(EPSILON_0, 3)))
assert ord_cmp(fundamental(EPSILON_0, 3), omega_hyper(2, 3)) == 0
