"""Eventually periodic two-way binary sequences and exact rational codecs.

A value is written as bits around a binary point.  The left side grows
leftward and ends in a repeating block, two's-complement style: integers
end in (0), negative integers in (1), and other odd-denominator rationals
in longer blocks.  The right side grows rightward the same way.  Text
notation is

    LEFT '.' RIGHT        e.g.  "(0)10011.(10)"  for 59/3

where each side is plain bits plus an optional parenthesised repeat
block; an omitted block means "(0)".  The left block repeats leftward,
the right block rightward.

Left positions are indexed 0, 1, 2, ... moving away from the point and
right positions 1, 2, 3, ...  Internally both sides are stored nearest
the point first, so left index k-1 and right index k sit at the same
list position and mirroring a number is a plain swap of the two sides.

A left sequence with preperiod value b (weights 2^i), repeating-block
value a, preperiod length n and block length p evaluates to

    b + a * 2^n / (1 - 2^p)

which is what makes ...111. equal -1.  Right sequences evaluate to the
limit of their partial sums, always in [0, 1].  Values in (0, 1) get a
nonterminating canonical form: terminating expansions are rewritten to
end in (1), so 3/4 is ".10(1)" and never ".11".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

LEFT = "left"
RIGHT = "right"


class NotationError(ValueError):
    """Raised when text does not denote a two-way sequence."""


@dataclass(frozen=True)
class PeriodicBits:
    """Bits stored nearest the binary point first, plus a repeating block.

    The block is never empty; an all-zero block encodes a terminating
    (or, on the left, nonnegative-integer) tail.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("repeating block must be nonempty")
        for b in self.preperiod + self.period:
            if b not in (0, 1):
                raise ValueError(f"bad bit {b!r}")

    def bit_at(self, i: int) -> int:
        """Bit at distance i from the point (0-based on the stored order)."""
        if i < 0:
            raise ValueError("negative bit position")
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    @property
    def all_zero(self) -> bool:
        return not any(self.preperiod) and not any(self.period)

    @property
    def all_one(self) -> bool:
        return all(self.preperiod) and all(self.period)


ZERO_BITS = PeriodicBits((), (0,))


def normalize(p: PeriodicBits, orientation: str) -> PeriodicBits:
    """Minimal form: primitive block, no absorbable preperiod bits.

    Right orientation additionally rewrites terminating expansions of
    nonzero values to the (1)-tail form, e.g. ".11(0)" -> ".10(1)".
    """
    if orientation not in (LEFT, RIGHT):
        raise ValueError(f"bad orientation {orientation!r}")
    pre = list(p.preperiod)
    per = list(p.period)

    # primitive repeating block
    n = len(per)
    for d in range(1, n + 1):
        if n % d == 0 and all(per[i] == per[i % d] for i in range(n)):
            per = per[:d]
            break

    if orientation == RIGHT and not any(per):
        # terminating; move to the (1)-tail unless the value is zero
        while pre and pre[-1] == 0:
            pre.pop()
        if pre:
            pre[-1] = 0
            per = [1]

    # absorb preperiod bits that already match the block
    while pre and pre[-1] == per[-1]:
        per.insert(0, per.pop())
        pre.pop()

    return PeriodicBits(tuple(pre), tuple(per))


def _bitnot(p: PeriodicBits) -> PeriodicBits:
    return PeriodicBits(
        tuple(1 - b for b in p.preperiod), tuple(1 - b for b in p.period)
    )


@dataclass(frozen=True)
class LeftPart:
    """Leftward sequence; indices 0, 1, 2, ... carry weights 2^0, 2^1, ..."""

    bits: PeriodicBits = ZERO_BITS

    @property
    def value(self) -> Fraction:
        return decode_left(self)

    @property
    def is_zero(self) -> bool:
        return self.bits.all_zero


@dataclass(frozen=True)
class RightPart:
    """Rightward sequence; indices 1, 2, 3, ... carry weights 2^-1, 2^-2, ...

    Raw forms may be terminating or even all ones (value 1, as produced
    by complementing a zero tail); canonical forms are either the zero
    tail or nonterminating with value in (0, 1).
    """

    bits: PeriodicBits = ZERO_BITS

    @property
    def value(self) -> Fraction:
        return decode_right(self)

    @property
    def is_zero(self) -> bool:
        return self.bits.all_zero


@dataclass(frozen=True)
class UniversalRational:
    """A two-way sequence: one left part, one right part.

    `canonical` marks outputs of the encoders and of canonicalize(); it
    is display metadata and never takes part in equality.
    """

    left: LeftPart
    right: RightPart
    canonical: bool = field(default=False, compare=False)

    @property
    def value(self) -> Fraction:
        return decode_left(self.left) + decode_right(self.right)

    def __str__(self) -> str:
        return format_universal(self)


def _low_value(bits: tuple[int, ...]) -> int:
    # stored order: weight 2^i at list position i.  Bit-at-a-time shifting
    # is quadratic in len(bits); int() parses binary text in linear time.
    if not bits:
        return 0
    return int("".join(map(str, reversed(bits))), 2)


def _written_value(bits: tuple[int, ...]) -> int:
    # right side stored order doubles as the written msb-first order
    if not bits:
        return 0
    return int("".join(map(str, bits)), 2)


def decode_left(l: LeftPart) -> Fraction:
    pre, per = l.bits.preperiod, l.bits.period
    b = _low_value(pre)
    a = _low_value(per)
    return b + Fraction(a << len(pre), 1 - (1 << len(per)))


def decode_right(r: RightPart) -> Fraction:
    pre, per = r.bits.preperiod, r.bits.period
    b = _written_value(pre)
    a = _written_value(per)
    block = (1 << len(per)) - 1
    return Fraction(b * block + a, (1 << len(pre)) * block)


def decode_universal(u: UniversalRational) -> Fraction:
    return decode_left(u.left) + decode_right(u.right)


def encode_left_rational(value: Fraction | int) -> LeftPart:
    """Left sequence of any rational with odd denominator.

    Digits come from the parity of the running numerator; the numerator
    state determines the whole tail, so the first repeated state gives
    the minimal preperiod and block.
    """
    value = Fraction(value)
    den = value.denominator
    if den % 2 == 0:
        raise ValueError("left sequences need an odd denominator")
    num = value.numerator
    seen: dict[int, int] = {}
    digits: list[int] = []
    while num not in seen:
        seen[num] = len(digits)
        bit = num & 1
        digits.append(bit)
        num = (num - bit * den) // 2
    cut = seen[num]
    return LeftPart(PeriodicBits(tuple(digits[:cut]), tuple(digits[cut:])))


def encode_integer(z: int) -> LeftPart:
    return encode_left_rational(Fraction(z))


def encode_fraction(q: Fraction) -> RightPart:
    """Canonical right sequence of q in (0, 1).

    Plain base-2 long division; the remainder determines the tail, so
    the first repeated remainder gives the minimal split.  Terminating
    expansions are rewritten to the (1)-tail form.
    """
    q = Fraction(q)
    if not 0 < q < 1:
        raise ValueError(f"{q} is not strictly between 0 and 1")
    num, den = q.numerator, q.denominator
    seen: dict[int, int] = {}
    digits: list[int] = []
    r = num
    while r and r not in seen:
        seen[r] = len(digits)
        r *= 2
        digits.append(r // den)
        r %= den
    if r == 0:
        return RightPart(normalize(PeriodicBits(tuple(digits), (0,)), RIGHT))
    cut = seen[r]
    return RightPart(PeriodicBits(tuple(digits[:cut]), tuple(digits[cut:])))


def encode_universal(q: Fraction | int) -> UniversalRational:
    """Canonical two-way form: floor on the left, the rest on the right."""
    q = Fraction(q)
    whole = q.numerator // q.denominator
    frac = q - whole
    right = encode_fraction(frac) if frac else RightPart(ZERO_BITS)
    return UniversalRational(encode_integer(whole), right, canonical=True)


def canonicalize(u: UniversalRational) -> UniversalRational:
    """Minimal parts plus the dyadic tail rule.

    A right part of value 1 (all ones, e.g. from complementing a zero
    tail) carries into the left part.
    """
    lb = normalize(u.left.bits, LEFT)
    rb = normalize(u.right.bits, RIGHT)
    if rb == PeriodicBits((), (1,)):
        left = encode_left_rational(decode_left(LeftPart(lb)) + 1)
        return UniversalRational(left, RightPart(ZERO_BITS), canonical=True)
    return UniversalRational(LeftPart(lb), RightPart(rb), canonical=True)


def complement(u: UniversalRational) -> UniversalRational:
    """Bitwise complement of both sides, canonicalized. Negates the value."""
    raw = UniversalRational(
        LeftPart(_bitnot(u.left.bits)), RightPart(_bitnot(u.right.bits))
    )
    return canonicalize(raw)


def flip(u: UniversalRational, raw: bool = True) -> UniversalRational:
    """Mirror around the point: right index k trades with left index k-1.

    In stored order that is a plain swap of the two sides, so flipping
    twice is the identity on raw forms.
    """
    out = UniversalRational(LeftPart(u.right.bits), RightPart(u.left.bits))
    return out if raw else canonicalize(out)


# ---------------------------------------------------------------------------
# index-set view


@dataclass(frozen=True)
class IndexSetView:
    """Positions of the one-bits: finitely many named indices plus an
    optional arithmetic tail (start, stride, offsets-within-stride)."""

    orientation: str
    finite: tuple[int, ...]
    tail: tuple[int, int, tuple[int, ...]] | None = None


def to_index_set(part: LeftPart | RightPart) -> IndexSetView:
    if isinstance(part, LeftPart):
        orientation, base = LEFT, 0
    elif isinstance(part, RightPart):
        orientation, base = RIGHT, 1
    else:
        raise TypeError(f"not a sequence part: {part!r}")
    pre, per = part.bits.preperiod, part.bits.period
    finite = tuple(base + i for i, b in enumerate(pre) if b)
    tail = None
    if any(per):
        offsets = tuple(j for j, b in enumerate(per) if b)
        tail = (base + len(pre), len(per), offsets)
    return IndexSetView(orientation, finite, tail)


def from_index_set(view: IndexSetView) -> LeftPart | RightPart:
    if view.orientation == LEFT:
        base = 0
    elif view.orientation == RIGHT:
        base = 1
    else:
        raise ValueError(f"bad orientation {view.orientation!r}")

    if view.tail is None:
        pre_len = max((i - base + 1 for i in view.finite), default=0)
        per = (0,)
    else:
        start, stride, offsets = view.tail
        if stride < 1:
            raise ValueError("tail stride must be positive")
        if start < base:
            raise ValueError("tail starts before the first index")
        if len(set(offsets)) != len(offsets) or any(
            not 0 <= o < stride for o in offsets
        ):
            raise ValueError("tail offsets must be distinct and below the stride")
        pre_len = start - base
        per = tuple(1 if j in set(offsets) else 0 for j in range(stride))

    pre = [0] * pre_len
    for i in view.finite:
        k = i - base
        if not 0 <= k < pre_len:
            raise ValueError(f"index {i} outside the finite range")
        if pre[k]:
            raise ValueError(f"index {i} listed twice")
        pre[k] = 1

    bits = PeriodicBits(tuple(pre), per)
    return LeftPart(bits) if view.orientation == LEFT else RightPart(bits)


def render_index_set(view: IndexSetView) -> str:
    """Human form: "-{...,8,7,6,5,2,0}" on the left, "{1,3,5,...}+" on the right."""
    elems = list(view.finite)
    dots = False
    if view.tail is not None:
        start, stride, offsets = view.tail
        if offsets:
            cycles = max(2, -(-4 // len(offsets)))
            for cycle in range(cycles):
                elems.extend(start + cycle * stride + o for o in offsets)
            dots = True
    elems.sort()
    if view.orientation == RIGHT:
        body = ",".join(str(e) for e in elems) + (",..." if dots else "")
        return "{" + body + "}+"
    elems.reverse()
    body = ("...," if dots else "") + ",".join(str(e) for e in elems)
    return "-{" + body + "}"


def render_universal_set(u: UniversalRational) -> str:
    lv = to_index_set(u.left)
    rv = to_index_set(u.right)
    if u.right.is_zero:
        return render_index_set(lv)
    if u.left.is_zero:
        return render_index_set(rv)
    left_body = render_index_set(lv)[2:-1]  # strip "-{" and "}"
    right_body = render_index_set(rv)[1:-2]
    return "-{" + left_body + " : " + right_body + "}+"


# ---------------------------------------------------------------------------
# text notation

_NOTATION = re.compile(
    r"(?:\((?P<lper>[01]+)\))?(?P<lpre>[01]*)"
    r"\."
    r"(?P<rpre>[01]*)(?:\((?P<rper>[01]+)\))?"
)


def parse_universal(text: str) -> UniversalRational:
    """Parse notation like "(0)10011.(10)" without normalizing it."""
    m = _NOTATION.fullmatch(text.strip())
    if m is None:
        raise NotationError(f"not a two-way sequence: {text!r}")
    lper = tuple(int(c) for c in reversed(m["lper"] or "0"))
    lpre = tuple(int(c) for c in reversed(m["lpre"] or ""))
    rpre = tuple(int(c) for c in m["rpre"] or "")
    rper = tuple(int(c) for c in m["rper"] or "0")
    return UniversalRational(
        LeftPart(PeriodicBits(lpre, lper)), RightPart(PeriodicBits(rpre, rper))
    )


def parse_left(text: str) -> LeftPart:
    text = text.strip()
    if not text.endswith("."):
        text += "."
    u = parse_universal(text)
    if not u.right.is_zero:
        raise NotationError(f"not a left-only sequence: {text!r}")
    return u.left


def format_left(l: LeftPart) -> str:
    pre, per = l.bits.preperiod, l.bits.period
    per_s = "".join(str(b) for b in reversed(per))
    pre_s = "".join(str(b) for b in reversed(pre))
    return f"({per_s}){pre_s}."


def format_right(r: RightPart) -> str:
    pre, per = r.bits.preperiod, r.bits.period
    pre_s = "".join(str(b) for b in pre)
    per_s = "".join(str(b) for b in per)
    return f".{pre_s}({per_s})"


def format_universal(u: UniversalRational) -> str:
    return format_left(u.left) + format_right(u.right)[1:]
