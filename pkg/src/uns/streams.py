"""Computable numbers in (0, 1) as certified binary bit streams.

A stream is named by a small immutable descriptor (a rational, pi/4, a
square root, a diagonal over other streams, or a registered custom
algorithm) and hands out exact prefixes of the value's nonterminating
binary expansion.  Prefixes are memoized behind a lock, so a stream can
be shared across threads, and every prefix is a prefix of every longer
one.

The first n bits pin the value into a dyadic interval of width 2^-n;
nothing on the boundary is ever claimed, the value only lies in the
closed hull.  Finite observations written as ".110***" parse into the
same intervals.

pi/4 bits are certified from the two-arctangent identity

    pi/4 = 4*arctan(1/5) - arctan(1/239)

evaluated in pure integer arithmetic with explicit floor-error and tail
bounds, retried at doubled working precision until the wanted bits are
pinched between the lower and upper bound.  Square roots use
floor(sqrt(p/q) * 2^n) = isqrt(p * 4^n // q), exact because the value
is irrational.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Callable, Union

from .cardinals import Aleph, CardinalExpr, Pow2, aleph, format_cardinal, normalize
from .ordinals import Ordinal


class StarStringError(ValueError):
    """Raised when text is not a finite observation like '.110***'."""


class StreamError(ValueError):
    """Raised for descriptors that do not name a value in (0, 1)."""


# ---------------------------------------------------------------------------
# descriptors


@dataclass(frozen=True)
class RationalStream:
    numerator: int
    denominator: int

    def __post_init__(self):
        p, q = self.numerator, self.denominator
        if q <= 0 or not 0 < p < q:
            raise StreamError(f"{p}/{q} is not strictly between 0 and 1")
        if gcd(p, q) != 1:
            raise StreamError(f"{p}/{q} is not reduced")

    def prefix_bits(self, n: int) -> tuple[int, ...]:
        bits = _fraction_bits(self.numerator, self.denominator)
        return tuple(bits.bit_at(i) for i in range(n))


@dataclass(frozen=True)
class PiOver4Stream:
    def prefix_bits(self, n: int) -> tuple[int, ...]:
        return _int_to_bits(_pi_over_4_prefix(n), n)


@dataclass(frozen=True)
class SqrtStream:
    """sqrt(numerator/denominator), which must be irrational and in (0, 1)."""

    numerator: int
    denominator: int

    def __post_init__(self):
        p, q = self.numerator, self.denominator
        if q <= 0 or not 0 < p < q:
            raise StreamError(f"sqrt({p}/{q}) is not strictly between 0 and 1")
        if gcd(p, q) != 1:
            raise StreamError(f"{p}/{q} is not reduced")
        if isqrt(p) ** 2 == p and isqrt(q) ** 2 == q:
            raise StreamError(f"sqrt({p}/{q}) is rational; use a rational stream")

    def prefix_bits(self, n: int) -> tuple[int, ...]:
        return _int_to_bits(isqrt((self.numerator << (2 * n)) // self.denominator), n)


@dataclass(frozen=True)
class DiagonalStream:
    """Bit i disagrees with input i; past the inputs it continues 1,0,1,0,..."""

    inputs: tuple["StreamDescriptor", ...]

    def prefix_bits(self, n: int) -> tuple[int, ...]:
        out = []
        for i in range(1, n + 1):
            if i <= len(self.inputs):
                out.append(1 - as_stream(self.inputs[i - 1]).bits(i)[i - 1])
            else:
                out.append((i - len(self.inputs)) & 1)
        return tuple(out)


_ALGORITHMS: dict[str, Callable[[int], tuple[int, ...]]] = {}


def register_algorithm(name: str, prefix_fn: Callable[[int], tuple[int, ...]]):
    """Register a deterministic prefix function under an identifier.
    Custom streams with equal names are the same stream."""
    _ALGORITHMS[name] = prefix_fn


def has_algorithm(name: str) -> bool:
    return name in _ALGORITHMS


@dataclass(frozen=True)
class CustomStream:
    algorithm: str

    def prefix_bits(self, n: int) -> tuple[int, ...]:
        fn = _ALGORITHMS.get(self.algorithm)
        if fn is None:
            raise StreamError(f"unknown algorithm {self.algorithm!r}")
        bits = tuple(fn(n))
        if len(bits) != n or any(b not in (0, 1) for b in bits):
            raise StreamError(f"algorithm {self.algorithm!r} returned bad bits")
        return bits


StreamDescriptor = Union[
    RationalStream, PiOver4Stream, SqrtStream, DiagonalStream, CustomStream
]

PI_OVER_4 = PiOver4Stream()


def rational(p: int, q: int) -> RationalStream:
    g = gcd(p, q)
    return RationalStream(p // g, q // g)


# ---------------------------------------------------------------------------
# bit computations


@lru_cache(maxsize=None)
def _fraction_bits(p: int, q: int):
    from .bitseq import encode_fraction

    return encode_fraction(Fraction(p, q)).bits


def _int_to_bits(prefix: int, n: int) -> tuple[int, ...]:
    return tuple((prefix >> (n - 1 - i)) & 1 for i in range(n))


def _arctan_inv_bounds(x: int, prec: int) -> tuple[int, int]:
    """Integer bounds on arctan(1/x) * 2^prec from the alternating series.

    Each floored term is off by less than 1 and the dropped tail is
    below the last term, so the running sum is within (terms + 1) of the
    truth in either direction.
    """
    one = 1 << prec
    total = 0
    terms = 0
    power = x  # x^(2j+1)
    j = 0
    while True:
        t = one // ((2 * j + 1) * power)
        if t == 0:
            break
        total += -t if j & 1 else t
        terms += 1
        power *= x * x
        j += 1
    slack = terms + 1
    return total - slack, total + slack


def _pi_over_4_bounds(prec: int) -> tuple[int, int]:
    lo5, hi5 = _arctan_inv_bounds(5, prec)
    lo239, hi239 = _arctan_inv_bounds(239, prec)
    return 4 * lo5 - hi239, 4 * hi5 - lo239


@lru_cache(maxsize=None)
def _pi_over_4_prefix(n: int) -> int:
    """First n bits of pi/4 as an integer, certified: the lower and the
    upper bound agree on them."""
    if n == 0:
        return 0
    prec = n + 32
    while True:
        lo, hi = _pi_over_4_bounds(prec)
        if lo >= 0 and (lo >> (prec - n)) == (hi >> (prec - n)):
            return lo >> (prec - n)
        prec *= 2


# ---------------------------------------------------------------------------
# streams and intervals


@dataclass(frozen=True)
class DyadicInterval:
    """The open interval (lo, lo + 2^-bits) with dyadic endpoints."""

    lo: Fraction
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.lo < 0 or self.hi > 1:
            raise ValueError(f"not a subinterval of (0, 1): {self}")

    @property
    def width(self) -> Fraction:
        return Fraction(1, 1 << self.bits)

    @property
    def hi(self) -> Fraction:
        return self.lo + Fraction(1, 1 << self.bits)

    def hull_contains(self, other: "DyadicInterval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self):
        return f"({dyadic_str(self.lo)}, {dyadic_str(self.hi)})"


def dyadic_str(f: Fraction) -> str:
    """Exact decimal of a dyadic rational, e.g. 3/4 -> '0.75'."""
    whole, rest = divmod(f.numerator, f.denominator)
    if rest == 0:
        return str(whole)
    k = f.denominator.bit_length() - 1
    digits = str(rest * 5**k).rjust(k, "0").rstrip("0")
    return f"{whole}.{digits}"


class BitStream:
    """Memoized exact prefixes of one descriptor's expansion."""

    def __init__(self, descriptor: StreamDescriptor):
        self.descriptor = descriptor
        self._bits: tuple[int, ...] = ()
        self._lock = threading.Lock()

    def bits(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise ValueError(f"bad prefix length {n!r}")
        with self._lock:
            if n > len(self._bits):
                fresh = self.descriptor.prefix_bits(n)
                if fresh[: len(self._bits)] != self._bits:
                    raise StreamError(
                        f"{self.descriptor!r} changed an already published bit"
                    )
                self._bits = fresh
            return self._bits[:n]

    def interval(self, n: int) -> DyadicInterval:
        if n < 1:
            raise ValueError("need at least one bit for an interval")
        prefix = self.bits(n)
        value = 0
        for b in prefix:
            value = (value << 1) | b
        return DyadicInterval(Fraction(value, 1 << n), n)

    def __repr__(self):
        return f"BitStream({self.descriptor!r})"


@lru_cache(maxsize=None)
def as_stream(descriptor: StreamDescriptor) -> BitStream:
    """The shared stream of a descriptor; equal descriptors share memos."""
    return BitStream(descriptor)


def diagonal(inputs) -> BitStream:
    return as_stream(DiagonalStream(tuple(inputs)))


_STAR = re.compile(r"\.([01]*)\*+(?:\.\.\.|…|⋯)?")


def parse_star_string(text: str) -> DyadicInterval:
    """A finite observation: '.110***' means three known bits, so the
    value sits in (0.75, 0.875)."""
    m = _STAR.fullmatch(text.strip())
    if m is None:
        raise StarStringError(f"not a star string: {text!r}")
    known = m.group(1)
    value = int(known, 2) if known else 0
    return DyadicInterval(Fraction(value, 1 << len(known)), len(known))


@dataclass(frozen=True)
class CompareResult:
    relation: str  # "less" | "greater" | "indistinguishable"
    bits_examined: int


def compare(s1, s2, maxbits: int = 64) -> CompareResult:
    """First differing bit within maxbits decides; equal prefixes are
    indistinguishable at this depth, never declared equal."""
    if maxbits < 1:
        raise ValueError("need at least one bit to compare")
    a = as_stream(s1.descriptor if isinstance(s1, BitStream) else s1)
    b = as_stream(s2.descriptor if isinstance(s2, BitStream) else s2)
    xs, ys = a.bits(maxbits), b.bits(maxbits)
    for i, (x, y) in enumerate(zip(xs, ys), start=1):
        if x != y:
            return CompareResult("less" if x < y else "greater", i)
    return CompareResult("indistinguishable", maxbits)


# ---------------------------------------------------------------------------
# infinitesimal companions


@dataclass(frozen=True)
class Infinitesimal:
    """A stream value bonded to an unpickable cloud of companion points,
    tagged with the cloud's cardinality."""

    anchor: StreamDescriptor
    tag: CardinalExpr

    def normalized_tag(self) -> CardinalExpr:
        return normalize(self.tag)

    def describe(self) -> str:
        prefix = as_stream(self.anchor).bits(16)
        digits = "".join(str(b) for b in prefix)
        return (
            f".{digits}… carries {format_cardinal(self.tag)} "
            f"= {format_cardinal(self.normalized_tag())} bonded points"
        )


def attach_infinitesimal(descriptor: StreamDescriptor, alpha: Ordinal | int) -> Infinitesimal:
    return Infinitesimal(descriptor, Pow2(aleph(alpha)))
