"""Symbolic cardinal arithmetic driven by four rewrite rules, plus the
hereditarily finite sets used to ground the finite side.

Expressions are built from finite values, aleph_a with an ordinal index
below eps_0, powersets 2^e, the explosive operator hyper(base, level,
arg), and the diagonal binomial choose(e).  Rewriting applies:

    AM    hyper(aleph_a, aleph_0, aleph_a)  ->  aleph_(a+1)
    CT    hyper(m, k, aleph_a)              ->  aleph_(a+1)   finite m>1, k>0
    GCH   2^aleph_a                         ->  aleph_(a+1)
    CBT   choose(aleph_a)                   ->  2^aleph_a

and evaluates all-finite subexpressions through the budgeted integer
operators.  Every rule strictly shrinks the expression or moves it
toward an aleph, so rewriting terminates; the engine works bottom-up
and reports either a normal form (an aleph or a finite value), a stuck
subexpression no rule covers, or a finite blow-up past the budget.

Text forms: "aleph_0", "aleph_(w+1)", "2^aleph_3", "hyper(3, 2,
aleph_0)", "choose(aleph_2)".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Mapping, Union

from . import hyperops
from .ordinals import ONE, ZERO, Ordinal, from_int, ord_add, ord_cmp


class CardinalParseError(ValueError):
    """Raised when text does not follow the cardinal grammar."""


class UnnormalizableError(ValueError):
    """A cardinal expression with no normal form we can reach."""


class NoRuleError(UnnormalizableError):
    def __init__(self, expression):
        self.expression = expression
        super().__init__(f"no rule applies to {format_cardinal(expression)}")


class FiniteBudgetError(UnnormalizableError):
    def __init__(self, expression, detail):
        self.expression = expression
        super().__init__(
            f"finite value of {format_cardinal(expression)} exceeds the "
            f"budget: {detail}"
        )


# ---------------------------------------------------------------------------
# hereditarily finite sets


@dataclass(frozen=True)
class PureSet:
    members: frozenset["PureSet"] = frozenset()

    def __len__(self):
        return len(self.members)

    def __contains__(self, other):
        return other in self.members

    def _key(self):
        return (len(self.members), tuple(sorted(m._key() for m in self.members)))

    def __str__(self):
        inner = sorted(self.members, key=PureSet._key)
        return "{" + ", ".join(str(m) for m in inner) + "}"


EMPTY_SET = PureSet()


def nat_to_set(n: int) -> PureSet:
    """Von Neumann numeral: each number is the set of the smaller ones."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"not a natural number: {n!r}")
    s = EMPTY_SET
    for _ in range(n):
        s = PureSet(s.members | {s})
    return s


def set_to_nat(s: PureSet) -> int:
    n = len(s)
    if s != nat_to_set(n):
        raise ValueError(f"{s} is not a numeral")
    return n


def powerset(s: PureSet) -> PureSet:
    members = list(s.members)
    subsets = set()
    for r in range(len(members) + 1):
        for combo in combinations(members, r):
            subsets.add(PureSet(frozenset(combo)))
    return PureSet(frozenset(subsets))


def diagonal_witness(s: PureSet, f: Mapping[PureSet, PureSet]) -> PureSet:
    """The subset {x in s : x not in f(x)}, which f cannot hit.

    f must assign a subset of s to every member of s.
    """
    for x in s.members:
        if x not in f:
            raise ValueError(f"{x} has no image")
        if not f[x].members <= s.members:
            raise ValueError(f"image of {x} is not a subset")
    return PureSet(frozenset(x for x in s.members if x not in f[x]))


# ---------------------------------------------------------------------------
# cardinal expressions


@dataclass(frozen=True)
class FiniteCard:
    value: int

    def __post_init__(self):
        if not isinstance(self.value, int) or self.value < 0:
            raise ValueError(f"bad finite cardinal {self.value!r}")


@dataclass(frozen=True)
class Aleph:
    index: Ordinal

    def __post_init__(self):
        if not isinstance(self.index, Ordinal):
            raise TypeError("aleph index must be an ordinal below eps_0")


@dataclass(frozen=True)
class Pow2:
    operand: "CardinalExpr"


@dataclass(frozen=True)
class HyperCard:
    base: "CardinalExpr"
    level: "CardinalExpr"
    arg: "CardinalExpr"


@dataclass(frozen=True)
class Choose:
    """The diagonal binomial: all ways to pick e elements out of e."""

    operand: "CardinalExpr"


CardinalExpr = Union[FiniteCard, Aleph, Pow2, HyperCard, Choose]

ALEPH_0 = Aleph(ZERO)


def aleph(index: Ordinal | int) -> Aleph:
    return Aleph(index if isinstance(index, Ordinal) else from_int(index))


def _successor(a: Aleph) -> Aleph:
    return Aleph(ord_add(a.index, ONE))


@dataclass(frozen=True)
class RewriteStep:
    rule: str
    before: CardinalExpr
    after: CardinalExpr


def _root_step(e: CardinalExpr, budget: int):
    """One rule application at the root, or None."""
    if isinstance(e, Pow2):
        if isinstance(e.operand, FiniteCard):
            r = hyperops.hyper(2, 1, e.operand.value, budget)
            if isinstance(r, hyperops.Exceeded):
                raise FiniteBudgetError(e, r.describe())
            return ("finite", FiniteCard(r.value))
        if isinstance(e.operand, Aleph):
            return ("GCH", _successor(e.operand))
    elif isinstance(e, Choose):
        if isinstance(e.operand, Aleph):
            return ("CBT", Pow2(e.operand))
    elif isinstance(e, HyperCard):
        b, l, a = e.base, e.level, e.arg
        if (
            isinstance(b, FiniteCard)
            and isinstance(l, FiniteCard)
            and isinstance(a, FiniteCard)
        ):
            r = hyperops.hyper(b.value, l.value, a.value, budget)
            if isinstance(r, hyperops.Exceeded):
                raise FiniteBudgetError(e, r.describe())
            return ("finite", FiniteCard(r.value))
        if (
            isinstance(b, Aleph)
            and l == ALEPH_0
            and isinstance(a, Aleph)
            and b.index == a.index
        ):
            return ("AM", _successor(b))
        if (
            isinstance(b, FiniteCard)
            and b.value > 1
            and isinstance(l, FiniteCard)
            and l.value > 0
            and isinstance(a, Aleph)
        ):
            return ("CT", _successor(a))
    return None


def _children(e: CardinalExpr) -> tuple[CardinalExpr, ...]:
    if isinstance(e, (Pow2, Choose)):
        return (e.operand,)
    if isinstance(e, HyperCard):
        return (e.base, e.level, e.arg)
    return ()


def _rebuild(e: CardinalExpr, kids: tuple[CardinalExpr, ...]) -> CardinalExpr:
    if isinstance(e, Pow2):
        return Pow2(kids[0])
    if isinstance(e, Choose):
        return Choose(kids[0])
    if isinstance(e, HyperCard):
        return HyperCard(*kids)
    return e


def normalize_with_trace(
    e: CardinalExpr, budget: int = hyperops.DEFAULT_BUDGET
) -> tuple[CardinalExpr, tuple[RewriteStep, ...]]:
    """Bottom-up rewriting to an aleph or a finite value, with the rule
    applications in order.  Raises NoRuleError on a stuck expression and
    FiniteBudgetError when a finite value cannot be materialized."""
    trace: list[RewriteStep] = []

    def walk(x: CardinalExpr) -> CardinalExpr:
        kids = _children(x)
        if kids:
            x = _rebuild(x, tuple(walk(k) for k in kids))
        while True:
            step = _root_step(x, budget)
            if step is None:
                break
            rule, after = step
            trace.append(RewriteStep(rule, x, after))
            x = after
        if not isinstance(x, (Aleph, FiniteCard)):
            raise NoRuleError(x)
        return x

    return walk(e), tuple(trace)


def normalize(e: CardinalExpr, budget: int = hyperops.DEFAULT_BUDGET) -> CardinalExpr:
    return normalize_with_trace(e, budget)[0]


def all_single_steps(
    e: CardinalExpr, budget: int = hyperops.DEFAULT_BUDGET
) -> list[tuple[str, CardinalExpr]]:
    """Every one-rule rewrite of e, at any position.  Fuel for the
    confluence checks: exploring all of these from a root expression
    visits every reduction order."""
    out = []
    root = _root_step(e, budget)
    if root is not None:
        out.append(root)
    kids = _children(e)
    for i, kid in enumerate(kids):
        for rule, new_kid in all_single_steps(kid, budget):
            new_kids = kids[:i] + (new_kid,) + kids[i + 1 :]
            out.append((rule, _rebuild(e, new_kids)))
    return out


class Comparison(Enum):
    LE = "le"
    GE = "ge"
    EQ = "eq"
    UNKNOWN = "unknown"


def _compare_normals(n1: CardinalExpr, n2: CardinalExpr) -> Comparison:
    if isinstance(n1, FiniteCard) and isinstance(n2, FiniteCard):
        if n1.value == n2.value:
            return Comparison.EQ
        return Comparison.LE if n1.value < n2.value else Comparison.GE
    if isinstance(n1, FiniteCard):
        return Comparison.LE
    if isinstance(n2, FiniteCard):
        return Comparison.GE
    c = ord_cmp(n1.index, n2.index)
    return (Comparison.LE, Comparison.EQ, Comparison.GE)[c + 1]


def _as_hyper(e: CardinalExpr):
    if isinstance(e, HyperCard):
        return (e.base, e.level, e.arg)
    if isinstance(e, Pow2):
        return (FiniteCard(2), FiniteCard(1), e.operand)
    if isinstance(e, Choose):
        return (FiniteCard(2), FiniteCard(1), e.operand)
    return None


def compare(
    e1: CardinalExpr, e2: CardinalExpr, budget: int = hyperops.DEFAULT_BUDGET
) -> Comparison:
    """Order two expressions without guessing: normalize both sides if
    possible, otherwise fall back to componentwise growth of the
    explosive operator (2^e counting as hyper(2, 1, e))."""

    def try_norm(x):
        try:
            return normalize(x, budget)
        except UnnormalizableError:
            return None

    n1, n2 = try_norm(e1), try_norm(e2)
    if n1 is not None and n2 is not None:
        return _compare_normals(n1, n2)
    h1, h2 = _as_hyper(e1), _as_hyper(e2)
    if h1 is not None and h2 is not None:
        rels = {compare(c1, c2, budget) for c1, c2 in zip(h1, h2)}
        if rels == {Comparison.EQ}:
            return Comparison.EQ
        if rels <= {Comparison.LE, Comparison.EQ}:
            return Comparison.LE
        if rels <= {Comparison.GE, Comparison.EQ}:
            return Comparison.GE
    return Comparison.UNKNOWN


# ---------------------------------------------------------------------------
# the three aligned ladders


@dataclass(frozen=True)
class UnificationTable:
    """Row a lists aleph_a, the powerset of the previous aleph, and the
    diagonal binomial of the previous aleph; the rules make all three
    columns agree from row 1 up."""

    alephs: tuple[Aleph, ...]
    powersets: tuple[CardinalExpr, ...]
    binomials: tuple[CardinalExpr, ...]

    @property
    def consistent(self) -> bool:
        return all(
            p == a and b == a
            for a, p, b in zip(self.alephs[1:], self.powersets[1:], self.binomials[1:])
        )

    def rows(self):
        for i, (a, p, b) in enumerate(zip(self.alephs, self.powersets, self.binomials)):
            yield i, a, p, b


def unification_table(max_alpha: int) -> UnificationTable:
    if not isinstance(max_alpha, int) or not 0 <= max_alpha <= 10:
        raise ValueError("table rows run from 0 to at most 10")
    alephs = tuple(aleph(i) for i in range(max_alpha + 1))
    powersets = (alephs[0],) + tuple(
        normalize(Pow2(aleph(i - 1))) for i in range(1, max_alpha + 1)
    )
    binomials = (alephs[0],) + tuple(
        normalize(Choose(aleph(i - 1))) for i in range(1, max_alpha + 1)
    )
    return UnificationTable(alephs, powersets, binomials)


@dataclass(frozen=True)
class FusionReport:
    """Constants of the fused line: the unit interval viewed as a single
    point bonded to a continuum of unpickable companions."""

    unit_interval_virtual_cardinality: Aleph
    bonded_set_tag: str

    def infinitesimal_cardinality(self, alpha: Ordinal | int) -> CardinalExpr:
        return normalize(Pow2(aleph(alpha)))


def fusion_facts() -> FusionReport:
    return FusionReport(
        unit_interval_virtual_cardinality=ALEPH_0,
        bonded_set_tag=(
            "x * 2^aleph_a is a bonded set: no choice function can pick "
            "a single point out of it"
        ),
    )


# ---------------------------------------------------------------------------
# text form

_CARD_TOKEN = re.compile(
    r"\s*(aleph_\(|aleph_\d+|hyper|choose|eps_0|w|\d+|[\^(),+*])"
)


def _card_tokens(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _CARD_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise CardinalParseError(f"bad token at {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _CardParser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _card_tokens(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None):
        tok = self.peek()
        if expected is not None and tok != expected:
            raise CardinalParseError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def expr(self) -> CardinalExpr:
        tok = self.take()
        if tok is None:
            raise CardinalParseError("unexpected end of expression")
        if tok.isdigit():
            value = int(tok)
            if self.peek() == "^":
                if value != 2:
                    raise CardinalParseError("only 2^ denotes a powerset")
                self.take()
                return Pow2(self.expr())
            return FiniteCard(value)
        if tok.startswith("aleph_") and tok != "aleph_(":
            return aleph(int(tok[len("aleph_") :]))
        if tok == "aleph_(":
            return Aleph(self._ordinal_index())
        if tok == "hyper":
            self.take("(")
            base = self.expr()
            self.take(",")
            level = self.expr()
            self.take(",")
            arg = self.expr()
            self.take(")")
            return HyperCard(base, level, arg)
        if tok == "choose":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return Choose(inner)
        raise CardinalParseError(f"unexpected token {tok!r}")

    def _ordinal_index(self) -> Ordinal:
        from .ordinals import EpsilonZero, OrdinalParseError, parse_ordinal

        depth = 1
        inner = []
        while depth:
            tok = self.take()
            if tok is None:
                raise CardinalParseError("unbalanced aleph index")
            if tok == "(":
                depth += 1
            elif tok == ")":
                depth -= 1
                if not depth:
                    break
            inner.append(tok)
        try:
            idx = parse_ordinal("".join(inner))
        except OrdinalParseError as err:
            raise CardinalParseError(f"bad aleph index: {err}") from err
        if isinstance(idx, EpsilonZero):
            raise CardinalParseError("aleph indices stay below eps_0")
        return idx


def parse_cardinal(text: str) -> CardinalExpr:
    p = _CardParser(text)
    e = p.expr()
    if p.peek() is not None:
        raise CardinalParseError(f"trailing tokens at {p.peek()!r}")
    return e


def format_cardinal(e: CardinalExpr) -> str:
    if isinstance(e, FiniteCard):
        return str(e.value)
    if isinstance(e, Aleph):
        if e.index.is_finite:
            return f"aleph_{e.index.to_int()}"
        return f"aleph_({e.index})"
    if isinstance(e, Pow2):
        return f"2^{format_cardinal(e.operand)}"
    if isinstance(e, HyperCard):
        parts = ", ".join(
            format_cardinal(x) for x in (e.base, e.level, e.arg)
        )
        return f"hyper({parts})"
    if isinstance(e, Choose):
        return f"choose({format_cardinal(e.operand)})"
    raise TypeError(f"not a cardinal expression: {e!r}")
