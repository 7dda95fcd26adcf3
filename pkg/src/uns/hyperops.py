"""Explosive integer operators: level 0 is multiplication, level 1
exponentiation, level 2 power towers, and each level above iterates the
one below, associating to the right.

Results are exact integers unless they would not fit in `budget` bits.
The size gate is sound in both directions: anything returned as Exact
fits the budget, and anything reported as Exceeded provably does not.
For a base with L bits, m**t needs more than t*(L-1) bits, so the gate
can refuse a step before materializing it; a step that passes the gate
is at most about twice the budget and is computed exactly, then checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

DEFAULT_BUDGET = 1 << 20  # bits


@dataclass(frozen=True)
class Exact:
    value: int


def _show_int(x: int) -> str:
    # counts picked up from evaluated subterms can be wider than the
    # interpreter's digit guard for int-to-decimal conversion
    if x.bit_length() <= 12000:
        return str(x)
    return f"<{x.bit_length()}-bit integer>"


@dataclass(frozen=True)
class Exceeded:
    """Structural stand-in for a value past the budget: base applied at
    `level` to `pending`, which is a count or a nested Exceeded."""

    base: int
    level: int
    pending: Union[int, "Exceeded"]

    def describe(self) -> str:
        # assembled as prefix pieces plus one joined suffix of closing
        # parens; wrap chains can be tens of thousands of layers deep
        # when a high-level fold fails far down, so no per-layer copying
        chain = [self]
        while isinstance(chain[-1].pending, Exceeded):
            chain.append(chain[-1].pending)
        parts = []
        for node in chain[:-1]:
            if node.level == 0:
                parts.append(f"{_show_int(node.base)} * (")
            elif node.level == 1:
                parts.append(f"{_show_int(node.base)}^(")
            else:
                parts.append(
                    f"level-{_show_int(node.level)} explosion of "
                    f"{_show_int(node.base)} at height ("
                )
        last = chain[-1]
        count = _show_int(last.pending)
        if last.level == 0:
            parts.append(f"{_show_int(last.base)} * {count}")
        elif last.level == 1:
            parts.append(f"{_show_int(last.base)}^{count}")
        elif last.level == 2:
            parts.append(f"a power tower of {count} copies of {_show_int(last.base)}")
        else:
            parts.append(
                f"level-{_show_int(last.level)} explosion of "
                f"{_show_int(last.base)} at height {count}"
            )
        parts.append(")" * (len(chain) - 1))
        return "".join(parts)

    def __str__(self) -> str:
        return self.describe()


HyperResult = Union[Exact, Exceeded]


def _check_args(m, k, n, budget):
    for name, v in (("base", m), ("level", k), ("count", n)):
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"bad {name} {v!r}")
    if budget < 64:
        raise ValueError(f"budget below 64 bits: {budget}")
    if k >= 1 and n == 0:
        raise ValueError(f"level {k} is undefined at count 0")
    if k >= 1 and m == 0 and n >= 2:
        # expanding 0 at any level hits the undefined count-0 case
        raise ValueError("base 0 only supports count 1 above level 0")


def _pow_budgeted(m: int, n: int, budget: int) -> HyperResult:
    if m <= 1:
        return Exact(m**n)
    L = m.bit_length()
    if n * (L - 1) + 1 > budget:
        return Exceeded(m, 1, n)
    v = m**n
    if v.bit_length() > budget:
        return Exceeded(m, 1, n)
    return Exact(v)


def _tower_budgeted(m: int, n: int, budget: int) -> HyperResult:
    if m == 1:
        return Exact(1)
    L = m.bit_length()
    t = m
    for _ in range(n - 1):
        if t * (L - 1) + 1 > budget:
            return Exceeded(m, 2, n)
        t = m**t
        if t.bit_length() > budget:
            return Exceeded(m, 2, n)
    return Exact(t)


_DEEP_LEVEL = 1 << 17


def _tower_of_twos_tops(height: int, budget: int) -> bool:
    """True only when a tower of `height` twos provably exceeds budget."""
    t, bl = 2, budget.bit_length()
    for _ in range(height - 1):
        if t >= bl:
            return True  # the next tower step alone has more bits than budget
        t = 2**t
    return t > budget


def _climb(m: int, k: int, n: int, budget: int) -> HyperResult:
    """Fold for levels 3 and up.  An explicit frame stack stands in for
    recursion: rewritten expressions can ask for levels in the tens of
    thousands (for instance after an inner value evaluates to 65536),
    which must not nest that many Python calls.  Each frame is
    [level, steps_left, acc]: acc still needs steps_left applications
    of m at level-1."""
    frames = [[k, n - 1, m]]
    result: HyperResult | None = None
    while frames:
        level, steps, acc = frames[-1]
        if result is not None:
            r, result = result, None
            if isinstance(r, Exceeded):
                # exceeding on the last application IS the result;
                # earlier ones leave applications pending
                frames.pop()
                result = r if steps == 1 else Exceeded(m, level, r)
                continue
            frames[-1][1] = steps - 1
            frames[-1][2] = r.value
            continue
        if steps == 0:
            frames.pop()
            result = Exact(acc)
            continue
        j, v = level - 1, acc
        if m == 2 and v == 2:
            result = Exact(4)  # 2 at any level applied twice
        elif v == 1:
            result = Exact(m)
        elif j == 2:
            result = _tower_budgeted(m, v, budget)
        elif j > _DEEP_LEVEL and _tower_of_twos_tops(j, budget):
            # with m >= 2 and either v >= 3 or m >= 3, the value here is
            # at least a tower of j twos: walking down j levels one frame
            # at a time would only spell out a failure already certain
            result = Exceeded(m, j, v)
        else:
            frames.append([j, v - 1, m])
    assert result is not None
    return result


def hyper(m: int, k: int, n: int, budget: int = DEFAULT_BUDGET) -> HyperResult:
    """m at level k applied n times, exactly or as a size statement."""
    _check_args(m, k, n, budget)
    if k == 0:
        v = m * n
        return Exact(v) if v.bit_length() <= budget else Exceeded(m, 0, n)
    if n == 1:
        return Exact(m)
    if m == 1:
        return Exact(1)
    if k == 1:
        return _pow_budgeted(m, n, budget)
    if k == 2:
        return _tower_budgeted(m, n, budget)
    return _climb(m, k, n, budget)


@dataclass(frozen=True)
class MonotoneReport:
    points: int
    comparable_pairs: int
    skipped_pairs: int
    violations: tuple[tuple[tuple[int, int, int], tuple[int, int, int]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def monotone_check(
    m_range: tuple[int, int],
    k_range: tuple[int, int],
    n_range: tuple[int, int],
    budget: int = DEFAULT_BUDGET,
) -> MonotoneReport:
    """Evaluate a full grid and confirm the result never shrinks when
    any argument grows.  Bases and counts start at 2 so every level
    actually climbs.

    An Exceeded result sits above every Exact one (its value needs more
    than `budget` bits, an Exact value does not), so a grid may contain
    blown-up corners: Exact below Exceeded is consistent, Exceeded below
    Exact is a violation, and two Exceeded points are left uncompared.
    """
    if m_range[0] < 2 or n_range[0] < 2 or k_range[0] < 0:
        raise ValueError("grid starts at base >= 2, level >= 0, count >= 2")
    results: dict[tuple[int, int, int], HyperResult] = {}
    for m in range(m_range[0], m_range[1] + 1):
        for k in range(k_range[0], k_range[1] + 1):
            for n in range(n_range[0], n_range[1] + 1):
                results[(m, k, n)] = hyper(m, k, n, budget)
    points = sorted(results)
    violations = []
    pairs = skipped = 0
    for i, p in enumerate(points):
        for q in points[i + 1 :]:
            if not all(x <= y for x, y in zip(p, q)):
                continue
            rp, rq = results[p], results[q]
            if isinstance(rp, Exceeded) and isinstance(rq, Exceeded):
                skipped += 1
                continue
            pairs += 1
            if isinstance(rp, Exceeded):
                violations.append((p, q))
            elif isinstance(rq, Exact) and rp.value > rq.value:
                violations.append((p, q))
    return MonotoneReport(len(points), pairs, skipped, tuple(violations))
