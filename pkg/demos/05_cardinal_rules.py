"""
Cardinal rewriting
==================

Infinite cardinalities as a small term language: alephs, powersets,
binomials, and finite towers, normalized by five rewrite rules.  The
rules are assumptions, not theorems, and the rewriter is honest about
where they stop.
"""

from uns.cardinals import (
    NoRuleError,
    diagonal_witness,
    format_cardinal,
    fusion_facts,
    nat_to_set,
    normalize_with_trace,
    parse_cardinal,
    powerset,
    unification_table,
)

# each step names its rule
for text in ("2^aleph_0", "choose(aleph_2)", "hyper(3, 2, aleph_0)", "2^2^aleph_1"):
    e = parse_cardinal(text)
    final, steps = normalize_with_trace(e)
    print(text)
    for s in steps:
        print(f"   {s.rule}: {format_cardinal(s.before)} -> {format_cardinal(s.after)}")
    print("   =", format_cardinal(final))

# all-finite expressions drop down to the integer ladder
final, steps = normalize_with_trace(parse_cardinal("hyper(2, 2, 4)"))
print("hyper(2, 2, 4) =", format_cardinal(final), "by", [s.rule for s in steps])

# a stuck expression stays stuck rather than pretending
try:
    normalize_with_trace(parse_cardinal("choose(5)"))
except NoRuleError as e:
    print("choose(5):", e)

# powerset, binomial, and successor all meet in one column
table = unification_table(4)
print("\nrow  aleph        2^prev       choose(prev)")
for i, a, p, b in table.rows():
    print(f"{i:>3}  {format_cardinal(a):<12} {format_cardinal(p):<12} {format_cardinal(b)}")
assert table.consistent

# the diagonal argument, run on actual finite sets
s = nat_to_set(3)
members = sorted(s.members, key=repr)
f = {x: powerset(x) if len(x.members) < 2 else members[0] for x in members}
w = diagonal_witness(s, f)
print("\nwitness escapes the image:", all(w != f[x] for x in members))

# and the fused line: the unit interval as aleph_0 bonded sets
facts = fusion_facts()
print("virtual cardinality of (0,1):", format_cardinal(facts.unit_interval_virtual_cardinality))
print(facts.bonded_set_tag)
