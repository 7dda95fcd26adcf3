"""
The explosion ladder
====================

Level 0 is multiplication, level 1 exponentiation, level 2 power
towers.  Each level iterates the one below it and the results stop
fitting in memory almost immediately, so every value is computed
against a bit budget.
"""

from uns.hyperops import Exact, Exceeded, hyper, monotone_check

for k in range(4):
    row = []
    for n in range(1, 5):
        r = hyper(2, k, n)
        row.append(str(r.value) if isinstance(r, Exact) else "!")
    print(f"level {k}: 2 o n ->", "  ".join(row))

print()
print("3^3^3 =", hyper(3, 2, 3).value, "(still exact)")

# one step higher and the answer is a statement about size, not a number
r = hyper(2, 3, 4)
print("level 3 at height 4:", r.describe())

r = hyper(3, 4, 3)
print("level 4 at height 3:", r.describe())

# a bigger budget moves the line but cannot remove it
tight = hyper(10, 1, 30, budget=64)
roomy = hyper(10, 1, 30, budget=128)
print("10^30 in 64 bits: ", tight.describe() if isinstance(tight, Exceeded) else tight.value)
print("10^30 in 128 bits:", roomy.value)

# growth is monotone in every argument wherever both sides materialize
report = monotone_check((2, 4), (0, 2), (2, 4))
print(
    f"monotone sweep: {report.points} points,",
    f"{report.comparable_pairs} comparable pairs,",
    f"{len(report.violations)} violations",
)
assert report.ok
