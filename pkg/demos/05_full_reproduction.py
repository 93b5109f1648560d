"""End-to-end reproduction of the unital hierarchy.

Exhausts every positive implication between twisted associativity types
at bound 3, probes the reverse arrows of the degree-three family
(expecting countermodels), re-verifies all sixteen catalog fixtures, and
runs the bracket-side suites.  This is the library-level equivalent of
`homlab reproduce`.
"""

import time

from homlab import (
    abelian_algebra,
    expansion_residuals,
    lie_fixtures,
    sl2_algebra,
    solvable2_algebra,
    sweep_jacobiator_sums,
    verify_hierarchy,
)

start = time.perf_counter()
report = verify_hierarchy(max_n=3, workers=1)
print(report.to_text())
print(f"\nhierarchy wall time: {time.perf_counter() - start:.2f}s")

print("\nbracket-side suites:")
for fixture in lie_fixtures(7):
    rep = expansion_residuals(fixture.algebra)
    print(f"  {fixture.name}: expansion exact={rep.nine_term_matches}, "
          f"residual accounted={rep.residual_equals_omitted}")

for label, algebra in [
    ("abelian", abelian_algebra(3, 7)),
    ("solvable", solvable2_algebra(7)),
    ("sl2-type", sl2_algebra(7)),
]:
    ok = sweep_jacobiator_sums(algebra, samples=200, seed=0)
    print(f"  jacobiator sums on {label}: {'exact' if ok else 'FAILED'} "
          "(200 seeded twists)")
