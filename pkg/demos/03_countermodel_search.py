"""Countermodel search over hom-monoids with zero.

The finder fills the free multiplication cells row-major, then the twist
values, propagating every required identity on ground triples as soon as
they become decidable.  The first complete model it reaches is the
lexicographically least countermodel (zero-first value order), so results
are reproducible and worker-count independent.
"""

import time

from homlab import (
    SearchSpec,
    canonical_form,
    enumerate_models,
    find_model,
    verify_implication,
)

# Does I2 imply I3?  No: a two-element carrier refutes it.
verdict = find_model(SearchSpec(max_n=2, require=("I2",), violate=("I3",)))
print("I2 => I3 refuted by:")
print(verdict.model.describe())
print(f"stats: {verdict.stats.nodes} nodes, {verdict.stats.models} models tested\n")

# Does I1 imply I3?  The search exhausts the space instead.
verdict = verify_implication({"I1"}, "I3", 3)
print(f"I1 => I3: {verdict.outcome} at bound {verdict.bound} "
      f"({verdict.stats.nodes} nodes)\n")

# Enumerate every isomorphism class refuting "II2 and II3 imply II1".
spec = SearchSpec(max_n=3, require=("II2", "II3"), violate=("II1",))
models = enumerate_models(spec, limit=100)
print(f"II2,II3 => II1 has {len(models)} refuting classes up to bound 3;")
print("the least one:")
print(models[0].describe())

# Custom identities mix freely with the built-in type names.
spec = SearchSpec(max_n=2, require=("x*y = y*x",), violate=("I1",))
verdict = find_model(spec)
print("\na commutative non-hom-associative example:")
print(verdict.model.describe())

# Canonical forms quotient out relabelings: the found model is always the
# least member of its isomorphism class.
assert canonical_form(verdict.model) == verdict.model
print("\n(the found model is its own canonical form)")
