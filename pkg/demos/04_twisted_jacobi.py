"""Bracket-side laboratory over Z/7.

Shows the two hallmark small examples (a non-Lie bracket that is
type-III with respect to a rank-two twist, and a Lie bracket whose shear
twist satisfies the first-position law but not the second-position one),
then the jacobiator-sum identity, the twisted bracket, and the exact
nine-term expansion of its jacobiator.
"""

import numpy as np

from homlab import (
    TypeTag,
    builtin,
    central_series,
    expansion_residuals,
    holds_multilinear,
    i1_not_i2_algebra,
    is_lie,
    jacobiator,
    new_algebra,
    nonlie_hom_iii_algebra,
    sl2_algebra,
    twisted_bracket,
    verify_jacobiator_sums,
)
from homlab.liecheck import random_skew_constants, random_twist

lie = lambda n: TypeTag("lie", n)

# --- a non-Lie bracket that is nevertheless Hom-III ---
k3 = nonlie_hom_iii_algebra(7)
e = k3.basis()
plain = k3.with_twist(np.eye(3, dtype=np.int64))
print("dim-3 bracket: [e1,e3]=e1, [e2,e3]=e3")
print("  Jacobi cyclic sum at (e1,e2,e3):",
      jacobiator(plain, lie("I1"), e[0], e[1], e[2]).tolist(), "(not a Lie bracket)")
print("  is_lie:", is_lie(k3))
print("  lie III with the shift twist:", holds_multilinear(k3, builtin(lie("III"))))
series = central_series(k3, 2)
print("  lower central term V^2 basis:", series[2].tolist())
print("  twist vanishes on V^2:", not np.any(k3.twist(series[2])))

# --- first-position law without the second-position law ---
k2 = i1_not_i2_algebra(7)
print("\ndim-2 Lie bracket with shear twist:")
print("  lie I1:", holds_multilinear(k2, builtin(lie("I1"))))
print("  lie I2:", holds_multilinear(k2, builtin(lie("I2"))))

# --- the jacobiator-sum identity on a Lie carrier ---
a = sl2_algebra(7)
rng = np.random.default_rng(0)
twisted = a.with_twist(random_twist(3, 7, rng))
print("\nsl2-type carrier, random twist:")
print("  J_I1 + J_I2 + J_I3 = 0 and J_II1 + J_II2 + J_II3 = 0:",
      verify_jacobiator_sums(twisted))

# --- twisted bracket and its jacobiator, three routes ---
print("\ntwisted bracket [u,v] + [a(u),v] + [u,a(v)] on a random skew bracket:")
b = new_algebra(7, random_skew_constants(3, 7, rng), random_twist(3, 7, rng), "skew")
tw = twisted_bracket(b)
print("  twisted structure constants stay skew:", tw.kind == "skew")
report = expansion_residuals(b)
print("  direct jacobiator == nine-term expansion:", report.nine_term_matches)
print("  residual against the six-term closed form is zero:", report.residual_is_zero)
print("  residual equals the two omitted cyclic sums:", report.residual_equals_omitted)
