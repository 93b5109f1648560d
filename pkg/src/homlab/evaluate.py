"""Exact evaluation of twisted identities on both carriers.

Magma evaluation quantifies an equation over every element triple.  Field
algebras are checked on basis triples only: every identity in the catalog
is multilinear in (x, y, z), so vanishing on the basis grid is equivalent
to vanishing everywhere.  All arithmetic is exact mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import modp
from .carriers import FieldHomAlgebra, FiniteHomMagma
from .errors import (
    CyclicNotSupportedOnMagma,
    NonMultilinearIdentity,
    UnitRequired,
)
from .terms import (
    ALL_TAGS,
    ASSOC_TAGS,
    LIE_TAGS,
    Identity,
    Prod,
    Term,
    Twist,
    TypeTag,
    Unit,
    Var,
    builtin,
    term_variables,
)

Structure = Union[FiniteHomMagma, FieldHomAlgebra]

# Cyclic assignments in the fixed order (x,y,z), (y,z,x), (z,x,y); the
# order is irrelevant mathematically but pinned for reproducible dumps.
_CYCLE = (("x", "y", "z"), ("y", "z", "x"), ("z", "x", "y"))


@dataclass(frozen=True)
class TypeProfile:
    """Which built-in types a structure satisfies."""

    satisfied: frozenset
    family: str  # "assoc" for magmas, "both" for field algebras

    def names(self, family: str) -> frozenset:
        return frozenset(t.name for t in self.satisfied if t.family == family)

    def __contains__(self, tag: TypeTag) -> bool:
        return tag in self.satisfied


# ---------------------------------------------------------------- magmas

def _eval_magma(term: Term, m: FiniteHomMagma, env: dict) -> int:
    if isinstance(term, Var):
        return env[term.name]
    if isinstance(term, Unit):
        if m.unit is None:
            raise UnitRequired("identity uses the unit constant on a unit-free carrier")
        return m.unit
    if isinstance(term, Twist):
        return m.alpha[_eval_magma(term.arg, m, env)]
    return m.table[_eval_magma(term.left, m, env)][_eval_magma(term.right, m, env)]


def first_violation(m: FiniteHomMagma, identity: Identity):
    """First triple (by element index) violating the equation, or None."""
    if identity.cyclic:
        raise CyclicNotSupportedOnMagma(
            "cyclic-sum identities need an additive carrier; linearize first"
        )
    rng = range(m.size)
    for x in rng:
        for y in rng:
            for z in rng:
                env = {"x": x, "y": y, "z": z}
                if _eval_magma(identity.lhs, m, env) != _eval_magma(identity.rhs, m, env):
                    return (x, y, z)
    return None


def holds(m: FiniteHomMagma, identity: Identity) -> bool:
    """True iff the equation holds for every assignment of elements."""
    return first_violation(m, identity) is None


# ---------------------------------------------------------- field algebras

def eval_term(a: FieldHomAlgebra, term: Term, env: dict, bracket: bool = False) -> np.ndarray:
    """Evaluate a term; env values are vectors or broadcastable vector grids.

    With bracket=True, products evaluate through :meth:`FieldHomAlgebra.bracket`
    (the commutator on a general carrier); otherwise through the plain product.
    """
    if isinstance(term, Var):
        return np.asarray(env[term.name], dtype=np.int64) % a.p
    if isinstance(term, Unit):
        if a.unit is None:
            raise UnitRequired("identity uses the unit constant but the algebra has no unit vector")
        return a.unit
    if isinstance(term, Twist):
        return a.twist(eval_term(a, term.arg, env, bracket))
    left = eval_term(a, term.left, env, bracket)
    right = eval_term(a, term.right, env, bracket)
    return a.bracket(left, right) if bracket else a.product(left, right)


def cyclic_sum(a: FieldHomAlgebra, term: Term, x, y, z, bracket: bool = True) -> np.ndarray:
    """Sum of the term over the three cyclic assignments of (x, y, z)."""
    vals = {"x": x, "y": y, "z": z}
    total = 0
    for xa, ya, za in _CYCLE:
        env = {"x": vals[xa], "y": vals[ya], "z": vals[za]}
        total = total + eval_term(a, term, env, bracket)
    return total % a.p


def _basis_grids(a: FieldHomAlgebra):
    e = a.basis()
    return e[:, None, None, :], e[None, :, None, :], e[None, None, :, :]


def _check_multilinear(identity: Identity):
    for side in (identity.lhs, identity.rhs):
        if side is None:
            continue
        occurrences = term_variables(side)
        if any(occurrences.count(v) > 1 for v in ("x", "y", "z")):
            raise NonMultilinearIdentity(
                f"variable repeats within one side of {identity}; "
                "basis-triple checking would be incomplete"
            )


def identity_gap(a: FieldHomAlgebra, identity: Identity, x, y, z) -> np.ndarray:
    """lhs - rhs (or the cyclic sum) at the given vectors, mod p.

    Identities written with brackets evaluate through the carrier's
    bracket, i.e. the commutator when the product is not skew; star
    identities use the plain product.
    """
    env = {"x": x, "y": y, "z": z}
    use_bracket = identity.product == "bracket"
    if identity.cyclic:
        return cyclic_sum(a, identity.lhs, x, y, z, use_bracket)
    lhs = eval_term(a, identity.lhs, env, use_bracket)
    rhs = eval_term(a, identity.rhs, env, use_bracket)
    return (lhs - rhs) % a.p


def first_violation_multilinear(a: FieldHomAlgebra, identity: Identity):
    """First basis triple (i, j, k) where the identity fails, or None."""
    _check_multilinear(identity)
    x, y, z = _basis_grids(a)
    gap = identity_gap(a, identity, x, y, z)
    bad = np.argwhere((gap % a.p).any(axis=-1))
    if bad.size == 0:
        return None
    return tuple(int(v) for v in bad[0])


def holds_multilinear(a: FieldHomAlgebra, identity: Identity) -> bool:
    """True iff the identity holds on all basis triples (hence everywhere,
    by multilinearity)."""
    return first_violation_multilinear(a, identity) is None


# ----------------------------------------------------------------- profiles

def type_profile(structure: Structure) -> TypeProfile:
    """Evaluate every applicable built-in tag."""
    if isinstance(structure, FiniteHomMagma):
        sat = frozenset(t for t in ASSOC_TAGS if holds(structure, builtin(t)))
        return TypeProfile(sat, "assoc")
    sat = frozenset(t for t in ALL_TAGS if holds_multilinear(structure, builtin(t)))
    return TypeProfile(sat, "both")


# ------------------------------------------------------------- bracket math

def _require_skew(a: FieldHomAlgebra, what: str):
    if a.kind != "skew":
        raise ValueError(f"{what} needs a skew (bracket) product")


def jacobiator(a: FieldHomAlgebra, tag: TypeTag, x, y, z) -> np.ndarray:
    """Value of the twisted-Jacobi cyclic sum for the given lie tag."""
    _require_skew(a, "jacobiator")
    if tag.family != "lie":
        raise ValueError(f"jacobiator needs a lie tag, got {tag}")
    return cyclic_sum(a, builtin(tag).lhs, x, y, z)


def twisted_bracket(a: FieldHomAlgebra) -> FieldHomAlgebra:
    """Replace the bracket by [u,v] + [alpha(u),v] + [u,alpha(v)].

    Skewness of the result is validated, not assumed.
    """
    _require_skew(a, "twisted_bracket")
    c = (
        a.c
        + np.einsum("ui,ujk->ijk", a.alpha, a.c)
        + np.einsum("vj,ivk->ijk", a.alpha, a.c)
    ) % a.p
    return a.with_product(c, "skew")


def morphism_defect(a: FieldHomAlgebra, u, v) -> np.ndarray:
    """[alpha(u), alpha(v)] - alpha([u, v]); zero everywhere iff alpha is a
    bracket morphism."""
    return (a.product(a.twist(u), a.twist(v)) - a.twist(a.product(u, v))) % a.p


def is_morphism(a: FieldHomAlgebra) -> bool:
    e = a.basis()
    x, y = e[:, None, :], e[None, :, :]
    return not np.any(morphism_defect(a, x, y))


def type_defect(a: FieldHomAlgebra, x, y, z) -> np.ndarray:
    """Cyclic sum of [x, alpha([y,z])] - [x, [alpha(y), alpha(z)]].

    Measures the gap between the two degree-two twist placements; vanishes
    whenever alpha is a bracket morphism.
    """
    def gap(u, v, w):
        return (
            a.product(u, a.twist(a.product(v, w)))
            - a.product(u, a.product(a.twist(v), a.twist(w)))
        ) % a.p

    vals = {"x": x, "y": y, "z": z}
    total = 0
    for xa, ya, za in _CYCLE:
        total = total + gap(vals[xa], vals[ya], vals[za])
    return total % a.p


def central_series(a: FieldHomAlgebra, depth: int) -> list:
    """Row-reduced bases of V = V^0 >= V^1 >= ... >= V^depth, where
    V^n = [V, V^(n-1)]."""
    _require_skew(a, "central_series")
    e = a.basis()
    out = [modp.rref(e, a.p)]
    prev = e
    for _ in range(depth):
        if prev.shape[0] == 0:
            out.append(prev)
            continue
        prods = a.product(e[:, None, :], prev[None, :, :]).reshape(-1, a.dim)
        prev = modp.rref(prods, a.p)
        out.append(prev)
    return out


def is_lie(a: FieldHomAlgebra) -> bool:
    """True iff the plain Jacobi identity holds on all basis triples."""
    _require_skew(a, "is_lie")
    x, y, z = _basis_grids(a)
    j = (
        a.product(x, a.product(y, z))
        + a.product(y, a.product(z, x))
        + a.product(z, a.product(x, y))
    ) % a.p
    return not np.any(j)
