"""Backtracking finite-model finder over hom-magmas.

Searches all unital hom-magmas with an adjoined zero (both optional) up to
a bound on the number of nonzero elements, looking for a structure that
satisfies every required identity and violates every forbidden one.

Fixed cells (unit row/column, zero row/column, alpha(0) = 0) are assigned
a priori; the remaining table cells are filled row-major, then the alpha
values.  Candidate values are tried zero-first, then e1, e2, ...; the first
complete model found is therefore the lexicographically least countermodel
under the key (size, flattened table, alpha map) with that value order,
and it equals its own canonical form.  Required identities are checked
incrementally on ground triples as soon as both sides become defined;
triples touching unassigned cells are deferred.  The tree can be split at
the first decision level across worker processes; the verdict is identical
for any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence, Union

from . import evaluate
from .carriers import FiniteHomMagma, magma_to_dict, new_magma
from .errors import CyclicNotSupportedOnMagma, HomLabError, UnitRequired
from .terms import (
    Identity,
    Prod,
    Term,
    Twist,
    TypeTag,
    TYPE_NAMES,
    Unit,
    Var,
    builtin,
    parse_identity,
    render_identity,
)

Requirement = Union[str, TypeTag, Identity]

UNDEF = -1


@dataclass(frozen=True)
class SearchSpec:
    """What to search for.

    require / violate entries may be assoc type names ("I2"), TypeTags, or
    equation-form Identity values (including parsed custom identities).
    """

    max_n: int
    require: tuple = ()
    violate: tuple = ()
    with_zero: bool = True
    unital: bool = True
    prune_isomorphs: bool = True

    def __post_init__(self):
        if self.max_n < 1:
            raise HomLabError("max_n must be at least 1")
        object.__setattr__(self, "require", tuple(self.require))
        object.__setattr__(self, "violate", tuple(self.violate))
        req = {requirement_label(r) for r in self.require}
        vio = {requirement_label(r) for r in self.violate}
        if req & vio:
            raise HomLabError(f"require and violate overlap: {sorted(req & vio)}")


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    models: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class Verdict:
    """Countermodel, or a certificate that none exists up to the bound."""

    model: Optional[FiniteHomMagma]
    bound: int
    stats: SearchStats = field(default=SearchStats())

    @property
    def found(self) -> bool:
        return self.model is not None

    @property
    def outcome(self) -> str:
        return "countermodel" if self.found else "exhausted"


def requirement_label(entry: Requirement) -> str:
    if isinstance(entry, str):
        return entry
    if isinstance(entry, TypeTag):
        return entry.name if entry.family == "assoc" else str(entry)
    return render_identity(entry)


def resolve_requirement(entry: Requirement) -> Identity:
    if isinstance(entry, Identity):
        return entry
    if isinstance(entry, TypeTag):
        return builtin(entry)
    if entry in TYPE_NAMES:
        return builtin(TypeTag("assoc", entry))
    return parse_identity(entry)


def spec_from_dict(data: dict) -> SearchSpec:
    require = list(data.get("require", [])) + list(data.get("custom", []))
    return SearchSpec(
        max_n=int(data.get("max_n", 3)),
        require=tuple(require),
        violate=tuple(data.get("violate", [])),
        with_zero=bool(data.get("with_zero", True)),
        unital=bool(data.get("unital", True)),
        prune_isomorphs=bool(data.get("prune_isomorphs", True)),
    )


def spec_to_dict(spec: SearchSpec) -> dict:
    return {
        "max_n": spec.max_n,
        "require": [requirement_label(r) for r in spec.require],
        "violate": [requirement_label(r) for r in spec.violate],
        "with_zero": spec.with_zero,
        "unital": spec.unital,
        "prune_isomorphs": spec.prune_isomorphs,
    }


# ------------------------------------------------------------ term compiling

def _compile_term(term: Term, unit_index):
    """Compile to f(table, alpha, x, y, z) -> element index or UNDEF."""
    if isinstance(term, Var):
        return {
            "x": lambda t, a, x, y, z: x,
            "y": lambda t, a, x, y, z: y,
            "z": lambda t, a, x, y, z: z,
        }[term.name]
    if isinstance(term, Unit):
        if unit_index is None:
            raise UnitRequired("identity uses the unit constant in a unit-free search")
        return lambda t, a, x, y, z: unit_index
    if isinstance(term, Twist):
        g = _compile_term(term.arg, unit_index)

        def tw(t, a, x, y, z):
            v = g(t, a, x, y, z)
            return a[v] if v >= 0 else UNDEF

        return tw
    g = _compile_term(term.left, unit_index)
    h = _compile_term(term.right, unit_index)

    def pr(t, a, x, y, z):
        l = g(t, a, x, y, z)
        if l < 0:
            return UNDEF
        r = h(t, a, x, y, z)
        if r < 0:
            return UNDEF
        return t[l][r]

    return pr


def _compile_identity(identity: Identity, unit_index):
    if identity.cyclic:
        raise CyclicNotSupportedOnMagma(
            f"cannot search magmas against cyclic identity {identity}"
        )
    return (
        _compile_term(identity.lhs, unit_index),
        _compile_term(identity.rhs, unit_index),
    )


# ------------------------------------------------------------------ search

class _SizeSearch:
    """Exhaustive DFS over one carrier size, in lexicographic order."""

    def __init__(self, spec: SearchSpec, nonzero: int):
        self.spec = spec
        self.n = nonzero
        self.size = nonzero + (1 if spec.with_zero else 0)
        self.zero = nonzero if spec.with_zero else None
        self.unit = 0 if spec.unital else None
        lo = 1 if spec.unital else 0
        self.slots = [("t", i, j) for i in range(lo, nonzero) for j in range(lo, nonzero)]
        self.slots += [("a", i, i) for i in range(nonzero)]
        self.domain = ([self.zero] if self.zero is not None else []) + list(range(nonzero))
        self.require = [
            _compile_identity(resolve_requirement(r), self.unit) for r in spec.require
        ]
        self.violate = [
            _compile_identity(resolve_requirement(v), self.unit) for v in spec.violate
        ]
        self.nodes = 0
        self.models = 0

        table = [[UNDEF] * self.size for _ in range(self.size)]
        alpha = [UNDEF] * self.size
        if self.unit is not None:
            for x in range(self.size):
                table[self.unit][x] = x
                table[x][self.unit] = x
        if self.zero is not None:
            for x in range(self.size):
                table[self.zero][x] = self.zero
                table[x][self.zero] = self.zero
            alpha[self.zero] = self.zero
        self.table = table
        self.alpha = alpha

    def _filter_pending(self, pending, lhs, rhs):
        """Drop triples that are now decided; None signals a violation."""
        t, a = self.table, self.alpha
        rest = []
        for x, y, z in pending:
            lv = lhs(t, a, x, y, z)
            if lv < 0:
                rest.append((x, y, z))
                continue
            rv = rhs(t, a, x, y, z)
            if rv < 0:
                rest.append((x, y, z))
                continue
            if lv != rv:
                return None
        return rest

    def _violates_all(self) -> bool:
        t, a = self.table, self.alpha
        triples = self._all_triples
        for lhs, rhs in self.violate:
            if all(lhs(t, a, x, y, z) == rhs(t, a, x, y, z) for x, y, z in triples):
                return False
        return True

    def run(self, first_slot_values: Optional[Sequence[int]] = None):
        """Yield complete models (as FiniteHomMagma) in lexicographic order.

        first_slot_values restricts the value choices at the root decision
        level; used for splitting across workers.
        """
        self._all_triples = list(itertools.product(range(self.size), repeat=3))
        pendings = []
        for lhs, rhs in self.require:
            pend = self._filter_pending(self._all_triples, lhs, rhs)
            if pend is None:
                return
            pendings.append(pend)
        yield from self._dfs(0, pendings, first_slot_values)

    def _dfs(self, pos, pendings, first_slot_values):
        if pos == len(self.slots):
            self.models += 1
            if self._violates_all():
                yield self._snapshot()
            return
        kind, i, j = self.slots[pos]
        values = self.domain if (pos or first_slot_values is None) else first_slot_values
        for v in values:
            if kind == "t":
                self.table[i][j] = v
            else:
                self.alpha[i] = v
            self.nodes += 1
            ok = True
            new_pendings = []
            for (lhs, rhs), pend in zip(self.require, pendings):
                filtered = self._filter_pending(pend, lhs, rhs)
                if filtered is None:
                    ok = False
                    break
                new_pendings.append(filtered)
            if ok:
                yield from self._dfs(pos + 1, new_pendings, first_slot_values)
        if kind == "t":
            self.table[i][j] = UNDEF
        else:
            self.alpha[i] = UNDEF

    def _snapshot(self) -> FiniteHomMagma:
        return new_magma(
            self.size,
            [row[:] for row in self.table],
            self.alpha[:],
            unit=self.unit,
            zero=self.zero,
        )

    def root_domain(self):
        if not self.slots:
            return []
        return list(self.domain)


def _value_key(value: int, zero: Optional[int]) -> int:
    return 0 if zero is not None and value == zero else value + 1


def model_key(m: FiniteHomMagma) -> tuple:
    """Sort key implementing the (size, table, alpha) lexicographic order,
    with the zero element ordered first among values."""
    flat = tuple(_value_key(v, m.zero) for row in m.table for v in row)
    al = tuple(_value_key(v, m.zero) for v in m.alpha)
    return (m.size, flat, al)


def _reverify(spec: SearchSpec, m: FiniteHomMagma) -> FiniteHomMagma:
    # Independent re-check through the public evaluator.
    for r in spec.require:
        if not evaluate.holds(m, resolve_requirement(r)):
            raise HomLabError(f"search returned a model violating required {requirement_label(r)}")
    for v in spec.violate:
        if evaluate.holds(m, resolve_requirement(v)):
            raise HomLabError(f"search returned a model satisfying forbidden {requirement_label(v)}")
    return m


def _branch_worker(args):
    spec, nonzero, values = args
    search = _SizeSearch(spec, nonzero)
    found = next(search.run(first_slot_values=values), None)
    return (
        None if found is None else magma_to_dict(found),
        search.nodes,
        search.models,
    )


def find_model(spec: SearchSpec, workers: int = 1) -> Verdict:
    """Smallest countermodel within the bound, or an exhaustion certificate.

    Deterministic for every worker count: the same model (the least under
    :func:`model_key`) is returned regardless of parallelism.
    """
    start = time.perf_counter()
    nodes = models = 0
    for nonzero in range(1, spec.max_n + 1):
        probe = _SizeSearch(spec, nonzero)
        roots = probe.root_domain()
        if workers > 1 and len(roots) > 1:
            chunks = [roots[w::workers] for w in range(workers)]
            chunks = [c for c in chunks if c]
            tasks = [(spec, nonzero, c) for c in chunks]
            with multiprocessing.get_context("fork").Pool(len(chunks)) as pool:
                results = pool.map(_branch_worker, tasks)
            found = None
            for data, n_nodes, n_models in results:
                nodes += n_nodes
                models += n_models
                if data is not None:
                    from .carriers import magma_from_dict

                    cand = magma_from_dict(data)
                    if found is None or model_key(cand) < model_key(found):
                        found = cand
            if found is not None:
                stats = SearchStats(nodes, models, time.perf_counter() - start)
                return Verdict(_reverify(spec, found), nonzero, stats)
        else:
            found = next(probe.run(), None)
            nodes += probe.nodes
            models += probe.models
            if found is not None:
                stats = SearchStats(nodes, models, time.perf_counter() - start)
                return Verdict(_reverify(spec, found), nonzero, stats)
    stats = SearchStats(nodes, models, time.perf_counter() - start)
    return Verdict(None, spec.max_n, stats)


def enumerate_models(spec: SearchSpec, limit: int) -> list:
    """Up to `limit` models matching the spec, in lexicographic order,
    deduplicated by canonical form when prune_isomorphs is set."""
    out = []
    seen = set()
    for nonzero in range(1, spec.max_n + 1):
        search = _SizeSearch(spec, nonzero)
        for m in search.run():
            if spec.prune_isomorphs:
                key = model_key(canonical_form(m))
                if key in seen:
                    continue
                seen.add(key)
            out.append(m)
            if len(out) >= limit:
                return out
    return out


def canonical_form(m: FiniteHomMagma) -> FiniteHomMagma:
    """Least relabeling of the magma, fixing the unit (index 0) and the
    zero (last index).  Two magmas are isomorphic as pointed structures
    iff their canonical forms are equal."""
    n = m.size
    # Move into canonical storage first: unit at 0, zero last.
    target = []
    if m.unit is not None:
        target.append(m.unit)
    target += [i for i in range(n) if i not in (m.unit, m.zero)]
    if m.zero is not None:
        target.append(m.zero)
    storage_perm = [0] * n
    for new_idx, old_idx in enumerate(target):
        storage_perm[old_idx] = new_idx
    base = m.relabel(storage_perm)
    base = replace(base, names=_canonical_names(base))

    lo = 1 if m.unit is not None else 0
    hi = n - (1 if m.zero is not None else 0)
    middle = list(range(lo, hi))
    best = base
    best_key = model_key(base)
    for perm in itertools.permutations(middle):
        full = list(range(n))
        for src, dst in zip(middle, perm):
            full[src] = dst
        cand = base.relabel(full)
        key = model_key(cand)
        if key < best_key:
            best = replace(cand, names=_canonical_names(cand))
            best_key = key
    return best


def _canonical_names(m: FiniteHomMagma):
    names = []
    k = 1
    for i in range(m.size):
        if m.zero is not None and i == m.zero:
            names.append("0")
        else:
            names.append(f"e{k}")
            k += 1
    return tuple(names)


def verify_implication(premises, conclusion, max_n: int, workers: int = 1) -> Verdict:
    """Search for a structure with all the premise types but not the
    conclusion; exhaustion confirms the implication up to the bound."""
    spec = SearchSpec(max_n=max_n, require=tuple(premises), violate=(conclusion,))
    return find_model(spec, workers=workers)


def verdict_to_dict(v: Verdict) -> dict:
    # Volatile statistics (nodes, wall time) are deliberately excluded so
    # that output is byte-identical across worker counts.
    return {
        "outcome": v.outcome,
        "bound": v.bound,
        "model": None if v.model is None else magma_to_dict(v.model),
    }
