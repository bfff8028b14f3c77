"""Bounded exhaustive enumeration of finite near semirings up to isomorphism.

Models are generated with the constants pinned at indices zero=0, one=1 and
emitted in canonical form: the lexicographically minimal concatenation of
the sum, product and involution tables over all carrier permutations fixing
the constants.  The sum table is filled first (commutative-monoid and
semilattice constraints prune hard), then the involution, then the product
column by column under right-distributivity propagation; required
identities are re-checked incrementally on the partially filled product
table and nothing is trusted at the leaves — every emitted model re-passes
its constraint through the ordinary checkers.

The involution slot ranges over period-two permutations; order-antitonicity
is additionally enforced exactly when an involutive profile is part of the
constraint.
"""
from __future__ import annotations

import functools
import time
from dataclasses import dataclass
from itertools import combinations, permutations, product as iproduct

import numpy as np

from .core import (
    AlgebraError, FiniteNearSemiring, PROFILES, check_axioms,
)

DEFAULT_SIZE_CAP = 6


# ---------------------------------------------------------------------------
# identity catalog: closed equations over {+, ., alpha, 0, 1}

def _v(i):
    return ("var", i)


def _add(a, b):
    return ("add", a, b)


def _mul(a, b):
    return ("mul", a, b)


def _inv(a):
    return ("inv", a)


@dataclass(frozen=True)
class Identity:
    name: str
    variables: tuple
    lhs: tuple
    rhs: tuple

    @property
    def needs_inv(self) -> bool:
        def walk(t):
            if t[0] == "inv":
                return True
            return any(walk(s) for s in t[1:] if isinstance(s, tuple))
        return walk(self.lhs) or walk(self.rhs)


IDENTITIES = {
    "lukasiewicz": Identity(
        "lukasiewicz", ("x", "y"),
        _mul(_inv(_mul(_v(0), _inv(_v(1)))), _inv(_v(1))),
        _mul(_inv(_mul(_v(1), _inv(_v(0)))), _inv(_v(0)))),
    "orthomodular": Identity(
        "orthomodular", ("x", "y"),
        _v(0),
        _mul(_v(0), _add(_v(0), _v(1)))),
    "mv-semiring": Identity(
        "mv-semiring", ("x", "y"),
        _add(_v(0), _v(1)),
        _inv(_mul(_inv(_v(0)), _inv(_mul(_inv(_v(0)), _v(1)))))),
    "central-1": Identity(
        "central-1", ("e", "x", "y"),
        _add(_mul(_v(0), _inv(_v(1))), _mul(_inv(_v(0)), _inv(_v(2)))),
        _inv(_add(_mul(_v(0), _v(1)), _mul(_inv(_v(0)), _v(2))))),
    "central-2": Identity(
        "central-2", ("e", "x", "z", "y", "u"),
        _add(_mul(_v(0), _mul(_v(1), _v(2))), _mul(_inv(_v(0)), _mul(_v(3), _v(4)))),
        _mul(_add(_mul(_v(0), _v(1)), _mul(_inv(_v(0)), _v(3))),
             _add(_mul(_v(0), _v(2)), _mul(_inv(_v(0)), _v(4))))),
}


@functools.lru_cache(maxsize=None)
def _grids(n: int, k: int):
    g = np.indices((n,) * k).reshape(k, -1)
    g.setflags(write=False)
    return g


def _eval_term(term, add, mul, inv, grids, m):
    """Masked evaluation: -1 marks an entry not yet filled in."""
    kind = term[0]
    if kind == "var":
        return grids[term[1]]
    if kind == "zero":
        return np.zeros(m, dtype=int)
    if kind == "one":
        return np.ones(m, dtype=int)
    if kind == "inv":
        a = _eval_term(term[1], add, mul, inv, grids, m)
        return np.where(a >= 0, inv[np.clip(a, 0, None)], -1)
    a = _eval_term(term[1], add, mul, inv, grids, m)
    b = _eval_term(term[2], add, mul, inv, grids, m)
    table = add if kind == "add" else mul
    out = table[np.clip(a, 0, None), np.clip(b, 0, None)]
    return np.where((a >= 0) & (b >= 0), out, -1)


def identity_first_violation(identity: Identity, add, mul, inv, n: int):
    """Lexicographically first instantiation where both sides evaluate and differ."""
    k = len(identity.variables)
    grids = _grids(n, k)
    m = grids.shape[1]
    lhs = _eval_term(identity.lhs, add, mul, inv, grids, m)
    rhs = _eval_term(identity.rhs, add, mul, inv, grids, m)
    bad = np.flatnonzero((lhs >= 0) & (rhs >= 0) & (lhs != rhs))
    if bad.size == 0:
        return None
    return tuple(int(v) for v in np.unravel_index(int(bad[0]), (n,) * k))


def identity_holds(identity: Identity, algebra: FiniteNearSemiring) -> bool:
    if identity.needs_inv and algebra.inv is None:
        raise AlgebraError(f"identity {identity.name!r} needs an involution")
    return identity_first_violation(
        identity, algebra.add, algebra.mul, algebra.inv, algebra.n) is None


# ---------------------------------------------------------------------------
# constraints


@dataclass(frozen=True)
class SearchConstraint:
    """Profiles that must pass, identities that must hold, identities that must fail."""
    profiles: tuple = ()
    require: tuple = ()
    forbid: tuple = ()

    def __post_init__(self):
        for p in self.profiles:
            if p not in PROFILES:
                raise AlgebraError(f"unknown profile {p!r}")
        for i in self.require + self.forbid:
            if i not in IDENTITIES:
                raise AlgebraError(f"unknown identity {i!r}")

    @property
    def needs_inv(self) -> bool:
        if any(p.startswith("involutive") for p in self.profiles):
            return True
        return any(IDENTITIES[i].needs_inv for i in self.require + self.forbid)

    @property
    def idempotent_add(self) -> bool:
        return any(p in ("idempotent-add", "involutive", "involutive-integral")
                   for p in self.profiles)

    @property
    def integral(self) -> bool:
        return any(p in ("integral", "involutive-integral") for p in self.profiles)

    @property
    def antitone_inv(self) -> bool:
        return any(p in ("involutive", "involutive-integral") for p in self.profiles)


def parse_constraint(names, forbid=()) -> SearchConstraint:
    """Split a mixed list of profile and identity names into a constraint."""
    if isinstance(names, str):
        names = [s for s in names.split(",") if s]
    if isinstance(forbid, str):
        forbid = [s for s in forbid.split(",") if s]
    profiles, require = [], []
    for name in names:
        if name in PROFILES:
            profiles.append(name)
        elif name in IDENTITIES:
            require.append(name)
        else:
            raise AlgebraError(f"unknown profile or identity {name!r}")
    bad = [name for name in forbid if name not in IDENTITIES]
    if bad:
        raise AlgebraError(f"unknown identities in violate set: {bad}")
    return SearchConstraint(tuple(profiles), tuple(require), tuple(forbid))


# ---------------------------------------------------------------------------
# canonical forms and isomorphism


def _constant_fixing_perms(n: int, zero: int, one: int):
    if n == 1:
        yield (0,)
        return
    rest = [x for x in range(n) if x not in (zero, one)]
    slots = list(range(2, n))
    for images in permutations(slots):
        perm = [0] * n
        perm[zero] = 0
        perm[one] = 1
        for x, s in zip(rest, images):
            perm[x] = s
        yield tuple(perm)


def _relabel_key(algebra: FiniteNearSemiring, perm) -> tuple:
    p = np.asarray(perm)
    q = np.empty(algebra.n, dtype=int)
    q[p] = np.arange(algebra.n)
    add = p[algebra.add[np.ix_(q, q)]]
    mul = p[algebra.mul[np.ix_(q, q)]]
    key = tuple(add.ravel()) + tuple(mul.ravel())
    if algebra.inv is not None:
        key += tuple(p[algebra.inv[q]])
    return key


def canonical_form(algebra: FiniteNearSemiring) -> tuple:
    """Minimal (add | mul | inv) concatenation over permutations fixing 0 and 1."""
    best = None
    for perm in _constant_fixing_perms(algebra.n, algebra.zero, algebra.one):
        key = _relabel_key(algebra, perm)
        if best is None or key < best:
            best = key
    return (algebra.n, algebra.inv is not None) + best


def canonicalize(algebra: FiniteNearSemiring, name=None) -> FiniteNearSemiring:
    """Relabel onto the canonical form (constants at 0 and 1)."""
    return _model_from_key(canonical_form(algebra),
                           algebra.name if name is None else name)


def _model_from_key(key: tuple, name: str) -> FiniteNearSemiring:
    """Rebuild the canonical model directly from its canonical-form key."""
    n, has_inv = key[0], key[1]
    flat = key[2:]
    add = np.array(flat[:n * n], dtype=int).reshape(n, n)
    mul = np.array(flat[n * n:2 * n * n], dtype=int).reshape(n, n)
    inv = np.array(flat[2 * n * n:], dtype=int) if has_inv else None
    return FiniteNearSemiring(add, mul, 0, 1 if n >= 2 else 0, inv=inv, name=name)


def are_isomorphic(a: FiniteNearSemiring, b: FiniteNearSemiring):
    """A constant-preserving table isomorphism as a permutation, or None.

    Deterministic: images are tried in ascending order element by element,
    so the first witness found is the lexicographically least one.
    """
    if a.has_inv != b.has_inv:
        raise AlgebraError("cannot compare algebras with different signatures")
    if a.n != b.n:
        return None
    n = a.n
    img = [-1] * n
    used = [False] * n

    def assign(x, y) -> bool:
        if img[x] == -1:
            if used[y]:
                return False
            img[x], used[y] = y, True
            return True
        return img[x] == y

    def consistent(x) -> bool:
        # check every instance all of whose lookups are already mapped
        for u in range(n):
            if img[u] == -1:
                continue
            for (s, t) in ((x, u), (u, x)):
                for tab_a, tab_b in ((a.add, b.add), (a.mul, b.mul)):
                    w = int(tab_a[s, t])
                    if img[w] != -1 and tab_b[img[s], img[t]] != img[w]:
                        return False
        if a.inv is not None:
            w = int(a.inv[x])
            if img[w] != -1 and b.inv[img[x]] != img[w]:
                return False
        return True

    def dfs(x) -> bool:
        if x == n:
            return _is_full_isomorphism(a, b, img)
        if img[x] != -1:
            return consistent(x) and dfs(x + 1)
        for y in range(n):
            if used[y]:
                continue
            img[x], used[y] = y, True
            if consistent(x) and dfs(x + 1):
                return True
            img[x], used[y] = -1, False
        return False

    if not (assign(a.zero, b.zero) and assign(a.one, b.one)):
        return None
    return tuple(img) if dfs(0) else None


def _is_full_isomorphism(a, b, img) -> bool:
    p = np.asarray(img)
    if not np.array_equal(p[a.add], b.add[np.ix_(p, p)]):
        return False
    if not np.array_equal(p[a.mul], b.mul[np.ix_(p, p)]):
        return False
    if a.inv is not None and not np.array_equal(p[a.inv], b.inv[p]):
        return False
    return True


# ---------------------------------------------------------------------------
# sum-table generation


def _lattice_add_tables(n: int):
    """All bounded join-semilattice tables on range(n) with bottom 0 and top 1.

    Enumerates the middle order three-ways per unordered pair, keeps
    transitive relations in which every pair has a least upper bound.
    """
    middle = list(range(2, n))
    k = len(middle)
    pairs = list(combinations(range(k), 2))
    tables = []
    for choice in iproduct((0, 1, 2), repeat=len(pairs)):
        rel = np.eye(k, dtype=bool)
        for (i, j), c in zip(pairs, choice):
            if c == 1:
                rel[i, j] = True
            elif c == 2:
                rel[j, i] = True
        if k and np.any((rel @ rel) & ~rel):
            continue
        leq = np.zeros((n, n), dtype=bool)
        leq[0, :] = True
        leq[:, 1] = True
        leq[0, 0] = leq[1, 1] = True
        for i, x in enumerate(middle):
            leq[x, x] = True
            for j, y in enumerate(middle):
                if rel[i, j]:
                    leq[x, y] = True
        add = _joins_from_order(leq)
        if add is not None:
            tables.append(add)
    return tables


def _joins_from_order(leq: np.ndarray):
    n = leq.shape[0]
    add = np.zeros((n, n), dtype=int)
    for x in range(n):
        for y in range(x, n):
            ub = [z for z in range(n) if leq[x, z] and leq[y, z]]
            least = [z for z in ub if all(leq[z, w] for w in ub)]
            if len(least) != 1:
                return None
            add[x, y] = add[y, x] = least[0]
    return add


def _generic_add_tables(n: int, idempotent: bool, integral: bool):
    """DFS over commutative-monoid tables (zero=0 neutral, optional extras)."""
    add = -np.ones((n, n), dtype=int)
    add[0, :] = np.arange(n)
    add[:, 0] = np.arange(n)
    if idempotent:
        for x in range(n):
            add[x, x] = x
    if integral and n >= 2:
        add[:, 1] = 1
        add[1, :] = 1
        add[0, 1] = add[1, 0] = 1
    cells = [(i, j) for i in range(1, n) for j in range(i, n) if add[i, j] < 0]
    out = []

    def assoc_ok() -> bool:
        for x in range(n):
            for y in range(n):
                s = add[x, y]
                if s < 0:
                    continue
                for z in range(n):
                    t = add[y, z]
                    if t < 0:
                        continue
                    l, r = add[s, z], add[x, t]
                    if l >= 0 and r >= 0 and l != r:
                        return False
        return True

    def dfs(i):
        if i == len(cells):
            out.append(add.copy())
            return
        x, y = cells[i]
        for v in range(n):
            add[x, y] = v
            add[y, x] = v
            if assoc_ok():
                dfs(i + 1)
        add[x, y] = -1
        add[y, x] = -1

    dfs(0)
    return out


def _canonical_add_tables(n: int, constraint: SearchConstraint):
    """Sum tables for the constraint, one per orbit of middle-permutations."""
    if n == 1:
        return [np.zeros((1, 1), dtype=int)]
    if constraint.idempotent_add and constraint.integral:
        raw = _lattice_add_tables(n)
    else:
        raw = _generic_add_tables(n, constraint.idempotent_add, constraint.integral)
    seen = {}
    for add in raw:
        key = min(tuple(perm[add[np.ix_(q, q)]].ravel())
                  for perm, q in _middle_perms(n))
        if key not in seen:
            seen[key] = np.array(key, dtype=int).reshape(n, n)
    return [seen[key] for key in sorted(seen)]


@functools.lru_cache(maxsize=None)
def _middle_perms(n: int):
    """All (perm, inverse) pairs over range(n) fixing 0 and 1."""
    out = []
    for perm in _constant_fixing_perms(n, 0, 1 if n >= 2 else 0):
        p = np.asarray(perm)
        q = np.empty(n, dtype=int)
        q[p] = np.arange(n)
        p.setflags(write=False)
        q.setflags(write=False)
        out.append((p, q))
    return tuple(out)


# ---------------------------------------------------------------------------
# involution and product generation


def _involution_candidates(add: np.ndarray, constraint: SearchConstraint):
    """Period-two permutations, antitone when an involutive profile demands it."""
    n = add.shape[0]
    autos = [(p, q) for p, q in _middle_perms(n)
             if np.array_equal(p[add[np.ix_(q, q)]], add)]
    cands = []
    for perm in permutations(range(n)):
        p = np.asarray(perm)
        if not np.array_equal(p[p], np.arange(n)):
            continue
        if constraint.antitone_inv:
            ok = True
            for x in range(n):
                for y in range(n):
                    if add[x, y] == y and add[p[y], p[x]] != p[x]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                continue
        cands.append(p)
    seen = set()
    out = []
    for p in cands:
        key = min(tuple(sp[p[sq]]) for sp, sq in autos)
        if key not in seen:
            seen.add(key)
            out.append(np.asarray(key, dtype=int))
    out.sort(key=tuple)
    return out


def _column_candidates(add: np.ndarray, z: int):
    """Right-distributive columns x -> x.z with 0.z = 0 and 1.z = z."""
    n = add.shape[0]
    cols = []
    free = list(range(2, n))
    for values in iproduct(range(n), repeat=len(free)):
        col = np.empty(n, dtype=int)
        col[0] = 0
        if n >= 2:
            col[1] = z
        for x, v in zip(free, values):
            col[x] = v
        if np.array_equal(col[add], add[np.ix_(col, col)]):
            cols.append(col)
    return cols


def _column_order(n: int, inv) -> list:
    """Middle columns, dual pairs adjacent when an involution is present."""
    middle = list(range(2, n))
    if inv is None:
        return middle
    order, seen = [], set()
    for z in middle:
        if z in seen:
            continue
        order.append(z)
        seen.add(z)
        mate = int(inv[z])
        if mate in middle and mate not in seen:
            order.append(mate)
            seen.add(mate)
    return order


# ---------------------------------------------------------------------------
# the search proper


@dataclass
class SearchResult:
    models: list
    exhaustive: bool
    nodes: int
    elapsed: float
    sizes: tuple = ()
    violations: tuple = ()        # for find: ((identity, witness-dict), ...)

    def to_dict(self) -> dict:
        return {
            "models": [m.to_document() for m in self.models],
            "exhaustive": self.exhaustive,
            "nodes": self.nodes,
            "sizes": list(self.sizes),
            "violations": [[name, dict(w)] for name, w in self.violations],
        }


class _Counter:
    __slots__ = ("nodes",)

    def __init__(self):
        self.nodes = 0


def _iter_raw_models(n: int, constraint: SearchConstraint, add: np.ndarray, counter: _Counter):
    """All (add, inv, mul) completions of one sum table, unverified, DFS order."""
    required = [IDENTITIES[name] for name in constraint.require]
    invs = _involution_candidates(add, constraint) if constraint.needs_inv else [None]
    columns = {z: _column_candidates(add, z) for z in range(2, n)}

    for inv in invs:
        counter.nodes += 1
        order = _column_order(n, inv)
        mul = -np.ones((n, n), dtype=int)
        mul[:, 0] = 0
        mul[0, :] = 0
        if n >= 2:
            mul[:, 1] = np.arange(n)
            mul[1, :] = np.arange(n)

        def dfs(i):
            if i == len(order):
                yield mul.copy()
                return
            z = order[i]
            saved = mul[:, z].copy()
            for col in columns[z]:
                counter.nodes += 1
                mul[:, z] = col
                # identities cannot reject what a completed table would accept:
                # instances with any unfilled lookup are skipped
                ok = True
                for ident in required:
                    if identity_first_violation(ident, add, mul, inv, n) is not None:
                        ok = False
                        break
                if ok:
                    yield from dfs(i + 1)
            mul[:, z] = saved

        for m in dfs(0):
            yield add, inv, m


def _effective_profiles(constraint: SearchConstraint) -> tuple:
    """Requested profiles plus the near-semiring base, minus subsumed ones."""
    wanted = ("near-semiring",) + constraint.profiles
    keep = []
    for p in wanted:
        mine = set(PROFILES[p])
        if any(q != p and mine < set(PROFILES[q]) for q in wanted):
            continue
        if p not in keep:
            keep.append(p)
    return tuple(keep)


def _verify(algebra: FiniteNearSemiring, constraint: SearchConstraint):
    """Re-check a candidate through the ordinary checkers; None or (ok, forbid witnesses)."""
    for profile in _effective_profiles(constraint):
        if not check_axioms(algebra, profile).passed:
            return None
    for name in constraint.require:
        if identity_first_violation(
                IDENTITIES[name], algebra.add, algebra.mul, algebra.inv, algebra.n) is not None:
            return None
    witnesses = []
    for name in constraint.forbid:
        w = identity_first_violation(
            IDENTITIES[name], algebra.add, algebra.mul, algebra.inv, algebra.n)
        if w is None:
            return None
        witnesses.append((name, tuple(zip(IDENTITIES[name].variables, w))))
    return tuple(witnesses)


def _models_for_roots(n, constraint, roots, counter):
    """Generate (canonical key, model, forbid-witnesses) for a list of sum tables."""
    for add in roots:
        for raw_add, inv, mul in _iter_raw_models(n, constraint, add, counter):
            candidate = FiniteNearSemiring(
                raw_add, mul, 0, 1 if n >= 2 else 0,
                inv=None if inv is None else inv.copy(), name="candidate")
            witnesses = _verify(candidate, constraint)
            if witnesses is None:
                continue
            yield canonical_form(candidate), candidate, witnesses


def _search_worker(args):
    n, constraint, roots = args
    counter = _Counter()
    found = {}
    for key, _model, witnesses in _models_for_roots(n, constraint, roots, counter):
        if key not in found:
            found[key] = witnesses
    return found, counter.nodes


def enumerate_models(n: int, constraint: SearchConstraint = SearchConstraint(),
                     allow_large: bool = False, workers: int = None) -> SearchResult:
    """All models of size n satisfying the constraint, one per isomorphism class.

    Output is canonically sorted, so serial and parallel runs emit the same
    list in the same order.  Sizes above the default cap require
    allow_large=True.
    """
    if n < 1:
        raise AlgebraError("size must be at least 1")
    if n > DEFAULT_SIZE_CAP and not allow_large:
        raise AlgebraError(
            f"size {n} exceeds the default cap {DEFAULT_SIZE_CAP}; pass allow_large=True")
    start = time.perf_counter()
    roots = _canonical_add_tables(n, constraint)
    found = {}
    nodes = 0
    if workers and workers > 1 and len(roots) > 1:
        import multiprocessing as mp
        chunks = [roots[i::workers] for i in range(workers)]
        ctx = mp.get_context("fork")
        with ctx.Pool(workers) as pool:
            for part, part_nodes in pool.map(
                    _search_worker, [(n, constraint, c) for c in chunks if c]):
                nodes += part_nodes
                for key, value in part.items():
                    found.setdefault(key, value)
    else:
        counter = _Counter()
        for key, _model, witnesses in _models_for_roots(n, constraint, roots, counter):
            found.setdefault(key, witnesses)
        nodes = counter.nodes
    models = [_model_from_key(key, f"n{n}#{i}") for i, key in enumerate(sorted(found))]
    return SearchResult(models, True, nodes, time.perf_counter() - start, sizes=(n,))


def find_model(n_max: int, satisfy, violate, allow_large: bool = False) -> SearchResult:
    """First model (sizes 1..n_max, generation order) satisfying and violating as asked.

    Returns the witness model together with an explicit violating
    instantiation for every identity in the violate set, or an
    exhaustive-none result if the whole bounded space is traversed.
    """
    if isinstance(satisfy, SearchConstraint):
        constraint = SearchConstraint(satisfy.profiles, satisfy.require,
                                      tuple(violate) if not isinstance(violate, str)
                                      else (violate,))
    else:
        constraint = parse_constraint(satisfy, violate)
    if n_max > DEFAULT_SIZE_CAP and not allow_large:
        raise AlgebraError(
            f"size {n_max} exceeds the default cap {DEFAULT_SIZE_CAP}; pass allow_large=True")
    start = time.perf_counter()
    counter = _Counter()
    searched = []
    for n in range(1, n_max + 1):
        roots = _canonical_add_tables(n, constraint)
        for _key, model, _witnesses in _models_for_roots(n, constraint, roots, counter):
            model = canonicalize(model, name=f"witness-n{n}")
            # witnesses are recomputed on the canonical labelling
            witnesses = []
            for name in constraint.forbid:
                w = identity_first_violation(
                    IDENTITIES[name], model.add, model.mul, model.inv, model.n)
                witnesses.append((name, tuple(zip(IDENTITIES[name].variables, w))))
            return SearchResult([model], False, counter.nodes,
                                time.perf_counter() - start,
                                sizes=tuple(searched), violations=tuple(witnesses))
        searched.append(n)
    return SearchResult([], True, counter.nodes, time.perf_counter() - start,
                        sizes=tuple(searched))
