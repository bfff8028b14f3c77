"""Central elements and direct decomposition of integral involutive near semirings.

The ternary selector q(x,y,z) = (x·y)+(α(x)·z) behaves like if-then-else on
the constants.  An element e is central when the pair of principal
congruences it generates with the constants is a factor pair; the package
detects centrality three independent ways (two equational characterizations
and the congruence route) and can cross-compare them element by element.
The centrals form a Boolean algebra whose atoms index the finest direct
decomposition into interval algebras [0, e].
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .core import (
    AlgebraError, CheckReport, ClauseResult, FiniteNearSemiring,
    PreconditionError, PropertyReport, Violation, check_axioms, require,
)
from .congruences import is_factor_pair, principal_congruence


def church_q(algebra: FiniteNearSemiring, x: int, y: int, z: int) -> int:
    """Selector term q(x,y,z) = (x·y) + (α(x)·z)."""
    if algebra.inv is None:
        raise PreconditionError(f"{algebra.name} has no involution table")
    add, mul, inv = algebra.add, algebra.mul, algebra.inv
    return int(add[mul[x, y], mul[inv[x], z]])


def check_church(algebra: FiniteNearSemiring) -> CheckReport:
    """q(1,a,b) = a and q(0,a,b) = b, exhaustively."""
    require(algebra, "involutive-integral", "selector term")
    n, l = algebra.n, algebra.label
    violations = []
    for a, b in iproduct(range(n), repeat=2):
        if church_q(algebra, algebra.one, a, b) != a:
            violations.append(Violation(
                "selector-at-one", (a, b),
                f"q({l(algebra.one)},{l(a)},{l(b)})={l(church_q(algebra, algebra.one, a, b))}"))
            break
    for a, b in iproduct(range(n), repeat=2):
        if church_q(algebra, algebra.zero, a, b) != b:
            violations.append(Violation(
                "selector-at-zero", (a, b),
                f"q({l(algebra.zero)},{l(a)},{l(b)})={l(church_q(algebra, algebra.zero, a, b))}"))
            break
    violations.sort(key=lambda v: (v.clause, v.witness))
    return CheckReport(algebra.name, "church-selector", not violations, tuple(violations))


# ---------------------------------------------------------------------------
# the three centrality methods

CENTRALITY_METHODS = ("equational", "full-conditions", "congruence")


def central_identity_violation(algebra: FiniteNearSemiring, e: int, which: str):
    """First instantiation violating one centrality identity at the element e.

    which='1' checks (e·α(x)) + (α(e)·α(y)) = α((e·x) + (α(e)·y)) over all
    (x, y); which='2' checks the product-compatibility identity over all
    (x, z, y, u).  Returns the lexicographically first violating tuple, or
    None when the identity holds everywhere at e.
    """
    if algebra.inv is None:
        raise PreconditionError(f"{algebra.name} has no involution table")
    if not 0 <= e < algebra.n:
        raise AlgebraError(f"element {e} out of range [0, {algebra.n})")
    add, mul, inv, n = algebra.add, algebra.mul, algebra.inv, algebra.n
    ie = int(inv[e])
    if which == "1":
        x, y = np.indices((n, n)).reshape(2, -1)
        lhs = add[mul[e, inv[x]], mul[ie, inv[y]]]
        rhs = inv[add[mul[e, x], mul[ie, y]]]
        shape = (n, n)
    elif which == "2":
        x, z, y, u = np.indices((n, n, n, n)).reshape(4, -1)
        lhs = add[mul[e, mul[x, z]], mul[ie, mul[y, u]]]
        rhs = mul[add[mul[e, x], mul[ie, y]], add[mul[e, z], mul[ie, u]]]
        shape = (n, n, n, n)
    else:
        raise AlgebraError(f"which must be '1' or '2', got {which!r}")
    bad = np.flatnonzero(lhs != rhs)
    if bad.size == 0:
        return None
    return tuple(int(v) for v in np.unravel_index(int(bad[0]), shape))


def _central_equational_witness(algebra: FiniteNearSemiring, e: int):
    """First witness violating one of the two centrality identities at e, or None."""
    for which in ("1", "2"):
        w = central_identity_violation(algebra, e, which)
        if w is not None:
            return (f"central-{which}", w)
    return None


def is_central_equational(algebra: FiniteNearSemiring, e: int) -> bool:
    return _central_equational_witness(algebra, e) is None


def is_central_full_conditions(algebra: FiniteNearSemiring, e: int) -> bool:
    """Selector-based conditions: q(e,·,·) is a decomposition operation.

    Checks, through their table expansions, that q(e,a,a)=a, that q(e,-,-)
    is associative in the appropriate sense, that it commutes with every
    basic operation of the signature (both constants, the involution, sum
    and product), and that q(e,1,0)=e.
    """
    add, mul, inv, n = algebra.add, algebra.mul, algebra.inv, algebra.n
    zero, one = algebra.zero, algebra.one
    ie = int(inv[e])

    def q(x, y, z):
        return add[mul[x, y], mul[inv[x], z]]

    a = np.arange(n)
    if not np.array_equal(q(e, a, a), a):
        return False
    qe = add[np.ix_(mul[e], mul[ie])]      # qe[y, z] = q(e, y, z)
    a3, b3, c3 = np.indices((n, n, n)).reshape(3, -1)
    if not np.array_equal(qe[qe[a3, b3], c3], qe[a3, c3]):
        return False
    if not np.array_equal(qe[a3, c3], qe[a3, qe[b3, c3]]):
        return False
    if add[mul[e, zero], mul[ie, zero]] != zero:
        return False
    if add[mul[e, one], mul[ie, one]] != one:
        return False
    a2, b2 = np.indices((n, n)).reshape(2, -1)
    if not np.array_equal(qe[inv[a2], inv[b2]], inv[qe[a2, b2]]):
        return False
    a4, b4, c4, d4 = np.indices((n, n, n, n)).reshape(4, -1)
    if not np.array_equal(qe[add[a4, c4], add[b4, d4]], add[qe[a4, b4], qe[c4, d4]]):
        return False
    if not np.array_equal(qe[mul[a4, c4], mul[b4, d4]], mul[qe[a4, b4], qe[c4, d4]]):
        return False
    return int(q(e, one, zero)) == e


def is_central_congruence(algebra: FiniteNearSemiring, e: int) -> bool:
    """Factor-congruence test: (θ(e,0), θ(e,1)) must be a factor pair."""
    theta = principal_congruence(algebra, e, algebra.zero)
    phi = principal_congruence(algebra, e, algebra.one)
    return is_factor_pair(algebra, theta, phi)


_METHOD_FNS = {
    "equational": is_central_equational,
    "full-conditions": is_central_full_conditions,
    "congruence": is_central_congruence,
}


@dataclass(frozen=True)
class CenterReport:
    subject: str
    methods: tuple
    centrals: tuple
    agreement: bool
    per_method: tuple                 # ((method, centrals tuple), ...)
    atoms: tuple
    boolean_check: CheckReport = None

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "methods": list(self.methods),
            "centrals": list(self.centrals),
            "agreement": self.agreement,
            "per_method": {m: list(c) for m, c in self.per_method},
            "atoms": list(self.atoms),
            "boolean_check": None if self.boolean_check is None else self.boolean_check.to_dict(),
        }

    def render(self, algebra: FiniteNearSemiring = None) -> str:
        lab = algebra.label if algebra is not None else str
        lines = [f"center of {self.subject}: "
                 f"{{{','.join(lab(e) for e in self.centrals)}}} "
                 f"atoms={{{','.join(lab(e) for e in self.atoms)}}} "
                 f"methods={','.join(self.methods)} "
                 + ("agree" if self.agreement else "DISAGREE")]
        if not self.agreement:
            for m, c in self.per_method:
                lines.append(f"  {m}: {{{','.join(lab(e) for e in c)}}}")
        if self.boolean_check is not None:
            lines.append(self.boolean_check.render())
        return "\n".join(lines)


def _normalize_methods(method) -> tuple:
    if method == "all":
        return CENTRALITY_METHODS
    if isinstance(method, str):
        method = (method,)
    method = tuple(method)
    for m in method:
        if m not in _METHOD_FNS:
            raise AlgebraError(
                f"unknown centrality method {m!r}; known: {', '.join(CENTRALITY_METHODS)} or 'all'")
    return method


def central_elements(algebra: FiniteNearSemiring, method="equational") -> CenterReport:
    """Detect central elements by one or more methods and compare the verdicts."""
    require(algebra, "involutive-integral", "centrality")
    methods = _normalize_methods(method)
    per_method = []
    for m in methods:
        fn = _METHOD_FNS[m]
        per_method.append((m, tuple(e for e in range(algebra.n) if fn(algebra, e))))
    centrals = per_method[0][1]
    agreement = all(c == centrals for _, c in per_method)
    for method, found in per_method:
        if algebra.zero not in found or algebra.one not in found:
            raise AlgebraError(
                f"method {method} misses a constant in the center of {algebra.name}")
    for e in centrals:
        if algebra.add[e, algebra.inv[e]] != algebra.one:
            raise AlgebraError(
                f"central element {algebra.label(e)} of {algebra.name} "
                f"has {algebra.label(e)}+α({algebra.label(e)})≠{algebra.label(algebra.one)}")
    return CenterReport(algebra.name, methods, centrals, agreement,
                        tuple(per_method), _atoms_of(algebra, centrals))


def _atoms_of(algebra: FiniteNearSemiring, centrals) -> tuple:
    """Minimal nonzero centrals for the sum order, restricted to the center."""
    add, zero = algebra.add, algebra.zero
    nonzero = [e for e in centrals if e != zero]
    return tuple(e for e in nonzero
                 if not any(c != e and add[c, e] == e for c in nonzero))


def central_lemma_suite(algebra: FiniteNearSemiring, e: int) -> PropertyReport:
    """Derived facts about a single equationally central element."""
    require(algebra, "involutive-integral", "central-element facts")
    if not 0 <= e < algebra.n:
        raise AlgebraError(f"element {e} out of range [0, {algebra.n})")
    w = _central_equational_witness(algebra, e)
    if w is not None:
        raise PreconditionError(
            f"{algebra.label(e)} is not central in {algebra.name} "
            f"(fails {w[0]} at {w[1]})")
    add, mul, inv, n = algebra.add, algebra.mul, algebra.inv, algebra.n
    zero, l = algebra.zero, algebra.label
    ie = inv[e]
    clauses = []

    def scan(clause, arity, pred, render):
        for args in iproduct(range(n), repeat=arity):
            if not pred(*args):
                clauses.append(ClauseResult(clause, False, args, render(*args)))
                return
        clauses.append(ClauseResult(clause, True))

    scan("shift-absorption", 1,
         lambda x: add[mul[e, x], ie] == add[x, ie],
         lambda x: f"(e·{l(x)})+α(e)≠{l(x)}+α(e)")
    scan("projection-idempotence", 1,
         lambda x: mul[e, mul[e, x]] == mul[e, x] and mul[mul[e, x], e] == mul[e, x],
         lambda x: f"e·(e·{l(x)})≠e·{l(x)} or (e·{l(x)})·e≠e·{l(x)}")
    scan("complement-annihilation", 0,
         lambda: mul[e, ie] == zero,
         lambda: f"e·α(e)={l(int(mul[e, ie]))}")
    scan("central-commutation", 1,
         lambda x: mul[e, x] == mul[x, e],
         lambda x: f"e·{l(x)}≠{l(x)}·e")
    scan("left-distributivity-at-e", 2,
         lambda x, y: mul[e, add[x, y]] == add[mul[e, x], mul[e, y]],
         lambda x, y: f"e·({l(x)}+{l(y)})≠(e·{l(x)})+(e·{l(y)})")
    scan("left-monotonicity-at-e", 2,
         lambda x, y: add[x, y] != y or add[mul[e, x], mul[e, y]] == mul[e, y],
         lambda x, y: f"{l(x)}≤{l(y)} but e·{l(x)}≰e·{l(y)}")
    scan("complement-chain-annihilation", 1,
         lambda x: mul[e, mul[ie, x]] == zero,
         lambda x: f"e·(α(e)·{l(x)})={l(int(mul[e, mul[ie, x]]))}")
    return PropertyReport(algebra.name, f"central-element {l(e)}", tuple(clauses))


def center_algebra(algebra: FiniteNearSemiring) -> CenterReport:
    """The center as a structure: closure, Boolean axioms, selector agreement, atoms."""
    require(algebra, "involutive-integral", "center algebra")
    base = central_elements(algebra, "equational")
    cen = base.centrals
    add, mul, inv = algebra.add, algebra.mul, algebra.inv
    zero, one, l = algebra.zero, algebra.one, algebra.label
    cset = set(cen)
    for x, y in iproduct(cen, repeat=2):
        if int(add[x, y]) not in cset or int(mul[x, y]) not in cset:
            raise AlgebraError(
                f"center of {algebra.name} is not closed at ({l(x)},{l(y)})")
    for x in cen:
        if int(inv[x]) not in cset:
            raise AlgebraError(f"center of {algebra.name} is not closed under α at {l(x)}")

    violations = []

    def scan(clause, arity, pred, render):
        for args in iproduct(cen, repeat=arity):
            if not pred(*args):
                violations.append(Violation(clause, args, render(*args)))
                return

    scan("add-commutativity", 2, lambda x, y: add[x, y] == add[y, x],
         lambda x, y: f"{l(x)}+{l(y)}≠{l(y)}+{l(x)}")
    scan("add-associativity", 3,
         lambda x, y, z: add[add[x, y], z] == add[x, add[y, z]],
         lambda x, y, z: f"sum not associative at ({l(x)},{l(y)},{l(z)})")
    scan("mul-commutativity", 2, lambda x, y: mul[x, y] == mul[y, x],
         lambda x, y: f"{l(x)}·{l(y)}≠{l(y)}·{l(x)}")
    scan("mul-associativity", 3,
         lambda x, y, z: mul[mul[x, y], z] == mul[x, mul[y, z]],
         lambda x, y, z: f"product not associative at ({l(x)},{l(y)},{l(z)})")
    scan("absorption", 2,
         lambda x, y: add[x, mul[x, y]] == x and mul[x, add[x, y]] == x,
         lambda x, y: f"absorption fails at ({l(x)},{l(y)})")
    scan("bounds", 1,
         lambda x: add[zero, x] == x and add[x, one] == one
         and mul[one, x] == x and mul[zero, x] == zero,
         lambda x: f"bounds fail at {l(x)}")
    scan("distributivity", 3,
         lambda x, y, z: mul[x, add[y, z]] == add[mul[x, y], mul[x, z]]
         and add[x, mul[y, z]] == mul[add[x, y], add[x, z]],
         lambda x, y, z: f"distributivity fails at ({l(x)},{l(y)},{l(z)})")
    scan("complementation", 1,
         lambda x: add[x, inv[x]] == one and mul[x, inv[x]] == zero,
         lambda x: f"complement laws fail at {l(x)}")
    scan("selector-join-match", 2,
         lambda x, y: add[x, y] == church_q(algebra, x, one, y),
         lambda x, y: f"{l(x)}+{l(y)}≠q({l(x)},{l(one)},{l(y)})")
    scan("selector-meet-match", 2,
         lambda x, y: mul[x, y] == church_q(algebra, x, y, zero),
         lambda x, y: f"{l(x)}·{l(y)}≠q({l(x)},{l(y)},{l(zero)})")

    violations.sort(key=lambda v: (v.clause, v.witness))
    boolean_check = CheckReport(f"Ce({algebra.name})", "center-boolean-algebra",
                                not violations, tuple(violations))
    return CenterReport(algebra.name, base.methods, cen, base.agreement,
                        base.per_method, base.atoms, boolean_check)


# ---------------------------------------------------------------------------
# interval algebras and decomposition


@dataclass(frozen=True, eq=False)
class IntervalAlgebra:
    """The factor [0, e] of a central element, re-indexed densely.

    carrier lists the parent elements in ascending order; algebra is the
    interval as a standalone near semiring whose involution is x -> e·α(x).
    """
    parent: str
    top: int
    carrier: tuple
    algebra: FiniteNearSemiring

    def to_local(self, x: int) -> int:
        return self.carrier.index(x)

    def to_parent(self, i: int) -> int:
        return self.carrier[i]

    def to_dict(self) -> dict:
        return {"parent": self.parent, "top": self.top,
                "carrier": list(self.carrier), "algebra": self.algebra.to_document()}


def interval_algebra(algebra: FiniteNearSemiring, e: int) -> IntervalAlgebra:
    """Build and verify the interval algebra on [0, e] for central e.

    The carrier is computed both as {x : x ≤ e} and as {e·b : b in R} and the
    two must agree; sum and product restrict, the complement is x -> e·α(x),
    and b -> e·b must be a surjective homomorphism onto the result.
    """
    require(algebra, "involutive-integral", "interval algebra")
    if not 0 <= e < algebra.n:
        raise AlgebraError(f"element {e} out of range [0, {algebra.n})")
    w = _central_equational_witness(algebra, e)
    if w is not None:
        raise PreconditionError(
            f"{algebra.label(e)} is not central in {algebra.name} (fails {w[0]} at {w[1]})")
    add, mul, inv, n, l = algebra.add, algebra.mul, algebra.inv, algebra.n, algebra.label
    below = tuple(x for x in range(n) if add[x, e] == e)
    image = tuple(sorted({int(mul[e, b]) for b in range(n)}))
    if below != image:
        raise AlgebraError(
            f"interval carriers differ for e={l(e)}: "
            f"{{x≤e}}={below} but {{e·b}}={image}")
    index = {x: i for i, x in enumerate(below)}
    k = len(below)
    for x, y in iproduct(below, repeat=2):
        if int(add[x, y]) not in index or int(mul[x, y]) not in index:
            raise AlgebraError(f"interval [0,{l(e)}] is not closed at ({l(x)},{l(y)})")
    sub_add = np.array([[index[int(add[x, y])] for y in below] for x in below])
    sub_mul = np.array([[index[int(mul[x, y])] for y in below] for x in below])
    sub_inv = np.array([index[int(mul[e, inv[x]])] for x in below])
    sub = FiniteNearSemiring(
        sub_add, sub_mul, index[algebra.zero], index[e], inv=sub_inv,
        name=f"{algebra.name}[0,{l(e)}]", labels=tuple(l(x) for x in below))
    if k >= 2:
        rep = check_axioms(sub, "involutive-integral")
        if not rep.passed:
            raise AlgebraError(
                f"interval [0,{l(e)}] of {algebra.name} fails involutive-integral: "
                f"{rep.violations[0].equation}")
    # b -> e·b is a surjective homomorphism onto the interval
    h = [index[int(mul[e, b])] for b in range(n)]
    if set(h) != set(range(k)):
        raise AlgebraError(f"projection onto [0,{l(e)}] is not surjective")
    for x, y in iproduct(range(n), repeat=2):
        if h[add[x, y]] != sub_add[h[x], h[y]] or h[mul[x, y]] != sub_mul[h[x], h[y]]:
            raise AlgebraError(
                f"projection onto [0,{l(e)}] is not a homomorphism at ({l(x)},{l(y)})")
    for x in range(n):
        if h[inv[x]] != sub_inv[h[x]]:
            raise AlgebraError(
                f"projection onto [0,{l(e)}] does not respect the complement at {l(x)}")
    if h[algebra.zero] != sub.zero or h[algebra.one] != sub.one:
        raise AlgebraError(f"projection onto [0,{l(e)}] moves the constants")
    return IntervalAlgebra(algebra.name, e, below, sub)


@dataclass(frozen=True, eq=False)
class DecompositionResult:
    subject: str
    atoms: tuple
    factors: tuple                    # IntervalAlgebra per atom, ascending
    iso: tuple                        # element -> tuple of local factor indices
    indecomposable: tuple

    def factor_sizes(self) -> tuple:
        return tuple(f.algebra.n for f in self.factors)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "atoms": list(self.atoms),
            "factors": [f.to_dict() for f in self.factors],
            "iso": [list(t) for t in self.iso],
            "indecomposable": list(self.indecomposable),
        }

    def render(self, algebra: FiniteNearSemiring = None) -> str:
        lab = algebra.label if algebra is not None else str
        lines = [f"decomposition of {self.subject}: "
                 + " x ".join(f"{f.algebra.name}(n={f.algebra.n})" for f in self.factors)]
        lines.append(f"  atoms: {{{','.join(lab(e) for e in self.atoms)}}}")
        lines.append(f"  all factors directly indecomposable: {all(self.indecomposable)}")
        return "\n".join(lines)


def decompose(algebra: FiniteNearSemiring) -> DecompositionResult:
    """Decompose into directly indecomposable interval algebras.

    One factor per atom of the center; the map b -> (e1·b, ..., ek·b) is
    verified to be a bijective homomorphism, every factor is verified to
    have a two-element center (so it is directly indecomposable), and the
    atom bookkeeping of the binary splits is re-checked recursively.
    """
    require(algebra, "involutive-integral", "decomposition")
    report = central_elements(algebra, "equational")
    if algebra.n == 1:
        factor = interval_algebra(algebra, algebra.one)
        return DecompositionResult(algebra.name, report.atoms, (factor,), ((0,),), (True,))
    atoms = report.atoms
    if not atoms:
        raise AlgebraError(
            f"center of {algebra.name} has no atoms despite n={algebra.n} >= 2")
    factors = tuple(interval_algebra(algebra, e) for e in atoms)
    sizes = [f.algebra.n for f in factors]
    prod = 1
    for s in sizes:
        prod *= s
    if prod != algebra.n:
        raise AlgebraError(
            f"factor sizes {sizes} do not multiply to n={algebra.n} for {algebra.name}")
    mul = algebra.mul
    iso = tuple(tuple(f.to_local(int(mul[e, b])) for e, f in zip(atoms, factors))
                for b in range(algebra.n))
    if len(set(iso)) != algebra.n:
        raise AlgebraError(f"decomposition map of {algebra.name} is not injective")
    for x, y in iproduct(range(algebra.n), repeat=2):
        for i, f in enumerate(factors):
            fa = f.algebra
            if iso[algebra.add[x, y]][i] != fa.add[iso[x][i], iso[y][i]] or \
               iso[algebra.mul[x, y]][i] != fa.mul[iso[x][i], iso[y][i]]:
                raise AlgebraError(
                    f"decomposition map of {algebra.name} is not a homomorphism")
    for x in range(algebra.n):
        for i, f in enumerate(factors):
            if iso[algebra.inv[x]][i] != f.algebra.inv[iso[x][i]]:
                raise AlgebraError(
                    f"decomposition map of {algebra.name} ignores the complement")
    flags = []
    for f in factors:
        cen = central_elements(f.algebra, "equational").centrals
        flags.append(len(cen) <= 2)
    _audit_binary_splits(algebra, atoms)
    return DecompositionResult(algebra.name, atoms, factors, iso, tuple(flags))


def _audit_binary_splits(algebra: FiniteNearSemiring, atoms) -> None:
    """Splitting at the first atom must shift the remaining atoms into [0, α(e)]."""
    if len(atoms) <= 1:
        return
    e = atoms[0]
    comp = interval_algebra(algebra, int(algebra.inv[e]))
    comp_atoms_local = central_elements(comp.algebra, "equational").atoms
    comp_atoms = tuple(sorted(comp.to_parent(i) for i in comp_atoms_local))
    if comp_atoms != tuple(atoms[1:]):
        raise AlgebraError(
            f"atoms of [0,α({algebra.label(e)})] are {comp_atoms}, "
            f"expected {tuple(atoms[1:])}")
    _audit_binary_splits(comp.algebra, comp_atoms_local)
