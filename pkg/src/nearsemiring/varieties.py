"""Checkers for the varieties this package handles.

Covers Łukasiewicz near semirings (involutive near semirings whose product
satisfies the two-sided exchange identity), orthomodular near semirings,
basic algebras, and orthomodular lattices, together with exhaustive
property suites for their standard arithmetical consequences.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .core import (
    AlgebraError, CheckReport, ClauseResult, DocumentError, FiniteNearSemiring,
    PreconditionError, PropertyReport, Violation, _binary_table, _first_where,
    _unary_table, check_axioms, require,
)


# ---------------------------------------------------------------------------
# companion structures


class BasicAlgebra:
    """Finite algebra <A, ⊕, ', 0> with 1 = 0'; tables structural only."""

    __slots__ = ("oplus", "neg", "zero", "name", "labels")

    def __init__(self, oplus, neg, zero, name="B", labels=None):
        oplus = np.asarray(oplus)
        if oplus.ndim != 2 or oplus.shape[0] != oplus.shape[1] or oplus.shape[0] == 0:
            raise DocumentError(f"oplus table must be square and nonempty, got {oplus.shape}")
        n = oplus.shape[0]
        self.oplus = _binary_table(oplus, n, "oplus")
        self.neg = _unary_table(neg, n, "negation", permutation=True)
        if not 0 <= zero < n:
            raise DocumentError(f"zero must lie in [0, {n})")
        self.zero = int(zero)
        self.name = str(name)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        self.labels = tuple(str(s) for s in labels)
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise DocumentError(f"labels must be {n} distinct strings")

    @property
    def n(self) -> int:
        return self.oplus.shape[0]

    @property
    def one(self) -> int:
        return int(self.neg[self.zero])

    def label(self, x: int) -> str:
        return self.labels[x]

    def __repr__(self):
        return f"BasicAlgebra({self.name!r}, n={self.n})"

    def same_tables(self, other: "BasicAlgebra") -> bool:
        return (self.n == other.n and self.zero == other.zero
                and np.array_equal(self.oplus, other.oplus)
                and np.array_equal(self.neg, other.neg))

    def to_document(self) -> dict:
        doc = {
            "name": self.name, "size": self.n, "zero": self.zero,
            "oplus": self.oplus.tolist(), "neg": self.neg.tolist(),
        }
        if self.labels != tuple(str(i) for i in range(self.n)):
            doc["labels"] = list(self.labels)
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> "BasicAlgebra":
        for key in ("name", "size", "zero", "oplus", "neg"):
            if key not in doc:
                raise DocumentError(f"basic-algebra document lacks required field {key!r}")
        return cls(doc["oplus"], doc["neg"], doc["zero"],
                   name=doc["name"], labels=doc.get("labels"))


class OrthoLattice:
    """Finite bounded lattice candidate <L, ∨, ∧, ', 0, 1>.

    Stores the join table and the orthocomplement; the meet is derived from
    them de-Morgan-style, keeping a single source of truth.  Whether the
    tables actually form an orthomodular lattice is the job of check_oml.
    """

    __slots__ = ("join", "meet", "ortho", "zero", "one", "name", "labels")

    def __init__(self, join, ortho, zero, one, name="L", labels=None):
        join = np.asarray(join)
        if join.ndim != 2 or join.shape[0] != join.shape[1] or join.shape[0] == 0:
            raise DocumentError(f"join table must be square and nonempty, got {join.shape}")
        n = join.shape[0]
        self.join = _binary_table(join, n, "join")
        self.ortho = _unary_table(ortho, n, "orthocomplement", permutation=True)
        if not (0 <= zero < n) or not (0 <= one < n):
            raise DocumentError(f"constants must lie in [0, {n})")
        if n >= 2 and zero == one:
            raise DocumentError("zero and one must differ when the universe has >= 2 elements")
        self.zero = int(zero)
        self.one = int(one)
        meet = self.ortho[self.join[np.ix_(self.ortho, self.ortho)]]
        meet.setflags(write=False)
        self.meet = meet
        self.name = str(name)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        self.labels = tuple(str(s) for s in labels)
        if len(self.labels) != n or len(set(self.labels)) != n:
            raise DocumentError(f"labels must be {n} distinct strings")

    @property
    def n(self) -> int:
        return self.join.shape[0]

    def label(self, x: int) -> str:
        return self.labels[x]

    def __repr__(self):
        return f"OrthoLattice({self.name!r}, n={self.n})"

    def same_tables(self, other: "OrthoLattice") -> bool:
        return (self.n == other.n and self.zero == other.zero and self.one == other.one
                and np.array_equal(self.join, other.join)
                and np.array_equal(self.ortho, other.ortho))

    def to_document(self) -> dict:
        doc = {
            "name": self.name, "size": self.n, "zero": self.zero, "one": self.one,
            "join": self.join.tolist(), "ortho": self.ortho.tolist(),
        }
        if self.labels != tuple(str(i) for i in range(self.n)):
            doc["labels"] = list(self.labels)
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> "OrthoLattice":
        for key in ("name", "size", "zero", "one", "join", "ortho"):
            if key not in doc:
                raise DocumentError(f"lattice document lacks required field {key!r}")
        return cls(doc["join"], doc["ortho"], doc["zero"], doc["one"],
                   name=doc["name"], labels=doc.get("labels"))


# ---------------------------------------------------------------------------
# Łukasiewicz near semirings


def _exchange_table(algebra: FiniteNearSemiring) -> np.ndarray:
    """Table of α(x·α(y))·α(y), indexed [x, y]."""
    inv, mul = algebra.inv, algebra.mul
    t = inv[mul[:, inv]]                     # t[x, y] = α(x·α(y))
    return mul[t, np.broadcast_to(inv, t.shape)]


def check_lukasiewicz(algebra: FiniteNearSemiring) -> CheckReport:
    """Check the exchange identity α(x·α(y))·α(y) = α(y·α(x))·α(x).

    Requires a valid involutive near semiring.  The report carries a
    'semiring' tag recording whether the product is also associative and
    left-distributive, i.e. whether the algebra is a full semiring.
    """
    if algebra.inv is None:
        raise PreconditionError(f"{algebra.name} has no involution table")
    require(algebra, "involutive", "Łukasiewicz check")
    lhs = _exchange_table(algebra)
    w = _first_where(lhs != lhs.T)
    violations = ()
    if w is not None:
        x, y = w
        l = algebra.label
        violations = (Violation(
            "lukasiewicz", (x, y),
            f"α({l(x)}·α({l(y)}))·α({l(y)})={l(int(lhs[x, y]))} but "
            f"α({l(y)}·α({l(x)}))·α({l(x)})={l(int(lhs[y, x]))}"),)
    semiring = check_axioms(algebra, "semiring").passed
    return CheckReport(algebra.name, "lukasiewicz", not violations, violations,
                       tags=(("semiring", semiring),))


def require_lukasiewicz(algebra: FiniteNearSemiring, context: str = "") -> CheckReport:
    report = check_lukasiewicz(algebra)
    if not report.passed:
        v = report.violations[0]
        where = f" ({context})" if context else ""
        raise PreconditionError(
            f"{algebra.name} is not a Łukasiewicz near semiring{where}: {v.equation}")
    return report


def lukasiewicz_suite(algebra: FiniteNearSemiring) -> PropertyReport:
    """Arithmetical consequences of the exchange identity, checked exhaustively."""
    luk = require_lukasiewicz(algebra, "property suite")
    add, mul, inv, n = algebra.add, algebra.mul, algebra.inv, algebra.n
    zero, one, l = algebra.zero, algebra.one, algebra.label
    clauses = []

    def scan(clause, arity, pred, render):
        for args in iproduct(range(n), repeat=arity):
            if not pred(*args):
                clauses.append(ClauseResult(clause, False, args, render(*args)))
                return
        clauses.append(ClauseResult(clause, True))

    scan("self-annihilation", 1,
         lambda x: mul[x, inv[x]] == zero and mul[inv[x], x] == zero,
         lambda x: f"{l(x)}·α({l(x)})={l(int(mul[x, inv[x]]))}, "
                   f"α({l(x)})·{l(x)}={l(int(mul[inv[x], x]))}")
    scan("integrality", 1,
         lambda x: add[x, one] == one,
         lambda x: f"{l(x)}+{l(one)}={l(int(add[x, one]))}")
    scan("annihilates-sum-complement", 2,
         lambda x, y: mul[x, inv[add[x, y]]] == zero,
         lambda x, y: f"{l(x)}·α({l(x)}+{l(y)})={l(int(mul[x, inv[add[x, y]]]))}")
    scan("sum-cancellation", 2,
         lambda x, y: mul[add[x, y], inv[x]] == mul[y, inv[x]],
         lambda x, y: f"({l(x)}+{l(y)})·α({l(x)})≠{l(y)}·α({l(x)})")
    scan("sum-recovery", 2,
         lambda x, y: add[x, y] == inv[mul[inv[mul[x, inv[y]]], inv[y]]],
         lambda x, y: f"{l(x)}+{l(y)}≠α(α({l(x)}·α({l(y)}))·α({l(y)}))")
    scan("order-via-product", 2,
         lambda x, y: (add[x, y] == y) == (mul[x, inv[y]] == zero),
         lambda x, y: f"({l(x)}≤{l(y)}) is {add[x, y] == y} but "
                      f"{l(x)}·α({l(y)})={l(int(mul[x, inv[y]]))}")

    associative = check_axioms(algebra, "associative-mul").passed
    if not associative:
        clauses.append(ClauseResult("assoc-implies-comm", True,
                                    detail="vacuous: product not associative"))
        clauses.append(ClauseResult("assoc-implies-left-distributivity", True,
                                    detail="vacuous: product not associative"))
    else:
        scan("assoc-implies-comm", 2,
             lambda x, y: mul[x, y] == mul[y, x],
             lambda x, y: f"{l(x)}·{l(y)}≠{l(y)}·{l(x)}")
        scan("assoc-implies-left-distributivity", 3,
             lambda x, y, z: mul[x, add[y, z]] == add[mul[x, y], mul[x, z]],
             lambda x, y, z: f"{l(x)}·({l(y)}+{l(z)})≠({l(x)}·{l(y)})+({l(x)}·{l(z)})")

    if luk.tag("semiring"):
        scan("mv-sum-recovery", 2,
             lambda x, y: add[x, y] == inv[mul[inv[x], inv[mul[inv[x], y]]]],
             lambda x, y: f"{l(x)}+{l(y)}≠α(α({l(x)})·α(α({l(x)})·{l(y)}))")
    else:
        clauses.append(ClauseResult("mv-sum-recovery", True,
                                    detail="skipped: not a semiring"))
    return PropertyReport(algebra.name, "lukasiewicz", tuple(clauses))


@dataclass(frozen=True)
class SectionalInvolution:
    """Antitone involution x -> α(x·α(a)) on the upper interval [a, 1]."""
    subject: str
    base: int
    carrier: tuple
    images: tuple

    def as_mapping(self) -> dict:
        return dict(zip(self.carrier, self.images))

    def to_dict(self) -> dict:
        return {"subject": self.subject, "base": self.base,
                "carrier": list(self.carrier), "images": list(self.images)}


def sectional_involution(algebra: FiniteNearSemiring, a: int) -> SectionalInvolution:
    """Build and verify the involution x -> α(x·α(a)) on [a, 1]."""
    if not 0 <= a < algebra.n:
        raise AlgebraError(f"element {a} out of range [0, {algebra.n})")
    require_lukasiewicz(algebra, "sectional involution")
    add, mul, inv, l = algebra.add, algebra.mul, algebra.inv, algebra.label
    carrier = tuple(x for x in range(algebra.n) if add[a, x] == x)
    images = tuple(int(inv[mul[x, inv[a]]]) for x in carrier)
    h = dict(zip(carrier, images))
    for x in carrier:
        if h[x] not in h:
            raise AlgebraError(
                f"sectional map leaves the interval: {l(x)}^{l(a)}={l(h[x])} ∉ [{l(a)},{l(algebra.one)}]")
        if h[h[x]] != x:
            raise AlgebraError(f"sectional map is not an involution at {l(x)}")
    for x in carrier:
        for y in carrier:
            if add[x, y] == y and add[h[y], h[x]] != h[x]:
                raise AlgebraError(f"sectional map is not antitone at ({l(x)},{l(y)})")
    return SectionalInvolution(algebra.name, a, carrier, images)


def check_orthomodular_ns(algebra: FiniteNearSemiring) -> CheckReport:
    """Check x = x·(x+y) plus its standard consequences on a Łukasiewicz near semiring.

    The interval-multiplication clause checks x·y = x for x ≤ y, the form the
    consequence calculus actually yields; the alternative reading x·y = y is
    evaluated separately and reported as a tag, never as a violation.
    """
    require_lukasiewicz(algebra, "orthomodular check")
    add, mul, inv, n = algebra.add, algebra.mul, algebra.inv, algebra.n
    zero, one, l = algebra.zero, algebra.one, algebra.label
    violations = []

    def scan(clause, arity, pred, render):
        for args in iproduct(range(n), repeat=arity):
            if not pred(*args):
                violations.append(Violation(clause, args, render(*args)))
                return

    scan("mul-absorbs-sum", 2,
         lambda x, y: mul[x, add[x, y]] == x,
         lambda x, y: f"{l(x)}·({l(x)}+{l(y)})={l(int(mul[x, add[x, y]]))}")
    scan("mul-idempotence", 1,
         lambda x: mul[x, x] == x,
         lambda x: f"{l(x)}·{l(x)}={l(int(mul[x, x]))}")
    scan("sandwich-recovery", 2,
         lambda x, y: mul[x, inv[mul[inv[mul[y, inv[x]]], inv[x]]]] == x,
         lambda x, y: f"{l(x)}·α(α({l(y)}·α({l(x)}))·α({l(x)}))≠{l(x)}")
    scan("complement-join", 1,
         lambda x: add[x, inv[x]] == one,
         lambda x: f"{l(x)}+α({l(x)})={l(int(add[x, inv[x]]))}")
    scan("interval-multiplication", 2,
         lambda x, y: add[x, y] != y or mul[x, y] == x,
         lambda x, y: f"{l(x)}≤{l(y)} but {l(x)}·{l(y)}={l(int(mul[x, y]))}≠{l(x)}")

    prose_variant = all(add[x, y] != y or mul[x, y] == y
                        for x in range(n) for y in range(n))
    violations.sort(key=lambda v: (v.clause, v.witness))
    return CheckReport(
        algebra.name, "orthomodular", not violations, tuple(violations),
        tags=(("interval-multiplication-prose-variant", prose_variant),),
        notes=("interval-multiplication is normative as x·y=x for x≤y; "
               "the x·y=y reading is reported via the prose-variant tag only",),
    )


def require_orthomodular(algebra: FiniteNearSemiring, context: str = "") -> CheckReport:
    report = check_orthomodular_ns(algebra)
    if not report.passed:
        v = report.violations[0]
        where = f" ({context})" if context else ""
        raise PreconditionError(
            f"{algebra.name} is not an orthomodular near semiring{where}: {v.equation}")
    return report


# ---------------------------------------------------------------------------
# basic algebras


def check_basic_algebra(basic: BasicAlgebra) -> CheckReport:
    """Check the four basic-algebra axioms and the induced bounded-lattice order.

    Sets an 'mv' tag when ⊕ is associative.  The induced order x ≤ y iff
    x'⊕y = 1 is rebuilt from the join term (x'⊕y)'⊕y and the two relations
    are compared, rather than trusting either construction.
    """
    op, neg, n = basic.oplus, basic.neg, basic.n
    zero, one, l = basic.zero, basic.one, basic.label
    violations = []

    def scan(clause, arity, pred, render):
        for args in iproduct(range(n), repeat=arity):
            if not pred(*args):
                violations.append(Violation(clause, args, render(*args)))
                return

    scan("BA1", 1, lambda x: op[x, zero] == x,
         lambda x: f"{l(x)}⊕{l(zero)}={l(int(op[x, zero]))}")
    scan("BA2", 1, lambda x: neg[neg[x]] == x,
         lambda x: f"{l(x)}''={l(int(neg[neg[x]]))}")
    scan("BA3", 2,
         lambda x, y: op[neg[op[neg[x], y]], y] == op[neg[op[neg[y], x]], x],
         lambda x, y: f"({l(x)}'⊕{l(y)})'⊕{l(y)}≠({l(y)}'⊕{l(x)})'⊕{l(x)}")

    def ba4(x, y, z):
        t = op[neg[op[neg[op[x, y]], y]], z]
        return op[neg[t], op[x, z]] == one
    scan("BA4", 3, ba4,
         lambda x, y, z: f"((({l(x)}⊕{l(y)})'⊕{l(y)})'⊕{l(z)})'⊕({l(x)}⊕{l(z)})≠{l(one)}")

    # induced order: x <= y iff x'⊕y = 1; join term (x'⊕y)'⊕y
    rel = op[neg, :] == one                      # rel[x, y] = (x'⊕y == 1)
    jt = op[neg[op[neg, :]], np.broadcast_to(np.arange(n), (n, n))]
    refl = all(rel[x, x] for x in range(n))
    antisym = not np.any(rel & rel.T & ~np.eye(n, dtype=bool))
    trans = not np.any((rel @ rel) & ~rel)
    if not refl:
        x = next(x for x in range(n) if not rel[x, x])
        violations.append(Violation("order-partial-order", (x, x),
                                    f"relation x'⊕y=1 is not reflexive at {l(x)}"))
    elif not antisym:
        w = _first_where(rel & rel.T & ~np.eye(n, dtype=bool))
        violations.append(Violation("order-partial-order", w,
                                    "relation x'⊕y=1 is not antisymmetric"))
    elif not trans:
        w = _first_where((rel @ rel) & ~rel)
        violations.append(Violation("order-partial-order", w,
                                    "relation x'⊕y=1 is not transitive"))
    if not (rel[zero].all() and rel[:, one].all()):
        x = next(x for x in range(n) if not rel[zero, x] or not rel[x, one])
        violations.append(Violation("order-bounds", (x,),
                                    f"{l(zero)},{l(one)} are not bottom/top at {l(x)}"))
    w = _first_where((jt == np.arange(n)[None, :]) != rel)
    if w is not None:
        x, y = w
        violations.append(Violation(
            "order-join-consistent", w,
            f"join term and relation disagree at ({l(x)},{l(y)})"))
    bad = None
    for x, y in iproduct(range(n), repeat=2):
        j = int(jt[x, y])
        ub = [z for z in range(n) if rel[x, z] and rel[y, z]]
        if not (rel[x, j] and rel[y, j] and all(rel[j, z] for z in ub)):
            bad = (x, y)
            break
    if bad is not None:
        violations.append(Violation("order-join-lub", bad,
                                    f"({l(bad[0])}'⊕{l(bad[1])})'⊕{l(bad[1])} is not the lub"))
    bad = None
    for x, y in iproduct(range(n), repeat=2):
        m = int(neg[jt[neg[x], neg[y]]])
        lb = [z for z in range(n) if rel[z, x] and rel[z, y]]
        if not (rel[m, x] and rel[m, y] and all(rel[z, m] for z in lb)):
            bad = (x, y)
            break
    if bad is not None:
        violations.append(Violation("order-meet-glb", bad,
                                    "de Morgan meet is not the glb"))

    mv = bool(np.array_equal(op[op, :], op[:, op]))
    violations.sort(key=lambda v: (v.clause, v.witness))
    return CheckReport(basic.name, "basic-algebra", not violations, tuple(violations),
                       tags=(("mv", mv),))


def require_basic(basic: BasicAlgebra, context: str = "") -> CheckReport:
    report = check_basic_algebra(basic)
    if not report.passed:
        v = report.violations[0]
        where = f" ({context})" if context else ""
        raise PreconditionError(f"{basic.name} is not a basic algebra{where}: {v.equation}")
    return report


# ---------------------------------------------------------------------------
# orthomodular lattices


def check_oml(lattice: OrthoLattice) -> CheckReport:
    """Check bounded-lattice axioms, orthocomplementation, and the orthomodular law."""
    jn, mt, oc, n = lattice.join, lattice.meet, lattice.ortho, lattice.n
    zero, one, l = lattice.zero, lattice.one, lattice.label
    violations = []

    def scan(clause, arity, pred, render):
        for args in iproduct(range(n), repeat=arity):
            if not pred(*args):
                violations.append(Violation(clause, args, render(*args)))
                return

    scan("join-idempotence", 1, lambda x: jn[x, x] == x,
         lambda x: f"{l(x)}∨{l(x)}={l(int(jn[x, x]))}")
    scan("join-commutativity", 2, lambda x, y: jn[x, y] == jn[y, x],
         lambda x, y: f"{l(x)}∨{l(y)}≠{l(y)}∨{l(x)}")
    scan("join-associativity", 3, lambda x, y, z: jn[jn[x, y], z] == jn[x, jn[y, z]],
         lambda x, y, z: f"({l(x)}∨{l(y)})∨{l(z)}≠{l(x)}∨({l(y)}∨{l(z)})")
    scan("meet-idempotence", 1, lambda x: mt[x, x] == x,
         lambda x: f"{l(x)}∧{l(x)}={l(int(mt[x, x]))}")
    scan("meet-commutativity", 2, lambda x, y: mt[x, y] == mt[y, x],
         lambda x, y: f"{l(x)}∧{l(y)}≠{l(y)}∧{l(x)}")
    scan("meet-associativity", 3, lambda x, y, z: mt[mt[x, y], z] == mt[x, mt[y, z]],
         lambda x, y, z: f"({l(x)}∧{l(y)})∧{l(z)}≠{l(x)}∧({l(y)}∧{l(z)})")
    scan("absorption", 2,
         lambda x, y: jn[x, mt[x, y]] == x and mt[x, jn[x, y]] == x,
         lambda x, y: f"absorption fails at ({l(x)},{l(y)})")
    scan("bounds", 1,
         lambda x: jn[x, zero] == x and jn[x, one] == one
         and mt[x, one] == x and mt[x, zero] == zero,
         lambda x: f"{l(zero)}/{l(one)} are not bottom/top at {l(x)}")
    scan("ortho-period-two", 1, lambda x: oc[oc[x]] == x,
         lambda x: f"{l(x)}''={l(int(oc[oc[x]]))}")
    scan("ortho-antitone", 2,
         lambda x, y: jn[x, y] != y or jn[oc[y], oc[x]] == oc[x],
         lambda x, y: f"{l(x)}≤{l(y)} but {l(y)}'≰{l(x)}'")
    scan("complement-laws", 1,
         lambda x: mt[x, oc[x]] == zero and jn[x, oc[x]] == one,
         lambda x: f"{l(x)}∧{l(x)}'={l(int(mt[x, oc[x]]))}, "
                   f"{l(x)}∨{l(x)}'={l(int(jn[x, oc[x]]))}")
    scan("orthomodular-identity", 2,
         lambda x, y: mt[jn[x, y], jn[x, oc[jn[x, y]]]] == x,
         lambda x, y: f"({l(x)}∨{l(y)})∧({l(x)}∨({l(x)}∨{l(y)})')="
                      f"{l(int(mt[jn[x, y], jn[x, oc[jn[x, y]]]]))}")
    scan("orthomodular-dual", 2,
         lambda x, y: jn[mt[x, y], mt[y, oc[mt[x, y]]]] == y,
         lambda x, y: f"({l(x)}∧{l(y)})∨({l(y)}∧({l(x)}∧{l(y)})')≠{l(y)}")

    violations.sort(key=lambda v: (v.clause, v.witness))
    return CheckReport(lattice.name, "orthomodular-lattice", not violations, tuple(violations))


def require_oml(lattice: OrthoLattice, context: str = "") -> CheckReport:
    report = check_oml(lattice)
    if not report.passed:
        v = report.violations[0]
        where = f" ({context})" if context else ""
        raise PreconditionError(
            f"{lattice.name} is not an orthomodular lattice{where}: {v.equation}")
    return report


def oml_commutes_suite(lattice: OrthoLattice) -> PropertyReport:
    """Commutation facts: aCb iff a = (a∧b)∨(a∧b').

    Checks symmetry of C, that comparability forces commutation, stability
    of C under complementation, and distributivity restricted to triples
    where two of the elements commute with the third.
    """
    require_oml(lattice, "commutation suite")
    jn, mt, oc, n, l = lattice.join, lattice.meet, lattice.ortho, lattice.n, lattice.label

    def commutes(a, b):
        return jn[mt[a, b], mt[a, oc[b]]] == a

    clauses = []
    res = None
    for a, b in iproduct(range(n), repeat=2):
        if commutes(a, b) and not commutes(b, a):
            res = ClauseResult("commutation-symmetric", False, (a, b),
                               f"{l(a)}C{l(b)} but not {l(b)}C{l(a)}")
            break
    clauses.append(res or ClauseResult("commutation-symmetric", True))

    res = None
    for a, b in iproduct(range(n), repeat=2):
        if jn[a, b] == b and not commutes(a, b):
            res = ClauseResult("comparable-commute", False, (a, b),
                               f"{l(a)}≤{l(b)} but not {l(a)}C{l(b)}")
            break
    clauses.append(res or ClauseResult("comparable-commute", True))

    res = None
    for a, b in iproduct(range(n), repeat=2):
        if commutes(a, b) and not commutes(a, oc[b]):
            res = ClauseResult("commute-with-complement", False, (a, b),
                               f"{l(a)}C{l(b)} but not {l(a)}C{l(b)}'")
            break
    clauses.append(res or ClauseResult("commute-with-complement", True))

    res = None
    hits = 0
    for a, b, c in iproduct(range(n), repeat=3):
        if commutes(a, c) and commutes(b, c):
            hits += 1
            ok = (mt[jn[a, b], c] == jn[mt[a, c], mt[b, c]]
                  and jn[mt[a, b], c] == mt[jn[a, c], jn[b, c]])
            if not ok and res is None:
                res = ClauseResult("restricted-distributivity", False, (a, b, c),
                                   f"distributivity fails at ({l(a)},{l(b)},{l(c)})")
    clauses.append(res or ClauseResult("restricted-distributivity", True,
                                       detail=f"checked {hits} commuting triples"))
    return PropertyReport(lattice.name, "oml-commutation", tuple(clauses))
