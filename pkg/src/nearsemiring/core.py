"""Finite near semirings: tables, axiom profiles, induced orders, duality.

A near semiring is a finite algebra ``<R, +, ., 0, 1>`` held as explicit
operation tables over ``range(n)``, optionally carrying a unary involution
table.  Construction enforces structural validity only (shapes, entry
ranges, the involution being a permutation).  Axiom conformance is never a
construction invariant: broken candidate tables must be loadable so they
can be audited, with every failure reported as an explicit witness.

All check results are deterministic: each failing clause is reported once,
with its lexicographically smallest witness tuple, and violation lists are
sorted by clause id and witness.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product as iproduct

import numpy as np


class AlgebraError(Exception):
    """Base error for this package."""


class DocumentError(AlgebraError):
    """Malformed algebra document or structurally invalid tables."""


class PreconditionError(AlgebraError):
    """An operation was invoked on an algebra outside its domain of validity."""


# ---------------------------------------------------------------------------
# data model


def _as_int_array(obj, what: str) -> np.ndarray:
    arr = np.asarray(obj)
    if arr.dtype.kind not in "iu":
        raise DocumentError(f"{what} table entries must be integers")
    return arr.astype(int)


def _binary_table(obj, n: int, what: str) -> np.ndarray:
    arr = _as_int_array(obj, what)
    if arr.shape != (n, n):
        raise DocumentError(f"{what} table must be {n}x{n}, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise DocumentError(
            f"{what} entry at {tuple(int(v) for v in bad)} out of range [0, {n})"
        )
    arr.setflags(write=False)
    return arr


def _unary_table(obj, n: int, what: str, permutation: bool = False) -> np.ndarray:
    arr = _as_int_array(obj, what)
    if arr.shape != (n,):
        raise DocumentError(f"{what} table must have length {n}, got shape {arr.shape}")
    if arr.size and (arr.min() < 0 or arr.max() >= n):
        raise DocumentError(f"{what} entry out of range [0, {n})")
    if permutation and sorted(arr.tolist()) != list(range(n)):
        raise DocumentError(f"{what} table is not a permutation of 0..{n - 1}")
    arr.setflags(write=False)
    return arr


class FiniteNearSemiring:
    """A finite algebra <R, +, ., 0, 1> with optional involution table.

    Immutable after construction; tables are read-only numpy arrays indexed
    as ``add[x, y] == x + y`` (row = left argument).
    """

    __slots__ = ("add", "mul", "inv", "zero", "one", "name", "labels")

    def __init__(self, add, mul, zero, one, inv=None, name="R", labels=None):
        add = np.asarray(add)
        if add.ndim != 2 or add.shape[0] != add.shape[1]:
            raise DocumentError(f"sum table must be square, got shape {add.shape}")
        n = add.shape[0]
        if n == 0:
            raise DocumentError("empty universe: size must be at least 1")
        self.add = _binary_table(add, n, "sum")
        self.mul = _binary_table(mul, n, "product")
        self.inv = None if inv is None else _unary_table(inv, n, "involution", permutation=True)
        if not (0 <= zero < n) or not (0 <= one < n):
            raise DocumentError(f"constants must lie in [0, {n}): zero={zero}, one={one}")
        if n >= 2 and zero == one:
            raise DocumentError("zero and one must differ when the universe has >= 2 elements")
        self.zero = int(zero)
        self.one = int(one)
        self.name = str(name)
        if labels is None:
            labels = tuple(str(i) for i in range(n))
        labels = tuple(str(s) for s in labels)
        if len(labels) != n or len(set(labels)) != n:
            raise DocumentError(f"labels must be {n} distinct strings")
        self.labels = labels

    @property
    def n(self) -> int:
        return self.add.shape[0]

    @property
    def has_inv(self) -> bool:
        return self.inv is not None

    def label(self, x: int) -> str:
        return self.labels[x]

    def __repr__(self):
        return f"FiniteNearSemiring({self.name!r}, n={self.n}, inv={self.has_inv})"

    def same_tables(self, other: "FiniteNearSemiring") -> bool:
        """Pointwise equality of every table and both constants."""
        if self.n != other.n or self.zero != other.zero or self.one != other.one:
            return False
        if self.has_inv != other.has_inv:
            return False
        if not np.array_equal(self.add, other.add) or not np.array_equal(self.mul, other.mul):
            return False
        return self.inv is None or np.array_equal(self.inv, other.inv)

    def relabel(self, perm, name=None) -> "FiniteNearSemiring":
        """Apply a carrier permutation: element x becomes perm[x]."""
        p = _unary_table(perm, self.n, "permutation", permutation=True)
        q = np.empty(self.n, dtype=int)
        q[p] = np.arange(self.n)
        add = p[self.add[np.ix_(q, q)]]
        mul = p[self.mul[np.ix_(q, q)]]
        inv = None if self.inv is None else p[self.inv[q]]
        labels = tuple(self.labels[q[i]] for i in range(self.n))
        return FiniteNearSemiring(
            add, mul, int(p[self.zero]), int(p[self.one]), inv=inv,
            name=self.name if name is None else name, labels=labels,
        )

    def to_document(self) -> dict:
        doc = {
            "name": self.name,
            "size": self.n,
            "zero": self.zero,
            "one": self.one,
            "add": self.add.tolist(),
            "mul": self.mul.tolist(),
        }
        if self.inv is not None:
            doc["inv"] = self.inv.tolist()
        if self.labels != tuple(str(i) for i in range(self.n)):
            doc["labels"] = list(self.labels)
        return doc

    @classmethod
    def from_document(cls, doc: dict) -> "FiniteNearSemiring":
        if not isinstance(doc, dict):
            raise DocumentError("algebra document must be a JSON object")
        for key in ("name", "size", "zero", "one", "add", "mul"):
            if key not in doc:
                raise DocumentError(f"algebra document lacks required field {key!r}")
        n = doc["size"]
        if not isinstance(n, int) or n < 1:
            raise DocumentError(f"size must be a positive integer, got {n!r}")
        return cls(
            doc["add"], doc["mul"], doc["zero"], doc["one"],
            inv=doc.get("inv"), name=doc["name"], labels=doc.get("labels"),
        )


def load_algebra(source) -> FiniteNearSemiring:
    """Load an algebra from a JSON document (text or already-parsed dict)."""
    if isinstance(source, (str, bytes)):
        try:
            source = json.loads(source)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not valid JSON: {exc}") from exc
    return FiniteNearSemiring.from_document(source)


def dump_algebra(algebra: FiniteNearSemiring) -> str:
    """Serialize an algebra to its JSON document form (deterministic)."""
    return json.dumps(algebra.to_document(), indent=1)


def product_algebra(a: FiniteNearSemiring, b: FiniteNearSemiring, name=None) -> FiniteNearSemiring:
    """Direct product with componentwise tables; pair (x, y) -> x * b.n + y."""
    if a.has_inv != b.has_inv:
        raise AlgebraError("product factors must both have, or both lack, an involution")
    na, nb = a.n, b.n
    ia, ib = np.divmod(np.arange(na * nb), nb)
    add = a.add[np.ix_(ia, ia)] * nb + b.add[np.ix_(ib, ib)]
    mul = a.mul[np.ix_(ia, ia)] * nb + b.mul[np.ix_(ib, ib)]
    inv = None if a.inv is None else a.inv[ia] * nb + b.inv[ib]
    labels = tuple(f"({a.label(x)},{b.label(y)})" for x, y in zip(ia, ib))
    return FiniteNearSemiring(
        add, mul, a.zero * nb + b.zero, a.one * nb + b.one, inv=inv,
        name=name if name is not None else f"{a.name}x{b.name}", labels=labels,
    )


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple
    equation: str

    def to_dict(self) -> dict:
        return {"clause": self.clause, "witness": list(self.witness), "equation": self.equation}


@dataclass(frozen=True)
class CheckReport:
    subject: str
    profile: str
    passed: bool
    violations: tuple
    tags: tuple = ()
    notes: tuple = ()

    def tag(self, key: str):
        for k, v in self.tags:
            if k == key:
                return v
        return None

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "profile": self.profile,
            "passed": self.passed,
            "violations": [v.to_dict() for v in self.violations],
            "tags": {k: v for k, v in self.tags},
            "notes": list(self.notes),
        }

    def render(self) -> str:
        head = f"check {self.subject}: profile={self.profile} " + ("PASS" if self.passed else "FAIL")
        lines = [head]
        for v in self.violations:
            lines.append(f"  {v.clause}: {v.equation}  witness={v.witness}")
        for k, val in self.tags:
            lines.append(f"  tag {k}: {val}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ClauseResult:
    clause: str
    passed: bool
    counterexample: tuple = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "clause": self.clause,
            "passed": self.passed,
            "counterexample": None if self.counterexample is None else list(self.counterexample),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class PropertyReport:
    subject: str
    suite: str
    clauses: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    def clause(self, name: str) -> ClauseResult:
        for c in self.clauses:
            if c.clause == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "suite": self.suite,
            "passed": self.passed,
            "clauses": [c.to_dict() for c in self.clauses],
        }

    def render(self) -> str:
        lines = [f"suite {self.suite} on {self.subject}: " + ("PASS" if self.passed else "FAIL")]
        for c in self.clauses:
            status = "ok" if c.passed else "FAIL"
            extra = f"  {c.detail}" if c.detail else ""
            lines.append(f"  {c.clause}: {status}{extra}")
        return "\n".join(lines)


# identical shape; kept as a named alias for congruence-term reports
WitnessTermReport = PropertyReport


# ---------------------------------------------------------------------------
# axiom clauses

def _first_where(mask: np.ndarray):
    idx = np.argwhere(mask)
    if idx.size == 0:
        return None
    return tuple(int(v) for v in idx[0])


def _clause_add_assoc(a: FiniteNearSemiring):
    lhs = a.add[a.add, :]
    rhs = a.add[:, a.add]
    w = _first_where(lhs != rhs)
    if w is None:
        return None
    x, y, z = w
    l = a.label
    return Violation("add-associativity", w,
                     f"({l(x)}+{l(y)})+{l(z)}={l(int(lhs[w]))} but "
                     f"{l(x)}+({l(y)}+{l(z)})={l(int(rhs[w]))}")


def _clause_add_comm(a: FiniteNearSemiring):
    w = _first_where(a.add != a.add.T)
    if w is None:
        return None
    x, y = w
    l = a.label
    return Violation("add-commutativity", w,
                     f"{l(x)}+{l(y)}={l(int(a.add[x, y]))} but {l(y)}+{l(x)}={l(int(a.add[y, x]))}")


def _clause_add_neutral(a: FiniteNearSemiring):
    l, z = a.label, a.zero
    for x in range(a.n):
        if a.add[z, x] != x:
            return Violation("add-neutral", (x,), f"{l(z)}+{l(x)}={l(int(a.add[z, x]))}")
        if a.add[x, z] != x:
            return Violation("add-neutral", (x,), f"{l(x)}+{l(z)}={l(int(a.add[x, z]))}")
    return None


def _clause_add_idem(a: FiniteNearSemiring):
    l = a.label
    for x in range(a.n):
        if a.add[x, x] != x:
            return Violation("add-idempotence", (x,), f"{l(x)}+{l(x)}={l(int(a.add[x, x]))}")
    return None


def _clause_mul_unit(a: FiniteNearSemiring):
    l, e = a.label, a.one
    for x in range(a.n):
        if a.mul[x, e] != x:
            return Violation("mul-unit", (x,), f"{l(x)}·{l(e)}={l(int(a.mul[x, e]))}")
        if a.mul[e, x] != x:
            return Violation("mul-unit", (x,), f"{l(e)}·{l(x)}={l(int(a.mul[e, x]))}")
    return None


def _clause_annihilation(a: FiniteNearSemiring):
    l, z = a.label, a.zero
    for x in range(a.n):
        if a.mul[x, z] != z:
            return Violation("annihilation", (x,), f"{l(x)}·{l(z)}={l(int(a.mul[x, z]))}")
        if a.mul[z, x] != z:
            return Violation("annihilation", (x,), f"{l(z)}·{l(x)}={l(int(a.mul[z, x]))}")
    return None


def _clause_right_distr(a: FiniteNearSemiring):
    lhs = a.mul[a.add, :]
    rhs = a.add[a.mul[:, None, :], a.mul[None, :, :]]
    w = _first_where(lhs != rhs)
    if w is None:
        return None
    x, y, z = w
    l = a.label
    return Violation("right-distributivity", w,
                     f"({l(x)}+{l(y)})·{l(z)}={l(int(lhs[w]))} but "
                     f"({l(x)}·{l(z)})+({l(y)}·{l(z)})={l(int(rhs[w]))}")


def _clause_left_distr(a: FiniteNearSemiring):
    lhs = a.mul[:, a.add]
    rhs = a.add[a.mul[:, :, None], a.mul[:, None, :]]
    w = _first_where(lhs != rhs)
    if w is None:
        return None
    x, y, z = w
    l = a.label
    return Violation("left-distributivity", w,
                     f"{l(x)}·({l(y)}+{l(z)})={l(int(lhs[w]))} but "
                     f"({l(x)}·{l(y)})+({l(x)}·{l(z)})={l(int(rhs[w]))}")


def _clause_mul_assoc(a: FiniteNearSemiring):
    lhs = a.mul[a.mul, :]
    rhs = a.mul[:, a.mul]
    w = _first_where(lhs != rhs)
    if w is None:
        return None
    x, y, z = w
    l = a.label
    return Violation("mul-associativity", w,
                     f"({l(x)}·{l(y)})·{l(z)}={l(int(lhs[w]))} but "
                     f"{l(x)}·({l(y)}·{l(z)})={l(int(rhs[w]))}")


def _clause_mul_comm(a: FiniteNearSemiring):
    w = _first_where(a.mul != a.mul.T)
    if w is None:
        return None
    x, y = w
    l = a.label
    return Violation("mul-commutativity", w,
                     f"{l(x)}·{l(y)}={l(int(a.mul[x, y]))} but {l(y)}·{l(x)}={l(int(a.mul[y, x]))}")


def _clause_integrality(a: FiniteNearSemiring):
    l, e = a.label, a.one
    for x in range(a.n):
        if a.add[x, e] != e:
            return Violation("integrality", (x,), f"{l(x)}+{l(e)}={l(int(a.add[x, e]))}")
    return None


def _clause_inv_period_two(a: FiniteNearSemiring):
    l = a.label
    for x in range(a.n):
        if a.inv[a.inv[x]] != x:
            return Violation("involution-period-two", (x,),
                             f"α(α({l(x)}))={l(int(a.inv[a.inv[x]]))}")
    return None


def _clause_inv_antitone(a: FiniteNearSemiring):
    # x <= y (sum relation) must force α(y) <= α(x)
    l, inv = a.label, a.inv
    for x in range(a.n):
        for y in range(a.n):
            if a.add[x, y] == y and a.add[inv[y], inv[x]] != inv[x]:
                return Violation("involution-antitone", (x, y),
                                 f"{l(x)}≤{l(y)} but α({l(y)})≰α({l(x)})")
    return None


_CLAUSES = {
    "add-associativity": _clause_add_assoc,
    "add-commutativity": _clause_add_comm,
    "add-neutral": _clause_add_neutral,
    "add-idempotence": _clause_add_idem,
    "mul-unit": _clause_mul_unit,
    "annihilation": _clause_annihilation,
    "right-distributivity": _clause_right_distr,
    "left-distributivity": _clause_left_distr,
    "mul-associativity": _clause_mul_assoc,
    "mul-commutativity": _clause_mul_comm,
    "integrality": _clause_integrality,
    "involution-period-two": _clause_inv_period_two,
    "involution-antitone": _clause_inv_antitone,
}

_NEAR_SEMIRING = (
    "add-associativity", "add-commutativity", "add-neutral",
    "mul-unit", "right-distributivity", "annihilation",
)

PROFILES = {
    "near-semiring": _NEAR_SEMIRING,
    "idempotent-add": ("add-idempotence",),
    "commutative-mul": ("mul-commutativity",),
    "associative-mul": ("mul-associativity",),
    "integral": ("integrality",),
    "semiring": _NEAR_SEMIRING + ("mul-associativity", "left-distributivity"),
    "involutive": _NEAR_SEMIRING + (
        "add-idempotence", "involution-period-two", "involution-antitone"),
    "involutive-integral": _NEAR_SEMIRING + (
        "add-idempotence", "involution-period-two", "involution-antitone", "integrality"),
}


def check_axioms(algebra: FiniteNearSemiring, profile: str) -> CheckReport:
    """Exhaustively check every clause of an axiom profile.

    Each failing clause contributes one violation, carrying the
    lexicographically smallest witness; the list is sorted by clause id
    and witness, so reports are reproducible.
    """
    if profile not in PROFILES:
        raise AlgebraError(f"unknown profile {profile!r}; known: {', '.join(sorted(PROFILES))}")
    clauses = PROFILES[profile]
    if any(c.startswith("involution") for c in clauses) and algebra.inv is None:
        raise PreconditionError(
            f"profile {profile!r} requires an involution table, but {algebra.name} has none")
    violations = []
    for cid in clauses:
        v = _CLAUSES[cid](algebra)
        if v is not None:
            violations.append(v)
    violations.sort(key=lambda v: (v.clause, v.witness))
    return CheckReport(algebra.name, profile, not violations, tuple(violations))


def require(algebra: FiniteNearSemiring, profile: str, context: str = "") -> None:
    """Raise PreconditionError unless the algebra passes the given profile."""
    report = check_axioms(algebra, profile)
    if not report.passed:
        v = report.violations[0]
        where = f" ({context})" if context else ""
        raise PreconditionError(
            f"{algebra.name} fails profile {profile!r}{where}: {v.clause}: {v.equation}")


# ---------------------------------------------------------------------------
# induced orders


@dataclass(frozen=True, eq=False)
class PartialOrderReport:
    subject: str
    which: str
    leq: np.ndarray = field(repr=False)
    is_partial_order: bool
    is_join_semilattice: bool
    is_meet_semilattice: bool
    bottom: int
    top: int

    def covers(self) -> tuple:
        """Hasse edges (x, y): y covers x."""
        n = self.leq.shape[0]
        lt = self.leq & ~np.eye(n, dtype=bool)
        strict = lt & ~(lt @ lt)
        return tuple((int(x), int(y)) for x, y in np.argwhere(strict))

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "which": self.which,
            "leq": self.leq.astype(int).tolist(),
            "is_partial_order": self.is_partial_order,
            "is_join_semilattice": self.is_join_semilattice,
            "is_meet_semilattice": self.is_meet_semilattice,
            "bottom": self.bottom,
            "top": self.top,
        }


def induced_order(algebra: FiniteNearSemiring, which: str = "sum") -> PartialOrderReport:
    """Order induced by sum (x<=y iff x+y=y) or by product (x<=y iff x·y=x).

    Only defined when the chosen operation is idempotent and commutative;
    otherwise raises, naming the failing witness.
    """
    if which == "sum":
        table, rel = algebra.add, "sum"
        sym = "+"
    elif which == "mul":
        table, rel = algebra.mul, "product"
        sym = "·"
    else:
        raise AlgebraError(f"which must be 'sum' or 'mul', got {which!r}")
    l = algebra.label
    for x in range(algebra.n):
        if table[x, x] != x:
            raise PreconditionError(
                f"{rel} order undefined for {algebra.name}: {rel} is not idempotent "
                f"({l(x)}{sym}{l(x)}={l(int(table[x, x]))})")
    w = _first_where(table != table.T)
    if w is not None:
        x, y = w
        raise PreconditionError(
            f"{rel} order undefined for {algebra.name}: {rel} is not commutative "
            f"({l(x)}{sym}{l(y)}={l(int(table[x, y]))} but {l(y)}{sym}{l(x)}={l(int(table[y, x]))})")
    n = algebra.n
    if which == "sum":
        leq = table == np.arange(n)[None, :]
    else:
        leq = table == np.arange(n)[:, None]
    antisym = not np.any(leq & leq.T & ~np.eye(n, dtype=bool))
    transitive = not np.any((leq @ leq) & ~leq)
    is_po = bool(antisym and transitive)
    join_sl = meet_sl = False
    if is_po:
        join_sl = all(_bound(leq, x, y, upper=True) is not None
                      for x in range(n) for y in range(n))
        meet_sl = all(_bound(leq, x, y, upper=False) is not None
                      for x in range(n) for y in range(n))
    bottoms = [x for x in range(n) if leq[x].all()]
    tops = [x for x in range(n) if leq[:, x].all()]
    leq = leq.copy()
    leq.setflags(write=False)
    return PartialOrderReport(
        subject=algebra.name, which=which, leq=leq,
        is_partial_order=is_po, is_join_semilattice=join_sl, is_meet_semilattice=meet_sl,
        bottom=bottoms[0] if len(bottoms) == 1 else None,
        top=tops[0] if len(tops) == 1 else None,
    )


def _bound(leq: np.ndarray, x: int, y: int, upper: bool):
    """Least upper / greatest lower bound of {x, y} in a partial order, or None."""
    n = leq.shape[0]
    if upper:
        cands = [z for z in range(n) if leq[x, z] and leq[y, z]]
        best = [z for z in cands if all(leq[z, w] for w in cands)]
    else:
        cands = [z for z in range(n) if leq[z, x] and leq[z, y]]
        best = [z for z in cands if all(leq[w, z] for w in cands)]
    return best[0] if len(best) == 1 else None


# ---------------------------------------------------------------------------
# involution and duality


def check_involution(algebra: FiniteNearSemiring) -> CheckReport:
    """Check period two and antitonicity against the sum order."""
    if algebra.inv is None:
        raise PreconditionError(f"{algebra.name} has no involution table")
    order = induced_order(algebra, "sum")
    if not order.is_partial_order:
        raise PreconditionError(
            f"sum relation of {algebra.name} is not a partial order; involution undefined")
    violations = [v for v in (_clause_inv_period_two(algebra), _clause_inv_antitone(algebra))
                  if v is not None]
    violations.sort(key=lambda v: (v.clause, v.witness))
    return CheckReport(algebra.name, "involution", not violations, tuple(violations))


def dual_algebra(algebra: FiniteNearSemiring) -> FiniteNearSemiring:
    """The dual algebra: x+'y = α(α(x)+α(y)), x·'y = α(α(x)·α(y)), constants α(0), α(1)."""
    rep = check_involution(algebra)
    if not rep.passed:
        v = rep.violations[0]
        raise PreconditionError(
            f"{algebra.name} has no valid involution: {v.clause}: {v.equation}")
    inv = algebra.inv
    add = inv[algebra.add[np.ix_(inv, inv)]]
    mul = inv[algebra.mul[np.ix_(inv, inv)]]
    dual = FiniteNearSemiring(
        add, mul, int(inv[algebra.zero]), int(inv[algebra.one]), inv=inv,
        name=f"dual({algebra.name})", labels=algebra.labels,
    )
    # both required by construction; re-verified rather than assumed
    if not check_axioms(dual, "involutive").passed:
        raise AlgebraError(f"dual of {algebra.name} fails the involutive profile")
    back_add = inv[dual.add[np.ix_(inv, inv)]]
    back_mul = inv[dual.mul[np.ix_(inv, inv)]]
    if not (np.array_equal(back_add, algebra.add) and np.array_equal(back_mul, algebra.mul)):
        raise AlgebraError(f"duality identities fail for {algebra.name}")
    return dual


def core_property_suite(algebra: FiniteNearSemiring) -> PropertyReport:
    """Arithmetical facts every near semiring (with involution) must satisfy.

    Clauses: right-multiplication is monotone for the sum relation; the
    involution absorbs sums, α(x+y)+α(x)=α(x); and integrality holds exactly
    when α(0)=1 (a biconditional of the two verdicts).
    """
    require(algebra, "near-semiring")
    clauses = []
    add, mul, n, l = algebra.add, algebra.mul, algebra.n, algebra.label

    res = None
    for x, y, z in iproduct(range(n), repeat=3):
        if add[x, y] == y and add[mul[x, z], mul[y, z]] != mul[y, z]:
            res = ClauseResult("mul-right-monotone", False, (x, y, z),
                               f"{l(x)}≤{l(y)} but {l(x)}·{l(z)}≰{l(y)}·{l(z)}")
            break
    clauses.append(res or ClauseResult("mul-right-monotone", True))

    if algebra.inv is None:
        clauses.append(ClauseResult("inv-sum-absorption", True, detail="skipped: no involution"))
        clauses.append(ClauseResult("integral-iff-inv-zero-is-one", True,
                                    detail="skipped: no involution"))
    else:
        inv = algebra.inv
        res = None
        for x, y in iproduct(range(n), repeat=2):
            if add[inv[add[x, y]], inv[x]] != inv[x]:
                res = ClauseResult("inv-sum-absorption", False, (x, y),
                                   f"α({l(x)}+{l(y)})+α({l(x)})≠α({l(x)})")
                break
        clauses.append(res or ClauseResult("inv-sum-absorption", True))

        integral = check_axioms(algebra, "integral").passed
        inv_zero_is_one = bool(inv[algebra.zero] == algebra.one)
        if integral == inv_zero_is_one:
            clauses.append(ClauseResult(
                "integral-iff-inv-zero-is-one", True,
                detail=f"both sides {'hold' if integral else 'fail'}: "
                       f"α({l(algebra.zero)})={l(int(inv[algebra.zero]))}"))
        elif integral:
            clauses.append(ClauseResult(
                "integral-iff-inv-zero-is-one", False, (algebra.zero,),
                f"integral but α({l(algebra.zero)})={l(int(inv[algebra.zero]))}≠{l(algebra.one)}"))
        else:
            x = next(x for x in range(n) if add[x, algebra.one] != algebra.one)
            clauses.append(ClauseResult(
                "integral-iff-inv-zero-is-one", False, (x,),
                f"α({l(algebra.zero)})={l(algebra.one)} but {l(x)}+{l(algebra.one)}≠{l(algebra.one)}"))
    return PropertyReport(algebra.name, "core", tuple(clauses))
