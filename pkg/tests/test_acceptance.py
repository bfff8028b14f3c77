"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with  pytest tests/test_acceptance.py -v -s  to see the per-criterion
lines as they complete.  All comparisons are exact table equalities; there
are no numeric tolerances anywhere in this suite.
"""
import functools
import json

import nearsemiring as nsr
from nearsemiring import fixtures
from nearsemiring.cli import main
from nearsemiring.search import canonical_form

from naive import naive_models


def criterion(number, title):
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {number} [{title}]: FAIL")
                raise
            print(f"ACCEPTANCE {number} [{title}]: PASS")
        return inner
    return wrap


@criterion(1, "fixture fidelity: EX24 violation and both induced order chains")
def test_criterion_1(capsys):
    code = main(["check", "fixtures:EX24", "--profile", "integral"])
    out = capsys.readouterr().out
    assert code == 1
    assert "integrality: a+1=a" in out
    assert out.count("witness") == 1          # exactly the one violation
    code = main(["check", "fixtures:EX24", "--profile", "integral", "--dot"])
    dot = capsys.readouterr().out
    sum_graph, mul_graph = dot.split("digraph")[1:]
    assert '"0" -> "1"' in sum_graph and '"1" -> "a"' in sum_graph \
        and sum_graph.count("->") == 2        # 0 < 1 < a
    assert '"0" -> "a"' in mul_graph and '"a" -> "1"' in mul_graph \
        and mul_graph.count("->") == 2        # 0 < a < 1


@criterion(2, "EX28: involutive, not integral, biconditional with α(0)=2")
def test_criterion_2():
    ex28 = fixtures.ex28()
    assert nsr.check_axioms(ex28, "involutive").passed
    report = nsr.check_axioms(ex28, "integral")
    assert not report.passed
    assert ex28.inv[ex28.zero] == 2 and ex28.one == 1
    suite = nsr.core_property_suite(ex28)
    assert suite.clause("integral-iff-inv-zero-is-one").passed


@criterion(3, "appendix audit: exact witnesses, definitive independence verdicts")
def test_criterion_3():
    apxa = fixtures.apxa()
    idem = nsr.check_axioms(apxa, "idempotent-add")
    assert nsr.Violation("add-idempotence", (4,), "b+b=a") in idem.violations
    near = nsr.check_axioms(apxa, "near-semiring")
    assert nsr.Violation("add-neutral", (4,), "0+b=a") in near.violations
    apxb_rep = nsr.check_axioms(fixtures.apxb(), "near-semiring")
    assert nsr.Violation("annihilation", (2,), "0·a=a") in apxb_rep.violations

    # direction (1) and not (2), sizes up to 6
    first = nsr.find_model(6, "involutive-integral,central-1", "central-2")
    assert first.exhaustive or first.models
    if first.models:
        model = first.models[0]
        assert nsr.check_axioms(model, "involutive-integral").passed
        assert nsr.identity_holds(nsr.IDENTITIES["central-1"], model)
        assert not nsr.identity_holds(nsr.IDENTITIES["central-2"], model)
        assert first.violations and first.violations[0][0] == "central-2"
    else:
        assert first.sizes == (1, 2, 3, 4, 5, 6)

    # direction (2) and not (1): first at sizes <= 3, then up to 6
    small = nsr.find_model(3, "involutive-integral,central-2", "central-1")
    assert small.exhaustive or small.models
    second = nsr.find_model(6, "involutive-integral,central-2", "central-1")
    assert second.exhaustive or second.models
    if second.models:
        model = second.models[0]
        assert not nsr.identity_holds(nsr.IDENTITIES["central-1"], model)
        assert nsr.identity_holds(nsr.IDENTITIES["central-2"], model)
    else:
        assert second.sizes == (1, 2, 3, 4, 5, 6)


@criterion(4, "round-trip translations are pointwise identities")
def test_criterion_4():
    assert nsr.roundtrip_check(fixtures.mv3(), "basic").pointwise_equal
    assert nsr.roundtrip_check(fixtures.bool2(), "basic").pointwise_equal
    for n in (1, 2, 3):
        constraint = nsr.parse_constraint("involutive,lukasiewicz")
        for model in nsr.enumerate_models(n, constraint).models:
            assert nsr.roundtrip_check(model, "basic").pointwise_equal
    assert nsr.roundtrip_check(fixtures.mo2(), "oml").pointwise_equal
    assert nsr.roundtrip_check(fixtures.bool4(), "oml").pointwise_equal
    for n in (1, 2, 3, 4):
        constraint = nsr.parse_constraint("involutive,lukasiewicz,orthomodular")
        for model in nsr.enumerate_models(n, constraint).models:
            assert nsr.roundtrip_check(model, "oml").pointwise_equal


LUKASIEWICZ_FIXTURES = ("BOOL2", "BOOL4", "MV3", "MO2", "MV3xBOOL2")


@criterion(5, "witness terms, permutability and distributivity")
def test_criterion_5():
    targets = [fixtures.fixture(name) for name in LUKASIEWICZ_FIXTURES]
    for n in (1, 2, 3, 4):
        constraint = nsr.parse_constraint("involutive,lukasiewicz")
        targets.extend(nsr.enumerate_models(n, constraint).models)
    for algebra in targets:
        assert nsr.witness_term_checks(algebra).passed, algebra.name
        props = nsr.congruence_lattice_properties(algebra)
        assert props.clause("congruences-permute").passed, algebra.name
        assert props.clause("congruence-lattice-distributive").passed, algebra.name


@criterion(6, "centrality oracle equivalence: three methods, zero disagreements")
def test_criterion_6():
    targets = [fixtures.fixture(name) for name in LUKASIEWICZ_FIXTURES]
    for n in (1, 2, 3, 4):
        constraint = nsr.parse_constraint("involutive-integral")
        targets.extend(nsr.enumerate_models(n, constraint).models)
    for algebra in targets:
        report = nsr.central_elements(algebra, "all")
        assert report.agreement, algebra.name


@criterion(7, "center Boolean algebras of the product and of MO2")
def test_criterion_7():
    report = nsr.center_algebra(fixtures.fixture("MV3xBOOL2"))
    assert len(report.centrals) == 4
    assert report.boolean_check.passed
    assert len(report.atoms) == 2
    mo2 = fixtures.mo2()
    report = nsr.center_algebra(mo2)
    assert report.centrals == (mo2.zero, mo2.one)


@criterion(8, "decomposition: factors, idempotence, quotient cross-check")
def test_criterion_8():
    result = nsr.decompose(fixtures.bool4())
    assert result.factor_sizes() == (2, 2)
    for factor in result.factors:
        assert nsr.are_isomorphic(factor.algebra, fixtures.bool2()) is not None
    product = fixtures.fixture("MV3xBOOL2")
    result = nsr.decompose(product)
    by_size = sorted(result.factors, key=lambda f: f.algebra.n)
    assert nsr.are_isomorphic(by_size[0].algebra, fixtures.bool2()) is not None
    assert nsr.are_isomorphic(by_size[1].algebra, fixtures.mv3()) is not None
    for factor in result.factors:
        again = nsr.decompose(factor.algebra)
        assert len(again.factors) == 1 and all(again.indecomposable)
    # interval/quotient agreement on every fixture with nontrivial centrals
    for name in ("BOOL2", "BOOL4", "MV3", "MO2", "MV3xBOOL2"):
        algebra = fixtures.fixture(name)
        centrals = nsr.central_elements(algebra).centrals
        for e in centrals:
            interval = nsr.interval_algebra(algebra, e)
            theta = nsr.principal_congruence(algebra, e, algebra.one)
            quotient = nsr.quotient_algebra(algebra, theta)
            assert nsr.are_isomorphic(interval.algebra, quotient) is not None


@criterion(9, "enumeration soundness: naive oracle match, parallel determinism")
def test_criterion_9():
    for names in ("near-semiring", "involutive-integral", "involutive,lukasiewicz"):
        constraint = nsr.parse_constraint(names)
        for n in (1, 2, 3):
            got = {canonical_form(m)
                   for m in nsr.enumerate_models(n, constraint).models}
            assert got == naive_models(n, constraint), (names, n)
    constraint = nsr.parse_constraint("involutive-integral")
    serial = nsr.enumerate_models(4, constraint)
    parallel = nsr.enumerate_models(4, constraint, workers=2)
    assert ([json.dumps(m.to_document()) for m in serial.models]
            == [json.dumps(m.to_document()) for m in parallel.models])
