import pytest

from bruhat_chains.bruhat import covers_up
from bruhat_chains.chainsum import chain_count, preset, weight
from bruhat_chains.operator_verify import (
    SchubertOperator, delta_matrix_via_quotient, mk_element,
    multiplication_operator, operator_Delta_matrix, operator_M,
    operator_M_plus_zR, operator_Mk, operator_R, verify_lemma,
)
from bruhat_chains.permcore import all_permutations, identity, longest_element
from bruhat_chains.polyring import ALPHA, Poly, elementary_symmetric
from bruhat_chains.schubert import monk_product

from conftest import P

a1, a2 = Poly.alpha(1), Poly.alpha(2)


def test_operator_M_examples():
    m = operator_M(3)
    assert m.column(identity(3)) == {P("213"): a1, P("132"): a2}
    assert m.column(longest_element(3)) == {}
    ones = {ALPHA(i): 1 for i in range(1, 4)}
    rho_x = 3 * Poly.x(1) + 2 * Poly.x(2) + Poly.x(3)
    assert operator_M(4).subs(ones) == multiplication_operator(rho_x, 4)


def test_operator_R_examples():
    r = operator_R(3)
    assert r.column(identity(3)) == {}
    assert r.column(P("132")) == {P("231"): 1}
    rho_x = 2 * Poly.x(1) + Poly.x(2)
    assert r == operator_Delta_matrix(3) - multiplication_operator(rho_x, 3)


def test_operator_Delta_examples():
    d = operator_Delta_matrix(3)
    assert d.column(identity(3)) == {P("213"): 1, P("132"): 1}
    assert d.column(P("132")) == {P("231"): 3, P("312"): 1}


@pytest.mark.parametrize("n", [3, 4])
def test_delta_matrix_two_routes(n):
    assert operator_Delta_matrix(n) == delta_matrix_via_quotient(n)


def test_multiplication_operator_examples():
    n = 4
    assert multiplication_operator(Poly.constant(1), n) == SchubertOperator.identity(n)
    assert multiplication_operator(elementary_symmetric(1, n), n) == SchubertOperator(n)
    for m in range(1, n):
        op = multiplication_operator(sum((Poly.x(i) for i in range(1, m + 1)), Poly()), n)
        for w in all_permutations(n):
            assert op.column(w) == monk_product(w, m)


def test_operator_Mk_examples():
    assert operator_Mk(3, 1) == operator_M(3)
    assert operator_Mk(3, 2) == multiplication_operator(mk_element(3, 2), 3)
    b1, b2 = a1 + a2, a2
    assert mk_element(3, 2) == b1 * Poly.x(1) ** 2 + b2 * Poly.x(2) ** 2
    with pytest.raises(ValueError):
        operator_Mk(3, 0)


def test_Mk_commute():
    n = 4
    for k in range(1, 5):
        for k2 in range(k + 1, 5):
            assert operator_Mk(n, k).commutator(operator_Mk(n, k2)) == SchubertOperator(n)


def test_operator_algebra():
    n = 3
    m, r = operator_M(n), operator_R(n)
    assert (m @ r) @ m == m @ (r @ m)
    assert m.commutator(r) == (r.commutator(m)).scale(-1)
    assert (m + r) - r == m


@pytest.mark.parametrize("n", [3, 4])
def test_M_plus_zR_is_thm13_weights(n):
    op = operator_M_plus_zR(n)
    for w in all_permutations(n):
        expect = {c.upper: weight(preset("thm13"), c) for c in covers_up(w)}
        assert op.column(w) == {u: c for u, c in expect.items() if c}


def test_iterating_gives_chain_counts():
    n = 4
    op = operator_M_plus_zR(n)
    vec = {identity(n): Poly.constant(1)}
    for step in range(1, 7):
        vec = op.apply(vec)
        for u in all_permutations(n):
            if u.length == step:
                assert vec.get(u, Poly()) == chain_count(preset("thm13"), identity(n), u)


@pytest.mark.parametrize("lemma", ["L31", "L32", "L33", "L34", "L41"])
@pytest.mark.parametrize("n", [3, 4])
def test_lemmas(lemma, n):
    rep = verify_lemma(lemma, n)
    assert rep.passed, rep.to_text()
    assert rep.to_dict()["lemma"] == lemma


def test_lemma_report_shapes():
    assert len(verify_lemma("L33", 4).cases) == 10
    assert len([c for c in verify_lemma("L32", 4).cases if c.id.startswith("L32/k=")]) == 6
    l41 = verify_lemma("L41", 3)
    first = next(c for c in l41.cases if c.id == "L41/w=123")
    assert first.detail.startswith("sum=0")
    with pytest.raises(ValueError):
        verify_lemma("L99", 3)
    assert verify_lemma("lem41", 3).name == "L41"
