import json
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbs_sep.errors import DomainError, InternalError, ParseError, PreconditionError
from gbs_sep.graph import (
    Edge,
    Kind,
    LabeledGraph,
    ModularClass,
    XElement,
    XkElement,
    chi_k_map,
    classify,
    cyclic_radical,
    elementary_collapse,
    is_reduced,
    is_tree_positive,
    maximal_subtree,
    modular_image,
    normalize_signs,
    prepare,
    reduce,
    relations,
    tau_evaluate,
    tau_images,
    tau_k_evaluate,
    x_inverse,
    x_multiply,
    xk_multiply,
)
from gbs_sep.words import GroupWord
from gbs_random import any_graph, random_word, reduced_graph, reduced_unimodular_graph


def loop(a, b):
    return LabeledGraph(("v",), (Edge("e", "v", "v", a, b),))


TREFOIL = LabeledGraph(("x", "y"), (Edge("e1", "x", "y", 2, 3),))
XY = LabeledGraph(("x", "y"), (Edge("e1", "x", "y", 1, 3), Edge("l", "x", "x", 5, 7)))


def x_eval(images, word):
    out = XElement(0, 0, 0)
    for sym, exp in word:
        img = images[sym] if exp > 0 else x_inverse(images[sym])
        for _ in range(abs(exp)):
            out = x_multiply(out, img)
    return out


# construction and JSON


def test_json_roundtrip_and_field_names():
    text = '{"vertices":["x","y"],"edges":[{"id":"e1","from":"x","to":"y","label_from":2,"label_to":3}]}'
    G = LabeledGraph.from_json(text)
    assert G == TREFOIL
    assert G.to_json() == json.loads(text)
    assert LabeledGraph.from_json(G.dumps()) == G


@pytest.mark.parametrize("data", [
    "not json",
    {"edges": []},
    {"vertices": []},
    {"vertices": ["x", "y"]},
    {"vertices": ["x"], "edges": [{"id": "e", "from": "x", "to": "x", "label_from": 0, "label_to": 1}]},
    {"vertices": ["x"], "edges": [{"id": "e", "from": "x", "to": "z", "label_from": 1, "label_to": 1}]},
    {"vertices": ["x"], "edges": [{"id": "e", "from": "x", "to": "x", "label_from": 1.5, "label_to": 1}]},
    {"vertices": ["x"], "edges": [{"id": "e", "from": "x", "to": "x", "label_from": 1}]},
    {"vertices": ["x"], "edges": [{"id": "e", "from": "x", "to": "x", "label_from": 2, "label_to": 3},
                                  {"id": "e", "from": "x", "to": "x", "label_from": 2, "label_to": 3}]},
])
def test_json_rejects(data):
    with pytest.raises(ParseError):
        LabeledGraph.from_json(data)


def test_direct_construction_validates():
    with pytest.raises(DomainError):
        LabeledGraph(("x", "y"), ())


# maximal subtree


def test_maximal_subtree_examples():
    S = maximal_subtree(LabeledGraph(("v",)))
    assert S.tree == frozenset() and S.weights == {"v": 1}
    S = maximal_subtree(TREFOIL)
    assert S.weights == {"x": 1, "y": Fraction(2, 3)}
    tri = LabeledGraph(("a", "b", "c"), (Edge("e1", "a", "b", 2, 3), Edge("e2", "b", "c", 5, 7), Edge("e3", "c", "a", 1, 1)))
    assert len(maximal_subtree(tri).tree) == 2


# collapse, signs, reduce


def test_collapse_examples():
    R = elementary_collapse(XY, "e1", 1)
    assert R == LabeledGraph(("y",), (Edge("l", "y", "y", 15, 21),))
    R = elementary_collapse(LabeledGraph(("x", "y"), (Edge("e", "x", "y", 1, 6),)), "e", 1)
    assert R.vertices == ("y",) and R.edges == ()
    R = elementary_collapse(LabeledGraph(("x", "y"), (Edge("e", "x", "y", -1, 4),)), "e", 1)
    assert R.vertices == ("y",) and R.edges == ()


def test_collapse_preconditions():
    with pytest.raises(PreconditionError):
        elementary_collapse(loop(1, 2), "e", 1)
    with pytest.raises(PreconditionError):
        elementary_collapse(TREFOIL, "e1", 1)


def test_reduce_examples():
    assert reduce(XY) == LabeledGraph(("y",), (Edge("l", "y", "y", 15, 21),))
    cycle = LabeledGraph(("a", "b", "c"), (Edge("e1", "a", "b", 1, 1), Edge("e2", "b", "c", 1, 1), Edge("e3", "c", "a", 1, 1)))
    R = reduce(cycle)
    assert len(R.vertices) == 1 and [(e.label_src, e.label_dst) for e in R.edges] == [(1, 1)]
    assert reduce(loop(2, 3)) == loop(2, 3)


def test_normalize_signs_examples():
    G = LabeledGraph(("x", "y"), (Edge("e", "x", "y", -2, 3), Edge("l", "y", "y", -4, 5)))
    S = maximal_subtree(G)
    N = normalize_signs(G, S)
    assert is_tree_positive(N, S)
    assert (N.edge("e").label_src, N.edge("e").label_dst) == (2, 3)
    assert loop(2, -3) == normalize_signs(loop(2, -3), maximal_subtree(loop(2, -3)))
    assert normalize_signs(TREFOIL, maximal_subtree(TREFOIL)) == TREFOIL


@given(st.integers(0, 10**6))
def test_normalize_signs_on_random_graphs(seed):
    G = any_graph(random.Random(seed))
    S = maximal_subtree(G)
    N = normalize_signs(G, S)
    assert is_tree_positive(N, S)
    # admissible sign changes keep every |label| and every Delta(t_e) up to sign
    assert [abs(x) for x in N.labels()] == [abs(x) for x in G.labels()]


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_reduce_terminates_reduced_and_order_free(seed):
    rng = random.Random(seed)
    G = any_graph(rng)
    base = reduce(G)
    assert is_reduced(base)
    c0 = classify(base)
    m0 = None if c0.kind is Kind.INFINITE_CYCLIC else modular_image(*prepare(base)).classification
    for _ in range(5):
        R = reduce(G, random.Random(rng.random()))
        assert is_reduced(R) and len(R.edges) <= len(G.edges)
        assert classify(R) == c0
        if m0 is not None:
            assert modular_image(*prepare(R)).classification is m0


# classification


def test_classify_examples():
    assert classify(LabeledGraph(("v",))).kind is Kind.INFINITE_CYCLIC
    c = classify(loop(1, 5))
    assert c.kind is Kind.SOLVABLE_BS1N and c.n == 5
    assert classify(loop(2, 3)).kind is Kind.NON_SOLVABLE
    assert classify(loop(1, 1)).kind is Kind.BS_1_1
    assert classify(loop(-1, 1)).kind is Kind.BS_1_MINUS1
    assert classify(loop(-1, -1)).kind is Kind.BS_1_1
    assert classify(loop(-1, 4)) == classify(loop(1, -4))
    assert classify(loop(3, -1)).n == -3
    assert classify(TREFOIL).kind is Kind.NON_SOLVABLE
    with pytest.raises(PreconditionError):
        classify(XY)


# modular homomorphism


def test_modular_examples():
    M = modular_image(loop(2, 3), maximal_subtree(loop(2, 3)))
    assert M.generators == (Fraction(3, 2),) and M.classification is ModularClass.OTHER
    M = modular_image(loop(2, -2), maximal_subtree(loop(2, -2)))
    assert M.generators == (-1,) and M.classification is ModularClass.PLUS_MINUS_ONE
    M = modular_image(TREFOIL, maximal_subtree(TREFOIL))
    assert M.generators == () and M.classification is ModularClass.TRIVIAL
    with pytest.raises(PreconditionError):
        modular_image(LabeledGraph(("v",)), maximal_subtree(LabeledGraph(("v",))))


@given(st.integers(0, 10**6))
def test_weight_consistency(seed):
    G = any_graph(random.Random(seed))
    if not G.edges:
        return
    S = maximal_subtree(G)
    M = modular_image(G, S)
    for e in G.edges:
        ratio = abs(e.label_src * S.weights[e.src]) / abs(e.label_dst * S.weights[e.dst])
        expected = 1 if e.id in S.tree else 1 / abs(M.delta(e.id))
        assert ratio == expected


# cyclic radical


def test_radical_examples():
    for G, exps, mu in [
        (loop(2, 2), {"v": 2}, 2),
        (loop(2, -2), {"v": 2}, 2),
        (TREFOIL, {"x": 2, "y": 3}, 6),
    ]:
        R, S = prepare(G)
        rad = cyclic_radical(R, S)
        assert dict(rad.radical_exponent) == exps and rad.mu == mu


def test_radical_preconditions():
    with pytest.raises(PreconditionError):
        cyclic_radical(*prepare(loop(2, 3)))
    with pytest.raises(PreconditionError):
        cyclic_radical(*prepare(loop(1, 3)))
    G = LabeledGraph(("x", "y"), (Edge("e", "x", "y", -2, 3),))
    with pytest.raises(PreconditionError):
        cyclic_radical(G, maximal_subtree(G))


def test_radical_brute_force_oracle():
    """mu(v) by brute force: the least m with g_v^m in every edge subgroup, measured in weights."""
    rng = random.Random(5)
    for _ in range(40):
        R, S = prepare(reduced_unimodular_graph(rng))
        rad = cyclic_radical(R, S)
        ends = [abs(e.label(eps) * S.weights[e.end(eps)]) for e, eps in R.ends()]
        for v in R.vertices:
            w = abs(S.weights[v])
            m = 1
            while not all((m * w / q).denominator == 1 for q in ends):
                m += 1
            assert rad.radical_exponent[v] == m
        assert math.prod(abs(x) for x in R.labels()) % rad.mu == 0


# tau and chi_k


def test_tau_examples():
    R, S = prepare(TREFOIL)
    rad, M = cyclic_radical(R, S), modular_image(R, S)
    assert tau_evaluate(R, S, rad, M, "g.x g.y^-1") == XElement(0, 0, 1)
    assert tau_evaluate(R, S, rad, M, "") == XElement(0, 0, 0)
    assert tau_k_evaluate(R, S, rad, M, "g.x", 2) == XkElement(0, 3)
    with pytest.raises(ParseError):
        tau_evaluate(R, S, rad, M, "g.q")
    B, SB = prepare(loop(2, -2))
    radB, MB = cyclic_radical(B, SB), modular_image(B, SB)
    assert tau_evaluate(B, SB, radB, MB, "t.e^-1 g.v^2 t.e") == XElement(0, 0, -2)
    assert tau_k_evaluate(B, SB, radB, MB, "t.e", 3) == XkElement(1, 0)
    assert chi_k_map(XElement(0, 0, 0), 6, 4) == XkElement(0, 0)
    with pytest.raises(DomainError):
        chi_k_map(XElement(0, 0, 0), 6, 0)


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_tau_respects_relations(seed):
    rng = random.Random(seed)
    R, S = prepare(reduced_unimodular_graph(rng))
    rad, M = cyclic_radical(R, S), modular_image(R, S)
    images = tau_images(R, S, rad, M)
    for lhs, rhs in relations(R, S):
        assert x_eval(images, lhs) == x_eval(images, rhs)


@settings(max_examples=60)
@given(st.integers(0, 10**6))
def test_tau_k_factors_through_chi_k(seed):
    rng = random.Random(seed)
    R, S = prepare(reduced_unimodular_graph(rng))
    rad, M = cyclic_radical(R, S), modular_image(R, S)
    for _ in range(5):
        w = random_word(rng, R, S)
        for k in (1, 2, 3, 5):
            assert tau_k_evaluate(R, S, rad, M, w, k) == chi_k_map(tau_evaluate(R, S, rad, M, w), rad.mu, k)
        if M.classification is ModularClass.TRIVIAL:
            assert tau_k_evaluate(R, S, rad, M, w, 2).b == 0


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-20, 20)),
       st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-20, 20)),
       st.integers(1, 4), st.integers(1, 6))
def test_chi_k_is_homomorphism(a, b, k, mu):
    x, y = XElement(*a), XElement(*b)
    assert chi_k_map(x_multiply(x, y), mu, k) == xk_multiply(chi_k_map(x, mu, k), chi_k_map(y, mu, k), mu * k)
    assert x_multiply(x, x_inverse(x)) == XElement(0, 0, 0)


def test_radical_internal_consistency_error():
    # wrong weights (not tree-consistent) make mu(v) non-integral
    from gbs_sep.graph import SpanningData
    G = TREFOIL
    S = SpanningData(frozenset({"e1"}), "x", {"x": Fraction(1), "y": Fraction(5, 7)})
    with pytest.raises(InternalError):
        cyclic_radical(G, S)
