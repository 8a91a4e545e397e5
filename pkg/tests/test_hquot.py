import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gbs_sep.bs1n import Bs1nElement, Bs1nGroup
from gbs_sep.errors import BoundExceeded, DomainError, PreconditionError
from gbs_sep.hquot import HElement, HGroup, find_separating_quotient, natural_hom
from gbs_sep.numtheory import PrimeSet, enumerate_omega


def omega_groups(n, rs_max):
    for r0, s in enumerate_omega(n, PrimeSet.all(), rs_max):
        for r in range(r0, rs_max // s + 1, r0):
            yield HGroup(n, r, s)


def conj_by_search(G, x, y):
    """Oracle written against the public multiply/inverse only."""
    return any(G.multiply(G.inverse(c), G.multiply(x, c)) == y for c in G.elements())


def test_construction_checks_omega():
    with pytest.raises(DomainError):
        HGroup(2, 2, 7)
    with pytest.raises(DomainError):
        HGroup(0, 1, 1)


def test_h237_examples():
    G = HGroup(2, 3, 7)
    assert G.multiply(HElement(1, 3), HElement(2, 5)) == HElement(0, 3)
    assert G.multiply(G.identity, HElement(1, 4)) == HElement(1, 4)
    assert len(set(G.elements())) == 21 == G.order
    assert G.inverse(HElement(1, 1)) == HElement(2, 3)
    assert G.power(HElement(1, 0), 3) == G.identity
    a, a2, a3 = G.from_word("a"), G.from_word("a^2"), G.from_word("a^3")
    ta, ta2 = G.from_word("t a"), G.from_word("t a^2")
    for method in (G.are_conjugate_criterion, G.are_conjugate_bruteforce):
        assert method(a, a2)
        assert not method(a, a3)
        assert method(ta, ta2)


def test_natural_hom_examples():
    G = HGroup(3, 1, 2)
    g = Bs1nGroup(3)
    assert G.natural_hom(g.identity) == G.identity
    assert G.from_word("t a") == HElement(0, 1)
    assert G.from_word("t a^2") == HElement(0, 0)
    with pytest.raises(PreconditionError):
        natural_hom(Bs1nGroup(2), G, g.identity)


def test_group_axioms_small_exhaustive():
    for n in (-3, 2, 3):
        for G in omega_groups(n, 20):
            els = list(G.elements())
            for x, y, z in itertools.product(els, repeat=3):
                assert G.multiply(G.multiply(x, y), z) == G.multiply(x, G.multiply(y, z))
            for x in els:
                assert G.multiply(x, G.inverse(x)) == G.identity
                assert G.multiply(G.identity, x) == x
                assert G.multiply(G.inverse(x), x) == G.identity


@given(st.sampled_from([-3, -2, 2, 3, 5]), st.integers(0, 10**6))
def test_natural_hom_is_homomorphism_and_surjective(n, seed):
    rng = random.Random(seed)
    G = rng.choice(list(omega_groups(n, 60)))
    g = Bs1nGroup(n)
    for _ in range(10):
        x = g.element(rng.randint(0, 5), rng.randint(-50, 50), rng.randint(0, 5))
        y = g.element(rng.randint(0, 5), rng.randint(-50, 50), rng.randint(0, 5))
        assert G.natural_hom(g.multiply(x, y)) == G.multiply(G.natural_hom(x), G.natural_hom(y))
    image = {G.natural_hom(g.element(i, j, 0)) for i in range(G.r) for j in range(G.s)}
    assert len(image) == G.order


def test_criterion_and_bruteforce_match_search_oracle():
    for n in (-2, 3):
        for G in omega_groups(n, 24):
            els = list(G.elements())
            for x in els:
                for y in els:
                    expected = conj_by_search(G, x, y)
                    assert G.are_conjugate_criterion(x, y) == expected
                    assert G.are_conjugate_bruteforce(x, y) == expected


def test_class_labels_are_orbits():
    G = HGroup(3, 4, 20)
    labels = G.conjugacy_class_labels()
    els = list(G.elements())
    for k, x in enumerate(els):
        for m, y in enumerate(els):
            assert (labels[k] == labels[m]) == G.are_conjugate_criterion(x, y)


def test_bruteforce_bound():
    G = HGroup(2, 10, 11)
    with pytest.raises(BoundExceeded):
        G.are_conjugate_bruteforce(G.identity, G.identity, bound=100)
    with pytest.raises(BoundExceeded):
        G.conjugacy_class_labels(bound=100)


def test_find_separating_quotient_examples():
    g = Bs1nGroup(3)
    H = find_separating_quotient(g, g.from_word("t a"), g.from_word("t a^2"), PrimeSet.all(), 100)
    assert (H.r, H.s) == (1, 2)
    x, y = g.from_word("t^4 a^80"), g.from_word("t^4 a^40")
    assert find_separating_quotient(g, x, y, PrimeSet.parse("all-{2}"), 2000) is None
    for n in (2, -3, 5):
        g = Bs1nGroup(n)
        x, y = g.from_word("t^2 a"), g.from_word("t^-3 a^4")
        H = find_separating_quotient(g, x, y, PrimeSet.parse("{3}"), 10)
        assert H.s == 1 and H.r > 5
        assert H.natural_hom(x) != H.natural_hom(y)


def test_separating_quotient_really_separates():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.choice([-3, -2, 2, 3])
        g = Bs1nGroup(n)
        x = g.standard_element(rng.randint(-2, 2), rng.randint(-30, 30))
        y = g.standard_element(rng.randint(-2, 2), rng.randint(-30, 30))
        H = find_separating_quotient(g, x, y, PrimeSet.all(), 500)
        if g.are_conjugate(x, y):
            assert H is None
        else:
            assert H is not None
            hx, hy = H.natural_hom(x), H.natural_hom(y)
            assert not conj_by_search(H, hx, hy)
