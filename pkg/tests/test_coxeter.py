import random

import pytest
from hypothesis import given, settings, strategies as st

from clusterframe.coxeter import (CoxeterElement, CoxeterGroup, NotInitial,
                                  all_coxeter_elements, coxeter_element)
from clusterframe.rootspace import CyclicB, RootSystem
from conftest import A2, A3, AFFINE2, AFFINE_A2, B2, B3, G2


def perm_of(word, n):
    """Type A model: s_i swaps positions i and i+1."""
    p = list(range(n + 1))
    for i in word:
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def perm_length(p):
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


@given(st.lists(st.integers(0, 2), max_size=9), st.lists(st.integers(0, 2), max_size=9))
@settings(max_examples=150, deadline=None)
def test_matrix_equality_matches_permutation_model(u, w):
    W = CoxeterGroup(A3)
    x, y = W.from_word(u), W.from_word(w)
    assert (x == y) == (perm_of(u, 3) == perm_of(w, 3))
    assert len(x) == perm_length(perm_of(u, 3))


@pytest.mark.parametrize("B,order", [(A2, 6), (B2, 8), (G2, 12), (A3, 24), (B3, 48)])
def test_group_orders(B, order):
    W = CoxeterGroup(B)
    elements = W.elements(100)
    assert len(elements) == order
    top = max(len(w) for w in elements)
    assert sum(1 for w in elements if len(w) == top) == 1


def test_lengths_and_inversions():
    W = CoxeterGroup(A2)
    assert len(W.identity()) == 0 and W.identity().inversion_set() == frozenset()
    w = W.from_word((1, 0))
    assert w.inversion_set() == {(0, 1), (1, 1)}
    assert len(CoxeterGroup(B2).from_word((0, 1, 0, 1))) == 4
    assert len(CoxeterGroup(B2).from_word((0, 1, 0, 1, 0))) == 3


@pytest.mark.parametrize("B", [A3, B3, G2])
def test_inversion_sets_are_positive_roots_sent_negative(B):
    W = CoxeterGroup(B)
    rs = W.roots
    pos_roots = set()
    for w in W.elements(100):
        pos_roots |= w.inversion_set()
    for w in W.elements(100):
        inv = {b for b in pos_roots if all(x <= 0 for x in w.apply_inverse(b))}
        assert inv == w.inversion_set()
        assert len(inv) == len(w)
        for i in range(rs.n):
            up = w.has_right_ascent(i)
            assert up == (len(w.times_gen(i)) == len(w) + 1)


def test_weak_order_is_partial_order():
    W = CoxeterGroup(B2)
    els = W.elements(10)
    e = W.identity()
    for u in els:
        assert e.le(u) and u.le(u)
        for w in els:
            if u.le(w) and w.le(u):
                assert u == w
            for x in els:
                if u.le(w) and w.le(x):
                    assert u.le(x)


def test_parabolic_component():
    W = CoxeterGroup(A2)
    w = W.from_word((1, 0))
    assert w.parabolic_component({1}) == W.from_word((1,))
    assert w.parabolic_component(set()) == W.identity()
    u = W.from_word((0,))
    assert u.parabolic_component({0}) == u


@pytest.mark.parametrize("B", [A3, B3])
def test_parabolic_component_inversions(B):
    W = CoxeterGroup(B)
    for w in W.elements(100):
        for J in [{0}, {0, 1}, {1, 2}, {0, 2}]:
            wJ = w.parabolic_component(J)
            assert wJ.in_parabolic(J)
            inJ = {b for b in w.inversion_set()
                   if all(x == 0 for k, x in enumerate(b) if k not in J)}
            assert wJ.inversion_set() == inJ


def test_coxeter_element_examples():
    assert coxeter_element(B2).order == (0, 1)
    assert coxeter_element(((0,),)).order == (0,)
    with pytest.raises(CyclicB):
        coxeter_element(((0, 1, -1), (-1, 0, 1), (1, -1, 0)))
    assert coxeter_element(((0, -1), (1, 0))).order == (1, 0)


def test_rotate_and_restrict():
    c = CoxeterElement(B2)
    assert c.rotate(0).order == (1, 0)
    assert c.rotate(0).B == ((0, -2), (1, 0))
    c3 = CoxeterElement(A3)
    assert c3.restrict({0, 2}).order == (0, 2)
    with pytest.raises(NotInitial):
        c3.rotate(1)
    # 0 and 2 commute, so 2 is initial once 1 is gone
    assert c3.restrict({0, 2}).is_initial(2)
    B = ((0, 0, 1), (0, 0, 1), (-1, -1, 0))
    c = CoxeterElement(B)
    assert c.order == (0, 1, 2)
    assert c.rotate(1).order == (0, 2, 1)


def test_all_coxeter_elements_counts():
    assert len(all_coxeter_elements(A2)) == 2
    assert len(all_coxeter_elements(A3)) == 4
    assert len(all_coxeter_elements(AFFINE_A2)) == 6


@pytest.mark.parametrize("B", [A3, B3, AFFINE_A2])
def test_omega_invariance_under_rotation(B):
    rng = random.Random(7)
    for M, c in all_coxeter_elements(B):
        rs = RootSystem(M)
        for s in c.order:
            if not c.is_initial(s):
                continue
            rs2 = RootSystem(c.rotate(s).B, rs.delta)
            for _ in range(10):
                x = tuple(rng.randint(-3, 3) for _ in range(rs.n))
                y = tuple(rng.randint(-3, 3) for _ in range(rs.n))
                assert rs.omega(x, y) == rs2.omega(rs.simple_reflect(s, x), rs.simple_reflect(s, y))
                assert rs.euler(x, y) == rs2.euler(rs.simple_reflect(s, x), rs.simple_reflect(s, y))


def test_infinite_group_length_bounded():
    W = CoxeterGroup(AFFINE2)
    assert len(W.elements(6)) == 13
    W3 = CoxeterGroup(AFFINE_A2)
    assert max(len(w) for w in W3.elements(5)) == 5
