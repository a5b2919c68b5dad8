from __future__ import annotations

import pytest
from hypothesis import given

from postlie.core import DimensionError, parabolic
from postlie.trees import (
    NOISE,
    T0Tree,
    Tree,
    canonicalize,
    eligible_paths,
    grading,
    is_planted,
    kernel,
    leaf,
    mark_all,
    marked_paths,
    noise_tree,
    one,
    planted,
    strip_marks,
    t0_paths,
    t0_to_tree,
    tree_product,
    unplant,
)

from strategies import trees


def test_children_order_is_irrelevant():
    a = (kernel((1, 0)), leaf(1))
    b = (NOISE, leaf(1))
    c = (kernel((0, 0)), noise_tree(1))
    assert Tree((0, 1), (a, b, c)) == Tree((0, 1), (c, a, b))
    assert canonicalize(((0, 1), [c, b, a])) == Tree((0, 1), (a, b, c))


def test_noise_must_end_in_a_bare_leaf():
    with pytest.raises(ValueError):
        Tree((0, 0), ((NOISE, leaf(1, (1, 0))),))
    with pytest.raises(DimensionError):
        Tree((0, 0), ((kernel((0,)), leaf(1)),))


def test_planting():
    t = planted((1, 0), noise_tree(1))
    assert is_planted(t)
    assert unplant(t) == ((1, 0), noise_tree(1))
    assert not is_planted(noise_tree(1))
    with pytest.raises(ValueError):
        unplant(one(1))


def test_counts_and_paths():
    t = Tree((0, 0), ((NOISE, leaf(1)), (kernel((1, 0)), noise_tree(1))))
    assert t.n_edges() == 3 and t.n_noise() == 2
    # the two noise leaves are not eligible
    assert len(list(eligible_paths(t))) == 2
    assert grading(t, parabolic(1)) == 2


@given(trees(), trees())
def test_product_is_commutative_and_counts_add(s, t):
    assert tree_product(s, t) == tree_product(t, s)
    assert tree_product(s, t).n_edges() == s.n_edges() + t.n_edges()
    assert tree_product(s, one(1)) == s


@given(trees())
def test_marks_round_trip(t):
    m = mark_all(t)
    assert strip_marks(m) == t
    assert len(marked_paths(m)) == len(list(eligible_paths(t)))


def test_t0_trees():
    leaf0 = T0Tree()
    t = T0Tree(((1, 0), (0, 1), (1, 0)), (leaf0, T0Tree(((2, 0),))))
    assert t.monomials == ((0, 1), (1, 0), (1, 0))
    assert t.arity() == 5 and t.n_edges() == 2
    assert len(list(t0_paths(t))) == 3
    flat = t0_to_tree(t, 1)
    assert flat.dec == (2, 1) and flat.n_noise() == 3
    with pytest.raises(ValueError):
        T0Tree(((0, 0),))
