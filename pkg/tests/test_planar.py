from __future__ import annotations

import itertools

import pytest

from postlie.core import LinComb
from postlie.planar import (
    NOISE_SLOT,
    PKernel,
    PlanarTree,
    XEdge,
    check_left_equiv,
    left_graft,
    left_post,
    planar_leaf,
    planar_normal_forms,
    planar_normalize,
    to_planar,
    to_planar_gen,
    x_edge_tree,
)
from postlie.treealgebra import Planted, XGen
from postlie.trees import Tree, kernel, leaf, noise_tree

XI = noise_tree(1)


def test_noises_lead():
    with pytest.raises(ValueError):
        PlanarTree(1, (XEdge(0), NOISE_SLOT))
    with pytest.raises(IndexError):
        PlanarTree(1, (XEdge(2),))
    assert x_edge_tree(1, 0).n_noise == 1 and x_edge_tree(1, 0).n_edges() == 2


def test_insertion_goes_after_the_noises():
    sigma = PKernel((0, 0), planar_leaf(1))
    out = left_graft(sigma, x_edge_tree(1, 1))
    assert out == LinComb.single(PlanarTree(1, (NOISE_SLOT, sigma, XEdge(1))))
    assert left_graft(sigma, XEdge(0)) == LinComb()
    assert left_post(sigma, XEdge(0)) == LinComb()


def test_round_trip_through_planar_form():
    t = Tree((1, 1), ((kernel((1, 0)), XI), (kernel((0, 0)), leaf(1, (0, 1)))))
    assert planar_normalize(to_planar(t)) == LinComb.single(t)


def test_normalization_uses_the_relation():
    # Ξ I_a(Ξ) X_0 = Ξ X_0 I_a(Ξ) + Ξ I_{a-e_0}(Ξ)
    xi = planar_leaf(1, noise=True)
    p = PlanarTree(1, (NOISE_SLOT, PKernel((1, 0), xi), XEdge(0)))
    expected = LinComb([
        (Tree((1, 0), XI.children + ((kernel((1, 0)), XI),)), 1),
        (Tree((0, 0), XI.children + ((kernel((0, 0)), XI),)), 1),
    ])
    assert planar_normalize(p) == expected
    assert planar_normal_forms(p) == {expected}


def test_left_grafting_matches_post_lie_product():
    gens = [XGen(0), XGen(1), Planted((1, 0), XI), Planted((0, 1), Tree((1, 0), XI.children)), Planted((1, 1), leaf(1))]
    for x, y in itertools.product(gens, repeat=2):
        if isinstance(x, XGen) and isinstance(y, XGen):
            continue
        assert check_left_equiv(to_planar_gen(x), to_planar_gen(y)).ok
