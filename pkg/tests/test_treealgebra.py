from __future__ import annotations

import itertools

import pytest

from postlie.core import LinComb, box
from postlie.envelope import Envelope
from postlie.treealgebra import Planted, TreePostLie, XGen, bracket0_trees, post_product, star2, verify_identification
from postlie.trees import Tree, kernel, leaf, noise_tree

XI = noise_tree(1)


def test_bracket0_lowers_the_planting():
    g = Planted((1, 0), XI)
    assert bracket0_trees(g, XGen(0)) == LinComb.single(Planted((0, 0), XI))
    assert bracket0_trees(XGen(0), g) == -LinComb.single(Planted((0, 0), XI))
    assert bracket0_trees(g, XGen(1)) == LinComb()
    assert bracket0_trees(g, g) == LinComb()


def test_x_acts_by_raising_below_the_root():
    out = post_product(XGen(0), Planted((1, 0), XI))
    assert out == LinComb.single(Planted((1, 0), Tree((1, 0), XI.children)))
    assert post_product(Planted((1, 0), XI), XGen(0)) == LinComb()
    with pytest.raises(ValueError):
        post_product(XGen(0), XGen(1))


def test_identification_on_small_words():
    env = Envelope(TreePostLie(1))
    sigmas = [Planted((0, 0), XI), Planted((1, 0), leaf(1, (0, 1)))]
    taus = [XI, Tree((1, 1), ((kernel((0, 1)), XI),))]
    for k in box((1, 1)):
        xs = tuple(XGen(i) for i, n in enumerate(k) for _ in range(n))
        for forest in [(), (sigmas[0],), tuple(sigmas)]:
            for tau, b in itertools.product(taus, box((1, 1))):
                assert verify_identification(env, xs + forest, tau, b).ok


def test_multinomial_needed_beyond_the_unit_box():
    env = Envelope(TreePostLie(1))
    tau = Tree((0, 0), ((kernel((0, 0)), XI),))
    word = (XGen(0), XGen(0))
    assert not verify_identification(env, word, tau, (0, 0)).ok
    assert verify_identification(env, word, tau, (0, 0), multinomial=True).ok
    assert star2(env, word, tau, (0, 0), multinomial=True) != star2(env, word, tau, (0, 0))
