from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from postlie.core import LinComb
from postlie.envelope import Envelope, words_up_to
from postlie.morphism import T0PostLie, planted_t0, psi, psi_hat, psi_hat_env, psi_hat_lin
from postlie.multiindex import Deriv, Monomial, MultiIndexPostLie, Partial, z
from postlie.treealgebra import Planted, XGen
from postlie.trees import T0Tree, noise_tree

LEAF = T0Tree()
GENS = [
    XGen(0),
    XGen(1),
    planted_t0((1, 0), LEAF),
    planted_t0((1, 1), T0Tree(((0, 1),))),
    planted_t0((0, 0), T0Tree((), (LEAF,))),
    planted_t0((1, 0), T0Tree(((1, 0), (1, 0)))),
]


def test_psi_values():
    assert psi(LEAF) == LinComb.single(z(0))
    assert psi(T0Tree((), (LEAF, LEAF))) == LinComb.single(Monomial.of([2, 0, 0]), 2)
    # two equal monomial factors: 2! from the arity, 1!·1! from the factors
    assert psi(T0Tree(((1, 0), (1, 0)))) == LinComb.single(Monomial.of([2, (1, 0), (1, 0)]), 2)


def test_psi_hat_on_generators():
    assert psi_hat(XGen(1)) == LinComb.single(Partial(1))
    assert psi_hat(planted_t0((2, 0), LEAF)) == LinComb.single(Deriv(z(0), (2, 0)), Fraction(1, 2))
    with pytest.raises(TypeError):
        psi_hat(Planted((0, 0), noise_tree(1)))


def test_psi_hat_is_a_post_lie_morphism():
    t, m = T0PostLie(1), MultiIndexPostLie(1)
    for x, y in itertools.product(GENS, repeat=2):
        assert psi_hat_lin(t.post(x, y)) == m.post_lin(psi_hat(x), psi_hat(y))
        assert psi_hat_lin(t.bracket0(x, y)) == m.bracket0_lin(psi_hat(x), psi_hat(y))


def test_psi_hat_extends_to_the_envelopes():
    tenv, menv = Envelope(T0PostLie(1)), Envelope(MultiIndexPostLie(1))
    words = words_up_to(GENS[:4], 2, tenv)
    for a, b in itertools.product(words, repeat=2):
        A, B = LinComb.single(a), LinComb.single(b)
        assert psi_hat_env(tenv.star(A, B), menv) == menv.star(psi_hat_env(A, menv), psi_hat_env(B, menv))
