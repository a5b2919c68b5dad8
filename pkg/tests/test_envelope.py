from __future__ import annotations

import itertools

from hypothesis import given, strategies as st

from postlie.core import LinComb
from postlie.envelope import Envelope, check_post_lie, words_up_to
from postlie.treealgebra import Planted, TreePostLie, XGen
from postlie.trees import leaf, noise_tree

ENV = Envelope(TreePostLie(1))
XI = noise_tree(1)
GENS = [XGen(0), XGen(1), Planted((1, 0), XI), Planted((0, 1), XI), Planted((1, 1), leaf(1, (1, 0)))]
words = st.lists(st.sampled_from(GENS), max_size=4).map(tuple)


def test_normal_form_moves_x_left():
    g = Planted((1, 0), XI)
    nf = ENV.normal_form((g, XGen(0)))
    assert nf == LinComb([((XGen(0), g), 1), ((Planted((0, 0), XI),), 1)])
    assert ENV.is_normal((XGen(0), g)) and not ENV.is_normal((g, XGen(0)))


@given(words)
def test_normal_form_is_confluent(w):
    assert ENV.all_normal_forms(w) == {ENV.normal_form(w)}


@given(words, words)
def test_mul_is_associative_with_unit(a, b):
    A, B = ENV.normal_form(a), ENV.normal_form(b)
    assert ENV.mul(ENV.unit(), A) == A == ENV.mul(A, ENV.unit())
    C = ENV.gen(GENS[2])
    assert ENV.mul(ENV.mul(A, B), C) == ENV.mul(A, ENV.mul(B, C))


def test_split_reads_exponents():
    k, forest = ENV.split((XGen(0), XGen(0), XGen(1), GENS[2]))
    assert k == (2, 1) and forest == (GENS[2],)


def test_words_up_to_counts_multisets():
    assert len(words_up_to(GENS, 2, ENV)) == 1 + 5 + 15


def test_star_commutator_is_derived_bracket():
    for x, y in itertools.product(GENS, repeat=2):
        comm = ENV.star(ENV.gen(x), ENV.gen(y)) - ENV.star(ENV.gen(y), ENV.gen(x))
        assert comm == ENV.from_lin(ENV.alg.derived_bracket(x, y))


def test_coproduct_and_counit():
    A = ENV.word(XGen(0), GENS[2])
    D = ENV.coproduct(A)
    assert len(D) == 4 and ENV.tensor_swap(D) == D
    left, right = ENV.coassoc_sides(A)
    assert left == right
    assert ENV.counit(ENV.unit()) == 1 and ENV.counit(A) == 0


def test_post_lie_axioms_on_small_triples():
    for x, y, z in itertools.product(GENS, repeat=3):
        assert check_post_lie(ENV.alg, x, y, z).ok
