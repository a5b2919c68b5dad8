"""Hypothesis strategies shared by the module tests."""

from __future__ import annotations

from hypothesis import strategies as st

from postlie.core import LinComb
from postlie.multiindex import Monomial
from postlie.trees import NOISE, Tree, kernel, leaf

D = 1


def decs(d: int = D, m: int = 1):
    return st.tuples(*[st.integers(0, m) for _ in range(d + 1)])


@st.composite
def trees(draw, d: int = D, max_edges: int = 3, m: int = 1) -> Tree:
    budget = draw(st.integers(0, max_edges))

    def build(budget: int) -> tuple[Tree, int]:
        kids, used = [], 0
        if budget and draw(st.booleans()):
            kids.append((NOISE, leaf(d)))
            used += 1
        while used < budget and draw(st.booleans()):
            child, u = build(budget - used - 1)
            kids.append((kernel(draw(decs(d, m))), child))
            used += 1 + u
        return Tree(draw(decs(d, m)), tuple(kids)), used

    return build(budget)[0]


def lincombs(keys, max_terms: int = 3):
    coef = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.lists(st.tuples(keys, coef), max_size=max_terms).map(LinComb)


def monomials(d: int = D, max_degree: int = 3):
    var = st.one_of(st.integers(0, 3), decs(d).filter(any))
    return st.lists(var, max_size=max_degree).map(Monomial.of)
