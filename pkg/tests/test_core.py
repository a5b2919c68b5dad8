from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from postlie.core import (
    DimensionError,
    LinComb,
    binom,
    box,
    check_dim,
    check_scaling,
    factorial,
    leq,
    parabolic,
    snorm,
    unit,
    vadd,
    vsub,
    zero,
)

from strategies import decs, lincombs

keys = st.sampled_from("abcde")


def test_vectors():
    assert zero(2) == (0, 0, 0)
    assert unit(1, 2) == (0, 1, 0)
    assert vadd((1, 2), (3, 0)) == (4, 2)
    assert vsub((1, 2), (1, 3)) is None
    assert vsub((2, 2), (1, 0)) == (1, 2)
    assert leq((0, 1), (1, 1)) and not leq((2, 0), (1, 1))
    with pytest.raises(IndexError):
        unit(3, 1)
    with pytest.raises(DimensionError):
        vadd((1,), (1, 2))
    with pytest.raises(DimensionError):
        check_dim((1,), (1, 2))


def test_box_order_and_size():
    assert list(box((1, 2))) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert list(box(())) == [()]


@given(decs(m=3), decs(m=3))
def test_binomial_vandermonde_row(n, l):
    # Σ_{l <= n} C(n, l) = 2^{|n|}
    assert sum(binom(n, k) for k in box(n)) == 2 ** sum(n)
    if not leq(l, n):
        assert binom(n, l) == 0


def test_factorial_and_scaling():
    assert factorial((3, 2)) == 12
    assert parabolic(2) == (2, 1, 1)
    assert snorm((1, 3), parabolic(1)) == 5
    with pytest.raises(ValueError):
        check_scaling((0, 1))


def test_lincomb_basics():
    x = LinComb([("a", 1), ("b", 2), ("a", -1)])
    assert x == LinComb.single("b", 2)
    assert len(x) == 1 and "a" not in x and x["a"] == 0
    assert (x * Fraction(1, 2))["b"] == 1
    assert x - x == 0 and not (x - x)
    assert LinComb.sum([x, x]) == 2 * x
    with pytest.raises(TypeError):
        LinComb.single("a", 0.5)


@given(lincombs(keys), lincombs(keys), lincombs(keys))
def test_lincomb_is_a_vector_space(x, y, w):
    assert x + y == y + x
    assert (x + y) + w == x + (y + w)
    assert x - x == LinComb()
    assert (x + y) * 3 == x * 3 + y * 3
    assert hash(x + y) == hash(y + x)


@given(lincombs(keys))
def test_lincomb_map_is_linear(x):
    f = lambda k: LinComb([(k.upper(), 2), ("z", 1)])
    assert x.map(f) == LinComb.sum(f(k) * c for k, c in x)
    assert x.map_keys(str.upper).map_keys(str.lower) == x
