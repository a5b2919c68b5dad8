from __future__ import annotations

from hypothesis import given, strategies as st

from postlie.core import LinComb, box, unit, vsub
from postlie.grafting import (
    deformed_graft,
    deformed_graft_T0,
    graft,
    planted_pre_lie,
    up,
    up_marked,
    up_multi,
    up_T0,
)
from postlie.trees import T0Tree, Tree, eligible_paths, kernel, leaf, mark_all, noise_tree, planted, strip_marks

from strategies import decs, trees

G = lambda x, a, y: LinComb.sum(graft(s, a, t) * (cs * ct) for s, cs in x for t, ct in y)


def test_graft_counts_vertices():
    tau = Tree((0, 0), ((kernel((0, 0)), noise_tree(1)),))
    out = graft(leaf(1), (1, 0), tau)
    assert sum(out[k] for k in out.keys()) == len(list(eligible_paths(tau))) == 2


@given(trees(max_edges=2), trees(max_edges=2), trees(max_edges=2), decs(), decs())
def test_multi_pre_lie(t1, t2, t3, a, b):
    x, y, w = (LinComb.single(t) for t in (t1, t2, t3))
    lhs = G(G(x, a, y), b, w) - G(x, a, G(y, b, w))
    rhs = G(G(y, b, x), a, w) - G(y, b, G(x, a, w))
    assert lhs == rhs


@given(trees(max_edges=2), trees(max_edges=2), decs())
def test_deformed_graft_at_zero_decoration_is_plain(s, t, a):
    assert deformed_graft(s, (0, 0), t) == graft(s, (0, 0), t)
    # the leading term of the deformation is the plain graft
    diff = deformed_graft(s, a, t) - graft(s, a, t)
    assert all(k.n_edges() == s.n_edges() + t.n_edges() + 1 for k in diff.keys())


@given(trees(max_edges=2), trees(max_edges=2), decs(m=2), st.integers(0, 1))
def test_prop_non_com(sigma, tau, a, i):
    lhs = deformed_graft(sigma, a, mark_all(tau)).map(lambda t: up_marked(i, t)).map_keys(strip_marks)
    rhs = up(i, tau).map(lambda t: deformed_graft(sigma, a, t))
    low = vsub(a, unit(i, 1))
    if low is not None:
        rhs = rhs - deformed_graft(sigma, low, tau)
    assert lhs == rhs


@given(trees(max_edges=2), trees(max_edges=2), decs(), st.integers(0, 1))
def test_up_is_a_derivation_of_grafting(sigma, tau, a, i):
    lhs = graft(sigma, a, tau).map(lambda t: up(i, t))
    rhs = up(i, sigma).map(lambda s: graft(s, a, tau)) + up(i, tau).map(lambda t: graft(sigma, a, t))
    assert lhs == rhs


def test_up_multi_weights():
    tau = mark_all(Tree((0, 0), ((kernel((0, 0)), leaf(1)),)))
    plain = up_multi((2, 0), tau)
    weighted = up_multi((2, 0), tau, multinomial=True)
    assert len(plain) == 3 and sorted(plain[k] for k in plain.keys()) == [1, 1, 1]
    assert sorted(weighted[k] for k in weighted.keys()) == [1, 1, 2]
    for k in box((1, 1)):
        assert up_multi(k, tau) == up_multi(k, tau, multinomial=True)


def test_planted_products():
    p, q = planted((1, 0), leaf(1)), planted((0, 1), leaf(1, (1, 0)))
    assert planted_pre_lie(p, q) == graft(leaf(1), (1, 0), leaf(1, (1, 0))).map_keys(lambda t: planted((0, 1), t))
    assert len(planted_pre_lie(p, q, deformed=True)) == 2


def test_t0_operations():
    t = T0Tree(((1, 0),), (T0Tree(),))
    assert len(up_T0(0, t, 1)) == 3
    assert deformed_graft_T0(T0Tree(), (1, 0), t) == LinComb.single(T0Tree((), (T0Tree(), T0Tree())))
    assert deformed_graft_T0(T0Tree(), (0, 1), t) == LinComb()
    assert len(deformed_graft_T0(T0Tree(), (0, 0), t)) == 2
