from __future__ import annotations

import json

import pytest

from postlie.oracle import (
    SUITE_NAMES,
    EnumParams,
    enumerate_mi_generators,
    enumerate_planar_trees,
    enumerate_t0_trees,
    enumerate_trees,
    hopf_mi_generators,
    hopf_tree_generators,
    run_suite,
    trees_with_edges,
    tuples_with_budget,
)

SMALL = EnumParams(maxEdges=1, samples=5)


def test_tree_counts():
    p = EnumParams()
    # 4 decorations at d = 1; one edge: a noise leaf or a decorated kernel branch
    assert len(trees_with_edges(p, 0)) == 4
    assert len(trees_with_edges(p, 1)) == 4 * (1 + 4 * 4)
    assert len(trees_with_edges(p, 1, d=0)) == 2 * (1 + 2 * 2)
    assert enumerate_trees(SMALL) == list(trees_with_edges(SMALL, 0)) + list(trees_with_edges(SMALL, 1))


def test_enumeration_is_deterministic_and_canonical():
    a = enumerate_trees(SMALL.with_(maxEdges=2))
    assert a == enumerate_trees(SMALL.with_(maxEdges=2))
    assert len(set(a)) == len(a)
    assert len(enumerate_t0_trees(SMALL)) == len(set(enumerate_t0_trees(SMALL)))
    assert len(set(enumerate_planar_trees(0, 3, 1))) == len(enumerate_planar_trees(0, 3, 1))


def test_budgeted_tuples():
    sizes = lambda s: [s] * (s + 1)
    tuples = list(tuples_with_budget(sizes, 2, 2))
    assert all(sum(t) <= 2 for t in tuples)
    assert len(tuples) == 1 + 2 + 2 + 3 + 3 + 4


def test_generator_sets():
    assert len(hopf_tree_generators(1)) >= 10 and len(hopf_mi_generators(1)) >= 10
    gens = enumerate_mi_generators(EnumParams(), degree=0)
    assert sum(1 for g in gens if type(g).__name__ == "Partial") == 2


@pytest.mark.parametrize("name", sorted(set(SUITE_NAMES) - {"hopf-trees", "hopf-mi", "infrastructure", "operator-commutation"}))
def test_suites_pass_on_small_bounds(name):
    rep = run_suite(name, SMALL)
    assert rep.passed, rep.failures[:3]
    assert rep.cases > 0


def test_report_json_is_stable():
    a = run_suite("postlie-mi", SMALL.with_(maxSupport=1)).to_json(timing=False)
    b = run_suite("postlie-mi", SMALL.with_(maxSupport=1)).to_json(timing=False)
    assert a == b
    assert json.loads(a)["passed"] is True


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    with pytest.raises(ValueError):
        EnumParams(maxEdges=-1)
