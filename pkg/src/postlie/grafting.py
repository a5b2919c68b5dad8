"""Grafting, deformed grafting and decoration-raising operators on decorated trees."""

from __future__ import annotations

from math import factorial, prod
from typing import Iterable

from .core import DecVec, LinComb, binom, box, check_dim, is_zero, unit, vadd, vsub
from .trees import (
    Path,
    T0Tree,
    Tree,
    eligible_paths,
    kernel,
    node_at,
    planted,
    replace_at,
    t0_node_at,
    t0_paths,
    t0_replace_at,
    unplant,
    with_child,
    with_dec,
)


def graft_at(sigma: Tree, a: DecVec, tau: Tree, v: Path) -> Tree:
    node = node_at(tau, v)
    return replace_at(tau, v, with_child(node, kernel(a), sigma))


def graft(sigma: Tree, a: DecVec, tau: Tree) -> LinComb[Tree]:
    """``σ ↷^a τ``: graft ``σ`` by an ``I_a`` edge onto every non-noise vertex of ``τ``."""
    check_dim(sigma.dec, a, tau.dec)
    return LinComb((graft_at(sigma, a, tau, v), 1) for v in eligible_paths(tau))


def deformed_graft(sigma: Tree, a: DecVec, tau: Tree) -> LinComb[Tree]:
    """``σ ↷̂^a τ = Σ_v Σ_ℓ C(n_v, ℓ) σ ↷_v^{a-ℓ} (↑_v^{-ℓ} τ)``.

    Only ``ℓ <= min(a, n_v)`` contributes; every other term vanishes.
    """
    check_dim(sigma.dec, a, tau.dec)
    terms = []
    for v in eligible_paths(tau):
        node = node_at(tau, v)
        bound = tuple(min(x, y) for x, y in zip(a, node.dec))
        for l in box(bound):
            new = Tree(vsub(node.dec, l), node.children + ((kernel(vsub(a, l)), sigma),), node.mark)
            terms.append((replace_at(tau, v, new), binom(node.dec, l)))
    return LinComb(terms)


def up(i: int, tau: Tree, restrict: Iterable[Path] | None = None) -> LinComb[Tree]:
    """``↑^i τ``: add ``e_i`` to one vertex decoration, summed over eligible vertices.

    With ``restrict`` the sum runs over those vertices only (``↑^i_{N}``).
    """
    e = unit(i, tau.d)
    paths = list(eligible_paths(tau))
    if restrict is not None:
        allowed = set(restrict)
        paths = [p for p in paths if p in allowed]
    terms = []
    for v in paths:
        node = node_at(tau, v)
        terms.append((replace_at(tau, v, with_dec(node, vadd(node.dec, e))), 1))
    return LinComb(terms)


def up_marked(i: int, tau: Tree) -> LinComb[Tree]:
    return up(i, tau, [p for p in eligible_paths(tau) if node_at(tau, p).mark])


def _decompositions(k: DecVec, slots: int):
    if slots == 0:
        if is_zero(k):
            yield ()
        return
    if slots == 1:
        yield (k,)
        return
    for first in box(k):
        for rest in _decompositions(vsub(k, first), slots - 1):
            yield (first,) + rest


def _add_at(t: Tree, additions: dict[Path, DecVec], prefix: Path = ()) -> Tree:
    # Rebuild in one pass so every path refers to the original child order.
    kids = tuple(
        (e, c if e.is_noise else _add_at(c, additions, prefix + (j,)))
        for j, (e, c) in enumerate(t.children)
    )
    dec = vadd(t.dec, additions[prefix]) if prefix in additions else t.dec
    return Tree(dec, kids, t.mark)


def _multinomial(k: DecVec, parts: tuple[DecVec, ...]) -> int:
    return prod(factorial(ki) for ki in k) // prod(factorial(x) for part in parts for x in part)


def up_multi(k: DecVec, tau: Tree, multinomial: bool = False) -> LinComb[Tree]:
    """``↑̃^k`` on the marked vertices: all ways of writing ``k = Σ_v k_v`` over marks.

    Each decomposition counts once.  With ``multinomial=True`` it is weighted
    by ``k! / ∏_v k_v!``, which is what ``X^k`` as a word of the envelope
    produces; both agree whenever every component of ``k`` is at most 1.
    """
    check_dim(k, tau.dec)
    marks = [p for p in eligible_paths(tau) if node_at(tau, p).mark]
    terms = []
    for parts in _decompositions(tuple(k), len(marks)):
        w = _multinomial(k, parts) if multinomial else 1
        terms.append((_add_at(tau, dict(zip(marks, parts))), w))
    return LinComb(terms)


def planted_pre_lie(p: Tree, q: Tree, deformed: bool = False) -> LinComb[Tree]:
    """``I_a(σ) ↷ I_b(τ) = I_b(σ ↷^a τ)`` (or the deformed variant)."""
    a, sigma = unplant(p)
    b, tau = unplant(q)
    inner = deformed_graft(sigma, a, tau) if deformed else graft(sigma, a, tau)
    return inner.map_keys(lambda t: planted(b, t))


# --- trees with noise at every node ---------------------------------------------

def graft_T0(sigma: T0Tree, tau: T0Tree) -> LinComb[T0Tree]:
    """Plain grafting by a zero-decorated edge at every node."""
    terms = []
    for v in t0_paths(tau):
        node = t0_node_at(tau, v)
        terms.append((t0_replace_at(tau, v, T0Tree(node.monomials, node.children + (sigma,))), 1))
    return LinComb(terms)


def deformed_graft_T0(sigma: T0Tree, a: DecVec, tau: T0Tree) -> LinComb[T0Tree]:
    """Deformed grafting on noise-at-every-node trees.

    For ``a = 0`` this is plain grafting.  Otherwise one factor ``X^a`` is
    removed from a node and ``σ`` is grafted there; a node carrying ``X^a``
    with multiplicity ``p`` contributes ``p`` times.
    """
    a = tuple(a)
    if is_zero(a):
        return graft_T0(sigma, tau)
    terms = []
    for v in t0_paths(tau):
        node = t0_node_at(tau, v)
        count = node.monomials.count(a)
        if not count:
            continue
        mons = list(node.monomials)
        mons.remove(a)
        terms.append((t0_replace_at(tau, v, T0Tree(mons, node.children + (sigma,))), count))
    return LinComb(terms)


def up_T0(i: int, tau: T0Tree, d: int) -> LinComb[T0Tree]:
    """``↑^i`` on multiset decorations: add a new factor ``X_i`` or raise one ``X^{ℓ_j}``."""
    e = unit(i, d)
    terms = []
    for v in t0_paths(tau):
        node = t0_node_at(tau, v)
        terms.append((t0_replace_at(tau, v, T0Tree(node.monomials + (e,), node.children)), 1))
        for j, m in enumerate(node.monomials):
            mons = node.monomials[:j] + (vadd(m, e),) + node.monomials[j + 1:]
            terms.append((t0_replace_at(tau, v, T0Tree(mons, node.children)), 1))
    return LinComb(terms)
