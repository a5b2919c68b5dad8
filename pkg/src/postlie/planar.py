"""Planar decorated trees, left-most grafting and the quotient back to non-planar trees.

A :class:`PlanarTree` node carries no decoration; its children form an
ordered word of :data:`NOISE_SLOT`, :class:`XEdge` and :class:`PKernel`
letters.  Noises sit in the leading slots and new branches are inserted
immediately after them.  The quotient treats the remaining word as an
element of the envelope of the tree post-Lie algebra, so the relations
``X_i X_j = X_j X_i``, ``I I' = I' I`` and ``I_a(τ) X_i = X_i I_a(τ) + I_{a-e_i}(τ)``
are exactly its PBW rewriting rules.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Union

from .core import DecVec, LinComb, zero
from .envelope import Envelope
from .treealgebra import Planted, TreePostLie, XGen
from .trees import NOISE, Tree, kernel, unplant


@dataclass(frozen=True, order=True)
class NoiseSlot:
    """A terminal noise edge ``Ξ``."""

    def __repr__(self) -> str:
        return "Xi"


NOISE_SLOT = NoiseSlot()


@dataclass(frozen=True, order=True)
class XEdge:
    """A terminal edge standing for ``X_i``; nothing can be grafted on it."""

    i: int

    def __repr__(self) -> str:
        return f"X_{self.i}"


@dataclass(frozen=True, order=True)
class PKernel:
    """An ``I_a`` edge leading to a planar subtree."""

    a: DecVec
    child: PlanarTree

    def __repr__(self) -> str:
        return f"I{list(self.a)}({self.child!r})"


Letter = Union[NoiseSlot, XEdge, PKernel]


@dataclass(frozen=True, order=True)
class PlanarTree:
    """A node with an ordered list of outgoing edges, in dimension ``d``."""

    d: int
    children: tuple[Letter, ...] = ()

    def __post_init__(self):
        kids = tuple(self.children)
        seen_other = False
        for c in kids:
            if isinstance(c, NoiseSlot):
                if seen_other:
                    raise ValueError("noise edges must occupy the leading slots")
            else:
                seen_other = True
                if isinstance(c, XEdge) and not 0 <= c.i <= self.d:
                    raise IndexError(f"X_{c.i} out of range for d={self.d}")
                if isinstance(c, PKernel) and (len(c.a) != self.d + 1 or c.child.d != self.d):
                    raise ValueError("dimension mismatch in planar tree")
        object.__setattr__(self, "children", kids)

    @property
    def n_noise(self) -> int:
        return sum(isinstance(c, NoiseSlot) for c in self.children)

    def n_edges(self) -> int:
        return sum(1 + (c.child.n_edges() if isinstance(c, PKernel) else 0) for c in self.children)

    def __repr__(self) -> str:
        return "[" + " ".join(map(repr, self.children)) + "]"


# The inputs of left grafting: an X-edge or a planted planar tree I_a(τ).
PlanarGen = Union[XEdge, PKernel]


def _insert(sigma: PlanarGen, node: PlanarTree) -> PlanarTree:
    k = node.n_noise
    return PlanarTree(node.d, node.children[:k] + (sigma,) + node.children[k:])


def left_graft(sigma: PlanarGen, tau: PlanarTree | XEdge) -> LinComb[PlanarTree]:
    """Insert ``σ`` just right of the noises at every vertex of ``τ``, root included.

    An X-edge target gives zero: nothing is grafted on top of the ``X_i``.
    """
    if isinstance(tau, XEdge):
        return LinComb()
    terms = [(_insert(sigma, tau), 1)]
    for j, c in enumerate(tau.children):
        if isinstance(c, PKernel):
            for sub, coef in left_graft(sigma, c.child):
                kids = tau.children[:j] + (PKernel(c.a, sub),) + tau.children[j + 1:]
                terms.append((PlanarTree(tau.d, kids), coef))
    return LinComb(terms)


def left_post(sigma: PlanarGen, tau: PlanarGen) -> LinComb[PKernel]:
    """``σ ▷̂_l τ`` on planted planar trees and X-edges; the planted root is skipped."""
    if isinstance(tau, XEdge):
        return LinComb()
    return left_graft(sigma, tau.child).map_keys(lambda t: PKernel(tau.a, t))


# --- conversions -------------------------------------------------------------

def to_planar(t: Tree) -> PlanarTree:
    """Planar representative of a non-planar tree: noises, then X-edges by index, then branches."""
    kids: list[Letter] = [NOISE_SLOT for e, _ in t.children if e.is_noise]
    for i, k in enumerate(t.dec):
        kids += [XEdge(i)] * k
    kids += [PKernel(e.dec, to_planar(c)) for e, c in t.children if not e.is_noise]
    return PlanarTree(t.d, tuple(kids))


def to_planar_gen(g) -> PlanarGen:
    """``X_i`` or ``I_a(τ)`` (as generator or planted tree) in planar form."""
    if isinstance(g, XGen):
        return XEdge(g.i)
    if isinstance(g, Planted):
        return PKernel(g.a, to_planar(g.tree))
    if isinstance(g, Tree):
        a, inner = unplant(g)
        return PKernel(a, to_planar(inner))
    raise TypeError(f"not a generator: {g!r}")


class _Quotient:
    """Per-dimension envelope used to rewrite children words."""

    _cache: dict[int, Envelope] = {}

    @classmethod
    def env(cls, d: int) -> Envelope:
        if d not in cls._cache:
            cls._cache[d] = Envelope(TreePostLie(d))
        return cls._cache[d]


Strategy = Callable[[Envelope, tuple], set]


def _leftmost(env: Envelope, word: tuple) -> set:
    return {env.normal_form(word)}


def _all_orders(env: Envelope, word: tuple) -> set:
    return env.all_normal_forms(word)


def _node_from_word(d: int, n_noise: int, word: tuple) -> Tree:
    k, forest = _Quotient.env(d).split(word)
    kids = [(NOISE, Tree(zero(d)))] * n_noise + [(kernel(g.a), g.tree) for g in forest]
    return Tree(k, tuple(kids))


def _normal_forms(t: PlanarTree, strategy: Strategy) -> set[LinComb]:
    env = _Quotient.env(t.d)
    per_letter: list[list[LinComb]] = []
    for c in t.children:
        if isinstance(c, NoiseSlot):
            continue
        if isinstance(c, XEdge):
            per_letter.append([LinComb.single(XGen(c.i))])
        else:
            per_letter.append([nf.map_keys(lambda s, a=c.a: Planted(a, s)) for nf in _normal_forms(c.child, strategy)])
    out: set[LinComb] = set()
    for choice in itertools.product(*per_letter):
        # expand the product of sums letter by letter, trying every strategy outcome per word
        words = [((), 1)]
        for lc in choice:
            words = [(w + (g,), c * cg) for w, c in words for g, cg in lc]
        options = [[(c, nf) for nf in strategy(env, w)] for w, c in words]
        for combo in itertools.product(*options):
            total = LinComb.sum(nf * c for c, nf in combo)
            out.add(total.map_keys(lambda w: _node_from_word(t.d, t.n_noise, w)))
    return out


def planar_normalize(t: PlanarTree) -> LinComb[Tree]:
    """Image of a planar tree in the non-planar basis: X-edges moved left, then read as decorations."""
    (res,) = _normal_forms(t, _leftmost)
    return res


def planar_normal_forms(t: PlanarTree) -> set[LinComb]:
    """Every result reachable by some rewriting order; a singleton when the system is confluent."""
    return _normal_forms(t, _all_orders)


def normalize_gen(g: PlanarGen) -> LinComb:
    """``X_i`` or ``I_a`` of the normalised subtree, as tree post-Lie generators."""
    if isinstance(g, XEdge):
        return LinComb.single(XGen(g.i))
    return planar_normalize(g.child).map_keys(lambda s: Planted(g.a, s))


@dataclass(frozen=True)
class LeftEquivReport:
    sigma: object
    tau: object
    via_planar: LinComb
    via_post: LinComb

    @property
    def difference(self) -> LinComb:
        return self.via_planar - self.via_post

    @property
    def ok(self) -> bool:
        return not self.difference


def check_left_equiv(sigma: PlanarGen, tau: PlanarGen, d: int | None = None) -> LeftEquivReport:
    """Compare the planar route ``σ ▷̂_l τ`` then quotient, with ``▷̂`` on the quotient images.

    ``d`` is only needed when both arguments are X-edges.
    """
    d = _dim(sigma, tau) if d is None else d
    planar = left_post(sigma, tau).map(normalize_gen)
    alg = TreePostLie(d)
    direct = alg.post_lin(normalize_gen(sigma), normalize_gen(tau))
    return LeftEquivReport(sigma, tau, planar, direct)


def _dim(*gens: PlanarGen) -> int:
    for g in gens:
        if isinstance(g, PKernel):
            return g.child.d
    raise ValueError("dimension cannot be inferred from X-edges alone")


def planar_leaf(d: int, noise: bool = False) -> PlanarTree:
    return PlanarTree(d, (NOISE_SLOT,) if noise else ())


def x_edge_tree(d: int, i: int, noise: bool = True) -> PlanarTree:
    """``Ξ X_i`` as a planar node: the noise, then one X-edge."""
    return PlanarTree(d, ((NOISE_SLOT,) if noise else ()) + (XEdge(i),))


__all__ = [
    "NOISE_SLOT", "NoiseSlot", "XEdge", "PKernel", "PlanarTree", "left_graft", "left_post",
    "to_planar", "to_planar_gen", "planar_normalize", "planar_normal_forms", "normalize_gen",
    "check_left_equiv", "LeftEquivReport", "planar_leaf", "x_edge_tree",
]
