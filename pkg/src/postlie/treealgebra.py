"""The post-Lie algebra spanned by planted decorated trees and the ``X_i``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable

from .core import DecVec, LinComb, unit, vsub
from .envelope import Envelope, PostLieAlgebra, Word
from .grafting import deformed_graft, up, up_multi
from .trees import Tree, mark_all, planted, strip_marks, unplant


@dataclass(frozen=True, order=True)
class XGen:
    """The coordinate generator ``X_i``."""

    i: int

    def __repr__(self) -> str:
        return f"X_{self.i}"


@dataclass(frozen=True, order=True)
class Planted:
    """The planted tree ``I_a(tree)``; ``tree`` may be a :class:`Tree` or a ``T0Tree``."""

    a: DecVec
    tree: Hashable

    def __repr__(self) -> str:
        return f"I{list(self.a)}({self.tree!r})"

    def as_tree(self) -> Tree:
        return planted(self.a, self.tree)

    @classmethod
    def from_tree(cls, t: Tree) -> Planted:
        a, inner = unplant(t)
        return cls(a, inner)


def lowered_planted(p: Planted, i: int) -> LinComb:
    """``I_{a-e_i}`` of the same tree, or zero when ``a_i = 0``."""
    lower = vsub(p.a, unit(i, len(p.a) - 1))
    return LinComb() if lower is None else LinComb.single(Planted(lower, p.tree))


class TreePostLie(PostLieAlgebra):
    """``(V, [., .]_0, ▷̂)`` on planted decorated trees and ``X_0, …, X_d``."""

    def __init__(self, d: int = 1):
        self.d = d

    def is_x(self, g) -> bool:
        return isinstance(g, XGen)

    def x_index(self, g) -> int:
        return g.i

    def bracket0(self, g, h) -> LinComb:
        if isinstance(g, Planted) and isinstance(h, XGen):
            return lowered_planted(g, h.i)
        if isinstance(g, XGen) and isinstance(h, Planted):
            return -lowered_planted(h, g.i)
        return LinComb()

    def post(self, g, h) -> LinComb:
        if isinstance(h, XGen):
            return LinComb()
        if isinstance(g, XGen):
            # the planted root is never raised
            return up(g.i, h.tree).map_keys(lambda t: Planted(h.a, t))
        return deformed_graft(g.tree, g.a, h.tree).map_keys(lambda t: Planted(h.a, t))


def post_product(u, v, d: int | None = None) -> LinComb:
    dim = d if d is not None else _dim_of(u, v)
    return TreePostLie(dim).post(u, v)


def bracket0_trees(u, v, d: int | None = None) -> LinComb:
    dim = d if d is not None else _dim_of(u, v)
    return TreePostLie(dim).bracket0(u, v)


def _dim_of(*gens) -> int:
    for g in gens:
        if isinstance(g, Planted):
            return len(g.a) - 1
    raise ValueError("dimension cannot be inferred from X generators alone; pass d")


def star2(env: Envelope, sigma: Word, tau: Tree, b: DecVec, multinomial: bool = False) -> LinComb[Tree]:
    """``σ ⋆₂ τ`` for a PBW word ``σ = X^k ∏ I_{a_i}(σ_i)``.

    The forest acts on ``I_b(τ)`` through the envelope recursion with the
    vertices of ``τ`` marked; the polynomial part ``X^k`` is then spread over
    the marked vertices in every possible way.
    """
    k, forest = env.split(tuple(sigma))
    target = env.gen(Planted(tuple(b), mark_all(tau)))
    grafted = env.triangle(LinComb.single(forest), target)
    terms = []
    for word, c in grafted:
        if len(word) != 1 or not isinstance(word[0], Planted):
            raise AssertionError(f"forest action left the planted span: {word!r}")
        for t, c2 in up_multi(k, word[0].tree, multinomial):
            terms.append((strip_marks(t), c * c2))
    return LinComb(terms)


@dataclass(frozen=True)
class IdentificationReport:
    sigma: Word
    tau: Tree
    b: DecVec
    via_star2: LinComb
    via_triangle: LinComb

    @property
    def difference(self) -> LinComb:
        return self.via_star2 - self.via_triangle

    @property
    def ok(self) -> bool:
        return not self.difference


def verify_identification(
    env: Envelope, sigma: Word, tau: Tree, b: DecVec, multinomial: bool = False
) -> IdentificationReport:
    """Compare ``I_b(σ ⋆₂ τ)`` with ``σ ▷̂ I_b(τ)`` computed in the envelope."""
    b = tuple(b)
    lhs = star2(env, sigma, tau, b, multinomial).map_keys(lambda t: Planted(b, t))
    rhs_words = env.triangle(LinComb.single(tuple(sigma)), env.gen(Planted(b, tau)))
    rhs = LinComb((w[0], c) for w, c in rhs_words if len(w) == 1)
    if len(rhs) != len(rhs_words):
        raise AssertionError("σ ▷̂ I_b(τ) produced words of length != 1")
    return IdentificationReport(tuple(sigma), tau, b, lhs, rhs)
