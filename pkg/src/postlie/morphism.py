"""The dictionary ``Ψ`` from noise-at-every-node trees to multi-indices, and its extension ``Ψ̂``."""

from __future__ import annotations

from fractions import Fraction
from math import factorial as _fact

from .core import DecVec, LinComb, factorial
from .envelope import Envelope, PostLieAlgebra, Word
from .grafting import deformed_graft_T0, up_T0
from .multiindex import Deriv, Monomial, MultiIndexPostLie, Partial, z
from .treealgebra import Planted, XGen, lowered_planted
from .trees import T0Tree


def psi(tau: T0Tree) -> LinComb[Monomial]:
    """``Ψ(τ) = (k_1+k_2)! z_{k_1+k_2} ∏_j ℓ_j! z_{ℓ_j} ∏_i Ψ(τ_i)``.

    A bare node (``k_1 = k_2 = 0``) maps to ``0! z_0 = z_0``.
    """
    k = tau.arity()
    coef = _fact(k)
    mono = z(k)
    for m in tau.monomials:
        coef *= factorial(m)
        mono = mono * z(m)
    for child in tau.children:
        (cm, cc), = psi(child).items()
        coef *= cc
        mono = mono * cm
    return LinComb.single(mono, coef)


def psi_hat(g) -> LinComb:
    """``Ψ̂(I_a(σ)) = Ψ(σ) D^(a) / a!`` and ``Ψ̂(X_i) = ∂_i``."""
    if isinstance(g, XGen):
        return LinComb.single(Partial(g.i))
    if isinstance(g, Planted) and isinstance(g.tree, T0Tree):
        return psi(g.tree).map_keys(lambda m: Deriv(m, g.a)) * Fraction(1, factorial(g.a))
    raise TypeError(f"Ψ̂ is defined on X_i and planted noise-at-every-node trees, not {g!r}")


def psi_hat_lin(x: LinComb) -> LinComb:
    return x.map(psi_hat)


class T0PostLie(PostLieAlgebra):
    """Planted noise-at-every-node trees with ``X_0..X_d``, using the multiset ``↑^i``."""

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
            return up_T0(g.i, h.tree, self.d).map_keys(lambda t: Planted(h.a, t))
        return deformed_graft_T0(g.tree, g.a, h.tree).map_keys(lambda t: Planted(h.a, t))


def psi_hat_word(word: Word, target: Envelope) -> LinComb:
    out = target.unit()
    for g in word:
        out = target.mul(out, target.from_lin(psi_hat(g)))
    return out


def psi_hat_env(A: LinComb, target: Envelope | None = None, d: int = 1) -> LinComb:
    """Letter-wise image of a tree envelope element, renormalised in ``U(L_0)``."""
    target = target or Envelope(MultiIndexPostLie(d))
    return A.map(lambda w: psi_hat_word(w, target))


def planted_t0(a: DecVec, tau: T0Tree) -> Planted:
    return Planted(tuple(a), tau)
