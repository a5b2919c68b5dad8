"""Worked examples from the text, as (computed, expected) pairs.

Symbolic decorations in the displays are instantiated with concrete vectors
in dimension ``d = 1``; each expected value is written out by hand from the
display, never produced by the function under test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .core import LinComb, unit, zero
from .grafting import deformed_graft, graft, planted_pre_lie, up
from .morphism import T0PostLie, psi, psi_hat, psi_hat_lin
from .multiindex import ONE, Deriv, Monomial, MultiIndexPostLie, Partial, derivation_action, matrix_coeff, z
from .planar import NOISE_SLOT, PKernel, PlanarTree, XEdge, left_graft, planar_normalize
from .treealgebra import Planted, XGen
from .trees import NOISE, T0Tree, Tree, kernel, leaf, noise_tree, planted


@dataclass(frozen=True)
class Golden:
    name: str
    computed: Callable[[], object]
    expected: object

    def check(self) -> tuple[bool, object]:
        got = self.computed()
        return got == self.expected, got


def _lc(*pairs) -> LinComb:
    return LinComb(pairs)


def _node(dec, *kids) -> Tree:
    return Tree(tuple(dec), tuple(kids))


def _noise(d: int = 1):
    return (NOISE, leaf(d))


def _k(a, child):
    return (kernel(a), child)


# concrete values for the symbols α, β, γ, a, b of the displays
D = 1
ALPHA, BETA, GAMMA = (1, 0), (1, 1), (0, 1)
A, B = (1, 1), (1, 0)
I = 0


def golden_cases() -> list[Golden]:
    d0 = 0
    o = (0,)
    bullet = leaf(d0)
    chain = _node(o, _k(o, bullet))
    cherry = _node(o, _k(o, bullet), _k(o, bullet))
    star3 = _node(o, _k(o, bullet), _k(o, bullet), _k(o, bullet))
    cases = [
        Golden(
            "grafting onto a cherry",
            lambda: graft(bullet, o, cherry),
            _lc((star3, 1), (_node(o, _k(o, bullet), _k(o, chain)), 2)),
        )
    ]

    # left grafting of a bullet onto the planar tree [chain, leaf]
    pl = PlanarTree(d0)
    pk = lambda t: PKernel(o, t)
    pchain = PlanarTree(d0, (pk(pl),))
    tau_p = PlanarTree(d0, (pk(pchain), pk(pl)))
    cases.append(
        Golden(
            "left grafting of a bullet",
            lambda: left_graft(pk(pl), tau_p),
            _lc(
                (PlanarTree(d0, (pk(pl), pk(pchain), pk(pl))), 1),
                (PlanarTree(d0, (pk(PlanarTree(d0, (pk(pl), pk(pl)))), pk(pl))), 1),
                (PlanarTree(d0, (pk(PlanarTree(d0, (pk(pchain),))), pk(pl))), 1),
                (PlanarTree(d0, (pk(pchain), pk(pchain))), 1),
            ),
        )
    )

    # τ = X^γ Ξ I_b(X^β) receiving •^α along an a-edge: never on the noise leaf
    x_alpha = leaf(D, ALPHA)
    target = _node(GAMMA, _noise(), _k(B, leaf(D, BETA)))
    cases.append(
        Golden(
            "grafting with noise excluded",
            lambda: graft(x_alpha, A, target),
            _lc(
                (_node(GAMMA, _noise(), _k(B, leaf(D, BETA)), _k(A, x_alpha)), 1),
                (_node(GAMMA, _noise(), _k(B, _node(BETA, _k(A, x_alpha)))), 1),
            ),
        )
    )

    # planted products: I_a(X^α) against I_b(X^β Ξ); the planted root is skipped
    inner = _node(BETA, _noise())
    p_sigma, p_tau = planted(A, x_alpha), planted(B, inner)
    grafted = planted(B, _node(BETA, _noise(), _k(A, x_alpha)))
    cases.append(Golden("planted grafting", lambda: planted_pre_lie(p_sigma, p_tau), _lc((grafted, 1))))

    # deformed: extra terms Σ_{ℓ≠0} C(β,ℓ) I_b(X^{β-ℓ} Ξ I_{a-ℓ}(X^α)); here β = a = (1,1)
    extra = [
        (planted(B, _node((0, 1), _noise(), _k((0, 1), x_alpha))), 1),
        (planted(B, _node((1, 0), _noise(), _k((1, 0), x_alpha))), 1),
        (planted(B, _node((0, 0), _noise(), _k((0, 0), x_alpha))), 1),
    ]
    cases.append(
        Golden("deformed planted grafting", lambda: planted_pre_lie(p_sigma, p_tau, deformed=True), _lc((grafted, 1), *extra))
    )

    # ↑^i on X^γ Ξ I_b(X^β): both non-noise vertices get e_i
    e = unit(I, D)
    cases.append(
        Golden(
            "raising a decoration",
            lambda: up(I, target),
            _lc(
                (_node((1, 1), _noise(), _k(B, leaf(D, BETA))), 1),
                (_node(GAMMA, _noise(), _k(B, leaf(D, (2, 1)))), 1),
            ),
        )
    )

    # §4: I_a(Ξ) left-grafted on Ξ X_i, then the quotient
    xi_p = PlanarTree(D, (NOISE_SLOT,))
    tau_x = PlanarTree(D, (NOISE_SLOT, XEdge(I)))
    grafted_p = PlanarTree(D, (NOISE_SLOT, PKernel(A, xi_p), XEdge(I)))
    cases.append(Golden("left-most grafting in the planar quotient", lambda: left_graft(PKernel(A, xi_p), tau_x), _lc((grafted_p, 1))))
    Xi = noise_tree(D)
    two_terms = _lc(
        (_node(e, _noise(), _k(A, Xi)), 1),
        (_node(zero(D), _noise(), _k((0, 1), Xi)), 1),
    )
    cases.append(Golden("relation applied to the grafted tree", lambda: planar_normalize(grafted_p), two_terms))
    cases.append(Golden("direct deformed grafting agrees", lambda: deformed_graft(Xi, A, _node(e, _noise())), two_terms))
    normal_p = PlanarTree(D, (NOISE_SLOT, XEdge(I), PKernel(A, xi_p)))
    cases.append(
        Golden("X-edges read as a node decoration", lambda: planar_normalize(normal_p), _lc((_node(e, _noise(), _k(A, Xi)), 1)))
    )

    # multi-index derivations
    d00 = Deriv(ONE, (0, 0))
    n = (1, 0)
    cases += [
        Golden("D(0) raises an arity", lambda: derivation_action(d00, z(1), D), _lc((z(2), 2))),
        Golden("D(n) removes z_n", lambda: derivation_action(Deriv(ONE, n), z(n), D), _lc((ONE, 1))),
        Golden("d_i shifts a label", lambda: derivation_action(Partial(1), z(n), D), _lc((z((1, 1)), 1))),
        Golden("matrix entry of D(n)", lambda: matrix_coeff(Deriv(ONE, n), z(n), ONE, D), 1),
        Golden("matrix entry of D(0)", lambda: matrix_coeff(d00, z(1), z(2), D), 2),
    ]

    # Ψ and the two displayed identities for Ψ̂
    leaf0 = T0Tree()
    sigma0 = T0Tree((), (leaf0,))
    cases += [
        Golden("psi of a bare node", lambda: psi(leaf0), _lc((z(0), 1))),
        Golden("psi of Xi I(Xi)", lambda: psi(sigma0), _lc((Monomial.of([1, 0]), 1))),
        Golden("psi of a decorated node", lambda: psi(T0Tree(((2, 0),))), _lc((Monomial.of([1, (2, 0)]), 2))),
    ]
    alg_t, alg_m = T0PostLie(D), MultiIndexPostLie(D)
    g = Planted(A, sigma0)
    cases.append(
        Golden(
            "psi-hat of X_i acting",
            lambda: psi_hat_lin(alg_t.post(XGen(I), g)),
            alg_m.post_lin(psi_hat(XGen(I)), psi_hat(g)),
        )
    )
    cases.append(
        Golden(
            "psi-hat of the structural bracket",
            lambda: psi_hat_lin(alg_t.bracket0(g, XGen(I))),
            _lc((Deriv(Monomial.of([1, 0]), (0, 1)), Fraction(1, 1))),
        )
    )
    return cases


def suite_golden_figures(p, report) -> None:
    for case in golden_cases():
        ok, got = case.check()
        report.record(ok, figure=case.name, got=got, expected=case.expected)
