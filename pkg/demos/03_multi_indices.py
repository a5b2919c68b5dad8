"""Multi-indices as the image of noise-at-every-node trees.

Run with ``python3 demos/03_multi_indices.py``.
"""

from __future__ import annotations

import itertools

from postlie.morphism import T0PostLie, planted_t0, psi, psi_hat, psi_hat_lin
from postlie.multiindex import ONE, Deriv, MultiIndexPostLie, Partial, apply_word, z
from postlie.treealgebra import XGen
from postlie.trees import T0Tree

leaf = T0Tree()
cherry = T0Tree(((1, 0),), (leaf, leaf))
print("Psi(bare node) =", psi(leaf))
print("Psi(Xi X^(1,0) I(Xi) I(Xi)) =", psi(cherry))

# d_i and D(n) fail to commute; the defect is n_i D(n - e_i)
m = z(1) * z((1, 0))
left = apply_word([Partial(0), Deriv(ONE, (1, 0))], m, 1)
right = apply_word([Deriv(ONE, (1, 0)), Partial(0)], m, 1)
print("d_0 D(1,0) - D(1,0) d_0 on", m, "=", left - right, "  D(0,0) gives", apply_word([Deriv(ONE, (0, 0))], m, 1))

# Psi-hat carries the tree post-Lie product to the multi-index one
gens = [XGen(0), XGen(1), planted_t0((1, 0), leaf), planted_t0((0, 1), cherry), planted_t0((1, 1), T0Tree((), (leaf,)))]
t_alg, m_alg = T0PostLie(1), MultiIndexPostLie(1)
agree = all(
    psi_hat_lin(t_alg.post(x, y)) == m_alg.post_lin(psi_hat(x), psi_hat(y))
    for x, y in itertools.product(gens, repeat=2)
)
print(f"morphism check on {len(gens) ** 2} generator pairs:", agree)
