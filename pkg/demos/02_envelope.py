"""The envelope of the tree post-Lie algebra: PBW words, the product * and the coproduct.

Run with ``python3 demos/02_envelope.py``.
"""

from __future__ import annotations

from postlie.cli import Expr, format_element
from postlie.envelope import Envelope
from postlie.treealgebra import Planted, TreePostLie, XGen, verify_identification
from postlie.trees import Tree, kernel, noise_tree

d = 1
env = Envelope(TreePostLie(d))
Xi = noise_tree(d)
x0, g = XGen(0), Planted((1, 0), Xi)

word = lambda A: format_element(Expr("word", A, d))

# moving X_0 to the left costs a lowered planting
print("I_(1,0)(Xi) X_0 =", word(env.normal_form((g, x0))))

# * differs from concatenation by the action of the left factor on the right one
A, B = env.gen(x0), env.gen(g)
print("X_0 * I_(1,0)(Xi) =", word(env.star(A, B)))
print("I_(1,0)(Xi) * X_0 =", word(env.star(B, A)))

comm = env.star(A, B) - env.star(B, A)
print("commutator equals the derived bracket:", comm == env.from_lin(env.alg.derived_bracket(x0, g)))

# the coproduct is the shuffle one and * respects it
D = env.coproduct(env.star(A, B))
print("Delta(A*B) = Delta A * Delta B:", D == env.tensor_star(env.coproduct(A), env.coproduct(B)))

# acting with a PBW word on a planted tree reproduces the recentering product
tau = Tree((0, 0), ((kernel((0, 1)), Xi),))
rep = verify_identification(env, (x0, XGen(1), g), tau, (1, 1))
print(f"identification on X_0 X_1 I_(1,0)(Xi) acting on I_(1,1)(tau): {rep.ok} ({len(rep.via_star2)} trees)")
