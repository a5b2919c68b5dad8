"""Left-most grafting on planar trees, read back through the quotient.

Run with ``python3 demos/04_planar.py``.
"""

from __future__ import annotations

from postlie.cli import Expr, format_element
from postlie.planar import NOISE_SLOT, PKernel, PlanarTree, XEdge, left_graft, planar_normalize
from postlie.grafting import deformed_graft
from postlie.trees import Tree, noise_tree

d = 1
xi = PlanarTree(d, (NOISE_SLOT,))
target = PlanarTree(d, (NOISE_SLOT, XEdge(0)))          # Ξ X_0 in planar form
branch = PKernel((1, 1), xi)                             # I_(1,1)(Ξ)

(grafted, _), = left_graft(branch, target).items()
print("left-most graft:", grafted)

quotient = planar_normalize(grafted)
print("in the quotient:", format_element(Expr("tree", quotient, d)))

direct = deformed_graft(noise_tree(d), (1, 1), Tree((1, 0), noise_tree(d).children))
print("deformed grafting gives the same:", quotient == direct)
