"""Grafting and its deformation on small decorated trees.

Run with ``python3 demos/01_grafting.py``.
"""

from __future__ import annotations

from postlie.cli import Expr, format_element
from postlie.core import LinComb
from postlie.grafting import deformed_graft, graft, up
from postlie.trees import NOISE, Tree, kernel, leaf, noise_tree


def show(label: str, x) -> None:
    print(f"{label:<34} {format_element(Expr('tree', x, 1))}")


# τ = X^(0,1) Ξ I_(1,0)(X^(1,1)): three vertices, one of them the noise leaf
tau = Tree((0, 1), ((NOISE, leaf(1)), (kernel((1, 0)), leaf(1, (1, 1)))))
sigma = noise_tree(1)

show("tau", LinComb.single(tau))
# the noise leaf never receives a branch, so only two terms appear
show("Xi grafted along I_(1,1)", graft(sigma, (1, 1), tau))
# the deformed version also moves decoration from the receiving vertex to the edge
show("deformed grafting", deformed_graft(sigma, (1, 1), tau))
show("raise X_0 on every vertex", up(0, tau))

# lower terms of the deformation: each loses exactly what the vertex gave up
extra = deformed_graft(sigma, (1, 1), tau) - graft(sigma, (1, 1), tau)
print(f"\n{len(extra)} correction terms, each with fewer polynomial decorations overall")
