"""Decorated non-planar rooted trees and the noise-at-every-node trees used for multi-indices.

A :class:`Tree` is stored canonically: its children are kept sorted, so two
trees compare equal exactly when they are isomorphic as decorated non-planar
trees. Vertices are addressed by *paths*, tuples of child positions in the
sorted child list, which are only meaningful for the tree they came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .core import DecVec, DimensionError, Scaling, check_dim, snorm, vadd, zero

Path = tuple[int, ...]

NOISE_KIND = 0
KERNEL_KIND = 1


@dataclass(frozen=True, order=True)
class Edge:
    """Edge decoration: the noise ``Ξ`` (kind 0) or a kernel ``I_a`` (kind 1)."""

    kind: int
    dec: DecVec = ()

    @property
    def is_noise(self) -> bool:
        return self.kind == NOISE_KIND

    def __repr__(self) -> str:
        return "Xi" if self.is_noise else f"I{list(self.dec)}"


NOISE = Edge(NOISE_KIND, ())


def kernel(a: DecVec) -> Edge:
    return Edge(KERNEL_KIND, tuple(a))


@dataclass(frozen=True, order=True)
class Tree:
    """A decorated rooted tree ``X^dec Ξ^m ∏ I_a(child)``.

    ``mark`` flags a vertex as belonging to a distinguished vertex set; it is
    used internally to remember where the vertices of a target tree ended up
    after grafting.  Public results never carry marks.
    """

    dec: DecVec
    children: tuple[tuple[Edge, Tree], ...] = ()
    mark: bool = False
    _hash: int = field(default=0, init=False, compare=False, repr=False)

    def __post_init__(self):
        dec = tuple(self.dec)
        kids = tuple(sorted((e, c) for e, c in self.children))
        for e, c in kids:
            if len(c.dec) != len(dec):
                raise DimensionError("child decoration has a different dimension")
            if e.is_noise:
                if c.children or any(c.dec) or c.mark:
                    raise ValueError("noise edges must end in an undecorated, unmarked leaf")
            elif len(e.dec) != len(dec):
                raise DimensionError("edge decoration has a different dimension")
        object.__setattr__(self, "dec", dec)
        object.__setattr__(self, "children", kids)
        object.__setattr__(self, "_hash", hash((dec, kids, self.mark)))

    def __hash__(self) -> int:
        return self._hash

    @property
    def d(self) -> int:
        return len(self.dec) - 1

    def __repr__(self) -> str:
        parts = [f"X^{list(self.dec)}" if any(self.dec) else ""]
        parts += [repr(e) if e.is_noise else f"{e!r}({c!r})" for e, c in self.children]
        body = " ".join(p for p in parts if p) or "1"
        return f"{body}{'*' if self.mark else ''}"

    def n_edges(self) -> int:
        return sum(1 + c.n_edges() for _, c in self.children)

    def n_noise(self) -> int:
        return sum((1 if e.is_noise else c.n_noise()) for e, c in self.children)


def leaf(d: int, dec: DecVec | None = None) -> Tree:
    return Tree(zero(d) if dec is None else tuple(dec))


def one(d: int) -> Tree:
    """The empty tree ``X^0``."""
    return Tree(zero(d))


def noise_tree(d: int) -> Tree:
    """``Ξ``: a zero-decorated root with a single noise edge."""
    return Tree(zero(d), ((NOISE, Tree(zero(d))),))


def planted(a: DecVec, tau: Tree) -> Tree:
    """``I_a(τ)``: a new zero-decorated root joined to ``τ`` by a kernel edge."""
    check_dim(a, tau.dec)
    return Tree(zero(tau.d), ((kernel(a), tau),))


def is_planted(t: Tree) -> bool:
    return (not any(t.dec) and len(t.children) == 1 and not t.children[0][0].is_noise)


def unplant(t: Tree) -> tuple[DecVec, Tree]:
    if not is_planted(t):
        raise ValueError(f"{t!r} is not a planted tree")
    e, c = t.children[0]
    return e.dec, c


def tree_product(t1: Tree, t2: Tree) -> Tree:
    """Identify the two roots: decorations add, child multisets are united."""
    return Tree(vadd(t1.dec, t2.dec), t1.children + t2.children, t1.mark or t2.mark)


def grading(t: Tree, s: Scaling) -> int:
    """Sum over kernel edges of ``|a|_s``; noise edges count zero."""
    return sum((0 if e.is_noise else snorm(e.dec, s)) + grading(c, s) for e, c in t.children)


def canonicalize(raw) -> Tree:
    """Canonical tree from a :class:`Tree` or a nested ``(dec, [(edge, child), ...])``.

    Children may come in any order; the result is independent of it.
    """
    if isinstance(raw, Tree):
        dec, kids, mark = raw.dec, raw.children, raw.mark
    else:
        dec, kids = raw[0], raw[1]
        mark = bool(raw[2]) if len(raw) > 2 else False
    return Tree(tuple(dec), tuple((e, canonicalize(c)) for e, c in kids), mark)


# --- vertex addressing -------------------------------------------------------

def node_at(t: Tree, path: Path) -> Tree:
    for i in path:
        t = t.children[i][1]
    return t


def eligible_paths(t: Tree, prefix: Path = ()) -> Iterator[Path]:
    """Every vertex except the leaves hanging from noise edges."""
    yield prefix
    for i, (e, c) in enumerate(t.children):
        if not e.is_noise:
            yield from eligible_paths(c, prefix + (i,))


def marked_paths(t: Tree) -> list[Path]:
    return [p for p in eligible_paths(t) if node_at(t, p).mark]


def replace_at(t: Tree, path: Path, new: Tree) -> Tree:
    if not path:
        return new
    i, rest = path[0], path[1:]
    e, c = t.children[i]
    kids = t.children[:i] + ((e, replace_at(c, rest, new)),) + t.children[i + 1:]
    return Tree(t.dec, kids, t.mark)


def with_dec(node: Tree, dec: DecVec) -> Tree:
    return Tree(dec, node.children, node.mark)


def with_child(node: Tree, edge: Edge, child: Tree) -> Tree:
    return Tree(node.dec, node.children + ((edge, child),), node.mark)


def mark_all(t: Tree) -> Tree:
    """Mark every vertex that is not a noise leaf."""
    return Tree(t.dec, tuple((e, c if e.is_noise else mark_all(c)) for e, c in t.children), True)


def strip_marks(t: Tree) -> Tree:
    return Tree(t.dec, tuple((e, strip_marks(c)) for e, c in t.children), False)


# --- trees with a noise at every node and multiset polynomial decorations ------

@dataclass(frozen=True, order=True)
class T0Tree:
    """``Ξ ∏_j X^{ℓ_j} ∏_i I(τ_i)`` with every edge decorated ``(I, 0)``.

    ``monomials`` is the multiset of the nonzero exponents ``ℓ_j``; it is not
    collapsed into a single sum of exponents.
    """

    monomials: tuple[DecVec, ...] = ()
    children: tuple[T0Tree, ...] = ()
    _hash: int = field(default=0, init=False, compare=False, repr=False)

    def __post_init__(self):
        mons = tuple(sorted(tuple(m) for m in self.monomials))
        kids = tuple(sorted(self.children))
        if any(not any(m) for m in mons):
            raise ValueError("X^0 is not a monomial factor")
        check_dim(*mons)
        object.__setattr__(self, "monomials", mons)
        object.__setattr__(self, "children", kids)
        object.__setattr__(self, "_hash", hash((mons, kids)))

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        parts = ["Xi"] + [f"X^{list(m)}" for m in self.monomials] + [f"I({c!r})" for c in self.children]
        return " ".join(parts)

    def arity(self) -> int:
        return len(self.monomials) + len(self.children)

    def n_edges(self) -> int:
        return sum(1 + c.n_edges() for c in self.children)


def t0_paths(t: T0Tree, prefix: Path = ()) -> Iterator[Path]:
    yield prefix
    for i, c in enumerate(t.children):
        yield from t0_paths(c, prefix + (i,))


def t0_node_at(t: T0Tree, path: Path) -> T0Tree:
    for i in path:
        t = t.children[i]
    return t


def t0_replace_at(t: T0Tree, path: Path, new: T0Tree) -> T0Tree:
    if not path:
        return new
    i, rest = path[0], path[1:]
    kids = t.children[:i] + (t0_replace_at(t.children[i], rest, new),) + t.children[i + 1:]
    return T0Tree(t.monomials, kids)


def t0_to_tree(t: T0Tree, d: int) -> Tree:
    """Forget the multiset structure: node decoration becomes the sum of the ``ℓ_j``."""
    dec = zero(d)
    for m in t.monomials:
        dec = vadd(dec, m)
    kids: list[tuple[Edge, Tree]] = [(NOISE, Tree(zero(d)))]
    kids += [(kernel(zero(d)), t0_to_tree(c, d)) for c in t.children]
    return Tree(dec, tuple(kids))

