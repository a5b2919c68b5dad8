"""Post-Lie algebras and their universal envelopes in PBW normal form.

Every algebra handled here has a two-sorted basis: an *X part* (the
coordinate derivations ``X_i`` or ``∂_i``) and an *abelian part* (planted
trees or ``z^γ D^(n)``).  The structural bracket ``[., .]_0`` vanishes inside
each sort, so the PBW basis of the envelope consists of words that list the
X generators first, by index, followed by a sorted multiset of abelian
generators.  Words are plain tuples of generators.
"""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Generic, Hashable, Iterable, Sequence, TypeVar

from .core import LinComb, bilinear

G = TypeVar("G", bound=Hashable)
Word = tuple
EnvElement = LinComb  # LinComb[Word]
TensorElement = LinComb  # LinComb[tuple[Word, Word]]

EMPTY: Word = ()


class PostLieAlgebra(ABC, Generic[G]):
    """Bracket ``[., .]_0`` and post-Lie product on a two-sorted basis."""

    d: int

    @abstractmethod
    def is_x(self, g: G) -> bool: ...

    @abstractmethod
    def x_index(self, g: G) -> int: ...

    @abstractmethod
    def bracket0(self, g: G, h: G) -> LinComb[G]: ...

    @abstractmethod
    def post(self, g: G, h: G) -> LinComb[G]: ...

    def sort_key(self, g: G):
        return (0, self.x_index(g)) if self.is_x(g) else (1, g)

    # linear extensions
    def bracket0_lin(self, x: LinComb[G], y: LinComb[G]) -> LinComb[G]:
        return bilinear(self.bracket0, x, y)

    def post_lin(self, x: LinComb[G], y: LinComb[G]) -> LinComb[G]:
        return bilinear(self.post, x, y)

    def derived_bracket(self, g: G, h: G) -> LinComb[G]:
        """``[[x, y]] = [x, y]_0 + x ▷ y - y ▷ x``."""
        return self.bracket0(g, h) + self.post(g, h) - self.post(h, g)


@dataclass(frozen=True)
class PostLieReport:
    """Both post-Lie axioms evaluated on one triple; each difference is zero on success."""

    x: object
    y: object
    z: object
    ident1_lhs: LinComb
    ident1_rhs: LinComb
    ident2_lhs: LinComb
    ident2_rhs: LinComb

    @property
    def ident1_diff(self) -> LinComb:
        return self.ident1_lhs - self.ident1_rhs

    @property
    def ident2_diff(self) -> LinComb:
        return self.ident2_lhs - self.ident2_rhs

    @property
    def ok(self) -> bool:
        return not self.ident1_diff and not self.ident2_diff


def check_post_lie(alg: PostLieAlgebra, x, y, z) -> PostLieReport:
    X, Y, Z = (LinComb.single(g) for g in (x, y, z))
    br, pr = alg.bracket0_lin, alg.post_lin

    def assoc(a, b, c):
        return pr(a, pr(b, c)) - pr(pr(a, b), c)

    return PostLieReport(
        x, y, z,
        ident1_lhs=pr(X, br(Y, Z)),
        ident1_rhs=br(pr(X, Y), Z) + br(Y, pr(X, Z)),
        ident2_lhs=pr(br(X, Y), Z),
        ident2_rhs=assoc(X, Y, Z) - assoc(Y, X, Z),
    )


def derived_bracket(alg: PostLieAlgebra, x, y) -> LinComb:
    return alg.derived_bracket(x, y)


class Envelope(Generic[G]):
    """``U(g_0)`` with concatenation, the coproduct, the extended ``▷`` and ``*``.

    Results of the recursive operations are memoised per instance; all
    returned values are immutable.
    """

    def __init__(self, alg: PostLieAlgebra[G]):
        self.alg = alg
        self._nf: dict[Word, LinComb] = {}
        self._tri: dict[tuple[Word, Word], LinComb] = {}

    # -- basis helpers -------------------------------------------------------
    def key(self, g: G):
        return self.alg.sort_key(g)

    def is_normal(self, word: Word) -> bool:
        return all(self.key(a) <= self.key(b) for a, b in zip(word, word[1:]))

    def inversions(self, word: Word) -> list[int]:
        return [p for p in range(len(word) - 1) if self.key(word[p]) > self.key(word[p + 1])]

    def split(self, word: Word) -> tuple[tuple[int, ...], Word]:
        """PBW word as (exponents of ``X_0..X_d``, multiset of abelian generators)."""
        exps = [0] * (self.alg.d + 1)
        rest = []
        for g in word:
            if self.alg.is_x(g):
                exps[self.alg.x_index(g)] += 1
            else:
                rest.append(g)
        return tuple(exps), tuple(rest)

    def gen(self, g: G, coef=1) -> EnvElement:
        return LinComb.single((g,), coef)

    def unit(self) -> EnvElement:
        return LinComb.single(EMPTY)

    def from_lin(self, x: LinComb[G]) -> EnvElement:
        return x.map_keys(lambda g: (g,))

    # -- rewriting -----------------------------------------------------------
    def rewrite_step(self, word: Word, p: int) -> LinComb:
        """``…ab… = …ba… + …[a, b]_0…`` at an inversion ``p``."""
        a, b = word[p], word[p + 1]
        head, tail = word[:p], word[p + 2:]
        terms = [(head + (b, a) + tail, 1)]
        for g, c in self.alg.bracket0(a, b):
            terms.append((head + (g,) + tail, c))
        return LinComb(terms)

    def normal_form(self, word: Sequence[G]) -> EnvElement:
        """PBW normal form of a word, rewriting the left-most inversion first."""
        word = tuple(word)
        hit = self._nf.get(word)
        if hit is not None:
            return hit
        inv = self.inversions(word)
        if not inv:
            res = LinComb.single(word)
        else:
            res = self.rewrite_step(word, inv[0]).map(self.normal_form)
        self._nf[word] = res
        return res

    def normal_form_by(self, word: Sequence[G], choose: Callable[[Word, list[int]], int]) -> EnvElement:
        """Normal form with a caller-chosen inversion at every step (no memoisation)."""
        word = tuple(word)
        inv = self.inversions(word)
        if not inv:
            return LinComb.single(word)
        p = choose(word, inv)
        return self.rewrite_step(word, p).map(lambda w: self.normal_form_by(w, choose))

    def all_normal_forms(self, word: Sequence[G]) -> set[LinComb]:
        """Every result reachable by some sequence of rewriting choices."""
        word = tuple(word)
        inv = self.inversions(word)
        if not inv:
            return {LinComb.single(word)}
        out: set[LinComb] = set()
        for p in inv:
            step = self.rewrite_step(word, p)
            options = [[(c, r) for r in self.all_normal_forms(w)] for w, c in step]
            for combo in itertools.product(*options):
                out.add(LinComb.sum(r * c for c, r in combo))
        return out

    # -- algebra ---------------------------------------------------------------
    def mul(self, A: EnvElement, B: EnvElement) -> EnvElement:
        """Concatenation product of ``U(g_0)``."""
        acc = []
        for wa, ca in A:
            for wb, cb in B:
                for w, c in self.normal_form(wa + wb):
                    acc.append((w, ca * cb * c))
        return LinComb(acc)

    def word(self, *gens: G) -> EnvElement:
        return self.normal_form(gens)

    def counit(self, A: EnvElement):
        return A[EMPTY]

    def coproduct_word(self, word: Word) -> TensorElement:
        n = len(word)
        terms = []
        for mask in range(1 << n):
            left = tuple(word[i] for i in range(n) if mask >> i & 1)
            right = tuple(word[i] for i in range(n) if not mask >> i & 1)
            terms.append(((left, right), 1))
        return LinComb(terms)

    def coproduct(self, A: EnvElement) -> TensorElement:
        """Shuffle coproduct, the multiplicative extension of ``Δx = x⊗1 + 1⊗x``."""
        return A.map(self.coproduct_word)

    def _tri_words(self, wa: Word, wb: Word) -> LinComb:
        key = (wa, wb)
        hit = self._tri.get(key)
        if hit is not None:
            return hit
        if not wa:
            res = LinComb.single(wb)
        elif not wb:
            res = LinComb()
        elif len(wb) == 1:
            if len(wa) == 1:
                res = self.from_lin(self.alg.post(wa[0], wb[0]))
            else:
                # x A ▷ y = x ▷ (A ▷ y) - (x ▷ A) ▷ y
                x = self.gen(wa[0])
                rest = LinComb.single(wa[1:])
                y = LinComb.single(wb)
                res = self.triangle(x, self.triangle(rest, y)) - self.triangle(self.triangle(x, rest), y)
        else:
            # A ▷ yC = Σ (A' ▷ y)(A'' ▷ C)
            y, c = wb[:1], wb[1:]
            parts = []
            for (a1, a2), k in self.coproduct_word(wa):
                left = self._tri_words(a1, y)
                if not left:
                    continue
                parts.append(self.mul(left, self._tri_words(a2, c)) * k)
            res = LinComb.sum(parts)
        self._tri[key] = res
        return res

    def triangle(self, A: EnvElement, B: EnvElement) -> EnvElement:
        """The post-Lie product extended to ``U ⊗ U``."""
        acc = []
        for wa, ca in A:
            for wb, cb in B:
                for w, c in self._tri_words(wa, wb):
                    acc.append((w, ca * cb * c))
        return LinComb(acc)

    def star(self, A: EnvElement, B: EnvElement) -> EnvElement:
        """``A * B = Σ A' (A'' ▷ B)``."""
        parts = []
        for wa, ca in A:
            for (a1, a2), k in self.coproduct_word(wa):
                parts.append(self.mul(LinComb.single(a1), self.triangle(LinComb.single(a2), B)) * (ca * k))
        return LinComb.sum(parts)

    def induced_rep(self, x: G, A: EnvElement) -> EnvElement:
        """``ρ(x)(A) = x ▷ A + x A``."""
        X = self.gen(x)
        return self.triangle(X, A) + self.mul(X, A)

    def induced_rep_lin(self, x: LinComb[G], A: EnvElement) -> EnvElement:
        X = self.from_lin(x)
        return self.triangle(X, A) + self.mul(X, A)

    # -- tensors ---------------------------------------------------------------
    def tensor_star(self, S: TensorElement, T: TensorElement) -> TensorElement:
        """Componentwise ``*`` on ``U ⊗ U``."""
        acc = []
        for (s1, s2), cs in S:
            for (t1, t2), ct in T:
                left = self.star(LinComb.single(s1), LinComb.single(t1))
                if not left:
                    continue
                right = self.star(LinComb.single(s2), LinComb.single(t2))
                for w1, c1 in left:
                    for w2, c2 in right:
                        acc.append(((w1, w2), cs * ct * c1 * c2))
        return LinComb(acc)

    def tensor_swap(self, T: TensorElement) -> TensorElement:
        return T.map_keys(lambda p: (p[1], p[0]))

    def coassoc_sides(self, A: EnvElement) -> tuple[LinComb, LinComb]:
        """``(Δ⊗id)Δ A`` and ``(id⊗Δ)Δ A`` as combinations of word triples."""
        left, right = [], []
        for (a1, a2), c in self.coproduct(A):
            for (b1, b2), k in self.coproduct_word(a1):
                left.append(((b1, b2, a2), c * k))
            for (b1, b2), k in self.coproduct_word(a2):
                right.append(((a1, b1, b2), c * k))
        return LinComb(left), LinComb(right)


def words_up_to(gens: Iterable, max_len: int, env: Envelope) -> list[Word]:
    """All PBW words of length ``<= max_len`` over ``gens`` (multisets in normal order)."""
    gens = sorted(set(gens), key=env.key)
    out: list[Word] = []
    for n in range(max_len + 1):
        out.extend(itertools.combinations_with_replacement(gens, n))
    return out
