"""Enumeration of small objects and the named verification suites.

Every suite is deterministic for fixed :class:`EnumParams`.  Families that
are too large to sweep exhaustively at full dimension are covered in tiers:
an exhaustive sweep in which the tuple shares a joint edge budget, an
exhaustive sweep of the one-dimensional (``d = 0``) projection up to the full
edge bound, and a seeded random sample from the full family.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .core import LinComb, box, factorial, is_zero, unit, vsub, zero
from .envelope import Envelope, check_post_lie, words_up_to
from .grafting import deformed_graft, graft, up, up_marked, up_T0
from .morphism import T0PostLie, psi, psi_hat, psi_hat_env, psi_hat_lin
from .multiindex import (
    ONE,
    Deriv,
    Monomial,
    MultiIndexPostLie,
    Partial,
    apply_word,
    arity_grade,
    derivation_action,
    matrix_coeff,
    mi_bracket,
    z,
)
from .planar import (
    NOISE_SLOT,
    PKernel,
    PlanarTree,
    XEdge,
    check_left_equiv,
    planar_normal_forms,
    to_planar_gen,
)
from .treealgebra import Planted, TreePostLie, XGen, verify_identification
from .trees import NOISE, T0Tree, Tree, kernel, leaf, mark_all, noise_tree, strip_marks


@dataclass(frozen=True)
class EnumParams:
    """Bounds for enumeration; ``samples`` sizes the random tier of each suite."""

    d: int = 1
    maxEdges: int = 3
    maxDecComponent: int = 1
    maxNoise: int = 1
    maxArity: int = 3
    maxSupport: int = 2
    seed: int = 0
    samples: int = 400

    def __post_init__(self):
        for name, v in asdict(self).items():
            if name != "seed" and v < 0:
                raise ValueError(f"{name} must be >= 0")

    def with_(self, **kw) -> EnumParams:
        return EnumParams(**(asdict(self) | kw))


@dataclass
class SuiteReport:
    name: str
    params: EnumParams
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, **inputs) -> None:
        self.cases += 1
        if not ok:
            self.failures.append({k: repr(v) for k, v in inputs.items()})

    def to_json(self, timing: bool = True) -> str:
        data = {
            "suite": self.name,
            "params": asdict(self.params),
            "cases": self.cases,
            "passed": self.passed,
            "failures": self.failures,
            "notes": self.notes,
        }
        if timing:
            data["wall_time"] = round(self.wall_time, 3)
        return json.dumps(data, sort_keys=True)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.name}: {status}, {self.cases} cases, {self.wall_time:.2f}s"


# --- trees -----------------------------------------------------------------------

def _decs(d: int, m: int) -> list[tuple[int, ...]]:
    return list(box((m,) * (d + 1)))


@lru_cache(maxsize=None)
def _trees_exact(d: int, edges: int, max_dec: int, max_noise: int) -> tuple[Tree, ...]:
    out: set[Tree] = set()
    for dec in _decs(d, max_dec):
        for nn in range(min(max_noise, edges) + 1):
            noise = [(NOISE, leaf(d))] * nn
            for kids in _branch_multisets(d, edges - nn, max_dec, max_noise):
                out.add(Tree(dec, tuple(noise) + kids))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def _branches(d: int, edges: int, max_dec: int, max_noise: int) -> tuple[tuple, ...]:
    """Kernel branches ``(edge, child)`` using exactly ``edges`` edges."""
    if edges < 1:
        return ()
    return tuple(
        (kernel(a), c) for c in _trees_exact(d, edges - 1, max_dec, max_noise) for a in _decs(d, max_dec)
    )


def _branch_multisets(d: int, edges: int, max_dec: int, max_noise: int) -> Iterator[tuple]:
    """Multisets of kernel branches whose edge counts add up to ``edges``."""
    if edges == 0:
        yield ()
        return
    pool = [(b, size) for size in range(1, edges + 1) for b in _branches(d, size, max_dec, max_noise)]

    def rec(start: int, left: int, acc: list):
        if left == 0:
            yield tuple(acc)
            return
        for j in range(start, len(pool)):
            b, size = pool[j]
            if size <= left:
                acc.append(b)
                yield from rec(j, left - size, acc)
                acc.pop()

    yield from rec(0, edges, [])


def trees_with_edges(p: EnumParams, edges: int, d: int | None = None) -> tuple[Tree, ...]:
    return _trees_exact(p.d if d is None else d, edges, p.maxDecComponent, p.maxNoise)


def enumerate_trees(p: EnumParams, d: int | None = None) -> list[Tree]:
    """All canonical trees with at most ``maxEdges`` edges, by edge count then canonical order."""
    out: list[Tree] = []
    for e in range(p.maxEdges + 1):
        out.extend(trees_with_edges(p, e, d))
    return out


def tuples_with_budget(buckets: Callable[[int], Sequence], arity: int, budget: int) -> Iterator[tuple]:
    """All ``arity``-tuples whose edge counts add up to at most ``budget``."""
    for sizes in itertools.product(range(budget + 1), repeat=arity):
        if sum(sizes) <= budget:
            yield from itertools.product(*(buckets(s) for s in sizes))


def random_tree(rng: random.Random, d: int, max_edges: int, max_dec: int, max_noise: int) -> Tree:
    budget = rng.randint(0, max_edges)

    def build(budget: int) -> tuple[Tree, int]:
        dec = tuple(rng.randint(0, max_dec) for _ in range(d + 1))
        kids = []
        nn = rng.randint(0, min(max_noise, budget))
        kids += [(NOISE, leaf(d))] * nn
        budget -= nn
        while budget > 0 and rng.random() < 0.7:
            child, used = build(budget - 1)
            kids.append((kernel(tuple(rng.randint(0, max_dec) for _ in range(d + 1))), child))
            budget -= 1 + used
        return Tree(dec, tuple(kids)), sum(1 + c.n_edges() for _, c in kids)

    return build(budget)[0]


def tree_generators(p: EnumParams, edges: int, d: int | None = None) -> list:
    """Post-Lie generators using exactly ``edges`` edges (the planting edge included)."""
    dd = p.d if d is None else d
    if edges == 0:
        return [XGen(i) for i in range(dd + 1)]
    return [Planted(a, t) for t in trees_with_edges(p, edges - 1, dd) for a in _decs(dd, p.maxDecComponent)]


def hopf_tree_generators(d: int = 1) -> list:
    """Ten generators mixing every deformation ingredient."""
    Xi = noise_tree(d)
    e = [unit(i, d) for i in range(d + 1)]
    full = tuple(1 for _ in range(d + 1))
    trees = [
        Xi,
        Tree(e[0], ((NOISE, leaf(d)),)),
        leaf(d, full),
        Tree(zero(d), ((NOISE, leaf(d)), (kernel(e[-1]), leaf(d)))),
    ]
    gens = [XGen(i) for i in range(d + 1)]
    gens += [Planted(a, Xi) for a in _decs(d, 1)]
    gens += [Planted(e[0], trees[1]), Planted(e[-1], trees[2]), Planted(zero(d), trees[3]), Planted(full, trees[1])]
    return gens[:max(10, d + 1 + 2 ** (d + 1))]


# --- planar trees ------------------------------------------------------------------

def enumerate_planar_trees(d: int, max_edges: int, max_dec: int, max_noise: int = 1) -> list[PlanarTree]:
    """Planar trees whose letters are noises (leading), X-edges and kernels, up to ``max_edges``."""

    @lru_cache(maxsize=None)
    def exact(edges: int) -> tuple[PlanarTree, ...]:
        out = []
        for nn in range(min(max_noise, edges) + 1):
            for word in words(edges - nn):
                out.append(PlanarTree(d, (NOISE_SLOT,) * nn + word))
        return tuple(out)

    @lru_cache(maxsize=None)
    def letters(edges: int) -> tuple:
        if edges == 1:
            return tuple(XEdge(i) for i in range(d + 1)) + tuple(
                PKernel(a, PlanarTree(d)) for a in _decs(d, max_dec)
            )
        return tuple(PKernel(a, c) for c in exact(edges - 1) for a in _decs(d, max_dec))

    @lru_cache(maxsize=None)
    def words(edges: int) -> tuple:
        if edges == 0:
            return ((),)
        out = []
        for first in range(1, edges + 1):
            for l in letters(first):
                for rest in words(edges - first):
                    out.append((l,) + rest)
        return tuple(out)

    return [t for e in range(max_edges + 1) for t in exact(e)]


# --- noise-at-every-node trees -----------------------------------------------------------

def enumerate_t0_trees(p: EnumParams, d: int | None = None) -> list[T0Tree]:
    dd = p.d if d is None else d
    monos = [m for m in _decs(dd, p.maxDecComponent) if not is_zero(m)]

    @lru_cache(maxsize=None)
    def exact(edges: int) -> tuple[T0Tree, ...]:
        out = set()
        for kids in _t0_children(edges):
            room = p.maxArity - len(kids)
            for k in range(max(room, -1) + 1):
                for ms in itertools.combinations_with_replacement(monos, k):
                    out.add(T0Tree(ms, kids))
        return tuple(sorted(out))

    def _t0_children(edges: int) -> Iterator[tuple]:
        if edges == 0:
            yield ()
            return
        pool = [(c, s) for s in range(1, edges + 1) for c in exact(s - 1)]

        def rec(start, left, acc):
            if left == 0:
                yield tuple(acc)
                return
            for j in range(start, len(pool)):
                c, s = pool[j]
                if s <= left:
                    yield from rec(j, left - s, acc + [c])

        yield from rec(0, edges, [])

    return [t for e in range(p.maxEdges + 1) for t in exact(e)]


# --- multi-indices ----------------------------------------------------------------

def mi_variables(p: EnumParams, d: int | None = None) -> list:
    dd = p.d if d is None else d
    return list(range(p.maxArity + 1)) + [n for n in _decs(dd, p.maxDecComponent) if not is_zero(n)]


def enumerate_monomials(variables: Sequence, max_degree: int) -> list[Monomial]:
    out = []
    for k in range(max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(len(variables)), k):
            out.append(Monomial.of([variables[j] for j in combo]))
    return out


def enumerate_mi_generators(p: EnumParams, degree: int | None = None, d: int | None = None) -> list:
    """``∂_i`` and every ``z^γ D^(n)`` with ``[γ] >= 0`` and ``|γ| <= maxSupport``.

    With ``degree`` set, only coefficients of exactly that total degree are listed.
    """
    dd = p.d if d is None else d
    gammas = enumerate_monomials(mi_variables(p, dd), p.maxSupport)
    if degree is not None:
        gammas = [g for g in gammas if g.degree() == degree]
    out: list = [Partial(i) for i in range(dd + 1)] if degree in (None, 0) else []
    out += [Deriv(g, n) for g in gammas if arity_grade(g) >= 0 for n in _decs(dd, p.maxDecComponent)]
    return out


def hopf_mi_generators(d: int = 1) -> list:
    n = _decs(d, 1)
    e0 = unit(0, d)
    return [Partial(i) for i in range(d + 1)] + [Deriv(ONE, m) for m in n] + [
        Deriv(z(0), n[-1]),
        Deriv(z(1), zero(d)),
        Deriv(Monomial.of([1, e0]), n[1]),
        Deriv(z(2), n[-1]),
    ]


# --- suites ------------------------------------------------------------------------

def _lin(x) -> LinComb:
    return LinComb.single(x)


def _lift(op: Callable) -> Callable:
    """Extend a basis operation in its tree arguments to linear combinations."""

    def lifted(x: LinComb, *rest) -> LinComb:
        *params, y = rest
        acc = []
        for s, cs in x:
            for t, ct in y:
                for r, cr in op(s, *params, t):
                    acc.append((r, cs * ct * cr))
        return LinComb(acc)

    return lifted


G = _lift(graft)
DG = _lift(deformed_graft)


def _up_lin(i: int, x: LinComb) -> LinComb:
    return x.map(lambda t: up(i, t))


def _tiers(report: SuiteReport, p: EnumParams, arity: int, check: Callable, slack: int, rotate: bool = False) -> None:
    """Run ``check`` on tree tuples in the three standard tiers.

    With ``rotate`` the full-dimension tuples on the outermost edge layer get a
    single decoration vector each, taken in turn from the suite's list
    (``pos`` is passed to ``check``); all inner layers see every vector.
    """
    full = lambda s: trees_with_edges(p, s)
    flat = lambda s: trees_with_edges(p, s, d=0)
    budget = max(p.maxEdges - slack, 0)
    n1 = n2 = n_rot = 0
    for tup in tuples_with_budget(full, arity, budget):
        pos = None
        if rotate and budget > 0 and sum(t.n_edges() for t in tup) == budget:
            pos, n_rot = n_rot, n_rot + 1
        check(report, tup, p.d, None, pos)
        n1 += 1
    for tup in tuples_with_budget(flat, arity, p.maxEdges):
        check(report, tup, 0)
        n2 += 1
    rng = random.Random(p.seed)
    for _ in range(p.samples):
        tup = tuple(random_tree(rng, p.d, p.maxEdges, p.maxDecComponent, p.maxNoise) for _ in range(arity))
        check(report, tup, p.d, rng)
    report.notes.update(exhaustive_full_dim=n1, exhaustive_d0=n2, sampled=p.samples, joint_budget=budget)
    if rotate:
        report.notes["rotated_decorations"] = n_rot


def _pick(options: list, pos: int | None) -> list:
    return options if pos is None else [options[pos % len(options)]]


def _small_vectors(d: int, m: int = 1) -> list:
    return [zero(d)] + [unit(i, d) for i in range(d + 1)] if m == 1 else _decs(d, m)


def suite_multi_pre_lie(p: EnumParams, r: SuiteReport) -> None:
    def check(r, tup, d, rng=None, pos=None):
        t1, t2, t3 = map(_lin, tup)
        pairs = itertools.product(_small_vectors(d), repeat=2)
        if rng is not None:
            pairs = [tuple(rng.choice(_small_vectors(d)) for _ in range(2))]
        for a, b in pairs:
            lhs = G(G(t1, a, t2), b, t3) - G(t1, a, G(t2, b, t3))
            rhs = G(G(t2, b, t1), a, t3) - G(t2, b, G(t1, a, t3))
            r.record(lhs == rhs, trees=tup, a=a, b=b)

    _tiers(r, p, 3, check, slack=2)


def suite_derivation(p: EnumParams, r: SuiteReport) -> None:
    def check(r, tup, d, rng=None, pos=None):
        sigma, tau = tup
        avs = _pick(_decs(d, p.maxDecComponent), pos) if rng is None else [tuple(rng.randint(0, p.maxDecComponent) for _ in range(d + 1))]
        for a in avs:
            for i in range(d + 1):
                g = graft(sigma, a, tau)
                lhs = _up_lin(i, g)
                rhs = G(up(i, sigma), a, _lin(tau)) + G(_lin(sigma), a, up(i, tau))
                right = graft(sigma, a, mark_all(tau)).map(lambda t: up_marked(i, t)).map_keys(strip_marks)
                ok = lhs == rhs and right == G(_lin(sigma), a, up(i, tau))
                r.record(ok, sigma=sigma, tau=tau, a=a, i=i)

    _tiers(r, p, 2, check, slack=1, rotate=True)


def suite_prop_non_com(p: EnumParams, r: SuiteReport) -> None:
    def check(r, tup, d, rng=None, pos=None):
        sigma, tau = tup
        avs = _pick(_decs(d, 2), pos) if rng is None else [tuple(rng.randint(0, 2) for _ in range(d + 1))]
        marked = mark_all(tau)
        for a in avs:
            for i in range(d + 1):
                lhs = deformed_graft(sigma, a, marked).map(lambda t: up_marked(i, t)).map_keys(strip_marks)
                rhs = DG(_lin(sigma), a, up(i, tau))
                low = vsub(a, unit(i, d))
                if low is not None:
                    rhs = rhs - deformed_graft(sigma, low, tau)
                r.record(lhs == rhs, sigma=sigma, tau=tau, a=a, i=i)

    _tiers(r, p, 2, check, slack=1, rotate=True)


def _post_lie_sweep(r: SuiteReport, alg, triples: Iterable, classify: Callable) -> None:
    hits: dict[str, int] = {}
    for x, y, w in triples:
        rep = check_post_lie(alg, x, y, w)
        key = classify(x, y, w)
        hits[key] = hits.get(key, 0) + 1
        r.record(rep.ok, x=x, y=y, z=w, ident1=rep.ident1_diff, ident2=rep.ident2_diff)
    r.notes.setdefault("case_hits", {}).update(dict(sorted(hits.items())))


def _sorts(is_x: Callable) -> Callable:
    return lambda *gs: "".join("X" if is_x(g) else "P" for g in gs)


def suite_postlie_trees(p: EnumParams, r: SuiteReport) -> None:
    alg = TreePostLie(p.d)
    budget = p.maxEdges
    triples = tuples_with_budget(lambda s: tree_generators(p, s), 3, budget)
    _post_lie_sweep(r, alg, triples, _sorts(alg.is_x))
    flat = TreePostLie(0)
    triples0 = tuples_with_budget(lambda s: tree_generators(p, s, d=0), 3, p.maxEdges + 1)
    _post_lie_sweep(r, flat, triples0, lambda *g: "d0")
    r.notes["joint_budget"] = budget


def suite_postlie_mi(p: EnumParams, r: SuiteReport) -> None:
    alg = MultiIndexPostLie(p.d)
    by_deg = lambda k: enumerate_mi_generators(p, degree=k)
    triples = tuples_with_budget(by_deg, 3, p.maxSupport)
    _post_lie_sweep(r, alg, triples, _sorts(alg.is_x))
    r.notes["joint_degree_budget"] = p.maxSupport


def _hopf(r: SuiteReport, env: Envelope, gens: list, p: EnumParams, pair_gens: Iterable) -> None:
    words = words_up_to(gens, 2, env)
    single = [LinComb.single(w) for w in words]
    length = {w: len(w) for w in words}
    rng = random.Random(p.seed)
    n_exh = 0
    # associativity: exhaustive when the three words have total length <= 4, sampled otherwise
    rest = []
    for a, b, c in itertools.product(words, repeat=3):
        if length[a] + length[b] + length[c] <= 4:
            A, B, C = (LinComb.single(w) for w in (a, b, c))
            r.record(env.star(env.star(A, B), C) == env.star(A, env.star(B, C)), check="assoc", words=(a, b, c))
            n_exh += 1
        else:
            rest.append((a, b, c))
    for a, b, c in rng.sample(rest, min(p.samples, len(rest))):
        A, B, C = (LinComb.single(w) for w in (a, b, c))
        r.record(env.star(env.star(A, B), C) == env.star(A, env.star(B, C)), check="assoc", words=(a, b, c))
    # unit
    for A in single:
        r.record(env.star(env.unit(), A) == A and env.star(A, env.unit()) == A, check="unit", word=A)
    # coproduct: coassociative, cocommutative, multiplicative for *
    long_words = words_up_to(gens, 3, env)
    for w in long_words:
        A = LinComb.single(w)
        left, right = env.coassoc_sides(A)
        D = env.coproduct(A)
        r.record(left == right and env.tensor_swap(D) == D, check="coalgebra", word=w)
    for A, B in itertools.product(single, repeat=2):
        lhs = env.coproduct(env.star(A, B))
        rhs = env.tensor_star(env.coproduct(A), env.coproduct(B))
        r.record(lhs == rhs, check="bialgebra", words=(A, B))
    # x * y - y * x is the derived bracket
    alg = env.alg
    for x, y in pair_gens:
        X, Y = env.gen(x), env.gen(y)
        comm = env.star(X, Y) - env.star(Y, X)
        r.record(comm == env.from_lin(alg.derived_bracket(x, y)), check="commutator", x=x, y=y)
    r.notes.update(assoc_exhaustive=n_exh, assoc_sampled=min(p.samples, len(rest)), generators=len(gens))


def suite_hopf_trees(p: EnumParams, r: SuiteReport) -> None:
    env = Envelope(TreePostLie(p.d))
    gens = hopf_tree_generators(p.d)
    pairs = tuples_with_budget(lambda s: tree_generators(p, s), 2, p.maxEdges)
    _hopf(r, env, gens, p, pairs)


def suite_hopf_mi(p: EnumParams, r: SuiteReport) -> None:
    env = Envelope(MultiIndexPostLie(p.d))
    gens = hopf_mi_generators(p.d)
    allg = enumerate_mi_generators(p)
    _hopf(r, env, gens, p, itertools.product(allg, repeat=2))


def suite_identification(p: EnumParams, r: SuiteReport) -> None:
    """``I_b(σ ⋆₂ τ) = σ ▷̂ I_b(τ)`` for ``σ = X^k ∏ I_{a_i}(σ_i)`` with ``k <= (1,...,1)``.

    Exhaustive tier: the planted factors and ``τ`` share a joint edge budget
    (planting edges included).  Single-factor cases run every ``k``; two-factor
    cases take ``k`` in turn.  ``b`` is taken in turn throughout.
    """
    d = p.d
    env = Envelope(TreePostLie(d))
    tau_max = min(p.maxEdges, 2)
    budget = tau_max
    decs = _decs(d, p.maxDecComponent)
    ks = list(box((1,) * (d + 1)))
    xs = lambda k: tuple(XGen(i) for i in range(d + 1) for _ in range(k[i]))
    size = lambda forest: sum(f.tree.n_edges() + 1 for f in forest)
    factors = [Planted(a, s) for e in range(budget) for s in trees_with_edges(p, e) for a in decs]
    forests = [()] + [(f,) for f in factors] + [
        fs for fs in itertools.combinations_with_replacement(factors, 2) if size(fs) <= budget
    ]
    n = turn = 0
    for forest in forests:
        room = budget - size(forest)
        for tau in (t for e in range(room + 1) for t in trees_with_edges(p, e)):
            for k in (ks if len(forest) < 2 else [ks[turn % len(ks)]]):
                b = decs[turn % len(decs)]
                turn += 1
                rep = verify_identification(env, xs(k) + forest, tau, b)
                r.record(rep.ok, sigma=xs(k) + forest, tau=tau, b=b, diff=rep.difference)
                n += 1
    # sampled tier: the full family, two factors of up to two edges each and τ up to two edges
    rng = random.Random(p.seed)
    big = [t for e in range(tau_max + 1) for t in trees_with_edges(p, e)]
    big_factors = [Planted(a, t) for t in big for a in decs]
    for _ in range(p.samples):
        k = rng.choice(ks)
        forest = tuple(sorted(rng.sample(big_factors, rng.randint(0, 2)), key=env.key))
        tau = rng.choice(big)
        b = rng.choice(decs)
        rep = verify_identification(env, xs(k) + forest, tau, b)
        r.record(rep.ok, sigma=xs(k) + forest, tau=tau, b=b, diff=rep.difference)
    r.notes.update(exhaustive=n, joint_budget=budget, sampled=p.samples)


def suite_brackets_equal(p: EnumParams, r: SuiteReport) -> None:
    alg = MultiIndexPostLie(p.d)
    gens = enumerate_mi_generators(p)
    for x, y in itertools.product(gens, repeat=2):
        a, b = mi_bracket(x, y), alg.derived_bracket(x, y)
        r.record(a == b, x=x, y=y, diff=a - b)


def _operator_monomials(p: EnumParams) -> list[Monomial]:
    variables = list(range(4)) + [n for n in _decs(p.d, 2) if not is_zero(n)]
    return enumerate_monomials(variables, 4)


def _bare_ops(d: int, m: int = 2) -> list:
    return [Deriv(ONE, n) for n in _decs(d, m)] + [Partial(i) for i in range(d + 1)]


def suite_matrix_vs_action(p: EnumParams, r: SuiteReport) -> None:
    monos = _operator_monomials(p)
    for g in _bare_ops(p.d):
        for m in monos:
            act = derivation_action(g, m, p.d)
            # every β in the support, plus a few that must give 0
            betas = set(act.keys()) | {m, m * z(0)} | ({m.shift(m.variables()[0])} if m != ONE else set())
            ok = all(matrix_coeff(g, m, b, p.d) == act[b] for b in betas if b is not None)
            r.record(ok, op=g, gamma=m)


def suite_operator_commutation(p: EnumParams, r: SuiteReport) -> None:
    d = p.d
    monos = _operator_monomials(p)
    labels = _decs(d, 2)
    for m in monos:
        for n, n2 in itertools.product(labels, repeat=2):
            a = apply_word([Deriv(ONE, n), Deriv(ONE, n2)], m, d)
            b = apply_word([Deriv(ONE, n2), Deriv(ONE, n)], m, d)
            r.record(a == b, identity="DD", n=n, m=n2, mono=m)
        for i, j in itertools.product(range(d + 1), repeat=2):
            r.record(apply_word([Partial(i), Partial(j)], m, d) == apply_word([Partial(j), Partial(i)], m, d),
                     identity="dd", i=i, j=j, mono=m)
        for n in labels:
            for i in range(d + 1):
                lhs = apply_word([Partial(i), Deriv(ONE, n)], m, d)
                rhs = apply_word([Deriv(ONE, n), Partial(i)], m, d)
                low = vsub(n, unit(i, d))
                if low is not None:
                    rhs = rhs + apply_word([Deriv(ONE, low)], m, d) * n[i]
                r.record(lhs == rhs, identity="dD", n=n, i=i, mono=m)


def _t0_generators(p: EnumParams) -> list:
    small = p.with_(maxEdges=max(p.maxEdges - 1, 0), maxArity=min(p.maxArity, 2))
    trees = enumerate_t0_trees(small)
    return [XGen(i) for i in range(p.d + 1)] + [Planted(a, t) for t in trees for a in _decs(p.d, p.maxDecComponent)]


def suite_psi_morphism(p: EnumParams, r: SuiteReport) -> None:
    d = p.d
    tree_alg, mi_alg = T0PostLie(d), MultiIndexPostLie(d)
    gens = _t0_generators(p)
    size = lambda g: g.tree.n_edges() if isinstance(g, Planted) else 0
    budget = max(p.maxEdges - 2, 0)
    pairs = [(x, y) for x, y in itertools.product(gens, repeat=2)
             if isinstance(x, XGen) or isinstance(y, XGen) or size(x) + size(y) <= budget]
    n_exh = len(pairs)
    rng = random.Random(p.seed)
    pairs += [(rng.choice(gens), rng.choice(gens)) for _ in range(4 * p.samples)]
    r.notes.update(t0_generators=len(gens), exhaustive_pairs=n_exh, joint_budget=budget, sampled_pairs=4 * p.samples)
    for x, y in pairs:
        post_ok = psi_hat_lin(tree_alg.post(x, y)) == mi_alg.post_lin(psi_hat(x), psi_hat(y))
        br_ok = psi_hat_lin(tree_alg.bracket0(x, y)) == mi_alg.bracket0_lin(psi_hat(x), psi_hat(y))
        full_ok = psi_hat_lin(tree_alg.derived_bracket(x, y)) == LinComb.sum(
            mi_bracket(g, h) * (cg * ch) for g, cg in psi_hat(x) for h, ch in psi_hat(y)
        )
        r.record(post_ok and br_ok and full_ok, x=x, y=y)
    # the two displayed identities of the remark, on every planted generator
    for g in gens:
        if not isinstance(g, Planted):
            continue
        for i in range(d + 1):
            lhs = psi_hat_lin(tree_alg.post(XGen(i), g))
            mid = psi_hat_lin(LinComb((Planted(g.a, t), c) for t, c in up_T0(i, g.tree, d)))
            rhs = mi_alg.post_lin(psi_hat(XGen(i)), psi_hat(g))
            r.record(lhs == mid == rhs, display="X_i post", g=g, i=i)
            low = vsub(g.a, unit(i, d))
            (mono, c), = psi(g.tree).items()
            expect = LinComb() if low is None else LinComb.single(Deriv(mono, low), Fraction(c, factorial(low)))
            r.record(psi_hat_lin(tree_alg.bracket0(g, XGen(i))) == expect == mi_alg.bracket0_lin(psi_hat(g), psi_hat(XGen(i))),
                     display="bracket", g=g, i=i)
    # Hopf level on words of length <= 2 over a fixed generator set
    tenv, menv = Envelope(tree_alg), Envelope(mi_alg)
    hgens = gens[: d + 1] + [g for g in gens if isinstance(g, Planted)][:6]
    words = words_up_to(hgens, 2, tenv)
    for a, b in itertools.product(words, repeat=2):
        A, B = LinComb.single(a), LinComb.single(b)
        lhs = psi_hat_env(tenv.star(A, B), menv)
        rhs = menv.star(psi_hat_env(A, menv), psi_hat_env(B, menv))
        r.record(lhs == rhs, display="hopf", a=a, b=b)


def suite_planar_equiv(p: EnumParams, r: SuiteReport) -> None:
    d = p.d
    gens = lambda s: [to_planar_gen(g) for g in tree_generators(p, s)]
    for sigma, tau in tuples_with_budget(gens, 2, p.maxEdges):
        rep = check_left_equiv(sigma, tau, d)
        r.record(rep.ok, sigma=sigma, tau=tau, diff=rep.difference)
    flat = lambda s: [to_planar_gen(g) for g in tree_generators(p, s, d=0)]
    for sigma, tau in tuples_with_budget(flat, 2, p.maxEdges + 1):
        rep = check_left_equiv(sigma, tau, 0)
        r.record(rep.ok, sigma=sigma, tau=tau, diff=rep.difference)
    # confluence of the quotient on planar trees up to five edges
    n = 0
    for t in enumerate_planar_trees(0, 5, 1, 1):
        r.record(len(planar_normal_forms(t)) == 1, confluence=t)
        n += 1
    rng = random.Random(p.seed)
    pool = enumerate_planar_trees(d, 3, p.maxDecComponent, 1)
    for t in pool:
        r.record(len(planar_normal_forms(t)) == 1, confluence=t)
    for _ in range(p.samples):
        t = _random_planar(rng, d, 5, p.maxDecComponent)
        r.record(len(planar_normal_forms(t)) == 1, confluence=t)
    r.notes.update(confluence_d0=n, confluence_full_dim=len(pool), confluence_sampled=p.samples)


def _random_planar(rng: random.Random, d: int, max_edges: int, max_dec: int) -> PlanarTree:
    def build(budget: int) -> tuple[PlanarTree, int]:
        kids: list = []
        used = 0
        if budget and rng.random() < 0.5:
            kids.append(NOISE_SLOT)
            used += 1
        while used < budget and rng.random() < 0.75:
            if rng.random() < 0.4:
                kids.append(XEdge(rng.randint(0, d)))
                used += 1
            else:
                child, u = build(budget - used - 1)
                kids.append(PKernel(tuple(rng.randint(0, max_dec) for _ in range(d + 1)), child))
                used += 1 + u
        return PlanarTree(d, tuple(kids)), used

    return build(rng.randint(0, max_edges))[0]


def random_element(rng: random.Random, d: int = 1):
    """A seeded random element of one of the printable kinds, as a ``cli.Expr``."""
    from .cli import Expr

    kind = rng.choice(("tree", "gen", "word", "tensor", "mi"))
    coef = lambda: Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3))
    tree = lambda: random_tree(rng, d, 3, 1, 1)
    n_terms = rng.randint(0, 3)
    if kind == "tree":
        value = LinComb((tree(), coef()) for _ in range(n_terms))
    elif kind == "mi":
        variables = mi_variables(EnumParams(d=d))
        mono = lambda: Monomial.of(rng.sample(variables, rng.randint(0, 3)))
        pick = lambda: rng.choice([mono(), Partial(rng.randint(0, d)), Deriv(mono(), tuple(rng.randint(0, 2) for _ in range(d + 1)))])
        value = LinComb((pick(), coef()) for _ in range(n_terms))
    else:
        gens = [XGen(i) for i in range(d + 1)] + [
            Planted(tuple(rng.randint(0, 1) for _ in range(d + 1)), tree()) for _ in range(3)
        ]
        env = Envelope(TreePostLie(d))
        word = lambda: tuple(rng.choice(gens) for _ in range(rng.randint(0, 3)))
        if kind == "gen":
            value = LinComb((rng.choice(gens), coef()) for _ in range(n_terms))
        elif kind == "word":
            value = LinComb.sum(env.normal_form(word()) * coef() for _ in range(n_terms))
        else:
            value = LinComb.sum(env.coproduct(env.normal_form(word())) * coef() for _ in range(n_terms))
    return Expr(kind, value, d)


def suite_infrastructure(p: EnumParams, r: SuiteReport) -> None:
    """PBW confluence on short words, text round-trips and enumeration determinism."""
    from .cli import format_element, parse_expr

    for alg, gens in ((TreePostLie(p.d), hopf_tree_generators(p.d)[:6]), (MultiIndexPostLie(p.d), hopf_mi_generators(p.d)[:6])):
        env = Envelope(alg)
        n = 0
        for length in range(5):
            for w in itertools.product(gens, repeat=length):
                r.record(env.all_normal_forms(w) == {env.normal_form(w)}, check="confluence", word=w)
                n += 1
        r.notes[f"confluence_words_{type(alg).__name__}"] = n
    rng = random.Random(p.seed)
    for _ in range(1000):
        e = random_element(rng, p.d)
        text = format_element(e)
        back = parse_expr(text, e.kind, e.d)
        same_json = format_element(back, "json") == format_element(e, "json")
        r.record(back.value == e.value and same_json, check="round-trip", text=text)
    # enumeration determinism: fresh caches, same sequences
    first = [repr(t) for t in enumerate_trees(p)] + [repr(t) for t in enumerate_t0_trees(p)]
    _trees_exact.cache_clear()
    _branches.cache_clear()
    second = [repr(t) for t in enumerate_trees(p)] + [repr(t) for t in enumerate_t0_trees(p)]
    r.record(first == second, check="determinism")
    again = [random_tree(random.Random(p.seed), p.d, 3, 1, 1) for _ in range(2)]
    r.record(again[0] == again[1], check="seeded sampling")
    r.notes.update(round_trips=1000, enumerated=len(first))


SUITES: dict[str, Callable[[EnumParams, SuiteReport], None]] = {
    "multi-pre-lie": suite_multi_pre_lie,
    "derivation": suite_derivation,
    "prop-non-com": suite_prop_non_com,
    "postlie-trees": suite_postlie_trees,
    "postlie-mi": suite_postlie_mi,
    "hopf-trees": suite_hopf_trees,
    "hopf-mi": suite_hopf_mi,
    "identification": suite_identification,
    "brackets-equal": suite_brackets_equal,
    "matrix-vs-action": suite_matrix_vs_action,
    "operator-commutation": suite_operator_commutation,
    "psi-morphism": suite_psi_morphism,
    "planar-equiv": suite_planar_equiv,
    "infrastructure": suite_infrastructure,
}


def run_suite(name: str, p: EnumParams | None = None) -> SuiteReport:
    p = p or EnumParams()
    if name == "golden-figures":
        from .golden import suite_golden_figures

        fn = suite_golden_figures
    elif name in SUITES:
        fn = SUITES[name]
    else:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITE_NAMES)}")
    report = SuiteReport(name, p)
    start = time.perf_counter()
    fn(p, report)
    report.wall_time = time.perf_counter() - start
    return report


SUITE_NAMES = tuple(SUITES) + ("golden-figures",)
