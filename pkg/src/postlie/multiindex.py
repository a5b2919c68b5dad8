"""Multi-indices ``z^β``, the derivations ``D^(n)`` and ``∂_i``, and the post-Lie algebra ``L``.

Variables are keyed by type: an ``int`` ``k`` is the arity variable ``z_k``
and a nonzero ``tuple`` ``n`` is the monomial variable ``z_n``.  Actions are
always computed on a single monomial, so every result is a finite sum.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Union

from .core import DecVec, DimensionError, LinComb, is_zero, unit, vadd, vsub, zero
from .envelope import PostLieAlgebra

Var = Union[int, DecVec]


def _var_key(v: Var):
    return (0, v, ()) if isinstance(v, int) else (1, 0, v)


def _check_var(v: Var) -> Var:
    if isinstance(v, bool):
        raise TypeError("boolean is not a variable label")
    if isinstance(v, int):
        if v < 0:
            raise ValueError("arity must be non-negative")
        return v
    v = tuple(v)
    if is_zero(v):
        raise ValueError("z_n needs n != 0; z_0 is the arity-zero variable")
    if any(x < 0 for x in v):
        raise ValueError("negative monomial label")
    return v


@dataclass(frozen=True, order=True)
class Monomial:
    """``z^β = ∏ z_k^{β(k)} ∏ z_n^{β(n)}`` stored as sorted ``(variable, exponent)`` pairs."""

    arity: tuple[tuple[int, int], ...] = ()
    poly: tuple[tuple[DecVec, int], ...] = ()
    _hash: int = field(default=0, init=False, compare=False, repr=False)

    def __post_init__(self):
        a = tuple(sorted((k, e) for k, e in self.arity if e))
        p = tuple(sorted((tuple(n), e) for n, e in self.poly if e))
        if len({k for k, _ in a}) != len(a) or len({n for n, _ in p}) != len(p):
            raise ValueError("repeated variable; use Monomial.of")
        if any(e < 0 for _, e in a + p):
            raise ValueError("negative exponent")
        if len({len(n) for n, _ in p}) > 1:
            raise DimensionError("monomial labels of mixed dimension")
        object.__setattr__(self, "arity", a)
        object.__setattr__(self, "poly", p)
        object.__setattr__(self, "_hash", hash((a, p)))

    def __hash__(self) -> int:
        return self._hash

    @classmethod
    def of(cls, counts: Mapping[Var, int] | Iterable[Var]) -> Monomial:
        """Build from a ``{variable: exponent}`` map or an iterable of variables."""
        c = Counter()
        items = counts.items() if isinstance(counts, Mapping) else ((v, 1) for v in counts)
        for v, e in items:
            c[_check_var(v)] += e
        return cls(
            tuple((k, e) for k, e in c.items() if isinstance(k, int)),
            tuple((k, e) for k, e in c.items() if not isinstance(k, int)),
        )

    def counts(self) -> dict[Var, int]:
        return dict(self.arity) | dict(self.poly)

    def __getitem__(self, v: Var) -> int:
        return self.counts().get(v if isinstance(v, int) else tuple(v), 0)

    def variables(self) -> list[Var]:
        return sorted(self.counts(), key=_var_key)

    def __mul__(self, other: Monomial) -> Monomial:
        c = Counter(self.counts())
        c.update(other.counts())
        return Monomial.of(c)

    def shift(self, remove: Var | None = None, add: Iterable[Var] = ()) -> Monomial | None:
        """Divide by ``z_remove`` and multiply by the ``z_add``; ``None`` if not divisible."""
        c = Counter(self.counts())
        if remove is not None:
            if c[remove] == 0:
                return None
            c[remove] -= 1
        for v in add:
            c[_check_var(v)] += 1
        return Monomial.of(+c)

    def degree(self) -> int:
        return sum(e for _, e in self.arity) + sum(e for _, e in self.poly)

    def dim(self) -> int | None:
        return len(self.poly[0][0]) - 1 if self.poly else None

    def __repr__(self) -> str:
        parts = []
        for v in self.variables():
            e = self[v]
            name = f"z_{v}" if isinstance(v, int) else "z_(" + ",".join(map(str, v)) + ")"
            parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts) or "1"


ONE = Monomial()


def z(v: Var) -> Monomial:
    return Monomial.of([v])


def arity_grade(gamma: Monomial) -> int:
    """``[γ] = Σ_k k γ(k) - Σ_{n≠0} γ(n)``."""
    return sum(k * e for k, e in gamma.arity) - sum(e for _, e in gamma.poly)


@dataclass(frozen=True, order=True)
class Deriv:
    """``z^γ D^(n)``; ``n = 0`` is the arity-raising derivation ``D^(0)``."""

    gamma: Monomial
    n: DecVec

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(self.n))
        dim = self.gamma.dim()
        if dim is not None and dim != len(self.n) - 1:
            raise DimensionError("label dimension differs from the coefficient's")

    def __repr__(self) -> str:
        head = "" if self.gamma == ONE else f"{self.gamma!r} "
        return f"{head}D({','.join(map(str, self.n))})"


@dataclass(frozen=True, order=True)
class Partial:
    """The coordinate derivation ``∂_i``."""

    i: int

    def __repr__(self) -> str:
        return f"d_{self.i}"


MIGenerator = Union[Deriv, Partial]


def _dim(d: int | None, *ms: Monomial, n: DecVec | None = None) -> int:
    dims = {m.dim() for m in ms if m.dim() is not None}
    if n is not None:
        dims.add(len(n) - 1)
    if d is not None:
        dims.add(d)
    if len(dims) > 1:
        raise DimensionError(f"mixed dimensions {sorted(dims)}")
    if not dims:
        raise ValueError("dimension cannot be inferred; pass d")
    return dims.pop()


def _bare_action(n: DecVec, m: Monomial) -> LinComb[Monomial]:
    if is_zero(n):
        terms = [(m.shift(k, [k + 1]), (k + 1) * e) for k, e in m.arity]
    else:
        e = m[n]
        terms = [(m.shift(n), e)] if e else []
    return LinComb(terms)


def _partial_action(i: int, m: Monomial, d: int) -> LinComb[Monomial]:
    # ∂_i = z_{e_i} D^(0) + Σ_{n≠0} (n_i + 1) z_{n+e_i} D^(n)
    e = unit(i, d)
    parts = [_bare_action(zero(d), m).map_keys(lambda b: b * z(e))]
    for n, _ in m.poly:
        up = vadd(n, e)
        parts.append(_bare_action(n, m).map_keys(lambda b, up=up: b * z(up)) * (n[i] + 1))
    return LinComb.sum(parts)


def derivation_action(g: MIGenerator, m: Monomial, d: int | None = None) -> LinComb[Monomial]:
    """Apply ``g`` to ``z^m`` by the Leibniz rule; ``d`` is needed only to place ``z_{e_i}``."""
    if isinstance(g, Partial):
        dim = _dim(d, m) if (d is not None or m.dim() is not None) else 1
        if not 0 <= g.i <= dim:
            raise IndexError(f"∂_{g.i} out of range for d={dim}")
        return _partial_action(g.i, m, dim)
    _dim(d, m, g.gamma, n=g.n)
    return _bare_action(g.n, m).map_keys(lambda b: b * g.gamma)


def apply_word(ops: Iterable[MIGenerator], m: Monomial, d: int | None = None) -> LinComb[Monomial]:
    """The operator product ``A_1 A_2 … A_r`` applied to ``z^m``.

    Products are read in the matrix sense, ``A_1`` acting first; this is the
    reading under which ``∂_i D^(n) = D^(n) ∂_i + n_i D^(n-e_i)`` holds.
    """
    out = LinComb.single(m)
    for g in ops:
        out = out.map(lambda b, g=g: derivation_action(g, b, d))
    return out


def matrix_coeff(g: MIGenerator, gamma: Monomial, beta: Monomial, d: int | None = None) -> int:
    """Closed-form ``(g)^γ_β`` for a bare derivation, so that ``g z^γ = Σ_β (g)^γ_β z^β``."""
    if isinstance(g, Deriv) and g.gamma != ONE:
        raise ValueError("matrix coefficients are defined for the bare derivations only")
    cg, cb = Counter(gamma.counts()), Counter(beta.counts())

    def plus(c: Counter, *vs: Var) -> Counter:
        out = Counter(c)
        for v in vs:
            out[v] += 1
        return +out

    if isinstance(g, Deriv) and is_zero(g.n):
        return sum((k + 1) * e for k, e in gamma.arity if plus(cg, k + 1) == plus(cb, k))
    if isinstance(g, Deriv):
        return gamma[g.n] if cg == plus(cb, g.n) else 0
    dim = _dim(d, gamma, beta) if (d is not None or gamma.dim() or beta.dim()) else 1
    ei = unit(g.i, dim)
    total = sum((k + 1) * e for k, e in gamma.arity if plus(cg, k + 1, ei) == plus(cb, k))
    total += sum((n[g.i] + 1) * e for n, e in gamma.poly if plus(cg, vadd(n, ei)) == plus(cb, n))
    return total


def mi_pre_lie(x: Deriv, y: Deriv) -> LinComb[Deriv]:
    """``z^γ D^(n) ▶ z^γ' D^(n') = Σ_β' (z^γ D^(n))^γ'_β' z^β' D^(n')``."""
    if not (isinstance(x, Deriv) and isinstance(y, Deriv)):
        raise TypeError("▶ is defined between z^γ D^(n) generators only")
    return derivation_action(x, y.gamma, len(y.n) - 1).map_keys(lambda b: Deriv(b, y.n))


def mi_post(x: MIGenerator, y: MIGenerator) -> LinComb[MIGenerator]:
    if isinstance(y, Partial):
        return LinComb()
    if isinstance(x, Partial):
        return derivation_action(x, y.gamma, len(y.n) - 1).map_keys(lambda b: Deriv(b, y.n))
    return mi_pre_lie(x, y)


def _lower(g: Deriv, i: int) -> LinComb[Deriv]:
    n = vsub(g.n, unit(i, len(g.n) - 1))
    return LinComb() if n is None else LinComb.single(Deriv(g.gamma, n), g.n[i])


def mi_bracket0(x: MIGenerator, y: MIGenerator) -> LinComb[MIGenerator]:
    """``[z^γ D^(n), ∂_i]_0 = n_i z^γ D^(n-e_i)``; zero inside each sort."""
    if isinstance(x, Deriv) and isinstance(y, Partial):
        return _lower(x, y.i)
    if isinstance(x, Partial) and isinstance(y, Deriv):
        return -_lower(y, x.i)
    return LinComb()


def _project(t: LinComb) -> LinComb:
    return t.filter(lambda g: isinstance(g, Partial) or arity_grade(g.gamma) >= 0)


def mi_bracket(x: MIGenerator, y: MIGenerator) -> LinComb[MIGenerator]:
    """The Lie bracket of ``L`` written out directly, with terms of ``[β] < 0`` dropped."""
    if isinstance(x, Partial) and isinstance(y, Partial):
        return LinComb()
    if isinstance(x, Partial):
        return -mi_bracket(y, x)
    if isinstance(y, Partial):
        d = len(x.n) - 1
        corr = LinComb(
            (Deriv(b, x.n), matrix_coeff(y, x.gamma, b, d))
            for b in derivation_action(y, x.gamma, d).keys()
        )
        return _project(_lower(x, y.i) - corr)
    return _project(mi_pre_lie(x, y) - mi_pre_lie(y, x))


class MultiIndexPostLie(PostLieAlgebra):
    """``(L, [., .]_0, ▶̂)``."""

    def __init__(self, d: int = 1):
        self.d = d

    def is_x(self, g) -> bool:
        return isinstance(g, Partial)

    def x_index(self, g) -> int:
        return g.i

    def bracket0(self, g, h) -> LinComb:
        return mi_bracket0(g, h)

    def post(self, g, h) -> LinComb:
        return mi_post(g, h)
