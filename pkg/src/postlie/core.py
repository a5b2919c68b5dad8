"""Exact arithmetic on decoration vectors and sparse rational linear combinations."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial as _fact, prod
from numbers import Rational
from typing import Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

DecVec = tuple[int, ...]
Scaling = tuple[int, ...]

K = TypeVar("K", bound=Hashable)
L = TypeVar("L", bound=Hashable)


class DimensionError(ValueError):
    """Raised when objects of different ambient dimension are combined."""


def check_dim(*vecs: DecVec) -> int:
    lengths = {len(v) for v in vecs}
    if len(lengths) > 1:
        raise DimensionError(f"mixed decoration lengths {sorted(lengths)}")
    return lengths.pop() if lengths else 0


def zero(d: int) -> DecVec:
    """The zero decoration of ℕ^{d+1}."""
    return (0,) * (d + 1)


def unit(i: int, d: int) -> DecVec:
    if not 0 <= i <= d:
        raise IndexError(f"coordinate {i} out of range for d={d}")
    return tuple(1 if j == i else 0 for j in range(d + 1))


def vadd(n: DecVec, m: DecVec) -> DecVec:
    check_dim(n, m)
    return tuple(a + b for a, b in zip(n, m))


def vsub(n: DecVec, m: DecVec) -> DecVec | None:
    """Componentwise ``n - m``, or ``None`` when a component would go negative."""
    check_dim(n, m)
    out = tuple(a - b for a, b in zip(n, m))
    if any(c < 0 for c in out):
        return None
    return out


def leq(n: DecVec, m: DecVec) -> bool:
    check_dim(n, m)
    return all(a <= b for a, b in zip(n, m))


def is_zero(n: DecVec) -> bool:
    return not any(n)


def box(bound: DecVec) -> Iterator[DecVec]:
    """All vectors ``l`` with ``0 <= l <= bound`` componentwise, in lexicographic order."""
    if not bound:
        yield ()
        return
    for head in range(bound[0] + 1):
        for tail in box(bound[1:]):
            yield (head,) + tail


def binom(n: DecVec, l: DecVec) -> int:
    """Product of componentwise binomial coefficients; 0 unless ``l <= n``."""
    check_dim(n, l)
    return prod(comb(a, b) if 0 <= b <= a else 0 for a, b in zip(n, l))


def snorm(n: DecVec, s: Scaling) -> int:
    check_dim(n, s)
    return sum(si * ni for si, ni in zip(s, n))


def factorial(a: DecVec) -> int:
    return prod(_fact(x) for x in a)


def parabolic(d: int) -> Scaling:
    """The scaling (2, 1, ..., 1) where time counts double."""
    return (2,) + (1,) * d


def check_scaling(s: Scaling) -> Scaling:
    if any(si < 1 for si in s):
        raise ValueError(f"scaling weights must be >= 1, got {s}")
    return tuple(s)


def _normalize_coef(c) -> int | Fraction:
    if isinstance(c, bool):
        raise TypeError("boolean coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        c = Fraction(c)
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class LinComb(Generic[K]):
    """A finitely supported formal sum of hashable basis keys with rational coefficients.

    Instances are immutable: every operation returns a new object and zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[K, object] | Iterable[tuple[K, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[K, int | Fraction] = {}
        for key, c in items:
            c = _normalize_coef(c)
            if c:
                v = acc.get(key, 0) + c
                if v:
                    acc[key] = v
                else:
                    del acc[key]
        self._terms = {k: _normalize_coef(v) for k, v in acc.items()}
        self._hash = None

    @classmethod
    def single(cls, key: K, coef=1) -> LinComb[K]:
        return cls(((key, coef),))

    @classmethod
    def zero(cls) -> LinComb[K]:
        return cls()

    @classmethod
    def sum(cls, parts: Iterable[LinComb[K]]) -> LinComb[K]:
        acc: list[tuple[K, object]] = []
        for p in parts:
            acc.extend(p._terms.items())
        return cls(acc)

    def __iter__(self) -> Iterator[tuple[K, int | Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __getitem__(self, key: K) -> int | Fraction:
        return self._terms.get(key, 0)

    def keys(self):
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    def sorted_items(self, key: Callable | None = None) -> list[tuple[K, int | Fraction]]:
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else (lambda kv: kv[0]))

    def __add__(self, other: LinComb[K]) -> LinComb[K]:
        if not isinstance(other, LinComb):
            return NotImplemented
        return LinComb(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> LinComb[K]:
        return LinComb({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: LinComb[K]) -> LinComb[K]:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, c) -> LinComb[K]:
        c = _normalize_coef(c)
        if not c:
            return LinComb()
        return LinComb({k: v * c for k, v in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        inner = ", ".join(f"{k!r}: {v}" for k, v in self._terms.items())
        return f"LinComb({{{inner}}})"

    def map(self, f: Callable[[K], LinComb[L]]) -> LinComb[L]:
        """Extend a basis map ``f`` linearly."""
        acc: list[tuple[L, object]] = []
        for k, c in self._terms.items():
            for k2, c2 in f(k)._terms.items():
                acc.append((k2, c * c2))
        return LinComb(acc)

    def map_keys(self, f: Callable[[K], L]) -> LinComb[L]:
        return LinComb((f(k), c) for k, c in self._terms.items())

    def filter(self, pred: Callable[[K], bool]) -> LinComb[K]:
        return LinComb({k: v for k, v in self._terms.items() if pred(k)})


def bilinear(f: Callable[[K, L], LinComb], x: LinComb[K], y: LinComb[L]) -> LinComb:
    """Extend ``f`` on pairs of basis keys bilinearly to linear combinations."""
    acc: list = []
    for kx, cx in x:
        for ky, cy in y:
            for k, c in f(kx, ky):
                acc.append((k, cx * cy * c))
    return LinComb(acc)
