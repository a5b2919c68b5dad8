"""Text syntax for trees, envelope words and multi-indices, and the ``postlie`` command.

Grammar (whitespace is ignored between tokens)::

    expr   := term (("+" | "-") term)*        leading "-" allowed; "0" is zero
    term   := [rational "*"] factor+
    factor := "Xi" | "1" | "X_" int | "X^" nvec | "I[" nvec "](" expr ")"
    word   := expr (";" expr)*
    nvec   := "(" int ("," int)* ")"

Envelope elements with words of length other than one are written term by
term in braces, ``2*{X_0 ; I[(1,0)](Xi)}``; a tensor term is ``{w1 | w2}``
and the empty word is ``1``.  Multi-indices use the factors ``z_k``,
``z_(n)``, an optional ``^e`` on either, ``D(n)`` and ``d_i``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .core import DecVec, DimensionError, LinComb, check_scaling, parabolic, unit, zero
from .envelope import Envelope
from .grafting import deformed_graft, graft, up
from .morphism import psi, psi_hat
from .multiindex import ONE, Deriv, Monomial, MultiIndexPostLie, Partial, apply_word, mi_bracket, mi_bracket0
from .planar import NOISE_SLOT, PKernel, PlanarTree, XEdge, planar_normalize
from .treealgebra import Planted, TreePostLie, XGen, star2
from .trees import T0Tree, Tree, is_planted, noise_tree, one, planted, tree_product, unplant

KINDS = ("tree", "gen", "word", "tensor", "mi", "t0", "planar")


class ParseError(ValueError):
    """Syntax error at a character offset."""

    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


@dataclass(frozen=True)
class Expr:
    """A parsed element: its kind and its value as a linear combination."""

    kind: str
    value: LinComb
    d: int

    def __str__(self) -> str:
        return format_element(self)


# --- lexer ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(Xi|X_|X\^|I\[|z_|D\(|d_)|([-+*/;|{}()\[\],^]))")


def _lex(text: str) -> list[tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos:].isspace():
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos + len(text[pos:]) - len(text[pos:].lstrip()))
        kind = "num" if m.group(1) else "kw" if m.group(2) else "sym"
        start = m.start(m.lastindex)
        out.append((kind, m.group(m.lastindex), start))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, d: int):
        self.toks = _lex(text)
        self.i = 0
        self.d = d

    # token helpers
    def peek(self, k: int = 0) -> tuple[str, str, int]:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, value: str, k: int = 0) -> bool:
        kind, v, _ = self.peek(k)
        return kind != "end" and v == value

    def take(self, value: str | None = None) -> str:
        kind, v, pos = self.peek()
        if value is not None and v != value:
            raise ParseError(f"expected {value!r}, found {v or 'end of input'!r}", pos)
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        self.i += 1
        return v

    def int_(self) -> int:
        kind, v, pos = self.peek()
        if kind != "num":
            raise ParseError(f"expected an integer, found {v or 'end of input'!r}", pos)
        self.i += 1
        return int(v)

    def done(self) -> None:
        kind, v, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {v!r}", pos)

    def nvec(self, opened: bool = False) -> DecVec:
        pos = self.peek()[2]
        if not opened:
            self.take("(")
        vals = [self.int_()]
        while self.at(","):
            self.take(",")
            vals.append(self.int_())
        self.take(")")
        if len(vals) != self.d + 1:
            raise DimensionError(f"vector of length {len(vals)} at position {pos}; --dim {self.d} needs {self.d + 1}")
        return tuple(vals)

    def index(self) -> int:
        pos = self.peek()[2]
        i = self.int_()
        if i > self.d:
            raise DimensionError(f"index {i} at position {pos} exceeds --dim {self.d}")
        return i

    # generic sums: ``term`` parses one coefficient-free term into a LinComb
    def sum(self, term: Callable[[], LinComb], stop: Iterable[str] = (")", ";", "|", "}")) -> LinComb:
        stop = set(stop)
        if self.peek()[1] == "0" and (self.peek(1)[0] == "end" or self.peek(1)[1] in stop):
            self.take()
            return LinComb()
        parts, sign = [], 1
        if self.at("-"):
            self.take("-")
            sign = -1
        while True:
            c = self.rational()
            parts.append(term() * (sign * c))
            if self.at("+"):
                self.take("+")
                sign = 1
            elif self.at("-"):
                self.take("-")
                sign = -1
            else:
                return LinComb.sum(parts)

    def rational(self) -> Fraction:
        """Consume ``rational "*"`` if present."""
        if not (self.peek()[0] == "num" and (self.at("*", 1) or self.at("/", 1))):
            return Fraction(1)
        num = self.int_()
        den = 1
        if self.at("/"):
            self.take("/")
            pos = self.peek()[2]
            den = self.int_()
            if den == 0:
                raise ParseError("zero denominator", pos)
        self.take("*")
        return Fraction(num, den)

    def factors(self, factor: Callable[[], object], stop: Iterable[str] = ("+", "-", ")", ";", "|", "}")) -> list:
        stop = set(stop)
        out = []
        while self.peek()[0] != "end" and self.peek()[1] not in stop:
            out.append(factor())
        if not out:
            raise ParseError("expected a factor", self.peek()[2])
        return out


# --- trees -----------------------------------------------------------------------

def _tree_product(x: LinComb, y: LinComb) -> LinComb:
    return LinComb((tree_product(s, t), cs * ct) for s, cs in x for t, ct in y)


class _TreeParser(_Parser):
    def expr(self) -> LinComb[Tree]:
        return self.sum(self.term)

    def term(self) -> LinComb[Tree]:
        out = LinComb.single(one(self.d))
        for f in self.factors(self.factor):
            out = _tree_product(out, f)
        return out

    def factor(self) -> LinComb[Tree]:
        kind, v, pos = self.peek()
        if v == "Xi":
            self.take()
            return LinComb.single(noise_tree(self.d))
        if kind == "num":
            if v != "1":
                raise ParseError(f"bare number {v!r}; write a coefficient as {v}*factor", pos)
            self.take()
            return LinComb.single(one(self.d))
        if v == "X_":
            self.take()
            return LinComb.single(Tree(unit(self.index(), self.d)))
        if v == "X^":
            self.take()
            return LinComb.single(Tree(self.nvec()))
        if v == "I[":
            self.take()
            a = self.nvec()
            self.take("]")
            self.take("(")
            inner = self.expr()
            self.take(")")
            return inner.map_keys(lambda t: planted(a, t))
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


def _tree_to_gen(t: Tree):
    if is_planted(t):
        a, inner = unplant(t)
        return Planted(a, inner)
    if not t.children and sum(t.dec) == 1:
        return XGen(t.dec.index(1))
    raise ValueError(f"{format_tree(t)} is neither X_i nor a planted tree I_a(τ)")


def _tree_to_letter(t: Tree, env: Envelope) -> LinComb:
    """A tree read as a PBW word: ``X^k ∏ I_{a_j}(τ_j)`` gives ``X_0^{k_0} … I_{a_1}(τ_1) …``."""
    if any(e.is_noise for e, _ in t.children):
        raise ValueError(f"{format_tree(t)} has a noise at the root and is not an envelope letter")
    gens = [XGen(i) for i, k in enumerate(t.dec) for _ in range(k)]
    gens += [Planted(e.dec, c) for e, c in t.children]
    return env.word(*gens)


class _WordParser(_TreeParser):
    def __init__(self, text: str, d: int):
        super().__init__(text, d)
        self.env = Envelope(TreePostLie(d))

    def letter(self) -> LinComb:
        return self.expr().map(lambda t: _tree_to_letter(t, self.env))

    def word(self) -> LinComb:
        out = self.letter()
        while self.at(";"):
            self.take(";")
            out = self.env.mul(out, self.letter())
        return out

    def braced(self, tensor: bool) -> LinComb:
        def term():
            self.take("{")
            left = self.word()
            if tensor:
                self.take("|")
                right = self.word()
                self.take("}")
                return LinComb(((a, b), ca * cb) for a, ca in left for b, cb in right)
            self.take("}")
            return left

        return self.sum(term)

    def top(self, tensor: bool = False) -> LinComb:
        if tensor or any(v == "{" for _, v, _ in self.toks):
            return self.braced(tensor)
        return self.word()


# --- multi-indices ---------------------------------------------------------------

class _MIParser(_Parser):
    def expr(self) -> LinComb:
        return self.sum(self.term)

    def term(self) -> LinComb:
        mono, op = ONE, None
        for f in self.factors(self.factor):
            if isinstance(f, Monomial):
                mono = mono * f
            elif op is not None:
                raise ParseError("at most one D(n) or d_i per term", self.peek()[2])
            else:
                op = f
        if op is None:
            return LinComb.single(mono)
        if isinstance(op, Partial):
            if mono != ONE:
                raise ParseError("d_i takes no coefficient monomial", self.peek()[2])
            return LinComb.single(op)
        return LinComb.single(Deriv(mono, op))

    def factor(self):
        kind, v, pos = self.peek()
        if kind == "num":
            if v != "1":
                raise ParseError(f"bare number {v!r}", pos)
            self.take()
            return ONE
        if v == "z_":
            self.take()
            var = self.nvec() if self.at("(") else self.int_()
            exp = 1
            if self.at("^"):
                self.take("^")
                exp = self.int_()
            try:
                return Monomial.of({var: exp})
            except ValueError as err:
                raise ParseError(str(err), pos) from None
        if v == "D(":
            self.take()
            return self.nvec(opened=True)
        if v == "d_":
            self.take()
            return Partial(self.index())
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)


# --- noise-at-every-node and planar trees -------------------------------------------

class _T0Parser(_Parser):
    """Each node is ``Xi`` with a list of ``X^ℓ`` factors and ``I[(0..)](...)`` branches."""

    def node(self) -> T0Tree:
        mons, kids, noise = [], [], 0
        for kind, val in self.factors(self.factor):
            if kind == "xi":
                noise += 1
            elif kind == "mono":
                mons.append(val)
            else:
                kids.append(val)
        if noise != 1:
            raise ParseError("every node of a noise-at-every-node tree carries exactly one Xi", self.peek()[2])
        return T0Tree(tuple(mons), tuple(kids))

    def factor(self):
        kind, v, pos = self.peek()
        if v == "Xi":
            self.take()
            return ("xi", None)
        if v == "X_":
            self.take()
            return ("mono", unit(self.index(), self.d))
        if v == "X^":
            self.take()
            n = self.nvec()
            if not any(n):
                raise ParseError("X^0 is not a monomial factor", pos)
            return ("mono", n)
        if v == "I[":
            self.take()
            if any(self.nvec()):
                raise ParseError("inner edges of these trees carry the zero decoration", pos)
            self.take("]")
            self.take("(")
            child = self.node()
            self.take(")")
            return ("kid", child)
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)

    def top(self) -> LinComb:
        """A lone ``I[a](node)`` or ``X_i`` is a generator; anything else is a tree."""
        def term():
            mark = self.i
            try:
                if self.at("I["):
                    self.take("I[")
                    a = self.nvec()
                    self.take("]")
                    self.take("(")
                    g = Planted(a, self.node())
                    self.take(")")
                elif self.at("X_"):
                    self.take("X_")
                    g = XGen(self.index())
                else:
                    g = None
                if g is not None and self.peek()[1] in ("", "+", "-"):
                    return LinComb.single(g)
            except ParseError:
                pass
            self.i = mark
            return LinComb.single(self.node())

        return self.sum(term)


class _PlanarParser(_Parser):
    def tree(self) -> PlanarTree:
        letters = []
        for f in self.factors(self.factor):
            letters.extend(f)
        if letters == ["unit"]:
            letters = []
        return PlanarTree(self.d, tuple(x for x in letters if x != "unit"))

    def factor(self) -> list:
        kind, v, pos = self.peek()
        if v == "Xi":
            self.take()
            return [NOISE_SLOT]
        if kind == "num" and v == "1":
            self.take()
            return ["unit"]
        if v == "X_":
            self.take()
            return [XEdge(self.index())]
        if v == "X^":
            self.take()
            n = self.nvec()
            return [XEdge(i) for i, k in enumerate(n) for _ in range(k)]
        if v == "I[":
            self.take()
            a = self.nvec()
            self.take("]")
            self.take("(")
            child = self.tree()
            self.take(")")
            return [PKernel(a, child)]
        raise ParseError(f"unexpected {v or 'end of input'!r}", pos)

    def top(self) -> LinComb:
        return self.sum(lambda: LinComb.single(self.tree()))


# --- public parse -------------------------------------------------------------------

def detect_kind(text: str) -> str:
    if re.search(r"z_|D\(|d_", text):
        return "mi"
    if "|" in text:
        return "tensor"
    if "{" in text or ";" in text:
        return "word"
    return "tree"


def parse_expr(text: str, kind: str | None = None, d: int = 1) -> Expr:
    """Parse ``text`` as an element of the given kind (guessed from the text if omitted)."""
    kind = kind or detect_kind(text)
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if kind in ("tree", "gen"):
        p = _TreeParser(text, d)
        value = p.expr()
        if kind == "gen":
            value = value.map_keys(_tree_to_gen)
    elif kind in ("word", "tensor"):
        p = _WordParser(text, d)
        value = p.top(tensor=kind == "tensor")
    elif kind == "mi":
        p = _MIParser(text, d)
        value = p.expr()
    elif kind == "t0":
        p = _T0Parser(text, d)
        value = p.top()
    else:
        p = _PlanarParser(text, d)
        value = p.top()
    p.done()
    return Expr(kind, value, d)


# --- formatting -----------------------------------------------------------------------

def format_vec(n: DecVec) -> str:
    return "(" + ",".join(map(str, n)) + ")"


def format_tree(t: Tree) -> str:
    parts = [f"X^{format_vec(t.dec)}"] if any(t.dec) else []
    for e, c in t.children:
        parts.append("Xi" if e.is_noise else f"I[{format_vec(e.dec)}]({format_tree(c)})")
    return " ".join(parts) or "1"


def format_gen(g) -> str:
    if isinstance(g, XGen):
        return f"X_{g.i}"
    if isinstance(g, Planted):
        inner = format_tree(g.tree) if isinstance(g.tree, Tree) else format_t0(g.tree, len(g.a) - 1)
        return f"I[{format_vec(g.a)}]({inner})"
    if isinstance(g, Tree):
        return format_tree(g)
    return repr(g)


def format_t0(t: T0Tree, d: int) -> str:
    parts = ["Xi"] + [f"X^{format_vec(m)}" for m in t.monomials]
    parts += [f"I[{format_vec(zero(d))}]({format_t0(c, d)})" for c in t.children]
    return " ".join(parts)


def format_word(w: tuple) -> str:
    return " ; ".join(format_gen(g) for g in w) or "1"


def _format_mi(g) -> str:
    # Monomial, Deriv and Partial print in the grammar's spelling already
    return repr(g)


def _renderer(e: Expr) -> Callable[[object], str]:
    if e.kind == "mi":
        return _format_mi
    if e.kind == "tensor":
        return lambda pair: "{" + format_word(pair[0]) + " | " + format_word(pair[1]) + "}"
    if e.kind == "word":
        if all(len(w) == 1 for w in e.value.keys()):
            return lambda w: format_gen(w[0])
        return lambda w: "{" + format_word(w) + "}"
    return format_gen


def _terms(e: Expr) -> list[tuple[Fraction, str]]:
    render = _renderer(e)
    return sorted(((Fraction(c), render(k)) for k, c in e.value), key=lambda p: (p[1], p[0]))


def _coef_text(c: Fraction) -> str:
    return str(c)


def format_element(e: Expr, mode: str = "text") -> str:
    """Canonical text, or ``{"terms": [{"coef": "p/q", "elem": ...}]}`` sorted by element."""
    terms = _terms(e)
    if mode == "json":
        return json.dumps({"terms": [{"coef": _coef_text(c), "elem": s} for c, s in terms]}, sort_keys=True)
    if mode != "text":
        raise ValueError(f"unknown format {mode!r}")
    if not terms:
        return "0"
    out = []
    for j, (c, s) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = s if mag == 1 else f"{_coef_text(mag)}*{s}"
        if j == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# --- commands ---------------------------------------------------------------------------

def _single_vec(text: str, d: int) -> DecVec:
    p = _Parser(text, d)
    v = p.nvec()
    p.done()
    return v


def _bilinear(f: Callable, x: LinComb, y: LinComb) -> LinComb:
    return LinComb.sum(f(s, t) * (cs * ct) for s, cs in x for t, ct in y)


def _cmd_graft(args, deformed: bool = False) -> Expr:
    d = args.dim
    sigma = parse_expr(args.sigma, "tree", d).value
    tau = parse_expr(args.tau, "tree", d).value
    a = _single_vec(args.dec, d) if args.dec else zero(d)
    op = deformed_graft if deformed else graft
    return Expr("tree", _bilinear(lambda s, t: op(s, a, t), sigma, tau), d)


def _cmd_up(args) -> Expr:
    d = args.dim
    if not 0 <= args.i <= d:
        raise DimensionError(f"index {args.i} exceeds --dim {d}")
    tau = parse_expr(args.tau, "tree", d).value
    return Expr("tree", tau.map(lambda t: up(args.i, t)), d)


def _cmd_post(args) -> Expr:
    alg = TreePostLie(args.dim)
    x = parse_expr(args.x, "gen", args.dim).value
    y = parse_expr(args.y, "gen", args.dim).value
    return Expr("gen", alg.post_lin(x, y), args.dim)


def _cmd_bracket(args) -> Expr:
    alg = TreePostLie(args.dim)
    x = parse_expr(args.x, "gen", args.dim).value
    y = parse_expr(args.y, "gen", args.dim).value
    f = alg.bracket0 if args.structural else alg.derived_bracket
    return Expr("gen", _bilinear(f, x, y), args.dim)


def _cmd_star(args) -> Expr:
    A = parse_expr(args.a, "word", args.dim).value
    B = parse_expr(args.b, "word", args.dim).value
    env = Envelope(TreePostLie(args.dim))
    return Expr("word", env.star(A, B), args.dim)


def _cmd_star2(args) -> Expr:
    d = args.dim
    env = Envelope(TreePostLie(d))
    sigma = parse_expr(args.sigma, "word", d).value
    tau = parse_expr(args.tau, "tree", d).value
    b = _single_vec(args.b, d) if args.b else zero(d)
    out = _bilinear(lambda w, t: star2(env, w, t, b, args.multinomial), sigma, tau)
    return Expr("tree", out, d)


def _cmd_delta(args) -> Expr:
    A = parse_expr(args.a, "word", args.dim).value
    env = Envelope(TreePostLie(args.dim))
    return Expr("tensor", env.coproduct(A), args.dim)


def _cmd_psi(args) -> Expr:
    x = parse_expr(args.tree, "t0", args.dim).value
    if all(isinstance(k, T0Tree) for k in x.keys()):
        return Expr("mi", x.map(psi), args.dim)
    if any(isinstance(k, T0Tree) for k in x.keys()):
        raise ValueError("mix of trees and generators; apply psi to one kind at a time")
    return Expr("mi", x.map(psi_hat), args.dim)


def _cmd_mi_act(args) -> Expr:
    d = args.dim
    ops = [parse_expr(s, "mi", d).value for s in args.ops.split(";")]
    m = parse_expr(args.monomial, "mi", d).value
    if any(not isinstance(k, Monomial) for k in m.keys()):
        raise ValueError("the second argument must be a combination of monomials z^β")
    out = m
    for op in ops:
        if any(isinstance(k, Monomial) for k in op.keys()):
            raise ValueError("operators are z^γ D(n) or d_i")
        out = _bilinear(lambda g, b: apply_word([g], b, d), op, out)
    return Expr("mi", out, d)


def _cmd_mi_bracket(args) -> Expr:
    d = args.dim
    x = parse_expr(args.x, "mi", d).value
    y = parse_expr(args.y, "mi", d).value
    if any(isinstance(k, Monomial) for k in list(x.keys()) + list(y.keys())):
        raise ValueError("brackets take generators z^γ D(n) or d_i")
    if args.post:
        f = MultiIndexPostLie(d).post
    else:
        f = mi_bracket0 if args.structural else mi_bracket
    return Expr("mi", _bilinear(f, x, y), d)


def _cmd_normalize(args) -> Expr:
    d = args.dim
    kind = detect_kind(args.expr)
    if kind == "word":
        return Expr("word", parse_expr(args.expr, "word", d).value, d)
    planar = parse_expr(args.expr, "planar", d).value
    return Expr("tree", planar.map(planar_normalize), d)


def _cmd_verify(args) -> int:
    from .oracle import EnumParams, SUITE_NAMES, run_suite

    p = EnumParams(d=args.dim, seed=args.seed)
    kw = {}
    if args.max_edges is not None:
        kw["maxEdges"] = args.max_edges
    if args.max_dec is not None:
        kw["maxDecComponent"] = args.max_dec
    if args.samples is not None:
        kw["samples"] = args.samples
    p = p.with_(**kw)
    names = SUITE_NAMES if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        rep = run_suite(name, p)
        ok &= rep.passed
        if args.format == "json":
            print(rep.to_json(timing=not args.no_timing))
        else:
            print(rep.summary())
            for f in rep.failures[:5]:
                print("  failure:", f)
    return 0 if ok else 1


_COMMANDS = {
    "graft": lambda a: _cmd_graft(a),
    "dgraft": lambda a: _cmd_graft(a, deformed=True),
    "up": _cmd_up,
    "post": _cmd_post,
    "bracket": _cmd_bracket,
    "star": _cmd_star,
    "star2": _cmd_star2,
    "delta": _cmd_delta,
    "psi": _cmd_psi,
    "mi-act": _cmd_mi_act,
    "mi-bracket": _cmd_mi_bracket,
    "normalize": _cmd_normalize,
}


def _scaling(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.strip("()").split(","))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dim", type=int, default=argparse.SUPPRESS, help="space dimension d (vectors have d+1 entries)")
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--scaling", type=_scaling, default=argparse.SUPPRESS, help="e.g. (2,1); default parabolic")

    ap = argparse.ArgumentParser(prog="postlie", description="Post-Lie products on decorated trees and multi-indices.", parents=[common])
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name: str, help: str, *pos: str):
        sp = sub.add_parser(name, help=help, parents=[common])
        for p in pos:
            sp.add_argument(p)
        return sp

    for name, help in (("graft", "σ ↷^a τ"), ("dgraft", "deformed grafting σ ↷̂^a τ")):
        add(name, help, "sigma", "tau").add_argument("--dec", "-a", help="edge decoration a, default 0")
    sp = add("up", "↑^i τ")
    sp.add_argument("i", type=int)
    sp.add_argument("tau")
    add("post", "x ▷̂ y on X_i and planted trees", "x", "y")
    add("bracket", "derived bracket [[x,y]]", "x", "y").add_argument("--structural", action="store_true", help="[x,y]_0 only")
    add("star", "A * B in the envelope", "a", "b")
    sp = add("star2", "σ ⋆₂ τ for a PBW word σ", "sigma", "tau")
    sp.add_argument("--b", "-b", help="planting decoration b, default 0")
    sp.add_argument("--multinomial", action="store_true", help="weight X^k spreads by k!/∏k_v!")
    add("delta", "shuffle coproduct", "a")
    add("psi", "Ψ of a noise-at-every-node tree, or Ψ̂ of X_i / I_a(τ)", "tree")
    add("mi-act", "apply operators (';'-separated, first acts first) to a monomial", "ops", "monomial")
    sp = add("mi-bracket", "bracket of multi-index generators", "x", "y")
    sp.add_argument("--structural", action="store_true")
    sp.add_argument("--post", action="store_true", help="the product ▶̂ instead")
    add("normalize", "planar tree to non-planar basis, or PBW normal form of a word", "expr")
    sp = add("verify", "run a verification suite")
    sp.add_argument("--suite", default="all")
    sp.add_argument("--max-edges", type=int)
    sp.add_argument("--max-dec", type=int)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--no-timing", action="store_true", help="omit wall times from JSON output")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    args.dim = getattr(args, "dim", 1)
    args.format = getattr(args, "format", "text")
    try:
        if args.dim < 0:
            raise ValueError("--dim must be >= 0")
        scaling = check_scaling(getattr(args, "scaling", None) or parabolic(args.dim))
        if len(scaling) != args.dim + 1:
            raise DimensionError(f"--scaling needs {args.dim + 1} entries")
        if args.cmd == "verify":
            from .oracle import SUITE_NAMES

            if args.suite != "all" and args.suite not in SUITE_NAMES:
                raise ValueError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITE_NAMES))}")
            return _cmd_verify(args)
        result = _COMMANDS[args.cmd](args)
    except (ValueError, IndexError, TypeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    print(format_element(result, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
