from __future__ import annotations

import json
import random
from fractions import Fraction

import pytest
from hypothesis import given

from postlie.cli import ParseError, format_element, main, parse_expr
from postlie.core import DimensionError, LinComb
from postlie.oracle import random_element
from postlie.treealgebra import Planted, XGen
from postlie.trees import NOISE, Tree, kernel, leaf, noise_tree, one

from strategies import lincombs, trees


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


def test_parse_tree_example():
    e = parse_expr("X^(1,0) Xi I[(0,1)](Xi)")
    t = Tree((1, 0), ((NOISE, leaf(1)), (kernel((0, 1)), noise_tree(1))))
    assert e.kind == "tree" and e.value == LinComb.single(t)
    assert parse_expr("1").value == LinComb.single(one(1))
    assert parse_expr("0").value == LinComb()
    assert parse_expr("X_0 X_0").value == parse_expr("X^(2,0)").value


def test_parse_word_example():
    e = parse_expr("X_0 ; I[(1,0)](Xi)")
    assert e.kind == "word"
    assert e.value == LinComb.single((XGen(0), Planted((1, 0), noise_tree(1))))


def test_parse_coefficients_and_signs():
    e = parse_expr("1/2*Xi - 3*X_1 + Xi")
    assert e.value == LinComb([(noise_tree(1), Fraction(3, 2)), (leaf(1, (0, 1)), -3)])
    assert format_element(e) == "-3*X^(0,1) + 3/2*Xi"


def test_syntax_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_expr("Xi + I[(1,0)(Xi)")
    assert err.value.pos == 12
    with pytest.raises(ParseError):
        parse_expr("Xi +")
    with pytest.raises(ParseError):
        parse_expr("Xi $")
    with pytest.raises(DimensionError):
        parse_expr("X^(1,0,0)")
    with pytest.raises(DimensionError):
        parse_expr("X_2")


def test_format_zero_and_bracket_spelling():
    assert format_element(parse_expr("0")) == "0"
    assert format_element(parse_expr("0"), "json") == '{"terms": []}'
    bracket = LinComb.single(Planted((0, 0), noise_tree(1)))
    from postlie.cli import Expr

    assert format_element(Expr("gen", bracket, 1)) == "I[(0,0)](Xi)"


@given(lincombs(trees()))
def test_tree_round_trip(x):
    from postlie.cli import Expr

    e = Expr("tree", x, 1)
    assert parse_expr(format_element(e), "tree").value == x


def test_seeded_round_trip_all_kinds():
    rng = random.Random(7)
    for _ in range(200):
        e = random_element(rng)
        back = parse_expr(format_element(e), e.kind, e.d)
        assert back.value == e.value, format_element(e)


def test_mi_parsing():
    e = parse_expr("2*z_1 z_(1,0)^2 D(0,1) - d_0")
    assert e.kind == "mi" and len(e.value) == 2
    assert format_element(e) == "-d_0 + 2*z_1 z_(1,0)^2 D(0,1)"
    with pytest.raises(ParseError):
        parse_expr("D(1,0) D(0,1)")
    with pytest.raises(ParseError):
        parse_expr("z_1 d_0")


def test_post_command(capsys):
    assert run(capsys, "post", "X_0", "I[(1,0)](Xi)", "--dim", "1")[:2] == (0, "I[(1,0)](X^(1,0) Xi)")


def test_star_unit(capsys):
    assert run(capsys, "star", "1", "I[(0,0)](Xi)")[:2] == (0, "I[(0,0)](Xi)")


def test_json_is_sorted_and_stable(capsys):
    a = run(capsys, "star", "X_0", "I[(1,0)](Xi)", "--format", "json")[1]
    b = run(capsys, "star", "X_0", "I[(1,0)](Xi)", "--format", "json")[1]
    assert a == b
    elems = [t["elem"] for t in json.loads(a)["terms"]]
    assert elems == sorted(elems)


def test_other_commands(capsys):
    assert run(capsys, "bracket", "I[(1,0)](Xi)", "X_0", "--structural")[1] == "I[(0,0)](Xi)"
    assert run(capsys, "up", "1", "Xi")[1] == "X^(0,1) Xi"
    assert run(capsys, "graft", "1", "1")[1] == "I[(0,0)](1)"
    assert run(capsys, "dgraft", "Xi", "X_0 Xi", "-a", "(1,1)")[1] == "X^(1,0) Xi I[(1,1)](Xi) + Xi I[(0,1)](Xi)"
    assert run(capsys, "star2", "X_0", "Xi", "--b", "(1,0)")[1] == "X^(1,0) Xi"
    assert run(capsys, "delta", "X_0")[1] == "{1 | X_0} + {X_0 | 1}"
    assert run(capsys, "psi", "Xi I[(0,0)](Xi)")[1] == "z_0 z_1"
    assert run(capsys, "psi", "I[(1,0)](Xi)")[1] == "z_0 D(1,0)"
    assert run(capsys, "mi-act", "d_0", "z_(1,0)")[1] == "2*z_(2,0)"
    assert run(capsys, "mi-bracket", "D(1,0)", "d_0", "--structural")[1] == "D(0,0)"
    assert run(capsys, "normalize", "Xi I[(1,0)](Xi) X_0")[1] == "X^(1,0) Xi I[(1,0)](Xi) + Xi I[(0,0)](Xi)"
    assert run(capsys, "normalize", "I[(1,0)](Xi) ; X_0")[1] == "{I[(0,0)](Xi)} + {X_0 ; I[(1,0)](Xi)}"


def test_exit_codes(capsys):
    code, _, err = run(capsys, "post", "X_0", "I[(1,0)(Xi)")
    assert code == 2 and "position" in err
    assert run(capsys, "post", "X_0", "I[(1,0,0)](Xi)")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", "--suite", "nope")[0] == 2
    assert run(capsys, "verify", "--suite", "golden-figures")[0] == 0
    assert run(capsys, "verify", "--suite", "brackets-equal", "--max-edges", "1", "--format", "json")[0] == 0
