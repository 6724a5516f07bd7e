import pytest

from qsym.dsl import (
    Bin,
    ast_equal,
    eval_text,
    evaluate,
    load_fixture_file,
    parse,
    to_text,
)
from qsym.errors import ParseError
from qsym.partitions import Partition, PartLin, antisym2
from qsym.polyq import N_POLY


def test_parse_compose_function_form():
    ast = parse("compose(cap, cup)")
    assert isinstance(ast, Bin) and ast.op == "compose"


def test_parse_scale_node():
    ast = parse("scale(poly(n-4), pk(5))")
    assert to_text(ast) == "scale(poly(n - 4), pk(5))"


def test_parse_literal_difference():
    ast = parse("asym(block(2,2)) - asym(P(4,4){1 3' | 2 4' | 3 1' | 4 2'})")
    assert isinstance(ast, Bin) and ast.op == "sub"


def test_eval_loop():
    e = eval_text("compose(cap, cup)")
    assert e == PartLin.of(Partition.identity(0), N_POLY)
    assert eval_text("cap * cup") == e


def test_eval_asym_id2():
    assert eval_text("asym(id(2))") == antisym2()


def test_eval_pk2():
    e = eval_text("pk(2)")
    assert e == PartLin.of(Partition.parse("P(0,4){1' 4' | 2' 3'}"))


def test_precedence_star_over_ox_over_sum():
    # a * b ox c parses as (a*b) ox c
    lhs = parse("id(1) * id(1) ox cap")
    explicit = parse("(id(1) * id(1)) ox cap")
    assert ast_equal(lhs, explicit)
    lhs = parse("cap ox cap + cup * cap ox cap")
    # sums bind last
    assert isinstance(lhs, Bin) and lhs.op == "add"


def test_roundtrip_print_parse():
    texts = [
        "compose(cap, cup)",
        "scale(poly(n^2 - 2*n), asym(pk(3)))",
        "adj(merge) * fork + sing ox sing",
        "P(2,2){1 2' | 2 1'} * cross",
        "rotl(merge) ox rotr(fork)",
    ]
    for t in texts:
        ast = parse(t)
        assert ast_equal(parse(to_text(ast)), ast)


def test_arity_error_positions():
    with pytest.raises(ParseError) as e:
        eval_text("cap * cap")
    assert "compose" in str(e.value)
    with pytest.raises(ParseError):
        eval_text("cap + cup")
    with pytest.raises(ParseError):
        eval_text("asym(sing)")
    with pytest.raises(ParseError):
        eval_text("nonexistent * cap")


def test_syntax_error_has_position():
    with pytest.raises(ParseError) as e:
        parse("cap + + cup")
    assert e.value.line == 1
    with pytest.raises(ParseError):
        parse("cap cup")


def test_unknown_poly_token():
    with pytest.raises(ParseError):
        parse("scale(poly(x), cap)")


def test_eval_rotations_match_algebra():
    m = Partition.merge()
    assert eval_text("rotl(merge)") == PartLin.of(m.rotate("left", "down"))
    assert eval_text("rotr(merge)") == PartLin.of(m.rotate("right", "down"))
    assert eval_text("adj(cap)") == PartLin.of(Partition.cup())


def test_poly_literals():
    ast = parse("scale(poly((n-4)*(n-6)*(n-8)), id(1))")
    expected = (N_POLY - 4) * (N_POLY - 6) * (N_POLY - 8)
    assert evaluate(ast).terms[Partition.identity(1)] == expected


def test_fixture_file():
    text = """
# a loop closes to n
check loop-closure: compose(cap, cup) == scale(poly(n), P(0,0){})

let a2 = asym(id(2))
check projector: a2 * a2 == a2
"""
    checks = load_fixture_file(text)
    assert [c.name for c in checks] == ["loop-closure", "projector"]
    assert all(c.lhs == c.rhs for c in checks)


def test_fixture_file_rejects_garbage():
    with pytest.raises(ParseError):
        load_fixture_file("cheque loop: cap == cap")
    with pytest.raises(ParseError):
        load_fixture_file("let cap = cup")
    with pytest.raises(ParseError):
        load_fixture_file("check x: cap = cap")
