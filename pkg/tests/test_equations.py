import pytest

from offrado import (
    EquationSyntaxError,
    LinearEquation,
    c_equation,
    eval_triple,
    parse_equation,
    q_equation,
    solutions_in_range,
    triples_containing,
)
from oracles import oracle_triples


def test_parse_basic_forms():
    assert parse_equation("x+y+2=z") == LinearEquation(1, 1, 2)
    assert parse_equation("x+3*y=z") == LinearEquation(1, 3, 0)
    assert parse_equation("2*x+y-5=z") == LinearEquation(2, 1, -5)
    assert parse_equation("x+y=z") == LinearEquation(1, 1, 0)


def test_parse_is_whitespace_insensitive():
    assert parse_equation("  x + 3 * y + 7 = z ") == LinearEquation(1, 3, 7)


def test_parse_rejects_zero_coefficient():
    with pytest.raises(EquationSyntaxError) as err:
        parse_equation("x+0*y=z")
    assert err.value.offset == 2


@pytest.mark.parametrize(
    "text,offset",
    [
        ("x+y", 3),          # missing '=z'
        ("x*y=z", 1),        # '*' where '+' expected
        ("y+x=z", 0),        # variables out of order
        ("x+y+z=z", 4),      # constant must be an integer
        ("x+y=z trailing", 6),
        ("x+y+2=w", 6),
        ("-2*x+y=z", 0),     # negative coefficients are not in the grammar
    ],
)
def test_parse_syntax_errors_carry_offsets(text, offset):
    with pytest.raises(EquationSyntaxError) as err:
        parse_equation(text)
    assert err.value.offset == offset


def test_equation_text_round_trips():
    for eq in (LinearEquation(1, 1, 2), LinearEquation(2, 3, -4), LinearEquation(1, 7, 0)):
        assert parse_equation(eq.text()) == eq


def test_constructor_rejects_bad_coefficients():
    with pytest.raises(ValueError):
        LinearEquation(0, 1, 0)
    with pytest.raises(ValueError):
        LinearEquation(1, -2, 0)


def test_eval_triple():
    assert eval_triple(LinearEquation(1, 1, 2), 1, 1) == 4
    assert eval_triple(LinearEquation(1, 1, 0), 1, 1) == 2
    assert eval_triple(LinearEquation(1, 3, 0), 2, 4) == 14
    assert eval_triple(LinearEquation(1, 1, -5), 1, 1) == -3  # caller filters


def test_solutions_in_range_examples():
    assert [t.values() for t in solutions_in_range(LinearEquation(1, 1, 1), 3)] == [(1, 1, 3)]
    assert [t.values() for t in solutions_in_range(LinearEquation(1, 2, 0), 5)] == [
        (1, 1, 3),
        (2, 1, 4),
        (1, 2, 5),
        (3, 1, 5),
    ]
    assert solutions_in_range(LinearEquation(1, 1, 5), 5) == []


def test_solutions_ordering_is_ascending_z_x_y():
    for eq in (c_equation(2), q_equation(3), LinearEquation(2, 1, -1)):
        triples = solutions_in_range(eq, 30)
        keys = [(t.z, t.x, t.y) for t in triples]
        assert keys == sorted(keys)


@pytest.mark.parametrize(
    "eq",
    [
        c_equation(0),
        c_equation(2),
        c_equation(-3),
        q_equation(1),
        q_equation(3),
        LinearEquation(2, 3, 1),
        LinearEquation(1, 1, -10),
    ],
)
def test_solutions_match_brute_force(eq):
    for n in (1, 2, 7, 40, 200):
        got = [(t.x, t.y, t.z) for t in solutions_in_range(eq, n)]
        assert sorted(got) == sorted(oracle_triples(eq, n))
        assert all(
            eq.coeff_x * x + eq.coeff_y * y + eq.constant == z for x, y, z in got
        )


def test_symmetric_equation_solutions_are_closed_under_swap():
    for eq in (c_equation(2), c_equation(0), LinearEquation(2, 2, 1)):
        triples = {(t.x, t.y, t.z) for t in solutions_in_range(eq, 60)}
        assert triples == {(y, x, z) for x, y, z in triples}


def test_triples_containing_is_the_membership_filter():
    for eq in (c_equation(2), q_equation(2)):
        for n in (1, 10, 100):
            everything = solutions_in_range(eq, n)
            for m in range(1, n + 1):
                expected = [t for t in everything if m in (t.x, t.y, t.z)]
                assert triples_containing(eq, m, n) == expected


def test_triples_containing_examples():
    hits = triples_containing(c_equation(2), 4, 8)
    assert (1, 1, 4) in [t.values() for t in hits]
    top = triples_containing(c_equation(2), 8, 8)
    assert top and all(t.z == 8 for t in top)  # 8 can only appear as z
    assert triples_containing(c_equation(2), 3, 3) == []


def test_tags_flow_into_triples():
    assert solutions_in_range(c_equation(1), 3)[0].equation_tag == "c"
    assert solutions_in_range(LinearEquation(1, 2, 0), 5)[0].equation_tag == "x+2*y=z"
