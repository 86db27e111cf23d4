import random

import pytest

from offrado import (
    Color,
    Coloring,
    PartialColoring,
    PeriodicCertificate,
    c_equation,
    is_valid_coloring,
    q_equation,
    restrict_periodic,
)
from oracles import mask_to_coloring, oracle_is_valid


def test_color_opposites():
    assert Color.RED.opposite is Color.BLUE
    assert Color.BLUE.opposite is Color.RED
    assert len(Color) == 2


def test_coloring_construction_and_accessors():
    col = Coloring("RRBB")
    assert col.n == 4
    assert col.color_of(1) is Color.RED
    assert col.color_of(4) is Color.BLUE
    assert col.positions(Color.RED) == [1, 2]
    assert Coloring.from_red_set(4, {1, 2}) == col
    assert col.swapped() == Coloring("BBRR")
    assert col.restricted(2) == Coloring("RR")
    assert col.extended(Color.RED) == Coloring("RRBBR")
    with pytest.raises(ValueError):
        Coloring("RXB")


def test_partial_coloring_accessors():
    pc = PartialColoring.from_assignments(5, {1: Color.RED, 4: Color.BLUE})
    assert pc.chars == "RUUBU"
    assert pc.color_of(1) is Color.RED
    assert pc.color_of(2) is None
    assert pc.assigned() == {1: Color.RED, 4: Color.BLUE}
    assert not pc.is_total()
    total = PartialColoring("RB")
    assert total.is_total() and total.to_coloring() == Coloring("RB")
    with pytest.raises(ValueError):
        PartialColoring.from_assignments(3, {9: Color.RED})


def test_validity_of_block_coloring():
    # Red block [1, 3], blue block [4, 7]: valid for (x+y+2=z, x+y=z).
    col = Coloring("RRRBBBB")
    assert is_valid_coloring(col, c_equation(2), q_equation(1)).valid


def test_all_red_violation_is_first_in_enumeration_order():
    verdict = is_valid_coloring(Coloring("R" * 7), c_equation(2), q_equation(1))
    assert not verdict.valid
    assert verdict.violation.triple.values() == (1, 1, 4)
    assert verdict.violation.equation_tag == "c"
    assert verdict.violation.color is Color.RED


def test_red_equation_checked_before_blue():
    # All-monochromatic both ways: the red equation's offender wins.
    verdict = is_valid_coloring(Coloring("B" * 7), c_equation(2), q_equation(1))
    assert not verdict.valid
    assert verdict.violation.color is Color.BLUE
    assert verdict.violation.triple.values() == (1, 1, 2)
    assert verdict.violation.equation_tag == "q"


def test_tiny_domain_is_trivially_valid():
    for chars in ("R", "B"):
        assert is_valid_coloring(Coloring(chars), c_equation(2), q_equation(1)).valid


def test_color_swap_duality_exhaustive():
    e0, e1 = c_equation(1), q_equation(2)
    n = 9
    for mask in range(1 << n):
        col = mask_to_coloring(mask, n)
        assert (
            is_valid_coloring(col, e0, e1).valid
            == is_valid_coloring(col.swapped(), e1, e0).valid
        )


def test_restriction_of_valid_coloring_stays_valid():
    rng = random.Random(7)
    e0, e1 = c_equation(2), q_equation(2)
    found = 0
    for _ in range(4000):
        col = mask_to_coloring(rng.getrandbits(14), 14)
        if not is_valid_coloring(col, e0, e1).valid:
            continue
        found += 1
        for m in range(0, 14):
            assert is_valid_coloring(col.restricted(m), e0, e1).valid
    assert found > 0


def test_validity_agrees_with_triple_loop_oracle_exhaustively():
    e0, e1 = c_equation(2), q_equation(1)
    n = 12
    for mask in range(1 << n):
        col = mask_to_coloring(mask, n)
        assert is_valid_coloring(col, e0, e1).valid == oracle_is_valid(col, e0, e1)


def test_restrict_periodic_parity():
    parity = PeriodicCertificate(2, (Color.RED, Color.BLUE))
    assert restrict_periodic(parity, 4) == Coloring("BRBR")


def test_restrict_periodic_degenerate_periods():
    assert restrict_periodic(PeriodicCertificate(1, (Color.RED,)), 3) == Coloring("RRR")
    pattern = PeriodicCertificate(3, (Color.RED, Color.BLUE, Color.BLUE))
    # Positions 1, 2, 3 have residues 1, 2, 0.
    assert restrict_periodic(pattern, 3) == Coloring("BBR")
