import random

import pytest

from offrado import (
    Color,
    Coloring,
    Conflict,
    Finite,
    PartialColoring,
    Progress,
    ResourceLimitError,
    Unknown,
    Unsat,
    Witness,
    c_equation,
    compute_rado,
    exhaustive_check,
    is_valid_coloring,
    propagate,
    q_equation,
)
from oracles import mask_to_coloring, oracle_sat

PAIR_21 = (c_equation(2), q_equation(1))


def test_propagate_from_single_red_builds_the_block_coloring():
    out = propagate(PartialColoring.from_assignments(7, {1: Color.RED}), *PAIR_21)
    assert isinstance(out, Progress)
    assert out.coloring.chars == "RRRBBBB"
    first = out.forced[0]
    assert (first.position, first.color) == (4, Color.BLUE)
    assert first.triple.values() == (1, 1, 4)


def test_propagate_assigns_only_previously_unset_positions():
    pc = PartialColoring.from_assignments(7, {1: Color.RED})
    out = propagate(pc, *PAIR_21)
    assert isinstance(out, Progress)
    positions = [f.position for f in out.forced]
    assert len(positions) == len(set(positions))
    assert 1 not in positions


def test_propagate_on_full_domain_reaches_the_forced_contradiction():
    # At n = 8 a single red 1 already contradicts: there is no valid
    # extension, and the fixpoint finds a monochromatic triple.
    out = propagate(PartialColoring.from_assignments(8, {1: Color.RED}), *PAIR_21)
    assert isinstance(out, Conflict)


def test_propagate_empty_is_a_fixpoint():
    out = propagate(PartialColoring.empty(8), *PAIR_21)
    assert isinstance(out, Progress)
    assert out.forced == ()
    assert out.coloring == PartialColoring.empty(8)


def test_propagate_conflict_reports_first_monochromatic_triple():
    pc = PartialColoring.from_assignments(8, {2: Color.RED, 6: Color.RED})
    out = propagate(pc, *PAIR_21)
    assert isinstance(out, Conflict)
    assert out.triple.values() == (2, 2, 6)
    assert out.equation_tag == "c"


def test_propagation_soundness_every_valid_extension_respects_forcings():
    rng = random.Random(41)
    e0, e1 = c_equation(1), q_equation(2)
    n = 10
    for _ in range(80):
        assigned = {
            m: rng.choice((Color.RED, Color.BLUE))
            for m in rng.sample(range(1, n + 1), rng.randint(0, 3))
        }
        pc = PartialColoring.from_assignments(n, assigned)
        out = propagate(pc, e0, e1)
        if isinstance(out, Conflict):
            continue
        forced = {f.position: f.color for f in out.forced}
        # Enumerate every valid total extension of pc.
        free = [m for m in range(1, n + 1) if m not in assigned]
        for mask in range(1 << len(free)):
            colors = dict(assigned)
            for i, m in enumerate(free):
                colors[m] = Color.RED if mask >> i & 1 else Color.BLUE
            col = Coloring.from_assignments(n, colors)
            if is_valid_coloring(col, e0, e1).valid:
                for pos, color in forced.items():
                    assert col.color_of(pos) is color


def test_exhaustive_check_below_and_at_the_threshold():
    sat = exhaustive_check(*PAIR_21, 7)
    assert isinstance(sat, Witness)
    assert is_valid_coloring(sat.coloring, *PAIR_21).valid
    unsat = exhaustive_check(*PAIR_21, 8)
    assert isinstance(unsat, Unsat)


def test_exhaustive_check_trivial_domain():
    assert isinstance(exhaustive_check(c_equation(5), q_equation(4), 1), Witness)


def test_exhaustive_check_agrees_with_full_enumeration():
    for c, q in ((2, 1), (1, 2), (0, 1)):
        e0, e1 = c_equation(c), q_equation(q)
        for n in range(1, 11):
            got = exhaustive_check(e0, e1, n)
            assert isinstance(got, Witness) == oracle_sat(e0, e1, n)


def test_search_is_deterministic():
    a = exhaustive_check(*PAIR_21, 7)
    b = exhaustive_check(*PAIR_21, 7)
    assert a == b
    ra = compute_rado(*PAIR_21, 20)
    rb = compute_rado(*PAIR_21, 20)
    assert ra == rb


def test_compute_rado_finds_the_threshold():
    res = compute_rado(*PAIR_21, 20)
    assert isinstance(res, Finite)
    assert res.value == 8
    assert res.witness.n == 7
    assert is_valid_coloring(res.witness, *PAIR_21).valid


def test_compute_rado_schur_value():
    res = compute_rado(c_equation(0), q_equation(1), 20)
    assert isinstance(res, Finite)
    assert res.value == 5


def test_compute_rado_unknown_with_valid_witness():
    e0, e1 = c_equation(1), q_equation(3)
    res = compute_rado(e0, e1, 40)
    assert isinstance(res, Unknown)
    assert res.bound == 40
    assert res.witness.n == 40
    assert is_valid_coloring(res.witness, e0, e1).valid


def test_compute_rado_rejects_bad_bound():
    with pytest.raises(ValueError):
        compute_rado(*PAIR_21, 0)


def test_unsat_is_monotone_in_n():
    assert isinstance(exhaustive_check(*PAIR_21, 8), Unsat)
    assert isinstance(exhaustive_check(*PAIR_21, 9), Unsat)
    assert isinstance(exhaustive_check(*PAIR_21, 10), Unsat)


def test_off_diagonal_swap_gives_equal_values():
    for c, q in ((2, 1), (1, 2), (2, 2)):
        e0, e1 = c_equation(c), q_equation(q)
        a = compute_rado(e0, e1, 30)
        b = compute_rado(e1, e0, 30)
        assert isinstance(a, Finite) and isinstance(b, Finite)
        assert a.value == b.value


def test_node_budget_aborts_with_resource_error():
    with pytest.raises(ResourceLimitError):
        exhaustive_check(c_equation(4), q_equation(2), 23, node_budget=5)


def test_negative_constant_forces_unconditionally():
    # x + y - 1 = z has the one-element solution (1, 1, 1): any coloring of
    # {1} alone is already refuted when both equations carry it.
    e = c_equation(-1)
    out = propagate(PartialColoring.empty(3), e, q_equation(1))
    assert isinstance(out, Progress)
    assert (out.forced[0].position, out.forced[0].color) == (1, Color.BLUE)
    res = exhaustive_check(e, e, 1)
    assert isinstance(res, Unsat)
