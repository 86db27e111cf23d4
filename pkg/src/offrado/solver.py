"""Propagation-assisted exhaustive search for valid two-colorings.

For a domain [1, n] the solver indexes every solution triple of both
equations by the positions it mentions.  Whenever all distinct elements of
a triple except one carry the threatening color (red for e_red, blue for
e_blue), the remaining element is forced to the opposite color; a triple
that becomes fully monochromatic in its threatening color is a conflict.
The search branches on the lowest unset position, red before blue, and
propagates to fixpoint after every decision, so explored trees, node
counts and witnesses are deterministic.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable

from .coloring import Color, Coloring, PartialColoring
from .equations import LinearEquation, SolutionTriple, solutions_in_range

if TYPE_CHECKING:
    from .certificates import PeriodicCertificate

ALGORITHM_VERSION = "1"
DEFAULT_NODE_BUDGET = 10**9

_UNSET, _RED, _BLUE = 0, 1, 2
_TO_COLOR = {_RED: Color.RED, _BLUE: Color.BLUE}
_FROM_COLOR = {Color.RED: _RED, Color.BLUE: _BLUE}


class ResourceLimitError(RuntimeError):
    """Search aborted after exceeding its node budget."""


@dataclass(frozen=True)
class ForcedAssignment:
    """One unit-propagation consequence and the triple that justifies it."""

    position: int
    color: Color
    triple: SolutionTriple


@dataclass(frozen=True)
class Progress:
    """Propagation reached a fixpoint without contradiction."""

    coloring: PartialColoring
    forced: tuple[ForcedAssignment, ...]


@dataclass(frozen=True)
class Conflict:
    """Some triple is fully monochromatic in its forbidden color."""

    triple: SolutionTriple
    equation_tag: str


PropagationOutcome = Progress | Conflict


@dataclass(frozen=True)
class Unsat:
    """No valid coloring of [1, n] exists; nodes = decisions explored."""

    nodes: int


@dataclass(frozen=True)
class Witness:
    """A valid coloring of [1, n] found by the search."""

    coloring: Coloring
    nodes: int


@dataclass(frozen=True)
class Finite:
    """Search proof that the Rado number equals `value`."""

    value: int
    witness: Coloring  # valid on [1, value - 1]
    nodes_explored: int


@dataclass(frozen=True)
class Unknown:
    """Every n <= bound admits a valid coloring; no finite value established."""

    bound: int
    witness: Coloring  # valid on [1, bound]
    nodes_explored: int = 0


@dataclass(frozen=True)
class InfiniteCertified:
    """Infinitude established by a periodic certificate (see certificates)."""

    certificate: PeriodicCertificate


SearchResult = Finite | Unknown | InfiniteCertified


class _Instance:
    """Mutable search state for one (e_red, e_blue, n) problem."""

    def __init__(self, e_red: LinearEquation, e_blue: LinearEquation, n: int):
        self.n = n
        # Each constraint: (distinct elements, threat color, justifying triple).
        self.constraints: list[tuple[tuple[int, ...], int, SolutionTriple]] = []
        occurs: list[list[int]] = [[] for _ in range(n + 1)]
        for eq, threat in ((e_red, _RED), (e_blue, _BLUE)):
            for t in solutions_in_range(eq, n):
                idx = len(self.constraints)
                els = t.distinct_values()
                self.constraints.append((els, threat, t))
                for e in els:
                    occurs[e].append(idx)
        self.occurs = occurs
        self.state = [_UNSET] * (n + 1)
        self.trail: list[int] = []

    def assign(self, pos: int, value: int) -> None:
        self.state[pos] = value
        self.trail.append(pos)

    def undo_to(self, mark: int) -> None:
        while len(self.trail) > mark:
            self.state[self.trail.pop()] = _UNSET

    def run_fixpoint(
        self,
        constraint_ids: Iterable[int],
        record: list[ForcedAssignment] | None = None,
    ) -> Conflict | None:
        """Process the given constraints and all consequences, FIFO order."""
        state = self.state
        constraints = self.constraints
        queue = deque(constraint_ids)
        while queue:
            els, threat, triple = constraints[queue.popleft()]
            unset_el = 0
            dead = False
            for e in els:
                v = state[e]
                if v == _UNSET:
                    if unset_el:
                        dead = True  # two unset elements: nothing to conclude
                        break
                    unset_el = e
                elif v != threat:
                    dead = True  # an anti-threat element satisfies the triple
                    break
            if dead:
                continue
            if not unset_el:
                return Conflict(triple, triple.equation_tag)
            forced = threat ^ 3  # flips _RED <-> _BLUE
            self.assign(unset_el, forced)
            if record is not None:
                record.append(ForcedAssignment(unset_el, _TO_COLOR[forced], triple))
            queue.extend(self.occurs[unset_el])
        return None

    def first_unset(self, start: int) -> int:
        """Lowest unset position >= start, or 0 if the coloring is total."""
        state = self.state
        for p in range(start, self.n + 1):
            if state[p] == _UNSET:
                return p
        return 0

    def snapshot(self) -> Coloring:
        return Coloring("".join("R" if v == _RED else "B" for v in self.state[1:]))

    def partial_snapshot(self) -> PartialColoring:
        chars = {_UNSET: "U", _RED: "R", _BLUE: "B"}
        return PartialColoring("".join(chars[v] for v in self.state[1:]))


def propagate(
    pc: PartialColoring, e_red: LinearEquation, e_blue: LinearEquation
) -> PropagationOutcome:
    """Apply unit forcing to fixpoint over a partial coloring.

    Any triple of e_red (resp. e_blue) whose distinct elements are all red
    (resp. blue) except exactly one unset element forces that element to the
    opposite color.  A triple fully monochromatic in its forbidden color is
    a Conflict, reported with the justifying triple; re-derivations of an
    existing color are no-ops.
    """
    inst = _Instance(e_red, e_blue, pc.n)
    for m, color in pc.assigned().items():
        inst.state[m] = _FROM_COLOR[color]
    record: list[ForcedAssignment] = []
    conflict = inst.run_fixpoint(range(len(inst.constraints)), record)
    if conflict is not None:
        return conflict
    return Progress(inst.partial_snapshot(), tuple(record))


def exhaustive_check(
    e_red: LinearEquation,
    e_blue: LinearEquation,
    n: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Unsat | Witness:
    """Decide whether [1, n] admits a valid coloring.

    Depth-first over positions in ascending order, red branch before blue,
    unit propagation after every decision; both colors of position 1 are
    explored (the problems are off-diagonal, so there is no color-swap
    symmetry to break).  Raises ResourceLimitError past node_budget
    decisions.
    """
    if n <= 0:
        return Witness(Coloring(""), 0)
    inst = _Instance(e_red, e_blue, n)
    if inst.run_fixpoint(range(len(inst.constraints))) is not None:
        return Unsat(0)
    p = inst.first_unset(1)
    if not p:
        return Witness(inst.snapshot(), 0)
    nodes = 0
    frames: list[list[int]] = [[p, 0, len(inst.trail)]]
    while frames:
        frame = frames[-1]
        pos, branch, mark = frame
        inst.undo_to(mark)
        if branch == 2:
            frames.pop()
            continue
        frame[1] += 1
        nodes += 1
        if nodes > node_budget:
            raise ResourceLimitError(
                f"search at n={n} exceeded the node budget of {node_budget}"
            )
        inst.assign(pos, _RED if branch == 0 else _BLUE)
        if inst.run_fixpoint(inst.occurs[pos]) is None:
            nxt = inst.first_unset(pos + 1)
            if not nxt:
                return Witness(inst.snapshot(), nodes)
            frames.append([nxt, 0, len(inst.trail)])
    return Unsat(nodes)


def compute_rado(
    e_red: LinearEquation,
    e_blue: LinearEquation,
    bound: int,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Finite | Unknown:
    """Least N <= bound such that [1, N] has no valid coloring, by ascending scan.

    Finite(N) carries a witness for [1, N-1] (so N is exact, not just an
    upper bound) and the total decision count.  When every n <= bound still
    admits a witness the result is Unknown(bound) -- claiming infinitude is
    the certificates module's job, not the search's.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    witness = Coloring("")
    total_nodes = 0
    for n in range(1, bound + 1):
        res = exhaustive_check(e_red, e_blue, n, node_budget)
        total_nodes += res.nodes
        if isinstance(res, Unsat):
            return Finite(n, witness, total_nodes)
        witness = res.coloring
    return Unknown(bound, witness, total_nodes)


def default_bound(formula_value: int | None) -> int:
    """Search bound when none is given: 4x the predicted value, else 64."""
    if formula_value is not None:
        return 4 * formula_value
    return 64
