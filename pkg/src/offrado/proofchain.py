"""Forcing chains: scripted color derivations replayed at concrete (c, q).

A chain starts from a single colored position (1 is red or blue) and lists
steps of the shape "triple T solves equation E; every element of T except
one already carries E's threatening color; therefore the remaining element
takes the opposite color".  The final triple comes out monochromatic,
contradicting the assumption that a valid coloring existed.  Chains are
bundled as JSON (triples of affine expressions in c and q over a
denominator of 1 or 2) and cover the upper-bound case analysis of the
closed form: branches 2.1/2.2 for q = 1 and 3.1.1/3.1.2/3.2.1/3.2.2 for
q >= 2, split by the parity of c and the color of 1.

Replay validates each step mechanically: expressions must evaluate to
integers, triples must solve their tagged equation inside [1, n], and
premises must already be colored.  Forcing a position that already carries
the opposite color is itself a finished contradiction (the step's triple is
monochromatic on the spot); at parameters where expression values collide
this happens before the scripted terminal, and the replayer records the
early conflict and keeps checking the remaining steps, which stay locally
valid derivations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from importlib import resources

from .coloring import Color


class DivisibilityError(ValueError):
    """Expression evaluation produced a non-integer."""

    def __init__(self, expr: AffineExpr, c: int, q: int):
        super().__init__(f"{expr} is not an integer at c={c}, q={q}")
        self.expr = expr


class ChainFormatError(ValueError):
    """A bundled chain file is malformed."""


@dataclass(frozen=True)
class AffineExpr:
    """(k0 + kc*c + kq*q + kcq*c*q) / den with den in {1, 2}.

    Evaluation checks divisibility instead of rounding: a half-integer
    value raises DivisibilityError.
    """

    k0: int = 0
    kc: int = 0
    kq: int = 0
    kcq: int = 0
    den: int = 1

    def __post_init__(self) -> None:
        if self.den not in (1, 2):
            raise ValueError(f"denominator must be 1 or 2, got {self.den}")

    def evaluate(self, c: int, q: int) -> int:
        num = self.k0 + self.kc * c + self.kq * q + self.kcq * c * q
        if num % self.den:
            raise DivisibilityError(self, c, q)
        return num // self.den

    def __str__(self) -> str:
        terms = []
        for coeff, name in ((self.kcq, "c*q"), (self.kc, "c"), (self.kq, "q")):
            if coeff == 1:
                terms.append(name)
            elif coeff:
                terms.append(f"{coeff}*{name}")
        if self.k0 or not terms:
            terms.append(str(self.k0))
        body = " + ".join(terms)
        if self.den == 1:
            return body
        return f"({body})/2" if len(terms) > 1 else f"{body}/2"


@dataclass(frozen=True)
class ChainStep:
    """One forcing line: (x, y, z) tagged "c" or "q", forcing one element.

    forced_index selects x (0), y (1) or z (2); forced_color is always the
    opposite of the tagged equation's threatening color.  Steps that
    transcription had to repair carry the original expressions in
    `verbatim` (the repaired triple is the one replayed).
    """

    x: AffineExpr
    y: AffineExpr
    z: AffineExpr
    tag: str
    forced_index: int
    forced_color: Color
    verbatim: tuple[AffineExpr, AffineExpr, AffineExpr] | None = None
    note: str = ""

    @property
    def normalized(self) -> bool:
        return self.verbatim is not None

    def exprs(self) -> tuple[AffineExpr, AffineExpr, AffineExpr]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class TerminalConflict:
    """The monochromatic triple the chain is driving towards."""

    x: AffineExpr
    y: AffineExpr
    z: AffineExpr
    tag: str
    color: Color

    def exprs(self) -> tuple[AffineExpr, AffineExpr, AffineExpr]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class Preconditions:
    """Parameter shape a chain was written for (metadata, not enforced)."""

    c_parity: str | None = None
    q_parity: str | None = None
    q_exact: int | None = None
    q_min: int | None = None

    def satisfied_by(self, c: int, q: int) -> bool:
        if self.c_parity == "even" and c % 2 != 0:
            return False
        if self.c_parity == "odd" and c % 2 != 1:
            return False
        if self.q_parity == "even" and q % 2 != 0:
            return False
        if self.q_parity == "odd" and q % 2 != 1:
            return False
        if self.q_exact is not None and q != self.q_exact:
            return False
        if self.q_min is not None and q < self.q_min:
            return False
        return True


@dataclass(frozen=True)
class Chain:
    case_id: str
    description: str
    root_color: Color
    preconditions: Preconditions
    steps: tuple[ChainStep, ...]
    terminal: TerminalConflict
    notes: tuple[str, ...] = ()

    def default_domain(self, c: int, q: int) -> int:
        """The domain the chain argues over: the case's closed-form value."""
        if self.case_id.startswith("2"):
            return 2 * c + 4
        return (q + 1) * (c + 2) + c + 1


class FailureReason(Enum):
    NOT_A_SOLUTION = "not-a-solution"
    PREMISE_COLOR_MISSING = "premise-color-missing"
    OUT_OF_RANGE = "out-of-range"
    DIVISIBILITY = "divisibility"
    COLOR_CONTRADICTION_MIDCHAIN = "color-contradiction-midchain"


class EventKind(Enum):
    ASSIGNED = "assigned"
    REASSERTED = "reasserted"
    CONFLICT = "conflict"


@dataclass(frozen=True)
class ReplayEvent:
    """One replayed step: the instantiated triple and what it did.

    kind CONFLICT means the forced position already carried the opposite
    color, i.e. the triple was monochromatic in the threatening color and
    the contradiction the chain exists to produce has been witnessed here.
    """

    step_index: int  # 1-based; 0 is the root assignment
    triple: tuple[int, int, int] | None
    tag: str | None
    position: int
    color: Color
    kind: EventKind
    normalized: bool = False


@dataclass(frozen=True)
class ReplaySuccess:
    case_id: str
    c: int
    q: int
    n: int
    events: tuple[ReplayEvent, ...]
    terminal_triple: tuple[int, int, int]
    terminal_tag: str
    terminal_color: Color

    @property
    def conflicts(self) -> tuple[ReplayEvent, ...]:
        return tuple(e for e in self.events if e.kind is EventKind.CONFLICT)

    @property
    def normalized_steps(self) -> tuple[int, ...]:
        return tuple(sorted({e.step_index for e in self.events if e.normalized}))


@dataclass(frozen=True)
class StepFailure:
    case_id: str
    step_index: int  # 1-based
    reason: FailureReason
    detail: str


@dataclass(frozen=True)
class TerminalMismatch:
    case_id: str
    detail: str


ReplayResult = ReplaySuccess | StepFailure | TerminalMismatch


def _solves(vals: tuple[int, int, int], tag: str, c: int, q: int) -> bool:
    x, y, z = vals
    if tag == "c":
        return x + y + c == z
    return x + q * y == z


def replay_chain(
    chain: Chain, c: int, q: int, n: int | None = None, strict: bool = False
) -> ReplayResult:
    """Replay a chain at concrete parameters over [1, n].

    n defaults to the case's closed-form domain.  Each step must evaluate
    integrally, lie inside [1, n], solve its tagged equation, and find its
    premise elements already colored with the threatening color; forcing is
    then applied.  Consistent re-assertions are no-ops.  A forced color
    that opposes an existing one is recorded as a conflict event (the
    contradiction itself) and replay continues, unless strict=True, which
    turns it into a COLOR_CONTRADICTION_MIDCHAIN failure.  Success requires
    the terminal triple to come out monochromatic as scripted.
    """
    if n is None:
        n = chain.default_domain(c, q)
    state: dict[int, set[Color]] = {1: {chain.root_color}}
    events: list[ReplayEvent] = [
        ReplayEvent(0, None, None, 1, chain.root_color, EventKind.ASSIGNED)
    ]
    for idx, step in enumerate(chain.steps, start=1):
        try:
            vals = tuple(e.evaluate(c, q) for e in step.exprs())
        except DivisibilityError as exc:
            return StepFailure(chain.case_id, idx, FailureReason.DIVISIBILITY, str(exc))
        out = [v for v in vals if not 1 <= v <= n]
        if out:
            return StepFailure(
                chain.case_id, idx, FailureReason.OUT_OF_RANGE,
                f"{vals} has elements {out} outside [1, {n}]",
            )
        if not _solves(vals, step.tag, c, q):
            return StepFailure(
                chain.case_id, idx, FailureReason.NOT_A_SOLUTION,
                f"{vals} does not solve the {step.tag}-equation at c={c}, q={q}",
            )
        threat = Color.RED if step.tag == "c" else Color.BLUE
        forced_value = vals[step.forced_index]
        missing = [
            v for v in set(vals) - {forced_value}
            if threat not in state.get(v, set())
        ]
        if missing:
            return StepFailure(
                chain.case_id, idx, FailureReason.PREMISE_COLOR_MISSING,
                f"premises {sorted(missing)} of {vals} are not {threat} yet",
            )
        current = state.setdefault(forced_value, set())
        if step.forced_color in current:
            kind = EventKind.REASSERTED
        elif current:
            if strict:
                return StepFailure(
                    chain.case_id, idx, FailureReason.COLOR_CONTRADICTION_MIDCHAIN,
                    f"{forced_value} forced {step.forced_color} but already "
                    f"{step.forced_color.opposite}: {vals} is monochromatic",
                )
            kind = EventKind.CONFLICT
            current.add(step.forced_color)
        else:
            kind = EventKind.ASSIGNED
            current.add(step.forced_color)
        events.append(
            ReplayEvent(idx, vals, step.tag, forced_value, step.forced_color,
                        kind, step.normalized)
        )
    term = chain.terminal
    try:
        tvals = tuple(e.evaluate(c, q) for e in term.exprs())
    except DivisibilityError as exc:
        return TerminalMismatch(chain.case_id, f"terminal triple: {exc}")
    out = [v for v in tvals if not 1 <= v <= n]
    if out:
        return TerminalMismatch(
            chain.case_id, f"terminal {tvals} has elements {out} outside [1, {n}]"
        )
    if not _solves(tvals, term.tag, c, q):
        return TerminalMismatch(
            chain.case_id,
            f"terminal {tvals} does not solve the {term.tag}-equation",
        )
    uncolored = [v for v in set(tvals) if term.color not in state.get(v, set())]
    if uncolored:
        return TerminalMismatch(
            chain.case_id,
            f"terminal {tvals} is not monochromatic: {sorted(uncolored)} never "
            f"became {term.color}",
        )
    return ReplaySuccess(
        chain.case_id, c, q, n, tuple(events), tvals, term.tag, term.color
    )


_CHAIN_FILES = (
    "case_2_1.json",
    "case_2_2.json",
    "case_3_1_1.json",
    "case_3_1_2.json",
    "case_3_2_1.json",
    "case_3_2_2.json",
)


def _parse_expr(obj: object, where: str) -> AffineExpr:
    if (
        not isinstance(obj, dict)
        or not isinstance(obj.get("num"), list)
        or len(obj["num"]) != 4
        or not all(isinstance(k, int) for k in obj["num"])
        or not isinstance(obj.get("den"), int)
    ):
        raise ChainFormatError(f"{where}: expression must be {{num: [4 ints], den: int}}")
    k0, kc, kq, kcq = obj["num"]
    try:
        return AffineExpr(k0, kc, kq, kcq, obj["den"])
    except ValueError as exc:
        raise ChainFormatError(f"{where}: {exc}") from exc


def _parse_color(value: object, where: str) -> Color:
    if value not in ("R", "B"):
        raise ChainFormatError(f"{where}: color must be 'R' or 'B', got {value!r}")
    return Color(value)


def _parse_chain(filename: str, text: str) -> Chain:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ChainFormatError(f"{filename}:{exc.lineno}: {exc.msg}") from exc
    where = filename
    try:
        case_id = doc["case_id"]
        pre = doc.get("preconditions", {})
        steps = []
        for i, raw in enumerate(doc["steps"], start=1):
            where = f"{filename} step {i}"
            tag = raw["tag"]
            if tag not in ("c", "q"):
                raise ChainFormatError(f"{where}: tag must be 'c' or 'q'")
            forced_index = raw["forced_index"]
            if forced_index not in (0, 1, 2):
                raise ChainFormatError(f"{where}: forced_index must be 0, 1 or 2")
            forced_color = _parse_color(raw["forced_color"], where)
            threat = Color.RED if tag == "c" else Color.BLUE
            if forced_color is not threat.opposite:
                raise ChainFormatError(
                    f"{where}: a {tag}-step must force {threat.opposite}, "
                    f"not {forced_color}"
                )
            verbatim = None
            if "verbatim" in raw:
                verbatim = tuple(
                    _parse_expr(raw["verbatim"][k], f"{where} verbatim {k}")
                    for k in ("x", "y", "z")
                )
            steps.append(
                ChainStep(
                    _parse_expr(raw["x"], f"{where} x"),
                    _parse_expr(raw["y"], f"{where} y"),
                    _parse_expr(raw["z"], f"{where} z"),
                    tag,
                    forced_index,
                    forced_color,
                    verbatim,
                    raw.get("note", ""),
                )
            )
        where = f"{filename} terminal"
        rawt = doc["terminal"]
        terminal = TerminalConflict(
            _parse_expr(rawt["x"], f"{where} x"),
            _parse_expr(rawt["y"], f"{where} y"),
            _parse_expr(rawt["z"], f"{where} z"),
            rawt["tag"],
            _parse_color(rawt["color"], where),
        )
        if rawt["tag"] not in ("c", "q"):
            raise ChainFormatError(f"{where}: tag must be 'c' or 'q'")
        return Chain(
            case_id=case_id,
            description=doc.get("description", ""),
            root_color=_parse_color(doc["root_color"], filename),
            preconditions=Preconditions(
                c_parity=pre.get("c_parity"),
                q_parity=pre.get("q_parity"),
                q_exact=pre.get("q_exact"),
                q_min=pre.get("q_min"),
            ),
            steps=tuple(steps),
            terminal=terminal,
            notes=tuple(doc.get("notes", [])),
        )
    except KeyError as exc:
        raise ChainFormatError(f"{where}: missing field {exc}") from exc


def load_chain_fixtures() -> list[Chain]:
    """Load the six bundled chains, fully validated."""
    chains = []
    base = resources.files(__package__).joinpath("chains")
    for name in _CHAIN_FILES:
        chains.append(_parse_chain(name, base.joinpath(name).read_text()))
    return chains


def chain_by_id(case_id: str) -> Chain:
    """Look a bundled chain up by its branch label (e.g. "3.1.2")."""
    for chain in load_chain_fixtures():
        if chain.case_id == case_id:
            return chain
    known = ", ".join(ch.case_id for ch in load_chain_fixtures())
    raise KeyError(f"no chain {case_id!r}; known chains: {known}")
