"""Red/blue colorings of [1, n], partial colorings, and validity checking.

A coloring is valid for a pair (e_red, e_blue) when no solution of e_red is
entirely red and no solution of e_blue is entirely blue.  Colorings
serialize as strings over {R, B} (position i is character i-1); partial
colorings additionally use U for unset positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING

from .equations import LinearEquation, SolutionTriple, solutions_in_range

if TYPE_CHECKING:
    from .certificates import PeriodicCertificate


class Color(Enum):
    RED = "R"
    BLUE = "B"

    @property
    def opposite(self) -> Color:
        return Color.BLUE if self is Color.RED else Color.RED

    def __str__(self) -> str:
        return "Red" if self is Color.RED else "Blue"


_SWAP = str.maketrans("RB", "BR")


@dataclass(frozen=True)
class Coloring:
    """Total coloring of [1, n]; chars[i-1] is 'R' or 'B' for position i."""

    chars: str

    def __post_init__(self) -> None:
        bad = set(self.chars) - {"R", "B"}
        if bad:
            raise ValueError(f"coloring may contain only R and B, found {sorted(bad)}")

    @classmethod
    def from_assignments(cls, n: int, colors: dict[int, Color]) -> Coloring:
        missing = [m for m in range(1, n + 1) if m not in colors]
        if missing:
            raise ValueError(f"positions without a color: {missing[:8]}")
        return cls("".join(colors[m].value for m in range(1, n + 1)))

    @classmethod
    def from_red_set(cls, n: int, red: set[int]) -> Coloring:
        return cls("".join("R" if m in red else "B" for m in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.chars)

    def color_of(self, m: int) -> Color:
        return Color(self.chars[m - 1])

    def positions(self, color: Color) -> list[int]:
        return [i + 1 for i, ch in enumerate(self.chars) if ch == color.value]

    def swapped(self) -> Coloring:
        """The coloring with red and blue exchanged everywhere."""
        return Coloring(self.chars.translate(_SWAP))

    def restricted(self, m: int) -> Coloring:
        """The restriction to [1, m] (m <= n)."""
        return Coloring(self.chars[:m])

    def extended(self, color: Color) -> Coloring:
        """The coloring of [1, n+1] giving the new top position `color`."""
        return Coloring(self.chars + color.value)

    def __str__(self) -> str:
        return self.chars


@dataclass(frozen=True)
class PartialColoring:
    """Coloring of [1, n] in which positions may still be unset ('U')."""

    chars: str

    def __post_init__(self) -> None:
        bad = set(self.chars) - {"R", "B", "U"}
        if bad:
            raise ValueError(f"partial coloring may contain only R, B, U, found {sorted(bad)}")

    @classmethod
    def empty(cls, n: int) -> PartialColoring:
        return cls("U" * n)

    @classmethod
    def from_assignments(cls, n: int, colors: dict[int, Color]) -> PartialColoring:
        for m in colors:
            if not 1 <= m <= n:
                raise ValueError(f"position {m} outside [1, {n}]")
        return cls("".join(colors[m].value if m in colors else "U" for m in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.chars)

    def color_of(self, m: int) -> Color | None:
        ch = self.chars[m - 1]
        return None if ch == "U" else Color(ch)

    def assigned(self) -> dict[int, Color]:
        return {i + 1: Color(ch) for i, ch in enumerate(self.chars) if ch != "U"}

    def with_color(self, m: int, color: Color) -> PartialColoring:
        return PartialColoring(self.chars[:m - 1] + color.value + self.chars[m:])

    def is_total(self) -> bool:
        return "U" not in self.chars

    def to_coloring(self) -> Coloring:
        if not self.is_total():
            raise ValueError("partial coloring still has unset positions")
        return Coloring(self.chars)

    def __str__(self) -> str:
        return self.chars


@dataclass(frozen=True)
class Violation:
    """A monochromatic solution that invalidates a coloring."""

    triple: SolutionTriple
    equation_tag: str
    color: Color

    def __str__(self) -> str:
        return f"{self.triple} all {self.color}"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.valid


def is_valid_coloring(col: Coloring, e_red: LinearEquation, e_blue: LinearEquation) -> Verdict:
    """Check a total coloring against the pair of forbidden patterns.

    Valid iff no solution of e_red inside [1, n] is all red and no solution
    of e_blue is all blue.  When invalid, the violation is the first
    offender in enumeration order, e_red's solutions before e_blue's.
    """
    n = col.n
    for eq, color in ((e_red, Color.RED), (e_blue, Color.BLUE)):
        ch = color.value
        chars = col.chars
        for t in solutions_in_range(eq, n):
            if chars[t.x - 1] == ch and chars[t.y - 1] == ch and chars[t.z - 1] == ch:
                return Verdict(False, Violation(t, t.equation_tag, color))
    return Verdict(True)


def restrict_periodic(cert: PeriodicCertificate, n: int) -> Coloring:
    """Materialize a residue-class coloring on [1, n]: m gets the color of m mod p."""
    colors = cert.residue_colors
    p = cert.period
    return Coloring("".join(colors[m % p].value for m in range(1, n + 1)))
