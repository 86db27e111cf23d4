"""Linear equations a*x + b*y + c = z and their solution triples.

Solutions are ordered pairs (x, y) of positive integers together with the
z they force; x = y is allowed and z may coincide with x or y.  Enumeration
order is fixed (ascending z, then x, then y) so that witnesses, violation
reports and search traces are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field


class EquationSyntaxError(ValueError):
    """Equation text rejected, carrying the byte offset of the bad token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class LinearEquation:
    """a*x + b*y + c = z with a, b >= 1; the constant may be <= 0."""

    coeff_x: int
    coeff_y: int
    constant: int = 0
    tag: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.coeff_x < 1:
            raise ValueError(f"coefficient of x must be >= 1, got {self.coeff_x}")
        if self.coeff_y < 1:
            raise ValueError(f"coefficient of y must be >= 1, got {self.coeff_y}")

    @property
    def label(self) -> str:
        """Short name used in triples and reports: the tag, else the text form."""
        return self.tag if self.tag is not None else self.text()

    def text(self) -> str:
        """Render back into the grammar accepted by parse_equation."""
        a = "x" if self.coeff_x == 1 else f"{self.coeff_x}*x"
        b = "y" if self.coeff_y == 1 else f"{self.coeff_y}*y"
        if self.constant > 0:
            return f"{a}+{b}+{self.constant}=z"
        if self.constant < 0:
            return f"{a}+{b}-{-self.constant}=z"
        return f"{a}+{b}=z"

    def __str__(self) -> str:
        return self.text()


def c_equation(c: int) -> LinearEquation:
    """x + y + c = z, tagged "c"."""
    return LinearEquation(1, 1, c, tag="c")


def q_equation(q: int) -> LinearEquation:
    """x + q*y = z, tagged "q"."""
    return LinearEquation(1, q, 0, tag="q")


@dataclass(frozen=True)
class SolutionTriple:
    """(x, y, z) solving the equation named by equation_tag."""

    x: int
    y: int
    z: int
    equation_tag: str

    def values(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)

    def distinct_values(self) -> tuple[int, ...]:
        return tuple(sorted({self.x, self.y, self.z}))

    def __str__(self) -> str:
        return f"({self.x},{self.y},{self.z})_{self.equation_tag}"


class _Scanner:
    """Cursor over equation text; skips whitespace, reports byte offsets."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise EquationSyntaxError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> tuple[int, int]:
        """Read an unsigned integer; returns (value, offset of first digit)."""
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise EquationSyntaxError("expected an integer", start)
        return int(self.text[start:self.pos]), start

    def coefficient(self, var: str) -> int:
        """Read `[INT '*'] var`; an omitted coefficient means 1."""
        self.skip_ws()
        if self.peek().isdigit():
            value, at = self.integer()
            if value < 1:
                raise EquationSyntaxError(f"coefficient of {var} must be >= 1", at)
            self.expect("*")
            self.expect(var)
            return value
        self.expect(var)
        return 1

    def end(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise EquationSyntaxError("trailing input after 'z'", self.pos)


def parse_equation(text: str) -> LinearEquation:
    """Parse `[INT '*'] 'x' '+' [INT '*'] 'y' [('+'|'-') INT] '=' 'z'`.

    Whitespace-insensitive.  An omitted coefficient means 1, an omitted
    constant means 0.  Raises EquationSyntaxError (with byte offset) on
    malformed text and on coefficients below 1.
    """
    s = _Scanner(text)
    a = s.coefficient("x")
    s.expect("+")
    b = s.coefficient("y")
    constant = 0
    nxt = s.peek()
    if nxt in ("+", "-"):
        s.expect(nxt)
        value, _ = s.integer()
        constant = value if nxt == "+" else -value
    s.expect("=")
    s.expect("z")
    s.end()
    return LinearEquation(a, b, constant)


def eval_triple(eq: LinearEquation, x: int, y: int) -> int:
    """The z forced by x and y: a*x + b*y + c (may be <= 0 for negative c)."""
    return eq.coeff_x * x + eq.coeff_y * y + eq.constant


def solutions_in_range(eq: LinearEquation, n: int) -> list[SolutionTriple]:
    """All triples (x, y, z) in [1, n]^3 solving eq, ascending (z, x, y)."""
    tag = eq.label
    out: list[SolutionTriple] = []
    for x in range(1, n + 1):
        base = eq.coeff_x * x + eq.constant
        if base + eq.coeff_y > n:
            break  # z is increasing in x and y, so larger x cannot fit either
        ymax = min((n - base) // eq.coeff_y, n)
        for y in range(1, ymax + 1):
            z = base + eq.coeff_y * y
            if z >= 1:
                out.append(SolutionTriple(x, y, z, tag))
    out.sort(key=lambda t: (t.z, t.x, t.y))
    return out


def triples_containing(eq: LinearEquation, m: int, n: int) -> list[SolutionTriple]:
    """The members of solutions_in_range(eq, n) mentioning m as x, y or z."""
    return [t for t in solutions_in_range(eq, n) if m in (t.x, t.y, t.z)]
