"""Closed form, extremal colorings, and infinitude certificates for the
equation family x+y+c=z (red) / x+q*y=z (blue).

The closed form for the two-color off-diagonal Rado number R2(c, q) is

    infinite            when c and q are both odd,
    2c + 4              when q = 1 and c is even,
    (q+1)(c+2) + c + 1  otherwise (q >= 2, not both odd),

for c, q >= 1.  `certify` cross-checks it three ways: exhaustive search
decides the value exactly, the matching extremal coloring re-proves the
lower bound, and (in the infinite case) a residue-class certificate proves
that a valid coloring of all of N exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .coloring import Color, Coloring, is_valid_coloring, restrict_periodic
from .equations import LinearEquation, c_equation, q_equation
from .solver import (
    DEFAULT_NODE_BUDGET,
    Finite,
    InfiniteCertified,
    SearchResult,
    Unknown,
    compute_rado,
)

DEFAULT_INFINITE_SCAN_BOUND = 64


@dataclass(frozen=True)
class FiniteOrInfinite:
    """A Rado-number value: a positive integer, or infinite (value None)."""

    value: int | None

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        return "INF" if self.value is None else str(self.value)


INFINITE = FiniteOrInfinite(None)


def closed_form(c: int, q: int) -> FiniteOrInfinite:
    """R2(c, q) for the pair (x+y+c=z, x+q*y=z); requires c >= 1 and q >= 1."""
    if c < 1 or q < 1:
        raise ValueError(f"closed form requires c >= 1 and q >= 1 (got c={c}, q={q})")
    if c % 2 == 1 and q % 2 == 1:
        return INFINITE
    if q == 1:
        return FiniteOrInfinite(2 * c + 4)
    return FiniteOrInfinite((q + 1) * (c + 2) + c + 1)


@dataclass(frozen=True)
class PeriodicCertificate:
    """Coloring of residues mod `period` closed under both equations.

    Closure means: red residues r1, r2 always send (a*r1 + b*r2 + c) mod p
    to a blue residue for the red equation, and symmetrically for blue.
    The induced coloring of N (position m gets residue m mod p) then avoids
    both forbidden monochromatic patterns on every [1, n], so no finite
    Rado number exists.
    """

    period: int
    residue_colors: tuple[Color, ...]

    def __post_init__(self) -> None:
        if self.period < 1:
            raise ValueError(f"period must be >= 1, got {self.period}")
        if len(self.residue_colors) != self.period:
            raise ValueError(
                f"need {self.period} residue colors, got {len(self.residue_colors)}"
            )

    def color_of_residue(self, r: int) -> Color:
        return self.residue_colors[r % self.period]

    def as_string(self) -> str:
        return "".join(col.value for col in self.residue_colors)

    def __str__(self) -> str:
        return f"period {self.period}: {self.as_string()}"


def check_periodic_certificate(
    cert: PeriodicCertificate, e_red: LinearEquation, e_blue: LinearEquation
) -> bool:
    """True iff both residue-closure conditions hold for the certificate."""
    p = cert.period
    colors = cert.residue_colors
    for eq, mono, forced in (
        (e_red, Color.RED, Color.BLUE),
        (e_blue, Color.BLUE, Color.RED),
    ):
        same = [r for r in range(p) if colors[r] is mono]
        for r1 in same:
            for r2 in same:
                z = (eq.coeff_x * r1 + eq.coeff_y * r2 + eq.constant) % p
                if colors[z] is not forced:
                    return False
    return True


def find_periodic_certificate(
    e_red: LinearEquation, e_blue: LinearEquation, max_period: int
) -> PeriodicCertificate | None:
    """First certificate in canonical order, or None.

    Canonical order: smallest period first; within a period, residue
    patterns lexicographically with red before blue (so residue 0 is tried
    red first).  Deterministic by construction.
    """
    for p in range(1, max_period + 1):
        for colors in product((Color.RED, Color.BLUE), repeat=p):
            cert = PeriodicCertificate(p, colors)
            if check_periodic_certificate(cert, e_red, e_blue):
                return cert
    return None


@dataclass(frozen=True)
class ConstructionSpec:
    """Partition of [1, domain_top] into closed red and blue intervals."""

    red_intervals: tuple[tuple[int, int], ...]
    blue_intervals: tuple[tuple[int, int], ...]
    domain_top: int

    def __post_init__(self) -> None:
        seen = [0] * (self.domain_top + 1)
        for lo, hi in self.red_intervals + self.blue_intervals:
            if not 1 <= lo <= hi <= self.domain_top:
                raise ValueError(f"interval [{lo}, {hi}] leaves [1, {self.domain_top}]")
            for m in range(lo, hi + 1):
                seen[m] += 1
        uncovered = [m for m in range(1, self.domain_top + 1) if seen[m] != 1]
        if uncovered:
            raise ValueError(f"intervals do not partition the domain at {uncovered[:8]}")

    def realize(self) -> Coloring:
        red = {m for lo, hi in self.red_intervals for m in range(lo, hi + 1)}
        return Coloring.from_red_set(self.domain_top, red)


def extremal_coloring_q1(c: int) -> Coloring:
    """Valid coloring of [1, 2c+3] for (x+y+c=z, x+y=z); needs even c >= 2.

    Red on [1, c+1], blue on [c+2, 2c+3]: red pairs push z into the blue
    block, blue pairs push z past the top of the domain.
    """
    if c < 2 or c % 2 != 0:
        raise ValueError(f"construction needs an even c >= 2, got {c}")
    spec = ConstructionSpec(((1, c + 1),), ((c + 2, 2 * c + 3),), 2 * c + 3)
    return spec.realize()


def extremal_coloring(c: int, q: int) -> Coloring:
    """Valid coloring of [1, (q+1)(c+2)+c] for (x+y+c=z, x+q*y=z); q >= 2.

    Red on [1, c+1] and on the top block [(q+1)(c+2), (q+1)(c+2)+c], blue
    in between.  Requires c >= 1, q >= 2, and c, q not both odd.
    """
    if c < 1 or q < 2 or (c % 2 == 1 and q % 2 == 1):
        raise ValueError(
            f"construction needs c >= 1, q >= 2, not both odd (got c={c}, q={q})"
        )
    top = (q + 1) * (c + 2) + c
    spec = ConstructionSpec(
        red_intervals=((1, c + 1), ((q + 1) * (c + 2), top)),
        blue_intervals=((c + 2, q * (c + 2) + c + 1),),
        domain_top=top,
    )
    return spec.realize()


def formula_for_pair(
    e_red: LinearEquation, e_blue: LinearEquation
) -> tuple[FiniteOrInfinite | None, str | None]:
    """Closed form for a parsed pair, or (None, reason) when it does not apply."""
    family = (
        e_red.coeff_x == 1
        and e_red.coeff_y == 1
        and e_blue.coeff_x == 1
        and e_blue.constant == 0
    )
    if not family:
        return None, "equation pair is outside the x+y+c=z / x+q*y=z family"
    c, q = e_red.constant, e_blue.coeff_y
    if c >= 1 and q >= 1:
        return closed_form(c, q), None
    return None, (
        f"closed form is not applicable at c={c}, q={q}: it requires c >= 1 and q >= 1"
    )


@dataclass(frozen=True)
class Report:
    """Outcome of cross-checking the closed form at one (c, q)."""

    c: int
    q: int
    red: LinearEquation
    blue: LinearEquation
    formula: FiniteOrInfinite
    search: Finite | Unknown
    construction_valid: bool | None
    construction_domain_top: int | None
    certificate: PeriodicCertificate | None
    certificate_valid_to: int | None
    agree: bool
    notes: tuple[str, ...] = ()

    def conclusion(self) -> SearchResult:
        """The overall verdict: the search result, upgraded to
        InfiniteCertified when a periodic certificate settles infinitude."""
        if self.certificate is not None and self.agree:
            return InfiniteCertified(self.certificate)
        return self.search


def certify(
    c: int,
    q: int,
    bound: int | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> Report:
    """Cross-check the closed form at (c, q); requires c >= 1 and q >= 1.

    Finite predictions are decided exactly at the predicted value v (the
    search must produce a witness at v-1 and a refutation at v) and the
    matching extremal coloring must be valid with domain top v-1.  Infinite
    predictions need a period-2 certificate whose restriction stays valid,
    plus a search that finds no finite value up to `bound` (default 64; the
    bound only matters in this branch).
    """
    formula = closed_form(c, q)
    e_red, e_blue = c_equation(c), q_equation(q)
    notes: list[str] = []
    if formula.is_finite:
        v = formula.value
        search = compute_rado(e_red, e_blue, v, node_budget)
        coloring = extremal_coloring_q1(c) if q == 1 else extremal_coloring(c, q)
        verdict = is_valid_coloring(coloring, e_red, e_blue)
        if not verdict.valid:
            notes.append(f"extremal coloring is invalid: {verdict.violation}")
        agree = (
            isinstance(search, Finite)
            and search.value == v
            and verdict.valid
            and coloring.n == v - 1
        )
        if isinstance(search, Unknown):
            notes.append(f"search found no refutation at the predicted value {v}")
        return Report(
            c, q, e_red, e_blue, formula, search,
            verdict.valid, coloring.n, None, None, agree, tuple(notes),
        )
    scan_bound = DEFAULT_INFINITE_SCAN_BOUND if bound is None else bound
    cert = find_periodic_certificate(e_red, e_blue, max_period=2)
    restriction_ok = False
    if cert is None:
        notes.append("no periodic certificate with period <= 2")
    else:
        restriction_ok = is_valid_coloring(
            restrict_periodic(cert, scan_bound), e_red, e_blue
        ).valid
        if not restriction_ok:
            notes.append(f"certificate restriction invalid on [1, {scan_bound}]")
    search = compute_rado(e_red, e_blue, scan_bound, node_budget)
    if isinstance(search, Finite):
        notes.append(f"search refuted [1, {search.value}] despite an infinite prediction")
    agree = cert is not None and restriction_ok and isinstance(search, Unknown)
    return Report(
        c, q, e_red, e_blue, formula, search,
        None, None, cert, scan_bound if restriction_ok else None, agree, tuple(notes),
    )
