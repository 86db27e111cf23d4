"""Independent brute-force oracles the solver is checked against.

Everything here is deliberately plain: nested loops and full enumeration,
no propagation, no shared code with the library's search path.
"""

from __future__ import annotations

from offrado import Coloring, LinearEquation


def oracle_triples(eq: LinearEquation, n: int) -> list[tuple[int, int, int]]:
    """All solutions in [1, n]^3 by a plain double loop over (x, y)."""
    out = []
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            z = eq.coeff_x * x + eq.coeff_y * y + eq.constant
            if 1 <= z <= n:
                out.append((x, y, z))
    return out


def oracle_mask_valid(
    mask: int,
    red_triples: list[tuple[int, int, int]],
    blue_triples: list[tuple[int, int, int]],
) -> bool:
    """Validity of the coloring encoded as a bitmask (bit i-1 set = red)."""
    for x, y, z in red_triples:
        if mask >> (x - 1) & 1 and mask >> (y - 1) & 1 and mask >> (z - 1) & 1:
            return False
    for x, y, z in blue_triples:
        if not (mask >> (x - 1) & 1 or mask >> (y - 1) & 1 or mask >> (z - 1) & 1):
            return False
    return True


def oracle_sat(e_red: LinearEquation, e_blue: LinearEquation, n: int) -> bool:
    """Does [1, n] admit a valid coloring?  Full 2^n enumeration."""
    red_triples = oracle_triples(e_red, n)
    blue_triples = oracle_triples(e_blue, n)
    return any(
        oracle_mask_valid(mask, red_triples, blue_triples) for mask in range(1 << n)
    )


def mask_to_coloring(mask: int, n: int) -> Coloring:
    return Coloring("".join("R" if mask >> i & 1 else "B" for i in range(n)))


def oracle_is_valid(col: Coloring, e_red: LinearEquation, e_blue: LinearEquation) -> bool:
    """Validity by literal triple-nested loops over (x, y, z)."""
    n = col.n
    for eq, ch in ((e_red, "R"), (e_blue, "B")):
        for x in range(1, n + 1):
            for y in range(1, n + 1):
                for z in range(1, n + 1):
                    if eq.coeff_x * x + eq.coeff_y * y + eq.constant != z:
                        continue
                    if col.chars[x - 1] == ch and col.chars[y - 1] == ch and col.chars[z - 1] == ch:
                        return False
    return True
