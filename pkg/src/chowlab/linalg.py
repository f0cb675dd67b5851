"""Exact rank of sparse rational matrices.

Rows are ``dict`` maps from column to a nonzero ``int`` or ``Fraction``.
Elimination keeps an echelon basis keyed by leading column; an incoming row is
reduced by the pivot at its current leading column until it either vanishes or
lands on a fresh column. Pivot rows are normalised to leading coefficient 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Row = Mapping[int, "int | Fraction"]


class EchelonBasis:
    """Incrementally maintained row-echelon basis over the rationals."""

    def __init__(self):
        self.pivots: dict[int, dict[int, Fraction]] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Row) -> dict[int, Fraction]:
        r = {c: Fraction(v) for c, v in row.items() if v}
        while r:
            lead = min(r)
            piv = self.pivots.get(lead)
            if piv is None:
                return r
            factor = r[lead]
            for c, v in piv.items():
                nv = r.get(c, 0) - factor * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
        return r

    def add(self, row: Row) -> bool:
        """Insert ``row``; returns True if it was independent of the basis."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        inv = 1 / r[lead]
        self.pivots[lead] = {c: v * inv for c, v in r.items()}
        return True


def rank(rows: Iterable[Row]) -> int:
    basis = EchelonBasis()
    for row in rows:
        basis.add(row)
    return len(basis)
