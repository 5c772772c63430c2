"""Fraction-free sparse row echelon form over the integers.

Rows are dicts ``column -> int``.  Columns are any totally ordered labels; a
row's pivot is its *minimal* column, so the pivot set of a row space is the
set of minimal monomials ("leading terms") that occur in it.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Optional


def integer_row(row: Mapping) -> dict:
    """Clear denominators and content; the pivot coefficient becomes positive."""
    row = {c: v for c, v in row.items() if v != 0}
    if not row:
        return {}
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = den * v.denominator // gcd(den, v.denominator)
    out = {c: int(v * den) for c, v in row.items()}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if out[min(out)] < 0:
        g = -g
    return {c: v // g for c, v in out.items()}


class Echelon:
    """Incrementally maintained echelon basis of a row space.

    Only the pivot column of each stored row is guaranteed to be absent from
    the other rows' pivots; that is enough for rank, membership and pivot sets.
    """

    def __init__(self, rows: Iterable[Mapping] = ()):
        self.pivots: dict[Hashable, dict] = {}
        for r in rows:
            self.add(r)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping) -> dict:
        """Reduce `row` until its minimal column is not a pivot (or it is zero)."""
        row = integer_row(row)
        while row:
            col = min(row)
            prow = self.pivots.get(col)
            if prow is None:
                return row
            a, b = prow[col], row[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {c: v * fa for c, v in row.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - fb * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = integer_row(new)
        return row

    def add(self, row: Mapping) -> Optional[Hashable]:
        """Insert a row; returns its new pivot column, or None if dependent."""
        r = self.reduce(row)
        if not r:
            return None
        col = min(r)
        self.pivots[col] = r
        return col

    def contains(self, row: Mapping) -> bool:
        return not self.reduce(row)

    def pivot_columns(self) -> list:
        return sorted(self.pivots)

    def rows(self) -> list[dict]:
        """Stored rows ordered by pivot column."""
        return [self.pivots[c] for c in sorted(self.pivots)]
