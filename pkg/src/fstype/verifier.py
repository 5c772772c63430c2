"""Graded pieces of J_Lambda, standard monomials, and the basis comparison.

The quotient C[x]/J_Lambda is graded by (degree, weight), and every generator
is homogeneous, so each block is handled independently: the block of J_Lambda
is spanned by products (monomial) * (generator), and Gaussian elimination
pivoting on minimal monomials yields its leading terms.  The monomials of the
block that are not leading terms are the standard monomials; these should be
exactly the admissible monomials of that block.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .admissibility import enumerate_basis
from .core import HighestWeight, Monomial, Polynomial, monomials, multiply
from .linalg import Echelon
from .relations import GeneratorSet, generators

Weight = tuple[int, ...]


@dataclass(frozen=True)
class Block:
    weight: Weight
    num_monomials: int
    ideal_rank: int
    pivots: tuple[Monomial, ...]
    standard: tuple[Monomial, ...]
    basis: tuple[Monomial, ...]

    @property
    def match(self) -> bool:
        return self.standard == self.basis

    def mismatch(self) -> tuple[list[Monomial], list[Monomial]]:
        """(standard but not admissible, admissible but not standard)."""
        s, b = set(self.standard), set(self.basis)
        return sorted(s - b), sorted(b - s)


@dataclass(frozen=True)
class GradedReport:
    hw: HighestWeight
    degree: int
    blocks: tuple[Block, ...]

    @property
    def match(self) -> bool:
        return all(b.match for b in self.blocks)

    @property
    def standard_count(self) -> int:
        return sum(len(b.standard) for b in self.blocks)

    @property
    def basis_count(self) -> int:
        return sum(len(b.basis) for b in self.blocks)


def _polys(g: Union[GeneratorSet, Iterable[Polynomial]]) -> list[Polynomial]:
    if isinstance(g, GeneratorSet):
        return g.polys()
    return [p.poly if hasattr(p, "poly") else p for p in g]


def _fits(small: Weight, big: Weight) -> bool:
    return all(a <= b for a, b in zip(small, big))


def _products(polys: Sequence[Polynomial], ell: int, d: int, mu: Optional[Weight]):
    """Yield term lists of m * p for every generator p and complementary monomial m."""
    for p in polys:
        if p.is_zero():
            continue
        pd, pw = p.grade(ell)
        if pd > d or (mu is not None and not _fits(pw, mu)):
            continue
        rest = None if mu is None else tuple(a - b for a, b in zip(mu, pw))
        terms = list(p.terms.items())
        for m in monomials(ell, d - pd, rest):
            yield [(multiply(m, n), c) for n, c in terms]


def graded_component(
    g: Union[GeneratorSet, Iterable[Polynomial]], d: int, mu: Optional[Iterable[int]] = None, ell: Optional[int] = None
) -> list[Polynomial]:
    """All products m * p spanning the degree-d (weight-mu) piece of the ideal."""
    if ell is None:
        if not isinstance(g, GeneratorSet):
            raise ValueError("ell is required for a bare polynomial list")
        ell = g.ell
    mu = None if mu is None else tuple(mu)
    return [Polynomial(t) for t in _products(_polys(g), ell, d, mu)]


def _eliminate(rows: Iterable, columns: list[Monomial]) -> tuple[list[Monomial], list[Monomial]]:
    index = {m: i for i, m in enumerate(columns)}
    ech = Echelon()
    for terms in rows:
        row = {}
        for m, c in terms:
            i = index.get(m)
            if i is None:
                raise ValueError(f"{m} lies outside the block; input is not homogeneous of this grade")
            row[i] = row.get(i, 0) + c
        ech.add(row)
        if ech.rank == len(columns):
            break
    piv = set(ech.pivots)
    return [columns[i] for i in sorted(piv)], [m for i, m in enumerate(columns) if i not in piv]


def standard_monomials(
    polys: Iterable[Polynomial], d: int, mu: Optional[Iterable[int]] = None, ell: int = 1
) -> tuple[list[Monomial], list[Monomial]]:
    """(pivots, standard) for the row space of `polys` in the degree-d (weight-mu) block.

    Columns are all monomials of the block in ascending order; each row pivots
    on its minimal monomial.  Both lists are ascending.
    """
    mu = None if mu is None else tuple(mu)
    columns = monomials(ell, d, mu)
    return _eliminate((p.terms.items() for p in polys), columns)


def _block(polys: Sequence[Polynomial], ell: int, d: int, mu: Weight, basis: Sequence[Monomial]) -> Block:
    columns = monomials(ell, d, mu)
    pivots, standard = _eliminate(_products(polys, ell, d, mu), columns)
    return Block(mu, len(columns), len(pivots), tuple(pivots), tuple(standard), tuple(basis))


def _block_job(args) -> Block:
    return _block(*args)


def block_weights(ell: int, d: int) -> list[Weight]:
    """Weights occurring in degree d, in decreasing lexicographic order."""
    return sorted({m.weight(ell) for m in monomials(ell, d)}, reverse=True)


def worker_count() -> int:
    raw = os.environ.get("FSTYPE_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_presentation(hw: HighestWeight, d_max: int, workers: Optional[int] = None) -> list[GradedReport]:
    """Compare standard monomials of J_Lambda with admissible monomials, degree by degree."""
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    ell = hw.ell
    polys = generators(hw, d_max).polys() if d_max >= 1 else []
    basis = enumerate_basis(hw, d_max)
    jobs = []
    for d in range(d_max + 1):
        by_weight: dict[Weight, list[Monomial]] = {}
        for m in basis[d]:
            by_weight.setdefault(m.weight(ell), []).append(m)
        for mu in block_weights(ell, d):
            jobs.append((polys, ell, d, mu, by_weight.get(mu, [])))

    workers = worker_count() if workers is None else workers
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(_block_job, jobs, chunksize=4))
    else:
        blocks = [_block_job(j) for j in jobs]

    reports = []
    for d in range(d_max + 1):
        reports.append(GradedReport(hw, d, tuple(b for j, b in zip(jobs, blocks) if j[2] == d)))
    return reports


def report_dict(hw: HighestWeight, d_max: int, reports: Sequence[GradedReport]) -> dict:
    return {
        "ell": hw.ell,
        "weights": list(hw.k),
        "maxDegree": d_max,
        "degrees": [
            {
                "degree": r.degree,
                "blocks": [
                    {
                        "weight": list(b.weight),
                        "numMonomials": b.num_monomials,
                        "idealRank": b.ideal_rank,
                        "pivots": [str(m) for m in b.pivots],
                        "standard": [str(m) for m in b.standard],
                        "basis": [str(m) for m in b.basis],
                        "match": b.match,
                    }
                    for b in r.blocks
                ],
                "match": r.match,
            }
            for r in reports
        ],
        "match": all(r.match for r in reports),
    }


def report_csv(reports: Sequence[GradedReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", "weight", "numMonomials", "idealRank", "standardCount", "basisCount", "match"])
    for r in reports:
        for b in r.blocks:
            w.writerow(
                [r.degree, " ".join(map(str, b.weight)), b.num_monomials, b.ideal_rank,
                 len(b.standard), len(b.basis), str(b.match).lower()]
            )
    return buf.getvalue()
