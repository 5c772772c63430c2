"""Difference and initial conditions, and the admissible-monomial basis.

A chain is a set of distinct colors totally ordered by interval containment
([i, j] ⊇ [i', j']).  Difference conditions bound, for each pair of adjacent
depths n+1 and n, the exponent sum over a chain at depth n+1 lying in [1, c]
plus a chain at depth n lying in [c, l] by the level k.  Initial conditions
bound a chain of depth-1 exponents with outermost color (i, j) by
k_0 + ... + k_{j-1}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Optional

from .core import Color, HighestWeight, Monomial, Variable, variables


@dataclass(frozen=True)
class ChainWitness:
    """A violated inequality.  ``n`` is None for initial conditions."""

    n: Optional[int]
    deep: tuple[Color, ...]
    shallow: tuple[Color, ...]
    total: int
    bound: int

    def is_valid(self) -> bool:
        for chain in (self.deep, self.shallow):
            for outer, inner in zip(chain, chain[1:]):
                if outer == inner or not outer.contains(inner):
                    return False
        if self.deep and self.shallow and self.deep[0].j > self.shallow[0].i:
            return False
        return self.total > self.bound


class _Tables:
    """Interval DP for maximum-weight nested chains over colors in [1, ell]."""

    __slots__ = ("w", "outer", "within")

    def __init__(self, w: Mapping[Color, int], ell: int):
        self.w = w
        outer: dict[tuple[int, int], int] = {}
        within: dict[tuple[int, int], int] = {}
        for length in range(ell):
            for i in range(1, ell - length + 1):
                j = i + length
                inner = 0
                if i < j:
                    inner = max(within[i + 1, j], within[i, j - 1])
                o = w.get(Color(i, j), 0) + inner
                outer[i, j] = o
                within[i, j] = max(o, inner)
        self.outer = outer
        self.within = within

    def best(self, lo: int, hi: int) -> int:
        return self.within[lo, hi]

    def chain_within(self, lo: int, hi: int) -> list[Color]:
        chain: list[Color] = []
        i, j = lo, hi
        target = self.within[i, j]
        while target > 0:
            if self.outer[i, j] == target:
                c = Color(i, j)
                wc = self.w.get(c, 0)
                if wc:
                    chain.append(c)
                target -= wc
                if i == j:
                    break
                if self.within[i, j - 1] == target:
                    j -= 1
                else:
                    i += 1
            elif i < j and self.within[i, j - 1] == target:
                j -= 1
            else:
                i += 1
        return chain

    def chain_outer(self, i: int, j: int) -> list[Color]:
        head = [Color(i, j)] if self.w.get(Color(i, j), 0) else []
        if i == j:
            return head
        rest = self.outer[i, j] - self.w.get(Color(i, j), 0)
        if rest == 0:
            return head
        if self.within[i, j - 1] == rest:
            return head + self.chain_within(i, j - 1)
        return head + self.chain_within(i + 1, j)


def max_nested_chain(w: Mapping[Color, int], bound: tuple[int, int]) -> tuple[int, list[Color]]:
    """Maximum of sum(w) over nested chains of distinct colors inside [lo, hi]."""
    lo, hi = bound
    if not 1 <= lo <= hi:
        raise ValueError(f"invalid interval [{lo},{hi}]")
    ell = max([hi] + [c.j for c in w])
    tables = _Tables(w, ell)
    return tables.best(lo, hi), tables.chain_within(lo, hi)


def _levels(m: Monomial) -> dict[int, dict[Color, int]]:
    levels: dict[int, dict[Color, int]] = {}
    for v, e in m.factors:
        levels.setdefault(v.depth, {})[v.color] = e
    return levels


def _pair_violation(deep: Mapping[Color, int], shallow: Mapping[Color, int], ell: int, k: int):
    """Worst (total, c, tables) over split columns c, or None if all <= k."""
    td, ts = _Tables(deep, ell), _Tables(shallow, ell)
    best, best_c = -1, 0
    for c in range(1, ell + 1):
        total = td.best(1, c) + ts.best(c, ell)
        if total > best:
            best, best_c = total, c
    if best <= k:
        return None
    return best, best_c, td, ts


def _rank_of(m: Monomial) -> int:
    return max((v.color.j for v, _ in m.factors), default=1)


def dc_check(m: Monomial, k: int) -> tuple[bool, Optional[ChainWitness]]:
    if k < 1:
        raise ValueError("level must be >= 1")
    levels = _levels(m)
    ell = _rank_of(m)
    for n in range(1, m.max_depth + 1):
        deep, shallow = levels.get(n + 1, {}), levels.get(n, {})
        if not deep and not shallow:
            continue
        hit = _pair_violation(deep, shallow, ell, k)
        if hit is not None:
            total, c, td, ts = hit
            return False, ChainWitness(
                n, tuple(td.chain_within(1, c)), tuple(ts.chain_within(c, ell)), total, k
            )
    return True, None


def ic_check(m: Monomial, hw: HighestWeight) -> tuple[bool, Optional[ChainWitness]]:
    ell = hw.ell
    if _rank_of(m) > ell:
        raise ValueError(f"{m} is not a monomial of rank {ell}")
    first = _levels(m).get(1)
    if not first:
        return True, None
    tables = _Tables(first, ell)
    for i in range(1, ell + 1):
        for j in range(i, ell + 1):
            bound = hw.partial(j)
            if tables.outer[i, j] > bound:
                return False, ChainWitness(None, (), tuple(tables.chain_outer(i, j)), tables.outer[i, j], bound)
    return True, None


def is_admissible(m: Monomial, hw: HighestWeight) -> bool:
    return dc_check(m, hw.level)[0] and ic_check(m, hw)[0]


def _basis_of_degree(hw: HighestWeight, d: int) -> list[Monomial]:
    ell, k = hw.ell, hw.level
    vs: list[Variable] = variables(ell, d)
    ic_bound = {(i, j): hw.partial(j) for i in range(1, ell + 1) for j in range(i, ell + 1)}
    levels: dict[int, dict[Color, int]] = {}
    current: list[tuple[Variable, int]] = []
    out: list[Monomial] = []

    def ok_at(n: int) -> bool:
        here = levels.get(n, {})
        if n == 1:
            t = _Tables(here, ell)
            if t.best(1, ell) > k:
                return False
            return all(t.outer[ij] <= b for ij, b in ic_bound.items())
        return _pair_violation(here, levels.get(n - 1, {}), ell, k) is None

    def rec(idx: int, budget: int) -> None:
        if budget == 0:
            out.append(Monomial(current))
            return
        if idx == len(vs) or vs[idx].depth > budget:
            return
        v = vs[idx]
        n = v.depth
        rec(idx + 1, budget)
        level = levels.setdefault(n, {})
        e = 0
        while (e + 1) * n <= budget:
            e += 1
            level[v.color] = e
            if not ok_at(n):
                break
            current.append((v, e))
            rec(idx + 1, budget - e * n)
            current.pop()
        level.pop(v.color, None)

    rec(0, d)
    return out


def enumerate_basis(hw: HighestWeight, d_max: int) -> dict[int, list[Monomial]]:
    """Admissible monomials of each degree 0..d_max, each list ascending."""
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    return {d: _basis_of_degree(hw, d) for d in range(d_max + 1)}


def character(hw: HighestWeight, d_max: int, refined: bool = False):
    """Coefficient list of the graded dimension, or a (degree, weight) -> count map."""
    basis = enumerate_basis(hw, d_max)
    if not refined:
        return [len(basis[d]) for d in range(d_max + 1)]
    counts: Counter = Counter()
    for d, ms in basis.items():
        for m in ms:
            counts[d, m.weight(hw.ell)] += 1
    return dict(sorted(counts.items()))
