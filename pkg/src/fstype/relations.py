"""Generators of the relation ideal J_Lambda and their leading terms.

Three families:

* ``dcFamily(N)``: the g_0-orbit of the degree-N component of
  x_theta(z)^(k+1) = 0, i.e. the sum over ordered compositions of N into
  k+1 positive parts of x_11(-n_1)...x_11(-n_{k+1}), for N >= k+1;
* ``icFamily(r)``: the orbit of x_11(-1)^(k_0+...+k_{r-1}+1) under the
  lowering operators with index < r, for 2 <= r <= l;
* ``icTop``: x_11(-1)^(k_0+1).

Every seed is a highest-weight vector, so lowering words span the orbit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Optional

from .core import HighestWeight, Monomial, Polynomial, lower, var
from .linalg import Echelon


class Provenance(NamedTuple):
    family: str
    index: Optional[int] = None

    def __str__(self) -> str:
        return self.family if self.index is None else f"{self.family}({self.index})"


class Generator(NamedTuple):
    poly: Polynomial
    provenance: Provenance


@dataclass
class GeneratorSet:
    ell: int
    entries: list[Generator] = field(default_factory=list)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def polys(self) -> list[Polynomial]:
        return [g.poly for g in self.entries]

    def to_text(self) -> str:
        return "".join(f"{g.provenance}: {g.poly}\n" for g in self.entries)


def _partitions(n: int, parts: int, largest: int) -> Iterator[list[int]]:
    """Partitions of n into exactly `parts` parts, each <= largest, non-increasing."""
    if parts == 0:
        if n == 0:
            yield []
        return
    for first in range(min(n - parts + 1, largest), 0, -1):
        if first * parts < n:
            break
        for rest in _partitions(n - first, parts - 1, first):
            yield [first] + rest


def seed_dc(N: int, k: int) -> Polynomial:
    """Sum of x_11(-n_1)...x_11(-n_{k+1}) over ordered compositions of N."""
    if k < 1 or N < k + 1:
        raise ValueError(f"need N >= k+1 >= 2, got N={N}, k={k}")
    terms = {}
    for parts in _partitions(N, k + 1, N):
        coeff = factorial(k + 1)
        for p in set(parts):
            coeff //= factorial(parts.count(p))
        terms[Monomial((var(1, 1, n), parts.count(n)) for n in set(parts))] = coeff
    return Polynomial(terms)


def seed_ic(r: int, hw: HighestWeight) -> Polynomial:
    """x_11(-1)^(k_0+...+k_{r-1}+1)."""
    if not 1 <= r <= hw.ell:
        raise ValueError(f"r={r} outside 1..{hw.ell}")
    return Polynomial.from_monomial(Monomial({var(1, 1, 1): hw.partial(r) + 1}))


def lowering_orbit(
    seed: Polynomial, allowed: Iterable[int], ell: int, max_steps: Optional[int] = None
) -> list[Polynomial]:
    """Independent list spanning the closure of `seed` under lower(t, .), t in allowed.

    Breadth-first; a vector is kept only if it is independent of those already
    kept in its weight block.  `max_steps` bounds the word length; by default
    it is 2 * (number of factors) * (l - 1), past which every word vanishes.
    """
    if seed.is_zero():
        return []
    if not seed.is_homogeneous(ell):
        raise ValueError("seed must be homogeneous")
    allowed = sorted(set(allowed))
    for t in allowed:
        if not 1 <= t <= ell - 1:
            raise ValueError(f"lowering index {t} outside 1..{ell - 1}")
    if max_steps is None:
        max_steps = 2 * seed.leading_term().factor_count * max(ell - 1, 0)

    blocks: dict[tuple[int, ...], Echelon] = {}
    out: list[Polynomial] = []

    def keep(p: Polynomial) -> bool:
        p = p.normalized()
        block = blocks.setdefault(p.leading_term().weight(ell), Echelon())
        if block.add(p.terms) is None:
            return False
        out.append(p)
        return True

    keep(seed)
    layer = deque([out[0]])
    for _ in range(max_steps):
        nxt: deque = deque()
        for p in layer:
            for t in allowed:
                q = lower(t, p, ell)
                if q and keep(q):
                    nxt.append(out[-1])
        if not nxt:
            break
        layer = nxt
    return out


def generators(hw: HighestWeight, d_max: int) -> GeneratorSet:
    """Generators of J_Lambda of degree <= d_max, deduplicated per (degree, weight) block."""
    if d_max < 0:
        raise ValueError("d_max must be >= 0")
    ell, k = hw.ell, hw.level
    gs = GeneratorSet(ell)
    blocks: dict[tuple[int, tuple[int, ...]], Echelon] = {}

    def take(polys: Iterable[Polynomial], prov: Provenance) -> None:
        for p in polys:
            block = blocks.setdefault(p.grade(ell), Echelon())
            if block.add(p.terms) is not None:
                gs.entries.append(Generator(p.normalized(), prov))

    every = range(1, ell)
    for N in range(k + 1, d_max + 1):
        take(lowering_orbit(seed_dc(N, k), every, ell), Provenance("dcFamily", N))
    for r in range(2, ell + 1):
        if hw.partial(r) + 1 <= d_max:
            take(lowering_orbit(seed_ic(r, hw), range(1, r), ell), Provenance("icFamily", r))
    if hw.k[0] + 1 <= d_max:
        take([seed_ic(1, hw)], Provenance("icTop"))
    return gs


def leading_terms(g: Iterable) -> list[tuple[Monomial, Optional[Provenance]]]:
    """Leading term of each generator (first provenance wins on duplicates)."""
    seen: dict[Monomial, Optional[Provenance]] = {}
    for entry in g:
        if isinstance(entry, Generator):
            p, prov = entry
        else:
            p, prov = entry, None
        seen.setdefault(p.leading_term(), prov)
    return list(seen.items())
