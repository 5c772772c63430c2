"""Colors, variables, monomials and polynomials of C[x_ij(-n)] for type C_l^(1).

Variables x_ij(-n) are indexed by a color (i, j), 1 <= i <= j <= l, and a depth
n >= 1.  The linear order used throughout is:

* colors: (i', j') < (i, j) iff i' > i, or i' == i and j' > j; (1,1) is maximal;
* variables: deeper is smaller, ties broken by color;
* monomials: factors sorted from greatest to smallest, then lexicographic.
  When one factor sequence is a proper prefix of the other, the longer
  monomial is the smaller one.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional, Union

Scalar = Union[int, Fraction]


class Color(NamedTuple):
    i: int
    j: int

    @property
    def key(self) -> tuple[int, int]:
        return (-self.i, -self.j)

    def __lt__(self, other):  # type: ignore[override]
        return self.key < other.key

    def __le__(self, other):  # type: ignore[override]
        return self.key <= other.key

    def __gt__(self, other):  # type: ignore[override]
        return self.key > other.key

    def __ge__(self, other):  # type: ignore[override]
        return self.key >= other.key

    def contains(self, other: "Color") -> bool:
        """Interval containment [i, j] ⊇ [i', j']."""
        return self.i <= other.i and other.j <= self.j

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


class Variable(NamedTuple):
    color: Color
    depth: int

    @property
    def key(self) -> tuple[int, int, int]:
        return (-self.depth, -self.color.i, -self.color.j)

    def __lt__(self, other):  # type: ignore[override]
        return self.key < other.key

    def __le__(self, other):  # type: ignore[override]
        return self.key <= other.key

    def __gt__(self, other):  # type: ignore[override]
        return self.key > other.key

    def __ge__(self, other):  # type: ignore[override]
        return self.key >= other.key

    def __str__(self) -> str:
        return f"x[{self.color.i},{self.color.j}](-{self.depth})"


def var(i: int, j: int, depth: int) -> Variable:
    """Shorthand for x_ij(-depth); the color is stored with i <= j."""
    if i > j:
        i, j = j, i
    if i < 1 or depth < 1:
        raise ValueError(f"invalid variable x[{i},{j}](-{depth})")
    return Variable(Color(i, j), depth)


def colors(ell: int) -> list[Color]:
    """All colors of rank ell, in descending order ((1,1) first)."""
    if ell < 1:
        raise ValueError("rank must be >= 1")
    return [Color(i, j) for i in range(1, ell + 1) for j in range(i, ell + 1)]


def variables(ell: int, max_depth: int) -> list[Variable]:
    """Variables of depth <= max_depth, greatest first."""
    return [Variable(c, n) for n in range(1, max_depth + 1) for c in colors(ell)]


def compare_colors(a: Color, b: Color) -> int:
    return (a.key > b.key) - (a.key < b.key)


def compare_variables(u: Variable, v: Variable) -> int:
    return (u.key > v.key) - (u.key < v.key)


# Sorts after every variable key, since variable keys start with -depth <= -1.
_SENTINEL = (1, 0, 0)


class Monomial:
    """Immutable product of variables, stored as (variable, exponent) pairs
    in ascending variable order."""

    __slots__ = ("_factors", "_key", "_hash")

    def __init__(self, exponents: Union[Mapping[Variable, int], Iterable[tuple[Variable, int]]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[Variable, int] = {}
        for v, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                acc[v] = acc.get(v, 0) + e
        self._factors: tuple[tuple[Variable, int], ...] = tuple(sorted(acc.items(), key=lambda ve: ve[0].key))
        self._key: Optional[tuple] = None
        self._hash: Optional[int] = None

    @classmethod
    def of(cls, *vs: Variable) -> "Monomial":
        """Product of the given variables (repetition allowed)."""
        return cls((v, 1) for v in vs)

    @property
    def factors(self) -> tuple[tuple[Variable, int], ...]:
        return self._factors

    def exponents(self) -> dict[Variable, int]:
        return dict(self._factors)

    def exponent(self, v: Variable) -> int:
        for w, e in self._factors:
            if w == v:
                return e
        return 0

    @property
    def key(self) -> tuple:
        """Sort key realizing the monomial order under plain tuple comparison."""
        if self._key is None:
            seq = []
            for v, e in reversed(self._factors):
                seq.extend([v.key] * e)
            seq.append(_SENTINEL)
            self._key = tuple(seq)
        return self._key

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._factors)
        return self._hash

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._factors == other._factors

    def __lt__(self, other: "Monomial") -> bool:
        return self.key < other.key

    def __le__(self, other: "Monomial") -> bool:
        return self.key <= other.key

    def __gt__(self, other: "Monomial") -> bool:
        return self.key > other.key

    def __ge__(self, other: "Monomial") -> bool:
        return self.key >= other.key

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return multiply(self, other)
        if isinstance(other, Variable):
            return multiply(self, Monomial(((other, 1),)))
        return NotImplemented

    def __bool__(self) -> bool:
        # the unit monomial is still a monomial; never falsy
        return True

    def __len__(self) -> int:
        return self.factor_count

    @property
    def factor_count(self) -> int:
        return sum(e for _, e in self._factors)

    @property
    def degree(self) -> int:
        return sum(v.depth * e for v, e in self._factors)

    @property
    def max_depth(self) -> int:
        return max((v.depth for v, _ in self._factors), default=0)

    def weight(self, ell: int) -> tuple[int, ...]:
        w = [0] * ell
        for v, e in self._factors:
            w[v.color.i - 1] += e
            w[v.color.j - 1] += e
        return tuple(w)

    def is_unit(self) -> bool:
        return not self._factors

    def divides(self, other: "Monomial") -> bool:
        ex = dict(other._factors)
        return all(ex.get(v, 0) >= e for v, e in self._factors)

    def divided_by(self, other: "Monomial") -> "Monomial":
        ex = dict(self._factors)
        for v, e in other._factors:
            left = ex.get(v, 0) - e
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            ex[v] = left
        return Monomial(ex)

    def shifted(self, by: int = 1) -> "Monomial":
        """Every depth increased by `by`."""
        return Monomial((Variable(v.color, v.depth + by), e) for v, e in self._factors)

    def __str__(self) -> str:
        if not self._factors:
            return "1"
        return " ".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self._factors)

    def __repr__(self) -> str:
        return f"Monomial({self})"


ONE = Monomial()


def multiply(m1: Monomial, m2: Monomial) -> Monomial:
    ex = dict(m1.factors)
    for v, e in m2.factors:
        ex[v] = ex.get(v, 0) + e
    return Monomial(ex)


def degree(m: Monomial) -> int:
    return m.degree


def weight(m: Monomial, ell: int) -> tuple[int, ...]:
    return m.weight(ell)


def compare_monomials(m1: Monomial, m2: Monomial) -> int:
    a, b = m1.key, m2.key
    return (a > b) - (a < b)


def monomials(ell: int, d: int, wt: Optional[Iterable[int]] = None) -> list[Monomial]:
    """All monomials of degree d (and weight wt, if given), ascending."""
    target = None if wt is None else tuple(wt)
    if target is not None and (len(target) != ell or min(target, default=0) < 0):
        return []
    vs = variables(ell, d)
    out: list[Monomial] = []
    current: list[tuple[Variable, int]] = []
    remaining_w = list(target) if target is not None else None

    def rec(idx: int, budget: int) -> None:
        if budget == 0:
            if remaining_w is None or not any(remaining_w):
                out.append(Monomial(current))
            return
        if idx == len(vs) or vs[idx].depth > budget:
            return
        v = vs[idx]
        a, b = v.color.i - 1, v.color.j - 1
        # exponent 0 first keeps the output ascending
        rec(idx + 1, budget)
        taken = 0
        while (taken + 1) * v.depth <= budget:
            if remaining_w is not None:
                remaining_w[a] -= 1
                remaining_w[b] -= 1
                if remaining_w[a] < 0 or remaining_w[b] < 0:
                    remaining_w[a] += 1
                    remaining_w[b] += 1
                    break
            taken += 1
            current.append((v, taken))
            rec(idx + 1, budget - taken * v.depth)
            current.pop()
        if remaining_w is not None:
            remaining_w[a] += taken
            remaining_w[b] += taken

    rec(0, d)
    return out


class Polynomial:
    """Finite linear combination of monomials with exact rational coefficients.

    Arithmetic is exact and never rescales; `normalized()` gives the canonical
    representative (coprime integers, positive coefficient on the minimal
    monomial).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[Monomial, Scalar], Iterable[tuple[Monomial, Scalar]]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Scalar] = {}
        for m, c in items:
            acc[m] = acc.get(m, 0) + c
        self._terms = {m: _tidy(c) for m, c in acc.items() if c != 0}

    @classmethod
    def from_monomial(cls, m: Monomial, c: Scalar = 1) -> "Polynomial":
        return cls({m: c})

    @property
    def terms(self) -> dict[Monomial, Scalar]:
        return dict(self._terms)

    def coefficient(self, m: Monomial) -> Scalar:
        return self._terms.get(m, 0)

    def support(self) -> list[Monomial]:
        """Monomials with nonzero coefficient, ascending."""
        return sorted(self._terms, key=lambda m: m.key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Monomial):
            other = Polynomial.from_monomial(other)
        return isinstance(other, Polynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return poly_add(self, poly_scale(other, -1))

    def __neg__(self) -> "Polynomial":
        return poly_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        if isinstance(other, Monomial):
            return poly_multiply_by_monomial(self, other)
        if isinstance(other, Polynomial):
            return poly_multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Monomial)):
            return self.__mul__(other)
        return NotImplemented

    @property
    def degree(self) -> int:
        """t-degree of a homogeneous polynomial."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(iter(self._terms)).degree

    def grade(self, ell: int) -> tuple[int, tuple[int, ...]]:
        if not self._terms:
            raise ValueError("zero polynomial has no grade")
        m = next(iter(self._terms))
        return m.degree, m.weight(ell)

    def is_homogeneous(self, ell: int) -> bool:
        grades = {(m.degree, m.weight(ell)) for m in self._terms}
        return len(grades) <= 1

    def leading_term(self) -> Monomial:
        return leading_term(self)

    def normalized(self) -> "Polynomial":
        if not self._terms:
            return self
        den = 1
        for c in self._terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // gcd(den, c.denominator)
        ints = {m: int(c * den) for m, c in self._terms.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        if ints[leading_term(self)] < 0:
            g = -g
        return Polynomial({m: c // g for m, c in ints.items()})

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, m in enumerate(self.support()):
            c = self._terms[m]
            if idx == 0:
                parts.append(f"{c}*{m}")
            elif c < 0:
                parts.append(f"- {-c}*{m}")
            else:
                parts.append(f"+ {c}*{m}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _tidy(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    terms = p.terms
    for m, c in q.terms.items():
        terms[m] = terms.get(m, 0) + c
    return Polynomial(terms)


def poly_scale(p: Polynomial, c: Scalar) -> Polynomial:
    if c == 0:
        return Polynomial()
    return Polynomial({m: a * c for m, a in p.terms.items()})


def poly_multiply_by_monomial(p: Polynomial, m: Monomial) -> Polynomial:
    return Polynomial({multiply(m, n): c for n, c in p.terms.items()})


def poly_multiply(p: Polynomial, q: Polynomial) -> Polynomial:
    out: dict[Monomial, Scalar] = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = multiply(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return Polynomial(out)


def leading_term(p: Polynomial) -> Monomial:
    """The minimal monomial of p's support."""
    if p.is_zero():
        raise ValueError("zero polynomial has no leading term")
    return min(p.terms, key=lambda m: m.key)


def lower_variable(t: int, v: Variable) -> list[tuple[Variable, int]]:
    """Bracket [x_{-alpha_t}, x_ij(-n)] as a list of (variable, coefficient)."""
    i, j = v.color
    if t == i == j:
        return [(Variable(Color(t, t + 1), v.depth), 2)]
    out = []
    if t == i:
        out.append((Variable(Color(i + 1, j), v.depth), 1))
    if t == j:
        out.append((Variable(Color(i, j + 1), v.depth), 1))
    return out


def lower(t: int, p: Union[Polynomial, Monomial], ell: int) -> Polynomial:
    """Adjoint action of x_{-alpha_t}, extended to products as a derivation."""
    if not 1 <= t <= ell - 1:
        raise ValueError(f"lowering index {t} outside 1..{ell - 1}")
    if isinstance(p, Monomial):
        p = Polynomial.from_monomial(p)
    out: dict[Monomial, Scalar] = {}
    for m, c in p.terms.items():
        for v, e in m.factors:
            images = lower_variable(t, v)
            if not images:
                continue
            rest = dict(m.factors)
            rest[v] -= 1
            for w, b in images:
                ex = dict(rest)
                ex[w] = ex.get(w, 0) + 1
                n = Monomial(ex)
                out[n] = out.get(n, 0) + c * e * b
    return Polynomial(out)


class HighestWeight(NamedTuple):
    """Lambda = k_0 Lambda_0 + ... + k_l Lambda_l."""

    k: tuple[int, ...]

    @classmethod
    def of(cls, *k: int) -> "HighestWeight":
        hw = cls(tuple(int(x) for x in k))
        hw.validate()
        return hw

    @classmethod
    def fundamental(cls, r: int, ell: int) -> "HighestWeight":
        k = [0] * (ell + 1)
        k[r] = 1
        return cls.of(*k)

    def validate(self) -> None:
        if len(self.k) < 2:
            raise ValueError("need k_0..k_l with l >= 1")
        if any(x < 0 for x in self.k) or sum(self.k) < 1:
            raise ValueError(f"invalid highest weight {self.k}")

    @property
    def ell(self) -> int:
        return len(self.k) - 1

    @property
    def level(self) -> int:
        return sum(self.k)

    def partial(self, r: int) -> int:
        """k_0 + ... + k_{r-1}, the level of Lambda^(r)."""
        if not 1 <= r <= self.ell:
            raise ValueError(f"r={r} outside 1..{self.ell}")
        return sum(self.k[:r])

    def __str__(self) -> str:
        return ",".join(map(str, self.k))


_VAR_RE = re.compile(r"x\[(\d+),(\d+)\]\(-(\d+)\)(?:\^(\d+))?")


def parse_monomial(text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return ONE
    factors = []
    for tok in text.split():
        mt = _VAR_RE.fullmatch(tok)
        if mt is None:
            raise ValueError(f"bad factor {tok!r}")
        i, j, n, e = mt.groups()
        factors.append((var(int(i), int(j), int(n)), int(e or 1)))
    return Monomial(factors)


def parse_polynomial(text: str) -> Polynomial:
    """Inverse of ``str(Polynomial)``."""
    tokens = text.split()
    if tokens == ["0"]:
        return Polynomial()
    terms: list[tuple[Monomial, Scalar]] = []
    sign = 1
    coeff: Optional[Fraction] = None
    factors: list[str] = []

    def flush():
        if coeff is not None:
            terms.append((parse_monomial(" ".join(factors)), sign * coeff))

    for tok in tokens:
        if tok in "+-":
            flush()
            sign, coeff, factors = (1 if tok == "+" else -1), None, []
        elif "*" in tok:
            flush()
            c, first = tok.split("*", 1)
            coeff, factors = Fraction(c), [first]
        else:
            factors.append(tok)
    flush()
    return Polynomial(terms)


def iter_divisors(m: Monomial) -> Iterator[Monomial]:
    """All monomial divisors of m, including 1 and m."""
    fs = m.factors

    def rec(idx: int, acc: list[tuple[Variable, int]]):
        if idx == len(fs):
            yield Monomial(acc)
            return
        v, e = fs[idx]
        for a in range(e + 1):
            yield from rec(idx + 1, acc + [(v, a)] if a else acc)

    yield from rec(0, [])
