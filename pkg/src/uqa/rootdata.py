"""Cartan data for finite types, weights, and Levi subsets.

Conventions: nodes are labelled 1..r (Bourbaki numbering),
``a_ij = <alpha_j, alpha_i^vee>`` and ``(alpha_i, alpha_j) = d_i a_ij`` with
short roots of squared length 2.  Weights are stored in the basis of
fundamental weights, so ``(mu, alpha_j) = mu_j * d_j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional

__all__ = [
    "CartanDatum",
    "Weight",
    "LeviSpec",
    "build_cartan",
    "cominuscule_nodes",
    "s_dominant",
    "weyl_dim_levi",
    "levi_positive_roots",
    "parse_weight",
    "format_weight",
]


@dataclass(frozen=True)
class Weight:
    """An element of the weight lattice, in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def __mul__(self, n: int) -> "Weight":
        return Weight(tuple(n * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __getitem__(self, j: int) -> int:
        """Coordinate at node j (1-based)."""
        return self.coords[j - 1]


def _chain_form(n: int, diag: list[int], off: dict[tuple[int, int], int]) -> list[list[int]]:
    b = [[0] * n for _ in range(n)]
    for i in range(n):
        b[i][i] = diag[i]
    for (i, j), v in off.items():
        b[i - 1][j - 1] = v
        b[j - 1][i - 1] = v
    return b


def _symmetric_form(letter: str, n: int) -> list[list[int]]:
    """Gram matrix of simple roots with short roots normalized to length 2."""
    if letter == "A" and n >= 1:
        return _chain_form(n, [2] * n, {(i, i + 1): -1 for i in range(1, n)})
    if letter == "B" and n >= 2:
        return _chain_form(n, [4] * (n - 1) + [2], {(i, i + 1): -2 for i in range(1, n)})
    if letter == "C" and n >= 2:
        off = {(i, i + 1): -1 for i in range(1, n - 1)}
        off[(n - 1, n)] = -2
        return _chain_form(n, [2] * (n - 1) + [4], off)
    if letter == "D" and n >= 4:
        off = {(i, i + 1): -1 for i in range(1, n - 1)}
        off[(n - 2, n)] = -1
        return _chain_form(n, [2] * n, off)
    if letter == "E" and n in (6, 7, 8):
        off = {(1, 3): -1, (2, 4): -1, (3, 4): -1}
        off.update({(i, i + 1): -1 for i in range(4, n)})
        return _chain_form(n, [2] * n, off)
    if letter == "F" and n == 4:
        return _chain_form(4, [4, 4, 2, 2], {(1, 2): -2, (2, 3): -2, (3, 4): -1})
    if letter == "G" and n == 2:
        return _chain_form(2, [2, 6], {(1, 2): -3})
    raise ValueError(f"unsupported Cartan type {letter}{n}")


def _highest_root_table(letter: str, n: int) -> tuple[int, ...]:
    # standard tables, Bourbaki numbering
    if letter == "A":
        return (1,) * n
    if letter == "B":
        return (1,) + (2,) * (n - 1)
    if letter == "C":
        return (2,) * (n - 1) + (1,)
    if letter == "D":
        return (1,) + (2,) * (n - 3) + (1, 1)
    return {
        ("E", 6): (1, 2, 2, 3, 2, 1),
        ("E", 7): (2, 2, 3, 4, 3, 2, 1),
        ("E", 8): (2, 3, 4, 6, 5, 4, 3, 2),
        ("F", 4): (2, 3, 4, 2),
        ("G", 2): (3, 2),
    }[(letter, n)]


@dataclass(frozen=True)
class CartanDatum:
    type_letter: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[int, ...]
    form: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        return self.cartan[i - 1][j - 1]

    def root_form(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j)."""
        return self.form[i - 1][j - 1]

    # weights ----------------------------------------------------------------

    def zero(self) -> Weight:
        return Weight((0,) * self.rank)

    def fundamental(self, i: int) -> Weight:
        self._check_node(i)
        return Weight(tuple(1 if j == i else 0 for j in self.nodes))

    def simple_root_coords(self, i: int) -> Weight:
        """alpha_i in the fundamental-weight basis: the i-th Cartan column."""
        self._check_node(i)
        return Weight(tuple(self.a(j, i) for j in self.nodes))

    def from_root_coords(self, content: Iterable[int]) -> Weight:
        """Weight of sum_i c_i alpha_i."""
        content = tuple(content)
        return Weight(tuple(sum(content[i - 1] * self.a(j, i) for i in self.nodes)
                            for j in self.nodes))

    def root_coords(self, mu: Weight) -> tuple[Fraction, ...]:
        """Coefficients of mu in the simple-root basis (rational in general)."""
        return tuple(sum((self._cartan_inverse[i][j] * mu.coords[j]
                          for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def in_root_lattice(self, mu: Weight) -> bool:
        return all(c.denominator == 1 for c in self.root_coords(mu))

    def pairing(self, mu: Weight, j: int) -> tuple[int, int]:
        """(<mu, alpha_j^vee>, (mu, alpha_j))."""
        self._check_node(j)
        c = mu.coords[j - 1]
        return c, c * self.d[j - 1]

    def form_with_content(self, mu_coords: tuple[int, ...], content: tuple[int, ...]) -> int:
        """(mu, sum_j content_j alpha_j) for mu in fundamental-weight coordinates."""
        return sum(m * c * dj for m, c, dj in zip(mu_coords, content, self.d))

    def content_form(self, c1: tuple[int, ...], c2: tuple[int, ...]) -> int:
        """(sum c1_i alpha_i, sum c2_j alpha_j)."""
        total = 0
        for i, x in enumerate(c1):
            if x:
                row = self.form[i]
                for j, y in enumerate(c2):
                    if y:
                        total += x * y * row[j]
        return total

    # roots ------------------------------------------------------------------

    @cached_property
    def _cartan_inverse(self) -> list[list[Fraction]]:
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
             for i in range(n)]
        for col in range(n):
            piv = next(r for r in range(col, n) if m[r][col] != 0)
            m[col], m[piv] = m[piv], m[col]
            p = m[col][col]
            m[col] = [x / p for x in m[col]]
            for r in range(n):
                if r != col and m[r][col] != 0:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        # mu_j = sum_i x_i a_ji, so root coordinates are C^{-1} mu
        return [row[n:] for row in m]

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, closed under simple reflections."""
        n = self.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    c = sum(beta[j] * self.cartan[i][j] for j in range(n))
                    if c == 0:
                        continue
                    gamma = tuple(beta[j] - (c if j == i else 0) for j in range(n))
                    if all(g >= 0 for g in gamma) and any(gamma) and gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
            frontier = nxt
        return tuple(sorted(seen, key=lambda b: (sum(b), b)))

    @cached_property
    def highest_root(self) -> tuple[int, ...]:
        return _highest_root_table(self.type_letter, self.rank)

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise ValueError(f"node index {i} out of range 1..{self.rank}")


def build_cartan(type_letter: str, rank: int) -> CartanDatum:
    """Standard Cartan matrix and minimal symmetrizers for a finite type."""
    letter = type_letter.upper()
    b = _symmetric_form(letter, rank)
    d = tuple(b[i][i] // 2 for i in range(rank))
    cartan = tuple(tuple(b[i][j] // d[i] for j in range(rank)) for i in range(rank))
    return CartanDatum(letter, rank, cartan, d, tuple(tuple(row) for row in b))


# Levi subsets ----------------------------------------------------------------


@dataclass(frozen=True)
class LeviSpec:
    datum: CartanDatum
    S: frozenset[int]
    x: Optional[int] = None

    def __post_init__(self):
        for i in self.S:
            self.datum._check_node(i)
        if self.x is not None:
            self.datum._check_node(self.x)
            if self.S != frozenset(self.datum.nodes) - {self.x}:
                raise ValueError("LeviSpec: S must be the complement of {x}")

    @classmethod
    def of(cls, datum: CartanDatum, S: Iterable[int]) -> "LeviSpec":
        return cls(datum, frozenset(S))

    @classmethod
    def complement(cls, datum: CartanDatum, x: int) -> "LeviSpec":
        return cls(datum, frozenset(datum.nodes) - {x}, x)

    @property
    def nodes(self) -> list[int]:
        return sorted(self.S)

    def describe(self) -> str:
        s = "{" + ",".join(map(str, self.nodes)) + "}"
        return f"{self.datum.name} S={s}" + (f" x={self.x}" if self.x is not None else "")


def cominuscule_nodes(datum: CartanDatum) -> set[int]:
    """Nodes whose simple root occurs with coefficient 1 in the highest root."""
    return {i for i, c in zip(datum.nodes, datum.highest_root) if c == 1}


def s_dominant(lam: Weight, S: Iterable[int]) -> bool:
    return all(lam[j] >= 0 for j in S)


def levi_positive_roots(datum: CartanDatum, S: Iterable[int]) -> list[tuple[int, ...]]:
    S = set(S)
    return [b for b in datum.positive_roots
            if all(c == 0 or (i + 1) in S for i, c in enumerate(b))]


def weyl_dim_levi(datum: CartanDatum, lam: Weight, S: Iterable[int]) -> int:
    """Dimension of the irreducible Levi module of highest weight lam.

    Only the semisimple part (simple roots in S) matters, via
    prod over positive Levi roots beta of (lam + rho_S, beta) / (rho_S, beta).
    """
    S = set(S)
    if not s_dominant(lam, S):
        raise ValueError(f"weight {lam.coords} is not dominant on S={sorted(S)}")
    num = 1
    den = 1
    for beta in levi_positive_roots(datum, S):
        num *= sum(c * datum.d[i] * (lam.coords[i] + 1) for i, c in enumerate(beta))
        den *= sum(c * datum.d[i] for i, c in enumerate(beta))
    dim = Fraction(num, den)
    assert dim.denominator == 1
    return int(dim)


# text -----------------------------------------------------------------------

_WEIGHT_TERM = re.compile(r"([+-]?)(\d*)\*?([wa])(\d+)")


def parse_weight(text: str, datum: CartanDatum) -> Weight:
    """Parse integer combinations of ``w<i>`` and ``a<i>``, e.g. ``-2*w2+a1``."""
    s = re.sub(r"\s+", "", text)
    if s in ("", "0"):
        if s == "":
            raise ValueError("empty weight")
        return datum.zero()
    pos = 0
    total = datum.zero()
    while pos < len(s):
        m = _WEIGHT_TERM.match(s, pos)
        if not m or (pos > 0 and not m.group(1)):
            raise ValueError(f"bad weight syntax at position {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        i = int(m.group(4))
        if not 1 <= i <= datum.rank:
            raise ValueError(f"unknown node index {i} in weight {text!r}")
        base = datum.fundamental(i) if m.group(3) == "w" else datum.simple_root_coords(i)
        total = total + base * (sign * coeff)
        pos = m.end()
    return total


def _combo_text(coeffs: Iterable[int], letter: str) -> str:
    parts = []
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        body = f"{letter}{i}" if abs(c) == 1 else f"{abs(c)}*{letter}{i}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) or "0"


def format_weight(mu: Weight, datum: CartanDatum) -> str:
    """Root-lattice weights as ``a``-combinations, others as ``w``-combinations."""
    rc = datum.root_coords(mu)
    if all(c.denominator == 1 for c in rc):
        return _combo_text((int(c) for c in rc), "a")
    return _combo_text(mu.coords, "w")
