"""The quantized enveloping algebra in simply-connected form.

Elements are finite combinations of normal monomials ``F-word * K_mu * E-word``
with coefficients in Q(q).  Relations (Jantzen conventions):

    K_mu E_j = q^{(mu, alpha_j)} E_j K_mu
    K_mu F_j = q^{-(mu, alpha_j)} F_j K_mu
    E_i F_j - F_j E_i = delta_ij (K_i - K_i^{-1}) / (q_i - q_i^{-1})

plus the q-Serre relations among the E's and among the F's.  Words in E (or F)
are kept as canonical representatives modulo the Serre ideal; the
representatives of each multidegree are found by row reduction of the degree
piece of the ideal (see ``GradedPiece``).
"""

from __future__ import annotations

import threading
from typing import Iterable, NamedTuple, Optional, Union

from .linalg import Echelon
from .rootdata import CartanDatum, Weight, format_weight
from .scalar import ONE, Scalar, format_scalar, q_binomial

__all__ = [
    "Monomial",
    "Element",
    "UqAlgebra",
    "monomial_key",
]


class Monomial(NamedTuple):
    f: tuple[int, ...]
    torus: tuple[int, ...]
    e: tuple[int, ...]


def monomial_key(m: Monomial) -> tuple:
    """Global monomial order used for pivots and for printing."""
    return (len(m.f) + len(m.e), m.f, m.torus, m.e)


def _add_to(out: dict, key, c: Scalar) -> None:
    y = out.get(key)
    if y is None:
        if c:
            out[key] = c
    else:
        z = y + c
        if z:
            out[key] = z
        else:
            del out[key]


class GradedPiece:
    """One multidegree of the positive (or negative) part.

    ``reduction`` maps every non-canonical word to its expansion in canonical
    words; ``canonical`` lists the words that survive.
    """

    __slots__ = ("content", "words", "relations", "reduction", "canonical")

    def __init__(self, content, words, relations: Echelon):
        self.content = content
        self.words = words
        self.relations = relations
        self.reduction = {
            p: {w: -c for w, c in row.items() if w != p} for p, row in relations.rows.items()
        }
        self.canonical = [w for w in words if w not in relations.rows]

    @property
    def dim(self) -> int:
        return len(self.canonical)


def _distinct_words(content: tuple[int, ...]) -> list[tuple[int, ...]]:
    out = []
    counts = list(content)
    total = sum(counts)
    word: list[int] = []

    def rec():
        if len(word) == total:
            out.append(tuple(word))
            return
        for i, c in enumerate(counts):
            if c:
                counts[i] -= 1
                word.append(i + 1)
                rec()
                word.pop()
                counts[i] += 1

    rec()
    return out


class Element:
    """An element of U_q(g); immutable, with a canonical term map."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: "UqAlgebra", terms: dict):
        self.alg = alg
        self.terms = terms

    def __add__(self, other):
        other = self.alg.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_to(out, m, c)
        return Element(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.alg.coerce(other))

    def __rsub__(self, other):
        return self.alg.coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        if isinstance(other, Element):
            return self.alg.multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for K")
        out = self.alg.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c) -> "Element":
        if isinstance(c, int):
            c = Scalar.from_int(c)
        if not c:
            return Element(self.alg, {})
        return Element(self.alg, {m: c * x for m, x in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Scalar)):
            other = self.alg.coerce(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, Scalar]]:
        return sorted(self.terms.items(), key=lambda t: monomial_key(t[0]))

    def __str__(self) -> str:
        return self.alg.format(self)

    def __repr__(self) -> str:
        return f"Element({self.alg.format(self)!r})"


class UqAlgebra:
    """U_q(g) for a fixed Cartan datum, with memoized normal-form machinery."""

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        self.rank = datum.rank
        self._zero_t = (0,) * datum.rank
        self._alpha = {i: datum.simple_root_coords(i).coords for i in datum.nodes}
        self._neg_alpha = {i: tuple(-x for x in a) for i, a in self._alpha.items()}
        self._pieces: dict[tuple[int, ...], GradedPiece] = {}
        self._ef_memo: dict = {}
        self._mul_memo: dict = {}
        self._lock = threading.RLock()

    # generators -------------------------------------------------------------

    def element(self, terms: dict) -> Element:
        return Element(self, {m: c for m, c in terms.items() if c})

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {Monomial((), self._zero_t, ()): ONE})

    def scalar(self, c) -> Element:
        if isinstance(c, int):
            c = Scalar.from_int(c)
        return self.one().scale(c)

    def coerce(self, x) -> Element:
        if isinstance(x, Element):
            return x
        if isinstance(x, (int, Scalar)):
            return self.scalar(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into U_q")

    def E(self, i: int) -> Element:
        self.datum._check_node(i)
        return Element(self, {Monomial((), self._zero_t, (i,)): ONE})

    def F(self, i: int) -> Element:
        self.datum._check_node(i)
        return Element(self, {Monomial((i,), self._zero_t, ()): ONE})

    def K(self, mu: Union[Weight, tuple[int, ...]]) -> Element:
        coords = mu.coords if isinstance(mu, Weight) else tuple(mu)
        if len(coords) != self.rank:
            raise ValueError("torus weight has wrong length")
        return Element(self, {Monomial((), coords, ()): ONE})

    def Ki(self, i: int, power: int = 1) -> Element:
        """K_{alpha_i}^power."""
        return self.K(self.datum.simple_root_coords(i) * power)

    # grading ----------------------------------------------------------------

    def content(self, word: tuple[int, ...]) -> tuple[int, ...]:
        c = [0] * self.rank
        for i in word:
            c[i - 1] += 1
        return tuple(c)

    def grade(self, m: Monomial) -> tuple[int, ...]:
        """Root-lattice degree of a monomial: |E-word| - |F-word|."""
        c = [0] * self.rank
        for i in m.e:
            c[i - 1] += 1
        for i in m.f:
            c[i - 1] -= 1
        return tuple(c)

    def q_weight(self, a: Element) -> Optional[Weight]:
        """Common adjoint weight of all terms, or None if a is zero or not homogeneous."""
        grades = {self.grade(m) for m in a.terms}
        if len(grades) != 1:
            return None
        return self.datum.from_root_coords(grades.pop())

    def homogeneous_components(self, a: Element) -> dict[tuple[int, ...], Element]:
        out: dict = {}
        for m, c in a.terms.items():
            out.setdefault(self.grade(m), {})[m] = c
        return {g: Element(self, t) for g, t in out.items()}

    # Serre reduction ----------------------------------------------------------

    def serre_relation(self, i: int, j: int) -> dict[tuple[int, ...], Scalar]:
        """sum_r (-1)^r [n choose r]_{q_i} X_i^{n-r} X_j X_i^r with n = 1 - a_ij."""
        n = 1 - self.datum.a(i, j)
        di = self.datum.d[i - 1]
        out: dict = {}
        for r in range(n + 1):
            c = q_binomial(n, r, di)
            if r % 2:
                c = -c
            _add_to(out, (i,) * (n - r) + (j,) + (i,) * r, c)
        return out

    def piece(self, content: tuple[int, ...]) -> GradedPiece:
        pc = self._pieces.get(content)
        if pc is not None:
            return pc
        with self._lock:
            pc = self._pieces.get(content)
            if pc is None:
                pc = self._build_piece(content)
                self._pieces[content] = pc
        return pc

    def _build_piece(self, content: tuple[int, ...]) -> GradedPiece:
        words = _distinct_words(content)
        ech = Echelon(lambda w: w)
        if sum(content) >= 2:
            for i in self.datum.nodes:
                if not content[i - 1]:
                    continue
                prev = list(content)
                prev[i - 1] -= 1
                for row in self.piece(tuple(prev)).relations.rows.values():
                    ech.insert({(i,) + w: c for w, c in row.items()})
                    ech.insert({w + (i,): c for w, c in row.items()})
            for i in self.datum.nodes:
                for j in self.datum.nodes:
                    if i == j:
                        continue
                    n = 1 - self.datum.a(i, j)
                    want = [0] * self.rank
                    want[i - 1] += n
                    want[j - 1] += 1
                    if tuple(want) == content:
                        ech.insert(self.serre_relation(i, j))
        return GradedPiece(content, words, ech)

    def reduce_word(self, word: tuple[int, ...]) -> dict[tuple[int, ...], Scalar]:
        """Expansion of a word in canonical words of the same content."""
        if len(word) < 2:
            return {word: ONE}
        r = self.piece(self.content(word)).reduction.get(word)
        return r if r is not None else {word: ONE}

    def graded_dim(self, nu: Union[Weight, tuple[int, ...]], side: str = "E") -> int:
        """Dimension of the degree-nu piece of the E-part (or F-part)."""
        if side not in ("E", "F"):
            raise ValueError("side must be 'E' or 'F'")
        if isinstance(nu, Weight):
            rc = self.datum.root_coords(nu)
            if any(c.denominator != 1 or c < 0 for c in rc):
                raise ValueError(f"{nu.coords} is not in Q_+")
            content = tuple(int(c) for c in rc)
        else:
            content = tuple(nu)
            if any(c < 0 for c in content):
                raise ValueError(f"{content} is not in Q_+")
        return self.piece(content).dim

    # multiplication -----------------------------------------------------------

    def _ef(self, e: tuple[int, ...], f: tuple[int, ...]) -> dict:
        """E_e F_f as a map (F-word, torus, E-word) -> coefficient, words unreduced."""
        if not e or not f:
            return {(f, self._zero_t, e): ONE}
        key = (e, f)
        hit = self._ef_memo.get(key)
        if hit is not None:
            return hit
        datum = self.datum
        i = e[-1]
        e1 = e[:-1]
        out: dict = {}
        for (x, t, y), c in self._ef(e1, f).items():
            _add_to(out, (x, t, y + (i,)), c)
        di = datum.d[i - 1]
        ci = (Scalar.q_power(di) - Scalar.q_power(-di)).inverse()
        for m, j in enumerate(f):
            if j != i:
                continue
            g = f[:m] + f[m + 1:]
            s = datum.content_form(self._unit(i), self.content(f[m + 1:]))
            for rho, coeff in (
                (self._alpha[i], ci * Scalar.q_power(-s)),
                (self._neg_alpha[i], -ci * Scalar.q_power(s)),
            ):
                for (x, t, y), c in self._ef(e1, g).items():
                    shift = -datum.form_with_content(rho, self.content(y))
                    t2 = tuple(a + b for a, b in zip(t, rho))
                    _add_to(out, (x, t2, y), c * coeff * Scalar.q_power(shift))
        self._ef_memo[key] = out
        return out

    def _unit(self, i: int) -> tuple[int, ...]:
        return tuple(int(j == i) for j in self.datum.nodes)

    def multiply_monomials(self, m1: Monomial, m2: Monomial) -> dict:
        key = (m1, m2)
        hit = self._mul_memo.get(key)
        if hit is not None:
            return hit
        datum = self.datum
        a, mu, b = m1
        c, nu, d = m2
        out: dict = {}
        for (x, rho, y), coeff in self._ef(b, c).items():
            shift = -datum.form_with_content(mu, self.content(x)) - datum.form_with_content(nu, self.content(y))
            if shift:
                coeff = coeff * Scalar.q_power(shift)
            torus = tuple(p + r + s for p, r, s in zip(mu, rho, nu))
            fred = self.reduce_word(a + x)
            ered = self.reduce_word(y + d)
            for fw, cf in fred.items():
                cf = coeff * cf
                for ew, ce in ered.items():
                    _add_to(out, Monomial(fw, torus, ew), cf * ce)
        self._mul_memo[key] = out
        return out

    def multiply(self, a: Element, b: Element) -> Element:
        out: dict = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                c12 = c1 * c2
                for m, c in self.multiply_monomials(m1, m2).items():
                    _add_to(out, m, c12 * c)
        return Element(self, out)

    def normal_form(self, raw: Iterable[tuple[object, Iterable[tuple]]]) -> Element:
        """Normal form of sum_k c_k * g_k1 g_k2 ... .

        Generators are ``('E', i)``, ``('F', i)`` or ``('K', weight)``.
        """
        total = self.zero()
        for coeff, gens in raw:
            term = self.scalar(coeff) if not isinstance(coeff, Element) else coeff
            for g in gens:
                kind, arg = g
                if kind == "E":
                    term = term * self.E(arg)
                elif kind == "F":
                    term = term * self.F(arg)
                elif kind == "K":
                    term = term * self.K(arg)
                else:
                    raise ValueError(f"unknown generator kind {kind!r}")
            total = total + term
        return total

    # text -----------------------------------------------------------------------

    def format_monomial(self, m: Monomial) -> str:
        parts = [f"F{i}" for i in m.f]
        if any(m.torus):
            parts.append(f"K({format_weight(Weight(m.torus), self.datum)})")
        parts.extend(f"E{i}" for i in m.e)
        return " ".join(parts) if parts else "1"

    def format(self, a: Element) -> str:
        if not a.terms:
            return "0"
        pieces = []
        for m, c in a.sorted_terms():
            mono = self.format_monomial(m)
            ctext = format_scalar(c)
            if mono == "1":
                if not c.is_unit_monomial() and not ctext.startswith("("):
                    ctext = f"({ctext})"
                pieces.append(ctext)
            elif c.is_one():
                pieces.append(mono)
            elif (-c).is_one():
                pieces.append("-" + mono)
            elif c.is_unit_monomial():
                pieces.append(f"{ctext}*{mono}")
            else:
                if not ctext.startswith("("):
                    ctext = f"({ctext})"
                pieces.append(f"{ctext}*{mono}")
        out = pieces[0]
        for p in pieces[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out
