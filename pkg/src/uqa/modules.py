"""Cyclic adjoint modules M(v) = ad(U_q(l_S)) v and their isotypes."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .algebra import Element, UqAlgebra, monomial_key
from .hopf import ad_E, ad_F
from .linalg import Echelon, combine, kernel
from .rootdata import LeviSpec, Weight, format_weight, s_dominant, weyl_dim_levi

__all__ = [
    "DEFAULT_CAP",
    "ModuleSpace",
    "Closed",
    "CapExceeded",
    "CapExceededError",
    "IsotypeCertificate",
    "NotIrreducibleCyclicHW",
    "default_cap",
    "cyclic_closure",
    "closure_or_raise",
    "is_locally_finite",
    "weight_spaces",
    "highest_weight_vectors",
    "isotypic_multiplicities",
    "certify_isotype",
    "lambda_membership",
    "same_embedding",
    "closure_report",
]

DEFAULT_CAP = 500


def default_cap() -> int:
    return int(os.environ.get("UQA_CAP", DEFAULT_CAP))


def _grade_key(g: tuple[int, ...]) -> tuple:
    return (-sum(g), tuple(-x for x in g))


class ModuleSpace:
    """A finite-dimensional subspace of U_q(g) split into adjoint weight spaces.

    Each weight space is an ``Echelon`` over monomials, so two spaces are equal
    exactly when their row data coincide.
    """

    def __init__(self, levi: LeviSpec, alg: UqAlgebra, spaces: Optional[dict] = None):
        self.levi = levi
        self.alg = alg
        self.spaces: dict[tuple[int, ...], Echelon] = spaces or {}
        self._sig = None

    @classmethod
    def zero(cls, levi: LeviSpec, alg: UqAlgebra) -> "ModuleSpace":
        return cls(levi, alg, {})

    @classmethod
    def span(cls, levi: LeviSpec, alg: UqAlgebra, vectors: Iterable[Element]) -> "ModuleSpace":
        M = cls(levi, alg, {})
        for v in vectors:
            M._insert(v)
        return M

    def _insert(self, v: Element) -> list[Element]:
        """Insert v (splitting into weight components); returns the new residuals."""
        new = []
        for g, comp in self.alg.homogeneous_components(v).items():
            ech = self.spaces.get(g)
            if ech is None:
                ech = self.spaces[g] = Echelon(monomial_key)
            r = ech.insert(comp.terms)
            if r is not None:
                new.append(Element(self.alg, r))
        self._sig = None
        return new

    # structure ----------------------------------------------------------------

    @property
    def dim(self) -> int:
        return sum(len(e) for e in self.spaces.values())

    def grades(self) -> list[tuple[int, ...]]:
        return sorted((g for g, e in self.spaces.items() if len(e)), key=_grade_key)

    def weight_of(self, grade: tuple[int, ...]) -> Weight:
        return self.alg.datum.from_root_coords(grade)

    def rows(self, grade: tuple[int, ...]) -> list[Element]:
        ech = self.spaces.get(grade)
        if ech is None:
            return []
        return [Element(self.alg, r) for r in ech.sorted_rows()]

    @property
    def basis(self) -> list[Element]:
        out = []
        for g in self.grades():
            out.extend(self.rows(g))
        return out

    @property
    def weight_index(self) -> dict[Weight, list[int]]:
        out = {}
        pos = 0
        for g in self.grades():
            n = len(self.spaces[g])
            out[self.weight_of(g)] = list(range(pos, pos + n))
            pos += n
        return out

    def signature(self) -> tuple:
        if self._sig is None:
            self._sig = tuple((g, self.spaces[g].signature()) for g in self.grades())
        return self._sig

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleSpace):
            return NotImplemented
        return self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def reduce(self, v: Element) -> Element:
        out: dict = {}
        for g, comp in self.alg.homogeneous_components(v).items():
            ech = self.spaces.get(g)
            r = ech.reduce(comp.terms) if ech is not None else dict(comp.terms)
            out.update(r)
        return Element(self.alg, out)

    def contains(self, v: Element) -> bool:
        return self.reduce(v).is_zero()

    def issubset(self, other: "ModuleSpace") -> bool:
        for g, ech in self.spaces.items():
            if not len(ech):
                continue
            oth = other.spaces.get(g)
            if oth is None or len(oth) < len(ech):
                return False
            for r in ech.rows.values():
                if oth.reduce(r):
                    return False
        return True

    def __le__(self, other: "ModuleSpace") -> bool:
        return self.issubset(other)

    def __add__(self, other: "ModuleSpace") -> "ModuleSpace":
        spaces = {g: e.copy() for g, e in self.spaces.items()}
        out = ModuleSpace(self.levi, self.alg, spaces)
        for g in other.grades():
            ech = out.spaces.setdefault(g, Echelon(monomial_key))
            for r in other.spaces[g].rows.values():
                ech.insert(r)
        return out

    def intersection(self, other: "ModuleSpace") -> "ModuleSpace":
        out = ModuleSpace(self.levi, self.alg, {})
        for g in self.grades():
            oth = other.spaces.get(g)
            if oth is None or not len(oth):
                continue
            rows = self.spaces[g].sorted_rows()
            residuals = [oth.reduce(r) for r in rows]
            for coeffs in kernel(residuals, monomial_key):
                vec = combine(rows, coeffs)
                if vec:
                    out.spaces.setdefault(g, Echelon(monomial_key)).insert(vec)
        return out

    def __repr__(self) -> str:
        return f"<ModuleSpace {self.levi.describe()} dim={self.dim}>"


@dataclass
class Closed:
    module: ModuleSpace
    steps: int

    status = "Closed"

    @property
    def dim(self) -> int:
        return self.module.dim


@dataclass
class CapExceeded:
    dim: int
    last_step: int
    cap: int

    status = "CapExceeded"


class CapExceededError(RuntimeError):
    def __init__(self, verdict: CapExceeded):
        super().__init__(f"closure exceeded cap {verdict.cap} (dim {verdict.dim} at step {verdict.last_step})")
        self.verdict = verdict


def cyclic_closure(v: Element, levi: LeviSpec, cap: Optional[int] = None,
                   reverse: bool = False) -> Union[Closed, CapExceeded]:
    """Breadth-first closure of v under ad(E_j), ad(F_j), j in S.

    Weight components of v are seeded separately: ad(K_mu) for mu in P
    separates distinct adjoint weights, so each component already lies in M(v).
    """
    if v.is_zero():
        raise ValueError("cyclic_closure: zero input")
    if cap is None:
        cap = default_cap()
    alg = v.alg
    M = ModuleSpace(levi, alg, {})
    ops = [(ad_E, j) for j in levi.nodes] + [(ad_F, j) for j in levi.nodes]
    if reverse:
        ops.reverse()
    queue = deque((g, comp) for g, comp in sorted(alg.homogeneous_components(v).items(),
                                                     key=lambda gc: _grade_key(gc[0])))
    if reverse:
        queue = deque(reversed(queue))
    steps = 0
    while queue:
        _, w = queue.popleft()
        new = M._insert(w)
        if not new:
            continue
        steps += 1
        if M.dim > cap:
            return CapExceeded(M.dim, steps, cap)
        for r in new:
            for op, j in ops:
                u = op(j, r)
                if u:
                    queue.append((None, u))
    return Closed(M, steps)


def closure_or_raise(v: Element, levi: LeviSpec, cap: Optional[int] = None) -> ModuleSpace:
    verdict = cyclic_closure(v, levi, cap)
    if isinstance(verdict, CapExceeded):
        raise CapExceededError(verdict)
    return verdict.module


def is_locally_finite(v: Element, levi: LeviSpec, cap: Optional[int] = None) -> str:
    """'Yes' when the closure terminates within cap, otherwise 'Unknown'."""
    return "Yes" if isinstance(cyclic_closure(v, levi, cap), Closed) else "Unknown"


def weight_spaces(M: ModuleSpace) -> dict[Weight, int]:
    return {M.weight_of(g): len(M.spaces[g]) for g in M.grades()}


def _hwv_rows(M: ModuleSpace, g: tuple[int, ...]) -> list[dict]:
    rows = M.rows(g)
    S = M.levi.nodes
    if not S:
        return [r.terms for r in rows]
    images = []
    for r in rows:
        vec: dict = {}
        for j in S:
            for m, c in ad_E(j, r).terms.items():
                vec[(j, m)] = c
        images.append(vec)
    rel = kernel(images, lambda t: (t[0], monomial_key(t[1])))
    ech = Echelon(monomial_key)
    for coeffs in rel:
        ech.insert(combine([r.terms for r in rows], coeffs))
    return ech.sorted_rows()


def highest_weight_vectors(M: ModuleSpace) -> list[tuple[Weight, Element]]:
    """Basis of the joint kernel of ad(E_j), j in S, on M, by weight."""
    out = []
    for g in M.grades():
        for r in _hwv_rows(M, g):
            out.append((M.weight_of(g), Element(M.alg, r)))
    return out


def isotypic_multiplicities(M: ModuleSpace) -> dict[Weight, int]:
    """Multiplicity of each V(lambda); valid since finite-dimensional modules are completely reducible."""
    out: dict = {}
    for lam, _ in highest_weight_vectors(M):
        out[lam] = out.get(lam, 0) + 1
    return out


@dataclass
class IsotypeCertificate:
    lam: Weight
    hw_vector: Element
    dim: int
    certified: bool = True

    def to_json(self, datum) -> dict:
        return {
            "lambda": format_weight(self.lam, datum),
            "dim": self.dim,
            "certified": self.certified,
        }


@dataclass
class NotIrreducibleCyclicHW:
    reason: str
    dim: int
    hw_weights: list = field(default_factory=list)
    certified: bool = False

    def to_json(self, datum) -> dict:
        return {
            "lambda": None,
            "dim": self.dim,
            "certified": False,
            "reason": self.reason,
        }


def certify_isotype(M: ModuleSpace) -> Union[IsotypeCertificate, NotIrreducibleCyclicHW]:
    """Certify M = V(lambda) via a unique highest weight vector and the Weyl dimension."""
    datum = M.alg.datum
    S = M.levi.nodes
    if M.dim == 0:
        return NotIrreducibleCyclicHW("zero module", 0)
    hw = highest_weight_vectors(M)
    weights = [lam for lam, _ in hw]
    if len(hw) != 1:
        text = ", ".join(format_weight(w, datum) for w in weights)
        return NotIrreducibleCyclicHW(f"highest weight space has dimension {len(hw)} ({text})", M.dim, weights)
    lam, w = hw[0]
    if not s_dominant(lam, S):
        return NotIrreducibleCyclicHW("highest weight is not dominant on S", M.dim, weights)
    expected = weyl_dim_levi(datum, lam, S)
    if expected != M.dim:
        return NotIrreducibleCyclicHW(
            f"dimension {M.dim} differs from Weyl dimension {expected}", M.dim, weights)
    gen = cyclic_closure(w, M.levi, cap=M.dim)
    if not isinstance(gen, Closed) or gen.module != M:
        return NotIrreducibleCyclicHW("highest weight vector does not generate the module", M.dim, weights)
    return IsotypeCertificate(lam, w, M.dim, True)


def lambda_membership(lam: Weight, v: Element, levi: LeviSpec, cap: Optional[int] = None) -> bool:
    """v witnesses lam in the set of realized highest weights."""
    if v.is_zero():
        return False
    if v.alg.q_weight(v) != lam:
        return False
    if any(ad_E(j, v) for j in levi.nodes):
        return False
    return is_locally_finite(v, levi, cap) == "Yes"


def same_embedding(v: Element, w: Element, levi: LeviSpec, cap: Optional[int] = None) -> bool:
    return closure_or_raise(v, levi, cap) == closure_or_raise(w, levi, cap)


def closure_report(verdict: Union[Closed, CapExceeded], datum) -> dict:
    """JSON-ready summary of one closure."""
    if isinstance(verdict, CapExceeded):
        return {
            "status": "CapExceeded",
            "verdict": "Unknown",
            "dim": verdict.dim,
            "cap": verdict.cap,
            "last_step": verdict.last_step,
            "weights": [],
            "hwvs": [],
            "isotype": None,
        }
    M = verdict.module
    alg = M.alg
    cert = certify_isotype(M)
    return {
        "status": "Closed",
        "dim": M.dim,
        "weights": [{"weight": format_weight(w, datum), "dim": n} for w, n in weight_spaces(M).items()],
        "hwvs": [{"weight": format_weight(w, datum), "vector": alg.format(h)}
                 for w, h in highest_weight_vectors(M)],
        "isotype": cert.to_json(datum),
    }
