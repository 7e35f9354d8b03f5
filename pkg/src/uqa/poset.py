"""Inclusion order on cyclic adjoint modules.

Intervals [0, M(v)] are enumerated exactly when M(v) is multiplicity free
(its cyclic submodules are then the sums of subsets of its irreducible
constituents).  Otherwise the interval is sampled from closures of probe
vectors and labelled as a lower bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .algebra import Element, monomial_key
from .hopf import ad_E
from .linalg import Echelon, combine, kernel
from .modules import (
    Closed,
    ModuleSpace,
    _hwv_rows,
    certify_isotype,
    closure_or_raise,
    cyclic_closure,
    highest_weight_vectors,
    isotypic_multiplicities,
)
from .rootdata import LeviSpec, format_weight, weyl_dim_levi

__all__ = [
    "PosetInterval",
    "LatticeVerdict",
    "leq",
    "interval",
    "minimal_elements",
    "decompose_by_hwv",
    "decompose_with_trace",
    "lattice_probe",
    "find_generator",
    "hasse_edges",
]

PROBE_RANGE = 3


def leq(w: Element, v: Element, levi: LeviSpec, cap: Optional[int] = None) -> bool:
    """w <= v, i.e. M(w) is contained in M(v).

    Membership of w in M(v) suffices: ad(y)(ad(x)v) = ad(yx)v.
    """
    if w.is_zero():
        return True
    return closure_or_raise(v, levi, cap).contains(w)


def hasse_edges(nodes: list[ModuleSpace]) -> list[tuple[int, int]]:
    n = len(nodes)
    below = [[i != j and nodes[i].dim < nodes[j].dim and nodes[i].issubset(nodes[j])
              for j in range(n)] for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(n):
            if below[i][j] and not any(below[i][k] and below[k][j] for k in range(n)):
                edges.append((i, j))
    return edges


@dataclass
class PosetInterval:
    top: ModuleSpace
    nodes: list[ModuleSpace]
    edges: list[tuple[int, int]]
    exactness: str
    certificates: list
    seed: Optional[int] = None
    probes: int = 0

    @property
    def zero_index(self) -> int:
        return next(i for i, m in enumerate(self.nodes) if m.dim == 0)

    def lower_covers(self, j: int) -> list[int]:
        return [i for i, k in self.edges if k == j]


def _dedupe(mods: list[ModuleSpace]) -> list[ModuleSpace]:
    seen = set()
    out = []
    for m in mods:
        s = m.signature()
        if s not in seen:
            seen.add(s)
            out.append(m)
    return out


def _random_combo(vectors: list[Element], rng: random.Random) -> Element:
    alg = vectors[0].alg
    while True:
        coeffs = [rng.randint(-PROBE_RANGE, PROBE_RANGE) for _ in vectors]
        if any(coeffs):
            break
    out = alg.zero()
    for c, v in zip(coeffs, vectors):
        if c:
            out = out + v.scale(c)
    return out


def interval(v: Element, levi: LeviSpec, probes: int = 8, seed: int = 0,
             cap: Optional[int] = None) -> PosetInterval:
    top = closure_or_raise(v, levi, cap)
    alg = v.alg
    hw = highest_weight_vectors(top)
    mults = isotypic_multiplicities(top)
    zero = ModuleSpace.zero(levi, alg)
    if all(m == 1 for m in mults.values()):
        parts = [closure_or_raise(h, levi, top.dim) for _, h in hw]
        mods = []
        for mask in range(1 << len(parts)):
            acc = zero
            for k, p in enumerate(parts):
                if mask >> k & 1:
                    acc = acc + p
            mods.append(acc)
        exactness = "Exact"
    else:
        rng = random.Random(seed)
        cands = list(top.basis) + [h for _, h in hw]
        basis = top.basis
        cands += [_random_combo(basis, rng) for _ in range(probes)]
        for lam, m in mults.items():
            if m > 1:
                same = [h for mu, h in hw if mu == lam]
                cands += [_random_combo(same, rng) for _ in range(probes)]
        mods = [zero] + [closure_or_raise(c, levi, top.dim) for c in cands if c] + [top]
        exactness = "ProbeLowerBound"
    nodes = _dedupe(mods)
    nodes.sort(key=lambda m: m.dim)
    certs = [certify_isotype(m) if m.dim else None for m in nodes]
    return PosetInterval(top, nodes, hasse_edges(nodes), exactness, certs,
                         seed if exactness != "Exact" else None, probes)


def minimal_elements(P: PosetInterval) -> list[ModuleSpace]:
    """Nonzero nodes whose only lower cover is the zero module."""
    z = P.zero_index
    return [m for j, m in enumerate(P.nodes)
            if m.dim and P.lower_covers(j) == [z]]


# decomposition ---------------------------------------------------------------


def _quotient_hwv(M: ModuleSpace, acc: ModuleSpace):
    """A highest weight vector of M/acc, as (grade, coset representative)."""
    alg = M.alg
    S = M.levi.nodes
    for g in M.grades():
        reps = Echelon(monomial_key)
        for r in M.rows(g):
            reps.insert(acc.reduce(r).terms)
        us = reps.sorted_rows()
        if not us:
            continue
        images = []
        for u in us:
            vec: dict = {}
            for j in S:
                for m, c in acc.reduce(ad_E(j, Element(alg, u))).terms.items():
                    vec[(j, m)] = c
            images.append(vec)
        rel = kernel(images, lambda t: (t[0], monomial_key(t[1])))
        if rel:
            return g, Element(alg, combine(us, rel[0]))
    return None


def _lift(M: ModuleSpace, acc: ModuleSpace, g, wbar: Element) -> Element:
    """A genuine highest weight vector of M congruent to wbar modulo acc."""
    alg = M.alg
    H = _hwv_rows(M, g)
    res = [acc.reduce(Element(alg, h)).terms for h in H]
    rel = kernel(res + [{k: -c for k, c in wbar.terms.items()}], monomial_key)
    for coeffs in rel:
        last = coeffs[-1]
        if last:
            inv = last.inverse()
            return Element(alg, combine(H, [c * inv for c in coeffs[:-1]]))
    return wbar


def decompose_with_trace(v: Element, levi: LeviSpec, cap: Optional[int] = None):
    """Run the highest-weight decomposition loop.

    Returns (vectors, residual_dims) where residual_dims[k] is dim M(v) minus the
    dimension of the sum accumulated before round k.
    """
    M = closure_or_raise(v, levi, cap)
    acc = ModuleSpace.zero(levi, v.alg)
    vectors = []
    residuals = []
    while acc.dim < M.dim:
        residuals.append(M.dim - acc.dim)
        found = _quotient_hwv(M, acc)
        if found is None:
            raise RuntimeError("no highest weight vector in a nonzero quotient")
        g, wbar = found
        w = _lift(M, acc, g, wbar)
        vectors.append(w)
        acc = acc + closure_or_raise(w, levi, M.dim)
    residuals.append(M.dim - acc.dim)
    return vectors, residuals


def decompose_by_hwv(v: Element, levi: LeviSpec, cap: Optional[int] = None) -> list[Element]:
    return decompose_with_trace(v, levi, cap)[0]


# lattice probing -------------------------------------------------------------


def find_generator(Z: ModuleSpace, rng: random.Random, probes: int = 8) -> Optional[Element]:
    """Search for u with M(u) = Z among the sum of the basis and random combinations."""
    basis = Z.basis
    if not basis:
        return Z.alg.zero()
    first = basis[0].alg.zero()
    for b in basis:
        first = first + b
    for cand in [first] + [_random_combo(basis, rng) for _ in range(probes)]:
        if not cand:
            continue
        verdict = cyclic_closure(cand, Z.levi, cap=Z.dim)
        if isinstance(verdict, Closed) and verdict.module == Z:
            return cand
    return None


def _excess(Z: ModuleSpace):
    datum = Z.alg.datum
    out = []
    for lam, m in isotypic_multiplicities(Z).items():
        d = weyl_dim_levi(datum, lam, Z.levi.nodes)
        if m > d:
            out.append((lam, m, d))
    return out


@dataclass
class LatticeVerdict:
    verdict: str
    failures: list = field(default_factory=list)
    checked_pairs: int = 0
    probes: int = 0
    seed: int = 0

    @property
    def label(self) -> str:
        return f"relative to probe budget {self.probes} (seed {self.seed})"


def lattice_probe(nodes: list[ModuleSpace], levi: LeviSpec, cap: Optional[int] = None,
                  probes: int = 8, seed: int = 0) -> LatticeVerdict:
    """Look for a pair without a join or meet inside the poset of cyclic modules.

    A join fails with certainty when the sum carries an isotype more often than
    the dimension of that isotype: a cyclic module is a quotient of the image
    of U_q(l_S), whose regular module has exactly that multiplicity.
    """
    rng = random.Random(seed)
    datum = levi.datum
    failures = []
    checked = 0
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            X, Y = nodes[i], nodes[j]
            if X.issubset(Y) or Y.issubset(X):
                continue
            checked += 1
            Z = X + Y
            excess = _excess(Z)
            if excess:
                lam, m, d = excess[0]
                failures.append({
                    "pair": [i, j],
                    "bound": "join",
                    "certified": True,
                    "reason": (f"no cyclic upper bound: V({format_weight(lam, datum)}) occurs {m} times "
                               f"in the sum, a cyclic module carries it at most {d} times"),
                })
            elif find_generator(Z, rng, probes) is None:
                failures.append({
                    "pair": [i, j],
                    "bound": "join",
                    "certified": False,
                    "reason": "no cyclic generator of the sum found among probes",
                })
            W = X.intersection(Y)
            if W.dim and find_generator(W, rng, probes) is None:
                failures.append({
                    "pair": [i, j],
                    "bound": "meet",
                    "certified": False,
                    "reason": "intersection has no cyclic generator among probes",
                })
    return LatticeVerdict("Counterexample" if failures else "Lattice", failures, checked, probes, seed)
