"""Axiom suites shared by ``uqa selfcheck`` and the test-suite."""

from __future__ import annotations

import random
from itertools import product
from typing import Iterator

from .algebra import Element, UqAlgebra
from .hopf import ad_left, antipode, apply_left, apply_right, coproduct, counit
from .rootdata import CartanDatum
from .scalar import ONE, Scalar, q_binomial

__all__ = [
    "relation_checks",
    "hopf_checks",
    "module_law_checks",
    "graded_dim_checks",
    "kostant_count",
    "contents_up_to",
    "random_element",
    "run_selfcheck",
]


def relation_checks(alg: UqAlgebra) -> Iterator[tuple[str, bool]]:
    """Each defining relation, rewritten as lhs - rhs and normalized."""
    datum = alg.datum
    nodes = list(datum.nodes)
    tori = [datum.fundamental(i) for i in nodes] + [datum.simple_root_coords(i) for i in nodes]
    for mu in tori:
        K = alg.K(mu)
        for j in nodes:
            s = datum.pairing(mu, j)[1]
            yield (f"K({mu.coords}) E{j}", K * alg.E(j) - (alg.E(j) * K).scale(Scalar.q_power(s)) == 0)
            yield (f"K({mu.coords}) F{j}", K * alg.F(j) - (alg.F(j) * K).scale(Scalar.q_power(-s)) == 0)
    for i in nodes:
        di = datum.d[i - 1]
        for j in nodes:
            lhs = alg.E(i) * alg.F(j) - alg.F(j) * alg.E(i)
            if i == j:
                den = Scalar.q_power(di) - Scalar.q_power(-di)
                lhs = lhs - (alg.Ki(i) - alg.Ki(i, -1)).scale(den.inverse())
            yield (f"E{i} F{j}", lhs == 0)
    for i in nodes:
        di = datum.d[i - 1]
        for j in nodes:
            if i == j:
                continue
            n = 1 - datum.a(i, j)
            for X in (alg.E, alg.F):
                total = alg.zero()
                for r in range(n + 1):
                    c = q_binomial(n, r, di) * (-1) ** r
                    total = total + (X(i) ** (n - r) * X(j) * X(i) ** r).scale(c)
                yield (f"serre {X.__name__}{i},{X.__name__}{j}", total == 0)


def random_element(alg: UqAlgebra, rng: random.Random, max_degree: int = 3, terms: int = 2) -> Element:
    """A sum of a few random words in E_i, F_i, K_i^{+-1} with small coefficients."""
    nodes = list(alg.datum.nodes)
    gens = []
    for i in nodes:
        gens += [alg.E(i), alg.F(i), alg.Ki(i), alg.Ki(i, -1)]
    out = alg.zero()
    for _ in range(terms):
        word = alg.one()
        for _ in range(rng.randint(1, max_degree)):
            word = word * rng.choice(gens)
        c = Scalar.laurent({rng.randint(-2, 2): rng.choice([-2, -1, 1, 2])})
        out = out + word.scale(c)
    return out


def _m_s_id(a: Element) -> Element:
    alg = a.alg
    out = alg.zero()
    for (m1, m2), c in coproduct(a).terms.items():
        out = out + antipode(Element(alg, {m1: c})) * Element(alg, {m2: ONE})
    return out


def _m_id_s(a: Element) -> Element:
    alg = a.alg
    out = alg.zero()
    for (m1, m2), c in coproduct(a).terms.items():
        out = out + Element(alg, {m1: c}) * antipode(Element(alg, {m2: ONE}))
    return out


def _coassociative(a: Element) -> bool:
    alg = a.alg

    def delta(m):
        return coproduct(Element(alg, {m: ONE}))

    d = coproduct(a)
    return apply_left(d, delta) == apply_right(d, delta)


def hopf_checks(alg: UqAlgebra, samples: int = 50, seed: int = 0) -> Iterator[tuple[str, bool]]:
    rng = random.Random(seed)
    elems = []
    for i in alg.datum.nodes:
        elems += [(f"E{i}", alg.E(i)), (f"F{i}", alg.F(i)), (f"K{i}", alg.Ki(i)), (f"K{i}^-1", alg.Ki(i, -1))]
    elems += [(f"sample {k}", random_element(alg, rng)) for k in range(samples)]
    for name, a in elems:
        unit = alg.scalar(counit(a))
        yield (f"m(S x id)D {name}", _m_s_id(a) == unit)
        yield (f"m(id x S)D {name}", _m_id_s(a) == unit)
        yield (f"coassociativity {name}", _coassociative(a))


def module_law_checks(alg: UqAlgebra, triples: int = 100, seed: int = 0) -> Iterator[tuple[str, bool]]:
    rng = random.Random(seed)
    for k in range(triples):
        a = random_element(alg, rng, 2, 1)
        b = random_element(alg, rng, 2, 1)
        t = random_element(alg, rng, 2, 2)
        yield (f"triple {k}", ad_left(a * b, t) == ad_left(a, ad_left(b, t)))


def contents_up_to(rank: int, height: int) -> list[tuple[int, ...]]:
    return [c for c in product(range(height + 1), repeat=rank) if 0 < sum(c) <= height]


def kostant_count(datum: CartanDatum, nu: tuple[int, ...]) -> int:
    """Number of multisets of positive roots summing to nu, by direct recursion."""
    roots = sorted(datum.positive_roots)

    def rec(rest: tuple[int, ...], start: int) -> int:
        if not any(rest):
            return 1
        total = 0
        for k in range(start, len(roots)):
            b = roots[k]
            nxt = tuple(x - y for x, y in zip(rest, b))
            if min(nxt) >= 0:
                total += rec(nxt, k)
        return total

    return rec(tuple(nu), 0)


def graded_dim_checks(alg: UqAlgebra, height: int) -> Iterator[tuple[str, bool]]:
    for nu in contents_up_to(alg.rank, height):
        expected = kostant_count(alg.datum, nu)
        yield (f"dim U+_{nu}", alg.graded_dim(nu, "E") == expected)


SELFCHECK_HEIGHT = {"A2": 6, "B2": 6, "C2": 6, "A3": 5}


def run_selfcheck(datum: CartanDatum, seed: int = 0, samples: int = 10, triples: int = 20) -> dict:
    alg = UqAlgebra(datum)
    height = SELFCHECK_HEIGHT.get(datum.name, 4)
    suites = {
        "relations": relation_checks(alg),
        "hopf": hopf_checks(alg, samples, seed),
        "module_law": module_law_checks(alg, triples, seed),
        "graded_dims": graded_dim_checks(alg, height),
    }
    out = {}
    for name, it in suites.items():
        results = list(it)
        out[name] = {
            "checked": len(results),
            "failed": [label for label, ok in results if not ok],
        }
    out["all_green"] = all(not s["failed"] for s in out.values())
    return out

