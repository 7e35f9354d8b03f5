"""The family K_{-2n w_x} for a maximal Levi S = {1..r} minus {x}.

Two computations are run for every n and reported side by side:

* literal: the closure M(K_{-2n w_x}) under the Levi subalgebra;
* via ad(F_x): the element x_1 = ad(F_x)(K_{-2n w_x}), its highest weight
  check, and the closure M(x_1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .algebra import Element, UqAlgebra
from .hopf import ad_E, ad_F
from .modules import Closed, certify_isotype, cyclic_closure
from .rootdata import CartanDatum, LeviSpec, cominuscule_nodes, format_weight, s_dominant
from .scalar import Scalar

__all__ = ["krahmer_element", "krahmer_closed_form", "FamilyReport", "verify_fiber_family", "CONVENTIONS"]

CONVENTIONS = {
    "normal_order": "F-word K_mu E-word",
    "commutation": "K_mu E_j = q^(mu,a_j) E_j K_mu; K_mu F_j = q^-(mu,a_j) F_j K_mu",
    "ef_relation": "E_i F_j - F_j E_i = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)",
    "coproduct": "D(E_i) = E_i(x)1 + K_i(x)E_i; D(F_i) = F_i(x)K_i^-1 + 1(x)F_i; D(K_mu) = K_mu(x)K_mu",
    "antipode": "S(E_i) = -K_i^-1 E_i; S(F_i) = -F_i K_i; S(K_mu) = K_-mu",
    "adjoint": "ad(a)(b) = a_(1) b S(a_(2))",
    "cartan": "a_ij = <a_j, a_i^vee>, (a_i, a_j) = d_i a_ij",
}


def _family_torus(datum: CartanDatum, x: int, n: int):
    return datum.fundamental(x) * (-2 * n)


def krahmer_element(alg: UqAlgebra, n: int, levi: LeviSpec) -> Element:
    """ad(F_x)(K_{-2n w_x}); zero for n = 0."""
    if levi.x is None:
        raise ValueError("krahmer_element needs a Levi given as the complement of a node x")
    return ad_F(levi.x, alg.K(_family_torus(alg.datum, levi.x, n)))


def krahmer_closed_form(alg: UqAlgebra, n: int, x: int) -> Element:
    """(q^{-2n d_x} - 1) K_mu F_x K_{alpha_x}, multiplied out independently of ad."""
    dx = alg.datum.d[x - 1]
    c = Scalar.q_power(-2 * n * dx) - 1
    return (alg.K(_family_torus(alg.datum, x, n)) * alg.F(x) * alg.Ki(x)).scale(c)


@dataclass
class FamilyReport:
    datum: CartanDatum
    x: int
    S: list
    entries: list = field(default_factory=list)
    distinctness: list = field(default_factory=list)
    distinct_ns: list = field(default_factory=list)
    flags: list = field(default_factory=list)

    @property
    def pairwise_distinct(self) -> bool:
        n = len(self.distinctness)
        return all(not self.distinctness[i][j] for i in range(n) for j in range(n) if i != j)

    def to_json(self) -> dict:
        return {
            "type": self.datum.name,
            "x": self.x,
            "S": self.S,
            "conventions": CONVENTIONS,
            "entries": self.entries,
            "distinctness": {"n": self.distinct_ns, "equal": self.distinctness,
                             "pairwise_distinct": self.pairwise_distinct},
            "flags": self.flags,
        }


def verify_fiber_family(datum: CartanDatum, x: int, n_range: Iterable[int],
                        cap: Optional[int] = None, alg: Optional[UqAlgebra] = None) -> FamilyReport:
    alg = alg or UqAlgebra(datum)
    levi = LeviSpec.complement(datum, x)
    S = levi.nodes
    report = FamilyReport(datum, x, S)
    if x not in cominuscule_nodes(datum):
        report.flags.append(f"node {x} is not cominuscule in {datum.name}; results are cap-bounded evidence only")
    target = -datum.simple_root_coords(x)
    target_text = format_weight(target, datum)
    if not s_dominant(target, datum.nodes):
        report.flags.append(
            f"lambda = {target_text} is dominant on S but not dominant for {datum.name}")
    modules = []
    for n in n_range:
        mu = _family_torus(datum, x, n)
        K = alg.K(mu)
        entry: dict = {"n": n, "generator": alg.format(K)}
        literal = cyclic_closure(K, levi, cap)
        if isinstance(literal, Closed):
            cert = certify_isotype(literal.module)
            entry["literal_module"] = {"status": "Closed", "dim": literal.dim,
                                       "isotype": cert.to_json(datum)}
            lit_lambda = entry["literal_module"]["isotype"]["lambda"]
            if lit_lambda != target_text:
                report.flags.append(
                    f"n={n}: M({alg.format(K)}) has dim {literal.dim} and isotype "
                    f"V({lit_lambda}), not V({target_text}) as the family statement reads")
        else:
            entry["literal_module"] = {"status": "CapExceeded", "dim": literal.dim, "isotype": None}
            report.flags.append(f"n={n}: closure of {alg.format(K)} exceeded cap {literal.cap}")
        x1 = krahmer_element(alg, n, levi)
        entry["element"] = alg.format(x1)
        entry["closed_form_matches"] = x1 == krahmer_closed_form(alg, n, x)
        if x1.is_zero():
            entry.update(degenerate=True, is_hwv=False, hw_weight=None, krahmer_module=None)
            report.flags.append(f"n={n}: ad(F{x})(K_0) = 0, degenerate entry")
            report.entries.append(entry)
            continue
        wt = alg.q_weight(x1)
        entry["degenerate"] = False
        entry["hw_weight"] = format_weight(wt, datum) if wt is not None else None
        entry["is_hwv"] = wt is not None and all(ad_E(j, x1).is_zero() for j in S)
        if isinstance(literal, Closed):
            inside = literal.module.contains(x1)
            entry["x1_in_literal_module"] = inside
            if not inside:
                report.flags.append(
                    f"n={n}: x_1 = ad(F{x})(K_mu) does not lie in M(K_mu); F{x} is outside the Levi subalgebra")
        kr = cyclic_closure(x1, levi, cap)
        if isinstance(kr, Closed):
            cert = certify_isotype(kr.module)
            entry["krahmer_module"] = {"status": "Closed", "dim": kr.dim, "isotype": cert.to_json(datum)}
            modules.append((n, kr.module))
        else:
            entry["krahmer_module"] = {"status": "CapExceeded", "dim": kr.dim, "isotype": None}
            report.flags.append(f"n={n}: closure of x_1 exceeded cap {kr.cap}")
        report.entries.append(entry)
    report.distinct_ns = [n for n, _ in modules]
    report.distinctness = [[a == b for _, b in modules] for _, a in modules]
    return report


def summary_table(report: FamilyReport) -> str:
    lines = ["n  literal_dim  krahmer_dim  certified_lambda  distinct_from_previous"]
    prev = None
    mods = dict(zip(report.distinct_ns, range(len(report.distinct_ns))))
    for e in report.entries:
        n = e["n"]
        lit = e["literal_module"]["dim"]
        km = e.get("krahmer_module")
        kdim = km["dim"] if km else "-"
        lam = "-"
        if km and km["isotype"] and km["isotype"]["certified"]:
            lam = km["isotype"]["lambda"]
        distinct = "-"
        if n in mods and prev is not None:
            distinct = "yes" if not report.distinctness[mods[n]][mods[prev]] else "no"
        if n in mods:
            prev = n
        lines.append(f"{n:<3}{lit!s:<13}{kdim!s:<13}{lam:<18}{distinct}")
    if report.flags:
        lines.append("")
        lines.append("flags:")
        lines.extend(f"  - {f}" for f in report.flags)
    return "\n".join(lines)
