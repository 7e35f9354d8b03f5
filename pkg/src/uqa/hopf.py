"""Coproduct, counit, antipode and the left adjoint action.

    Delta(E_i) = E_i (x) 1 + K_i (x) E_i
    Delta(F_i) = F_i (x) K_i^{-1} + 1 (x) F_i
    Delta(K_mu) = K_mu (x) K_mu
    S(E_i) = -K_i^{-1} E_i,  S(F_i) = -F_i K_i,  S(K_mu) = K_{-mu}

ad(a)(b) = a_(1) b S(a_(2)).  The generator formulas in ``ad_E``, ``ad_F``
and ``ad_K`` are the fast route used by closure loops; ``ad_left`` is the
generic route.
"""

from __future__ import annotations

from .algebra import Element, Monomial, UqAlgebra, _add_to
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "TensorElement",
    "coproduct",
    "counit",
    "antipode",
    "ad_left",
    "ad_E",
    "ad_F",
    "ad_K",
    "tensor_multiply",
    "apply_left",
    "apply_right",
]


class TensorElement:
    """An element of U (x) U (or a higher tensor power): tuple of monomials -> Scalar."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: UqAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_to(out, k, c)
        return TensorElement(self.alg, out)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_to(out, k, -c)
        return TensorElement(self.alg, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        fm = self.alg.format_monomial
        parts = []
        for legs, c in sorted(self.terms.items(), key=lambda t: tuple(map(str, t[0]))):
            parts.append(f"({c})*" + " (x) ".join(fm(m) for m in legs))
        return " + ".join(parts) if parts else "0"


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    alg = x.alg
    out: dict = {}
    for legs1, c1 in x.terms.items():
        for legs2, c2 in y.terms.items():
            c12 = c1 * c2
            expansions = [alg.multiply_monomials(a, b) for a, b in zip(legs1, legs2)]
            partial = {(): c12}
            for exp in expansions:
                nxt: dict = {}
                for legs, c in partial.items():
                    for m, cm in exp.items():
                        _add_to(nxt, legs + (m,), c * cm)
                partial = nxt
            for legs, c in partial.items():
                _add_to(out, legs, c)
    return TensorElement(alg, out)


def _gen_coproduct(alg: UqAlgebra, kind: str, i) -> TensorElement:
    z = alg._zero_t
    one = Monomial((), z, ())
    if kind == "E":
        Ki = Monomial((), alg._alpha[i], ())
        Ei = Monomial((), z, (i,))
        return TensorElement(alg, {(Ei, one): ONE, (Ki, Ei): ONE})
    if kind == "F":
        Kinv = Monomial((), alg._neg_alpha[i], ())
        Fi = Monomial((i,), z, ())
        return TensorElement(alg, {(Fi, Kinv): ONE, (one, Fi): ONE})
    K = Monomial((), i, ())
    return TensorElement(alg, {(K, K): ONE})


def _monomial_coproduct(alg: UqAlgebra, m: Monomial) -> TensorElement:
    z = alg._zero_t
    one = Monomial((), z, ())
    t = TensorElement(alg, {(one, one): ONE})
    for i in m.f:
        t = tensor_multiply(t, _gen_coproduct(alg, "F", i))
    if any(m.torus):
        t = tensor_multiply(t, _gen_coproduct(alg, "K", m.torus))
    for i in m.e:
        t = tensor_multiply(t, _gen_coproduct(alg, "E", i))
    return t


def coproduct(a: Element) -> TensorElement:
    alg = a.alg
    out: dict = {}
    for m, c in a.terms.items():
        for legs, x in _monomial_coproduct(alg, m).terms.items():
            _add_to(out, legs, c * x)
    return TensorElement(alg, out)


def counit(a: Element) -> Scalar:
    total = ZERO
    for m, c in a.terms.items():
        if not m.f and not m.e:
            total = total + c
    return total


def _monomial_antipode(alg: UqAlgebra, m: Monomial) -> Element:
    # anti-homomorphism: reverse the factor order
    out = alg.one()
    for i in reversed(m.e):
        out = out * (-(alg.Ki(i, -1) * alg.E(i)))
    if any(m.torus):
        out = out * alg.K(tuple(-x for x in m.torus))
    for i in reversed(m.f):
        out = out * (-(alg.F(i) * alg.Ki(i)))
    return out


def antipode(a: Element) -> Element:
    alg = a.alg
    out = alg.zero()
    for m, c in a.terms.items():
        out = out + _monomial_antipode(alg, m).scale(c)
    return out


def apply_left(t: TensorElement, fn) -> TensorElement:
    """(fn (x) id) applied to a 2-tensor, where fn maps a Monomial to a TensorElement."""
    out: dict = {}
    for (m1, m2), c in t.terms.items():
        for legs, x in fn(m1).terms.items():
            _add_to(out, legs + (m2,), c * x)
    return TensorElement(t.alg, out)


def apply_right(t: TensorElement, fn) -> TensorElement:
    out: dict = {}
    for (m1, m2), c in t.terms.items():
        for legs, x in fn(m2).terms.items():
            _add_to(out, (m1,) + legs, c * x)
    return TensorElement(t.alg, out)


def ad_left(a: Element, b: Element) -> Element:
    """sum a_(1) b S(a_(2)), computed through the coproduct."""
    alg = a.alg
    out = alg.zero()
    for (m1, m2), c in coproduct(a).terms.items():
        left = Element(alg, {m1: c})
        out = out + left * b * _monomial_antipode(alg, m2)
    return out


def _conj_by_K(b: Element, mu: tuple[int, ...]) -> Element:
    """K_mu b K_{-mu}: each monomial of grade nu picks up q^{(mu, nu)}."""
    alg = b.alg
    datum = alg.datum
    out = {}
    for m, c in b.terms.items():
        s = datum.form_with_content(mu, alg.grade(m))
        out[m] = c * Scalar.q_power(s) if s else c
    return Element(alg, out)


def ad_E(i: int, b: Element) -> Element:
    """ad(E_i)(b) = E_i b - K_i b K_i^{-1} E_i."""
    alg = b.alg
    return alg.E(i) * b - _conj_by_K(b, alg._alpha[i]) * alg.E(i)


def ad_F(i: int, b: Element) -> Element:
    """ad(F_i)(b) = F_i b K_i - b F_i K_i."""
    alg = b.alg
    Fi = alg.F(i)
    Ki = alg.Ki(i)
    return (Fi * b - b * Fi) * Ki


def ad_K(mu, b: Element) -> Element:
    coords = mu.coords if hasattr(mu, "coords") else tuple(mu)
    return _conj_by_K(b, coords)
