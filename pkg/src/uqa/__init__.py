"""Exact computation of cyclic adjoint modules in U_q(g) over Q(q)."""

from .algebra import Element, UqAlgebra
from .cominuscule import FamilyReport, krahmer_element, verify_fiber_family
from .hopf import ad_E, ad_F, ad_K, ad_left, antipode, coproduct, counit
from .modules import (
    CapExceeded,
    Closed,
    ModuleSpace,
    certify_isotype,
    cyclic_closure,
    highest_weight_vectors,
    is_locally_finite,
)
from .parser import ParseError, parse_element, parse_scalar
from .poset import decompose_by_hwv, interval, lattice_probe, leq, minimal_elements
from .render import render
from .rootdata import CartanDatum, LeviSpec, Weight, build_cartan, parse_weight
from .scalar import Scalar

__version__ = "0.1.0"

__all__ = [
    "Element", "UqAlgebra", "FamilyReport", "krahmer_element", "verify_fiber_family",
    "ad_E", "ad_F", "ad_K", "ad_left", "antipode", "coproduct", "counit",
    "CapExceeded", "Closed", "ModuleSpace", "certify_isotype", "cyclic_closure",
    "highest_weight_vectors", "is_locally_finite", "ParseError", "parse_element", "parse_scalar",
    "decompose_by_hwv", "interval", "lattice_probe", "leq", "minimal_elements", "render",
    "CartanDatum", "LeviSpec", "Weight", "build_cartan", "parse_weight", "Scalar",
]
