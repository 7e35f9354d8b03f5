"""Serializers: canonical text, JSON and DOT."""

from __future__ import annotations

import json
from typing import Union

from .algebra import Element
from .cominuscule import CONVENTIONS, FamilyReport, summary_table
from .modules import CapExceeded, Closed, ModuleSpace, certify_isotype, closure_report, weight_spaces
from .poset import LatticeVerdict, PosetInterval, minimal_elements
from .rootdata import format_weight

__all__ = ["render", "to_json_obj", "RenderError", "FORMATS"]

FORMATS = ("text", "json", "dot")


class RenderError(ValueError):
    pass


def element_json(a: Element) -> dict:
    alg = a.alg
    return {
        "text": alg.format(a),
        "terms": [{"monomial": alg.format_monomial(m), "coeff": str(c)} for m, c in a.sorted_terms()],
    }


def module_json(M: ModuleSpace) -> dict:
    datum = M.alg.datum
    return {
        "levi": M.levi.nodes,
        "dim": M.dim,
        "weights": [{"weight": format_weight(w, datum), "dim": n} for w, n in weight_spaces(M).items()],
        "basis": [M.alg.format(b) for b in M.basis],
        "isotype": certify_isotype(M).to_json(datum) if M.dim else None,
    }


def interval_json(P: PosetInterval) -> dict:
    datum = P.top.alg.datum
    mins = {m.signature() for m in minimal_elements(P)}
    nodes = []
    for k, (m, cert) in enumerate(zip(P.nodes, P.certificates)):
        nodes.append({
            "id": k,
            "dim": m.dim,
            "isotype": cert.to_json(datum) if cert is not None else None,
            "minimal": m.signature() in mins,
        })
    return {
        "levi": P.top.levi.nodes,
        "top_dim": P.top.dim,
        "exactness": P.exactness,
        "seed": P.seed,
        "probes": P.probes,
        "nodes": nodes,
        "edges": [list(e) for e in P.edges],
    }


def lattice_json(L: LatticeVerdict) -> dict:
    return {
        "verdict": L.verdict,
        "failures": L.failures,
        "checked_pairs": L.checked_pairs,
        "probes": L.probes,
        "seed": L.seed,
        "scope": L.label,
    }


def to_json_obj(value) -> dict:
    if isinstance(value, Element):
        return element_json(value)
    if isinstance(value, ModuleSpace):
        return module_json(value)
    if isinstance(value, (Closed, CapExceeded)):
        raise RenderError("closure verdicts need a datum; use closure_report")
    if isinstance(value, PosetInterval):
        return interval_json(value)
    if isinstance(value, LatticeVerdict):
        return lattice_json(value)
    if isinstance(value, FamilyReport):
        return value.to_json()
    if isinstance(value, dict):
        return value
    raise RenderError(f"cannot render {type(value).__name__}")


def _dot(P: PosetInterval) -> str:
    datum = P.top.alg.datum
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=box];"]
    for k, (m, cert) in enumerate(zip(P.nodes, P.certificates)):
        label = f"dim {m.dim}"
        if cert is not None:
            iso = cert.to_json(datum)
            label += f"\\nV({iso['lambda']})" if iso["certified"] else "\\nreducible"
        lines.append(f'  n{k} [label="{label}"];')
    for i, j in P.edges:
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _text_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    out = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)) and v:
                out.append(f"{pad}{k}:")
                out.extend(_text_lines(v, indent + 1))
            else:
                out.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and v:
                sub = _text_lines(v, indent + 1)
                out.append(f"{pad}- {sub[0].strip()}")
                out.extend(sub[1:])
            else:
                out.append(f"{pad}- {_scalar_text(v)}")
    else:
        out.append(pad + _scalar_text(obj))
    return out


def _scalar_text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, dict)):
        return "[]" if isinstance(v, list) else "{}"
    return str(v)


def render(value: Union[Element, ModuleSpace, PosetInterval, FamilyReport, LatticeVerdict, dict],
           fmt: str = "text") -> str:
    if fmt not in FORMATS:
        raise RenderError(f"unknown format {fmt!r}")
    if fmt == "dot":
        if not isinstance(value, PosetInterval):
            raise RenderError("dot output is only available for poset intervals")
        return _dot(value)
    if fmt == "json":
        return json.dumps(to_json_obj(value), sort_keys=True, indent=2) + "\n"
    if isinstance(value, Element):
        return value.alg.format(value) + "\n"
    if isinstance(value, FamilyReport):
        return summary_table(value) + "\n"
    return "\n".join(_text_lines(to_json_obj(value))) + "\n"


def closure_json(verdict, datum, levi_nodes) -> dict:
    out = closure_report(verdict, datum)
    out["levi"] = levi_nodes
    if isinstance(verdict, Closed):
        out["basis"] = [verdict.module.alg.format(b) for b in verdict.module.basis]
    out["conventions"] = CONVENTIONS
    return out
