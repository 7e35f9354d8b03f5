import pytest

from uqa.hopf import ad_E, ad_F
from uqa.modules import ModuleSpace, certify_isotype, closure_or_raise
from uqa.poset import (
    decompose_by_hwv,
    decompose_with_trace,
    hasse_edges,
    interval,
    lattice_probe,
    leq,
    minimal_elements,
)
from uqa.scalar import Q


def x1(alg, n, x=2):
    d = alg.datum.d[x - 1]
    return (alg.K(alg.datum.fundamental(x) * (-2 * n)) * alg.F(x) * alg.Ki(x)).scale(Q ** (-2 * n * d) - 1)


def two_copy(alg, m, n):
    """Highest vector of one copy plus the lower vector of another: generates both."""
    return x1(alg, m) + ad_F(1, x1(alg, n))


def certified_irreducible(P):
    return {P.nodes[k].signature() for k, c in enumerate(P.certificates) if c is not None and c.certified}


def test_chain(A2, levi_A2_1):
    P = interval(x1(A2, 1), levi_A2_1)
    assert P.exactness == "Exact"
    assert [m.dim for m in P.nodes] == [0, 2]
    assert P.edges == [(0, 1)]


def test_diamond(A2, levi_A2_1):
    P = interval(A2.E(2) + x1(A2, 1), levi_A2_1)
    assert P.exactness == "Exact"
    assert [m.dim for m in P.nodes] == [0, 2, 2, 4]
    assert len(P.edges) == 4
    mins = minimal_elements(P)
    assert {m.signature() for m in mins} == certified_irreducible(P)
    assert len(mins) == 2
    assert lattice_probe(P.nodes, levi_A2_1).verdict == "Lattice"


def test_two_copies(A2, levi_A2_1):
    P = interval(two_copy(A2, 1, 2), levi_A2_1, probes=6, seed=1)
    assert P.exactness == "ProbeLowerBound"
    assert P.top.dim == 4
    mins = minimal_elements(P)
    assert {m.signature() for m in mins} == certified_irreducible(P)
    # both summands and at least one diagonal copy show up
    assert len(mins) >= 3
    assert all(m.dim == 2 for m in mins)


def test_leq(A2, levi_A2_1):
    v = A2.E(2) + x1(A2, 1)
    assert leq(x1(A2, 1), v, levi_A2_1)
    assert leq(A2.zero(), v, levi_A2_1)
    assert not leq(x1(A2, 2), v, levi_A2_1)
    assert leq(v, v, levi_A2_1)


def test_hasse_edges_are_transitively_reduced(A2, levi_A2_1):
    P = interval(A2.E(2) + x1(A2, 1) + 1, levi_A2_1)
    assert len(P.nodes) == 8
    # Boolean 3-cube: 12 covering relations
    assert len(hasse_edges(P.nodes)) == 12


@pytest.mark.parametrize("extra", [0, 1])
def test_decomposition(A2, levi_A2_1, extra):
    v = A2.E(2) + x1(A2, 1) + A2.scalar(extra)
    M = closure_or_raise(v, levi_A2_1)
    ws, residuals = decompose_with_trace(v, levi_A2_1)
    assert residuals[0] == M.dim and residuals[-1] == 0
    assert all(a > b for a, b in zip(residuals, residuals[1:]))
    total = ModuleSpace.zero(levi_A2_1, A2)
    for w in ws:
        assert all(ad_E(j, w) == 0 for j in levi_A2_1.nodes)
        total = total + closure_or_raise(w, levi_A2_1)
    assert total == M
    assert len(decompose_by_hwv(v, levi_A2_1)) == len(ws)


def test_diagonal_sum_is_one_copy(A2, levi_A2_1):
    # x1(1) and x1(2) have the same annihilator, so their sum spans a diagonal copy
    assert closure_or_raise(x1(A2, 1) + x1(A2, 2), levi_A2_1).dim == 2


def test_decomposition_with_multiplicity(A2, levi_A2_1):
    v = two_copy(A2, 1, 2) + A2.E(2)
    ws, residuals = decompose_with_trace(v, levi_A2_1)
    assert residuals == [6, 4, 2, 0]
    assert all(certify_isotype(closure_or_raise(w, levi_A2_1)).certified for w in ws)


def test_three_copy_join_failure(A2, levi_A2_1):
    a = closure_or_raise(two_copy(A2, 1, 2), levi_A2_1)
    b = closure_or_raise(two_copy(A2, 2, 3), levi_A2_1)
    assert a.dim == 4 and b.dim == 4
    verdict = lattice_probe([a, b], levi_A2_1, probes=4, seed=0)
    assert verdict.verdict == "Counterexample"
    join = [f for f in verdict.failures if f["bound"] == "join"]
    assert join and join[0]["certified"]
    assert "at most 2" in join[0]["reason"]
