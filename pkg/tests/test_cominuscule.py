from uqa.cominuscule import krahmer_closed_form, krahmer_element, summary_table, verify_fiber_family
from uqa.rootdata import LeviSpec, build_cartan
from uqa.scalar import Q


def test_element_closed_form(A2, B2):
    L = LeviSpec.complement(A2.datum, 2)
    for n in range(1, 4):
        assert krahmer_element(A2, n, L) == krahmer_closed_form(A2, n, 2)
    # normal form (1 - q^{2n}) F2 K(-2n w2 + a2), derived by commuting K past F2
    x = krahmer_element(A2, 1, L)
    mu = A2.datum.fundamental(2) * -2 + A2.datum.simple_root_coords(2)
    assert x == (A2.F(2) * A2.K(mu)).scale(1 - Q ** 2)
    LB = LeviSpec.complement(B2.datum, 1)
    assert krahmer_element(B2, 2, LB) == krahmer_closed_form(B2, 2, 1)
    assert krahmer_element(A2, 0, L) == 0


def test_a2_family():
    rep = verify_fiber_family(build_cartan("A", 2), 2, range(0, 6))
    assert rep.S == [1]
    e0 = rep.entries[0]
    assert e0["degenerate"] and e0["element"] == "0"
    for e in rep.entries[1:]:
        assert e["is_hwv"] and e["hw_weight"] == "-a2"
        assert e["krahmer_module"]["dim"] == 2
        assert e["krahmer_module"]["isotype"] == {"lambda": "-a2", "dim": 2, "certified": True}
        assert e["literal_module"]["dim"] == 1
        assert e["literal_module"]["isotype"]["lambda"] == "0"
        assert e["x1_in_literal_module"] is False
        assert e["closed_form_matches"]
    assert rep.distinct_ns == [1, 2, 3, 4, 5]
    assert rep.pairwise_distinct
    flags = " | ".join(rep.flags)
    assert "degenerate" in flags
    assert "not V(-a2)" in flags
    assert "not dominant for A2" in flags
    assert "not cominuscule" not in flags


def test_a3_family():
    rep = verify_fiber_family(build_cartan("A", 3), 3, [1, 2, 3])
    assert [e["krahmer_module"]["dim"] for e in rep.entries] == [3, 3, 3]
    assert all(e["krahmer_module"]["isotype"]["lambda"] == "-a3" for e in rep.entries)
    assert rep.pairwise_distinct


def test_non_cominuscule_warning():
    rep = verify_fiber_family(build_cartan("G", 2), 1, [1], cap=60)
    assert any("not cominuscule" in f for f in rep.flags)


def test_b2_long_node():
    rep = verify_fiber_family(build_cartan("B", 2), 1, [1, 2])
    assert [e["krahmer_module"]["dim"] for e in rep.entries] == [3, 3]
    assert rep.pairwise_distinct


def test_summary_table_and_json():
    rep = verify_fiber_family(build_cartan("A", 2), 2, [1, 2])
    table = summary_table(rep)
    lines = table.splitlines()
    assert lines[0].split()[0] == "n"
    assert lines[1].split()[:4] == ["1", "1", "2", "-a2"]
    assert lines[2].split()[-1] == "yes"
    data = rep.to_json()
    assert set(data) >= {"entries", "flags", "distinctness", "conventions"}
