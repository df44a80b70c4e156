from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from efl import (
    EflInstance,
    LabelSystem,
    build_hn,
    clique_degree,
    common_vertex_labels,
    derived_sets,
    parse_instance,
    random_system,
    realize,
    validate,
)
from efl.instance import ParseError, UnknownVertexError

from conftest import brute_memberships


def test_validate_hn3_is_clean(hn3):
    assert validate(hn3) == []


def test_validate_two_shared_vertices():
    out = validate(EflInstance(2, [{"a", "b"}, {"a", "b"}]))
    assert len(out) == 1
    assert out[0].rule == "shared-vertices"
    assert out[0].cliques == (1, 2)
    assert out[0].vertices == ("a", "b")


def test_validate_short_clique():
    out = validate(EflInstance(3, [{"a", "b"}, {"c", "d", "e"}, {"f", "g", "h"}]))
    assert [(v.rule, v.cliques) for v in out] == [("clique-size", (1,))]


def test_validate_reports_wrong_clique_count():
    out = validate(EflInstance(3, [{"a", "b", "c"}]))
    assert [v.rule for v in out] == ["clique-count"]


def test_clique_degree(hn3):
    assert clique_degree(hn3, "b_1_2") == 2
    assert clique_degree(hn3, "a_1_1") == 1
    with pytest.raises(UnknownVertexError):
        clique_degree(hn3, "zzz")


def test_common_vertex_labels_hn3(hn3):
    assert common_vertex_labels(hn3) == {
        "b_1_2": (1, 2), "b_1_3": (1, 3), "b_2_3": (2, 3)}


def test_common_vertex_labels_hn2_against_scan():
    inst = build_hn(2)
    want = {v: x for v, x in brute_memberships(list(inst.cliques)).items() if len(x) >= 2}
    assert want == {"b_1_2": (1, 2)}
    assert common_vertex_labels(inst) == want


def test_label_of_vertex_in_three_cliques():
    inst = realize(LabelSystem(4, [(1, 3, 4)]))
    assert common_vertex_labels(inst) == {"u_1_3_4": (1, 3, 4)}


def test_derived_sets_hn():
    for n in (1, 2, 5, 9):
        ds = derived_sets(build_hn(n))
        assert ds.missing == frozenset()
        assert len(ds.by_degree.get(2, ())) == n * (n - 1) // 2
        assert len(ds.by_degree[1]) == n


def test_derived_sets_disjoint(disjoint3):
    ds = derived_sets(disjoint3)
    assert ds.missing == {(1, 2), (1, 3), (2, 3)}
    assert len(ds.by_degree[1]) == 9
    assert dict(ds.labels_by_size) == {}


def test_derived_sets_degree_three_vertex():
    inst = realize(LabelSystem(4, [(1, 2, 3)]))
    members = brute_memberships(list(inst.cliques))
    covered = {p for x in members.values() for p in combinations(x, 2)}
    want_missing = {p for p in combinations(range(1, 5), 2) if p not in covered}
    assert want_missing == {(1, 4), (2, 4), (3, 4)}
    ds = derived_sets(inst)
    assert ds.missing == want_missing
    assert dict(ds.labels_by_size) == {3: frozenset({(1, 2, 3)})}


systems = st.builds(
    random_system,
    n=st.integers(1, 9),
    p=st.floats(0, 1),
    q=st.floats(0, 1),
    seed=st.integers(0, 2**63 - 1),
)


@given(systems)
def test_instance_invariants(system):
    inst = realize(system)
    assert validate(inst) == []
    n = inst.n
    members = inst.memberships()
    assert sum(len(x) for x in members.values()) == n * n
    labels = common_vertex_labels(inst)
    assert len(set(labels.values())) == len(labels)
    ds = derived_sets(inst)
    covered = [p for x in labels.values() for p in combinations(x, 2)]
    assert len(covered) == len(set(covered))
    assert set(covered).isdisjoint(ds.missing)
    assert set(covered) | ds.missing == set(combinations(range(1, n + 1), 2))
    assert sum(d * len(vs) for d, vs in ds.by_degree.items()) == n * n


def test_text_round_trip(hn3):
    text = hn3.to_text()
    assert text.splitlines()[:2] == ["EFL 1", "n 3"]
    assert text.splitlines()[2] == "clique 1: a_1_1 b_1_2 b_1_3"
    assert parse_instance(text) == hn3
    assert parse_instance(text).to_text() == text


@pytest.mark.parametrize("text, line", [
    ("EFL 2\nn 1\nclique 1: a\n", 1),
    ("EFL 1\nn 2\nclique 1: a b\nclique 1: c d\n", 4),
    ("EFL 1\nn 2\nclique 1: a b\nclique 2: c\n", 4),
    ("EFL 1\nn 1\nclique 1: a\nextra\n", 4),
    ("EFL 1\nn 2\nclique 1: a  b\nclique 2: c d\n", 3),
    ("EFL 1\nn x\n", 2),
])
def test_parser_rejects(text, line):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.line == line
