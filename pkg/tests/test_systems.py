from itertools import chain, combinations

import pytest
from hypothesis import given, settings, strategies as st

from efl import (
    LabelSystem,
    build_hn,
    canonical_signature,
    derived_sets,
    enumerate_systems,
    random_system,
    realize,
    system_of,
    validate,
)
from efl.systems import InvalidLabelSystem, parse_system

from conftest import brute_memberships


def test_build_hn_small():
    h1 = build_hn(1)
    assert h1.cliques == (frozenset({"a_1_1"}),)
    h3 = build_hn(3)
    degrees = [len(x) for x in brute_memberships(list(h3.cliques)).values()]
    assert len(degrees) == 6
    assert sorted(degrees) == [1, 1, 1, 2, 2, 2]
    assert len(build_hn(5).vertices) == 15
    with pytest.raises(ValueError):
        build_hn(0)


@pytest.mark.parametrize("n", range(1, 31))
def test_build_hn_structure(n):
    inst = build_hn(n)
    degrees = [len(x) for x in inst.memberships().values()]
    assert len(degrees) == n * (n + 1) // 2
    assert degrees.count(1) == n
    assert degrees.count(2) == n * (n - 1) // 2
    assert derived_sets(inst).missing == frozenset()
    assert validate(inst) == []
    for a, b in combinations(inst.cliques, 2):
        assert len(a & b) == 1


def test_realize_all_pairs_matches_hn():
    for n in (2, 3, 6):
        system = LabelSystem(n, combinations(range(1, n + 1), 2))
        assert canonical_signature(realize(system)) == canonical_signature(build_hn(n))


def test_realize_empty():
    inst = realize(LabelSystem(3))
    assert len(inst.vertices) == 9
    assert all(len(a & b) == 0 for a, b in combinations(inst.cliques, 2))


def test_realize_degree_three():
    inst = realize(LabelSystem(4, [(1, 2, 3)]))
    members = brute_memberships(list(inst.cliques))
    assert members["u_1_2_3"] == (1, 2, 3)
    private = [sum(1 for v, x in members.items() if x == (i,)) for i in range(1, 5)]
    assert private == [3, 3, 3, 4]
    assert sorted(inst.cliques[3]) == ["p_4_1", "p_4_2", "p_4_3", "p_4_4"]


def test_realize_rejects():
    with pytest.raises(InvalidLabelSystem) as exc:
        realize(LabelSystem(4, [(1, 2, 3), (2, 3, 4)]))
    assert "(1, 2, 3) and (2, 3, 4)" in str(exc.value)
    with pytest.raises(InvalidLabelSystem):
        realize(LabelSystem(3, [(1, 5)]))


def test_system_of():
    assert system_of(build_hn(3)).labels == ((1, 2), (1, 3), (2, 3))
    assert system_of(realize(LabelSystem(4))).labels == ()


def test_random_system_parameters():
    for seed in range(20):
        assert random_system(6, 0.0, 0.7, seed).labels == ()
        assert random_system(6, 1.0, 0.0, seed) == LabelSystem(6, combinations(range(1, 7), 2))
    assert random_system(5, 0.5, 0.3, 42) == random_system(5, 0.5, 0.3, 42)


def test_random_system_merges_happen():
    sizes = {len(x) for s in range(50) for x in random_system(7, 0.6, 0.5, s).labels}
    assert max(sizes) >= 3


@given(st.integers(1, 10), st.floats(0, 1), st.floats(0, 1), st.integers(0, 2**64 - 1))
def test_random_system_valid_and_round_trips(n, p, q, seed):
    system = random_system(n, p, q, seed)
    assert system.problems() == []
    inst = realize(system)
    assert validate(inst) == []
    assert system_of(inst) == system
    assert canonical_signature(realize(system_of(inst))) == canonical_signature(inst)


def brute_systems(n):
    """All subsets of candidate labels passing the invariant checker."""
    cands = [x for k in range(2, n + 1) for x in combinations(range(1, n + 1), k)]
    subsets = chain.from_iterable(combinations(cands, r) for r in range(len(cands) + 1))
    return {LabelSystem(n, s) for s in subsets if not LabelSystem(n, s).problems()}


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 9), (4, 97)])
def test_enumerate_matches_brute_force(n, count):
    got = list(enumerate_systems(n))
    assert len(got) == count
    assert set(got) == brute_systems(n)
    assert [list(s.labels) for s in got] == sorted(list(s.labels) for s in got)
    assert len({canonical_signature(realize(s)) for s in got}) == count


def test_enumerate_small_values():
    assert [s.labels for s in enumerate_systems(2)] == [(), ((1, 2),)]
    assert ((1, 2, 3),) in [s.labels for s in enumerate_systems(3)]


def test_enumerate_cap():
    with pytest.raises(ValueError, match="cap 4"):
        next(enumerate_systems(5))
    assert sum(1 for _ in enumerate_systems(5, cap=5)) > 97


def test_system_text_round_trip():
    system = LabelSystem(4, [(1, 2, 3), (1, 4)])
    assert system.to_text() == "SYS 4\nlabel: 1 2 3\nlabel: 1 4\n"
    assert parse_system(system.to_text()) == system
