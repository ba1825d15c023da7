import pytest

from coxlab.enumeration import bfs_by_length
from coxlab.errors import FamilyMismatch, WindowInvalid
from coxlab.groups import GroupSpec, from_window, identity
from coxlab.patterns import (
    P_PATTERNS,
    SignedPattern,
    avoids_P,
    classical_contains,
    contains_global_321,
    displacement_bound,
)

from oracles import brute_force_321

B2 = GroupSpec("b", 2)


def test_displacement_bound_examples():
    assert displacement_bound(from_window(GroupSpec("affc", 2), (1, 4))) == 2
    assert displacement_bound(identity(B2)) == 0
    assert displacement_bound(from_window(B2, (-1, -2))) == 4


def test_global_321_examples():
    hit = contains_global_321(from_window(B2, (-1, -2)))
    assert hit is not None
    assert (hit.wi, hit.wj, hit.wk) == (1, -1, -2)
    assert hit.to_json() == {"i": -1, "j": 1, "k": 2, "wi": 1, "wj": -1, "wk": -2}
    assert contains_global_321(from_window(B2, (-2, -1))) is None
    assert contains_global_321(from_window(GroupSpec("a", 3), (3, 2, 1))) is not None
    assert contains_global_321(identity(GroupSpec("affa", 3))) is None


def test_witness_is_a_real_occurrence():
    for spec, L in [(GroupSpec("affa", 3), 6), (GroupSpec("affc", 2), 6), (GroupSpec("b", 3), None)]:
        for w in bfs_by_length(spec, L):
            hit = contains_global_321(w)
            if hit is None:
                continue
            assert hit.i < hit.j < hit.k
            assert (w(hit.i), w(hit.j), w(hit.k)) == (hit.wi, hit.wj, hit.wk)
            assert hit.wi > hit.wj > hit.wk
            assert 1 <= hit.j <= spec.n


def test_classical_contains_examples():
    assert classical_contains(from_window(B2, (-1, -2)), (-1, -2))
    assert not classical_contains(from_window(B2, (2, -1)), (-1, -2))
    assert classical_contains(from_window(GroupSpec("b", 3), (3, -1, 2)), SignedPattern((2, -1)))
    assert classical_contains(from_window(GroupSpec("a", 4), (4, 1, 3, 2)), (3, 2, 1))
    assert avoids_P(from_window(B2, (2, 1)))
    assert not avoids_P(from_window(B2, (-1, -2)))
    with pytest.raises(FamilyMismatch):
        classical_contains(identity(GroupSpec("affa", 3)), (2, 1))
    with pytest.raises(WindowInvalid):
        SignedPattern((1, 1))


def test_pattern_set():
    assert [str(p) for p in P_PATTERNS] == ["1-2", "-1-2", "321", "32-1", "-321", "-32-1"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_global_vs_classical_type_B(n):
    for w in bfs_by_length(GroupSpec("b", n)):
        assert (contains_global_321(w) is not None) == (not avoids_P(w))


@pytest.mark.parametrize(
    "spec,L",
    [
        (GroupSpec("a", 5), None),
        (GroupSpec("b", 3), None),
        (GroupSpec("affa", 3), 7),
        (GroupSpec("affa", 4), 5),
        (GroupSpec("affc", 2), 7),
        (GroupSpec("affc", 3), 5),
    ],
    ids=str,
)
def test_bounded_search_matches_brute_force(spec, L):
    for w in bfs_by_length(spec, L):
        assert (contains_global_321(w) is not None) == brute_force_321(w)


@pytest.mark.parametrize("spec", [GroupSpec("affa", 2), GroupSpec("affc", 1)], ids=str)
def test_degenerate_groups_avoid_321(spec):
    for w in bfs_by_length(spec, 12):
        assert contains_global_321(w) is None
