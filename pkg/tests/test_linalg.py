import pytest
from hypothesis import given, strategies as st

from zhualg.linalg import RowSpan, kernel_basis
from zhualg.rational import Q


def test_rank_and_membership():
    span = RowSpan(["x", "y", "z"])
    assert span.add({"x": 1, "y": 1}, tag="g0")
    assert span.add({"y": 1, "z": 1}, tag="g1")
    # dependent vector does not enlarge the span
    assert not span.add({"x": 1, "z": -1}, tag="g2")
    assert span.rank == 2
    assert span.contains({"x": 2, "y": 2})
    assert not span.contains({"z": 1})


def test_certificates_reconstruct_the_vector():
    span = RowSpan(["a", "b", "c"])
    gens = {"g0": {"a": Q(2), "b": Q(1)}, "g1": {"b": Q(3), "c": Q(-1)}}
    for tag, g in gens.items():
        span.add(g, tag=tag)
    target = {"a": Q(2), "b": Q(4), "c": Q(-1)}
    remainder, combo = span.reduce(target)
    assert not remainder
    rebuilt = {}
    for tag, c in combo.items():
        for col, v in gens[tag].items():
            rebuilt[col] = rebuilt.get(col, Q(0)) + c * v
    assert {k: v for k, v in rebuilt.items() if v != 0} == target


def test_support_outside_window_raises():
    span = RowSpan(["a"])
    with pytest.raises(KeyError):
        span.add({"b": 1})


def test_duplicate_columns_rejected():
    with pytest.raises(ValueError):
        RowSpan(["a", "a"])


def test_pivot_columns_follow_column_order():
    span = RowSpan(["p", "q"])
    span.add({"q": 1})
    span.add({"p": 1, "q": 5})
    assert set(span.pivot_columns()) == {"p", "q"}


def test_kernel_of_known_matrix():
    # x + y + z = 0, y - z = 0  ->  kernel spanned by (-2, 1, 1)
    rows = [{0: Q(1), 1: Q(1), 2: Q(1)}, {1: Q(1), 2: Q(-1)}]
    kern = kernel_basis(rows, 3)
    assert len(kern) == 1
    v = kern[0]
    scale = v[2]
    assert {c: val / scale for c, val in v.items()} == \
        {0: Q(-2), 1: Q(1), 2: Q(1)}


def test_kernel_trivial_and_full():
    assert kernel_basis([{0: Q(1)}, {1: Q(1)}], 2) == []
    full = kernel_basis([], 2)
    assert len(full) == 2


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4),
                min_size=0, max_size=6))
def test_kernel_vectors_annihilate_rows(mat):
    rows = [{j: Q(v) for j, v in enumerate(r) if v} for r in mat]
    rows = [r for r in rows if r]
    kern = kernel_basis(rows, 4)
    span = RowSpan(range(4), track_certificates=False)
    for r in rows:
        span.add(r)
    assert span.rank + len(kern) == 4
    for v in kern:
        for r in rows:
            acc = sum((r.get(j, Q(0)) * c for j, c in v.items()), Q(0))
            assert acc == 0
