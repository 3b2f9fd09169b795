from fractions import Fraction
from decimal import Decimal

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tukeydepth import (
    DegeneracyError,
    InputError,
    PointSet,
    RejectionLimitError,
    is_general_position,
    orientation,
    random_point_set,
    side_partition,
)
from tukeydepth.geometry import as_rational, canonical_direction
from tukeydepth.linalg import cell_representatives, det_int, dot, generalized_cross, line_key


def test_orientation_examples():
    assert orientation([(0, 0), (1, 0), (0, 1)]) == 1
    assert orientation([(0, 0), (1, 1), (2, 2)]) == 0
    assert orientation([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 1


def test_orientation_rejects_wrong_arity():
    with pytest.raises(InputError):
        orientation([(0, 0), (1, 0)])


def test_orientation_exact_on_tiny_offsets():
    eps = Fraction(1, 10**30)
    assert orientation([(0, 0), (1, 0), (2, eps)]) == 1
    assert orientation([(0, 0), (1, 0), (2, -eps)]) == -1


def test_side_partition_example():
    P = PointSet.from_coords([(0, 0), (2, 0), (1, 1), (1, -1)])
    part = side_partition(P, [0, 1])
    assert part.on == {0, 1}
    assert part.above == {2}
    assert part.below == {3}


def test_side_partition_matches_orient():
    P = random_point_set(8, 3, seed=4)
    part = side_partition(P, [0, 1, 2])
    for i in range(3, 8):
        s = P.orient([0, 1, 2, i])
        assert (i in part.above) == (s > 0)


def test_general_position():
    assert is_general_position(PointSet.from_coords([(0, 0), (1, 0), (0, 1), (1, 1)]))
    assert not is_general_position(PointSet.from_coords([(0, 0), (1, 1), (2, 2), (5, 0)]))


def test_rationals_parse_exactly():
    assert as_rational("1/3") == Fraction(1, 3)
    assert as_rational(Decimal("0.1")) == Fraction(1, 10)
    with pytest.raises(InputError):
        as_rational("1/0")
    with pytest.raises(InputError):
        as_rational(True)


def test_pointset_rejects_duplicates_and_bad_dims():
    with pytest.raises(InputError):
        PointSet.from_coords([(0, 0), (0, 0)])
    with pytest.raises(InputError):
        PointSet(2, ((0, 0), (1, 2, 3)))


def test_canonical_direction():
    assert canonical_direction(["1/2", "3/4"]) == (2, 3)
    with pytest.raises(InputError):
        canonical_direction([0, 0])


def test_random_point_set_is_seeded_and_general():
    a = random_point_set(9, 3, seed=11)
    assert a == random_point_set(9, 3, seed=11)
    assert a.general_position


def test_random_point_set_rejection_limit():
    with pytest.raises(RejectionLimitError):
        random_point_set(4, 2, seed=0, coord_bound=0)


@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3), min_size=2, max_size=2))
def test_generalized_cross_is_orthogonal(rows):
    n = generalized_cross(rows)
    for r in rows:
        assert dot(n, r) == 0
    assert any(n) == (det_int(rows + [list(n)]) != 0)


@settings(max_examples=40)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=5))
def test_cell_count_of_line_arrangement(normals):
    normals = [n for n in normals if any(n)]
    cells = cell_representatives(normals, 2)
    # each distinct line through the origin adds two sectors
    distinct = {line_key(n) for n in normals}
    assert len(cells) == (2 * len(distinct) if distinct else 1)
    for c in cells:
        assert all(dot(n, c) != 0 for n in normals)
