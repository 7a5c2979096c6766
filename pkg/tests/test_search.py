import itertools

import pytest

from honeycomb.config import (
    DotConfiguration,
    automorphism_group_order,
    bounding_region,
    canonicalize,
    honeycomb_radius,
    is_distinct_difference,
    is_hexagonal_permutation,
)
from honeycomb.hexgrid import Cell, lee_sphere, region_contains, triangular_board
from honeycomb.search import (
    BudgetExceeded,
    costas_to_honeycomb,
    count_costas,
    count_hex_permutations,
    enumerate_costas,
    enumerate_hex_permutations,
    growth_report,
    max_brooks,
    search_honeycomb,
    search_symmetric_honeycomb,
)

from oracles import brooks_brute, costas_brute, hexperm_brute

# -- Costas --


def test_costas_small_orders():
    assert list(enumerate_costas(1)) == [(0,)]
    assert list(enumerate_costas(2)) == [(0, 1), (1, 0)]
    assert list(enumerate_costas(3)) == [(0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_costas_matches_brute_force(n):
    got = list(enumerate_costas(n))
    assert got == costas_brute(n)
    assert len(set(got)) == len(got)
    assert count_costas(n).count == len(got)
    for p in got:
        assert sorted(p) == list(range(n))
        assert is_distinct_difference(DotConfiguration.from_permutation(p))


def test_costas_size_guard():
    with pytest.raises(BudgetExceeded):
        next(enumerate_costas(18))
    with pytest.raises(BudgetExceeded):
        count_costas(9, guard=False, node_budget=50)


@pytest.mark.parametrize("p, radius", [((0,), 0), ((1, 0, 2), 1), ((1, 2, 0), None)])
def test_costas_to_honeycomb(p, radius):
    a = costas_to_honeycomb(p)
    if radius is None:
        assert a is None
    else:
        assert a.radius == radius
        assert honeycomb_radius(a.base) == (a.radius, a.center)


def test_costas_to_honeycomb_rejects_non_costas():
    with pytest.raises(ValueError):
        costas_to_honeycomb((0, 1, 2))
    with pytest.raises(ValueError):
        costas_to_honeycomb((0, 0, 1))


# -- hexagonal permutations --


@pytest.mark.parametrize("num_dots, h", [(1, 1), (3, 2), (5, 6), (7, 28), (9, 244), (11, 2544)])
def test_hex_permutation_counts(num_dots, h):
    assert count_hex_permutations(num_dots).count == h
    assert count_hex_permutations(num_dots, theorem1_shortcut=False).count == h


@pytest.mark.parametrize("num_dots", [2, 4, 6, 8])
def test_even_counts_are_zero(num_dots):
    assert count_hex_permutations(num_dots).count == 0
    assert count_hex_permutations(num_dots, theorem1_shortcut=False).count == 0


@pytest.mark.parametrize("num_dots", range(1, 10))
def test_hex_permutations_match_brute_force(num_dots):
    expected = [DotConfiguration.from_permutation(p) for p in hexperm_brute(num_dots)]
    got = list(enumerate_hex_permutations(num_dots, theorem1_shortcut=False))
    assert got == expected
    assert count_hex_permutations(num_dots, theorem1_shortcut=False).count == len(expected)


def test_enumerated_hex_permutations_sit_in_lee_spheres():
    for cfg in enumerate_hex_permutations(11):
        assert is_hexagonal_permutation(cfg)
        r = (cfg.n - 1) // 2
        assert bounding_region(cfg).params[0] == r
        assert region_contains(lee_sphere(Cell(r, r), r), cfg)


def test_count_result_fields():
    res = count_hex_permutations(7)
    assert (res.num_dots, res.count) == (7, 28)
    assert res.nodes > 0 and res.elapsed >= 0


def test_hexperm_guard():
    with pytest.raises(BudgetExceeded):
        count_hex_permutations(21)
    with pytest.raises(BudgetExceeded):
        count_hex_permutations(13, guard=False, node_budget=1000)


# -- honeycomb searches --


@pytest.mark.parametrize("num_dots, expected", [(1, 1), (3, 1), (5, 0), (7, 2), (9, 2)])
def test_honeycomb_census(num_dots, expected):
    assert len(search_honeycomb(num_dots, up_to_symmetry=True)) == expected
    assert len(search_honeycomb(num_dots, up_to_symmetry=True, method="direct")) == expected


@pytest.mark.parametrize("num_dots", range(1, 10))
def test_direct_search_matches_costas_route(num_dots):
    a = search_honeycomb(num_dots, theorem1_shortcut=False)
    b = search_honeycomb(num_dots, method="direct", theorem1_shortcut=False)
    assert a == b
    if num_dots % 2 == 0:
        assert a == []


def test_raw_results_expand_canonical_classes():
    raw = search_honeycomb(7)
    classes = search_honeycomb(7, up_to_symmetry=True)
    assert {canonicalize(a.base) for a in raw} == {a.base for a in classes}
    sizes = sum(12 // automorphism_group_order(a.base) for a in classes)
    # a Costas array only sees the images whose dots form a permutation matrix, which is all of them
    assert sizes == len(raw)


def test_search_results_are_sorted_and_honeycomb():
    arrays = search_honeycomb(9)
    assert [a.base.key() for a in arrays] == sorted(a.base.key() for a in arrays)
    for a in arrays:
        assert honeycomb_radius(a.base) == (a.radius, a.center)


def test_unknown_method():
    with pytest.raises(ValueError):
        search_honeycomb(3, method="magic")


@pytest.mark.parametrize("r, expected", [(0, 1), (1, 1), (2, 0), (3, 1), (4, 2), (5, 0), (6, 0)])
def test_symmetric_search(r, expected):
    found = search_symmetric_honeycomb(r)
    assert len(found) == expected
    if 2 * r + 1 <= 9:
        full = {a.base for a in search_honeycomb(2 * r + 1, up_to_symmetry=True)}
        assert {a.base for a in found} <= full
    for a in found:
        assert automorphism_group_order(a.base) % 6 == 0


@pytest.mark.parametrize("workers", [2, 8])
def test_worker_count_does_not_change_results(workers):
    assert list(enumerate_costas(7, workers=workers)) == list(enumerate_costas(7))
    assert count_hex_permutations(11, workers=workers) .count == 2544
    assert list(enumerate_hex_permutations(9, workers=workers)) == list(enumerate_hex_permutations(9))
    assert search_honeycomb(9, workers=workers) == search_honeycomb(9)
    assert search_symmetric_honeycomb(4, workers=workers) == search_symmetric_honeycomb(4)


# -- brooks --


@pytest.mark.parametrize("w, k", [(1, 1), (3, 2), (10, 7)])
def test_max_brooks_examples(w, k):
    assert max_brooks(w).k == k


@pytest.mark.parametrize("w", range(1, 8))
def test_max_brooks_matches_exhaustive_search(w):
    assert max_brooks(w).k == brooks_brute(w)


@pytest.mark.parametrize("w", range(1, 13))
def test_brooks_certificate(w):
    res = max_brooks(w)
    board = triangular_board(w)
    assert len(res.placement) == res.k
    assert all(x in board for x in res.placement)
    for a, b in itertools.combinations(res.placement, 2):
        assert a.row != b.row and a.col != b.col and a.diag != b.diag


# -- growth --


def test_growth_report():
    rows = growth_report(9)
    assert [(r.num_dots, r.h) for r in rows] == [(1, 1), (3, 2), (5, 6), (7, 28), (9, 244)]
    assert rows[0].ratio == 0.0
    import math

    assert rows[-1].ratio == pytest.approx(math.log(244) / (5 * math.log(5)))


def test_growth_report_budget():
    assert len(growth_report(1)) == 1
    with pytest.raises(BudgetExceeded):
        growth_report(21)
