import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from honeycomb.config import (
    DotConfiguration,
    HoneycombArray,
    as_honeycomb,
    automorphism_group_order,
    bounding_region,
    canonicalize,
    hexagonal_permutation_index,
    honeycomb_radius,
    is_distinct_difference,
    is_hexagonal_permutation,
    orbit,
    validate_permutation,
)
from honeycomb.hexgrid import SYMMETRIES, Cell, apply_symmetry, lee_sphere, region_contains, staircase

from oracles import differences_distinct, lines_consecutive

THREE = DotConfiguration([(0, 1), (1, 0), (2, 2)])

small_configs = st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=7).map(
    DotConfiguration
)


def test_translation_normal_form():
    cfg = DotConfiguration([(5, 7), (6, 9)])
    assert cfg.dots == (Cell(0, 0), Cell(1, 2))
    assert cfg == DotConfiguration([(0, 0), (1, 2)])
    assert DotConfiguration([]).n == 0


def test_duplicate_dots_rejected():
    with pytest.raises(ValueError, match="duplicate"):
        DotConfiguration([(0, 0), (0, 0)])


def test_configuration_is_immutable():
    with pytest.raises(AttributeError):
        THREE.dots = ()


def test_permutation_round_trip():
    cfg = DotConfiguration.from_permutation([1, 0, 2])
    assert cfg.to_permutation() == (1, 0, 2)
    assert DotConfiguration([(0, 0), (2, 2)]).to_permutation() is None
    with pytest.raises(ValueError):
        validate_permutation([0, 0, 1])


@pytest.mark.parametrize(
    "cells, index",
    [([(0, 0)], 0), ([(0, 1), (1, 0), (2, 2)], 1), ([(0, 0), (1, 1)], None)],
)
def test_hexagonal_permutation_examples(cells, index):
    cfg = DotConfiguration(cells)
    assert hexagonal_permutation_index(cfg) == index
    assert is_hexagonal_permutation(cfg) == (index is not None)


def test_hexagonal_permutation_rejects_empty():
    with pytest.raises(ValueError):
        is_hexagonal_permutation(DotConfiguration())


@pytest.mark.parametrize(
    "cells, expected",
    [([(0, 0)], True), ([(0, 0), (1, 0), (3, 0)], True), ([(0, 0), (1, 0), (2, 0)], False)],
)
def test_distinct_difference_examples(cells, expected):
    assert is_distinct_difference(DotConfiguration(cells)) is expected
    assert differences_distinct(cells) is expected


@settings(max_examples=1000)
@given(small_configs, st.sampled_from(SYMMETRIES), st.integers(-5, 5), st.integers(-5, 5))
def test_distinct_difference_invariant_under_symmetry_and_translation(cfg, g, dc, dr):
    expected = differences_distinct(cfg.dots)
    assert is_distinct_difference(cfg) is expected
    assert is_distinct_difference(apply_symmetry(g, cfg)) is expected
    assert is_distinct_difference(DotConfiguration((c + dc, r + dr) for c, r in cfg.dots)) is expected


@settings(max_examples=300)
@given(small_configs)
def test_honeycomb_iff_both_properties(cfg):
    both = lines_consecutive(cfg.dots) and differences_distinct(cfg.dots)
    assert (honeycomb_radius(cfg) is not None) == both
    assert is_hexagonal_permutation(cfg) == lines_consecutive(cfg.dots)


def test_honeycomb_radius_examples():
    assert honeycomb_radius(DotConfiguration([(0, 0)])) == (0, Cell(0, 0))
    assert honeycomb_radius(THREE) == (1, Cell(1, 1))
    assert honeycomb_radius(DotConfiguration([(0, 0), (1, 0)])) is None
    assert honeycomb_radius(DotConfiguration()) is None


@pytest.mark.parametrize("n", [2, 4, 6, 8])
def test_no_even_hexagonal_permutation(n):
    for p in itertools.permutations(range(n)):
        assert not is_hexagonal_permutation(DotConfiguration.from_permutation(p))


@pytest.mark.parametrize("n", [1, 3, 5, 7])
def test_diagonal_criterion_for_permutations(n):
    half = (n - 1) // 2
    for p in itertools.permutations(range(n)):
        offsets = sorted(v - i for i, v in enumerate(p))
        criterion = offsets == list(range(-half, half + 1))
        assert is_hexagonal_permutation(DotConfiguration.from_permutation(p)) == criterion


def test_bounding_region():
    assert bounding_region(DotConfiguration([(0, 0)])) == staircase(0, 1, Cell(0, 0))
    reg = bounding_region(THREE)
    assert reg == staircase(1, 3, Cell(0, 0))
    assert set(reg.cells) == set(lee_sphere(Cell(1, 1), 1).cells)
    with pytest.raises(ValueError):
        bounding_region(DotConfiguration([(0, 0), (1, 1)]))


def test_bounding_region_is_intersection_of_occupied_lines():
    cfg = THREE
    rows = {c.row for c in cfg}
    cols = {c.col for c in cfg}
    diags = {c.diag for c in cfg}
    box = {Cell(c, r) for c in range(-2, 6) for r in range(-2, 6)}
    rcd = {x for x in box if x.row in rows and x.col in cols and x.diag in diags}
    assert set(bounding_region(cfg).cells) == rcd


def test_canonicalize_examples():
    single = DotConfiguration([(0, 0)])
    assert canonicalize(single) == single
    image = DotConfiguration([(1, 0), (0, 1), (2, 2)])
    assert canonicalize(THREE) == canonicalize(image)


@settings(max_examples=200)
@given(small_configs)
def test_canonicalize_is_idempotent_and_orbit_constant(cfg):
    canon = canonicalize(cfg)
    assert canonicalize(canon) == canon
    for g in SYMMETRIES:
        assert canonicalize(apply_symmetry(g, cfg)) == canon
    assert canon in orbit(cfg)
    assert all(canon.key() <= other.key() for other in orbit(cfg))


@settings(max_examples=200)
@given(small_configs)
def test_orbit_stabilizer(cfg):
    assert len(orbit(cfg)) * automorphism_group_order(cfg) == 12


def test_automorphism_group_order_examples():
    assert automorphism_group_order(DotConfiguration([(0, 0)])) == 12
    assert automorphism_group_order(DotConfiguration([(0, 0), (1, 1)])) == 4


def test_orbits_partition_the_hexagonal_permutations_of_seven():
    from oracles import hexperm_brute

    perms = [DotConfiguration.from_permutation(p) for p in hexperm_brute(7)]
    raw = set(perms)
    classes = {}
    for cfg in raw:
        classes.setdefault(canonicalize(cfg), set()).add(cfg)
    assert sum(len(members) for members in classes.values()) == len(raw) == 28
    for canon, members in classes.items():
        assert members == orbit(canon)


def test_honeycomb_array_validation():
    HoneycombArray(THREE, 1, Cell(1, 1))
    with pytest.raises(ValueError):
        HoneycombArray(THREE, 2, Cell(1, 1))
    with pytest.raises(ValueError):
        HoneycombArray(THREE, 1, Cell(0, 0))
    assert as_honeycomb(THREE).radius == 1
    assert region_contains(lee_sphere(Cell(1, 1), 1), THREE)
