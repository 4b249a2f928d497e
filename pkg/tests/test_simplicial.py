"""Simplicial complexes and exact reduced homology."""
from __future__ import annotations

import random

import pytest

from edgedepth.simplicial import (
    QQ,
    FieldChoice,
    euler_characteristic_reduced,
    from_facets,
    is_cone,
    join,
    min_nonvanishing_reduced_homology,
    reduced_homology_dims,
    void_complex,
)


def test_facet_pruning_and_canonical_order():
    cx = from_facets([1, 2, 3], [[3, 2], [2], [1]])
    assert cx.facets == ((1,), (2, 3))
    same = from_facets([1, 2, 3], [[1], [2, 3], [3, 2], [2]])
    assert cx == same


def test_void_vs_irrelevant():
    void = void_complex([1, 2])
    irr = from_facets([1, 2], [[]])
    assert void.is_void and not void.is_irrelevant
    assert irr.is_irrelevant and not irr.is_void
    assert reduced_homology_dims(void) == {}
    assert reduced_homology_dims(irr) == {-1: 1}
    assert irr.dim == -1


def test_two_points():
    cx = from_facets([1, 2], [[1], [2]])
    assert reduced_homology_dims(cx) == {-1: 0, 0: 1}


def test_hollow_square():
    cx = from_facets([1, 2, 3, 4], [[1, 2], [2, 3], [3, 4], [1, 4]])
    assert reduced_homology_dims(cx) == {-1: 0, 0: 0, 1: 1}


def test_solid_simplex_acyclic():
    cx = from_facets([1, 2, 3], [[1, 2, 3]])
    dims = reduced_homology_dims(cx)
    assert all(v == 0 for v in dims.values())
    assert min_nonvanishing_reduced_homology(cx) == (None, 0)


def test_sphere_boundary():
    # boundary of the tetrahedron is a 2-sphere
    cx = from_facets([1, 2, 3, 4], [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])
    assert reduced_homology_dims(cx) == {-1: 0, 0: 0, 1: 0, 2: 1}


def test_projective_plane_characteristic_dependence():
    # minimal 6-vertex triangulation: torsion shows up only over GF(2)
    facets = [
        [1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
        [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6],
    ]
    cx = from_facets(range(1, 7), facets)
    over_q = reduced_homology_dims(cx, QQ)
    over_2 = reduced_homology_dims(cx, FieldChoice.gf(2))
    assert over_q == {-1: 0, 0: 0, 1: 0, 2: 0}
    assert over_2 == {-1: 0, 0: 0, 1: 1, 2: 1}


def test_join_identities():
    irr = from_facets([], [[]])
    cx = from_facets([1, 2], [[1], [2]])
    assert join(cx, irr) == cx
    assert join(cx, void_complex([9])).is_void


def test_join_universe_overlap_rejected():
    a = from_facets([1], [[1]])
    b = from_facets([1, 2], [[1, 2]])
    with pytest.raises(ValueError):
        join(a, b)


def test_join_of_point_pairs():
    # join of s copies of a two-point complex is a sphere S^{s-1}
    offset = 0
    cx = from_facets([], [[]])
    for s in range(1, 5):
        pts = from_facets([offset + 1, offset + 2], [[offset + 1], [offset + 2]])
        offset += 2
        cx = join(cx, pts)
        dims = reduced_homology_dims(cx)
        assert dims[s - 1] == 1
        assert all(v == 0 for d, v in dims.items() if d != s - 1)


def test_cone_detection_and_acyclicity():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(2, 6)
        facets = []
        for _ in range(rng.randint(1, 5)):
            size = rng.randint(1, n)
            facets.append(rng.sample(range(2, n + 2), min(size, n)))
        cone_facets = [f + [1] for f in facets]
        cx = from_facets(range(1, n + 2), cone_facets)
        assert is_cone(cx) == 1
        assert min_nonvanishing_reduced_homology(cx) == (None, 0)


def test_is_cone_negative():
    assert is_cone(from_facets([1, 2], [[1], [2]])) is None
    assert is_cone(void_complex([1])) is None
    assert is_cone(from_facets([1], [[]])) is None


def test_euler_characteristic_matches_homology():
    rng = random.Random(43)
    for _ in range(25):
        n = rng.randint(2, 6)
        facets = [
            rng.sample(range(1, n + 1), rng.randint(1, n))
            for _ in range(rng.randint(1, 5))
        ]
        cx = from_facets(range(1, n + 1), facets)
        dims = reduced_homology_dims(cx)
        chi = sum((-1) ** d * v for d, v in dims.items())
        assert chi == euler_characteristic_reduced(cx)


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        FieldChoice.gf(6)
