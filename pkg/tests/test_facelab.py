from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfacets.errors import DegeneracyError, InputError
from kfacets.facelab import (
    FaceCertificate,
    conic_edge_certificate,
    embedding_face_certificate,
    face_certificate,
    is_weakly_k_neighborly,
    neighborliness_degree,
    radon_partition,
    separation_hyperplane,
    strictly_separable,
    weak_separation,
)
from kfacets.geometry import Hyperplane, point_set
from kfacets.liftmaps import moment_curve, neighborly_embedding, veronese

F = Fraction

SQUARE = point_set([(0, 0), (1, 0), (1, 1), (0, 1)])
TRIANGLE_CENTER = point_set([(0, 0), (3, 0), (0, 3), (1, 1)])


class TestFaceCertificate:
    def test_square_edges_are_strict_faces(self):
        for pair in [(0, 1), (1, 2), (2, 3), (0, 3)]:
            cert = face_certificate(SQUARE, pair)
            assert cert is not None and cert.strict
            assert cert.validate(SQUARE, pair)

    def test_square_diagonals_are_not_faces(self):
        assert face_certificate(SQUARE, (0, 2)) is None
        assert face_certificate(SQUARE, (1, 3)) is None

    def test_square_vertices_are_strict_faces(self):
        for i in range(4):
            assert face_certificate(SQUARE, (i,)) is not None

    def test_interior_point_is_not_a_face(self):
        assert face_certificate(TRIANGLE_CENTER, (3,)) is None

    def test_whole_set_strict_rejected(self):
        with pytest.raises(InputError):
            face_certificate(SQUARE, (0, 1, 2, 3), strict=True)

    def test_whole_set_weak_allowed_for_flat_data(self):
        flat = point_set([(0, 0), (1, 0), (2, 0)])
        cert = face_certificate(flat, (0, 1, 2), strict=False)
        assert cert is not None and not cert.strict
        assert cert.validate(flat, (0, 1, 2))

    def test_weak_face_on_collinear_boundary(self):
        # 0,1,2 collinear on the bottom edge: strict fails for (0,2), weak passes
        ps = point_set([(0, 0), (1, 0), (2, 0), (1, 2)])
        assert face_certificate(ps, (0, 2)) is None
        cert = face_certificate(ps, (0, 2), strict=False)
        assert cert is not None and cert.validate(ps, (0, 2))

    def test_validate_rejects_wrong_plane(self):
        bad = FaceCertificate(Hyperplane((F(1), F(0)), F(0)), strict=True)
        assert not bad.validate(SQUARE, (0, 1))


class TestSeparation:
    def test_corner_separable(self):
        h = separation_hyperplane(SQUARE, (2,))
        assert h is not None
        assert h.eval(SQUARE.points[2]) > 0
        assert all(h.eval(SQUARE.points[i]) < 0 for i in (0, 1, 3))

    def test_adjacent_pair_separable_diagonal_not(self):
        assert strictly_separable(SQUARE, (0, 1))
        assert not strictly_separable(SQUARE, (0, 2))

    def test_interior_point_not_separable(self):
        assert not strictly_separable(TRIANGLE_CENTER, (3,))

    def test_empty_and_full_rejected(self):
        with pytest.raises(InputError):
            separation_hyperplane(SQUARE, ())
        with pytest.raises(InputError):
            separation_hyperplane(SQUARE, (0, 1, 2, 3))

    @given(st.sets(st.integers(0, 3), min_size=1, max_size=3))
    @settings(max_examples=40, deadline=None)
    def test_separability_respects_complement(self, subset):
        # a subset of the square is separable iff its complement is
        sub = tuple(sorted(subset))
        comp = tuple(i for i in range(4) if i not in subset)
        assert strictly_separable(SQUARE, sub) == strictly_separable(SQUARE, comp)


class TestNeighborliness:
    def test_planar_square_is_1_neighborly(self):
        assert neighborliness_degree(SQUARE, 2) == 1

    def test_moment_curve_dim4_is_2_neighborly(self):
        ps = moment_curve(4).apply(point_set([(t,) for t in range(1, 7)]))
        assert neighborliness_degree(ps, 3) == 2

    def test_lifted_plane_pairs_are_faces(self):
        src = point_set([(0, 0), (5, 1), (2, 7), (-4, 3), (-3, -5), (6, -2)])
        lifted = veronese(2, 2).apply(src)
        assert neighborliness_degree(lifted, 2) == 2

    def test_max_k_bounds(self):
        with pytest.raises(InputError):
            neighborliness_degree(SQUARE, 0)
        with pytest.raises(InputError):
            neighborliness_degree(SQUARE, 4)

    def test_weak_neighborliness_flat_witness(self):
        # 5 points in dim 3: some 2-subset must fail weak 2-neighborliness
        # only when forced; a simplex plus center fails at the center pairs
        ps = point_set([(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1)])
        ok, witness = is_weakly_k_neighborly(ps, 2)
        assert not ok and witness is not None
        assert face_certificate(ps, witness, strict=False) is None

    def test_weak_neighborliness_positive(self):
        ps = moment_curve(4).apply(point_set([(t,) for t in range(1, 7)]))
        ok, witness = is_weakly_k_neighborly(ps, 2)
        assert ok and witness is None


class TestConicEdge:
    def test_horizontal_axis_pair(self):
        # points on y = 0: supporting conic is y^2 <= 0 flipped to >= 0 form
        cert = conic_edge_certificate((F(1), F(0)), (F(3), F(0)))
        assert cert.hyperplane.normal == (0, 0, 0, 0, 1)
        assert cert.hyperplane.offset == 0

    def test_vertical_axis_pair(self):
        cert = conic_edge_certificate((F(0), F(2)), (F(0), F(5)))
        assert cert.hyperplane.normal == (0, 0, 1, 0, 0)

    def test_general_pair_agrees_with_lp(self):
        src = point_set([(0, 0), (5, 1), (2, 7), (-4, 3), (-3, -5), (6, -2), (1, -4)])
        lifted = veronese(2, 2).apply(src)
        for pair in combinations(range(src.n), 2):
            cert = conic_edge_certificate(src.points[pair[0]], src.points[pair[1]])
            assert cert.validate(lifted, pair)
            assert face_certificate(lifted, pair, strict=False) is not None

    def test_coincident_points_rejected(self):
        with pytest.raises(InputError):
            conic_edge_certificate((F(1), F(1)), (F(1), F(1)))


class TestEmbeddingCertificate:
    def test_explicit_product_polynomial(self):
        # roots 1 and 2: (x-1)^2 (x-2)^2 = x^4 - 6x^3 + 13x^2 - 12x + 4
        src = point_set([(1, 5), (2, -3), (3, 0), (4, 2)])
        cert = embedding_face_certificate(src, (0, 1), k=2)
        assert cert.hyperplane.normal == (-12, 13, -6, 1, 0)
        assert cert.hyperplane.offset == -4

    def test_certificate_validates_on_lifted_set(self):
        src = point_set([(1, 5), (2, -3), (3, 0), (4, 2), (6, 1)])
        lifted = neighborly_embedding(2, 2).apply(src)
        for pair in combinations(range(src.n), 2):
            cert = embedding_face_certificate(src, pair, k=2)
            assert cert.validate(lifted, pair)

    def test_shared_first_coordinate_breaks_strictness(self):
        # unchosen point 1 shares x1 with chosen point 0, so the product
        # polynomial vanishes there too and the strict check must fail
        src = point_set([(1, 5), (1, -3), (3, 0)])
        lifted = neighborly_embedding(2, 2).apply(src)
        cert = embedding_face_certificate(src, (0, 2), k=2)
        assert not cert.validate(lifted, (0, 2))

    def test_subset_size_capped_by_k(self):
        src = point_set([(1, 5), (2, -3), (3, 0), (4, 2)])
        with pytest.raises(InputError):
            embedding_face_certificate(src, (0, 1, 2), k=2)


class TestRadon:
    def test_square_splits_into_diagonals(self):
        w = radon_partition(SQUARE)
        assert w.validate(SQUARE)
        parts = {tuple(sorted(w.part_q)), tuple(sorted(w.part_r))}
        assert parts == {(0, 2), (1, 3)}

    def test_triangle_with_interior_point(self):
        w = radon_partition(TRIANGLE_CENTER)
        assert w.validate(TRIANGLE_CENTER)
        assert {tuple(sorted(w.part_q)), tuple(sorted(w.part_r))} == {(3,), (0, 1, 2)}

    def test_five_points_in_three_dims(self):
        ps = point_set([(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1)])
        w = radon_partition(ps)
        assert w.validate(ps)

    def test_wrong_cardinality_rejected(self):
        with pytest.raises(InputError):
            radon_partition(point_set(SQUARE.subset((0, 1, 2))))

    def test_degenerate_input_rejected(self):
        flat = point_set([(0, 0), (1, 0), (2, 0), (3, 0)])
        with pytest.raises(DegeneracyError):
            radon_partition(flat)


class TestWeakSeparation:
    def test_separable_groups(self):
        q = point_set([(0, 0), (1, 0)])
        r = point_set([(5, 5), (6, 5)])
        h = weak_separation(q, r)
        assert h is not None
        assert all(h.eval(p) <= 0 for p in q.points)
        assert all(h.eval(p) >= 0 for p in r.points)

    def test_touching_groups_still_weakly_separable(self):
        q = point_set([(0, 0), (1, 0)])
        r = point_set([(1, 0), (2, 0)])
        assert weak_separation(q, r) is not None

    def test_radon_parts_are_inseparable(self):
        w = radon_partition(TRIANGLE_CENTER)
        q = point_set(TRIANGLE_CENTER.subset(w.part_q))
        r = point_set(TRIANGLE_CENTER.subset(w.part_r))
        assert weak_separation(q, r) is None

    def test_dim_mismatch_rejected(self):
        with pytest.raises(InputError):
            weak_separation(point_set([(0, 0)]), point_set([(0, 0, 0)]))
