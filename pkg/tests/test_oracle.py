import json

import pytest

from gvand.errors import DegenerateSupportError, SizeCapError, SpecializationUnluckyError
from gvand.exponents import Support
from gvand.oracle import (
    POLYGON_DECOMPOSABLE,
    POLYGON_INDECOMPOSABLE,
    POLYGON_UNKNOWN,
    classical_divisibility_check,
    jacobian_independence_evidence,
    leibniz_determinant,
    line_case_factor,
    polygon_indecomposability,
)
from gvand.rings import GF, ZZ
from gvand.vandermonde import VandermondeInstance, build_matrix, vandermonde_determinant


def _inst(vectors, n, char=0):
    ring = GF(char) if char else ZZ
    return VandermondeInstance(Support(n, tuple(vectors)), ring)


#### permutation-sum determinant ####


def test_leibniz_agrees_with_memoized_route():
    for char in (0, 2, 5):
        inst = _inst([(2, 0), (0, 2), (2, 2)], 2, char)
        matrix = build_matrix(inst)
        assert leibniz_determinant(matrix) == vandermonde_determinant(inst)


def test_leibniz_two_by_two_sign():
    inst = _inst([(0,), (1,)], 1)
    matrix = build_matrix(inst)
    det = leibniz_determinant(matrix)
    ring = inst.poly_ring()
    assert det == ring.monomial((0, 1)) - ring.monomial((1, 0))


def test_leibniz_size_cap():
    inst = _inst([(k,) for k in range(9)], 1)
    with pytest.raises(SizeCapError):
        leibniz_determinant(build_matrix(inst))


#### classical alternant divisibility ####


def test_classical_staircase_quotient_is_a_unit():
    report = classical_divisibility_check(Support(1, ((0,), (1,), (2,))))
    assert report["divides"] and report["remultiplies"]
    assert report["quotient_terms"] == 1
    quotient = report["quotient"]
    exp, coeff = quotient.leading_term()
    assert set(exp) == {0} and coeff in (1, -1)


def test_classical_gap_quotient_is_symmetric():
    report = classical_divisibility_check(Support(1, ((0,), (1,), (3,))))
    assert report["divides"] and report["remultiplies"]
    quotient = report["quotient"]
    # quotient is +-(X_1_1 + X_2_1 + X_3_1)
    assert quotient.n_terms == 3
    coeffs = set(quotient.term_map().values())
    assert coeffs in ({1}, {-1})
    assert quotient.total_degree() == 1


def test_classical_requires_one_coordinate():
    with pytest.raises(ValueError):
        classical_divisibility_check(Support(2, ((0, 0), (1, 1))))


#### collinear-case specialized factoring ####


def _reassemble(report):
    ring = report.univariate.ring
    product = ring.constant(report.unit)
    for f, m in report.factors:
        product = product * f**m
    return product


@pytest.mark.parametrize("char", [2, 3, 5])
def test_line_case_splits_staircase(char):
    inst = _inst([(0,), (1,), (2,)], 1, char)
    report = line_case_factor(inst, seed=0)
    assert report.prime == char
    assert report.n_factors >= 2
    assert report.line_positions == (0, 1, 2)
    assert _reassemble(report) == report.univariate
    json.dumps(report.to_json())


def test_line_case_diagonal_support():
    inst = _inst([(0, 0), (1, 1), (2, 2)], 2, 5)
    report = line_case_factor(inst, seed=0)
    assert report.n_factors >= 2
    assert _reassemble(report) == report.univariate


def test_line_case_shifted_base():
    # base point (1, 2) is not a multiple of the direction (1, 1)
    inst = _inst([(1, 2), (2, 3), (3, 4)], 2, 3)
    report = line_case_factor(inst, seed=0)
    assert report.n_factors >= 2
    assert _reassemble(report) == report.univariate


def test_line_case_base_on_direction():
    # base point (1, 1) is a multiple of the direction (1, 1)
    inst = _inst([(1, 1), (2, 2), (4, 4)], 2, 5)
    report = line_case_factor(inst, seed=0)
    assert report.n_factors >= 2
    assert _reassemble(report) == report.univariate


def test_line_case_sparse_line():
    inst = _inst([(0,), (2,), (5,)], 1, 5)
    report = line_case_factor(inst, seed=1)
    assert report.line_positions == (0, 2, 5)
    assert report.n_factors >= 2


def test_line_case_unlucky_small_field():
    # over GF(3) every nonzero square is 1, so the reference minor
    # x_3_1^2 - x_2_1^2 vanishes at every torus point and no
    # specialization can exhibit the split
    inst = _inst([(0,), (2,), (5,)], 1, 3)
    with pytest.raises(SpecializationUnluckyError):
        line_case_factor(inst, seed=1, max_attempts=50)


def test_line_case_input_validation():
    with pytest.raises(ValueError):
        line_case_factor(_inst([(0, 0), (1, 0), (0, 1)], 2, 3))
    with pytest.raises(ValueError):
        line_case_factor(_inst([(0,), (1,), (2,)], 1, 0))
    with pytest.raises(ValueError):
        line_case_factor(_inst([(0,), (1,), (2,)], 1, 7))
    with pytest.raises(SizeCapError):
        line_case_factor(_inst([(0,), (25,), (50,)], 1, 3))


def test_line_case_deterministic():
    inst = _inst([(0,), (1,), (3,)], 1, 5)
    a = line_case_factor(inst, seed=9).to_json()
    b = line_case_factor(inst, seed=9).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


#### algebraic-independence evidence ####


def test_jacobian_unit_triangle_conclusive():
    report = jacobian_independence_evidence(Support(2, ((0, 0), (1, 0), (0, 1))), seed=0)
    assert report.target_rank == 2
    assert report.achieved_rank == 2
    assert report.conclusive
    assert 1 <= report.trials <= 3
    blob = report.to_json()
    assert blob["conclusive"] is True
    json.dumps(blob)


def test_jacobian_single_coordinate_support():
    report = jacobian_independence_evidence(Support(1, ((0,), (1,), (2,))), seed=0)
    assert report.conclusive
    assert report.target_rank == 2


def test_jacobian_two_vector_support():
    report = jacobian_independence_evidence(Support(1, ((0,), (1,))), seed=0)
    assert report.target_rank == 1
    assert report.conclusive


def test_jacobian_needs_two_vectors():
    with pytest.raises(DegenerateSupportError):
        jacobian_independence_evidence(Support(1, ((0,),)))


def test_jacobian_deterministic():
    support = Support(2, ((0, 0), (2, 1), (1, 2)))
    a = jacobian_independence_evidence(support, seed=5).to_json()
    b = jacobian_independence_evidence(support, seed=5).to_json()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


#### lattice-polygon indecomposability ####


def test_polygon_unit_triangle_indecomposable():
    report = polygon_indecomposability(Support(2, ((0, 0), (1, 0), (0, 1))))
    assert report.status == POLYGON_INDECOMPOSABLE
    assert len(report.hull) == 3
    json.dumps(report.to_json())


def test_polygon_doubled_triangle_decomposable():
    report = polygon_indecomposability(Support(2, ((0, 0), (2, 0), (0, 2))))
    assert report.status == POLYGON_DECOMPOSABLE
    assert [g for _, g in report.edges] == [2, 2, 2]


def test_polygon_unit_square_decomposable():
    report = polygon_indecomposability(Support(2, ((0, 0), (1, 0), (0, 1), (1, 1))))
    assert report.status == POLYGON_DECOMPOSABLE


def test_polygon_steep_triangle_indecomposable():
    report = polygon_indecomposability(Support(2, ((0, 0), (2, 0), (1, 2))))
    assert report.status == POLYGON_INDECOMPOSABLE


def test_polygon_hull_is_counterclockwise_corners_only():
    # interior and edge-interior points must not appear in the hull
    support = Support(2, ((0, 0), (2, 0), (0, 2), (1, 0), (1, 1)))
    report = polygon_indecomposability(support)
    assert set(report.hull) == {(0, 0), (2, 0), (0, 2)}
    area2 = 0
    hull = report.hull
    for k, cur in enumerate(hull):
        nxt = hull[(k + 1) % len(hull)]
        area2 += cur[0] * nxt[1] - nxt[0] * cur[1]
    assert area2 > 0


def test_polygon_out_of_scope_dimensions():
    report = polygon_indecomposability(Support(3, ((0, 0, 0), (1, 0, 0), (0, 1, 0))))
    assert report.status == POLYGON_UNKNOWN
    with pytest.raises(DegenerateSupportError):
        polygon_indecomposability(Support(2, ((0, 0), (1, 1), (2, 2))))
