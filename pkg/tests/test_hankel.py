"""Hankel matrices and the block-reduction coordinate change."""

import dataclasses
import random

import pytest

from secantinv.exactalg import LocalizedPoly, MultiPoly, PolyMatrix, poly_det
from secantinv.hankel import (
    BlockReduction,
    HankelSpec,
    block_reduce,
    factorization_identity,
    factorization_identity_at_point,
    hankel_matrix,
    random_locus_point,
    residual_hankel,
    restricted_hankel,
    verify_block_reduction,
)


def p(nvars, text):
    return MultiPoly.from_str(nvars, text)


class TestHankelMatrix:
    def test_n0(self):
        m = hankel_matrix(0)
        assert (m.rows, m.cols) == (1, 1)
        assert m.at(0, 0).to_str() == "x0"

    def test_n1(self):
        m = hankel_matrix(1)
        assert [[m.at(i, j).to_str() for j in range(2)] for i in range(2)] == [
            ["x0", "x1"],
            ["x1", "x2"],
        ]

    def test_n2_corner(self):
        assert hankel_matrix(HankelSpec(2)).at(2, 2).to_str() == "x4"

    def test_invalid_spec(self):
        with pytest.raises(ValueError):
            HankelSpec(-1)


class TestBlockReduceSmall:
    def test_n1_k0_hand_recurrence(self):
        r = block_reduce(1, 0)
        assert r.p_seq[1] == LocalizedPoly(p(3, "-x1"), 0, 2)
        assert r.y_coords[0] == LocalizedPoly(p(3, "x0"), 0, 0)
        assert r.y_coords[2] == LocalizedPoly(p(3, "x0*x2 - x1^2"), 0, 1)
        # f = y0 * y2 exactly (sign +1 for k = 0).
        assert r.factorization_sign == 1
        lhs = poly_det(restricted_hankel(1, 0))
        assert lhs == r.y_coords[0] * r.y_coords[2]

    def test_p0_times_xk_is_one(self):
        for n, k in [(1, 0), (2, 0), (2, 1), (3, 2)]:
            r = block_reduce(n, k)
            xk = LocalizedPoly(MultiPoly.variable(2 * n + 1, k), k, 0)
            assert r.p_seq[0] * xk == LocalizedPoly.const(2 * n + 1, 1, k)

    def test_y_case_split(self):
        for n, k in [(2, 1), (3, 1), (3, 2)]:
            r = block_reduce(n, k)
            nvars = 2 * n + 1
            xk2 = LocalizedPoly(MultiPoly.variable(nvars, k) ** 2, k, 0)
            for i in range(1, 2 * n - k + 1):
                expected = xk2 * r.p_seq[i]
                if i > k:
                    expected = -expected
                assert r.y_coords[i] == expected

    def test_n2_k1_signed_factorization(self):
        r = block_reduce(2, 1)
        assert r.factorization_sign == -1
        lhs = poly_det(restricted_hankel(2, 1))
        rhs = (r.y_coords[0] ** 2) * r.y_coords[3]
        # The determinant equals minus y0^2 y3 with the pinned coordinates;
        # the order-reversal sign of the 2x2 top block cannot be scaled away.
        assert lhs == -rhs
        assert factorization_identity(r)

    def test_n2_k0_bottom_right_block(self):
        r = block_reduce(2, 0)
        for i in (1, 2):
            for j in (1, 2):
                assert r.N_matrix.at(i, j) == -r.p_seq[i + j]
        assert r.N_matrix.at(0, 1).is_zero()
        assert r.N_matrix.at(2, 0).is_zero()

    def test_k_out_of_range(self):
        with pytest.raises(ValueError):
            block_reduce(2, 2)
        with pytest.raises(ValueError):
            block_reduce(3, -1)


class TestVerification:
    def test_n1_k0_all_checks_pass(self):
        report = verify_block_reduction(block_reduce(1, 0))
        assert report.all_ok
        assert [c.case for c in report.checks] == [
            "top_left",
            "off_diagonal",
            "bottom_right",
            "determinant",
        ]

    def test_n3_k1_all_checks_pass(self):
        assert verify_block_reduction(block_reduce(3, 1)).all_ok

    def test_tampered_off_diagonal_entry_is_named(self):
        r = block_reduce(2, 0)
        entries = list(r.N_matrix.entries)
        one = LocalizedPoly.const(5, 1, 0)
        # Perturb entry (0, 2), which lies in the top-right off-diagonal block.
        entries[0 * 3 + 2] = entries[0 * 3 + 2] + one
        tampered = dataclasses.replace(
            r, N_matrix=PolyMatrix(3, 3, entries)
        )
        report = verify_block_reduction(tampered)
        assert not report.all_ok
        assert "off_diagonal" in report.failing_cases()
        off = next(c for c in report.checks if c.case == "off_diagonal")
        assert off.offending_entry == (0, 2)

    def test_det_p_is_p0_power(self):
        for n, k in [(1, 0), (2, 0), (2, 1), (3, 2)]:
            r = block_reduce(n, k)
            assert poly_det(r.P_matrix) == r.p_seq[0] ** (n + 1)


class TestFactorization:
    def test_symbolic_up_to_n4(self):
        for n in range(1, 5):
            for k in range(n):
                assert factorization_identity(block_reduce(n, k))

    def test_residual_matrix_shape(self):
        r = block_reduce(3, 1)
        m = residual_hankel(r)
        assert (m.rows, m.cols) == (2, 2)
        assert m.at(0, 0) == r.y_coords[3]
        assert m.at(1, 1) == r.y_coords[5]

    def test_point_identity_samples(self):
        rng = random.Random(30)
        for n in range(1, 6):
            for k in range(n):
                for _ in range(5):
                    point = random_locus_point(n, k, rng)
                    assert factorization_identity_at_point(n, k, point)

    def test_symbolic_and_numeric_recurrences_agree_at_points(self):
        # The symbolic p/y sequences and the pure-Fraction recurrence used
        # by the point checks are independent code paths; they must agree.
        rng = random.Random(33)
        for n, k in [(2, 0), (3, 1), (4, 2)]:
            r = block_reduce(n, k)
            for _ in range(5):
                point = random_locus_point(n, k, rng)
                p_vals = [1 / point[k]]
                for ell in range(1, 2 * n - k + 1):
                    acc = sum(p_vals[j] * point[k + ell - j] for j in range(ell))
                    p_vals.append(-acc / point[k])
                for i, p_sym in enumerate(r.p_seq):
                    assert p_sym.eval(point) == p_vals[i]
                xk2 = point[k] ** 2
                for i in range(1, 2 * n - k + 1):
                    expected = xk2 * p_vals[i] * (1 if i <= k else -1)
                    assert r.y_coords[i].eval(point) == expected

    def test_point_off_locus_rejected(self):
        with pytest.raises(ValueError):
            factorization_identity_at_point(2, 1, [1, 1, 0, 0, 0])


class TestSerialization:
    def test_block_reduction_json_round_trip(self):
        r = block_reduce(2, 1)
        again = BlockReduction.from_obj(r.to_obj())
        assert again == r
