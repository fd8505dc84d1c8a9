"""Twisted de Rham complex: differential, grading, residues, eigenvectors."""

import random
from fractions import Fraction

import pytest

from secantinv.drk import (
    ExtForm,
    GradedClass,
    MixedDegreeError,
    PoleSurvivesError,
    ResidueMismatchError,
    connecting_map,
    d_f,
    hankel_determinant_poly,
    homogeneous_class,
    n2_eigenvectors,
    truncated_drk_dims,
    univariate_drk_cohomology,
)
from secantinv.exactalg import Monomial, MultiPoly


def p(nvars, text):
    return MultiPoly.from_str(nvars, text)


def random_homogeneous(rng, nvars, degree, max_terms=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        expo = [0] * nvars
        for _ in range(degree):
            expo[rng.randrange(nvars)] += 1
        terms[Monomial.from_dense(tuple(expo))] = Fraction(rng.randint(-5, 5))
    poly = MultiPoly(nvars, terms)
    return poly if not poly.is_zero() else MultiPoly.variable(nvars, 0) ** degree


def random_form(rng, nvars, degree, coeff_degree=3):
    terms = {}
    indices = list(range(nvars))
    for _ in range(rng.randint(1, 3)):
        rng.shuffle(indices)
        idx = tuple(sorted(indices[:degree]))
        expo = [0] * nvars
        for _ in range(rng.randint(0, coeff_degree)):
            expo[rng.randrange(nvars)] += 1
        coeff = MultiPoly(
            nvars, {Monomial.from_dense(tuple(expo)): Fraction(rng.randint(-4, 4))}
        )
        existing = terms.get(idx)
        terms[idx] = coeff if existing is None else existing + coeff
    return ExtForm(nvars, degree, terms)


class TestTwistedDifferential:
    def test_constant_goes_to_c_times_df(self):
        f = p(2, "x0^2*x1")
        form = ExtForm(2, 0, {(): MultiPoly.const(2, 3)})
        got = d_f(f, form)
        assert got == ExtForm(
            2, 1, {(0,): p(2, "6*x0*x1"), (1,): p(2, "3*x0^2")}
        )

    def test_univariate_example(self):
        z3 = MultiPoly.variable(1, 0) ** 3
        form = ExtForm(1, 0, {(): MultiPoly.variable(1, 0)})
        assert d_f(z3, form) == ExtForm(1, 1, {(0,): p(1, "3*x0^3 + 1")})

    def test_top_forms_are_closed(self):
        f = hankel_determinant_poly(2)
        top = ExtForm(5, 5, {(0, 1, 2, 3, 4): p(5, "2*x1*x3 - 2*x2^2")})
        assert d_f(f, top).is_zero()

    def test_squares_to_zero_on_200_random_forms(self):
        rng = random.Random(40)
        for _ in range(200):
            nvars = rng.randint(2, 5)
            f = random_homogeneous(rng, nvars, rng.randint(1, 3))
            form = random_form(rng, nvars, rng.randint(0, nvars - 1))
            assert d_f(f, d_f(f, form)).is_zero()

    def test_log_forms_rejected(self):
        f = p(2, "x0^2")
        lifted = ExtForm(2, 0, {(): MultiPoly.const(2, 1)}).log_lift(1)
        with pytest.raises(ValueError):
            d_f(f, lifted)

    def test_arity_mismatch_rejected(self):
        from secantinv.exactalg import DimensionError

        with pytest.raises(DimensionError):
            d_f(p(3, "x0^2"), ExtForm(2, 0, {(): MultiPoly.const(2, 1)}))

    def test_preserves_graded_class(self):
        rng = random.Random(41)
        for _ in range(40):
            nvars = rng.randint(2, 4)
            modulus = rng.randint(1, 4)
            f = random_homogeneous(rng, nvars, modulus)
            degree = rng.randint(0, nvars - 1)
            coeff_deg = rng.randint(0, 3)
            idx = tuple(range(degree))
            coeff = random_homogeneous(rng, nvars, coeff_deg)
            form = ExtForm(nvars, degree, {idx: coeff})
            image = d_f(f, form)
            if image.is_zero():
                continue
            before = homogeneous_class(form, modulus)
            after = homogeneous_class(image, modulus)
            assert before.residue == after.residue


class TestGrading:
    def test_single_dx(self):
        form = ExtForm(5, 1, {(2,): MultiPoly.const(5, 1)})
        assert homogeneous_class(form, 3) == GradedClass(1, 3)

    def test_top_form_degrees(self):
        alpha1 = ExtForm(5, 5, {(0, 1, 2, 3, 4): p(5, "2*x1*x3 - 2*x2^2")})
        assert alpha1.homogeneous_degree() == 7
        assert homogeneous_class(alpha1, 3) == GradedClass(1, 3)
        alpha2 = ExtForm(5, 5, {(0, 1, 2, 3, 4): p(5, "2*x1*x2*x3 - 2*x2^3")})
        assert alpha2.homogeneous_degree() == 8
        assert homogeneous_class(alpha2, 3) == GradedClass(2, 3)

    def test_log_pole_counts_as_degree_zero(self):
        lifted = ExtForm(2, 1, {(0,): MultiPoly.const(2, 1)}).log_lift(1)
        assert lifted.homogeneous_degree() == 1

    def test_mixed_degrees_raise(self):
        form = ExtForm(2, 1, {(0,): p(2, "1 + x0")})
        with pytest.raises(MixedDegreeError):
            homogeneous_class(form, 3)


class TestUnivariateCohomology:
    def test_m1(self):
        basis = univariate_drk_cohomology(1)
        assert [b.to_str() for b in basis] == ["(1)*dx0"]

    def test_m3(self):
        basis = univariate_drk_cohomology(3)
        assert len(basis) == 3
        assert [b.to_str() for b in basis] == ["(1)*dx0", "(x0)*dx0", "(x0^2)*dx0"]

    def test_m2_log(self):
        basis = univariate_drk_cohomology(2, log=True)
        assert len(basis) == 3
        assert basis[0].has_log_pole()
        assert [b.to_str() for b in basis[1:]] == ["(1)*dx0", "(x0)*dx0"]

    def test_dimensions_up_to_10(self):
        for m in range(1, 11):
            assert len(univariate_drk_cohomology(m, log=False)) == m
            assert len(univariate_drk_cohomology(m, log=True)) == m + 1

    def test_basis_classes_avoid_eigenvalue_one(self):
        # z^j dz has homogeneous degree j+1, never 0 mod m+1 for j < m.
        for m in range(1, 11):
            for j, form in enumerate(univariate_drk_cohomology(m)):
                cls = homogeneous_class(form, m + 1)
                assert cls.residue == (j + 1) % (m + 1)
                assert cls.residue != 0


class TestTruncatedDims:
    def test_cubic_class_one(self):
        z3 = MultiPoly.variable(1, 0) ** 3
        result = truncated_drk_dims(z3, 3, 1, 9)
        assert result.dim(0) == 0
        assert result.dim(1) == 1
        assert result.stabilized

    def test_cubic_class_zero_excludes_eigenvalue_one(self):
        z3 = MultiPoly.variable(1, 0) ** 3
        result = truncated_drk_dims(z3, 3, 0, 9)
        assert result.dim(1) == 0
        assert result.stabilized

    def test_all_classes_for_small_powers(self):
        for m in (1, 2, 3):
            g = MultiPoly.variable(1, 0) ** (m + 1)
            for a in range(m + 1):
                result = truncated_drk_dims(g, m + 1, a, 3 * (m + 1))
                assert result.stabilized
                assert result.dim(1) == (1 if a != 0 else 0)

    def test_independent_of_truncation_beyond_twice_the_degree(self):
        for m in (1, 2, 3, 4, 5):
            g = MultiPoly.variable(1, 0) ** (m + 1)
            for a in range(m + 1):
                small = truncated_drk_dims(g, m + 1, a, 2 * (m + 1))
                large = truncated_drk_dims(g, m + 1, a, 4 * (m + 1))
                assert small.dims == large.dims

    def test_inhomogeneous_f_rejected(self):
        with pytest.raises(ValueError):
            truncated_drk_dims(p(1, "x0^2 + x0"), 2, 0, 6)

    def test_wrong_modulus_rejected(self):
        with pytest.raises(ValueError):
            truncated_drk_dims(p(1, "x0^2"), 3, 0, 6)


class TestConnectingMap:
    def setup_method(self):
        self.f = hankel_determinant_poly(2)
        self.f_z0 = self.f.substitute(0, 0)
        self.f_w = self.f_z0.substitute(1, 0)

    def test_restriction_of_the_determinant(self):
        assert self.f_w == p(5, "-x2^3")

    def test_first_step_matches_the_hand_computation(self):
        start = ExtForm(5, 1, {(2,): MultiPoly.const(5, 1)})
        mid = connecting_map(self.f_z0, start, start.log_lift(1))
        expected = ExtForm(
            5,
            3,
            {
                (1, 2, 3): p(5, "-2*x2"),
                (1, 2, 4): p(5, "x1"),
            },
        )
        assert mid == expected

    def test_residue_mismatch_raises(self):
        start = ExtForm(5, 1, {(2,): MultiPoly.const(5, 1)})
        wrong = ExtForm(5, 1, {(3,): MultiPoly.const(5, 1)})
        with pytest.raises(ResidueMismatchError):
            connecting_map(self.f_z0, start, wrong.log_lift(1))

    def test_surviving_pole_raises(self):
        # dx3 is not closed on the slice {x1 = 0} (where f = -x2^3 + nothing
        # involving x3 would be needed), so the pole cannot cancel.
        start = ExtForm(5, 1, {(3,): MultiPoly.const(5, 1)})
        with pytest.raises(PoleSurvivesError):
            connecting_map(self.f_z0, start, start.log_lift(1))

    def test_output_preserves_graded_class(self):
        start = ExtForm(5, 1, {(2,): MultiPoly.const(5, 1)})
        mid = connecting_map(self.f_z0, start, start.log_lift(1))
        assert homogeneous_class(mid, 3) == homogeneous_class(start, 3)


class TestEigenvectorPipeline:
    def test_outputs_match_the_expected_top_forms(self):
        alpha1, alpha2 = n2_eigenvectors()
        expected1 = ExtForm(5, 5, {(0, 1, 2, 3, 4): p(5, "2*x1*x3 - 2*x2^2")})
        expected2 = ExtForm(5, 5, {(0, 1, 2, 3, 4): p(5, "2*x1*x2*x3 - 2*x2^3")})
        scale1 = alpha1.proportionality(expected1)
        scale2 = alpha2.proportionality(expected2)
        assert scale1 is not None and scale1 != 0
        assert scale2 is not None and scale2 != 0

    def test_outputs_are_closed_and_graded(self):
        f = hankel_determinant_poly(2)
        alpha1, alpha2 = n2_eigenvectors()
        assert d_f(f, alpha1).is_zero()
        assert d_f(f, alpha2).is_zero()
        assert homogeneous_class(alpha1, 3) == GradedClass(1, 3)
        assert homogeneous_class(alpha2, 3) == GradedClass(2, 3)


class TestExtFormBasics:
    def test_antisymmetry_is_normalized_away(self):
        with pytest.raises(ValueError):
            ExtForm(3, 2, {(1, 0): MultiPoly.const(3, 1)})

    def test_log_lift_and_residue_are_inverse(self):
        rng = random.Random(42)
        for _ in range(20):
            nvars = rng.randint(2, 5)
            degree = rng.randint(0, nvars - 2)
            # Coefficients must avoid the pole variable for the round trip.
            form = random_form(rng, nvars - 1, degree)
            widened = ExtForm(
                nvars,
                degree,
                {
                    idx: MultiPoly(
                        nvars,
                        {
                            Monomial(m.powers): c
                            for m, c in coeff.terms.items()
                        },
                    )
                    for idx, coeff in form.terms.items()
                },
            )
            assert widened.log_lift(nvars - 1).residue() == widened

    def test_json_round_trip(self):
        alpha1, _ = n2_eigenvectors()
        assert ExtForm.from_obj(5, alpha1.to_obj()) == alpha1
        lifted = ExtForm(2, 0, {(): MultiPoly.const(2, 1)}).log_lift(1)
        assert ExtForm.from_obj(2, lifted.to_obj()) == lifted
