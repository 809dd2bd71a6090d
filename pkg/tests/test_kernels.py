"""Kernel evaluation, Gram inertia, and the negative-squares estimator."""

import numpy as np
import pytest

from conftest import random_blaschke
from schurkit.errors import DiagonalSingularity, NotHermitian, PoleProximity
from schurkit.kernels import (
    SamplePlan,
    estimate_negative_squares,
    gram_matrix,
    hermitian_eigenvalues,
    inertia,
    schur_kernel,
)
from schurkit.rational import BlaschkeProduct, Poly, RationalFn

Z = RationalFn.x()
RECIP = RationalFn([1], [0, 1])

FAST = SamplePlan(max_points=64, initial_points=8, seed=11)


class TestKernelEval:
    def test_unimodular_constant_annihilates(self):
        s = RationalFn.constant(np.exp(0.7j))
        for z, w in ((0.1, 0.5j), (-0.3 + 0.2j, 0.6)):
            assert abs(schur_kernel(s, z, w)) < 1e-14

    def test_identity_function_gives_one(self):
        for z, w in ((0.1, 0.5j), (-0.3 + 0.2j, 0.6)):
            assert abs(schur_kernel(Z, z, w) - 1.0) < 1e-14

    def test_reciprocal_closed_form(self):
        # for s = 1/z the kernel is -1/(z conj(w))
        assert abs(schur_kernel(RECIP, 0.5, 0.5) - (-4.0)) < 1e-12
        z, w = 0.3 + 0.1j, -0.2 + 0.4j
        assert abs(schur_kernel(RECIP, z, w) + 1.0 / (z * np.conj(w))) < 1e-12

    def test_hermitian_symmetry(self, rng):
        for _ in range(20):
            s = random_blaschke(rng, 3).as_rational() * 0.9
            z = 0.7 * (rng.normal() + 1j * rng.normal()) / 2
            w = 0.7 * (rng.normal() + 1j * rng.normal()) / 2
            assert abs(schur_kernel(s, z, w) - np.conj(schur_kernel(s, w, z))) < 1e-12

    def test_diagonal_singularity(self):
        with pytest.raises(DiagonalSingularity):
            schur_kernel(Z, 1.0, 1.0)

    def test_pole_proximity(self):
        with pytest.raises(PoleProximity):
            schur_kernel(RECIP, 1e-12, 0.5, pole_clearance=1e-6)


class TestGram:
    def test_identity_function_all_ones(self):
        g = gram_matrix(Z, [0.1, -0.2j, 0.3 + 0.3j])
        assert np.max(np.abs(g.entries - 1.0)) < 1e-14

    def test_constant_one_zero_matrix(self):
        g = gram_matrix(RationalFn.constant(1.0), [0.1, 0.4j])
        assert np.max(np.abs(g.entries)) < 1e-14

    def test_reciprocal_two_points(self):
        g = gram_matrix(RECIP, [0.5, 1 / 3])
        assert np.allclose(g.entries, [[-4, -6], [-6, -9]], atol=1e-12)

    def test_asymmetry_reported(self):
        g = gram_matrix(RECIP, [0.5, 0.25j])
        assert g.asymmetry < 1e-13


class TestInertia:
    def test_signature(self):
        res = inertia(np.diag([1.0, -1.0]))
        assert (res.n_pos, res.n_neg, res.n_zero) == (1, 1, 0)

    def test_zero_matrix(self):
        res = inertia(np.zeros((3, 3)))
        assert (res.n_pos, res.n_neg, res.n_zero) == (0, 0, 3)

    def test_skew_phase_pair(self):
        res = inertia(np.array([[0, -1j], [1j, 0]]))
        assert (res.n_pos, res.n_neg, res.n_zero) == (1, 1, 0)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotHermitian):
            inertia(np.array([[1.0, 2.0], [0.0, 1.0]]))

    def test_jacobi_matches_lapack(self, rng):
        for n in (2, 5, 9, 16):
            b = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
            h = b + b.conj().T
            ours = hermitian_eigenvalues(h)
            ref = np.linalg.eigvalsh(h)
            assert np.max(np.abs(ours - ref)) < 1e-10 * max(1.0, np.max(np.abs(ref)))

    def test_counts_match_lapack_on_gram(self, rng):
        for _ in range(10):
            pts = 0.8 * np.sqrt(rng.uniform(size=7)) * np.exp(2j * np.pi * rng.uniform(size=7))
            g = gram_matrix(RECIP, pts)
            res = inertia(g)
            ref = np.linalg.eigvalsh(g.entries)
            band = 1e-10 * 7 * np.max(np.abs(g.entries))
            assert res.n_neg == int(np.sum(ref < -band))


class TestEstimator:
    def test_schur_gives_zero(self):
        assert estimate_negative_squares(Z, FAST) == 0

    def test_reciprocal_gives_one(self):
        assert estimate_negative_squares(RECIP, FAST) == 1

    def test_double_pole_gives_two(self):
        assert estimate_negative_squares(RationalFn([1], [0, 0, 1]), FAST) == 2

    def test_schur_positivity_sweep(self, rng):
        # Gram matrices of Schur functions are positive semidefinite
        for _ in range(8):
            s = random_blaschke(rng, 4).as_rational()
            n = int(rng.integers(3, 21))
            pts = 0.85 * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))
            assert inertia(gram_matrix(s, pts)).n_neg == 0

    def test_rank_one_negativity(self, rng):
        # kernel of 1/z is -v v*: every Gram matrix has exactly one negative
        for n in (2, 5, 12):
            pts = 0.8 * np.sqrt(rng.uniform(size=n)) * np.exp(2j * np.pi * rng.uniform(size=n))
            assert inertia(gram_matrix(RECIP, pts)).n_neg == 1

    def test_monotone_under_nesting(self, rng):
        pts = list(0.8 * np.sqrt(rng.uniform(size=24)) * np.exp(2j * np.pi * rng.uniform(size=24)))
        s = RationalFn([1], [0, 0, 1])
        prev = 0
        for n in (2, 4, 8, 16, 24):
            count = inertia(gram_matrix(s, pts[:n])).n_neg
            assert count >= prev
            prev = count

    def test_matches_blaschke_order(self, rng):
        from schurkit.rational import krein_langer_factor

        for _ in range(6):
            b = random_blaschke(rng, 2, min_degree=1, radius=0.6)
            s0 = random_blaschke(rng, 2).as_rational() * 0.8
            s = s0 / b.as_rational()
            _, bb = krein_langer_factor(s)
            assert estimate_negative_squares(s, FAST) == bb.order

    def test_deterministic_for_fixed_seed(self):
        a = estimate_negative_squares(RECIP, SamplePlan(seed=5))
        b = estimate_negative_squares(RECIP, SamplePlan(seed=5))
        assert a == b

    def test_pole_near_circle_still_counted(self):
        # a pole close to the unit circle is reached by the probe points
        # even when the random draws stay inside the plan radius
        pole = 0.96 * np.exp(0.4j)
        s = RationalFn([1], [-pole, 1]) * 0.02
        assert estimate_negative_squares(s, FAST) == 1

    def test_no_analytic_points(self):
        from schurkit.errors import NoAnalyticPoints

        with pytest.raises(NoAnalyticPoints):
            estimate_negative_squares(RECIP, SamplePlan(pole_clearance=5.0))
