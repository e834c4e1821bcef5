import json

import numpy as np
import pytest

from conftest import dyadic, random_points, random_wavefunction
from torusq.symbolic import (
    BilinearPhaseTerm,
    OperatorKind,
    WaveFunction,
    apply_operator,
    commutator_apply,
    differentiate,
    exp_operator_apply,
    is_eigenstate,
)

Q_LEFT, P_LEFT = OperatorKind.Q_LEFT, OperatorKind.P_LEFT
Q_RIGHT, P_RIGHT = OperatorKind.Q_RIGHT, OperatorKind.P_RIGHT

ALL_KINDS = (Q_LEFT, P_LEFT, Q_RIGHT, P_RIGHT)


def plane_q_basis(l, k, hbar=1.0, primed=False):
    # e^{ipq/hbar} e^{-i(kq+lp)/hbar}; primed adds the constant kl
    return WaveFunction.single(1.0, k * l if primed else 0.0, -k, -l, 1.0, hbar=hbar)


def plane_p_basis(l, k, hbar=1.0):
    return WaveFunction.single(1.0, 0.0, k, -l, 0.0, hbar=hbar)


class TestConstruction:
    def test_hbar_must_be_positive(self):
        with pytest.raises(ValueError):
            BilinearPhaseTerm(1.0, 0.0, 0.0, 0.0, 0.0, hbar=0.0)
        with pytest.raises(ValueError):
            WaveFunction.zero(hbar=-1.0)

    def test_terms_merge_by_phase_tuple(self):
        t1 = BilinearPhaseTerm(2.0, 0.0, 1.0, 0.0, 0.0, {(0, 0): 1.0})
        t2 = BilinearPhaseTerm(1.0, 0.0, 1.0, 0.0, 0.0, {(0, 0): 3.0, (1, 0): 1.0})
        wf = WaveFunction([t1, t2])
        assert len(wf.terms) == 1
        assert wf.terms[0].prefactor == {(0, 0): 5.0 + 0j, (1, 0): 1.0 + 0j}

    def test_exact_cancellation_gives_zero(self):
        t = BilinearPhaseTerm(1.5, 0.25, -0.5, 0.0, 1.0, {(1, 1): 2.0 - 1.0j})
        wf = WaveFunction([t])
        assert (wf - wf).is_zero()
        assert (wf - wf).terms == ()

    def test_terms_sorted_by_phase_tuple(self):
        tA = BilinearPhaseTerm(1.0, 1.0, 0.0, 0.0, 0.0)
        tB = BilinearPhaseTerm(1.0, -1.0, 0.0, 0.0, 0.0)
        wf = WaveFunction([tA, tB])
        assert [t.c0 for t in wf.terms] == [-1.0, 1.0]

    def test_mixed_hbar_rejected(self):
        t1 = BilinearPhaseTerm(1.0, 0.0, 0.0, 0.0, 0.0, hbar=1.0)
        t2 = BilinearPhaseTerm(1.0, 0.0, 1.0, 0.0, 0.0, hbar=2.0)
        with pytest.raises(ValueError):
            WaveFunction([t1, t2])

    def test_evaluation_matches_definition(self):
        t = BilinearPhaseTerm(2.0 + 1.0j, 0.5, -1.0, 0.25, 1.0, {(2, 1): 1.0 - 2.0j}, hbar=0.5)
        q, p = 0.3, -0.7
        expected = (2.0 + 1.0j) * (1.0 - 2.0j) * q**2 * p * np.exp(
            1j * (0.5 - 1.0 * q + 0.25 * p + q * p) / 0.5
        )
        assert abs(t.evaluate(q, p) - expected) < 1e-15


class TestApplyOperator:
    def test_qleft_eigenstate(self):
        # Q_LEFT on the Q-basis state with labels l=3, k=2 returns 3x the state
        psi = plane_q_basis(3.0, 2.0)
        out = apply_operator(Q_LEFT, psi)
        assert out.max_coeff_residual(psi.scale(3.0)) == 0.0

    def test_qright_kills_constants(self):
        one = WaveFunction.single(1.0, 0.0, 0.0, 0.0, 0.0)
        assert apply_operator(Q_RIGHT, one).is_zero()

    def test_pleft_raises_degree(self):
        # P_LEFT on the Q-basis state multiplies by (p - k)
        psi = plane_q_basis(1.0, 2.0)
        out = apply_operator(P_LEFT, psi)
        assert len(out.terms) == 1
        assert out.terms[0].prefactor == {(0, 0): -2.0 + 0j, (0, 1): 1.0 + 0j}

    def test_qright_on_q_basis(self):
        # Q_RIGHT multiplies by (l - q)
        psi = plane_q_basis(1.5, 0.5)
        out = apply_operator(Q_RIGHT, psi)
        assert out.terms[0].prefactor == {(0, 0): 1.5 + 0j, (1, 0): -1.0 + 0j}

    def test_closure_is_structural(self):
        rng = np.random.default_rng(11)
        for _ in range(10):
            wf = random_wavefunction(rng)
            for kind in ALL_KINDS:
                out = apply_operator(kind, wf)
                assert isinstance(out, WaveFunction)
                assert out.hbar == wf.hbar
                # differentiation and multiplication never change phase tuples
                in_keys = {t.phase_key for t in wf.terms}
                assert {t.phase_key for t in out.terms} <= in_keys


class TestCommutators:
    def test_single_term_canonical_pair(self):
        wf = WaveFunction.single(1.0, 0.0, 0.5, -0.25, 0.75, hbar=0.5)
        out = commutator_apply(Q_LEFT, P_LEFT, wf)
        assert out.max_coeff_residual(wf.scale(0.5j)) == 0.0

    def test_single_term_mixed_pair_vanishes(self):
        wf = WaveFunction.single(1.0, 0.0, 0.5, -0.25, 0.75)
        assert commutator_apply(Q_LEFT, P_RIGHT, wf).is_zero()

    def test_self_commutator_vanishes(self):
        rng = np.random.default_rng(3)
        wf = random_wavefunction(rng)
        for kind in ALL_KINDS:
            assert commutator_apply(kind, kind, wf).is_zero()

    def test_algebra_on_random_members_is_exact(self):
        rng = np.random.default_rng(5)
        mixed = ((Q_LEFT, P_RIGHT), (Q_RIGHT, P_LEFT), (Q_LEFT, Q_RIGHT), (P_RIGHT, P_LEFT))
        for hbar in (1.0, 0.5):
            for _ in range(10):
                wf = random_wavefunction(rng, hbar=hbar)
                target = wf.scale(1j * hbar)
                assert commutator_apply(Q_LEFT, P_LEFT, wf).max_coeff_residual(target) == 0.0
                assert commutator_apply(Q_RIGHT, P_RIGHT, wf).max_coeff_residual(target) == 0.0
                for pair in mixed:
                    assert commutator_apply(*pair, wf).max_abs_coeff() == 0.0


class TestExpOperator:
    def test_qright_shifts_k(self):
        psi = plane_q_basis(1.0, 2.0, primed=True)
        out = exp_operator_apply(Q_RIGHT, 0.75, psi)
        assert out.max_coeff_residual(plane_q_basis(1.0, 2.75, primed=True)) == 0.0

    def test_pleft_shifts_l(self):
        psi = plane_q_basis(1.0, 2.0, primed=True)
        out = exp_operator_apply(P_LEFT, 0.5, psi)
        assert out.max_coeff_residual(plane_q_basis(1.5, 2.0, primed=True)) == 0.0

    def test_zero_coefficient_is_identity(self):
        rng = np.random.default_rng(7)
        wf = random_wavefunction(rng)
        for kind in ALL_KINDS:
            assert exp_operator_apply(kind, 0.0, wf).max_coeff_residual(wf) == 0.0

    def test_semigroup_exact_on_coefficients(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            wf = random_wavefunction(rng)
            s = dyadic(rng)
            for kind in ALL_KINDS:
                twice = exp_operator_apply(kind, s, exp_operator_apply(kind, s, wf))
                once = exp_operator_apply(kind, 2.0 * s, wf)
                assert twice.max_coeff_residual(once) == 0.0

    @pytest.mark.parametrize("kind", ALL_KINDS)
    def test_agrees_with_taylor_series(self, kind):
        # The affine substitution must match the operator exponential's series.
        wf = WaveFunction.single(1.0, 0.0, 0.5, -0.25, 0.5, {(1, 0): 0.5, (0, 1): -0.25j})
        s = 0.5
        pts = [(0.2, -0.3), (-0.6, 0.1), (0.4, 0.7)]
        exact = exp_operator_apply(kind, s, wf)
        sgn = -1.0 if kind is P_LEFT else 1.0
        for q, p in pts:
            total = wf.evaluate(q, p)
            iterate = wf
            fac = 1.0 + 0j
            for order in range(1, 30):
                iterate = apply_operator(kind, iterate)
                fac *= sgn * 1j * s / wf.hbar / order
                total += fac * iterate.evaluate(q, p)
            assert abs(exact.evaluate(q, p) - total) < 1e-9


class TestIsEigenstate:
    def test_qleft_eigenvalue(self):
        assert is_eigenstate(Q_LEFT, plane_q_basis(5.0, 0.0)) == 5.0

    def test_nonconstant_prefactor_returns_none(self):
        assert is_eigenstate(P_LEFT, plane_q_basis(1.0, 2.0)) is None

    def test_pleft_on_plane_wave(self):
        assert is_eigenstate(P_LEFT, plane_p_basis(1.0, 7.0)) == 7.0

    def test_annihilated_state_has_eigenvalue_zero(self):
        one = WaveFunction.single(1.0, 0.0, 0.0, 0.0, 0.0)
        assert is_eigenstate(Q_RIGHT, one) == 0j

    def test_zero_wavefunction_rejected(self):
        with pytest.raises(ValueError):
            is_eigenstate(Q_LEFT, WaveFunction.zero())

    def test_superposition_of_different_eigenvalues_returns_none(self):
        wf = plane_q_basis(1.0, 0.0) + plane_q_basis(2.0, 0.0)
        assert is_eigenstate(Q_LEFT, wf) is None


class TestPointwiseConsistency:
    def test_operators_match_finite_differences(self):
        # Central differences of the evaluation agree with the symbolic image.
        rng = np.random.default_rng(13)
        step = 1e-5
        pts = random_points(rng, 100)
        wfs = [random_wavefunction(rng) for _ in range(5)]
        for wf in wfs:
            hbar = wf.hbar
            images = {kind: apply_operator(kind, wf) for kind in ALL_KINDS}
            for q, p in pts:
                dq = (wf.evaluate(q + step, p) - wf.evaluate(q - step, p)) / (2 * step)
                dp = (wf.evaluate(q, p + step) - wf.evaluate(q, p - step)) / (2 * step)
                base = wf.evaluate(q, p)
                expected = {
                    Q_LEFT: q * base + 1j * hbar * dp,
                    P_LEFT: -1j * hbar * dq,
                    Q_RIGHT: 1j * hbar * dp,
                    P_RIGHT: p * base + 1j * hbar * dq,
                }
                for kind in ALL_KINDS:
                    got = images[kind].evaluate(q, p)
                    assert abs(got - expected[kind]) <= 1e-6 * max(1.0, abs(got))

    def test_differentiate_matches_finite_differences(self):
        rng = np.random.default_rng(17)
        wf = random_wavefunction(rng)
        step = 1e-5
        for q, p in random_points(rng, 20):
            fd_q = (wf.evaluate(q + step, p) - wf.evaluate(q - step, p)) / (2 * step)
            fd_p = (wf.evaluate(q, p + step) - wf.evaluate(q, p - step)) / (2 * step)
            assert abs(differentiate(wf, "q").evaluate(q, p) - fd_q) <= 1e-6 * max(1.0, abs(fd_q))
            assert abs(differentiate(wf, "p").evaluate(q, p) - fd_p) <= 1e-6 * max(1.0, abs(fd_p))


class TestSerialization:
    def test_roundtrip_preserves_canonical_form(self):
        rng = np.random.default_rng(19)
        for _ in range(10):
            wf = random_wavefunction(rng, hbar=0.5)
            back = WaveFunction.from_json(wf.to_json())
            assert back.hbar == wf.hbar
            assert back.max_coeff_residual(wf) == 0.0
            assert [t.phase_key for t in back.terms] == [t.phase_key for t in wf.terms]

    def test_schema_shape(self):
        wf = WaveFunction.single(2.0 - 1.0j, 0.5, 1.0, -1.0, 0.0, {(1, 2): 3.0})
        data = json.loads(wf.to_json())
        assert set(data) == {"hbar", "terms"}
        term = data["terms"][0]
        assert set(term) == {"amp", "c0", "cq", "cp", "cqp", "prefactor"}
        # amplitude is folded into the prefactor in canonical form
        assert term["amp"] == [1.0, 0.0]
        assert term["prefactor"] == [[1, 2, 6.0, -3.0]]

    def test_prefactor_entries_sorted(self):
        wf = WaveFunction.single(1.0, 0.0, 0.0, 0.0, 0.0, {(2, 0): 1.0, (0, 1): 2.0, (1, 1): 3.0})
        entries = json.loads(wf.to_json())["terms"][0]["prefactor"]
        assert [(dq, dp) for dq, dp, _, _ in entries] == [(0, 1), (1, 1), (2, 0)]
