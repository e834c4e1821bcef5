"""Named verification suites over a torus geometry.

Each suite returns a list of CheckResult fragments; the CLI assembles them
into a VerificationReport.  Randomized suites draw from seeded generators
with dyadic-rational coefficients so that reports are reproducible and the
coefficient-exact contracts of the symbolic layer actually hold bit for bit.
"""

from __future__ import annotations

import numpy as np

from .finite import (
    DEFAULT_TOL,
    clock_matrix,
    dft_basis_change,
    physical_grid_overlaps,
    shift_matrix,
    table1_matrices,
    table1_verify,
    weyl_commutation_check,
)
from .report import CheckResult
from .symbolic import BilinearPhaseTerm, OperatorKind, WaveFunction, commutator_apply
from .torus import (
    GridShift,
    TorusGeometry,
    chart_consistency_check,
    make_geometry,
    make_torus_P_basis,
    make_torus_Q_basis,
    sample,
)

_SUITE_SEED = 714025


def _dyadic(rng, lo=-8, hi=8, denom=8.0):
    return float(rng.integers(lo, hi + 1)) / denom


def _random_wavefunction(rng, hbar: float = 1.0) -> WaveFunction:
    terms = []
    for _ in range(int(rng.integers(1, 4))):
        pref = {}
        for _ in range(int(rng.integers(1, 4))):
            mon = (int(rng.integers(0, 3)), int(rng.integers(0, 3)))
            pref[mon] = complex(_dyadic(rng), _dyadic(rng))
        amp = complex(1 + int(rng.integers(0, 4)), int(rng.integers(-2, 3)))
        terms.append(
            BilinearPhaseTerm(
                amp,
                _dyadic(rng), _dyadic(rng), _dyadic(rng), _dyadic(rng),
                prefactor=pref, hbar=hbar,
            )
        )
    wf = WaveFunction(terms, hbar=hbar)
    if wf.is_zero():
        return WaveFunction.single(1.0, 0.0, 0.5, -0.25, 1.0, hbar=hbar)
    return wf


def suite_commutators(geometry: TorusGeometry, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Heisenberg algebra on random family members, coefficient-exact.

    Both invariant pairs must return i*hbar times the input and all four
    mixed left/right pairs must annihilate it.  Runs at hbar = 1.
    """
    rng = np.random.default_rng(_SUITE_SEED)
    canonical = ((OperatorKind.Q_LEFT, OperatorKind.P_LEFT),
                 (OperatorKind.Q_RIGHT, OperatorKind.P_RIGHT))
    mixed = ((OperatorKind.Q_LEFT, OperatorKind.P_RIGHT),
             (OperatorKind.Q_RIGHT, OperatorKind.P_LEFT),
             (OperatorKind.Q_LEFT, OperatorKind.Q_RIGHT),
             (OperatorKind.P_RIGHT, OperatorKind.P_LEFT))
    worst_canonical = 0.0
    worst_mixed = 0.0
    count = 20
    for _ in range(count):
        wf = _random_wavefunction(rng)
        target = wf.scale(1j * wf.hbar)
        for pair in canonical:
            resid = commutator_apply(*pair, wf).max_coeff_residual(target)
            worst_canonical = max(worst_canonical, resid)
        for pair in mixed:
            worst_mixed = max(worst_mixed, commutator_apply(*pair, wf).max_abs_coeff())
    return [
        CheckResult("commutators/canonical_pairs", {"count": count, "hbar": 1.0},
                    worst_canonical, tol, worst_canonical <= tol),
        CheckResult("commutators/mixed_pairs", {"count": count, "hbar": 1.0},
                    worst_mixed, tol, worst_mixed <= tol),
    ]


def _gram_residual(states) -> float:
    M2 = states[0].M ** 2
    V = np.stack([s.values.reshape(-1) for s in states])
    gram = (V.conj() @ V.T) / M2
    return float(np.abs(gram - np.eye(len(states))).max())


def suite_orthonormality(geometry: TorusGeometry, tol: float = DEFAULT_TOL,
                         M: int | None = None) -> list[CheckResult]:
    """Gram matrices of both N^2-member bases equal the identity."""
    N = geometry.N
    if N is None:
        raise ValueError("orthonormality suite requires a quantized geometry")
    if M is None:
        M = 8 * N
    qstates = [sample(make_torus_Q_basis(geometry, n, m, primed=True), geometry, M)
               for n in range(N) for m in range(N)]
    pstates = [sample(make_torus_P_basis(geometry, n, m), geometry, M)
               for n in range(N) for m in range(N)]
    rq = _gram_residual(qstates)
    rp = _gram_residual(pstates)
    params = {"N": N, "M": M}
    return [
        CheckResult("orthonormality/q_basis_gram", params, rq, tol, rq <= tol),
        CheckResult("orthonormality/p_basis_gram", params, rp, tol, rp <= tol),
    ]


def suite_table1(geometry: TorusGeometry, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """All eight operator/basis cells as grid identities on the physical grid."""
    N = geometry.N
    if N is None:
        raise ValueError("table1 suite requires a quantized geometry")
    return table1_verify(N, h=geometry.h)


def suite_weyl(geometry: TorusGeometry, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Clock/shift commutation phase and unitarity."""
    N = geometry.N
    if N is None:
        raise ValueError("weyl suite requires a quantized geometry")
    C = clock_matrix(N).entries
    S = shift_matrix(N).entries
    eye = np.eye(N)
    omega = weyl_commutation_check(N, tol)
    r_order = abs(omega**N - 1.0)
    if N == 1:
        separation = 2.0
    else:
        separation = min(abs(omega**k - 1.0) for k in range(1, N))
    r_primitive = 0.0 if (N == 1 or separation > 0.1) else 0.1 - separation
    r_cu = float(np.abs(C.conj().T @ C - eye).max())
    r_su = float(np.abs(S.conj().T @ S - eye).max())
    SN = np.linalg.matrix_power(S, N)
    r_shift_order = float(np.abs(SN - eye).max())
    r_commute = float(np.abs(C @ SN - SN @ C).max())
    params = {"N": N, "omega": [omega.real, omega.imag]}
    return [
        CheckResult("weyl/scalar_phase_order", params, r_order, tol, r_order <= tol),
        CheckResult("weyl/phase_primitive", {**params, "min_separation": separation},
                    r_primitive, 0.0, r_primitive <= 0.0),
        CheckResult("weyl/clock_unitary", {"N": N}, r_cu, tol, r_cu <= tol),
        CheckResult("weyl/shift_unitary", {"N": N}, r_su, tol, r_su <= tol),
        CheckResult("weyl/shift_nth_power_identity", {"N": N}, r_shift_order, 0.0,
                    r_shift_order == 0.0),
        CheckResult("weyl/nth_power_commutes", {"N": N}, r_commute, tol, r_commute <= tol),
    ]


def suite_dft(geometry: TorusGeometry, tol: float = DEFAULT_TOL,
              oracle_tol: float = 1e-10) -> list[CheckResult]:
    """Unitarity, intertwining, and grid-overlap oracle for the basis change."""
    N = geometry.N
    if N is None:
        raise ValueError("dft suite requires a quantized geometry")
    K = dft_basis_change(N).entries
    r_unitary = float(np.abs(K.conj().T @ K - np.eye(N)).max())
    checks = [
        CheckResult("dft/unitary", {"N": N}, r_unitary, tol, r_unitary <= tol),
    ]
    for which in GridShift:
        mp, mq = table1_matrices(which, N)
        resid = float(np.abs(K @ mp - mq @ K).max())
        checks.append(
            CheckResult(f"dft/intertwines_{which.name.lower()}", {"N": N},
                        resid, tol, resid <= tol)
        )
    overlaps = physical_grid_overlaps(N, h=geometry.h)
    expected = K / np.sqrt(N)  # overlap of unit grid states carries 1/sqrt(N)
    r_oracle = 0.0
    for s in range(N):
        r_oracle = max(r_oracle, float(np.abs(overlaps[:, s, :] - expected).max()))
    checks.append(
        CheckResult("dft/grid_overlap_oracle", {"N": N, "M": N},
                    r_oracle, oracle_tol, r_oracle <= oracle_tol)
    )
    return checks


def suite_charts(geometry: TorusGeometry, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Two-chart gauge consistency, plus detection of an omitted transition."""
    N = geometry.N
    if N is None:
        raise ValueError("charts suite requires a quantized geometry")
    labels = [(0, 0)] if N == 1 else [(0, 0), (1, 1)]
    checks = [chart_consistency_check(geometry, n, m) for n, m in labels]
    # Negative control on a half-integer area: with the gauge factor omitted
    # the seam mismatch must be plainly visible.
    broken = make_geometry(geometry.a, geometry.b * (N + 0.5) / N, geometry.h)
    checks.append(chart_consistency_check(broken, 0, 0, apply_transition=False))
    return checks


SUITES = {
    "commutators": suite_commutators,
    "orthonormality": suite_orthonormality,
    "table1": suite_table1,
    "weyl": suite_weyl,
    "dft": suite_dft,
    "charts": suite_charts,
}

SUITE_ORDER = ("commutators", "orthonormality", "table1", "weyl", "dft", "charts")


def run_suites(selector: str, geometry: TorusGeometry, tol: float = DEFAULT_TOL) -> list[CheckResult]:
    """Run one named suite, or all of them in a fixed order."""
    if selector == "all":
        names = SUITE_ORDER
    elif selector in SUITES:
        names = (selector,)
    else:
        raise ValueError(f"unknown suite {selector!r}; choose from {sorted(SUITES)} or 'all'")
    checks: list[CheckResult] = []
    for name in names:
        checks.extend(SUITES[name](geometry, tol))
    return checks
