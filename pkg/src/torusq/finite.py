"""The N-dimensional physical Hilbert space of the quantized torus.

States with labels shifted by N, or differing only in the shadow index m, are
physically equivalent; fixing the canonical representatives (m = 0, n reduced
mod N) leaves an N-dimensional space on which the exponentiated physical
operators act as the clock and shift matrices.  The unexponentiated
Heisenberg pair cannot survive the reduction: tr[A, B] = 0 for every finite
pair while [Q, P] = i hbar would need trace i hbar N.

The discrete Fourier matrix connecting the two bases is not normalized here
by fiat: its scale is fixed by unitarity and its phase orientation by two
oracles, the clock/shift intertwining relations and the inner products of
sampled basis states on the physical N x N grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .report import CheckResult
from .torus import (
    GridShift,
    TorusGeometry,
    grid_shift_operator,
    inner_product,
    make_geometry,
    make_torus_P_basis,
    make_torus_Q_basis,
    sample,
)

DEFAULT_TOL = 1e-12
TRACE_TOL = 1e-10


@dataclass(frozen=True)
class EquivalenceLabel:
    """Canonical representative of a basis-label equivalence class:
    0 <= n < modulus and m fixed to 0."""

    n: int
    m: int
    modulus: int


def reduce_label(n: int, m: int, N: int) -> EquivalenceLabel:
    """Reduce (n, m) to the canonical class representative (n mod N, 0).

    Total on all integers; negative labels reduce to the least nonnegative
    residue.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    return EquivalenceLabel(n % N, 0, N)


@dataclass(frozen=True)
class FiniteState:
    """An N-component state vector tagged with its basis."""

    basis: str
    components: np.ndarray

    def __post_init__(self):
        if self.basis not in ("Q", "P"):
            raise ValueError(f"basis must be 'Q' or 'P', got {self.basis!r}")
        comps = np.asarray(self.components, dtype=complex).reshape(-1)
        if comps.size < 1:
            raise ValueError("state must have dimension at least 1")
        object.__setattr__(self, "components", comps)

    @property
    def dim(self) -> int:
        return self.components.size


@dataclass(frozen=True)
class FiniteOperator:
    """A dense N x N complex matrix tagged with its basis."""

    basis: str
    entries: np.ndarray

    def __post_init__(self):
        if self.basis not in ("Q", "P"):
            raise ValueError(f"basis must be 'Q' or 'P', got {self.basis!r}")
        ent = np.asarray(self.entries, dtype=complex)
        if ent.ndim != 2 or ent.shape[0] != ent.shape[1] or ent.shape[0] < 1:
            raise ValueError(f"entries must be a square matrix, got shape {ent.shape}")
        object.__setattr__(self, "entries", ent)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def apply(self, state: FiniteState) -> FiniteState:
        if state.dim != self.dim:
            raise ValueError(f"dimension mismatch: operator {self.dim}, state {state.dim}")
        return FiniteState(self.basis, self.entries @ state.components)

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "basis": self.basis,
            "entries": [[v.real, v.imag] for v in self.entries.reshape(-1)],
        }


def clock_matrix(N: int) -> FiniteOperator:
    """diag(e^{2 pi i n / N}), n = 0..N-1, in the Q basis.

    Represents exp(2 pi i Q_LEFT / b): diagonal on the Q-basis states with
    the N-th roots of unity as eigenvalues.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    return FiniteOperator("Q", np.diag(np.exp(2j * np.pi * np.arange(N) / N)))


def shift_matrix(N: int) -> FiniteOperator:
    """Cyclic permutation sending basis index n to n+1 (mod N), in the Q basis.

    Represents exp(-2 pi i P_LEFT / a).  Entries are exactly 0 and 1, so its
    N-th power is exactly the identity.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    entries = np.zeros((N, N), dtype=complex)
    for j in range(N):
        entries[(j + 1) % N, j] = 1.0
    return FiniteOperator("Q", entries)


def weyl_commutation_check(N: int, tol: float = DEFAULT_TOL) -> complex:
    """The scalar omega with clock @ shift = omega * (shift @ clock).

    Determined by brute force from the matrices themselves: the two products
    have the same support and their entrywise ratio must be one constant.  A
    non-scalar ratio raises, since it would signal an implementation bug.
    omega is a primitive N-th root of unity for N > 1, and the N-th power of
    either operator commutes with the other.
    """
    C = clock_matrix(N).entries
    S = shift_matrix(N).entries
    left = C @ S
    right = S @ C
    mask = np.abs(right) > 0.5
    if not np.array_equal(mask, np.abs(left) > 0.5):
        raise RuntimeError("clock/shift products differ in support; commutator is not scalar")
    ratios = left[mask] / right[mask]
    omega = complex(ratios.flat[0])
    if np.abs(ratios - omega).max() > tol:
        raise RuntimeError("clock/shift commutator is not a scalar within tolerance")
    return omega


def dft_basis_change(N: int) -> FiniteOperator:
    """The unitary K mapping P-basis coefficient vectors to Q-basis ones.

    K[n][s] = e^{2 pi i n s / N} / sqrt(N), at the canonical m = 0
    representative, with the first Q-basis index pairing against the second
    (physical) P-basis index.  The 1/sqrt(N) scale is forced by unitarity and
    the exponent sign by the requirement that K intertwine the clock/shift
    actions of the exponentiated operators in the two bases; both choices are
    confirmed against inner products of sampled basis states on the physical
    grid (see physical_grid_overlaps).
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    idx = np.arange(N)
    entries = np.exp(2j * np.pi * np.outer(idx, idx) / N) / math.sqrt(N)
    return FiniteOperator("Q", entries)


def table1_matrices(which: GridShift, N: int) -> tuple[np.ndarray, np.ndarray]:
    """(P-basis matrix, Q-basis matrix) of one exponentiated operator on the
    physical labels.

    In the P basis the physical label is m; exp(-2 pi i P_LEFT / a) is
    diagonal with entries e^{-2 pi i m / N} and exp(2 pi i Q_LEFT / b) shifts
    m by one.  In the Q basis the physical label is n; the same operators act
    as the cyclic shift of n and the clock diagonal e^{2 pi i n / N}.  The
    right-invariant pair moves only shadow labels, hence acts as the identity
    on the physical space.
    """
    C = clock_matrix(N).entries
    S = shift_matrix(N).entries
    eye = np.eye(N, dtype=complex)
    if which is GridShift.EXP_PLEFT:
        return np.diag(np.exp(-2j * np.pi * np.arange(N) / N)), S
    if which is GridShift.EXP_QLEFT:
        return S, C
    if which is GridShift.EXP_PRIGHT:
        return eye, eye
    if which is GridShift.EXP_QRIGHT:
        return eye, eye
    raise ValueError(f"unknown grid shift {which}")


def _default_geometry(N: int, h: float = 1.0) -> TorusGeometry:
    # Symmetric quantized torus a = b = sqrt(N h).
    side = math.sqrt(N * h)
    return make_geometry(side, side, h)


# Expected (phase, shifted label) for each of the eight operator/basis cells,
# in the primed label convention for both bases.
_CELLS = (
    ("exp_pleft", GridShift.EXP_PLEFT, "P", lambda n, m, N: (np.exp(-2j * np.pi * m / N), (n, m))),
    ("exp_pleft", GridShift.EXP_PLEFT, "Q", lambda n, m, N: (1.0 + 0j, (n + 1, m))),
    ("exp_qleft", GridShift.EXP_QLEFT, "P", lambda n, m, N: (1.0 + 0j, (n, m + 1))),
    ("exp_qleft", GridShift.EXP_QLEFT, "Q", lambda n, m, N: (np.exp(2j * np.pi * n / N), (n, m))),
    ("exp_pright", GridShift.EXP_PRIGHT, "P", lambda n, m, N: (1.0 + 0j, (n + 1, m))),
    ("exp_pright", GridShift.EXP_PRIGHT, "Q", lambda n, m, N: (np.exp(-2j * np.pi * m / N), (n, m))),
    ("exp_qright", GridShift.EXP_QRIGHT, "P", lambda n, m, N: (np.exp(2j * np.pi * n / N), (n, m))),
    ("exp_qright", GridShift.EXP_QRIGHT, "Q", lambda n, m, N: (1.0 + 0j, (n, m + 1))),
)


def table1_verify(N: int, M: int | None = None, h: float = 1.0) -> list[CheckResult]:
    """Verify all eight operator/basis action cells as grid identities.

    For every label pair (n, m) in [0, N)^2 and each exponentiated operator,
    the sampled primed basis state is pushed through grid_shift_operator and
    compared with the tabulated phase times the sampled state with the
    shifted (unreduced) label.  Runs on the physical grid M = N by default,
    where the label equivalences hold exactly on samples.  Failures are
    reported, not raised.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    geometry = _default_geometry(N, h)
    if M is None:
        M = N
    results = []
    for opname, which, basis, expected in _CELLS:
        factory = make_torus_P_basis if basis == "P" else make_torus_Q_basis
        worst = 0.0
        for n in range(N):
            for m in range(N):
                state = sample(factory(geometry, n, m, primed=True), geometry, M)
                moved = grid_shift_operator(which, state)
                phase, (n2, m2) = expected(n, m, N)
                target = sample(factory(geometry, n2, m2, primed=True), geometry, M)
                worst = max(worst, float(np.abs(moved.values - phase * target.values).max()))
        results.append(
            CheckResult(
                name=f"table1/{opname}/{basis}-basis",
                params={"N": N, "M": M, "h": h},
                max_residual=worst,
                tolerance=DEFAULT_TOL,
                passed=worst <= DEFAULT_TOL,
            )
        )
    return results


def physical_grid_overlaps(N: int, h: float = 1.0) -> np.ndarray:
    """Inner products O[n, s, r] = <sampled Q-basis n, m=0 | sampled P-basis s, r>
    on the physical grid M = N, both bases in the primed convention.

    This is the independent oracle for dft_basis_change: the overlaps equal
    e^{2 pi i n r / N} / N for every shadow index s, i.e. K[n][r] / sqrt(N).
    """
    geometry = _default_geometry(N, h)
    out = np.zeros((N, N, N), dtype=complex)
    qs = [sample(make_torus_Q_basis(geometry, n, 0, primed=True), geometry, N) for n in range(N)]
    for s in range(N):
        for r in range(N):
            ph = sample(make_torus_P_basis(geometry, s, r, primed=True), geometry, N)
            for n in range(N):
                out[n, s, r] = inner_product(qs[n], ph)
    return out


def grid_matrix_elements(which: GridShift, N: int, h: float = 1.0) -> np.ndarray:
    """Matrix elements <sampled Q-basis n, 0 | operator | sampled Q-basis n', 0>
    on the physical grid M = N; reproduces the clock/shift entries."""
    geometry = _default_geometry(N, h)
    states = [sample(make_torus_Q_basis(geometry, n, 0, primed=True), geometry, N) for n in range(N)]
    out = np.zeros((N, N), dtype=complex)
    for col, st in enumerate(states):
        moved = grid_shift_operator(which, st)
        for row, bra in enumerate(states):
            out[row, col] = inner_product(bra, moved)
    return out


def trace_obstruction_demo(N: int, trials: int = 100, seed: int = 0) -> CheckResult:
    """Demonstrate that [A, B] = i hbar I has no finite-dimensional solution.

    For random N x N pairs the commutator trace vanishes identically (up to
    roundoff relative to the Frobenius norms), while the identity would need
    trace i hbar N != 0.
    """
    if N < 1:
        raise ValueError(f"N must be at least 1, got {N}")
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(trials):
        A = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
        B = rng.standard_normal((N, N)) + 1j * rng.standard_normal((N, N))
        resid = abs(np.trace(A @ B - B @ A)) / (np.linalg.norm(A) * np.linalg.norm(B))
        worst = max(worst, float(resid))
    return CheckResult(
        name="trace_obstruction",
        params={
            "N": N,
            "trials": trials,
            "seed": seed,
            "note": "tr[A,B]=0 for all finite pairs; [A,B]=i*hbar*I would need trace i*hbar*N",
        },
        max_residual=worst,
        tolerance=TRACE_TOL,
        passed=worst <= TRACE_TOL,
    )
