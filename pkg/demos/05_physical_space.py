"""The N-dimensional physical Hilbert space.

Exponentiated operators shift the torus basis labels; labels shifted by N,
or differing only in the shadow index m, describe physically equivalent
states.  Fixing canonical representatives (m = 0, n mod N) leaves an
N-dimensional space where

  exp(2 pi i Q_LEFT / b)  -> the clock matrix diag(e^{2 pi i n / N}),
  exp(-2 pi i P_LEFT / a) -> the cyclic shift matrix,

which obey the finite Weyl relation clock @ shift = omega shift @ clock with
omega a primitive N-th root of unity.  A discrete Fourier matrix connects
the Q and P bases; its normalization 1/sqrt(N) is forced by unitarity and
confirmed by inner products of sampled basis states on the N x N grid.
"""

import numpy as np

from torusq import (
    GridShift,
    clock_matrix,
    dft_basis_change,
    grid_matrix_elements,
    physical_grid_overlaps,
    shift_matrix,
    table1_matrices,
    table1_verify,
    trace_obstruction_demo,
    weyl_commutation_check,
)

N = 4
print(f"physical dimension N = {N}")
print("\nclock matrix:")
with np.printoptions(precision=3, suppress=True):
    print(clock_matrix(N).entries)
print("shift matrix:")
print(shift_matrix(N).entries.real.astype(int))

omega = weyl_commutation_check(N)
print("\nWeyl phase omega =", omega, " (omega^N =", omega**N, ")")

# The full eight-cell action table, verified as grid identities on the
# physical N x N grid where the label equivalences are exact.
print("\naction-table verification:")
for res in table1_verify(N):
    print(f"  {res.name:32s} residual {res.max_residual:.2e}  pass={res.passed}")

# Matrix elements of the grid operators between sampled basis states
# reproduce the clock and shift entries.
me = grid_matrix_elements(GridShift.EXP_PLEFT, N)
print("\n|grid matrix elements - shift| max:",
      np.abs(me - shift_matrix(N).entries).max())

# The basis change: unitary, and intertwines the two representations.
K = dft_basis_change(N).entries
print("\n|K^H K - I| max:", np.abs(K.conj().T @ K - np.eye(N)).max())
for which in GridShift:
    mp, mq = table1_matrices(which, N)
    print(f"  intertwining residual for {which.name}:", np.abs(K @ mp - mq @ K).max())

# The inner-product oracle: overlaps of sampled basis states on the N x N
# grid equal K / sqrt(N) entrywise, for every shadow index s.
overlaps = physical_grid_overlaps(N)
resid = max(np.abs(overlaps[:, s, :] - K / np.sqrt(N)).max() for s in range(N))
print("grid-overlap oracle residual:", resid)

# Why the unexponentiated pair cannot survive: any finite commutator is
# traceless, but [Q, P] = i hbar would need trace i hbar N.
res = trace_obstruction_demo(N, trials=50)
print("\ntrace obstruction residual over 50 random pairs:", res.max_residual)
