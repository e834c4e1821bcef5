"""Operators on plane phase-space wave functions.

Wave functions here live on the whole (q, p) plane.  Two commuting pairs of
operators act on them: the left-invariant pair (the physical position and
momentum) and the right-invariant pair (the shadow operators generating gauge
equivalences).  This script builds the two canonical bases, checks the
commutation relations symbolically, and shows how the exponentiated
operators shift basis labels.
"""

from torusq import (
    OperatorKind,
    apply_operator,
    commutator_apply,
    exp_operator_apply,
    is_eigenstate,
    make_plane_P_basis,
    make_plane_Q_basis,
)

Q_LEFT, P_LEFT = OperatorKind.Q_LEFT, OperatorKind.P_LEFT
Q_RIGHT, P_RIGHT = OperatorKind.Q_RIGHT, OperatorKind.P_RIGHT

# The P basis diagonalizes (P_LEFT, Q_RIGHT); the Q basis diagonalizes
# (Q_LEFT, P_RIGHT).  Labels are the eigenvalues.
phi = make_plane_P_basis(l=1.5, k=2.0)
psi = make_plane_Q_basis(l=3.0, k=2.0)

print("P-basis state  phi_{l=1.5, k=2}:")
print("  P_LEFT eigenvalue:", is_eigenstate(P_LEFT, phi))
print("  Q_RIGHT eigenvalue:", is_eigenstate(Q_RIGHT, phi))

print("Q-basis state  psi_{l=3, k=2}:")
print("  Q_LEFT eigenvalue:", is_eigenstate(Q_LEFT, psi))
print("  P_RIGHT eigenvalue:", is_eigenstate(P_RIGHT, psi))

# The Q-basis state is NOT an eigenstate of the other pair: P_LEFT pulls
# down a degree-one polynomial prefactor (p - k).
image = apply_operator(P_LEFT, psi)
print("P_LEFT on psi picks up the prefactor (p - k):", image.terms[0].prefactor)
print("  so is_eigenstate returns:", is_eigenstate(P_LEFT, psi))

# Heisenberg algebra, exactly on coefficients: both invariant pairs give
# i*hbar, all mixed pairs vanish identically.
wf = psi + phi.scale(0.5 - 0.25j)
print("\ncommutator residuals on a two-term superposition:")
print("  [Q_LEFT, P_LEFT] - i hbar:",
      commutator_apply(Q_LEFT, P_LEFT, wf).max_coeff_residual(wf.scale(1j)))
print("  [Q_RIGHT, P_RIGHT] - i hbar:",
      commutator_apply(Q_RIGHT, P_RIGHT, wf).max_coeff_residual(wf.scale(1j)))
for pair in ((Q_LEFT, P_RIGHT), (Q_RIGHT, P_LEFT), (Q_LEFT, Q_RIGHT), (P_RIGHT, P_LEFT)):
    resid = commutator_apply(*pair, wf).max_abs_coeff()
    print(f"  [{pair[0].name}, {pair[1].name}]:", resid)

# Exponentials of the shadow operators shift the Q-basis labels.  In the
# primed label convention the shift is exact on coefficients.
base = make_plane_Q_basis(l=1.0, k=0.5, primed=True)
shifted_k = exp_operator_apply(Q_RIGHT, 0.25, base)
print("\nexp(i a Q_RIGHT / hbar) shifts k by a:",
      shifted_k.max_coeff_residual(make_plane_Q_basis(1.0, 0.75, primed=True)) == 0.0)
shifted_l = exp_operator_apply(P_LEFT, 2.0, base)
print("exp(-i b P_LEFT / hbar) shifts l by b:",
      shifted_l.max_coeff_residual(make_plane_Q_basis(3.0, 0.5, primed=True)) == 0.0)
