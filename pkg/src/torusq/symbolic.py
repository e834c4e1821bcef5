"""Exact operator algebra on polynomial-times-bilinear-phase functions of (q, p).

The closed family consists of finite sums of terms

    amplitude * prefactor(q, p) * exp(i (c0 + cq*q + cp*p + cqp*q*p) / hbar)

where the prefactor is a complex bivariate polynomial stored as a sparse map
from exponent pairs (dq, dp) to coefficients.  Four first-order operators act
inside the family:

    Q_LEFT  = q + i hbar d/dp      (left-invariant position)
    P_LEFT  = -i hbar d/dq         (left-invariant momentum)
    Q_RIGHT = i hbar d/dp          (right-invariant position)
    P_RIGHT = p + i hbar d/dq      (right-invariant momentum)

The left pair and the right pair each satisfy [Q, P] = i hbar, while every
mixed left/right commutator vanishes.  Exponentials of the four operators act
as coordinate translations combined with linear-phase multiplications, so the
family is closed under those as well.  All operations are pure functions over
immutable values; nothing here mutates shared state.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

import numpy as np

# Two phase-coefficient tuples are treated as identical when all four entries
# agree within this absolute tolerance.  Inputs are exact small rationals in
# practice; the tolerance only absorbs roundoff from arithmetic.
PHASE_MERGE_TOL = 1e-12

# Relative tolerance for the eigenvalue ratio test.  All in-scope
# eigenproblems are exact, so this only absorbs roundoff.
EIGEN_RATIO_TOL = 1e-10


class OperatorKind(Enum):
    """The four first-order operators acting on phase-space wave functions."""

    Q_LEFT = "Q_LEFT"
    P_LEFT = "P_LEFT"
    Q_RIGHT = "Q_RIGHT"
    P_RIGHT = "P_RIGHT"


@dataclass(frozen=True)
class BilinearPhaseTerm:
    """A single term amplitude * prefactor(q, p) * exp(i*phase(q, p)/hbar).

    The phase polynomial is c0 + cq*q + cp*p + cqp*q*p with real coefficients
    carrying units of action (they are divided by hbar on evaluation).  The
    prefactor maps exponent pairs (dq, dp) to complex coefficients.
    """

    amplitude: complex
    c0: float
    cq: float
    cp: float
    cqp: float
    prefactor: dict = field(default_factory=lambda: {(0, 0): 1.0 + 0.0j})
    hbar: float = 1.0

    def __post_init__(self):
        if self.hbar <= 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")
        object.__setattr__(self, "amplitude", complex(self.amplitude))
        pref = {
            (int(dq), int(dp)): complex(c)
            for (dq, dp), c in self.prefactor.items()
        }
        object.__setattr__(self, "prefactor", pref)

    @property
    def phase_key(self) -> tuple[float, float, float, float]:
        return (self.c0, self.cq, self.cp, self.cqp)

    def evaluate(self, q, p):
        """Evaluate at (q, p); accepts scalars or broadcastable numpy arrays."""
        q = np.asarray(q, dtype=float)
        p = np.asarray(p, dtype=float)
        poly = np.zeros(np.broadcast(q, p).shape, dtype=complex)
        for (dq, dp), c in self.prefactor.items():
            poly = poly + c * q**dq * p**dp
        phase = self.c0 + self.cq * q + self.cp * p + self.cqp * q * p
        out = self.amplitude * poly * np.exp(1j * phase / self.hbar)
        if out.ndim == 0:
            return complex(out)
        return out


def _merge_key(key, groups):
    """Index of the group whose phase key matches within PHASE_MERGE_TOL."""
    for i, (gkey, _) in enumerate(groups):
        if all(abs(key[j] - gkey[j]) <= PHASE_MERGE_TOL for j in range(4)):
            return i
    return -1


class WaveFunction:
    """A finite sum of BilinearPhaseTerm sharing one hbar.

    Instances are canonical: terms with matching phase tuples are merged by
    polynomial addition, zero coefficients are dropped, amplitudes are folded
    into the prefactor, and terms are sorted by (c0, cq, cp, cqp).  The zero
    wave function has an empty term list.
    """

    __slots__ = ("hbar", "terms")

    def __init__(self, terms: Iterable[BilinearPhaseTerm], hbar: float | None = None):
        terms = list(terms)
        if hbar is None:
            if not terms:
                raise ValueError("hbar is required for the empty wave function")
            hbar = terms[0].hbar
        if hbar <= 0:
            raise ValueError(f"hbar must be positive, got {hbar}")
        groups: list[tuple[tuple, dict]] = []
        for t in terms:
            if t.hbar != hbar:
                raise ValueError("all terms must share one hbar")
            if t.amplitude == 0:
                continue
            i = _merge_key(t.phase_key, groups)
            if i < 0:
                groups.append((t.phase_key, {}))
                i = len(groups) - 1
            pref = groups[i][1]
            for mon, c in t.prefactor.items():
                pref[mon] = pref.get(mon, 0j) + t.amplitude * c
        canon = []
        for key, pref in sorted(groups, key=lambda g: g[0]):
            pref = {mon: c for mon, c in sorted(pref.items()) if c != 0}
            if pref:
                canon.append(
                    BilinearPhaseTerm(1.0 + 0.0j, *key, prefactor=pref, hbar=hbar)
                )
        self.hbar = hbar
        self.terms = tuple(canon)

    @classmethod
    def zero(cls, hbar: float = 1.0) -> "WaveFunction":
        return cls([], hbar=hbar)

    @classmethod
    def single(cls, amplitude, c0, cq, cp, cqp, prefactor=None, hbar=1.0) -> "WaveFunction":
        pref = prefactor if prefactor is not None else {(0, 0): 1.0 + 0.0j}
        return cls([BilinearPhaseTerm(amplitude, c0, cq, cp, cqp, pref, hbar)])

    def is_zero(self, tol: float = 0.0) -> bool:
        return self.max_abs_coeff() <= tol

    def max_abs_coeff(self) -> float:
        """Largest coefficient magnitude over all terms and monomials."""
        best = 0.0
        for t in self.terms:
            for c in t.prefactor.values():
                best = max(best, abs(c))
        return best

    def evaluate(self, q, p):
        """Pointwise value; accepts scalars or broadcastable numpy arrays."""
        q = np.asarray(q, dtype=float)
        p = np.asarray(p, dtype=float)
        out = np.zeros(np.broadcast(q, p).shape, dtype=complex)
        for t in self.terms:
            out = out + t.evaluate(q, p)
        if out.ndim == 0:
            return complex(out)
        return out

    def scale(self, factor: complex) -> "WaveFunction":
        factor = complex(factor)
        if factor == 0:
            return WaveFunction.zero(self.hbar)
        return WaveFunction(
            [
                BilinearPhaseTerm(factor, *t.phase_key, prefactor=t.prefactor, hbar=self.hbar)
                for t in self.terms
            ],
            hbar=self.hbar,
        )

    def __add__(self, other: "WaveFunction") -> "WaveFunction":
        if self.hbar != other.hbar:
            raise ValueError("cannot add wave functions with different hbar")
        return WaveFunction(list(self.terms) + list(other.terms), hbar=self.hbar)

    def __sub__(self, other: "WaveFunction") -> "WaveFunction":
        return self + other.scale(-1.0)

    def __mul__(self, factor) -> "WaveFunction":
        return self.scale(factor)

    __rmul__ = __mul__

    def max_coeff_residual(self, other: "WaveFunction") -> float:
        """Largest coefficient of (self - other); zero iff coefficient-equal."""
        return (self - other).max_abs_coeff()

    # -- canonical JSON serialization ------------------------------------

    def to_dict(self) -> dict:
        return {
            "hbar": self.hbar,
            "terms": [
                {
                    "amp": [t.amplitude.real, t.amplitude.imag],
                    "c0": t.c0,
                    "cq": t.cq,
                    "cp": t.cp,
                    "cqp": t.cqp,
                    "prefactor": [
                        [dq, dp, c.real, c.imag]
                        for (dq, dp), c in sorted(t.prefactor.items())
                    ],
                }
                for t in self.terms
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "WaveFunction":
        hbar = float(data["hbar"])
        terms = []
        for td in data["terms"]:
            pref = {(dq, dp): complex(re, im) for dq, dp, re, im in td["prefactor"]}
            terms.append(
                BilinearPhaseTerm(
                    complex(td["amp"][0], td["amp"][1]),
                    td["c0"], td["cq"], td["cp"], td["cqp"],
                    prefactor=pref, hbar=hbar,
                )
            )
        return cls(terms, hbar=hbar)

    @classmethod
    def from_json(cls, text: str) -> "WaveFunction":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        return f"WaveFunction({len(self.terms)} terms, hbar={self.hbar})"


# -- the four operators ---------------------------------------------------

def apply_operator(kind: OperatorKind, wf: WaveFunction) -> WaveFunction:
    """Apply one of the four operators, exactly.

    Differentiation lowers prefactor exponents and pulls down the phase
    gradient; multiplication by q or p raises the polynomial degree by one.
    The coefficient arithmetic below is fused so that no division by hbar
    ever occurs, which keeps results exact for exactly representable inputs.
    """
    out_terms = []
    for t in wf.terms:
        c0, cq, cp, cqp = t.phase_key
        hbar = t.hbar
        pref: dict = {}

        def acc(mon, val):
            if val != 0:
                pref[mon] = pref.get(mon, 0j) + val

        for (a, b), c in t.prefactor.items():
            if kind is OperatorKind.Q_LEFT:
                # (q (1 - cqp) - cp) P + i hbar dP/dp
                acc((a + 1, b), c * (1.0 - cqp))
                acc((a, b), -c * cp)
                if b:
                    acc((a, b - 1), c * (1j * hbar * b))
            elif kind is OperatorKind.P_LEFT:
                # (cq + cqp p) P - i hbar dP/dq
                acc((a, b), c * cq)
                acc((a, b + 1), c * cqp)
                if a:
                    acc((a - 1, b), -c * (1j * hbar * a))
            elif kind is OperatorKind.Q_RIGHT:
                # i hbar dP/dp - (cp + cqp q) P
                acc((a, b), -c * cp)
                acc((a + 1, b), -c * cqp)
                if b:
                    acc((a, b - 1), c * (1j * hbar * b))
            elif kind is OperatorKind.P_RIGHT:
                # (p (1 - cqp) - cq) P + i hbar dP/dq
                acc((a, b + 1), c * (1.0 - cqp))
                acc((a, b), -c * cq)
                if a:
                    acc((a - 1, b), c * (1j * hbar * a))
            else:  # pragma: no cover
                raise ValueError(f"unknown operator kind {kind}")
        if pref:
            out_terms.append(
                BilinearPhaseTerm(1.0 + 0.0j, c0, cq, cp, cqp, prefactor=pref, hbar=hbar)
            )
    return WaveFunction(out_terms, hbar=wf.hbar)


def commutator_apply(kind_a: OperatorKind, kind_b: OperatorKind, wf: WaveFunction) -> WaveFunction:
    """(AB - BA) wf, computed symbolically.

    Equals i*hbar*wf for (Q_LEFT, P_LEFT) and (Q_RIGHT, P_RIGHT), and the zero
    wave function for every mixed left/right pair.  Expects a canonical,
    nonzero wave function.
    """
    ab = apply_operator(kind_a, apply_operator(kind_b, wf))
    ba = apply_operator(kind_b, apply_operator(kind_a, wf))
    return ab - ba


def differentiate(wf: WaveFunction, var: str) -> WaveFunction:
    """Exact partial derivative d/dq or d/dp of a family member.

    Provided separately from apply_operator so that covariant-derivative
    identities can be assembled through an independent code path.
    """
    if var not in ("q", "p"):
        raise ValueError(f"var must be 'q' or 'p', got {var!r}")
    out_terms = []
    for t in wf.terms:
        c0, cq, cp, cqp = t.phase_key
        hbar = t.hbar
        pref: dict = {}

        def acc(mon, val):
            if val != 0:
                pref[mon] = pref.get(mon, 0j) + val

        for (a, b), c in t.prefactor.items():
            if var == "q":
                # dP/dq + (i/hbar)(cq + cqp p) P
                if a:
                    acc((a - 1, b), a * c)
                acc((a, b), c * (1j * cq / hbar))
                acc((a, b + 1), c * (1j * cqp / hbar))
            else:
                if b:
                    acc((a, b - 1), b * c)
                acc((a, b), c * (1j * cp / hbar))
                acc((a + 1, b), c * (1j * cqp / hbar))
        if pref:
            out_terms.append(
                BilinearPhaseTerm(1.0 + 0.0j, c0, cq, cp, cqp, prefactor=pref, hbar=hbar)
            )
    return WaveFunction(out_terms, hbar=wf.hbar)


def _translate(wf: WaveFunction, sq: float, sp: float) -> WaveFunction:
    """f(q, p) -> f(q - sq, p - sp), exactly (binomial prefactor expansion)."""
    out_terms = []
    for t in wf.terms:
        c0, cq, cp, cqp = t.phase_key
        new_c0 = c0 - cq * sq - cp * sp + cqp * sq * sp
        new_cq = cq - cqp * sp
        new_cp = cp - cqp * sq
        pref: dict = {}
        for (a, b), c in t.prefactor.items():
            for ia in range(a + 1):
                qfac = math.comb(a, ia) * (-sq) ** (a - ia)
                if qfac == 0:
                    continue
                for ib in range(b + 1):
                    pfac = math.comb(b, ib) * (-sp) ** (b - ib)
                    if pfac == 0:
                        continue
                    mon = (ia, ib)
                    pref[mon] = pref.get(mon, 0j) + c * qfac * pfac
        out_terms.append(
            BilinearPhaseTerm(
                1.0 + 0.0j, new_c0, new_cq, new_cp, cqp, prefactor=pref, hbar=t.hbar
            )
        )
    return WaveFunction(out_terms, hbar=wf.hbar)


def _multiply_linear_phase(wf: WaveFunction, sq: float, sp: float) -> WaveFunction:
    """Multiply by exp(i (sq*q + sp*p) / hbar)."""
    out_terms = [
        BilinearPhaseTerm(
            1.0 + 0.0j, t.c0, t.cq + sq, t.cp + sp, t.cqp, prefactor=t.prefactor, hbar=t.hbar
        )
        for t in wf.terms
    ]
    return WaveFunction(out_terms, hbar=wf.hbar)


def exp_operator_apply(kind: OperatorKind, coefficient: float, wf: WaveFunction) -> WaveFunction:
    """Apply the exponential of an operator as an exact affine substitution.

    With s = coefficient, the conventions are

        Q_RIGHT: exp(+i s Q_RIGHT / hbar)  f(q, p) -> f(q, p - s)
        P_LEFT:  exp(-i s P_LEFT / hbar)   f(q, p) -> f(q - s, p)
        Q_LEFT:  exp(+i s Q_LEFT / hbar)   f(q, p) -> e^{i s q/hbar} f(q, p - s)
        P_RIGHT: exp(+i s P_RIGHT / hbar)  f(q, p) -> e^{i s p/hbar} f(q - s, p)

    The sign in the P_LEFT case is chosen so that positive s shifts basis
    labels upward.  Each map agrees term by term with the operator Taylor
    series because the family is closed under translations and linear-phase
    multiplication; no input can leave the family, so there is no rejection
    path.
    """
    s = float(coefficient)
    if kind is OperatorKind.Q_RIGHT:
        return _translate(wf, 0.0, s)
    if kind is OperatorKind.P_LEFT:
        return _translate(wf, s, 0.0)
    if kind is OperatorKind.Q_LEFT:
        return _translate(_multiply_linear_phase(wf, s, 0.0), 0.0, s)
    if kind is OperatorKind.P_RIGHT:
        return _translate(_multiply_linear_phase(wf, 0.0, s), s, 0.0)
    raise ValueError(f"unknown operator kind {kind}")


def is_eigenstate(kind: OperatorKind, wf: WaveFunction, rel_tol: float = EIGEN_RATIO_TOL):
    """Eigenvalue of `kind` on `wf` when one exists, else None.

    Applies the operator and runs a ratio test over canonical coefficients:
    the result must have the same phase tuples and monomial support as the
    input with one constant complex ratio throughout.  Returns 0j when the
    operator annihilates the state.
    """
    if wf.is_zero():
        raise ValueError("eigenvalue requested for the zero wave function")
    applied = apply_operator(kind, wf)
    if applied.is_zero():
        return 0j
    if len(applied.terms) != len(wf.terms):
        return None
    lam = None
    for ta, tw in zip(applied.terms, wf.terms):
        if any(abs(ta.phase_key[i] - tw.phase_key[i]) > PHASE_MERGE_TOL for i in range(4)):
            return None
        if set(ta.prefactor) != set(tw.prefactor):
            return None
        for mon, cw in tw.prefactor.items():
            cand = ta.prefactor[mon] / cw
            if lam is None:
                lam = cand
            elif abs(cand - lam) > rel_tol * max(1.0, abs(lam)):
                return None
    return lam
