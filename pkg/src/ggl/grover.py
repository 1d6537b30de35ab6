"""Discrete search iteration: operators, angles, success probability.

The search space is C^N with computational basis |0>..|N-1> and a single
marked index w.  The engine U_G = U_s U_f preserves span{|w>, |r>}, where
|r> is the unit vector along |s> minus its |w> component, so everything
measurable reduces to 2x2 rotations.  Dense N x N constructions are kept
only for oracle-grade cross checks at small N.

Sign convention: with U_f = I - 2 P_w and U_s = 2 P_s - I, the engine
rotates the {|w>, |r>} plane by -theta.  The exact success probability
after k steps is therefore cos^2(k theta - alpha), while the widely
quoted closed form cos^2(k theta + alpha) agrees with it to O(1/sqrt(N)).
Both are exposed; the dense product is the ground truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import check_dense_size


@dataclass(frozen=True)
class SearchInstance:
    """A search problem: size N, marked index w, energy scale, hbar."""

    N: int
    w: int = 0
    E: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError(f"N must be an integer >= 2, got {self.N!r}")
        if not isinstance(self.w, int) or not 0 <= self.w < self.N:
            raise ValueError(f"w must be an index in [0, {self.N - 1}], got {self.w!r}")
        if not self.E > 0:
            raise ValueError(f"E must be positive, got {self.E!r}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar!r}")

    @property
    def sqrt_n(self) -> float:
        # math.sqrt on the integer N stays correctly rounded past 2**53
        return math.sqrt(self.N)


@dataclass(frozen=True)
class GroverAngles:
    """theta = asin(2 sqrt(N-1)/N), alpha = acos(1/sqrt(N)), radians."""

    theta: float
    alpha: float


def grover_angles(inst: SearchInstance) -> GroverAngles:
    """The rotation angle per iteration and the initial-state angle."""
    n = inst.N
    theta = math.asin(2.0 * math.sqrt(n - 1) / n)
    alpha = math.acos(1.0 / math.sqrt(n))
    return GroverAngles(theta=theta, alpha=alpha)


def basis_overlaps(inst: SearchInstance, j: int) -> tuple[float, float]:
    """(<j|w>, <j|r>) for computational basis index j.

    |r> = (|s> - y|w>) / sqrt(1 - y^2) with y = 1/sqrt(N), so <j|r> is
    (1/sqrt(N) - delta_{jw}/sqrt(N)) / sqrt(1 - 1/N).
    """
    if not 0 <= j < inst.N:
        raise IndexError(f"index {j} out of range for N={inst.N}")
    y = 1.0 / inst.sqrt_n
    c_w = 1.0 if j == inst.w else 0.0
    c_r = (y - c_w * y) / math.sqrt(1.0 - y * y)
    return c_w, c_r


def grover_operators_dense(inst: SearchInstance):
    """Dense (U_f, U_s, U_G) built from their definitions.

    U_f = I - 2|w><w|, U_s = 2|s><s| - I, U_G = U_s U_f.  Capped at the
    dense limit; large N must use the two-level forms.
    """
    check_dense_size(inst.N)
    n, w = inst.N, inst.w
    u_f = np.eye(n, dtype=complex)
    u_f[w, w] = -1.0
    u_s = np.full((n, n), 2.0 / n, dtype=complex)
    u_s -= np.eye(n)
    return u_f, u_s, u_s @ u_f


def grover_success_prob(inst: SearchInstance, k) -> float:
    """cos^2(k theta + alpha), the quoted closed form.

    Exact only up to O(1/sqrt(N)); see engine_success_prob for the value
    the dense product actually takes.  k may be any nonnegative real so
    the rotation structure (period pi/theta) can be probed off-grid.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k!r}")
    ang = grover_angles(inst)
    return math.cos(k * ang.theta + ang.alpha) ** 2


def engine_success_prob(inst: SearchInstance, k) -> float:
    """cos^2(k theta - alpha): |<w|U_G^k|s>|^2 of the definition-built engine."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k!r}")
    ang = grover_angles(inst)
    return math.cos(k * ang.theta - ang.alpha) ** 2


def grover_state_dense(inst: SearchInstance, k: int) -> np.ndarray:
    """U_G^k |s> as a dense N-vector, via O(N) reflection updates."""
    check_dense_size(inst.N)
    if k < 0 or k != int(k):
        raise ValueError(f"k must be a nonnegative integer, got {k!r}")
    n, w = inst.N, inst.w
    state = np.full(n, 1.0 / math.sqrt(n), dtype=complex)
    for _ in range(int(k)):
        state[w] = -state[w]
        # reflection about |s>: 2<s|psi>|s> - |psi>, and <s|psi>|s> is the mean
        state = 2.0 * state.mean() - state
    return state


def engine_two_level(inst: SearchInstance) -> np.ndarray:
    """U_G restricted to the ordered basis {|w>, |r>}.

    A rotation by -theta: [[1-2y^2, 2y sqrt(1-y^2)], [-2y sqrt(1-y^2), 1-2y^2]]
    with y = 1/sqrt(N).
    """
    y = 1.0 / inst.sqrt_n
    c = 1.0 - 2.0 * y * y
    s = 2.0 * y * math.sqrt(1.0 - y * y)
    return np.array([[c, s], [-s, c]], dtype=complex)


def engine_two_level_power(inst: SearchInstance, k) -> np.ndarray:
    """U_G^k in the {|w>, |r>} basis, evaluated as the closed-form rotation.

    Robust at large k where repeated multiplication would accumulate
    rounding: the power of a rotation is the rotation by k theta.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k!r}")
    theta = grover_angles(inst).theta
    c = math.cos(k * theta)
    s = math.sin(k * theta)
    return np.array([[c, s], [-s, c]], dtype=complex)
