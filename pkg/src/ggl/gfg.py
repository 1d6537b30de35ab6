"""Analog search: evolution under H = E(P_w + P_s - I).

The Hamiltonian preserves span{|w>, |r>} and acts as a pure phase on the
complement, so the exact propagator at any N is a 2x2 block plus an
analytic complement term.  No dense matrix is ever needed beyond the
small-N oracle checks in the tests.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .grover import SearchInstance, basis_overlaps
from .linalg import check_dense_size


@dataclass(frozen=True)
class GfgEvolution:
    """Evolution of a search instance for time t (units of hbar/E)."""

    instance: SearchInstance
    t: float = 0.0

    def __post_init__(self):
        if self.t < 0:
            raise ValueError(f"t must be nonnegative, got {self.t!r}")

    @property
    def y(self) -> float:
        return 1.0 / self.instance.sqrt_n

    @property
    def angle(self) -> float:
        """E y t / hbar, the rotation angle of the two-level block."""
        inst = self.instance
        return inst.E * self.y * self.t / inst.hbar


def gfg_matrix(ev: GfgEvolution) -> np.ndarray:
    """exp(-i t H / hbar) restricted to the ordered basis {|w>, |r>}.

    [[cos - i y sin, -i sqrt(1-y^2) sin],
     [-i sqrt(1-y^2) sin, cos + i y sin]] evaluated at E y t / hbar.
    """
    y = ev.y
    c = math.cos(ev.angle)
    s = math.sin(ev.angle)
    off = -1j * math.sqrt(1.0 - y * y) * s
    return np.array(
        [[c - 1j * y * s, off], [off, c + 1j * y * s]], dtype=complex
    )


def gfg_success_prob(ev: GfgEvolution) -> float:
    """P(t) = sin^2(E y t / hbar) + y^2 cos^2(E y t / hbar)."""
    y = ev.y
    s = math.sin(ev.angle)
    c = math.cos(ev.angle)
    return s * s + y * y * c * c


def gfg_state(ev: GfgEvolution) -> tuple[complex, complex]:
    """(amp_w, amp_r) of exp(-i t H / hbar)|s>.

    amp_w = y cos - i sin, amp_r = sqrt(1-y^2) cos; |amp_w|^2 is the
    success probability.
    """
    y = ev.y
    c = math.cos(ev.angle)
    s = math.sin(ev.angle)
    return y * c - 1j * s, math.sqrt(1.0 - y * y) * c


def optimal_time(inst: SearchInstance) -> float:
    """t* = pi hbar sqrt(N) / (2 E), where the success probability is 1."""
    return math.pi * inst.hbar * inst.sqrt_n / (2.0 * inst.E)


def hamiltonian_dense(inst: SearchInstance) -> np.ndarray:
    """Dense E(P_w + P_s - I), for oracle checks at small N."""
    check_dense_size(inst.N)
    n, w = inst.N, inst.w
    h = np.full((n, n), 1.0 / n, dtype=complex)
    h[w, w] += 1.0
    h -= np.eye(n)
    return inst.E * h


def gfg_propagator_exact(inst: SearchInstance, j: int, k: int, t: float) -> complex:
    """K(j,k,t) = <j| exp(-i t H / hbar) |k>, exact at any N.

    Two-level block in {|w>, |r>} plus the complement, which evolves as
    the global phase e^{+i t E / hbar}:

        K = [c_wj, c_rj] M [c_wk, c_rk]^T
            + e^{i t E / hbar} (delta_jk - c_wj c_wk - c_rj c_rk)

    O(1) per entry; no dense matrix, so N may exceed the dense cap.
    """
    c_wj, c_rj = basis_overlaps(inst, j)
    c_wk, c_rk = basis_overlaps(inst, k)
    m = gfg_matrix(GfgEvolution(inst, t))
    block = (
        c_wj * (m[0, 0] * c_wk + m[0, 1] * c_rk)
        + c_rj * (m[1, 0] * c_wk + m[1, 1] * c_rk)
    )
    delta = 1.0 if j == k else 0.0
    complement = (delta - c_wj * c_wk - c_rj * c_rk) * cmath.exp(
        1j * t * inst.E / inst.hbar
    )
    return complex(block + complement)
