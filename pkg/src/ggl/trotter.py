"""Product-formula bridge between the discrete and analog algorithms.

Three layers:

- projector-exponential identities (exp(-i pi P) = I - 2P) that rewrite
  U_f and U_s as exponentials of E P_w and E(P_s - I);
- the first-order product formula and its error scaling, including the
  resonant schedule t = k pi hbar / E where each slice collapses exactly
  to one engine step and the error stops decaying in k;
- parameter selection (l, m, epsilon, k, t, delta) matching the analog
  runtime to an integer step count, with the analog/digital probability
  comparison and the hbar -> 0 sweep built on top.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .gfg import GfgEvolution, gfg_success_prob, hamiltonian_dense
from .grover import (
    SearchInstance,
    engine_two_level_power,
    grover_operators_dense,
    grover_success_prob,
)
from .linalg import (
    check_dense_size,
    as_complex_matrix,
    commutator,
    herm_expm,
    mat_power,
    require_hermitian,
    spectral_norm,
)

PROJECTOR_TOL = 1e-10

# relative tolerance on t E / (k hbar) = pi; the slice identity is exact
# only at resonance
RESONANCE_RTOL = 1e-12

# cross-check tolerance between the exponential-product engine and the
# closed-form rotation
ENGINE_AGREEMENT_TOL = 1e-9

_X = 4.0 * math.pi / (math.pi - 2.0)  # m + epsilon at l = 1


@dataclass(frozen=True)
class DigitizationPlan:
    """Parameters matching the analog runtime to k engine steps.

    4 pi l / (pi - 2) = m + epsilon with m the nearest odd integer;
    k = round(2 pi l sqrt(N) / (pi - 2)); t = k pi hbar / E;
    delta = max(|epsilon|, 1/sqrt(N)).
    """

    l: int
    m: int
    epsilon: float
    k: int
    t: float
    delta: float


@dataclass(frozen=True)
class TrotterErrorSample:
    k: int
    error: float
    bound: float


def exp_projector(p, angle: float) -> np.ndarray:
    """exp(-i angle P) = I + (e^{-i angle} - 1) P for a projector P."""
    p = as_complex_matrix(p)
    if np.max(np.abs(p - p.conj().T)) > PROJECTOR_TOL:
        raise ValueError("input is not Hermitian")
    if np.max(np.abs(p @ p - p)) > PROJECTOR_TOL:
        raise ValueError("input is not idempotent")
    n = p.shape[0]
    return np.eye(n, dtype=complex) + (np.exp(-1j * angle) - 1.0) * p


def uf_as_exponential(inst: SearchInstance) -> np.ndarray:
    """U_f = exp(-i pi P_w), dense."""
    check_dense_size(inst.N)
    p_w = np.zeros((inst.N, inst.N), dtype=complex)
    p_w[inst.w, inst.w] = 1.0
    return exp_projector(p_w, math.pi)


def us_as_exponential(inst: SearchInstance) -> np.ndarray:
    """U_s = exp(-i pi (P_s - I)) = e^{i pi} exp(-i pi P_s), dense."""
    check_dense_size(inst.N)
    p_s = np.full((inst.N, inst.N), 1.0 / inst.N, dtype=complex)
    return np.exp(1j * math.pi) * exp_projector(p_s, math.pi)


def trotter_product(a, b, eta: float, k: int) -> np.ndarray:
    """[exp(-i eta A / k) exp(-i eta B / k)]^k for Hermitian A, B."""
    a = require_hermitian(a)
    b = require_hermitian(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    if k < 1 or k != int(k):
        raise ValueError(f"k must be a positive integer, got {k!r}")
    scale = -1j * eta / k
    one_slice = herm_expm(a, scale) @ herm_expm(b, scale)
    return mat_power(one_slice, int(k))


def trotter_error_scan(a, b, eta: float, ks) -> list[TrotterErrorSample]:
    """Error and first-order bound of the product formula over a k-grid.

    error(k) = ||exp(-i eta (A+B)) - product(k)||, bound = eta^2 ||[A,B]|| / k.
    The bound carries no fitted prefactor; the scan reports both so the
    caller can fit one.
    """
    a = require_hermitian(a)
    b = require_hermitian(b)
    exact = herm_expm(a + b, -1j * eta)
    comm = spectral_norm(commutator(a, b))
    samples = []
    for k in ks:
        err = spectral_norm(exact - trotter_product(a, b, eta, k))
        samples.append(TrotterErrorSample(k=int(k), error=err, bound=eta * eta * comm / k))
    return samples


def resonant_error_scan(inst: SearchInstance, ks) -> list[TrotterErrorSample]:
    """Product-formula error on the resonant schedule t = k pi hbar / E.

    Each slice is then exactly one engine step, so the error is
    ||exp(-i t H / hbar) - (U_s U_f)^k||, which does not decay in k.  The
    reported bound is the nominal eta^2 ||[A,B]|| / k at eta = k pi, which
    grows with k; the point of the scan is that neither expression is small.
    """
    check_dense_size(inst.N)
    h = hamiltonian_dense(inst)
    evals, evecs = np.linalg.eigh(h)
    _, _, u_g = grover_operators_dense(inst)
    comm = commutator_norm_grover(inst)
    samples = []
    for k in ks:
        if k < 1 or k != int(k):
            raise ValueError(f"k must be a positive integer, got {k!r}")
        k = int(k)
        t = k * math.pi * inst.hbar / inst.E
        exact = (evecs * np.exp(-1j * t / inst.hbar * evals)) @ evecs.conj().T
        err = spectral_norm(exact - mat_power(u_g, k))
        eta = t * inst.E / inst.hbar
        samples.append(TrotterErrorSample(k=k, error=err, bound=eta * eta * comm / k))
    return samples


def commutator_norm_grover(inst: SearchInstance) -> float:
    """||[P_s - I, P_w]|| = sqrt(N-1)/N, in closed form."""
    return math.sqrt(inst.N - 1) / inst.N


def grover_pair_dense(inst: SearchInstance) -> tuple[np.ndarray, np.ndarray]:
    """The Hamiltonian split (A, B) = (E(P_s - I), E P_w), dense.

    A + B is the analog Hamiltonian; exp(-i pi A / E) and exp(-i pi B / E)
    are U_s and U_f.
    """
    check_dense_size(inst.N)
    n, w = inst.N, inst.w
    a = np.full((n, n), 1.0 / n, dtype=complex)
    a -= np.eye(n)
    b = np.zeros((n, n), dtype=complex)
    b[w, w] = 1.0
    return inst.E * a, inst.E * b


def select_params(inst: SearchInstance, l: int) -> DigitizationPlan:
    """Choose (m, epsilon, k, t, delta) for multiplier l.

    m is the odd integer nearest x = 4 pi l / (pi - 2) and epsilon the
    signed residual x - m.  k rounds 2 pi l sqrt(N) / (pi - 2) to the
    nearest integer (ties to even); t = k pi hbar / E.  Warns when l or m
    is not small against sqrt(N), which the error analysis assumes.
    """
    if l < 1 or l != int(l):
        raise ValueError(f"l must be a positive integer, got {l!r}")
    l = int(l)
    x = _X * l
    m = 2 * round((x - 1.0) / 2.0) + 1
    epsilon = x - m
    k_real = 0.5 * _X * l * inst.sqrt_n
    if k_real >= 2.0**53:
        raise OverflowError(
            f"step count {k_real:.6g} exceeds the exact integer range of a double"
        )
    k = round(k_real)
    t = k * math.pi * inst.hbar / inst.E
    delta = max(abs(epsilon), 1.0 / inst.sqrt_n)
    small = inst.sqrt_n / 10.0
    if l >= small or m >= small:
        warnings.warn(
            f"l={l}, m={m} not small against sqrt(N)={inst.sqrt_n:.4g}; "
            "the O(delta^2) error analysis assumes l, m << sqrt(N)",
            stacklevel=2,
        )
    return DigitizationPlan(l=l, m=m, epsilon=epsilon, k=k, t=t, delta=delta)


def digitized_engine(inst: SearchInstance, plan: DigitizationPlan) -> np.ndarray:
    """(U_s U_f)^k as a product of projector exponentials, two-level.

    Requires the resonant schedule t = k pi hbar / E, where each Trotter
    slice IS one engine step.  Builds the slice from exp_projector forms
    at angle pi, raises it to k by binary powering, and cross-checks the
    result against the closed-form rotation by k theta to 1e-9.
    """
    angle = plan.t * inst.E / (plan.k * inst.hbar)
    if abs(angle - math.pi) > RESONANCE_RTOL * math.pi:
        raise ValueError(
            f"plan is off resonance: t E / (k hbar) = {angle!r}, expected pi"
        )
    y = 1.0 / inst.sqrt_n
    p_w2 = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
    yr = y * math.sqrt(1.0 - y * y)
    p_s2 = np.array([[y * y, yr], [yr, 1.0 - y * y]], dtype=complex)
    one_slice = np.exp(1j * math.pi) * exp_projector(p_s2, math.pi) @ exp_projector(
        p_w2, math.pi
    )
    product = mat_power(one_slice, plan.k)
    closed = engine_two_level_power(inst, plan.k)
    dev = float(np.max(np.abs(product - closed)))
    if dev > ENGINE_AGREEMENT_TOL:
        raise ArithmeticError(
            f"digitized product deviates from the closed-form rotation by {dev:.3e}"
        )
    return product


@dataclass(frozen=True)
class CompareResult:
    """Analog vs digital success probability at a selected plan."""

    plan: DigitizationPlan
    p_t: float
    p_k: float
    gap: float
    delta: float


def compare_probabilities(inst: SearchInstance, l: int) -> CompareResult:
    """P(t) at the plan time vs cos^2(k theta + alpha) at the plan count.

    Meaningful in the large-N regime; warns below N = 2**10 where the
    closed-form digital probability is not yet close to the dense product.
    """
    if inst.N < 2**10:
        warnings.warn(
            f"N={inst.N} is below the asymptotic regime (N >= 2**10); "
            "the digital closed form deviates O(1/sqrt(N)) from the dense product",
            stacklevel=2,
        )
    plan = select_params(inst, l)
    p_t = gfg_success_prob(GfgEvolution(inst, plan.t))
    p_k = grover_success_prob(inst, plan.k)
    return CompareResult(
        plan=plan, p_t=p_t, p_k=p_k, gap=abs(p_k - p_t), delta=plan.delta
    )


def semiclassical_sweep(
    inst: SearchInstance, l: int, hbars
) -> list[tuple[float, float, int]]:
    """(hbar, t, k) along an hbar grid at fixed E.

    k never depends on hbar and t = k pi hbar / E scales linearly, so the
    runtime vanishes as hbar -> 0 while every probability is unchanged.
    """
    hbars = list(hbars)
    if not hbars:
        raise ValueError("hbar grid is empty")
    out = []
    for hb in hbars:
        if not hb > 0:
            raise ValueError(f"hbar must be positive, got {hb!r}")
        plan = select_params(replace(inst, hbar=float(hb)), l)
        out.append((float(hb), plan.t, plan.k))
    return out
