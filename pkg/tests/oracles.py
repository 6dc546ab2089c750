"""Independent reference computations used by the tests.

None of these reuse the code paths they check: quadrature instead of closed
forms, sampling instead of sweeps, power iteration and Sylvester inertia
instead of Jacobi, companion eigenvalues instead of Aberth.
"""

import math

import numpy as np
from scipy import integrate

TWO_PI = 2 * math.pi


def quad_coefficient(arcs, k):
    """(1/2pi) * int_E exp(-ikt) dt by adaptive quadrature, arc by arc."""
    re = im = 0.0
    for s, e in arcs:
        re += integrate.quad(lambda t: math.cos(k * t), s, e, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
        im += integrate.quad(lambda t: -math.sin(k * t), s, e, epsabs=1e-13, epsrel=1e-12, limit=200)[0]
    return complex(re, im) / TWO_PI


def indicator(arcs, t):
    t = np.asarray(t) % TWO_PI
    out = np.zeros(t.shape, dtype=bool)
    for s, e in arcs:
        out |= ((t >= s) & (t <= e)) | ((t + TWO_PI >= s) & (t + TWO_PI <= e))
    return out


def monte_carlo_symdiff(arcs1, arcs2, samples=400_000, seed=0):
    t = np.random.default_rng(seed).uniform(0, TWO_PI, samples)
    return TWO_PI * float(np.mean(indicator(arcs1, t) != indicator(arcs2, t)))


def poisson_quadrature(arcs, r, t):
    """(1/2pi) int P_r(t - s) chi_E(s) ds, integrating over each arc."""
    def kernel(s):
        return (1 - r * r) / (1 - 2 * r * math.cos(t - s) + r * r)

    total = 0.0
    for a, b in arcs:
        inside = [x for x in (t, t + TWO_PI, t - TWO_PI) if a < x < b]
        total += integrate.quad(kernel, a, b, points=inside or None, limit=500,
                                epsabs=1e-11, epsrel=1e-10)[0]
    return total / TWO_PI


def coefficients_by_sampling(f, n, radius=0.3, samples=64):
    """Taylor coefficients 0..n of f from values on a circle (discrete Cauchy integral)."""
    z = radius * np.exp(2j * np.pi * np.arange(samples) / samples)
    vals = np.array([f(x) for x in z])
    coeffs = np.fft.fft(vals) / samples
    return coeffs[: n + 1] / radius ** np.arange(n + 1)


def power_iteration_norm(A, iters=5000, seed=0):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=A.shape[1]) + 1j * rng.normal(size=A.shape[1])
    x /= np.linalg.norm(x)
    G = A.conj().T @ A
    lam = 0.0
    for _ in range(iters):
        y = G @ x
        lam = np.linalg.norm(y)
        x = y / lam
    return math.sqrt(lam)


def count_eigenvalues_below(H, x):
    """Number of eigenvalues of Hermitian H below x, from the LDL* pivot signs of H - xI."""
    A = np.array(H, dtype=complex) - x * np.eye(H.shape[0])
    count = 0
    for k in range(A.shape[0]):
        piv = A[k, k].real
        if piv < 0:
            count += 1
        if k + 1 < A.shape[0]:
            A[k + 1 :, k + 1 :] -= np.outer(A[k + 1 :, k], A[k, k + 1 :]) / piv
    return count


def companion_roots(coeffs_low_first):
    return np.roots(np.asarray(coeffs_low_first)[::-1])
