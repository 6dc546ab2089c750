"""Polynomials in the monomial basis 1, z, ..., z^d (lowest degree first)."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEGREE_FLOOR = 1e-10


def effective_degree(p, floor: float = DEGREE_FLOOR) -> int:
    """Largest k with ``|p[k]| > floor * max|p|``; -1 for the zero polynomial."""
    c = np.abs(np.asarray(getattr(p, "coeffs", p), dtype=complex))
    if c.size == 0:
        return -1
    top = c.max()
    if top == 0.0:
        return -1
    idx = np.nonzero(c > floor * top)[0]
    return int(idx[-1])


@dataclass(frozen=True, eq=False)
class Polynomial:
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex).reshape(-1)
        if c.size == 0:
            c = np.zeros(1, dtype=complex)
        object.__setattr__(self, "coeffs", c)

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __call__(self, z):
        return np.polyval(self.coeffs[::-1], z)

    def degree(self, floor: float = DEGREE_FLOOR) -> int:
        return effective_degree(self.coeffs, floor)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def trimmed(self, floor: float = DEGREE_FLOOR) -> "Polynomial":
        """Drop coefficients above the effective degree."""
        d = self.degree(floor)
        return Polynomial(self.coeffs[: max(d, 0) + 1])

    def padded(self, size: int) -> np.ndarray:
        if self.coeffs.size > size:
            raise ValueError(f"polynomial of length {self.coeffs.size} does not fit in {size}")
        out = np.zeros(size, dtype=complex)
        out[: self.coeffs.size] = self.coeffs
        return out

    def __add__(self, other):
        size = max(len(self), len(other))
        return Polynomial(self.padded(size) + other.padded(size))

    def __sub__(self, other):
        size = max(len(self), len(other))
        return Polynomial(self.padded(size) - other.padded(size))

    def __mul__(self, scalar):
        return Polynomial(self.coeffs * scalar)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Polynomial({np.array2string(self.coeffs, precision=6)})"
