"""m-qubit matrices obtained from lifted tensors through the Pauli isometry.

Qubit 1 (the first tensor index) is the leftmost Kronecker factor, i.e. the
most significant bit of the row index.

Exact matrices carry integer real and imaginary parts over one positive
denominator; spectra and distances are evaluated in double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cone import LiftedElement, ProductDecomposition, boundary_element, witness_element
from .tensors import ResourceLimitError

DEFAULT_MAX_QUBITS = 8

# (real part, imaginary part) of sigma_0..sigma_3
_PAULI = (
    (np.array([[1, 0], [0, 1]]), np.zeros((2, 2), dtype=np.int64)),
    (np.array([[0, 1], [1, 0]]), np.zeros((2, 2), dtype=np.int64)),
    (np.zeros((2, 2), dtype=np.int64), np.array([[0, -1], [1, 0]])),
    (np.array([[1, 0], [0, -1]]), np.zeros((2, 2), dtype=np.int64)),
)


class NonConvergenceError(RuntimeError):
    pass


def pauli(k: int) -> np.ndarray:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be 0..3, got {k!r}")
    re, im = _PAULI[k]
    return re + 1j * im


@dataclass(frozen=True, eq=False)
class HermitianMatrix:
    """Exact Hermitian matrix (re + i*im) / denominator with integer re, im."""
    re: np.ndarray
    im: np.ndarray
    denominator: int = 1

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    @classmethod
    def identity(cls, dim: int) -> "HermitianMatrix":
        return cls(np.eye(dim, dtype=np.int64), np.zeros((dim, dim), dtype=np.int64))

    def to_numpy(self) -> np.ndarray:
        return (self.re + 1j * self.im) / self.denominator

    def is_hermitian(self) -> bool:
        return np.array_equal(self.re, self.re.T) and np.array_equal(self.im, -self.im.T)

    def trace(self) -> Fraction:
        return Fraction(int(np.trace(self.re)), self.denominator)

    def reduced(self) -> "HermitianMatrix":
        vals = np.unique(np.abs(np.concatenate([self.re.ravel(), self.im.ravel()])))
        g = math.gcd(self.denominator, *(int(v) for v in vals))
        return HermitianMatrix(self.re // g, self.im // g, self.denominator // g)

    def scale(self, c) -> "HermitianMatrix":
        c = Fraction(c)
        if c < 0:
            return HermitianMatrix(-self.re, -self.im, self.denominator).scale(-c)
        return HermitianMatrix(self.re * c.numerator, self.im * c.numerator,
                               self.denominator * c.denominator).reduced()

    def common_denominator(self, denominator: int):
        """Integer (re, im) numerators over ``denominator``; it must be a multiple
        of the reduced denominator."""
        red = self.reduced()
        if denominator % red.denominator:
            raise ValueError(f"{denominator} is not a multiple of {red.denominator}")
        f = denominator // red.denominator
        return red.re * f, red.im * f

    def __eq__(self, other):
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return (self.re.shape == other.re.shape
                and np.array_equal(self.re * other.denominator, other.re * self.denominator)
                and np.array_equal(self.im * other.denominator, other.im * self.denominator))


@dataclass(frozen=True)
class ProductState:
    """Product of single-qubit states (I + u.sigma)/2, one Bloch vector per qubit."""
    bloch: tuple

    @property
    def factors(self):
        return [(np.eye(2) + sum(u[k] * pauli(k + 1) for k in range(3))) / 2 for u in self.bloch]

    def matrix(self) -> np.ndarray:
        out = np.ones((1, 1))
        for f in self.factors:
            out = np.kron(out, f)
        return out


def _check_qubits(m, max_qubits):
    limit = DEFAULT_MAX_QUBITS if max_qubits is None else max_qubits
    if m > limit:
        raise ResourceLimitError(f"{m} qubits exceeds the configured maximum of {limit}")


def _gauss_kron(a, b):
    (ar, ai), (br, bi) = a, b
    return np.kron(ar, br) - np.kron(ai, bi), np.kron(ar, bi) + np.kron(ai, br)


def _pauli_sum(nums: np.ndarray):
    """sum_alpha nums[alpha] sigma_{alpha_1} (x) ... (x) sigma_{alpha_m} as (re, im)."""
    if nums.ndim == 0:
        return np.array([[int(nums)]], dtype=np.int64), np.zeros((1, 1), dtype=np.int64)
    size = 2 ** nums.ndim
    re = np.zeros((size, size), dtype=np.int64)
    im = np.zeros((size, size), dtype=np.int64)
    for a in range(4):
        sub = nums[a]
        if not sub.any():
            continue
        kr, ki = _gauss_kron(_PAULI[a], _pauli_sum(sub))
        re += kr
        im += ki
    return re, im


def isometry_lift(t: LiftedElement, max_qubits: int | None = None) -> HermitianMatrix:
    """2^{-m/2} I^{(x)m}(t) = 2^{-m} sum_alpha t_alpha sigma_{alpha_1} (x) ... (x) sigma_{alpha_m}."""
    m = t.order
    _check_qubits(m, max_qubits)
    re, im = _pauli_sum(t.numerators)
    return HermitianMatrix(re, im, t.denominator * 2 ** m).reduced()


def build_state(m: int, max_qubits: int | None = None) -> HermitianMatrix:
    """Separable m-qubit state with entangled states arbitrarily close to it."""
    _check_qubits(m, max_qubits)
    return isometry_lift(boundary_element(m), max_qubits)


def witness_operator(m: int, max_qubits: int | None = None) -> HermitianMatrix:
    """Witness W with tr(W rho_m) = 0, tr(W P) >= 0 on product states and
    tr(W / 2^m) = 1."""
    _check_qubits(m, max_qubits)
    lifted = isometry_lift(witness_element(m), max_qubits)
    return lifted.scale(2 ** m)


def maximally_mixed(m: int) -> HermitianMatrix:
    return HermitianMatrix(np.eye(2 ** m, dtype=np.int64),
                           np.zeros((2 ** m, 2 ** m), dtype=np.int64), 2 ** m)


def trace_product(a: HermitianMatrix, b: HermitianMatrix) -> Fraction:
    """Exact tr(a b); real for Hermitian arguments."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    ar, ai = a.re.astype(object), a.im.astype(object)
    num = int(np.sum(ar * b.re.T)) - int(np.sum(ai * b.im.T))
    return Fraction(num, a.denominator * b.denominator)


def frobenius_distance(a, b) -> float:
    """sqrt(tr((a - b)^2)); exact squared distance when both are exact."""
    if isinstance(a, HermitianMatrix) and isinstance(b, HermitianMatrix):
        if a.dim != b.dim:
            raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
        dr = a.re.astype(object) * b.denominator - b.re.astype(object) * a.denominator
        di = a.im.astype(object) * b.denominator - b.im.astype(object) * a.denominator
        sq = Fraction(int(np.sum(dr * dr) + np.sum(di * di)), (a.denominator * b.denominator) ** 2)
        return math.sqrt(sq)
    a = a.to_numpy() if isinstance(a, HermitianMatrix) else np.asarray(a)
    b = b.to_numpy() if isinstance(b, HermitianMatrix) else np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def jacobi_eigenvalues(a: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(a, dtype=float)
    n = a.shape[0]
    scale = np.linalg.norm(a)
    if n <= 1 or scale == 0:
        return np.sort(np.diag(a))
    threshold = tol * scale
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= threshold:
            return np.sort(np.diag(a))
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= threshold / n:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
    raise NonConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


def real_embedding(h: np.ndarray) -> np.ndarray:
    """[[A, -B], [B, A]] for h = A + iB; same spectrum, each eigenvalue doubled."""
    a, b = h.real, h.imag
    return np.block([[a, -b], [b, a]])


def min_eigenvalue(h, tol: float = 1e-12, max_sweeps: int = 100) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    h = h.to_numpy() if isinstance(h, HermitianMatrix) else np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError("expected a square matrix")
    if np.iscomplexobj(h) and np.any(h.imag):
        sym = real_embedding(h)
    else:
        sym = np.real(h)
    return float(jacobi_eigenvalues(sym, tol, max_sweeps)[0])


def _unit_sphere(rng):
    u = rng.standard_normal(3)
    return u / np.linalg.norm(u)


def random_product_state(seed, m: int) -> ProductState:
    """Product of m pure qubit states with Bloch vectors uniform on the sphere."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return ProductState(tuple(_unit_sphere(rng) for _ in range(m)))


def expectation(h, state: ProductState) -> float:
    """tr(h P) for a product state P, contracting one qubit at a time."""
    h = h.to_numpy() if isinstance(h, HermitianMatrix) else np.asarray(h)
    m = len(state.bloch)
    out = h.reshape((2,) * (2 * m))
    # axes: rows r_1..r_m, then columns c_1..c_m; tr(hP) = sum h[r, c] P[c, r]
    for f in state.factors:
        k = out.ndim // 2
        out = np.tensordot(out, f, axes=([0, k], [1, 0]))
    return float(np.real(out))


def min_product_expectation(h, m: int, samples: int, seed=0) -> float:
    rng = np.random.default_rng(seed)
    return min(expectation(h, random_product_state(rng, m)) for _ in range(samples))


def _factor_numerators(s: int):
    """(re, im) of sigma_0 + sign(s) sigma_|s| (index 0 means sigma_0 alone)."""
    r0, i0 = _PAULI[0]
    if s == 0:
        return r0, i0
    rk, ik = _PAULI[abs(s)]
    sign = 1 if s > 0 else -1
    return r0 + sign * rk, i0 + sign * ik


def reconstruct_from_decomposition(d: ProductDecomposition,
                                   max_qubits: int | None = None) -> HermitianMatrix:
    """Sum of weight * (x)_k 2^{-1/2} I(factor_k), each factor a qubit projector
    (sigma_0 +- sigma_a)/2."""
    _check_qubits(d.m, max_qubits)
    den = math.lcm(*(t.weight.denominator for t in d.terms))
    size = 2 ** d.m
    re = np.zeros((size, size), dtype=np.int64)
    im = np.zeros((size, size), dtype=np.int64)
    for term in d.terms:
        acc = (np.ones((1, 1), dtype=np.int64), np.zeros((1, 1), dtype=np.int64))
        for s in term.factors:
            acc = _gauss_kron(acc, _factor_numerators(s))
        w = int(term.weight * den)
        re += w * acc[0]
        im += w * acc[1]
    return HermitianMatrix(re, im, den * 2 ** d.m).reduced()
