"""Rate-1 real orthogonal designs for n = 1, 2, 4, 8.

Storage is 0-based: ``matrices[k]`` is the design matrix documented as
``U_{k+1}``.  For n in {2, 4, 8} the last slot holds the identity.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

SUPPORTED_ORDERS = (1, 2, 4, 8)


class UnsupportedOrderError(ValueError):
    pass


@dataclass(frozen=True)
class OrthogonalDesign:
    n: int
    N: int
    matrices: tuple = field(repr=False)

    @property
    def rate(self):
        return self.n / self.N

    def stack(self) -> np.ndarray:
        """All design matrices as an integer array of shape (n, N, N)."""
        return np.stack(self.matrices)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _design4():
    # coordinate derivatives of
    #   [ x4 -x3  x2 -x1]
    #   [ x3  x4 -x1 -x2]
    #   [-x2  x1  x4 -x3]
    #   [ x1  x2  x3  x4]
    pattern = [
        [(4, 1), (3, -1), (2, 1), (1, -1)],
        [(3, 1), (4, 1), (1, -1), (2, -1)],
        [(2, -1), (1, 1), (4, 1), (3, -1)],
        [(1, 1), (2, 1), (3, 1), (4, 1)],
    ]
    mats = np.zeros((4, 4, 4), dtype=np.int64)
    for i, row in enumerate(pattern):
        for j, (k, s) in enumerate(row):
            mats[k - 1, i, j] = s
    return mats


def _cayley_dickson(a, b):
    """Product of two hypercomplex numbers given as integer coordinate arrays."""
    n = len(a)
    if n == 1:
        return a * b
    h = n // 2
    a1, a2, b1, b2 = a[:h], a[h:], b[:h], b[h:]
    conj = lambda x: np.concatenate([x[:1], -x[1:]])
    # (a1, a2)(b1, b2) = (a1 b1 - b2* a2, b2 a1 + a2 b1*)
    return np.concatenate([
        _cayley_dickson(a1, b1) - _cayley_dickson(conj(b2), a2),
        _cayley_dickson(b2, a1) + _cayley_dickson(a2, conj(b1)),
    ])


def _left_multiplication(n):
    """Left-multiplication matrices of the unit basis elements of the n-dim
    Cayley-Dickson algebra (reals, complex numbers, quaternions, octonions)."""
    eye = np.eye(n, dtype=np.int64)
    mats = np.zeros((n, n, n), dtype=np.int64)
    for k in range(n):
        for j in range(n):
            mats[k, :, j] = _cayley_dickson(eye[k], eye[j])
    # imaginary units first, real unit (identity) in the last slot
    return np.concatenate([mats[1:], mats[:1]])


def make_design(n: int) -> OrthogonalDesign:
    """Return a rate-1 real orthogonal design of order ``n``.

    n=4 is the quaternion-type design whose matrices are the coordinate
    derivatives of the 4x4 matrix in ``_design4``; n=2 is multiplication by
    ``i`` and 1 on the complex numbers; n=8 is octonion left multiplication.
    """
    if n not in SUPPORTED_ORDERS:
        raise UnsupportedOrderError(
            f"rate-1 real orthogonal designs exist only for n in {SUPPORTED_ORDERS}, got {n!r}")
    if n == 4:
        mats = _design4()
    else:
        mats = _left_multiplication(n)
    return OrthogonalDesign(n=n, N=n, matrices=tuple(m.copy() for m in mats))


def evaluate(d: OrthogonalDesign, v) -> np.ndarray:
    """The linear combination sum_k v_k U_k."""
    v = np.asarray(v)
    if v.shape != (d.n,):
        raise ValueError(f"expected a vector of length {d.n}, got shape {v.shape}")
    return np.tensordot(v, d.stack(), axes=1)


def _as_object(a):
    return np.asarray(a).astype(object)


def verify_design(d: OrthogonalDesign) -> list[Check]:
    """Run every design invariant in exact integer arithmetic.

    Failures are reported as entries, never raised.
    """
    mats = [np.asarray(m) for m in d.matrices]
    eye = np.eye(d.N, dtype=np.int64)
    checks = []

    shapes_ok = len(mats) == d.n and all(m.shape == (d.N, d.N) for m in mats)
    checks.append(Check("shape", shapes_ok, f"{len(mats)} matrices of side {d.N}"))
    if not shapes_ok:
        return checks

    entry_ok = all(np.isin(m, (-1, 0, 1)).all() for m in mats)
    checks.append(Check("entry_range", entry_ok, "entries in {-1, 0, +1}"))

    orth_ok = all(np.array_equal(_as_object(m).T.dot(_as_object(m)), eye) for m in mats)
    checks.append(Check("orthogonal", orth_ok, "U_k^T U_k = I"))

    # U(v)^T U(v) = |v|^2 I for all v  <=>  U_k^T U_l + U_l^T U_k = 2 delta_kl I
    sim_ok = True
    for k, l in itertools.combinations_with_replacement(range(d.n), 2):
        a, b = _as_object(mats[k]), _as_object(mats[l])
        target = 2 * eye if k == l else 0 * eye
        if not np.array_equal(a.T.dot(b) + b.T.dot(a), target):
            sim_ok = False
            break
    checks.append(Check("similarity", sim_ok, "U(v)^T U(v) = |v|^2 I"))

    checks.append(Check("rate_one", d.n == d.N, f"rate {d.n}/{d.N}"))

    one_per_line = all(
        (np.count_nonzero(m, axis=0) == 1).all() and (np.count_nonzero(m, axis=1) == 1).all()
        for m in mats)
    checks.append(Check("signed_permutation", one_per_line,
                        "one nonzero per row and column"))

    nnz = int(sum(np.count_nonzero(m) for m in mats))
    checks.append(Check("nonzero_count", nnz == d.n ** 2, f"{nnz} nonzero entries, expected {d.n ** 2}"))
    return checks


def all_passed(report) -> bool:
    return all(c.passed for c in report)
