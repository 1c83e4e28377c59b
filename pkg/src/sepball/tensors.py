"""Design tensors, the order-4/order-3 extremal tensors and injective-norm search.

Tensor indices are 0-based in storage.  Index ``a`` on an axis-3 tensor is the
basis vector f_{a+1}; on an axis-n design tensor it selects U_{a+1}.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from .designs import OrthogonalDesign, make_design

DEFAULT_COMPONENT_BUDGET = 2 ** 24
BUDGET_ENV = "SEPBALL_COMPONENT_BUDGET"


class ResourceLimitError(RuntimeError):
    pass


def component_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_COMPONENT_BUDGET


def check_budget(axis: int, order: int, budget: int | None = None):
    budget = component_budget() if budget is None else budget
    size = axis ** order
    if size > budget:
        raise ResourceLimitError(
            f"tensor with {axis}^{order} = {size} components exceeds the budget of {budget}")


@dataclass(frozen=True, eq=False)
class DenseTensor:
    """Order-m tensor with a common axis size.

    ``data`` has shape ``(axis,) * order``; integer dtypes are exact.
    """
    data: np.ndarray

    @property
    def order(self) -> int:
        return self.data.ndim

    @property
    def axis(self) -> int:
        return self.data.shape[0] if self.data.ndim else 1

    @property
    def components(self) -> np.ndarray:
        """Flat row-major component list."""
        return self.data.reshape(-1)

    @property
    def is_exact(self) -> bool:
        return self.data.dtype.kind in "iu" or self.data.dtype == object

    def __getitem__(self, index):
        return self.data[index]

    def __eq__(self, other):
        if not isinstance(other, DenseTensor):
            return NotImplemented
        return self.data.shape == other.data.shape and bool(np.array_equal(self.data, other.data))

    def __truediv__(self, c):
        return DenseTensor(self.data / c)

    def __mul__(self, c):
        return DenseTensor(self.data * c)

    __rmul__ = __mul__

    def __call__(self, *vectors) -> float:
        """Evaluate the multilinear form on ``order`` vectors."""
        if len(vectors) != self.order:
            raise ValueError(f"expected {self.order} vectors, got {len(vectors)}")
        return _evaluate(self.data, [np.asarray(v) for v in vectors])

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self.data))


def _signed_basis(w, N):
    w = np.asarray(w)
    if w.shape != (N,):
        raise ValueError(f"expected a vector of length {N}, got shape {w.shape}")
    if not np.isin(w, (-1, 0, 1)).all() or np.count_nonzero(w) != 1:
        raise ValueError("boundary vectors must be signed basis vectors")
    j = int(np.flatnonzero(w)[0])
    return j, int(w[j])


def design_tensor(d: OrthogonalDesign, w_i, w_f, m: int, budget: int | None = None) -> DenseTensor:
    """Components w_i^T U_{a_1} ... U_{a_m} w_f for all index tuples.

    Every U_k is a signed permutation, so each partial product applied to
    ``w_f`` stays a signed basis vector; it is tracked as an (index, sign)
    pair per tuple, which keeps the computation exact and O(n^m).
    """
    if m < 0:
        raise ValueError("order must be nonnegative")
    check_budget(d.n, m, budget)
    ji, si = _signed_basis(w_i, d.N)
    jf, sf = _signed_basis(w_f, d.N)

    U = d.stack()
    # U_a e_j = sign[a, j] * e_{target[a, j]}
    target = np.argmax(U != 0, axis=1)
    sign = np.take_along_axis(U, target[:, None, :], axis=1)[:, 0, :]

    idx = np.array(jf, dtype=np.int64)
    sgn = np.array(sf, dtype=np.int64)
    # build right to left: the newest index becomes the leading axis
    for _ in range(m):
        idx, sgn = target[:, idx], sign[:, idx] * sgn[None, ...]
    data = np.where(idx == ji, si * sgn, 0).astype(np.int64)
    return DenseTensor(data)


def restricted_tensor(m: int, variant: str, budget: int | None = None) -> DenseTensor:
    """Restriction of the n=4 design tensor to indices {1,2,3}.

    ``tilde`` uses w_f = e_4; ``hat`` uses w_f = U_1 e_4 = -e_1.
    """
    if m < 1:
        raise ValueError("order must be at least 1")
    if variant not in ("tilde", "hat"):
        raise ValueError(f"variant must be 'tilde' or 'hat', got {variant!r}")
    d = make_design(4)
    e4 = np.array([0, 0, 0, 1])
    w_f = e4 if variant == "tilde" else np.array([-1, 0, 0, 0])
    full = design_tensor(d, e4, w_f, m, budget)
    return DenseTensor(np.ascontiguousarray(full.data[(slice(0, 3),) * m]))


def boundary_tensor(m: int, budget: int | None = None) -> DenseTensor:
    """The tilde tensor for even m, the hat tensor for odd m."""
    return restricted_tensor(m, "tilde" if m % 2 == 0 else "hat", budget)


def frobenius_norm_sq(t: DenseTensor):
    if t.is_exact:
        return int(sum(int(x) * int(x) for x in t.components[t.components != 0]))
    return float(np.sum(t.data ** 2))


def closed_form_norm_sq(m: int) -> int:
    """(3^m + 3)/4 for even m, (3^m + 1)/4 for odd m."""
    if m < 1:
        raise ValueError("order must be at least 1")
    return (3 ** m + (3 if m % 2 == 0 else 1)) // 4


def parity_support(indices) -> bool:
    """True iff 1, 2, 3 occur in ``indices`` all an even or all an odd number of times.

    Indices are 1-based (values 1..4).
    """
    counts = [0, 0, 0]
    for a in indices:
        if not 1 <= a <= 4:
            raise ValueError(f"index {a} out of range 1..4")
        if a != 4:
            counts[a - 1] += 1
    parities = {c % 2 for c in counts}
    return len(parities) == 1


def t4_tensor() -> DenseTensor:
    t = np.zeros((3, 3, 3, 3), dtype=np.int64)
    for a in range(3):
        for b in range(3):
            t[a, a, b, b] = 1
            if a != b:
                t[a, b, a, b] = -1
                t[a, b, b, a] = 1
    return DenseTensor(t)


def m3_tensor() -> DenseTensor:
    t = np.zeros((3, 3, 3), dtype=np.int64)
    t[0, 0, 0] = 1
    for a in (1, 2):
        t[0, a, a] = t[a, 0, a] = t[a, a, 0] = -1
    return DenseTensor(t)


def slice_split(t: DenseTensor, position: int, k: int) -> DenseTensor:
    """Fix the (1-based) index ``position`` of an order-4 axis-3 tensor to ``k``."""
    if t.order != 4 or t.axis != 3:
        raise ValueError("slice_split needs an order-4 tensor over R^3")
    if not 1 <= position <= 4:
        raise ValueError(f"position must be in 1..4, got {position}")
    if not 1 <= k <= 3:
        raise ValueError(f"k must be in 1..3, got {k}")
    return DenseTensor(np.ascontiguousarray(np.take(t.data, k - 1, axis=position - 1)))


def dual_face_point(xi1: float, xi2: float, phi: float):
    """Unit vectors x, y, z with M(x, y, z) = 1, parametrized by two angles
    (the third is -xi1 - xi2) and a common azimuth ``phi``."""
    xi3 = -xi1 - xi2

    def vec(xi):
        return np.array([math.cos(xi), math.cos(phi) * math.sin(xi), math.sin(phi) * math.sin(xi)])

    return vec(xi1), vec(xi2), vec(xi3)


@dataclass
class InjectiveNormResult:
    value: float
    maximizers: list
    iterations: int
    converged: bool
    restarts: int


def _contract_all_but(data, vectors, skip):
    out = data
    for k in range(len(vectors) - 1, skip, -1):
        out = out @ vectors[k]
    for k in range(skip):
        out = np.tensordot(vectors[k], out, axes=([0], [0]))
    return out


def _evaluate(data, vectors):
    out = data
    for v in reversed(vectors):
        out = out @ v
    return out


def _random_unit(rng, n):
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def _ascend(data, vs, rng, max_iter, tol):
    m = data.ndim
    value = abs(float(_evaluate(data, vs)))
    for it in range(1, max_iter + 1):
        for k in range(m):
            c = _contract_all_but(data, vs, k)
            norm = np.linalg.norm(c)
            if norm < 1e-300:
                # flat direction: re-randomize this argument
                vs[k] = _random_unit(rng, data.shape[k])
            else:
                vs[k] = c / norm
        new = abs(float(_evaluate(data, vs)))
        if new - value < tol:
            return max(value, new), vs, it, True
        value = new
    return value, vs, max_iter, False


def injective_norm(t: DenseTensor, restarts: int = 32, max_iter: int = 200, tol: float = 1e-12,
                   seed=0, init=None, threads: int = 1) -> InjectiveNormResult:
    """Lower bound on max |t(v^1, ..., v^m)| over unit vectors.

    Cyclic alternating maximization: each sweep replaces v^k by the
    normalized contraction of ``t`` against the other arguments.  Restart
    ``r`` draws from its own spawned RNG stream, so the result does not
    depend on ``threads``.  ``init`` optionally replaces the random start of
    restart 0.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    data = np.asarray(t.data, dtype=float)
    if data.ndim == 0:
        return InjectiveNormResult(abs(float(data)), [], 0, True, restarts)
    streams = np.random.SeedSequence(seed).spawn(restarts)

    def run(r):
        rng = np.random.default_rng(streams[r])
        if r == 0 and init is not None:
            vs = [np.asarray(v, dtype=float) / np.linalg.norm(v) for v in init]
        else:
            vs = [_random_unit(rng, n) for n in data.shape]
        return _ascend(data, vs, rng, max_iter, tol)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(run, range(restarts)))
    else:
        results = [run(r) for r in range(restarts)]

    # first restart wins ties
    value, vs, it, converged = max(results, key=lambda res: res[0])
    return InjectiveNormResult(value, [v.copy() for v in vs], it, converged, restarts)
