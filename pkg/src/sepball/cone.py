"""Lift tensors on R^3 into (R^4)^{(x)m} relative to the Lorentz cone.

Index 0 of every lifted axis is the cone direction e_0; indices 1..3 are the
spatial basis f_1..f_3.  All values are exact rationals, stored as an integer
numerator array over a common positive denominator.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .tensors import ResourceLimitError, boundary_tensor, check_budget

DEFAULT_TERM_LIMIT = 2 ** 16


@dataclass(frozen=True, eq=False)
class LiftedElement:
    numerators: np.ndarray
    denominator: int = 1

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")

    @property
    def order(self) -> int:
        return self.numerators.ndim

    def __getitem__(self, index) -> Fraction:
        return Fraction(int(self.numerators[index]), self.denominator)

    def to_float(self) -> np.ndarray:
        return self.numerators / self.denominator

    def reduced(self) -> "LiftedElement":
        g = math.gcd(self.denominator, *(int(x) for x in np.unique(np.abs(self.numerators))))
        return LiftedElement(self.numerators // g, self.denominator // g)

    def __eq__(self, other):
        if not isinstance(other, LiftedElement):
            return NotImplemented
        return (self.numerators.shape == other.numerators.shape
                and np.array_equal(self.numerators * other.denominator,
                                   other.numerators * self.denominator))

    def norm_sq(self) -> Fraction:
        return pairing(self, self)


def _lift(block: np.ndarray, origin: int, denominator: int) -> LiftedElement:
    m = block.ndim
    nums = np.zeros((4,) * m, dtype=np.int64)
    nums[(slice(1, 4),) * m] = block
    nums[(0,) * m] = origin
    return LiftedElement(nums, denominator)


def origin_element(m: int) -> LiftedElement:
    """e_0 (x) ... (x) e_0."""
    nums = np.zeros((4,) * m, dtype=np.int64)
    nums[(0,) * m] = 1
    return LiftedElement(nums)


def boundary_element(m: int, budget: int | None = None) -> LiftedElement:
    """The element e_0^{(x)m} + T / ||T||^2 with T the tilde (even m) or hat
    (odd m) tensor; it lies on the boundary of the separable cone L_4^{(x)m}."""
    if m < 1:
        raise ValueError("order must be at least 1")
    check_budget(4, m, budget)
    t = boundary_tensor(m, budget)
    eta = int(np.sum(t.data * t.data))
    return _lift(t.data, eta, eta)


def witness_element(m: int, budget: int | None = None) -> LiftedElement:
    """e_0^{(x)m} - T, a member of the dual cone (L_4^{(x)m})^*."""
    if m < 1:
        raise ValueError("order must be at least 1")
    check_budget(4, m, budget)
    t = boundary_tensor(m, budget)
    return _lift(-t.data, 1, 1)


def pairing(a: LiftedElement, b: LiftedElement) -> Fraction:
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    num = sum(int(x) for x in (a.numerators * b.numerators).reshape(-1)) if a.order else \
        int(a.numerators) * int(b.numerators)
    return Fraction(num, a.denominator * b.denominator)


def product_element(vectors) -> np.ndarray:
    """Outer product v^1 (x) ... (x) v^m as a float array."""
    out = np.asarray(vectors[0], dtype=float)
    for v in vectors[1:]:
        out = np.multiply.outer(out, np.asarray(v, dtype=float))
    return out


def float_pairing(a: LiftedElement, x: np.ndarray) -> float:
    return float(np.sum(a.to_float() * x))


@dataclass(frozen=True)
class DecompositionTerm:
    """weight * (1, s_1 f_{|s_1|}) (x) ... (x) (1, s_m f_{|s_m|}).

    Each factor is a signed 1-based basis index: +2 means (1, f_2), -1 means
    (1, -f_1).  Index 0 stands for the bare cone direction (1, 0, 0, 0).
    """
    weight: Fraction
    factors: tuple

    def factor_vectors(self):
        out = []
        for s in self.factors:
            v = [1, 0, 0, 0]
            if s:
                v[abs(s)] = 1 if s > 0 else -1
            out.append(v)
        return out


@dataclass(frozen=True)
class ProductDecomposition:
    m: int
    terms: tuple

    def __len__(self):
        return len(self.terms)

    def total_weight(self) -> Fraction:
        return sum((t.weight for t in self.terms), Fraction(0))

    def is_valid(self) -> bool:
        """Weights positive and summing to one; every factor a cone vector (1, +-f_a) or (1, 0)."""
        if self.total_weight() != 1 or any(t.weight <= 0 for t in self.terms):
            return False
        return all(len(t.factors) == self.m and all(abs(s) <= 3 for s in t.factors)
                   for t in self.terms)

    def to_element(self) -> LiftedElement:
        """Weighted sum of the product terms, exactly."""
        den = math.lcm(*(t.weight.denominator for t in self.terms))
        nums = np.zeros((4,) * self.m, dtype=np.int64)
        for t in self.terms:
            w = int(t.weight * den)
            prod = np.array(1, dtype=np.int64)
            for v in t.factor_vectors():
                prod = np.multiply.outer(prod, np.asarray(v, dtype=np.int64))
            nums += w * prod
        return LiftedElement(nums, den)


def even_sign_patterns(m: int):
    """Sign tuples in lexicographic order over (+1, -1)^m with product +1."""
    return [s for s in itertools.product((1, -1), repeat=m) if math.prod(s) == 1]


def separable_decomposition(m: int, term_limit: int = DEFAULT_TERM_LIMIT,
                            budget: int | None = None) -> ProductDecomposition:
    """Explicit convex decomposition of ``boundary_element(m)`` into products of
    cone-boundary vectors (1, +-f_a).

    Each nonzero component s * f_{a_1} (x) ... (x) f_{a_m} of the boundary
    tensor contributes e_0^{(x)m} + s f_{a_1} (x) ... (x) f_{a_m}, which equals
    the average of the 2^{m-1} products (1, sig_1 y^1) (x) ... (x) (1, sig_m y^m)
    over sign patterns with an even number of minus signs.  The component sign
    is absorbed into the first factor.
    """
    t = boundary_tensor(m, budget)
    support = np.argwhere(t.data != 0)
    eta = len(support)
    n_terms = eta * 2 ** (m - 1)
    if n_terms > term_limit:
        raise ResourceLimitError(
            f"decomposition would have {n_terms} terms, over the limit of {term_limit}")
    weight = Fraction(1, n_terms)
    patterns = even_sign_patterns(m)
    terms = []
    for idx in support:
        base = [int(a) + 1 for a in idx]
        base[0] *= int(t.data[tuple(idx)])
        for sig in patterns:
            terms.append(DecompositionTerm(weight, tuple(s * b for s, b in zip(sig, base))))
    return ProductDecomposition(m, tuple(terms))

