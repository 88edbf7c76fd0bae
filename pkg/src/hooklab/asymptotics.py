"""Asymptotic main terms, limit constants and near-cusp evaluations.

All floating point is IEEE double.  Main terms are carried in log space so
that ratios against exact big-integer counts never overflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .oracle import Kind
from .qseries import b_factor_terms

EULER_GAMMA = 0.57721566490153286061

# B_2, B_4, ..., B_14
_BERNOULLI_EVEN = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
)


def digamma(x: float) -> float:
    """psi(x) for x > 0.

    Shifts x above 10 with psi(x) = psi(x+1) - 1/x, then applies
    ln x - 1/(2x) - sum_k B_{2k} / (2k x^{2k}).
    """
    if not x > 0:
        raise ValueError(f"digamma is only defined here for x > 0, got {x}")
    shift = 0.0
    while x < 10.0:
        shift -= 1.0 / x
        x += 1.0
    inv2 = 1.0 / (x * x)
    series = 0.0
    power = inv2
    for k, b in enumerate(_BERNOULLI_EVEN, start=1):
        series += b / (2 * k) * power
        power *= inv2
    return shift + math.log(x) - 0.5 / x - series


def alpha(ell: int, t: int) -> float:
    _check(ell, t)
    return 1.0 - 1.0 / ell if t == 1 else 1.0 - 1.0 / (2 * ell)


def beta(ell: int, t: int) -> float:
    _check(ell, t)
    L = float(ell)
    g = EULER_GAMMA
    if t == 1:
        return (-g - digamma(1 / L)) / L
    if t == 2:
        return (1 - g - (1 - 2 / L) * digamma(1 / L) - 2 / L * digamma(2 / L)) / L
    return (
        1.5
        - g
        - (1 - 3 / (2 * L)) * (1 - 1 / L) * digamma(1 / L)
        - (1 / L) * (1 - 6 / L) * digamma(2 / L)
        - 3 / (2 * L) * (1 + 3 / L) * digamma(3 / L)
    ) / L


def _check(ell: int, t: int) -> None:
    if ell < 2:
        raise ValueError(f"ell must be >= 2, got {ell}")
    if t not in (1, 2, 3):
        raise ValueError(f"t must be 1, 2 or 3, got {t}")


@dataclass(frozen=True)
class LimitConstants:
    ell: int
    alpha: tuple[float, float, float]
    beta: tuple[float, float, float]
    r: tuple[float, float, float]

    def as_dict(self) -> dict:
        out: dict = {"ell": self.ell}
        for t in (1, 2, 3):
            out[f"alpha{t}"] = self.alpha[t - 1]
            out[f"beta{t}"] = self.beta[t - 1]
            out[f"r{t}"] = self.r[t - 1]
        return out


def limit_constants(ell: int) -> LimitConstants:
    a = tuple(alpha(ell, t) for t in (1, 2, 3))
    b = tuple(beta(ell, t) for t in (1, 2, 3))
    return LimitConstants(ell, a, b, tuple(bt / at for at, bt in zip(a, b)))


def g2(x: float) -> float:
    _check_unit(x)
    return 1.5 - EULER_GAMMA - digamma(x + 1) - 2 * x * (digamma(2 * x) - digamma(x))


def g3(x: float) -> float:
    _check_unit(x)
    return (
        2
        - EULER_GAMMA
        - digamma(x + 1)
        + x / 2 * (5 - 3 * x) * digamma(x)
        - x * (1 - 6 * x) * digamma(2 * x)
        - 1.5 * x * (1 + 3 * x) * digamma(3 * x)
    )


def _check_unit(x: float) -> None:
    if not 0 < x <= 1:
        raise ValueError(f"x must lie in (0, 1], got {x}")


# --- main terms --------------------------------------------------------------

LEADING = "leading"
SECOND_ORDER = "second-order"


@dataclass(frozen=True)
class AsymptoticEstimate:
    ell: int
    t: int
    n: int
    kind: Kind
    log_value: float
    order: str

    @property
    def value(self) -> float:
        return math.exp(self.log_value)


def _log_shape(ell: int, n: int) -> float:
    """log of (1/pi) (3/(8l(l-1)))^(1/4) n^(-1/4) exp(pi sqrt(2n/3 (1-1/l)))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return (
        -math.log(math.pi)
        + 0.25 * math.log(3 / (8 * ell * (ell - 1)))
        - 0.25 * math.log(n)
        + math.pi * math.sqrt(2 * n / 3 * (1 - 1 / ell))
    )


def correction_coefficient(ell: int, t: int) -> float:
    """c_t(l) in the 1 + c_t(l)/sqrt(n) factor for t = 2, 3."""
    if t not in (2, 3):
        raise ValueError("the 1/sqrt(n) correction exists only for t = 2, 3")
    L = ell
    return (
        math.pi * (L - 1) / 24 * math.sqrt((L - 1) / (6 * L))
        - t * math.pi / (2 * L - 1) * math.sqrt(L * (L - 1) / 6)
        + 1 / (16 * math.pi) * math.sqrt(6 * L / (L - 1))
    )


def second_order_threshold(ell: int, t: int) -> int:
    """Smallest n for which 1 + c_t(l)/sqrt(n) is positive."""
    c = correction_coefficient(ell, t)
    if c >= 0:
        return 1
    return math.floor(c * c) + 1


def b_main(ell: int, t: int, n: int, order: str = LEADING) -> AsymptoticEstimate:
    """Main term for b_{l,t}(n); ``order="second-order"`` adds the 1/sqrt(n) bracket."""
    log_v = _log_shape(ell, n) + math.log(alpha(ell, t))
    if order == SECOND_ORDER:
        bracket = 1 + correction_coefficient(ell, t) / math.sqrt(n)
        if bracket <= 0:
            raise ValueError(
                f"second-order estimate is non-positive for n={n} "
                f"(needs n >= {second_order_threshold(ell, t)})"
            )
        log_v += math.log(bracket)
    elif order != LEADING:
        raise ValueError(f"unknown order {order!r}")
    return AsymptoticEstimate(ell, t, n, Kind.REGULAR, log_v, order)


def d_main(ell: int, t: int, n: int) -> AsymptoticEstimate:
    log_v = _log_shape(ell, n) + math.log(beta(ell, t))
    return AsymptoticEstimate(ell, t, n, Kind.DISTINCT, log_v, LEADING)


def main_term(kind: Kind, ell: int, t: int, n: int) -> AsymptoticEstimate:
    return b_main(ell, t, n) if Kind(kind) is Kind.REGULAR else d_main(ell, t, n)


def ratio_to_estimate(count: int, est: AsymptoticEstimate) -> float:
    """exact / estimate, formed in log space."""
    if count <= 0:
        raise ValueError("count must be positive")
    return math.exp(math.log(count) - est.log_value)


# --- behaviour near q = 1 ------------------------------------------------------

def _one_minus_q(a, x):
    return -np.expm1(-np.multiply(a, x))


def eval_b_factor_near_one(ell: int, t: int, z: float) -> float:
    """B_{l,t}(e^{-2 pi z}) from its closed rational form."""
    _check(ell, t)
    if not z > 0:
        raise ValueError("z must be > 0")
    x = 2 * math.pi * z
    total = 0.0
    for term in b_factor_terms(ell, t, 0):
        num = sum(v * math.exp(-e * x) for e, v in term.numerator)
        den = 1.0
        for k in term.denominators:
            den *= -math.expm1(-k * x)
        total += num / den
    return total


@dataclass(frozen=True)
class CuspSum:
    value: float
    tail_bound: float
    terms: int


_SUMMAND_CUTOFF = 1e-16


def d_factor_near_one(ell: int, t: int, z: float) -> CuspSum:
    """D_{l,t}(e^{-2 pi z}) by summing over m until summands drop below 1e-16.

    Every numerator factor (1 - q^a) lies in [0, 1] and the m-th summand
    carries q^{m+1}, so the tail past m_max is bounded by
    c_t q^{m_max+2} / ((1 - q) (1 - q^{l(m_max+1)})^t).
    """
    _check(ell, t)
    if not z > 0:
        raise ValueError("z must be > 0")
    x = 2 * math.pi * z
    L = ell
    m_max = math.ceil(math.log(1 / _SUMMAND_CUTOFF) / x)
    m = np.arange(m_max + 1, dtype=float)
    M = m + 1
    q = lambda a: np.exp(-np.multiply(a, x))  # noqa: E731
    om = lambda a: _one_minus_q(a, x)  # noqa: E731
    if t == 1:
        s = q(M) * om((L - 1) * M) / om(L * M)
    elif t == 2:
        s = q(m + 2) * om(M) * om((L - 1) * (m + 2)) / (om(L * M) * om(L * (m + 2)))
        s = s + q(2 * M) * om((L - 2) * M) / om(L * M)
    else:
        s = (
            q(m + 3) * om(M) * om(m + 2) * om((L - 1) * (m + 3))
            / (om(L * M) * om(L * (m + 2)) * om(L * (m + 3)))
        )
        bracket = om((L - 1) * (m + 2)) + q(1) * om((L - 2) * (m + 2))
        s = s + q(2 * m + 3) * om(M) * bracket / (om(L * M) * om(L * (m + 2)))
        if L >= 3:
            s = s + q(3 * M) * om((L - 3) * M) / om(L * M)
    # sum smallest first
    value = float(np.sum(s[::-1]))
    c_t = (1, 2, 4)[t - 1]
    tail = c_t * math.exp(-(m_max + 2) * x) / (
        -math.expm1(-x) * (-math.expm1(-L * (m_max + 1) * x)) ** t
    )
    return CuspSum(value, tail, m_max + 1)


def eval_d_factor_near_one(ell: int, t: int, z: float) -> float:
    return d_factor_near_one(ell, t, z).value


def cusp_leading_constant(kind: Kind, ell: int, t: int) -> float:
    """Predicted limit of z * factor(e^{-2 pi z}) as z -> 0."""
    if Kind(kind) is Kind.REGULAR:
        return alpha(ell, t) / (2 * math.pi)
    return beta(ell, t) / (2 * math.pi)


B_CONSTANT_TERM = {2: -1.0, 3: -1.5}
