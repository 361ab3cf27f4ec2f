from dataclasses import dataclass
from typing import Union

import numpy as np
from scipy.integrate import quad


@dataclass(frozen=True)
class MPParams:
    """Marchenko-Pastur law of a random correlation matrix.

    Attributes
    ----------
    q_ratio : float
        Q = m / k, observations per variable.
    lambda_min : float
        Lower edge of the support, (1 - sqrt(1/Q))**2.
    lambda_max : float
        Upper edge of the support, (1 + sqrt(1/Q))**2.

    """

    q_ratio: float
    lambda_min: float
    lambda_max: float

    @classmethod
    def from_ratio(cls, q_ratio: float) -> 'MPParams':
        if not q_ratio > 1:
            raise ValueError(
                f"The Marchenko-Pastur regime needs Q = m/k > 1, got {q_ratio}")

        root = np.sqrt(1 / q_ratio)
        return cls(q_ratio=float(q_ratio),
                   lambda_min=float((1 - root) ** 2),
                   lambda_max=float((1 + root) ** 2))


def mp_bounds(m: int, k: int) -> MPParams:
    """Eigenvalue bounds of a k x k correlation matrix of m observations.

    Raises
    ------
    ValueError
        If k < 2 or m <= k.

    """
    if k < 2:
        raise ValueError(f"At least 2 variables are needed, got k={k}")
    if m <= k:
        raise ValueError(
            f"Observations m={m} must exceed variables k={k} for the "
            f"Marchenko-Pastur bounds")

    return MPParams.from_ratio(m / k)


def mp_pdf(lam: Union[float, np.ndarray],
           mp: MPParams) -> Union[float, np.ndarray]:
    """Marchenko-Pastur density Q / (2 pi) * sqrt((l+ - l)(l - l-)) / l.

    Zero outside [lambda_min, lambda_max].

    """
    values = np.asarray(lam, dtype=float)
    inside = (values > mp.lambda_min) & (values < mp.lambda_max)

    safe = np.where(inside, values, 1.0)
    density = np.where(
        inside,
        mp.q_ratio / (2 * np.pi) * np.sqrt(
            np.clip((mp.lambda_max - safe) * (safe - mp.lambda_min), 0, None))
        / safe,
        0.0)

    if np.ndim(lam) == 0:
        return float(density)

    return density


def mp_probability(left: float, right: float, mp: MPParams) -> float:
    """Marchenko-Pastur probability mass of the interval [left, right]."""
    lower = max(left, mp.lambda_min)
    upper = min(right, mp.lambda_max)
    if upper <= lower:
        return 0.0

    mass, _ = quad(mp_pdf, lower, upper, args=(mp,), limit=200,
                   epsabs=1e-12, epsrel=1e-10)
    return float(mass)
