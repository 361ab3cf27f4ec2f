import numpy as np
from scipy.special import digamma, entr

from pystocknet import constants as c


def entropy_discrete(pmf) -> float:
    """Shannon entropy in nats of a probability vector.

    H = -sum(f ln f) with 0 ln 0 = 0.

    Parameters
    ----------
    pmf : array_like
        Non-negative probabilities summing to 1 within 1e-9.

    Raises
    ------
    ValueError
        On negative mass or a sum different from 1.

    """
    pmf = np.asarray(pmf, dtype=float).ravel()

    if pmf.size == 0:
        raise ValueError("pmf contains no elements")
    if np.any(pmf < 0):
        raise ValueError("pmf contains negative probability mass")
    if abs(pmf.sum() - 1) > c.TOL_PMF_SUM:
        raise ValueError(f"pmf sums to {pmf.sum()!r}, not 1")

    return float(entr(pmf).sum())


def joint_entropy_discrete(joint) -> float:
    """Joint entropy in nats of a probability grid of any shape."""
    return entropy_discrete(np.asarray(joint, dtype=float).ravel())


def grassberger_g(counts: np.ndarray) -> np.ndarray:
    """Finite-count replacement of ln(n) in the Grassberger entropy estimate.

    G(n) = psi(n) + (-1)^n / 2 * (psi((n + 1) / 2) - psi(n / 2)). G is
    non-decreasing in n.

    """
    counts = np.asarray(counts, dtype=float)
    sign = np.where(np.mod(counts, 2) == 0, 1.0, -1.0)
    return digamma(counts) + 0.5 * sign * (
        digamma((counts + 1) / 2) - digamma(counts / 2))


def entropy_from_counts(
        counts, bias_correction: str = c.BIAS_CORRECTION_GRASSBERGER) -> float:
    """Entropy estimate in nats from occupancy counts.

    Parameters
    ----------
    counts : array_like
        Occupancy count of every bin or cell, any shape.
    bias_correction : str, optional
        "grassberger": H = ln N - 1/N * sum(n G(n)).
        "none": plug-in estimate H = -sum(n/N ln(n/N)).

    """
    counts = np.asarray(counts).ravel()
    counts = counts[counts > 0]
    n_samples = counts.sum()

    if n_samples == 0:
        raise ValueError("Cannot estimate entropy from zero samples")

    if bias_correction == c.BIAS_CORRECTION_NONE:
        return float(entr(counts / n_samples).sum())

    if bias_correction == c.BIAS_CORRECTION_GRASSBERGER:
        return float(np.log(n_samples) -
                     np.dot(counts, grassberger_g(counts)) / n_samples)

    raise ValueError(f"Unknown bias correction {bias_correction!r}")


def normalized_mi(mi: float, hx: float, hy: float) -> float:
    """Normalized mutual information U = 2 I / (H(X) + H(Y)) in [0, 1].

    Raises
    ------
    ValueError
        If a marginal entropy is not positive.

    """
    if hx <= 0 or hy <= 0:
        raise ValueError(
            f"Marginal entropies must be positive, got {hx} and {hy}")

    return float(np.clip(2 * mi / (hx + hy), 0.0, 1.0))


def mi_distance(mi: float, joint_entropy: float) -> float:
    """Mutual information distance d = 1 - I / H(X, Y) in [0, 1].

    Raises
    ------
    ValueError
        If joint_entropy is not positive or mi lies outside
        [0, joint_entropy], which signals an inconsistent estimate.

    """
    if joint_entropy <= 0:
        raise ValueError(
            f"Joint entropy must be positive, got {joint_entropy}")

    tolerance = c.TOL_MI_CLAMP * max(1.0, joint_entropy)
    if mi < -tolerance or mi > joint_entropy + tolerance:
        raise ValueError(
            f"Mutual information {mi} outside [0, {joint_entropy}]")

    return float(np.clip(1 - mi / joint_entropy, 0.0, 1.0))


def exact_mutual_information(joint) -> float:
    """I(X, Y) = H(X) + H(Y) - H(X, Y) of an exact two-dimensional pmf."""
    joint = np.asarray(joint, dtype=float)
    return (entropy_discrete(joint.sum(axis=1)) +
            entropy_discrete(joint.sum(axis=0)) -
            joint_entropy_discrete(joint))
