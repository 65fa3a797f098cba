"""
Finite size random features ridge regression.

Inputs, first layer weights and test points are uniform on the sphere of radius sqrt(d). The model is
f(x) = sum_i a_i sigma(<theta_i, x> / sqrt(d)) with frozen theta_i, only the second layer a is trained.
"""
from math import sqrt
from typing import Callable, NamedTuple

import numpy as np
from numpy.random import Generator
from scipy import linalg

from src.activation.ActivationSpec import BaseActivation
from src.simulator.dataclasses import SimConfig
from src.simulator.exceptions import SolveFailed

CALIBRATION_POINTS = 10000
PINV_CUTOFF = 1e-10


def sample_sphere(d: int, count: int, rng: Generator) -> np.ndarray:
    """
    Independent uniform points on the sphere of radius sqrt(d).
    :param d: Dimension
    :param count: Number of points
    :param rng: Random generator
    :return: Array of shape (count, d)
    """
    g = rng.standard_normal((count, d))
    return g * (sqrt(d) / np.linalg.norm(g, axis=1, keepdims=True))


class Target(NamedTuple):
    """
    f(x) = f0 + <beta1, x> + scale (x^T G x - tr G) / d
    """
    f0: float
    beta1: np.ndarray
    g: np.ndarray
    scale: float

    def nonlinear(self, x: np.ndarray) -> np.ndarray:
        d = x.shape[1]
        return self.scale * (np.einsum('ij,jk,ik->i', x, self.g, x) - np.trace(self.g)) / d

    def __call__(self, x: np.ndarray) -> np.ndarray:
        out = self.f0 + x @ self.beta1
        if self.scale != 0:
            out = out + self.nonlinear(x)
        return out


def make_target(config: SimConfig, rng: Generator) -> Target:
    """
    Random target with a linear part of norm F1 and a centered quadratic part with second moment F_star^2.
    :param config: Simulation settings
    :param rng: Random generator
    :return: Target
    """
    d = config.d
    direction = rng.standard_normal(d)
    beta1 = config.f1 * direction / np.linalg.norm(direction)
    g = rng.standard_normal((d, d))
    g = 0.5 * (g + g.T)

    scale = 0.0
    if config.f_star > 0:
        raw = Target(f0=0.0, beta1=np.zeros(d), g=g, scale=1.0).nonlinear(sample_sphere(d, CALIBRATION_POINTS, rng))
        scale = config.f_star / sqrt(float(np.mean(raw * raw)))
    return Target(f0=config.f0, beta1=beta1, g=g, scale=scale)


def features(x: np.ndarray, theta: np.ndarray, af: BaseActivation) -> np.ndarray:
    return af(x @ theta.T / sqrt(theta.shape[1]))


def ridge_weights(z: np.ndarray, y: np.ndarray, penalty: float) -> np.ndarray:
    """
    Minimizer of (1/n) ||y - Z a||^2 + penalty ||a||^2, the minimum norm least squares solution for penalty 0.
    :param z: Feature matrix of shape (n, N)
    :param y: Labels of shape (n,)
    :param penalty: N lambda / d
    :return: Weights of shape (N,)
    """
    n, n_features = z.shape
    try:
        if penalty == 0:
            return np.linalg.pinv(z, rcond=PINV_CUTOFF) @ y
        gram = z.T @ z / n + penalty * np.eye(n_features)
        return linalg.solve(gram, z.T @ y / n, assume_a='pos')
    except (np.linalg.LinAlgError, ValueError) as e:
        raise SolveFailed(f"Ridge system with {n} samples and {n_features} features cannot be solved: {e}") from e


class TrainedModel(NamedTuple):
    theta: np.ndarray
    weights: np.ndarray
    af: BaseActivation

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return features(x, self.theta, self.af) @ self.weights

    def gradient(self, x: np.ndarray) -> np.ndarray:
        """
        Ambient gradient (1 / sqrt(d)) sum_i a_i sigma'(<theta_i, x> / sqrt(d)) theta_i.
        :param x: Points of shape (m, d)
        :return: Gradients of shape (m, d)
        """
        d = self.theta.shape[1]
        slopes = self.af.weak_derivative(x @ self.theta.T / sqrt(d))
        return (slopes * self.weights) @ self.theta / sqrt(d)


def train_rfr(config: SimConfig, rng: Generator, target: Callable[[np.ndarray], np.ndarray]) -> TrainedModel:
    """
    Draw features and training data and fit the second layer.
    :param config: Simulation settings
    :param rng: Random generator
    :param target: Noise free target function
    :return: TrainedModel
    """
    theta = sample_sphere(config.d, config.n_features, rng)
    x = sample_sphere(config.d, config.n_samples, rng)
    y = target(x)
    if config.tau > 0:
        y = y + config.tau * rng.standard_normal(config.n_samples)
    weights = ridge_weights(features(x, theta, config.af), y, config.penalty)
    return TrainedModel(theta=theta, weights=weights, af=config.af)
