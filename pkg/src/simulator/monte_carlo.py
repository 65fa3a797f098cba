"""
Trial loop of the Monte-Carlo estimates. Every trial owns a generator spawned from the root seed by its index, so
results do not depend on the number of workers.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Tuple

import numpy as np

from src.simulator.dataclasses import SimConfig, SimEstimate
from src.simulator.rfr import make_target, sample_sphere, train_rfr
from src.utils import time_func_call


def run_trial(config: SimConfig, seed: np.random.SeedSequence) -> Tuple[float, float, float]:
    """
    The pointwise sensitivity is the mean of ||grad f(x)||^2. The averaged slope sensitivity is ||mean grad f(x)||^2,
    the sensitivity of the model with every sigma'(<theta_i, x> / sqrt(d)) replaced by its average over x. The closed
    form asymptotics describe the latter.
    :return: Tuple of test error, pointwise sensitivity and averaged slope sensitivity of one trial
    """
    rng = np.random.default_rng(seed)
    target = make_target(config, rng)
    model = train_rfr(config, rng, target)

    x_test = sample_sphere(config.d, config.n_test, rng)
    error = float(np.mean((model(x_test) - target(x_test)) ** 2))
    gradients = model.gradient(x_test)
    sensitivity = float(np.mean(np.sum(gradients ** 2, axis=1)))
    averaged = float(np.sum(np.mean(gradients, axis=0) ** 2))
    logging.debug(f"Trial {seed.spawn_key} of {config.af.notation}: error={error}, sensitivity={sensitivity}, "
                  f"averaged slope sensitivity={averaged}")
    return error, sensitivity, averaged


@time_func_call
def estimate(config: SimConfig, workers: int = 1) -> SimEstimate:
    """
    Empirical test error and sensitivity averaged over independent trials.
    :param config: Simulation settings
    :param workers: Number of threads, results are identical for any value
    :return: SimEstimate
    """
    config.validate()
    seeds = np.random.SeedSequence(config.seed).spawn(config.trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            per_trial = list(pool.map(lambda s: run_trial(config, s), seeds))
    else:
        per_trial = [run_trial(config, s) for s in seeds]
    return SimEstimate.from_trials(per_trial)
