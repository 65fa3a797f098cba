import logging
from typing import Any, Dict, Optional

from src.asymptotics.dataclasses import Regime, RegimeParams
from src.cli_commands.io_util import Settings, write_json
from src.cli_commands.synthesize import synthesis_report
from src.optimizer.dataclasses import Optimum
from src.optimizer.large_sample import solve_r3
from src.optimizer.oracle import grid_oracle
from src.optimizer.overparameterized import solve_r2
from src.optimizer.ridgeless import solve_r1
from src.synthesis.dataclasses import NormKind


def solve(regime: Regime, params: RegimeParams, settings: Settings) -> Optimum:
    if regime is Regime.R1:
        return solve_r1(params, tie_tolerance=settings.tie_tolerance)
    if regime is Regime.R2:
        return solve_r2(params)
    return solve_r3(params)


def optimize_report(regime: Regime, params: RegimeParams, settings: Settings, emit_af: Optional[NormKind] = None,
                    oracle: bool = False) -> Dict[str, Any]:
    """
    Optimal activation function of a regime, optionally realized by a minimal norm function.
    :param regime: R1, R2 or R3
    :param params: Problem constants
    :param settings: Optimizer and quadrature settings
    :param emit_af: Norm for synthesizing a concrete activation function from the optimal moments
    :param oracle: Also minimize the objective on a dense grid for comparison
    :return: JSON compatible dictionary
    """
    optimum = solve(regime, params, settings)
    logging.info(f"Optimum of {regime.value}: {optimum.branch}")
    report = optimum.to_json_dict()
    report['params'] = params.as_dict()

    if oracle:
        x_best, objective_best = grid_oracle(regime, params, settings.grid_points)
        report['oracle'] = {'x': x_best, 'objective': objective_best}

    if emit_af is not None:
        m = optimum.canonical_moments
        if regime is Regime.R3 and m.mu1_sq == float('inf'):
            logging.warning("The optimal slope diverges, no activation function is synthesized.")
        else:
            report['af'] = synthesis_report(m, emit_af, 1, settings)
    return report


def optimize(regime: Regime, params: RegimeParams, settings: Settings, emit_af: Optional[NormKind] = None,
             oracle: bool = False, out_f: Optional[str] = None):
    write_json(out_f, optimize_report(regime, params, settings, emit_af, oracle))
