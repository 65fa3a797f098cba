import json
import logging
from typing import Any, Dict, List, Optional

from schema import And, Optional as SchemaOptional, Or, Schema

from src.cli_commands.io_util import Settings, seed_override, write_csv, write_json
from src.cli_commands.moments_cmd import parse_af
from src.simulator.dataclasses import SimConfig, SimEstimate
from src.simulator.monte_carlo import estimate

_number = Or(int, float)
_positive = And(_number, lambda v: v > 0)
_non_negative = And(_number, lambda v: v >= 0)

SIM_SCHEMA = Schema(
    {
        'd': And(int, lambda d: d >= 20, error="d needs to be an integer of at least 20"),
        'psi1': Or(_positive, [_positive], error="psi1 needs to be a positive number or a list of them"),
        'psi2': And(_positive, error="psi2 needs to be positive"),
        'lambda': And(_non_negative, error="lambda needs to be non-negative"),
        'af': And(str, len, error="af needs to be an activation function notation"),
        SchemaOptional('f0', default=0.0): _number,
        SchemaOptional('f1', default=1.0): _positive,
        SchemaOptional('fstar', default=0.0): _non_negative,
        SchemaOptional('tau', default=0.0): _non_negative,
        SchemaOptional('n_test'): And(int, lambda n: n >= 100),
        SchemaOptional('trials'): And(int, lambda n: n >= 1),
        SchemaOptional('seed'): And(int, lambda n: n >= 0),
    },
    ignore_extra_keys=True,
)

CSV_HEADER = ('d', 'psi1', 'psi2', 'lambda', 'af', 'error_mean', 'error_se', 'sens_mean', 'sens_se', 'avg_sens_mean',
              'avg_sens_se', 'trials', 'seed')


def read_sim_configs(config_f: str, settings: Settings) -> List[SimConfig]:
    """
    Read a JSON simulation file. A list of psi1 values gives one configuration per value.
    :param config_f: File path of the JSON file
    :param settings: Defaults for n_test, trials and seed
    :return: List of SimConfig
    """
    with open(config_f, 'r') as f:
        data = SIM_SCHEMA.validate(json.load(f))

    override = seed_override()
    seed = override if override is not None else data.get('seed', settings.seed)
    af = parse_af(data['af'])
    psi1_values = data['psi1'] if isinstance(data['psi1'], list) else [data['psi1']]
    return [
        SimConfig(d=data['d'], psi1=float(psi1), psi2=float(data['psi2']), lam=float(data['lambda']), af=af,
                  f0=float(data['f0']), f1=float(data['f1']), f_star=float(data['fstar']), tau=float(data['tau']),
                  n_test=data.get('n_test', settings.n_test), trials=data.get('trials', settings.trials),
                  seed=seed).validate()
        for psi1 in psi1_values
    ]


def _run_dict(config: SimConfig, result: SimEstimate) -> Dict[str, Any]:
    settings = config.as_row()
    settings.update({'f0': config.f0, 'f1': config.f1, 'fstar': config.f_star, 'tau': config.tau,
                     'n_test': config.n_test, 'trials': config.trials, 'seed': config.seed})
    return {'config': settings, 'estimate': result.to_json_dict()}


def simulate(config_f: str, settings: Settings, workers: Optional[int] = None, out_f: Optional[str] = None,
             csv_f: Optional[str] = None):
    """
    Run the Monte-Carlo estimates of a simulation file and write them as JSON and optionally as CSV.
    """
    configs = read_sim_configs(config_f, settings)
    runs = []
    for config in configs:
        logging.info(f"Simulating {config.af.notation} with d={config.d}, psi1={config.psi1}, psi2={config.psi2}")
        runs.append((config, estimate(config, workers or settings.workers)))

    write_json(out_f, {'runs': [_run_dict(c, r) for c, r in runs]})
    if csv_f is not None:
        rows = [list(c.as_row().values()) + [r.error_mean, r.error_se, r.sens_mean, r.sens_se, r.avg_sens_mean,
                                             r.avg_sens_se, c.trials, c.seed]
                for c, r in runs]
        write_csv(csv_f, CSV_HEADER, rows, digits=settings.digits)
