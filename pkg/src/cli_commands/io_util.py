"""
Settings and output helpers shared by the subcommands.
"""
import contextlib
import csv
import json
import os
import sys
from configparser import ConfigParser
from math import isfinite, isinf, isnan
from typing import Any, Dict, Iterable, NamedTuple, Optional, Sequence

SEED_ENVIRONMENT_VARIABLE = 'RFR_SEED'


class Settings(NamedTuple):
    nodes: int = 201
    window: float = 12.0
    tie_tolerance: float = 1e-12
    grid_points: int = 20001
    n_test: int = 2000
    trials: int = 20
    seed: int = 0
    workers: int = 1
    digits: int = 17


def seed_override() -> Optional[int]:
    raw = os.environ.get(SEED_ENVIRONMENT_VARIABLE)
    return None if raw is None or not raw.strip() else int(raw)


def load_settings(config_f: Optional[str] = None) -> Settings:
    """
    Read the defaults of all subcommands from an INI file. Missing files and keys fall back to the builtin values.
    :param config_f: File path for the configuration file
    :return: Settings
    """
    config_parser = ConfigParser()
    if config_f is not None:
        config_parser.read(config_f)
    default = Settings()

    seed = seed_override()
    return Settings(
        nodes=int(config_parser.get('moments', 'nodes', fallback=default.nodes)),
        window=float(config_parser.get('moments', 'window', fallback=default.window)),
        tie_tolerance=float(config_parser.get('optimizer', 'tie_tolerance', fallback=default.tie_tolerance)),
        grid_points=int(config_parser.get('optimizer', 'grid_points', fallback=default.grid_points)),
        n_test=int(config_parser.get('simulator', 'n_test', fallback=default.n_test)),
        trials=int(config_parser.get('simulator', 'trials', fallback=default.trials)),
        seed=seed if seed is not None else int(config_parser.get('simulator', 'seed', fallback=default.seed)),
        workers=int(config_parser.get('simulator', 'workers', fallback=default.workers)),
        digits=int(config_parser.get('output', 'digits', fallback=default.digits)),
    )


def format_value(value: Any, digits: int = 17) -> str:
    if value is None:
        return ''
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        if isnan(value):
            return 'nan'
        if isinf(value):
            return 'inf' if value > 0 else '-inf'
        return f'{value:.{digits}g}'
    return str(value)


def finite_json(value: Any) -> Any:
    """
    Replace non-finite floats by the strings format_value writes for them, so the output is strict JSON.
    """
    if isinstance(value, float) and not isfinite(value):
        return format_value(value)
    if isinstance(value, dict):
        return {k: finite_json(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [finite_json(v) for v in value]
    return value


@contextlib.contextmanager
def open_output(out_f: Optional[str]):
    """
    Yield a text stream for the output file or stdout if no file is given.
    """
    if out_f is None or out_f == '-':
        yield sys.stdout
    else:
        with open(out_f, 'w', newline='') as f:
            yield f


def write_csv(out_f: Optional[str], header: Sequence[str], rows: Iterable[Sequence[Any]],
              params: Optional[Dict[str, Any]] = None, digits: int = 17):
    """
    Write rows as CSV, preceded by a comment line with all parameters needed to regenerate the file.
    :param out_f: File path or None for stdout
    :param header: Column names
    :param rows: Rows of values
    :param params: Parameters written as JSON into the "# params:" line
    :param digits: Significant digits of floating point values
    """
    with open_output(out_f) as stream:
        if params is not None:
            stream.write(f"# params: {json.dumps(finite_json(params), sort_keys=True, allow_nan=False)}\n")
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v, digits) for v in row])


def write_json(out_f: Optional[str], data: Any):
    with open_output(out_f) as stream:
        json.dump(finite_json(data), stream, indent=2, sort_keys=True, allow_nan=False)
        stream.write('\n')
