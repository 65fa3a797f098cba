#! /usr/bin/env python3
"""
RFR-Activation:
Optimal activation functions for random features regression.
Evaluate asymptotic test error and sensitivity, find optimal activation functions and check them by simulation.

Usage:
    main.py moments --af=<af> [-o OUTPUT_FILE] [--config=<file>] [--quiet | --verbose]
    main.py curve --regime=<regime> --sweep=<name> --lo=<lo> --hi=<hi> [--points=<n>] [--scale=<scale>] [--af=<af>] [--psi1=<psi1>] [--psi2=<psi2>] [--lambda=<lambda>] [--alpha=<alpha>] [--f1=<f1>] [--fstar=<fstar>] [--tau=<tau>] [-o OUTPUT_FILE] [--config=<file>] [--quiet | --verbose]
    main.py optimize --regime=<regime> [--psi1=<psi1>] [--psi2=<psi2>] [--lambda=<lambda>] [--alpha=<alpha>] [--f1=<f1>] [--fstar=<fstar>] [--tau=<tau>] [--emit-af=<norm>] [--oracle] [-o OUTPUT_FILE] [--config=<file>] [--quiet | --verbose]
    main.py synthesize --mu0=<mu0> --mu1=<mu1> --mu2=<mu2> [--norm=<norm>] [--sign=<sign>] [-o OUTPUT_FILE] [--config=<file>] [--quiet | --verbose]
    main.py simulate CONFIG_FILE [-o OUTPUT_FILE] [--csv=<csv_file>] [--workers=<n>] [--config=<file>] [--quiet | --verbose]
    main.py figure --panel=<panel> [-o OUTPUT_FILE] [--config=<file>] [--quiet | --verbose]
    main.py (-h | --help)
    main.py --version

Options:
    -h --help               Show this screen.
    --version               Show version.
    --af=<af>               Activation function: relu, tanh, linear:slope[,intercept], shifted-relu:shift,
                            quadratic:a,b,c or satlin:mu0,b,s. Curves also accept optimal [default: optimal].
    --regime=<regime>       Regime r1 (ridgeless), r2 (highly overparameterized) or r3 (large sample).
    --sweep=<name>          Swept constant: psi1, psi2, lambda or alpha.
    --lo=<lo>               Lower end of the sweep.
    --hi=<hi>               Upper end of the sweep.
    --points=<n>            Number of grid points [default: 101].
    --scale=<scale>         Grid spacing, linear or log [default: linear].
    --psi1=<psi1>           Features per input dimension N/d [default: 1].
    --psi2=<psi2>           Samples per input dimension n/d [default: 3].
    --lambda=<lambda>       Ridge regularization [default: 0].
    --alpha=<alpha>         Weight of the sensitivity in the objective, in [0, 1) [default: 0].
    --f1=<f1>               Magnitude of the linear part of the target [default: 1].
    --fstar=<fstar>         Magnitude of the nonlinear part of the target [default: 0].
    --tau=<tau>             Standard deviation of the label noise [default: 0].
    --emit-af=<norm>        Synthesize the optimal AF with minimal 1- or 2-norm of its derivative.
    --oracle                Compare with a brute force minimization on a dense grid.
    --mu0=<mu0>             Target mean E sigma(Z).
    --mu1=<mu1>             Target linear coefficient E Z sigma(Z).
    --mu2=<mu2>             Target second moment E sigma(Z)^2.
    --norm=<norm>           Minimized norm of the derivative, 1 or 2 [default: 2].
    --sign=<sign>           Sign of the quadratic coefficient, + or - [default: +].
    --csv=<csv_file>        Also write the estimates as CSV.
    --workers=<n>           Threads running independent trials.
    --panel=<panel>         Figure panel A, B, C or D.
    -o OUTPUT_FILE          Specify output file, stdout if omitted.
    --config=<file>         Settings file [default: ./config.ini].
    --quiet                 Print less text.
    --verbose               Print more text.

"""
__version__ = "0.1.0"  # pragma: no mutate

# Built-in libraries
import json
import logging
import os
import sys

from docopt import docopt
from schema import Schema, And, Or, Use, SchemaError

from src.ApplicationExceptions import ApiException, BadInput
from src.activation.exceptions import InvalidActivationParameters, MomentError, UnknownActivation
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.asymptotics.exceptions import AsymptoticsError, InvalidParameters
from src.cli_commands.curve import CurveRequest, SCALES, SWEEPS, curve
from src.cli_commands.figure import PANELS, figure
from src.cli_commands.io_util import load_settings
from src.cli_commands.moments_cmd import print_moments
from src.cli_commands.optimize import optimize
from src.cli_commands.simulate import simulate
from src.cli_commands.synthesize import synthesize
from src.optimizer.exceptions import OptimizerError, TieBreakAmbiguous
from src.simulator.exceptions import InvalidSimConfig, SimulationError
from src.synthesis.dataclasses import NormKind
from src.synthesis.exceptions import InvalidMoments, SolverDiverged, SynthesisError

EXIT_SUCCESS = 0
EXIT_UNEXPECTED_ERROR = 1
EXIT_BAD_INPUT = 2
EXIT_NUMERIC_ERROR = 3
EXIT_TIE_BREAK = 4
EXIT_SOLVER_DIVERGED = 5


def _params_from_args(args) -> RegimeParams:
    return RegimeParams(psi1=args["--psi1"], psi2=args["--psi2"], lam=args["--lambda"], alpha=args["--alpha"],
                        f1=args["--f1"], f_star=args["--fstar"], tau=args["--tau"]).validate()


def main(*argv):
    # Gather command line arguments
    argv = list(*argv) if len(argv) == 1 else [i for i in argv]
    args = docopt(__doc__, argv=argv, help=True, version=__version__, options_first=False)

    # Choose an appropriate log level
    if args['--verbose']:
        log_level = logging.DEBUG
    elif args['--quiet']:
        log_level = logging.WARNING
    else:
        log_level = logging.INFO
    logging.basicConfig(level=log_level, format='%(levelname)5s:%(asctime)s %(message)s',
                        datefmt='%d/%m/%Y %H:%M:%S')
    """
    Create input schemata - Options accepting user input as value are checked for plausibility
    """
    regime_schema = Schema(
        {"--regime": And(Use(lambda s: Regime(s.lower())), error="Regime needs to be r1, r2 or r3")},
        ignore_extra_keys=True,
    )
    params_schema = Schema(
        {
            "--psi1": And(Use(float), lambda v: v > 0, error="psi1 needs to be positive"),
            "--psi2": And(Use(float), lambda v: v > 0, error="psi2 needs to be positive"),
            "--lambda": And(Use(float), lambda v: v >= 0, error="lambda needs to be non-negative"),
            "--alpha": And(Use(float), lambda v: 0 <= v < 1, error="alpha needs to be in [0, 1)"),
            "--f1": And(Use(float), lambda v: v > 0, error="F1 needs to be positive"),
            "--fstar": And(Use(float), lambda v: v >= 0, error="F_star needs to be non-negative"),
            "--tau": And(Use(float), lambda v: v >= 0, error="tau needs to be non-negative"),
        },
        ignore_extra_keys=True,
    )
    grid_schema = Schema(
        {
            "--sweep": And(str, lambda s: s in SWEEPS, error=f"Sweep needs to be one of {', '.join(SWEEPS)}"),
            "--lo": And(Use(float), error="Lower end of the sweep needs to be a number"),
            "--hi": And(Use(float), error="Upper end of the sweep needs to be a number"),
            "--points": And(Use(int), lambda n: n >= 2, error="At least two grid points are needed"),
            "--scale": And(str, lambda s: s in SCALES, error="Scale needs to be linear or log"),
        },
        ignore_extra_keys=True,
    )
    emit_schema = Schema(
        {"--emit-af": Or(None, And(Use(NormKind), error="Norm needs to be 1 or 2"))},
        ignore_extra_keys=True,
    )
    target_schema = Schema(
        {
            "--mu0": And(Use(float), error="mu0 needs to be a number"),
            "--mu1": And(Use(float), error="mu1 needs to be a number"),
            "--mu2": And(Use(float), lambda v: v >= 0, error="mu2 needs to be a non-negative number"),
            "--norm": And(Use(NormKind), error="Norm needs to be 1 or 2"),
            "--sign": And(Or('+', '-'), Use(lambda s: 1 if s == '+' else -1), error="Sign needs to be + or -"),
        },
        ignore_extra_keys=True,
    )
    simulate_schema = Schema(
        {
            "CONFIG_FILE": And(os.path.exists, error="CONFIG_FILE should exist"),
            "--workers": Or(None, And(Use(int), lambda n: n >= 1), error="Workers needs to be a positive integer"),
        },
        ignore_extra_keys=True,
    )
    panel_schema = Schema(
        {"--panel": And(Use(str.upper), lambda p: p in PANELS, error="Panel needs to be A, B, C or D")},
        ignore_extra_keys=True,
    )

    """
    Dispatch sub-functions - new sub-commands are called here
    """
    # noinspection PyBroadException
    try:
        settings = load_settings(args["--config"])
        out_f = args["-o"]

        if args["moments"]:
            print_moments(args["--af"], settings, out_f)
        elif args["curve"]:
            args.update(regime_schema.validate(args))
            args.update(params_schema.validate(args))
            args.update(grid_schema.validate(args))
            request = CurveRequest(regime=args["--regime"], sweep=args["--sweep"], lo=args["--lo"], hi=args["--hi"],
                                   points=args["--points"], scale=args["--scale"], af=args["--af"],
                                   params=_params_from_args(args))
            curve(request, settings, out_f)
        elif args["optimize"]:
            args.update(regime_schema.validate(args))
            args.update(params_schema.validate(args))
            args.update(emit_schema.validate(args))
            optimize(args["--regime"], _params_from_args(args), settings, emit_af=args["--emit-af"],
                     oracle=args["--oracle"], out_f=out_f)
        elif args["synthesize"]:
            args.update(target_schema.validate(args))
            synthesize(args["--mu0"], args["--mu1"], args["--mu2"], args["--norm"], args["--sign"], settings, out_f)
        elif args["simulate"]:
            args.update(simulate_schema.validate(args))
            simulate(args["CONFIG_FILE"], settings, workers=args["--workers"], out_f=out_f, csv_f=args["--csv"])
        elif args["figure"]:
            args.update(panel_schema.validate(args))
            figure(args["--panel"], settings, out_f)
        else:
            raise ApiException("Unknown option passed. Type --help for more info.")
    except SchemaError:
        # Input validation error
        logging.exception("Input data invalid.")
        sys.exit(EXIT_BAD_INPUT)
    except (BadInput, UnknownActivation, InvalidActivationParameters, InvalidParameters, InvalidMoments,
            InvalidSimConfig, json.JSONDecodeError):
        # Values that passed the schema but are outside of the domain of the computation
        logging.exception("Input data cannot be interpreted.")
        sys.exit(EXIT_BAD_INPUT)
    except TieBreakAmbiguous:
        logging.exception("The optimum is ambiguous for these constants.")
        sys.exit(EXIT_TIE_BREAK)
    except SolverDiverged:
        logging.exception("No activation function of the family realizes the target.")
        sys.exit(EXIT_SOLVER_DIVERGED)
    except (MomentError, AsymptoticsError, OptimizerError, SynthesisError, SimulationError):
        # Intentionally thrown exception by the numerical routines
        logging.exception("Numeric error.")
        sys.exit(EXIT_NUMERIC_ERROR)
    except KeyError:
        # Accessing the arg dictionary with different keys as specified in docstring
        logging.exception("This might have happened due to different versions of CLI documentation and parsing.")
        sys.exit(EXIT_UNEXPECTED_ERROR)
    except Exception:
        # Exception that has not been caught and rethrown as a proper ApiException (= Bug)
        logging.exception("External or unexpected exception!")
        sys.exit(EXIT_UNEXPECTED_ERROR)
    else:
        # Everything okay, no exception occurred
        sys.exit(EXIT_SUCCESS)


if __name__ == "__main__":
    main(sys.argv[1:])
