import json
import os
from math import sqrt
from pathlib import Path

import pytest

from src.ApplicationExceptions import BadInput
from src.activation.dataclasses import Moments
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.cli_commands.io_util import load_settings
from src.cli_commands.moments_cmd import moments_report, parse_af, print_moments
from src.cli_commands.optimize import optimize, optimize_report
from src.cli_commands.synthesize import synthesis_report
from src.synthesis.dataclasses import NormKind

CONFIG_FILE = Path(os.path.dirname(os.path.realpath(__file__)), "config.ini")


def _reject_constant(name):
    raise ValueError(f"{name} is not valid JSON")


@pytest.fixture(scope='module')
def settings():
    return load_settings(str(CONFIG_FILE))


class TestMoments:
    @pytest.mark.parametrize("notation,key,expected", [
        ("relu", 'mu1', 0.5),
        ("linear:1,0", 'mu_star_sq', 0.0),
        ("quadratic:0.70710678,1,-0.70710678", 'mu2', 2.0),
        ("relu", 'norm1', 0.5),
        ("tanh", 'mu0', 0.0),
    ])
    def test_report(self, settings, notation, key, expected):
        assert moments_report(parse_af(notation), settings)[key] == pytest.approx(expected, abs=1e-8)

    def test_bad_notation(self):
        with pytest.raises(BadInput):
            parse_af("relu:1,2,3")

    def test_json_output(self, settings, tmp_path):
        out_f = tmp_path / "moments.json"
        print_moments("shifted-relu:0.5", settings, str(out_f))
        data = json.loads(out_f.read_text())
        assert data['af'] == 'shifted-relu:0.5'
        assert data['norm2'] == pytest.approx(sqrt(data['norm1']))

    def test_linear_output_is_strict_json(self, settings, tmp_path):
        out_f = tmp_path / "linear.json"
        print_moments("linear:1,0", settings, str(out_f))
        data = json.loads(out_f.read_text(), parse_constant=_reject_constant)
        assert data['zeta_sq'] == 'inf'
        assert data['mu1'] == pytest.approx(1, abs=1e-8)


class TestOptimize:
    def test_ridgeless_linear(self, settings):
        report = optimize_report(Regime.R1, RegimeParams(psi1=0.5, psi2=3.0), settings, oracle=True)
        assert report['is_linear']
        assert report['objective'] == pytest.approx(0.6, abs=1e-12)
        assert report['oracle']['objective'] == pytest.approx(0.6, abs=1e-9)
        assert report['params']['psi2'] == 3.0

    def test_large_sample(self, settings):
        report = optimize_report(Regime.R3, RegimeParams(psi1=1.0, psi2=3.0, lam=0.1, alpha=0.5), settings,
                                 emit_af=NormKind.TWO)
        assert report['mu1_sq'] == pytest.approx(0.1 * (sqrt(0.5) + 0.5), rel=1e-6)
        assert report['af']['kind'] == 'linear'
        assert report['af']['achieved']['mu1'] == pytest.approx(report['mu1'], rel=1e-10)

    def test_diverging_slope(self, settings, caplog):
        report = optimize_report(Regime.R3, RegimeParams(psi1=1.0, psi2=3.0, lam=0.1, alpha=0.1, f_star=0.5),
                                 settings, emit_af=NormKind.ONE)
        assert 'af' not in report
        assert "no activation function is synthesized" in caplog.text

    def test_overparameterized_synthesis(self, settings, tmp_path):
        out_f = tmp_path / "optimum.json"
        optimize(Regime.R2, RegimeParams(psi1=10.0, psi2=2.0, lam=1.0, alpha=0.3, tau=1.0), settings,
                 emit_af=NormKind.TWO, out_f=str(out_f))
        data = json.loads(out_f.read_text())
        assert data['regime'] == 'r2'
        assert data['af']['kind'] == 'quadratic'
        assert data['af']['achieved']['mu1'] == pytest.approx(data['mu1'], rel=1e-9)
        assert data['af']['norm2'] ** 2 == pytest.approx(data['mu1_sq'] + 2 * data['mu_star'] ** 2, rel=1e-9)


def test_synthesis_report(settings):
    report = synthesis_report(Moments.from_components(0.3, 1.0, 0.25), NormKind.ONE, 1, settings)
    assert report['kind'] == 'satlin'
    assert report['norm1'] == pytest.approx(1.0, rel=1e-9)
    for key, expected in (('mu0', 0.3), ('mu1', 1.0), ('mu2', 0.09 + 1.0 + 0.25)):
        assert report['achieved'][key] == pytest.approx(expected, abs=1e-9)
