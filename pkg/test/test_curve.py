import json
import os
from pathlib import Path

import numpy as np
import pytest

from src.ApplicationExceptions import BadInput
from src.asymptotics.dataclasses import Regime, RegimeParams
from src.cli_commands.curve import CurveRequest, curve, curve_rows
from src.cli_commands.figure import PANELS, figure
from src.cli_commands.io_util import SEED_ENVIRONMENT_VARIABLE, load_settings
from src.cli_commands.simulate import CSV_HEADER, read_sim_configs, simulate
from src.simulator.exceptions import InvalidSimConfig

CONFIG_FILE = Path(os.path.dirname(os.path.realpath(__file__)), "config.ini")


@pytest.fixture(scope='module')
def settings():
    return load_settings(str(CONFIG_FILE))


def _request(**changes):
    request = CurveRequest(regime=Regime.R1, sweep='psi1', lo=2.0, hi=4.0, points=3, scale='linear', af='relu',
                           params=RegimeParams(psi1=1.0, psi2=3.0, tau=1.0))
    return request._replace(**changes)


class TestCurveRequest:
    @pytest.mark.parametrize("changes", [
        {'sweep': 'tau'},
        {'scale': 'quadratic'},
        {'points': 1},
        {'lo': 4.0},
        {'lo': 0.0, 'scale': 'log'},
    ])
    def test_invalid(self, changes):
        with pytest.raises(BadInput):
            _request(**changes).validate()

    def test_log_grid(self):
        grid = _request(lo=0.01, hi=100.0, points=5, scale='log').validate().grid()
        np.testing.assert_allclose(grid, [0.01, 0.1, 1.0, 10.0, 100.0], rtol=1e-12)

    def test_threshold_is_flagged(self, settings):
        rows = curve_rows(_request(), settings)
        assert [row[0] for row in rows] == [2.0, 3.0, 4.0]
        assert rows[1][1:] == [None, None, None, 'InterpolationThreshold']
        assert rows[0][4] == '' and rows[2][4] == ''

    def test_csv(self, settings, tmp_path):
        out_f = tmp_path / "curve.csv"
        curve(_request(), settings, str(out_f))
        lines = out_f.read_text().splitlines()
        params = json.loads(lines[0][len('# params: '):])
        assert params['regime'] == 'r1'
        assert params['params']['tau'] == 1.0
        assert lines[1] == 'psi1,error,sensitivity,objective,flag'
        assert lines[3] == '3,,,,InterpolationThreshold'
        assert len(lines) == 5


class TestPanels:
    def test_noiseless_ridgeless(self, settings):
        optimal = curve_rows(PANELS['A'].curves[0][1], settings)
        relu = curve_rows(PANELS['A'].curves[1][1], settings)
        for (psi1, _, _, best, flag), (_, _, _, baseline, _) in zip(optimal, relu):
            if flag:
                continue
            if psi1 >= 1:
                assert best == pytest.approx(0, abs=1e-9)
            else:
                assert best == pytest.approx((1 - psi1) * 3 / (3 - psi1), abs=1e-9)
            if baseline is not None:
                assert best <= baseline + 1e-9

        relu_objective = {round(row[0], 6): row[3] for row in relu}
        assert relu_objective[2.97] > 3 * relu_objective[1.5]
        assert relu_objective[2.97] > 3 * relu_objective[9.0]

    def test_optimum_ignores_lambda(self, settings):
        rows = curve_rows(PANELS['D'].curves[1][1], settings)
        objectives = [row[3] for row in rows]
        np.testing.assert_allclose(objectives, objectives[0], rtol=1e-9)

    def test_optimum_beats_relu(self, settings):
        curves = dict(PANELS['C'].curves)
        for tau_sq in ('10', '5'):
            relu = curve_rows(curves[f'relu, tau^2={tau_sq}'], settings)
            optimal = curve_rows(curves[f'optimal, tau^2={tau_sq}'], settings)
            assert optimal[0][3] <= min(row[3] for row in relu) + 1e-12

    def test_figure_csv(self, settings, tmp_path):
        out_f = tmp_path / "panel_d.csv"
        figure('D', settings, str(out_f))
        lines = out_f.read_text().splitlines()
        params = json.loads(lines[0][len('# params: '):])
        assert params['panel'] == 'D'
        assert set(params['curves']) == {'relu, tau^2=5', 'optimal, tau^2=5'}
        assert lines[1] == 'series,lambda,error,sensitivity,objective,flag'
        assert len(lines) == 2 + 2 * 200
        assert lines[2].startswith('"relu, tau^2=5",')


class TestSimulateCommand:
    @pytest.fixture
    def sim_file(self, tmp_path):
        config_f = tmp_path / "sim.json"
        config_f.write_text(json.dumps({'d': 20, 'psi1': [0.5, 2.0], 'psi2': 2.0, 'lambda': 0.01, 'af': 'relu',
                                        'tau': 0.5, 'seed': 3}))
        return str(config_f)

    def test_read(self, sim_file, settings, monkeypatch):
        monkeypatch.delenv(SEED_ENVIRONMENT_VARIABLE, raising=False)
        configs = read_sim_configs(sim_file, settings)
        assert [c.psi1 for c in configs] == [0.5, 2.0]
        assert all(c.seed == 3 and c.trials == 2 and c.n_test == 200 and c.tau == 0.5 for c in configs)
        monkeypatch.setenv(SEED_ENVIRONMENT_VARIABLE, "11")
        assert read_sim_configs(sim_file, settings)[0].seed == 11

    def test_invalid(self, tmp_path, settings):
        config_f = tmp_path / "bad.json"
        config_f.write_text(json.dumps({'d': 20, 'psi1': 0.01, 'psi2': 2.0, 'lambda': 0.0, 'af': 'relu'}))
        with pytest.raises(InvalidSimConfig):
            read_sim_configs(str(config_f), settings)

    def test_deterministic_output(self, sim_file, settings, tmp_path, monkeypatch):
        monkeypatch.delenv(SEED_ENVIRONMENT_VARIABLE, raising=False)
        outputs = []
        for i, workers in enumerate((1, 2)):
            out_f, csv_f = tmp_path / f"run{i}.json", tmp_path / f"run{i}.csv"
            simulate(sim_file, settings, workers=workers, out_f=str(out_f), csv_f=str(csv_f))
            outputs.append((out_f.read_bytes(), csv_f.read_bytes()))
        assert outputs[0] == outputs[1]

        runs = json.loads(outputs[0][0])['runs']
        assert [run['config']['psi1'] for run in runs] == [0.5, 2.0]
        assert len(runs[0]['estimate']['per_trial']) == 2
        assert outputs[0][1].decode().splitlines()[0] == ','.join(CSV_HEADER)
