"""
End-to-end tests of the command line: argument resolution, the written
artifact, the stdout summary and the exit statuses.
"""

import json

import numpy as np
import pandas as pd
import pytest

from cli import RunConfig, parse_arguments, validate_arguments
from core import workflow_manager
from core.errors import ConfigurationError
from main import main
from utils.constants import EXIT_CONFIGURATION_ERROR, EXIT_NUMERICAL_ERROR, EXIT_SUCCESS


def run_main(args, output):
    return main(args + ['--output', str(output), '--quiet'])


class TestArgumentResolution:

    def test_defaults(self):
        config, options = parse_arguments(['landau', 'level'])
        assert (config.command, config.subcommand) == ('landau', 'level')
        assert config.b == 1.0
        assert config.q == 1
        assert options == {'verbose': False, 'quiet': False, 'log_file': None}

    def test_default_output_path(self):
        config, _ = parse_arguments(['toeplitz', 'limit', '--format', 'json'])
        assert config.output_path.name == "landau_clusters_toeplitz_limit.json"

    def test_config_file_precedence(self, tmp_path):
        path = tmp_path / "run.cfg"
        path.write_text("# level run\nb = 3\nq = 2\nepsilon = 1e-10, 1e-20\n")
        config, _ = parse_arguments(['landau', 'level', '--config', str(path), '--q', '1'])
        assert config.b == 3.0
        assert config.q == 1
        assert config.epsilon == (1e-10, 1e-20)

    @pytest.mark.parametrize("content, message", [
        ("colour = red\n", "unknown key"),
        ("b = 1\nb = 2\n", "given twice"),
        ("b 1\n", "expected 'key = value'"),
        ("q = two\n", "invalid value"),
    ])
    def test_bad_config_file(self, tmp_path, content, message):
        path = tmp_path / "bad.cfg"
        path.write_text(content)
        with pytest.raises(ConfigurationError, match=message):
            parse_arguments(['landau', 'level', '--config', str(path)])

    def test_validation_collects_every_error(self):
        config = RunConfig('toeplitz', 'counting', b=-1.0, q=0, epsilon=(0.5,))
        with pytest.raises(ConfigurationError) as excinfo:
            validate_arguments(config)
        message = str(excinfo.value)
        assert "b must be positive" in message
        assert "q must lie" in message
        assert "(0, e^-e)" in message

    def test_missing_subcommand(self):
        with pytest.raises(SystemExit) as excinfo:
            parse_arguments(['toeplitz'])
        assert excinfo.value.code == 2


class TestCommands:

    def test_landau_level(self, tmp_path, capsys):
        assert run_main(['landau', 'level', '--b', '1', '--d', '1', '--q', '1'], tmp_path / "level.csv") == EXIT_SUCCESS
        assert capsys.readouterr().out == "1\n"
        frame = pd.read_csv(tmp_path / "level.csv")
        assert frame['level'].iloc[0] == 1

    def test_level_from_config_file(self, tmp_path, capsys):
        path = tmp_path / "run.cfg"
        path.write_text("b = 3\nd = 2\nq = 2\n")
        assert run_main(['landau', 'level', '--config', str(path)], tmp_path / "level.csv") == EXIT_SUCCESS
        assert capsys.readouterr().out == "12\n"

    def test_capacity(self, tmp_path, capsys):
        assert run_main(['capacity', '--curve', 'ellipse', '--n', '256'], tmp_path / "cap.csv") == EXIT_SUCCESS
        assert float(capsys.readouterr().out) == pytest.approx(1.5, abs=1e-6)

    def test_toeplitz_limit(self, tmp_path):
        output = tmp_path / "limit.csv"
        args = ['toeplitz', 'limit', '--q', '1', '--b', '2', '--R', '1', '--jmax', '40', '--precision', '256']
        assert run_main(args, output) == EXIT_SUCCESS
        frame = pd.read_csv(output)
        assert list(frame.columns) == ['j', 's_j', 'limit']
        assert frame['j'].iloc[-1] == 40
        assert abs(float(frame['limit'].iloc[-1]) - 1) < 0.1

    def test_green_profile(self, tmp_path):
        output = tmp_path / "profile.csv"
        assert run_main(['green', 'profile', '--d', '1', '--s', '0.01', '2.0', '--N', '4'], output) == EXIT_SUCCESS
        frame = pd.read_csv(output)
        assert list(frame['s']) == [0.01, 2.0]
        assert pd.isna(frame['expansion'].iloc[1])

    def test_dirichlet_to_robin(self, tmp_path):
        output = tmp_path / "dtr.csv"
        assert run_main(['bie', 'dtr', '--curve', 'ellipse', '--n', '64', '--tau', '0.5'], output) == EXIT_SUCCESS
        frame = pd.read_csv(output)
        assert set(frame['side']) == {'interior', 'exterior'}
        assert frame['residual'].max() < 1e-10

    def test_json_report(self, tmp_path):
        output = tmp_path / "cap.json"
        assert run_main(['capacity', '--curve', 'circle', '--R', '2', '--n', '64', '--format', 'json'],
                        output) == EXIT_SUCCESS
        report = json.loads(output.read_text())
        assert set(report) == {'command', 'subcommand', 'config', 'metadata', 'table'}
        assert report['command'] == 'capacity'
        assert report['config']['R'] == 2.0
        assert report['table'][0]['capacity'] == pytest.approx(2.0, rel=1e-10)

    def test_outputs_are_deterministic(self, tmp_path):
        args = ['toeplitz', 'spectrum', '--q', '2', '--b', '1', '--R', '1.5', '--jmax', '20', '--precision', '128']
        assert run_main(args, tmp_path / "first.csv") == EXIT_SUCCESS
        assert run_main(args, tmp_path / "second.csv") == EXIT_SUCCESS
        assert (tmp_path / "first.csv").read_bytes() == (tmp_path / "second.csv").read_bytes()


class TestExitStatus:

    def test_invalid_parameter(self, tmp_path, capsys):
        assert run_main(['landau', 'level', '--b', '-1'], tmp_path / "x.csv") == EXIT_CONFIGURATION_ERROR
        assert "b must be positive" in capsys.readouterr().err

    def test_malformed_curve_file(self, tmp_path, capsys):
        curve = tmp_path / "bad.txt"
        curve.write_text("4\n0 1 0\n1.5707963267948966 0 1 7\n3.141592653589793 -1 0\n4.71238898038469 0 -1\n")
        status = run_main(['capacity', '--curve', str(curve), '--n', '64'], tmp_path / "cap.csv")
        assert status == EXIT_CONFIGURATION_ERROR
        assert "bad.txt:3:" in capsys.readouterr().err
        assert not (tmp_path / "cap.csv").exists()

    def test_numerical_failure(self, tmp_path, capsys):
        args = ['toeplitz', 'counting', '--d', '2', '--cutoff', '10', '--precision', '128', '--epsilon', '1e-300']
        assert run_main(args, tmp_path / "count.csv") == EXIT_NUMERICAL_ERROR
        assert "tensor_spectrum" in capsys.readouterr().err
        assert not (tmp_path / "count.csv").exists()

    def test_source_on_the_wrong_side(self, tmp_path, capsys):
        args = ['bie', 'represent', '--curve', 'circle', '--side', 'exterior', '--y0', '5,5', '--n', '64']
        assert run_main(args, tmp_path / "rep.csv") == EXIT_CONFIGURATION_ERROR
        assert "must lie strictly inside" in capsys.readouterr().err
        assert not (tmp_path / "rep.csv").exists()

    def test_linear_algebra_failure_is_numerical(self, tmp_path, capsys, monkeypatch):
        def singular(config):
            raise np.linalg.LinAlgError("Singular matrix")

        monkeypatch.setitem(workflow_manager.HANDLERS, ('landau', 'level'), singular)
        assert run_main(['landau', 'level'], tmp_path / "x.csv") == EXIT_NUMERICAL_ERROR
        assert "LinAlgError: Singular matrix" in capsys.readouterr().err

    def test_unexpected_exception_exits_numerical(self, tmp_path, capsys, monkeypatch):
        def broken(config):
            raise RuntimeError("lost track")

        monkeypatch.setitem(workflow_manager.HANDLERS, ('landau', 'level'), broken)
        assert run_main(['landau', 'level'], tmp_path / "x.csv") == EXIT_NUMERICAL_ERROR
        assert "unexpected RuntimeError: lost track" in capsys.readouterr().err
        assert not (tmp_path / "x.csv").exists()
