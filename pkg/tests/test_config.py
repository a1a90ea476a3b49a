import json
from fractions import Fraction

import pytest

from parasim.config import OutputFormat, RunConfig, apply_overrides, load_run_config, parse_fraction
from parasim.contradiction import RepairPolicy
from parasim.errors import ConfigError
from parasim.hierarchy import ClusterMode


def write_config(tmp_path, data):
    path = tmp_path / 'run_config.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    return str(path)


class TestLoadRunConfig:
    def test_project_defaults(self):
        config = load_run_config()
        assert config.theta == Fraction(2, 5)
        assert config.mode is ClusterMode.CONNECTED_COMPONENTS
        assert config.repair_policy is RepairPolicy.DROP_NEGATIVE
        assert config.output_format is OutputFormat.HUMAN
        assert config.decimal_precision == 2

    def test_file_values(self, tmp_path):
        path = write_config(tmp_path, {'_note': 'ignored', 'theta': 0.25, 'mode': 'strict-clique'})
        config = load_run_config(path)
        assert config.theta == Fraction(1, 4)
        assert config.mode is ClusterMode.STRICT_CLIQUE

    def test_overrides_win(self, tmp_path):
        path = write_config(tmp_path, {'theta': '1/2'})
        config = load_run_config(path, {'theta': '-1/6', 'decimal_precision': None})
        assert config.theta == Fraction(-1, 6)
        assert config.decimal_precision == 2

    def test_missing_explicit_path(self, tmp_path):
        with pytest.raises(ConfigError):
            load_run_config(str(tmp_path / 'nope.json'))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / 'run_config.json'
        path.write_text('{theta: ', encoding='utf-8')
        with pytest.raises(ConfigError):
            load_run_config(str(path))

    @pytest.mark.parametrize('data, key', [
        ({'theta': 2}, 'theta'),
        ({'theta': 'half'}, 'theta'),
        ({'mode': 'kmeans'}, 'mode'),
        ({'repair_policy': 'manual'}, 'repair_policy'),
        ({'decimal_precision': -1}, 'decimal_precision'),
        ({'enumerate_limit': 0}, 'enumerate_limit'),
        ({'strict_repairability': 'yes'}, 'strict_repairability'),
        ({'colour': 'blue'}, 'colour'),
    ])
    def test_rejected_values(self, tmp_path, data, key):
        with pytest.raises(ConfigError) as excinfo:
            load_run_config(write_config(tmp_path, data))
        assert excinfo.value.key == key


class TestParseFraction:
    @pytest.mark.parametrize('value, expected', [
        ('0.4', Fraction(2, 5)),
        ('2/5', Fraction(2, 5)),
        (0.4, Fraction(2, 5)),
        (-1, Fraction(-1)),
        (' -1/6 ', Fraction(-1, 6)),
    ])
    def test_exact(self, value, expected):
        assert parse_fraction('theta', value) == expected

    def test_bool_rejected(self):
        with pytest.raises(ConfigError):
            parse_fraction('theta', True)


def test_apply_overrides_keeps_frozen_original():
    base = RunConfig()
    changed = apply_overrides(base, {'output_format': 'tsv'})
    assert changed.output_format is OutputFormat.TSV
    assert base.output_format is OutputFormat.HUMAN
