"""
Settings are read from the environment at construction time.
"""

import pytest

from kostant_bounds.config.base_settings import (
    AppSettings,
    CountSettings,
    LogSettings,
    ScalingSettings,
    get_settings,
    str_to_bool,
)


class TestStrToBool:
    @pytest.mark.parametrize('value', ['1', 'true', 'YES', 'On'])
    def test_truthy(self, value):
        assert str_to_bool(value)

    @pytest.mark.parametrize('value', ['0', 'false', 'no', ''])
    def test_falsy(self, value):
        assert not str_to_bool(value)


class TestSettings:
    def test_defaults(self, monkeypatch):
        for name in ('KOSTANT_MAX_STATES', 'KOSTANT_THREADS', 'SCALING_TOL', 'LOG_JSON'):
            monkeypatch.delenv(name, raising=False)
        assert CountSettings().MAX_STATES == 10**8
        assert CountSettings().THREADS == 1
        assert ScalingSettings().TOL == pytest.approx(1e-9)
        assert LogSettings().JSON is False

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv('KOSTANT_MAX_STATES', '1000')
        monkeypatch.setenv('SCALING_TOL', '1e-6')
        monkeypatch.setenv('LOG_JSON', 'true')
        assert CountSettings().MAX_STATES == 1000
        assert ScalingSettings().TOL == pytest.approx(1e-6)
        assert LogSettings().JSON is True

    def test_nonpositive_limits_rejected(self, monkeypatch):
        monkeypatch.setenv('KOSTANT_THREADS', '0')
        with pytest.raises(ValueError, match='positive'):
            CountSettings()

    def test_scaling_eps_range(self, monkeypatch):
        monkeypatch.setenv('SCALING_EPS', '1.5')
        with pytest.raises(ValueError):
            ScalingSettings()

    def test_invalid_mode(self, monkeypatch):
        monkeypatch.setenv('MODE', 'STAGING')
        with pytest.raises(ValueError, match='Invalid MODE'):
            AppSettings()

    def test_cached(self):
        assert get_settings() is get_settings()
