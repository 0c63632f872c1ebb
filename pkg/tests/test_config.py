"""Tests for runtime settings."""

import json
import logging

import pytest

from sncsym.config import DEFAULT_SETTINGS, Settings
from sncsym.errors import SncsymError


class TestSettings:
    def test_defaults(self):
        assert Settings.load(environ={}) == DEFAULT_SETTINGS
        assert DEFAULT_SETTINGS.output_format == "text"

    def test_num_vars(self):
        assert Settings().num_vars(2, 1) == 4
        assert Settings(extra_vars=0).num_vars(0, 0) == 1

    def test_updated_skips_none(self):
        settings = Settings().updated(output_format=None, max_degree=5)
        assert settings.output_format == "text"
        assert settings.max_degree == 5

    @pytest.mark.parametrize("changes", [{"extra_vars": -1}, {"max_degree": -2}, {"output_format": "xml"}])
    def test_invalid(self, changes):
        with pytest.raises(SncsymError):
            Settings(**changes)


class TestLoad:
    def test_file(self, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"max_degree": 4, "output_format": "json"}))
        settings = Settings.load(str(path), environ={})
        assert settings.max_degree == 4
        assert settings.output_format == "json"

    def test_environment_beats_file(self, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"max_degree": 4}))
        settings = Settings.load(str(path), environ={"SNCSYM_MAX_DEGREE": "2", "SNCSYM_EXTRA_VARS": "3"})
        assert settings.max_degree == 2
        assert settings.extra_vars == 3

    def test_config_from_environment(self, tmp_path):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"output_format": "csv"}))
        assert Settings.load(environ={"SNCSYM_CONFIG": str(path)}).output_format == "csv"

    def test_unknown_key_ignored(self, tmp_path, caplog):
        path = tmp_path / "settings.json"
        path.write_text(json.dumps({"colour": "blue"}))
        with caplog.at_level(logging.WARNING, logger="sncsym.config"):
            assert Settings.load(str(path), environ={}) == DEFAULT_SETTINGS
        assert "colour" in caplog.text

    @pytest.mark.parametrize("content", ["[1, 2]", "{not json", ""])
    def test_bad_file(self, tmp_path, content):
        path = tmp_path / "settings.json"
        path.write_text(content)
        with pytest.raises(SncsymError):
            Settings.load(str(path), environ={})

    def test_missing_file(self, tmp_path):
        with pytest.raises(SncsymError):
            Settings.load(str(tmp_path / "absent.json"), environ={})

    def test_bad_number(self):
        with pytest.raises(SncsymError):
            Settings.load(environ={"SNCSYM_MAX_DEGREE": "many"})
