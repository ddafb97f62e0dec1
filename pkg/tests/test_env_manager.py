"""Tests for environment variable management"""
from unittest.mock import patch

import env_manager
from env_manager import WORKERS_VAR, get_env_file_path, read_env_value, read_worker_count


class TestEnvManager:
    """Test suite for env_manager module"""

    def test_env_file_in_project_root(self):
        """Test the .env path sits next to src/"""
        path = get_env_file_path()
        assert path.name == ".env"
        assert (path.parent / "src").is_dir()

    def test_reads_env_file(self, tmp_path, monkeypatch):
        """Test values come from the .env file when the environment is unset"""
        monkeypatch.delenv(WORKERS_VAR, raising=False)
        env_file = tmp_path / ".env"
        env_file.write_text(f"{WORKERS_VAR}=3\n")
        assert read_worker_count(env_file=env_file) == 3

    def test_environment_wins(self, tmp_path, monkeypatch):
        """Test the process environment takes precedence over .env"""
        env_file = tmp_path / ".env"
        env_file.write_text(f"{WORKERS_VAR}=3\n")
        monkeypatch.setenv(WORKERS_VAR, "6")
        assert read_worker_count(env_file=env_file) == 6

    def test_default_when_missing(self, tmp_path, monkeypatch):
        """Test the default is used when no value is set anywhere"""
        monkeypatch.delenv(WORKERS_VAR, raising=False)
        with patch.object(env_manager, "get_env_file_path", return_value=tmp_path / "missing.env"):
            assert read_worker_count(default=2) == 2
            assert read_env_value(WORKERS_VAR) is None

    def test_blank_value_is_unset(self, tmp_path, monkeypatch):
        monkeypatch.setenv(WORKERS_VAR, "  ")
        assert read_env_value(WORKERS_VAR, env_file=tmp_path / "missing.env") is None

    def test_invalid_values_fall_back(self, tmp_path, monkeypatch, caplog):
        """Test non-integer and non-positive counts log a warning"""
        missing = tmp_path / "missing.env"
        for raw in ("many", "0", "-2"):
            monkeypatch.setenv(WORKERS_VAR, raw)
            assert read_worker_count(default=1, env_file=missing) == 1
        assert sum(1 for r in caplog.records if r.levelname == "WARNING") == 3
