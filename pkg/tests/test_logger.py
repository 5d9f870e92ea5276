import logging

import yaml

from orbicurves.logger import RunLogger


def owned_handlers(logger):
    return [h for h in logger.handlers if getattr(h, "_orbicurves_owned", False)]


def test_console_only_without_logs_dir():
    run_logger = RunLogger()
    assert run_logger.run_dir is None
    assert run_logger.save_command_details("classify", {"status": "ok"}) is None
    assert len(owned_handlers(run_logger.logger)) == 1
    run_logger.close()
    assert owned_handlers(run_logger.logger) == []


def test_run_directory_receives_log_and_details(tmp_path):
    run_logger = RunLogger(tmp_path / "logs")
    run_logger.logger.info("census started")
    saved = run_logger.save_command_details("census", {"status": "ok", "diagnostics": ["sporadic=3"]})
    run_logger.close()

    assert saved.parent == run_logger.run_dir
    assert yaml.safe_load(saved.read_text()) == {"status": "ok", "diagnostics": ["sporadic=3"]}
    (log_file,) = run_logger.run_dir.glob("orbicurves_*.log")
    assert "census started" in log_file.read_text()


def test_repeated_runs_do_not_stack_handlers(tmp_path):
    first = RunLogger(tmp_path)
    second = RunLogger(tmp_path)
    assert len(owned_handlers(second.logger)) == 2
    first.close()
    second.close()


def test_level_from_environment(monkeypatch):
    monkeypatch.setenv("ORBICURVES_LOG_LEVEL", "warning")
    run_logger = RunLogger()
    assert run_logger.logger.level == logging.WARNING
    run_logger.close()
