import logging
import os
import yaml
from datetime import datetime
from pathlib import Path
from typing import Dict, Any, Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


class RunLogger:
    """Configures the ``orbicurves`` logger for one CLI invocation.

    Console output always goes to stderr. With a logs directory, a timestamped
    run directory receives the log file and one YAML file per command.
    """

    def __init__(self, logs_dir: Optional[Path] = None):
        self.logger = logging.getLogger("orbicurves")
        level_name = os.getenv("ORBICURVES_LOG_LEVEL") or os.getenv("LOG_LEVEL", "INFO")
        self.logger.setLevel(getattr(logging, level_name.upper(), logging.INFO))

        # run() may be called repeatedly in one process
        for handler in list(self.logger.handlers):
            if getattr(handler, "_orbicurves_owned", False):
                self.logger.removeHandler(handler)
                handler.close()

        formatter = logging.Formatter(LOG_FORMAT)
        console_handler = logging.StreamHandler()
        console_handler.setFormatter(formatter)
        self._own(console_handler)

        self.logs_dir = logs_dir
        self.run_dir: Optional[Path] = None
        if logs_dir is not None:
            self.logs_dir.mkdir(parents=True, exist_ok=True)
            self.timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
            self.run_dir = self.logs_dir / f"run_{self.timestamp}"
            self.run_dir.mkdir(exist_ok=True)

            log_file = self.run_dir / f"orbicurves_{self.timestamp}.log"
            file_handler = logging.FileHandler(log_file)
            file_handler.setFormatter(formatter)
            self._own(file_handler)
            self.logger.info(f"Logging initialized. Run directory: {self.run_dir}")

    def _own(self, handler: logging.Handler) -> None:
        handler._orbicurves_owned = True
        self.logger.addHandler(handler)

    def save_command_details(self, command: str, details: Dict[str, Any]) -> Optional[Path]:
        if self.run_dir is None:
            return None
        yaml_file = self.run_dir / f"{command}.yaml"

        with open(yaml_file, 'w') as f:
            yaml.dump(details, f, default_flow_style=False, allow_unicode=True)

        self.logger.info(f"Command details saved to: {yaml_file}")
        return yaml_file

    def close(self) -> None:
        for handler in list(self.logger.handlers):
            if getattr(handler, "_orbicurves_owned", False):
                self.logger.removeHandler(handler)
                handler.close()
