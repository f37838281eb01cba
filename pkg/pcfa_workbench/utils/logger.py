# utils/logger.py

import logging
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from typing import Optional

from pythonjsonlogger import jsonlogger

from pcfa_workbench.configs import GlobalConfig, app_configs

ROOT_LOGGER_NAME = "pcfa_workbench"

CONSOLE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
JSON_FORMAT = '%(asctime)s %(name)s %(levelname)s %(message)s'

_HANDLER_MARK = "_pcfa_workbench_handler"


def _build_formatter(as_json: bool, fmt: str) -> logging.Formatter:
    if as_json:
        return jsonlogger.JsonFormatter(JSON_FORMAT)
    return logging.Formatter(fmt)


def setup_logging(config: Optional[GlobalConfig] = None, level: Optional[str] = None) -> logging.Logger:
    """Configure the package logger from settings.

    Calling it again replaces the handlers it installed before, so the CLI
    can re-apply a --log-level override.
    """
    config = config or app_configs
    settings = config.get_logging_config()

    logger = logging.getLogger(ROOT_LOGGER_NAME)
    logger.setLevel(getattr(logging, (level or settings["level"]).upper()))

    for handler in list(logger.handlers):
        if getattr(handler, _HANDLER_MARK, False):
            logger.removeHandler(handler)
            handler.close()

    # diagnostics only; report text goes to stdout
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(_build_formatter(settings["json"], CONSOLE_FORMAT))
    setattr(console_handler, _HANDLER_MARK, True)
    logger.addHandler(console_handler)

    if settings["file_enabled"]:
        logs_dir = settings["logs_dir"]
        logs_dir.mkdir(parents=True, exist_ok=True)
        log_file = logs_dir.joinpath(f"pcfa_workbench_{datetime.now().strftime('%Y%m%d')}.log")
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=10 * 1024 * 1024,
            backupCount=5,
            encoding='utf-8'
        )
        file_handler.setFormatter(_build_formatter(settings["json"], FILE_FORMAT))
        setattr(file_handler, _HANDLER_MARK, True)
        logger.addHandler(file_handler)

    # Prevent propagation to root logger
    logger.propagate = False
    return logger
