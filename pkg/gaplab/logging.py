"""
Log handling for the ``gaplab`` logger tree.

Console output goes to stderr; stdout is reserved for results.  A rotating
DEBUG file is added once `configure_log_directory` has been called.  Replicate
and brute-force workers run in other processes and ship their records back
through `LOGGER_QUEUE`, which a daemon thread in the parent drains.
"""
import logging
import logging.config
import multiprocessing as mp
import os
import threading
import time
from logging.handlers import QueueHandler
from pathlib import Path
from typing import Optional, Union

import yaml

from gaplab.exceptions import ConfigurationError

LOGGER_QUEUE = mp.Queue(-1)
LOGGER_THREAD: Optional[threading.Thread] = None
LOGGER_CFG_YAML = Path(__file__).parent / "logging.yml"
LOG_DIR: Optional[Path] = None
PACKAGE_LOGGER = "gaplab"
logger = logging.getLogger(__name__)


def worker_logging_configurer(queue: mp.Queue):
    """
    Pool initializer: swap the worker's inherited handlers for a single
    `QueueHandler` feeding ``queue``.
    """
    package = logging.getLogger(PACKAGE_LOGGER)
    if any(isinstance(h, QueueHandler) for h in package.handlers):
        return
    for handler in list(package.handlers):
        package.removeHandler(handler)
    package.addHandler(QueueHandler(queue))


def _drain(queue: mp.Queue):
    # a None sentinel stops the thread
    for record in iter(queue.get, None):
        logging.getLogger(record.name).handle(record)
    logger.debug("Log queue closed")


def configure_log_directory(dir_logs: Optional[Union[str, Path]]):
    """Set (or clear, with a falsy value) the directory for log files."""
    global LOG_DIR
    LOG_DIR = Path(dir_logs).expanduser().resolve() if dir_logs else None


def log_file_path(extension: str = ".log") -> Path:
    """
    A fresh ``<LOG_DIR>/<YYYY_MM>/<user>_<dd_HHhMMmSSs><extension>``.

    Raises
    ------
    ConfigurationError
        If no log directory has been configured.
    """
    if LOG_DIR is None:
        raise ConfigurationError("No log directory; call configure_log_directory first")
    month_dir = LOG_DIR / time.strftime("%Y_%m")
    month_dir.mkdir(parents=True, exist_ok=True)
    user = os.environ.get("USER", PACKAGE_LOGGER)
    path = month_dir / f"{user}_{time.strftime('%d_%Hh%Mm%Ss')}{extension}"
    path.touch()
    return path


def setup_logging(level: Union[int, str] = logging.INFO):
    """
    Apply ``logging.yml`` at ``level`` and start the queue listener.

    Only the first call has an effect.  The file handler is dropped unless
    a log directory is configured; when present it always records DEBUG.
    """
    global LOGGER_THREAD
    if LOGGER_THREAD is not None:
        logger.debug("Logging already set up")
        return

    with open(LOGGER_CFG_YAML) as fd:
        config = yaml.safe_load(fd)
    package = config["loggers"][PACKAGE_LOGGER]
    if LOG_DIR is None:
        del config["handlers"]["logfile"]
        package["handlers"].remove("logfile")
    else:
        config["handlers"]["logfile"]["filename"] = str(log_file_path())
    config["handlers"]["console"]["level"] = level
    package["level"] = level
    logging.config.dictConfig(config)

    LOGGER_THREAD = threading.Thread(target=_drain, args=(LOGGER_QUEUE,), daemon=True)
    LOGGER_THREAD.start()
