"""logging setup for command line use"""

import json
import logging
import sys

LOG_FORMATS = ("text", "json")

# attributes every LogRecord carries; anything else came in through `extra`
_RECORD_ATTRS = frozenset(
    logging.LogRecord("", 0, "", 0, "", (), None).__dict__
) | {"message", "asctime"}


class JsonFormatter(logging.Formatter):
    """One JSON object per line, `extra` fields included."""

    def format(self, record):
        payload = {
            "time": self.formatTime(record, "%Y-%m-%dT%H:%M:%S"),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        for key, val in record.__dict__.items():
            if key not in _RECORD_ATTRS:
                payload[key] = val
        if record.exc_info:
            payload["exc_info"] = self.formatException(record.exc_info)
        return json.dumps(payload, default=str, ensure_ascii=False)


def configure_logging(level="INFO", log_format="text", stream=None):
    """Install a single stream handler on the `phoenixlib` logger.

    Parameters
    ----------
    level: str or int, default='INFO'
        Logging level of the package logger.

    log_format: str, default='text'
        One of `LOG_FORMATS`.

    stream: file-like, optional
        Target stream, by default `sys.stderr`.

    Returns
    -------
    logger: the configured package logger
    """
    if log_format not in LOG_FORMATS:
        msg = (
            f"Input parameter `log_format` must be one of {LOG_FORMATS}.\n"
            f"Instead received {log_format!r}."
        )
        raise ValueError(msg)
    logger = logging.getLogger("phoenixlib")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    handler = logging.StreamHandler(stream or sys.stderr)
    if log_format == "json":
        handler.setFormatter(JsonFormatter())
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
    logger.addHandler(handler)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    return logger
