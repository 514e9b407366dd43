import logging
import sys
from typing import Optional

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

_handler: Optional[logging.StreamHandler] = None


def configure_logging(level: str = "WARNING") -> None:
    """Send lrbspectra logs to stderr; stdout is reserved for reports."""
    global _handler
    logger = logging.getLogger("lrbspectra")
    logger.setLevel(level.upper())
    if _handler is not None and _handler.stream is sys.stderr:
        return
    if _handler is not None:
        logger.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    logger.addHandler(_handler)
