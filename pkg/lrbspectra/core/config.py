import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from dotenv import load_dotenv

from lrbspectra.core.errors import InputError

logger = logging.getLogger(__name__)

# 1. Load variables from .env file
load_dotenv()


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default
    if value < 1:
        logger.warning("%s must be positive, using %d", name, default)
        return default
    return value


# 2. Read variables
ELEMENT_CAP = _int_setting("LRB_ELEMENT_CAP", 100_000)
COUNTEREXAMPLE_CAP = _int_setting("LRB_COUNTEREXAMPLE_CAP", 32)
LEDGER_URL = os.getenv("LRB_LEDGER_URL")
LOG_LEVEL = os.getenv("LRB_LOG_LEVEL", "WARNING")

# 3. Report format
SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation: a single command plus its files and flags."""

    command: str
    inputs: Tuple[Path, ...] = ()
    out: Optional[Path] = None
    side: str = "right"
    states: str = "all"
    cap: int = ELEMENT_CAP
    ledger_url: Optional[str] = LEDGER_URL
    log_level: str = LOG_LEVEL

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        inputs = tuple(
            Path(p) for p in (getattr(args, "table", None), getattr(args, "weights", None))
            if p is not None
        )
        for path in inputs:
            if not path.is_file():
                raise InputError(f"input file not found: {path}")
        return cls(
            command=args.command,
            inputs=inputs,
            out=Path(args.out) if getattr(args, "out", None) else None,
            side=getattr(args, "side", "right"),
            states=getattr(args, "states", "all"),
            cap=args.cap if args.cap is not None else ELEMENT_CAP,
            ledger_url=args.ledger or LEDGER_URL,
            log_level=args.log_level or LOG_LEVEL,
        )
