"""
Audit trail of emitted reports, keyed by SHA-256 digests.
"""
import hashlib
import logging
from pathlib import Path
from typing import Iterable, List, Optional

from lrbspectra.core.database import get_session_factory
from lrbspectra.models.report_log import ReportLog

logger = logging.getLogger(__name__)


def digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def digest_files(paths: Iterable[Path]) -> str:
    """Digest over the concatenated contents, each prefixed by its length."""
    h = hashlib.sha256()
    for path in paths:
        data = Path(path).read_bytes()
        h.update(len(data).to_bytes(8, "big"))
        h.update(data)
    return h.hexdigest()


def record_report(url: str, command: str, inputs: Iterable[Path], report_text: str, exit_code: int) -> ReportLog:
    session = get_session_factory(url)()
    try:
        entry = ReportLog(
            command=command,
            input_digest=digest_files(inputs),
            report_digest=digest_bytes(report_text.encode("utf-8")),
            exit_code=exit_code,
        )
        session.add(entry)
        session.commit()
        session.refresh(entry)
        session.expunge(entry)
        logger.info("ledger: recorded %s report %s", command, entry.report_digest[:12])
        return entry
    finally:
        session.close()


def list_reports(url: str) -> List[ReportLog]:
    """Newest first."""
    session = get_session_factory(url)()
    try:
        records = session.query(ReportLog).order_by(ReportLog.created_at.desc(), ReportLog.id.desc()).all()
        for record in records:
            session.expunge(record)
        return records
    finally:
        session.close()


def find_report(url: str, report_path: Path) -> tuple:
    """(digest, earliest matching record or None) for a report file on disk."""
    digest = digest_bytes(Path(report_path).read_bytes())
    session = get_session_factory(url)()
    try:
        record: Optional[ReportLog] = (
            session.query(ReportLog)
            .filter(ReportLog.report_digest == digest)
            .order_by(ReportLog.id)
            .first()
        )
        if record is not None:
            session.expunge(record)
        return digest, record
    finally:
        session.close()
