from datetime import datetime, timezone

from sqlalchemy import Column, DateTime, Integer, String

from lrbspectra.core.database import Base


def _utcnow() -> datetime:
    return datetime.now(timezone.utc)


class ReportLog(Base):
    """
    One emitted report.

    Only digests are stored: the input files and the report bytes can be
    re-hashed later to prove a report came from a recorded run.
    """
    __tablename__ = "report_logs"

    id = Column(Integer, primary_key=True, index=True)

    command = Column(String, index=True)  # validate, lattice, spectrum, walk
    input_digest = Column(String, index=True)
    report_digest = Column(String, index=True)
    exit_code = Column(Integer)

    created_at = Column(DateTime, default=_utcnow, index=True)

    def __repr__(self):
        return f"<ReportLog(id={self.id}, command={self.command}, report_digest={self.report_digest[:12]})>"
