from pathlib import Path
from typing import Tuple

from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_DOMAIN, EXIT_OK, InputError
from lrbspectra.models.report_log import ReportLog
from lrbspectra.schema.reports import LedgerEntryOut, LedgerOut, LedgerVerifyOut
from lrbspectra.services.ledger_service import find_report, list_reports
from lrbspectra.utils.table_io import dump_report


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("ledger", parents=parents, help="inspect the report ledger")
    actions = parser.add_subparsers(dest="action", required=True)
    actions.add_parser("list", help="all recorded reports, newest first")
    verify = actions.add_parser("verify", help="check that a report file was recorded")
    verify.add_argument("report", help="report file to look up")
    return parser


def entry_out(record: ReportLog) -> LedgerEntryOut:
    return LedgerEntryOut(
        id=record.id,
        command=record.command,
        input_digest=record.input_digest,
        report_digest=record.report_digest,
        exit_code=record.exit_code,
        created_at=record.created_at.isoformat() if record.created_at else "",
    )


def run(config: RunConfig, args) -> Tuple[str, int]:
    if not config.ledger_url:
        raise InputError("no ledger configured; pass --ledger URL or set LRB_LEDGER_URL")
    if args.action == "list":
        records = list_reports(config.ledger_url)
        report = LedgerOut(total_records=len(records), records=[entry_out(r) for r in records])
        return dump_report(report), EXIT_OK

    path = Path(args.report)
    if not path.is_file():
        raise InputError(f"report file not found: {path}")
    digest, record = find_report(config.ledger_url, path)
    report = LedgerVerifyOut(
        report_digest=digest,
        recorded=record is not None,
        record=entry_out(record) if record is not None else None,
    )
    return dump_report(report), EXIT_OK if record is not None else EXIT_DOMAIN
