from typing import Tuple

from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_DOMAIN, EXIT_OK
from lrbspectra.schema.reports import CounterexampleOut, DiagnosticOut, LawReportOut
from lrbspectra.services.semigroup_service import (
    MultiplicationTable,
    validate_semigroup,
    verify_left_regular_band,
)
from lrbspectra.utils.table_io import dump_report, load_table


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("validate", parents=parents, help="check the monoid and left-regular-band laws")
    parser.add_argument("table", help="semigroup table JSON")
    return parser


def law_report(T: MultiplicationTable) -> LawReportOut:
    diagnostic = validate_semigroup(T)
    out = LawReportOut(
        valid=False,
        semigroup=DiagnosticOut(
            ok=diagnostic.ok,
            kind=diagnostic.kind,
            indices=list(diagnostic.indices),
            message=diagnostic.message,
        ),
    )
    if not diagnostic.ok:
        return out
    laws = verify_left_regular_band(T)
    out.is_band = laws.is_band
    out.is_left_regular = laws.is_left_regular
    out.counterexamples = [
        CounterexampleOut(law=c.law, x=T.labels[c.x], y=T.labels[c.y]) for c in laws.counterexamples
    ]
    out.valid = laws.is_band and laws.is_left_regular
    return out


def run(config: RunConfig, args) -> Tuple[str, int]:
    report = law_report(load_table(args.table))
    return dump_report(report), EXIT_OK if report.valid else EXIT_DOMAIN
