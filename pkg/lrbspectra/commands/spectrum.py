from typing import Tuple

from lrbspectra.commands.common import kernel_dims_out, lambdas_out, pair_out
from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_DOMAIN, EXIT_HYPOTHESIS, EXIT_OK
from lrbspectra.schema.reports import SpectrumReportOut
from lrbspectra.services.lattice_service import SupportLattice, build_support_lattice
from lrbspectra.services.semigroup_service import MultiplicationTable, require_left_regular_band
from lrbspectra.services.spectra_service import SpectrumReport, spectrum_report
from lrbspectra.utils.rationals import format_rationals
from lrbspectra.utils.table_io import dump_report, load_table, load_weights


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("spectrum", parents=parents, help="eigenvalues and diagonalizability of a weighted element")
    parser.add_argument("table", help="semigroup table JSON")
    parser.add_argument("--weights", required=True, help='weights JSON: {"weights": {label: "p/q"}}')
    parser.add_argument("--side", choices=("right", "left"), default="right", help="regular representation side")
    return parser


def spectrum_out(T: MultiplicationTable, L: SupportLattice, report: SpectrumReport) -> SpectrumReportOut:
    lt = report.lambda_table
    return SpectrumReportOut(
        side=report.side,
        n=T.n,
        lambdas=lambdas_out(T, L, lt),
        distinct=format_rationals(lt.distinct),
        hypothesis_ok=lt.hypothesis_ok,
        violation=pair_out(lt.violation),
        minimal_polynomial=format_rationals(report.minimal_poly.coefficients),
        minimal_polynomial_text=str(report.minimal_poly),
        annihilation_ok=report.annihilation_ok,
        lemma1_ok=report.lemma1_ok,
        lemma2_ok=report.lemma2_ok,
        induction_ok=report.induction_ok,
        minimal_poly_divides_product=report.minimal_poly_divides_product,
        diagonalizable=report.diagonalizable,
        kernel_dims=kernel_dims_out(report.kernel_dims),
        notes=list(report.notes),
    )


def exit_code(report: SpectrumReport) -> int:
    if not report.verified:
        return EXIT_DOMAIN
    if not report.hypothesis_holds:
        return EXIT_HYPOTHESIS
    return EXIT_OK


def run(config: RunConfig, args) -> Tuple[str, int]:
    T = load_table(args.table)
    require_left_regular_band(T)
    w = load_weights(args.weights, T)
    L = build_support_lattice(T)
    report = spectrum_report(w, T, L, side=config.side)
    return dump_report(spectrum_out(T, L, report)), exit_code(report)
