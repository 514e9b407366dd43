from typing import Tuple

from lrbspectra.commands.common import kernel_dims_out, lambdas_out, pair_out
from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_DOMAIN, EXIT_OK
from lrbspectra.schema.reports import RestrictedOut, WalkReportOut
from lrbspectra.services.lattice_service import build_support_lattice
from lrbspectra.services.semigroup_service import MultiplicationTable, require_left_regular_band
from lrbspectra.services.walk_service import STATE_SPACES, WalkAnalysis, analyze_walk
from lrbspectra.utils.rationals import format_rational, format_rationals
from lrbspectra.utils.table_io import dump_report, load_table, load_weights


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("walk", parents=parents, help="random walk driven by a probability measure")
    parser.add_argument("table", help="semigroup table JSON")
    parser.add_argument("--weights", required=True, help="probability weights JSON keyed by label")
    parser.add_argument("--states", choices=STATE_SPACES, default="all", help="state space of the walk")
    return parser


def walk_out(T: MultiplicationTable, analysis: WalkAnalysis) -> WalkReportOut:
    L = build_support_lattice(T)
    walk = analysis.walk
    restricted = None
    if analysis.restricted is not None:
        r = analysis.restricted
        sub = r.submonoid.table
        restricted = RestrictedOut(
            labels=list(sub.labels),
            lambdas=lambdas_out(sub, r.lattice, r.lambda_table),
            hypothesis_ok=r.lambda_table.hypothesis_ok,
            monotonicity_ok=r.monotonicity.ok,
            monotonicity_witness=pair_out(r.monotonicity.witness),
            diagonalizable=r.spectrum.diagonalizable,
            minimal_polynomial=format_rationals(r.spectrum.minimal_poly.coefficients),
        )
    return WalkReportOut(
        states=walk.state_space,
        state_labels=[T.labels[x] for x in walk.states],
        matrix=[[format_rational(x) for x in row] for row in walk.matrix.tolist()],
        generates_all=analysis.submonoid.generates_all,
        lambdas=lambdas_out(T, L, analysis.lambda_table),
        monotonicity_ok=analysis.monotonicity.ok,
        monotonicity_witness=pair_out(analysis.monotonicity.witness),
        annihilation_ok=walk.annihilation_ok,
        kernel_dims=kernel_dims_out(walk.kernel_dims),
        restricted=restricted,
        notes=list(walk.notes),
    )


def exit_code(analysis: WalkAnalysis) -> int:
    if analysis.walk.annihilation_ok is False:
        return EXIT_DOMAIN
    if analysis.submonoid.generates_all and not analysis.monotonicity.ok:
        return EXIT_DOMAIN
    if analysis.restricted is not None and not analysis.restricted.monotonicity.ok:
        return EXIT_DOMAIN
    return EXIT_OK


def run(config: RunConfig, args) -> Tuple[str, int]:
    T = load_table(args.table)
    require_left_regular_band(T)
    w = load_weights(args.weights, T)
    analysis = analyze_walk(w, T, states=config.states, cap=config.cap)
    return dump_report(walk_out(T, analysis)), exit_code(analysis)
