from typing import Tuple

from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_DOMAIN, EXIT_OK
from lrbspectra.schema.reports import IdealOut, LatticeOut
from lrbspectra.services.lattice_service import (
    SupportLattice,
    build_support_lattice,
    hasse_covers,
    ideal_labels,
    lattice_to_dot,
    verify_key_fact,
    verify_sigma_homomorphism,
)
from lrbspectra.services.semigroup_service import MultiplicationTable, require_left_regular_band
from lrbspectra.utils.table_io import dump_report, load_table


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("lattice", parents=parents, help="support lattice of principal left ideals")
    parser.add_argument("table", help="semigroup table JSON")
    parser.add_argument("--dot", action="store_true", help="emit the Hasse diagram in DOT instead of JSON")
    return parser


def lattice_report(T: MultiplicationTable, L: SupportLattice) -> LatticeOut:
    return LatticeOut(
        m=L.m,
        ideals=[IdealOut(id=x, members=ideal_labels(T, L, x)) for x in range(L.m)],
        covers=[list(pair) for pair in hasse_covers(L)],
        top=L.top,
        bottom=L.bottom,
        sigma=list(L.sigma),
        descending=list(L.descending),
        key_fact_ok=verify_key_fact(T, L).ok,
        sigma_homomorphism_ok=verify_sigma_homomorphism(T, L).ok,
    )


def run(config: RunConfig, args) -> Tuple[str, int]:
    T = load_table(args.table)
    require_left_regular_band(T)
    L = build_support_lattice(T)
    report = lattice_report(T, L)
    code = EXIT_OK if report.key_fact_ok and report.sigma_homomorphism_ok else EXIT_DOMAIN
    if args.dot:
        return lattice_to_dot(T, L), code
    return dump_report(report), code
