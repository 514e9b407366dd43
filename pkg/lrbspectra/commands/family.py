from typing import Tuple

from lrbspectra.core.config import RunConfig
from lrbspectra.core.errors import EXIT_OK
from lrbspectra.services.family_service import FAMILY_KINDS, FamilySpec, family_table
from lrbspectra.utils.table_io import dump_table


def add_parser(subparsers, parents):
    parser = subparsers.add_parser("family", parents=parents, help="write a built-in left regular band table")
    parser.add_argument("kind", choices=FAMILY_KINDS, help="free: free LRB; braid: braid arrangement faces")
    parser.add_argument("--n", type=int, required=True, help="number of letters / ground set size")
    return parser


def run(config: RunConfig, args) -> Tuple[str, int]:
    table = family_table(FamilySpec(args.kind, args.n), cap=config.cap)
    return dump_table(table), EXIT_OK
