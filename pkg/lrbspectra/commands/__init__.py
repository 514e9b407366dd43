"""CLI commands; each module exposes ``add_parser`` and ``run``."""
from lrbspectra.commands import family, lattice, ledger, spectrum, validate, walk

COMMANDS = {
    "validate": validate,
    "lattice": lattice,
    "spectrum": spectrum,
    "walk": walk,
    "family": family,
    "ledger": ledger,
}

# Commands whose reports go to the ledger when one is configured
RECORDED = ("validate", "lattice", "spectrum", "walk")
