"""Small tables and constructors shared by the tests."""
from fractions import Fraction

from lrbspectra.services.semigroup_service import MultiplicationTable
from lrbspectra.services.spectra_service import WeightedElement

HALF = Fraction(1, 2)


def weighted(T: MultiplicationTable, mapping) -> WeightedElement:
    """{label: weight} -> WeightedElement on T."""
    return WeightedElement({T.index_of(label): Fraction(c) for label, c in mapping.items()})


def chain_monoid() -> MultiplicationTable:
    """{e, a, 0}: a idempotent, 0 absorbing; support lattice is a 3-chain."""
    return MultiplicationTable(("e", "a", "0"), [[0, 1, 2], [1, 1, 2], [2, 2, 2]], 0)


def trivial_monoid() -> MultiplicationTable:
    return MultiplicationTable(("e",), [[0]], 0)


def group_of_order_two() -> MultiplicationTable:
    return MultiplicationTable(("e", "g"), [[0, 1], [1, 0]], 0)


def rectangular_band() -> MultiplicationTable:
    """2x2 rectangular band (i,j)(k,l) = (i,l) with an identity adjoined."""
    pairs = [(i, j) for i in (1, 2) for j in (1, 2)]
    index = {p: k + 1 for k, p in enumerate(pairs)}
    table = [[0, 1, 2, 3, 4]]
    for p in pairs:
        table.append([index[p]] + [index[(p[0], q[1])] for q in pairs])
    labels = ("e",) + tuple(f"{i}{j}" for i, j in pairs)
    return MultiplicationTable(labels, table, 0)
