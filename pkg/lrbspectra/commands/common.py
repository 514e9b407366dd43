from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from lrbspectra.schema.reports import IdealLambdaOut, ViolationOut
from lrbspectra.services.lattice_service import SupportLattice, ideal_labels
from lrbspectra.services.semigroup_service import MultiplicationTable
from lrbspectra.services.spectra_service import LambdaTable
from lrbspectra.utils.rationals import format_rational


def lambdas_out(T: MultiplicationTable, L: SupportLattice, lt: LambdaTable) -> List[IdealLambdaOut]:
    return [
        IdealLambdaOut(id=x, members=ideal_labels(T, L, x), value=format_rational(lt[x]))
        for x in range(L.m)
    ]


def pair_out(pair: Optional[Tuple[int, int]]) -> Optional[ViolationOut]:
    if pair is None:
        return None
    return ViolationOut(upper=pair[0], lower=pair[1])


def kernel_dims_out(dims: Dict[Fraction, int]) -> Dict[str, int]:
    return {format_rational(value): dim for value, dim in sorted(dims.items())}
