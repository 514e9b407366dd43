"""
Probability measures on a left regular band and the random walks they drive.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from lrbspectra.core.config import ELEMENT_CAP
from lrbspectra.core.errors import InvalidMeasureError
from lrbspectra.services.lattice_service import SupportLattice, build_support_lattice
from lrbspectra.services.semigroup_service import MultiplicationTable, restrict
from lrbspectra.services.spectra_service import (
    LambdaTable,
    SpectrumReport,
    WeightedElement,
    lambda_table,
    spectrum_report,
)
from lrbspectra.utils.exact_linalg import RationalMatrix, apply_linear_factors, kernel_dimension
from lrbspectra.utils.rationals import format_rational

logger = logging.getLogger(__name__)

STATE_SPACES = ("all", "minimal-ideal")


@dataclass(frozen=True)
class ProbabilityMeasure:
    element: WeightedElement


@dataclass(frozen=True)
class Submonoid:
    table: MultiplicationTable
    embedding: Tuple[int, ...]  # submonoid index -> element of the ambient table
    generates_all: bool

    def pull_back(self, w: WeightedElement) -> WeightedElement:
        """Re-index w (supported inside the submonoid) on the submonoid's own elements."""
        position = {t: i for i, t in enumerate(self.embedding)}
        return WeightedElement({position[t]: c for t, c in w.items()})


@dataclass(frozen=True)
class MonotonicityCheck:
    ok: bool
    witness: Optional[Tuple[int, int]] = None


@dataclass(frozen=True)
class WalkReport:
    state_space: str
    states: Tuple[int, ...]
    matrix: RationalMatrix
    annihilation_ok: Optional[bool]
    kernel_dims: Dict[Fraction, int] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()


@dataclass(frozen=True)
class RestrictedAnalysis:
    submonoid: Submonoid
    lattice: SupportLattice
    lambda_table: LambdaTable
    monotonicity: MonotonicityCheck
    spectrum: SpectrumReport


@dataclass(frozen=True)
class WalkAnalysis:
    measure: ProbabilityMeasure
    submonoid: Submonoid
    lambda_table: LambdaTable
    monotonicity: MonotonicityCheck
    walk: WalkReport
    restricted: Optional[RestrictedAnalysis] = None


def validate_probability(w: WeightedElement, T: Optional[MultiplicationTable] = None) -> ProbabilityMeasure:
    for t, c in w.items():
        if c < 0:
            name = T.labels[t] if T is not None else str(t)
            raise InvalidMeasureError(
                f"negative weight {format_rational(c)} on element {name!r}", element=t
            )
    total = w.total()
    if total != 1:
        raise InvalidMeasureError(f"weights sum to {format_rational(total)}, not 1", total=total)
    return ProbabilityMeasure(w)


def support_submonoid(w: WeightedElement, T: MultiplicationTable, cap: int = ELEMENT_CAP) -> Submonoid:
    """Submonoid generated by the support of w (plus the identity)."""
    closure = restrict(T, list(w.support), cap=cap)
    submonoid = Submonoid(
        table=closure.table,
        embedding=tuple(closure.elements),
        generates_all=closure.table.n == T.n,
    )
    if not submonoid.generates_all:
        logger.warning("support generates %d of %d elements", closure.table.n, T.n)
    return submonoid


def check_strict_monotonicity(lt: LambdaTable, L: SupportLattice) -> MonotonicityCheck:
    """lambda_X < lambda_Y whenever X > Y: the eigenvalues grow strictly going down the lattice."""
    for x, y in L.strict_pairs():
        if not lt[x] < lt[y]:
            return MonotonicityCheck(False, (x, y))
    return MonotonicityCheck(True)


def minimal_ideal(L: SupportLattice) -> Tuple[int, ...]:
    return tuple(sorted(L.members[L.bottom]))


def walk_transition_matrix(
    p: ProbabilityMeasure,
    T: MultiplicationTable,
    states: str = "all",
    L: Optional[SupportLattice] = None,
) -> WalkReport:
    """
    Row-stochastic matrix of the walk x -> t*x, t drawn with probability w_t.

    On "minimal-ideal" the states are the elements of least support, which
    left multiplication never leaves.
    """
    if states not in STATE_SPACES:
        raise ValueError(f"states must be one of {STATE_SPACES}, got {states!r}")
    L = L or build_support_lattice(T)
    state_ids = tuple(range(T.n)) if states == "all" else minimal_ideal(L)
    position = {x: i for i, x in enumerate(state_ids)}

    size = len(state_ids)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i, x in enumerate(state_ids):
        for t, c in p.element.items():
            rows[i][position[T.mul(t, x)]] += c
    P = RationalMatrix.from_rows(rows)
    if any(total != 1 for total in P.row_sums()):
        raise AssertionError("transition matrix is not row-stochastic")

    lt = lambda_table(p.element, L)
    annihilation = None
    notes: List[str] = []
    if lt.hypothesis_ok:
        annihilation = apply_linear_factors(P, lt.distinct).is_zero()
    else:
        notes.append("hypothesis fails on the full semigroup; annihilation not checked")
    kernel_dims = {}
    for value in lt.distinct:
        dim = kernel_dimension(P.shift(value))
        if dim:
            kernel_dims[value] = dim
    if Fraction(1) in kernel_dims:
        notes.append(f"eigenvalue 1 has a {kernel_dims[Fraction(1)]}-dimensional eigenspace")
    return WalkReport(
        state_space=states,
        states=state_ids,
        matrix=P,
        annihilation_ok=annihilation,
        kernel_dims=kernel_dims,
        notes=tuple(notes),
    )


def analyze_walk(
    w: WeightedElement,
    T: MultiplicationTable,
    states: str = "all",
    cap: int = ELEMENT_CAP,
) -> WalkAnalysis:
    """
    Full probability workflow: validate, check generation and monotonicity,
    build the walk, and recompute everything on the generated submonoid when
    the support does not generate.
    """
    measure = validate_probability(w, T)
    L = build_support_lattice(T)
    lt = lambda_table(w, L)
    monotonicity = check_strict_monotonicity(lt, L)
    submonoid = support_submonoid(w, T, cap=cap)
    walk = walk_transition_matrix(measure, T, states, L)

    restricted = None
    if not submonoid.generates_all:
        sub_w = submonoid.pull_back(w)
        sub_lattice = build_support_lattice(submonoid.table)
        sub_lt = lambda_table(sub_w, sub_lattice)
        restricted = RestrictedAnalysis(
            submonoid=submonoid,
            lattice=sub_lattice,
            lambda_table=sub_lt,
            monotonicity=check_strict_monotonicity(sub_lt, sub_lattice),
            spectrum=spectrum_report(sub_w, submonoid.table, sub_lattice),
        )
    elif not monotonicity.ok:
        logger.error("generating measure violates strict monotonicity at %s", monotonicity.witness)
    return WalkAnalysis(
        measure=measure,
        submonoid=submonoid,
        lambda_table=lt,
        monotonicity=monotonicity,
        walk=walk,
        restricted=restricted,
    )
