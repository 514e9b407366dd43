"""
The support lattice of a left regular band: principal left ideals Ss under
inclusion, meet = intersection, and the support map s -> Ss.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from lrbspectra.core.errors import NotALeftRegularBandError
from lrbspectra.services.semigroup_service import MultiplicationTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SupportLattice:
    members: Tuple[FrozenSet[int], ...]
    leq: np.ndarray = field(repr=False)
    meet: np.ndarray = field(repr=False)
    sigma: Tuple[int, ...]
    top: int
    bottom: int
    descending: Tuple[int, ...] = ()

    @property
    def m(self) -> int:
        return len(self.members)

    def less(self, x: int, y: int) -> bool:
        """Strict order x < y."""
        return x != y and bool(self.leq[x, y])

    def down_set(self, x: int, strict: bool = False) -> List[int]:
        return [y for y in range(self.m) if self.leq[y, x] and not (strict and y == x)]

    def strict_pairs(self) -> List[Tuple[int, int]]:
        """All (X, Y) with X > Y, lexicographic."""
        return [(x, y) for x in range(self.m) for y in range(self.m) if self.less(y, x)]


@dataclass(frozen=True)
class PairCheck:
    ok: bool
    counterexample: Optional[Tuple[int, int]] = None


def principal_left_ideal(T: MultiplicationTable, s: int) -> FrozenSet[int]:
    """Ss = {x*s : x in S}."""
    return frozenset(int(x) for x in T.product[:, s])


def descending_order(L: SupportLattice) -> Tuple[int, ...]:
    """Induction order: bottom first, top last; sorted by (ideal size, ideal id)."""
    return _linear_extension(L.members)


def _linear_extension(members: Sequence[FrozenSet[int]]) -> Tuple[int, ...]:
    # Proper inclusion forces a smaller size, so this sort respects the order
    return tuple(sorted(range(len(members)), key=lambda x: (len(members[x]), x)))


def build_support_lattice(T: MultiplicationTable) -> SupportLattice:
    if T.identity is None:
        raise NotALeftRegularBandError("support lattice needs a table with an identity")

    ids: Dict[FrozenSet[int], int] = {}
    members: List[FrozenSet[int]] = []
    sigma: List[int] = []
    for s in range(T.n):
        ideal = principal_left_ideal(T, s)
        if ideal not in ids:
            ids[ideal] = len(members)
            members.append(ideal)
        sigma.append(ids[ideal])

    m = len(members)
    leq = np.zeros((m, m), dtype=bool)
    meet = np.zeros((m, m), dtype=np.int64)
    for x in range(m):
        for y in range(m):
            leq[x, y] = members[x] <= members[y]
            intersection = members[x] & members[y]
            if intersection not in ids:
                raise NotALeftRegularBandError(
                    f"intersection of ideals {x} and {y} is not a principal left ideal"
                )
            meet[x, y] = ids[intersection]

    top = sigma[T.identity]
    if len(members[top]) != T.n:
        raise NotALeftRegularBandError("the identity does not generate the whole semigroup")
    minima = [x for x in range(m) if leq[x, :].all()]
    if len(minima) != 1:
        raise NotALeftRegularBandError(f"expected a unique minimal ideal, found {len(minima)}")

    leq.setflags(write=False)
    meet.setflags(write=False)
    lattice = SupportLattice(
        members=tuple(members),
        leq=leq,
        meet=meet,
        sigma=tuple(sigma),
        top=top,
        bottom=minima[0],
        descending=_linear_extension(members),
    )
    logger.debug("support lattice: %d elements, %d ideals", T.n, m)
    return lattice


def _first_pair(mask: np.ndarray) -> PairCheck:
    bad = np.argwhere(mask)
    if len(bad) == 0:
        return PairCheck(True)
    s, t = (int(v) for v in bad[0])
    return PairCheck(False, (s, t))


def verify_key_fact(T: MultiplicationTable, L: SupportLattice) -> PairCheck:
    """sigma(s) <= sigma(t) exactly when s*t = s, over all pairs."""
    sig = np.array(L.sigma)
    below = L.leq[sig[:, None], sig[None, :]]
    absorbed = T.product == np.arange(T.n)[:, None]
    return _first_pair(below != absorbed)


def verify_sigma_homomorphism(T: MultiplicationTable, L: SupportLattice) -> PairCheck:
    """sigma(s*t) = sigma(s) meet sigma(t), over all pairs."""
    sig = np.array(L.sigma)
    return _first_pair(sig[T.product] != L.meet[sig[:, None], sig[None, :]])


def hasse_covers(L: SupportLattice) -> List[Tuple[int, int]]:
    """Covering pairs (upper, lower): lower < upper with nothing strictly between."""
    covers = []
    for upper, lower in L.strict_pairs():
        if not any(L.less(lower, z) and L.less(z, upper) for z in range(L.m)):
            covers.append((upper, lower))
    return covers


def ideal_labels(T: MultiplicationTable, L: SupportLattice, x: int) -> List[str]:
    return [T.labels[s] for s in sorted(L.members[x])]


def _node_name(T: MultiplicationTable, L: SupportLattice, x: int) -> str:
    shown = [label if label else "()" for label in ideal_labels(T, L, x)]
    return "{" + ",".join(shown) + "}"


def lattice_to_dot(T: MultiplicationTable, L: SupportLattice) -> str:
    """Hasse diagram in DOT, top drawn uppermost."""
    lines = ["digraph support_lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for x in range(L.m):
        name = _node_name(T, L, x).replace('"', '\\"')
        lines.append(f'  n{x} [label="{name}"];')
    for upper, lower in hasse_covers(L):
        lines.append(f"  n{lower} -> n{upper};")
    lines.append("}")
    return "\n".join(lines) + "\n"
