"""
Standard left regular bands and measures on them.

free_lrb(n): words of distinct letters, u*v = u followed by the new letters of v.
braid_faces(n): ordered set partitions of {1..n}, blockwise intersections.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from lrbspectra.core.config import ELEMENT_CAP
from lrbspectra.core.errors import ClosureCapExceededError, InvalidMeasureError
from lrbspectra.services.semigroup_service import MultiplicationTable
from lrbspectra.services.spectra_service import WeightedElement

logger = logging.getLogger(__name__)

FAMILY_KINDS = ("free", "braid")

Word = Tuple[int, ...]
Face = Tuple[FrozenSet[int], ...]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {self.kind!r}; expected one of {FAMILY_KINDS}")
        if self.n < 1:
            raise ValueError("family size must be a positive integer")

    def element_count(self) -> int:
        if self.kind == "free":
            return free_lrb_size(self.n)
        return ordered_set_partition_count(self.n)


def letter_label(i: int) -> str:
    return str(i) if i <= 9 else f"({i})"


def word_label(word: Word) -> str:
    return "".join(letter_label(i) for i in word)


def face_label(face: Face) -> str:
    return "|".join("".join(letter_label(i) for i in sorted(block)) for block in face)


def free_lrb_size(n: int) -> int:
    """sum_k n!/(n-k)!"""
    return sum(math.perm(n, k) for k in range(n + 1))


@lru_cache(maxsize=None)
def ordered_set_partition_count(n: int) -> int:
    """Ordered Bell (Fubini) numbers."""
    if n == 0:
        return 1
    return sum(math.comb(n, k) * ordered_set_partition_count(n - k) for k in range(1, n + 1))


def _check_cap(count: int, cap: int, what: str) -> None:
    if count > cap:
        raise ClosureCapExceededError(cap, f"{what} with {count} elements")


def word_product(u: Word, v: Word) -> Word:
    seen = set(u)
    return u + tuple(i for i in v if i not in seen)


def face_product(f: Face, g: Face) -> Face:
    return tuple(b & c for b in f for c in g if b & c)


def _table_from(elements: Sequence, product, labels: Sequence[str]) -> MultiplicationTable:
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for a, x in enumerate(elements):
        for b, y in enumerate(elements):
            table[a, b] = index[product(x, y)]
    return MultiplicationTable(tuple(labels), table, 0)


def free_lrb(n: int, cap: int = ELEMENT_CAP) -> MultiplicationTable:
    """Words by length, then lexicographically; the empty word (label "") is the identity."""
    if n < 1:
        raise ValueError("free_lrb needs n >= 1")
    _check_cap(free_lrb_size(n), cap, f"free_lrb({n})")
    letters = range(1, n + 1)
    words: List[Word] = [w for k in range(n + 1) for w in permutations(letters, k)]
    logger.debug("free_lrb(%d): %d words", n, len(words))
    return _table_from(words, word_product, [word_label(w) for w in words])


def ordered_set_partitions(n: int) -> List[Face]:
    """All ordered set partitions of {1..n}: fewer blocks first, then by block contents."""
    ground = list(range(1, n + 1))

    def set_partitions(items: List[int]) -> List[List[List[int]]]:
        if not items:
            return [[]]
        head, rest = items[0], items[1:]
        out = []
        for partition in set_partitions(rest):
            out.append([[head]] + partition)
            for i in range(len(partition)):
                out.append(partition[:i] + [[head] + partition[i]] + partition[i + 1:])
        return out

    faces = set()
    for partition in set_partitions(ground):
        for order in permutations(partition):
            faces.add(tuple(tuple(sorted(block)) for block in order))
    ordered = sorted(faces, key=lambda face: (len(face), face))
    return [tuple(frozenset(block) for block in face) for face in ordered]


def braid_faces(n: int, cap: int = ELEMENT_CAP) -> MultiplicationTable:
    """Face semigroup of the braid arrangement; the one-block partition is the identity."""
    if n < 2:
        raise ValueError("braid_faces needs n >= 2")
    _check_cap(ordered_set_partition_count(n), cap, f"braid_faces({n})")
    faces = ordered_set_partitions(n)
    logger.debug("braid_faces(%d): %d faces", n, len(faces))
    return _table_from(faces, face_product, [face_label(f) for f in faces])


def family_table(spec: FamilySpec, cap: int = ELEMENT_CAP) -> MultiplicationTable:
    if spec.kind == "free":
        return free_lrb(spec.n, cap)
    return braid_faces(spec.n, cap)


def move_to_front_measure(
    letter_weights: Sequence, T: Optional[MultiplicationTable] = None
) -> WeightedElement:
    """Weight i on the one-letter word "i" of free_lrb(len(letter_weights))."""
    weights = [Fraction(x) for x in letter_weights]
    if not weights:
        raise InvalidMeasureError("move-to-front needs at least one letter weight")
    if any(x < 0 for x in weights):
        raise InvalidMeasureError("letter weights must be nonnegative")
    if sum(weights) != 1:
        raise InvalidMeasureError("letter weights must sum to 1", total=sum(weights))
    T = T or free_lrb(len(weights))
    return WeightedElement(
        {T.index_of(letter_label(i)): x for i, x in enumerate(weights, start=1)}
    )


def uniform_measure(T: MultiplicationTable, support: Sequence[int]) -> WeightedElement:
    support = sorted(set(support))
    if not support:
        raise ValueError("uniform_measure needs a nonempty support")
    weight = Fraction(1, len(support))
    return WeightedElement({s: weight for s in support})


def two_block_faces(T: MultiplicationTable) -> List[int]:
    """Elements of a braid_faces table with exactly two blocks."""
    return [i for i, label in enumerate(T.labels) if label.count("|") == 1]


def letter_elements(T: MultiplicationTable, n: int) -> List[int]:
    """Indices of the one-letter words 1..n of a free_lrb(n) table."""
    return [T.index_of(letter_label(i)) for i in range(1, n + 1)]
