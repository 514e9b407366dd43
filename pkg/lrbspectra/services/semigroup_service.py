"""
Finite semigroups as multiplication tables: closure under a product
oracle, structural validation, left-regular-band laws, identity adjunction.
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Generic, Hashable, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from lrbspectra.core.config import COUNTEREXAMPLE_CAP, ELEMENT_CAP
from lrbspectra.core.errors import (
    ClosureCapExceededError,
    InconsistentOracleError,
    NotALeftRegularBandError,
    UnknownLabelError,
)

logger = logging.getLogger(__name__)

E = TypeVar("E", bound=Hashable)


@dataclass(frozen=True, eq=False)
class MultiplicationTable:
    """
    A finite semigroup on the elements 0..n-1.

    ``product[a, b]`` is the index of a*b (row = left factor). ``identity``
    is None only for tables that still need ``adjoin_identity``.
    """

    labels: Tuple[str, ...]
    product: np.ndarray = field(repr=False)
    identity: Optional[int] = 0

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        table = np.array(self.product, dtype=np.int64)
        table.setflags(write=False)
        object.__setattr__(self, "product", table)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Plain-int copy of the table for tight Python loops."""
        return tuple(tuple(int(x) for x in row) for row in self.product)

    @cached_property
    def _label_index(self) -> Dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def mul(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiplicationTable):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.identity == other.identity
            and np.array_equal(self.product, other.product)
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.identity, self.product.tobytes()))


@dataclass(frozen=True)
class SemigroupDiagnostic:
    """Outcome of ``validate_semigroup``; ``indices`` locate the first violation."""

    ok: bool
    kind: Optional[str] = None
    indices: Tuple[int, ...] = ()
    message: str = "ok"


@dataclass(frozen=True)
class Counterexample:
    law: str  # "band" (x*x != x) or "left_regular" (x*y*x != x*y)
    x: int
    y: int


@dataclass(frozen=True)
class LawReport:
    is_band: bool
    is_left_regular: bool
    counterexamples: Tuple[Counterexample, ...] = ()


@dataclass(frozen=True)
class Closure(Generic[E]):
    """A closed table together with the abstract element behind each index."""

    table: MultiplicationTable
    elements: Tuple[Optional[E], ...]


# ============= Closure =============


def _default_encode(element) -> bytes:
    return repr(element).encode()


def close_with_elements(
    generator_labels: Sequence[str],
    product_oracle: Callable[[E, E], E],
    seed_elements: Sequence[E],
    identity: Optional[E] = None,
    cap: int = ELEMENT_CAP,
    encode: Callable[[E], bytes] = _default_encode,
    label: Optional[Callable[[E], str]] = None,
    identity_label: str = "e",
) -> Closure[E]:
    """
    Breadth-first closure of the seeds under right multiplication by the seeds.

    Element 0 is the identity (the oracle's ``identity`` when given, a formal
    one otherwise); the rest follow in discovery order, ties broken by
    generator order. Equality is byte equality of ``encode``.
    """
    if len(generator_labels) != len(seed_elements):
        raise ValueError("one label per seed element is required")

    elements: List[Optional[E]] = [identity]
    labels: List[str] = [label(identity) if (label and identity is not None) else identity_label]
    index: Dict[bytes, int] = {}
    if identity is not None:
        index[encode(identity)] = 0

    def admit(element: E, name: str) -> int:
        key = encode(element)
        found = index.get(key)
        if found is not None:
            return found
        if len(elements) >= cap:
            raise ClosureCapExceededError(cap)
        index[key] = len(elements)
        elements.append(element)
        labels.append(label(element) if label else name)
        return index[key]

    generators = [admit(seed, name) for seed, name in zip(seed_elements, generator_labels)]

    cursor = 1
    while cursor < len(elements):
        x = elements[cursor]
        for g in generators:
            admit(product_oracle(x, elements[g]), labels[cursor] + labels[g])
        cursor += 1

    n = len(elements)
    product = np.zeros((n, n), dtype=np.int64)
    product[0, :] = np.arange(n)
    product[:, 0] = np.arange(n)
    for a in range(1, n):
        for b in range(1, n):
            key = encode(product_oracle(elements[a], elements[b]))
            if key not in index:
                raise InconsistentOracleError(
                    f"product {labels[a]}*{labels[b]} left the closure; "
                    "the oracle disagrees with its own earlier products"
                )
            product[a, b] = index[key]

    if identity is not None:
        for s in range(1, n):
            key = encode(elements[s])
            if (
                encode(product_oracle(identity, elements[s])) != key
                or encode(product_oracle(elements[s], identity)) != key
            ):
                raise InconsistentOracleError(f"identity does not act trivially on {labels[s]}")

    if len(set(labels)) != n:
        raise ValueError("generated element labels are not distinct; pass a label function")
    logger.debug("closed %d generators to %d elements", len(generators), n)
    return Closure(MultiplicationTable(tuple(labels), product, 0), tuple(elements))


def close_generators(
    generator_labels: Sequence[str],
    product_oracle: Callable[[E, E], E],
    seed_elements: Sequence[E],
    **options,
) -> MultiplicationTable:
    return close_with_elements(generator_labels, product_oracle, seed_elements, **options).table


# ============= Validation =============


def validate_semigroup(T: MultiplicationTable) -> SemigroupDiagnostic:
    n = T.n
    table = T.product
    if table.shape != (n, n):
        return SemigroupDiagnostic(False, "shape", (), f"table has shape {table.shape}, expected ({n}, {n})")
    if len(set(T.labels)) != n:
        return SemigroupDiagnostic(False, "labels", (), "labels are not distinct")

    outside = np.argwhere((table < 0) | (table >= n))
    if len(outside):
        a, b = (int(v) for v in outside[0])
        return SemigroupDiagnostic(False, "closure", (a, b), f"product[{a}][{b}] = {table[a, b]} is not an element")

    e = T.identity
    if e is None or not 0 <= e < n:
        return SemigroupDiagnostic(False, "identity", (), f"identity index {e} is not an element")
    elements = np.arange(n)
    for name, row in (("left identity", table[e, :]), ("right identity", table[:, e])):
        bad = np.flatnonzero(row != elements)
        if len(bad):
            s = int(bad[0])
            return SemigroupDiagnostic(False, name, (s,), f"{name} law fails at element {s}")

    for a in range(n):
        # [b, c] -> (a*b)*c and a*(b*c)
        left = table[table[a], :]
        right = table[a, table]
        bad = np.argwhere(left != right)
        if len(bad):
            b, c = (int(v) for v in bad[0])
            return SemigroupDiagnostic(False, "associativity", (a, b, c), f"associativity fails at ({a}, {b}, {c})")
    return SemigroupDiagnostic(True)


def verify_left_regular_band(T: MultiplicationTable, cap: int = COUNTEREXAMPLE_CAP) -> LawReport:
    """Check x*x = x and x*y*x = x*y; at most ``cap`` counterexamples in total, band failures first."""
    n = T.n
    table = T.product
    elements = np.arange(n)

    not_idempotent = np.flatnonzero(table[elements, elements] != elements)
    # [x, y] -> (x*y)*x
    xyx = table[table, elements[:, None]]
    not_left_regular = np.argwhere(xyx != table)

    counterexamples = [Counterexample("band", int(x), int(x)) for x in not_idempotent[:cap]]
    remaining = cap - len(counterexamples)
    counterexamples += [Counterexample("left_regular", int(x), int(y)) for x, y in not_left_regular[:remaining]]
    report = LawReport(
        is_band=len(not_idempotent) == 0,
        is_left_regular=len(not_left_regular) == 0,
        counterexamples=tuple(counterexamples),
    )
    logger.debug("law check on %d elements: band=%s left_regular=%s", n, report.is_band, report.is_left_regular)
    return report


def is_left_regular_band(T: MultiplicationTable) -> bool:
    if not validate_semigroup(T).ok:
        return False
    report = verify_left_regular_band(T, cap=1)
    return report.is_band and report.is_left_regular


# ============= Identity =============


def _fresh_label(labels: Sequence[str]) -> str:
    taken = set(labels)
    for candidate in ("e", "1", "id"):
        if candidate not in taken:
            return candidate
    suffix = 0
    while f"e{suffix}" in taken:
        suffix += 1
    return f"e{suffix}"


def adjoin_identity(T: MultiplicationTable) -> MultiplicationTable:
    """
    Return a monoid version of ``T``.

    A table that declares an identity is returned as is. Otherwise a fresh
    identity is adjoined at index 0 and old indices shift by one, even if
    some old element happens to act neutrally.
    """
    if T.identity is not None:
        return T

    n = T.n + 1
    product = np.zeros((n, n), dtype=np.int64)
    product[0, :] = np.arange(n)
    product[:, 0] = np.arange(n)
    product[1:, 1:] = T.product + 1
    labels = (_fresh_label(T.labels),) + T.labels
    return MultiplicationTable(labels, product, 0)


def restrict(T: MultiplicationTable, generators: Sequence[int], cap: int = ELEMENT_CAP) -> Closure[int]:
    """Submonoid of ``T`` generated by ``generators``; ``elements`` is the embedding into T."""
    if T.identity is None:
        raise ValueError("restriction needs a table with an identity")
    seeds = [g for g in generators if g != T.identity]
    return close_with_elements(
        [T.labels[g] for g in seeds],
        T.mul,
        seeds,
        identity=T.identity,
        cap=cap,
        encode=lambda i: str(i).encode(),
        label=lambda i: T.labels[i],
    )


def require_left_regular_band(T: MultiplicationTable) -> None:
    """Raise NotALeftRegularBandError naming the first structural or law failure."""
    diagnostic = validate_semigroup(T)
    if not diagnostic.ok:
        raise NotALeftRegularBandError(f"not a monoid table: {diagnostic.message}")
    report = verify_left_regular_band(T, cap=1)
    if report.counterexamples:
        bad = report.counterexamples[0]
        raise NotALeftRegularBandError(
            f"{bad.law} law fails at ({T.labels[bad.x]!r}, {T.labels[bad.y]!r})"
        )
