"""
Spectra of weighted elements w = sum w_t t of a left regular band algebra.

The eigenvalue attached to an ideal X is the total weight of the elements
whose support lies above X. When strictly comparable ideals never share a
value, w is annihilated by the product of (w - lambda) over the distinct
values, which makes its minimal polynomial squarefree. The checks here
recompute every step of that argument exactly.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from lrbspectra.core.errors import HypothesisNotSatisfiedError, InputError, LemmaViolationError
from lrbspectra.services.lattice_service import SupportLattice
from lrbspectra.services.semigroup_service import MultiplicationTable
from lrbspectra.utils.exact_linalg import (
    RationalMatrix,
    RationalPoly,
    apply_linear_factors,
    kernel_dimension,
    minimal_polynomial,
    poly_product_of_linear_factors,
    squarefree_check,
)
from lrbspectra.utils.rationals import format_rational

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


class WeightedElement:
    """Sparse element of the semigroup algebra; zero coefficients are never stored."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Optional[Mapping[int, object]] = None):
        canonical = {}
        for t, c in (coefficients or {}).items():
            c = Fraction(c)
            if c != 0:
                canonical[int(t)] = c
        self._coefficients = dict(sorted(canonical.items()))

    @classmethod
    def unit(cls, s: int, scale=1) -> "WeightedElement":
        return cls({s: scale})

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._coefficients)

    def coefficient(self, t: int) -> Fraction:
        return self._coefficients.get(t, ZERO)

    def items(self):
        return self._coefficients.items()

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(self._coefficients)

    def total(self) -> Fraction:
        return sum(self._coefficients.values(), ZERO)

    def is_zero(self) -> bool:
        return not self._coefficients

    def scale(self, c) -> "WeightedElement":
        return WeightedElement({t: c * x for t, x in self.items()})

    def __add__(self, other: "WeightedElement") -> "WeightedElement":
        merged = dict(self._coefficients)
        for t, c in other.items():
            merged[t] = merged.get(t, ZERO) + c
        return WeightedElement(merged)

    def __sub__(self, other: "WeightedElement") -> "WeightedElement":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedElement):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(tuple(self._coefficients.items()))

    def __repr__(self) -> str:
        terms = " + ".join(f"{format_rational(c)}*[{t}]" for t, c in self.items())
        return f"WeightedElement({terms or '0'})"


@dataclass(frozen=True)
class LambdaTable:
    values: Tuple[Fraction, ...]  # indexed by ideal id
    distinct: Tuple[Fraction, ...]
    hypothesis_ok: bool
    violation: Optional[Tuple[int, int]] = None

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]


@dataclass(frozen=True)
class EigenPolys:
    p_roots: Tuple[Tuple[Fraction, ...], ...]
    q_roots: Tuple[Tuple[Fraction, ...], ...]
    p: Tuple[RationalPoly, ...]
    q: Tuple[RationalPoly, ...]


@dataclass(frozen=True)
class ElementCheck:
    ok: bool
    failing: Optional[int] = None


@dataclass(frozen=True)
class SpectrumReport:
    lambda_table: LambdaTable
    minimal_poly: RationalPoly
    annihilation_ok: Optional[bool]
    lemma1_ok: bool
    lemma2_ok: Optional[bool]
    induction_ok: Optional[bool]
    minimal_poly_divides_product: Optional[bool]
    diagonalizable: bool
    kernel_dims: Dict[Fraction, int] = field(default_factory=dict)
    side: str = "right"
    notes: Tuple[str, ...] = ()

    @property
    def hypothesis_holds(self) -> bool:
        return self.lambda_table.hypothesis_ok

    @property
    def verified(self) -> bool:
        """Every check the hypothesis licenses came out true."""
        if not self.lemma1_ok:
            return False
        if not self.hypothesis_holds:
            return True
        return all(
            (
                self.annihilation_ok,
                self.lemma2_ok,
                self.induction_ok,
                self.minimal_poly_divides_product,
                self.diagonalizable,
            )
        )


# ============= Algebra =============


def _check_dimension(w: WeightedElement, n: int) -> None:
    outside = [t for t in w.support if not 0 <= t < n]
    if outside:
        raise InputError(f"weight dimension mismatch: element {outside[0]} of a {n}-element band")


def algebra_multiply(a: WeightedElement, b: WeightedElement, T: MultiplicationTable) -> WeightedElement:
    rows = T.rows
    acc: Dict[int, Fraction] = {}
    for s, x in a.items():
        row = rows[s]
        for t, y in b.items():
            k = row[t]
            acc[k] = acc.get(k, ZERO) + x * y
    return WeightedElement(acc)


def _times_linear_factor(v: WeightedElement, w: WeightedElement, root: Fraction, T: MultiplicationTable) -> WeightedElement:
    """v * (w - root * 1)"""
    return algebra_multiply(v, w, T) - v.scale(root)


def _apply_factors(v: WeightedElement, w: WeightedElement, roots: Iterable[Fraction], T: MultiplicationTable) -> WeightedElement:
    for root in roots:
        if v.is_zero():
            break
        v = _times_linear_factor(v, w, root, T)
    return v


# ============= Eigenvalues =============


def _lambda_at(x: int, w: WeightedElement, L: SupportLattice) -> Fraction:
    return sum((c for t, c in w.items() if L.leq[x, L.sigma[t]]), ZERO)


def lambda_table(w: WeightedElement, L: SupportLattice) -> LambdaTable:
    _check_dimension(w, len(L.sigma))
    values = tuple(_lambda_at(x, w, L) for x in range(L.m))
    violation = next(
        ((x, y) for x, y in L.strict_pairs() if values[x] == values[y]),
        None,
    )
    table = LambdaTable(
        values=values,
        distinct=tuple(sorted(set(values))),
        hypothesis_ok=violation is None,
        violation=violation,
    )
    if violation is not None:
        logger.info("hypothesis fails at ideals %s > %s", *violation)
    return table


def lemma1_decompose(
    s: int, w: WeightedElement, T: MultiplicationTable, L: SupportLattice
) -> Tuple[Fraction, WeightedElement]:
    """
    Split s*w as lambda_{sigma(s)} s + residual.

    The residual collects w_t (s*t) over t whose support is not above
    sigma(s); each such s*t must have support strictly below sigma(s).
    """
    x = L.sigma[s]
    scalar = ZERO
    residual: Dict[int, Fraction] = {}
    for t, c in w.items():
        if L.leq[x, L.sigma[t]]:
            scalar += c
            continue
        st = T.mul(s, t)
        if not L.less(L.sigma[st], x):
            raise LemmaViolationError(
                f"support of {T.labels[s]}*{T.labels[t]} does not drop strictly below that of {T.labels[s]}",
                element=s,
            )
        residual[st] = residual.get(st, ZERO) + c
    residual_element = WeightedElement(residual)

    if WeightedElement.unit(s, scalar) + residual_element != algebra_multiply(WeightedElement.unit(s), w, T):
        raise LemmaViolationError(f"decomposition of {T.labels[s]}*w does not reconstruct the product", element=s)
    return scalar, residual_element


def verify_lemma1(w: WeightedElement, T: MultiplicationTable, L: SupportLattice) -> ElementCheck:
    for s in range(T.n):
        try:
            lemma1_decompose(s, w, T, L)
        except LemmaViolationError as exc:
            logger.warning("%s", exc)
            return ElementCheck(False, s)
    return ElementCheck(True)


def _require_hypothesis(lt: LambdaTable) -> None:
    if not lt.hypothesis_ok:
        raise HypothesisNotSatisfiedError(lt.violation)


def build_eigen_polys(lt: LambdaTable, L: SupportLattice) -> EigenPolys:
    """
    p_X = prod (z - v) over the distinct values on the down-set of X,
    q_X = p_X / (z - lambda_X); checks p_Y | q_X whenever X > Y.
    """
    _require_hypothesis(lt)
    p_roots, q_roots = [], []
    for x in range(L.m):
        below = sorted({lt[y] for y in L.down_set(x)})
        strictly_below = sorted({lt[y] for y in L.down_set(x, strict=True)})
        p_roots.append(tuple(below))
        q_roots.append(tuple(strictly_below))
    p = tuple(poly_product_of_linear_factors(r) for r in p_roots)
    q = tuple(poly_product_of_linear_factors(r) for r in q_roots)

    for x in range(L.m):
        if p[x] != RationalPoly.linear(lt[x]) * q[x]:
            raise AssertionError(f"p != (z - lambda) q at ideal {x}")
    for x, y in L.strict_pairs():
        if not set(p_roots[y]) <= set(q_roots[x]) or not p[y].divides(q[x]):
            raise AssertionError(f"p at ideal {y} does not divide q at ideal {x}")
    return EigenPolys(tuple(p_roots), tuple(q_roots), p, q)


def _support_order(T: MultiplicationTable, L: SupportLattice) -> List[int]:
    """Elements grouped by support, following the lattice's induction order."""
    position = {x: i for i, x in enumerate(L.descending)}
    return sorted(range(T.n), key=lambda s: (position[L.sigma[s]], s))


def verify_lemma_kill(w: WeightedElement, T: MultiplicationTable, L: SupportLattice) -> ElementCheck:
    """s * p_{sigma(s)}(w) = 0 for every s."""
    polys = build_eigen_polys(lambda_table(w, L), L)
    failures = []
    for s in _support_order(T, L):
        if not _apply_factors(WeightedElement.unit(s), w, polys.p_roots[L.sigma[s]], T).is_zero():
            failures.append(s)
    if failures:
        return ElementCheck(False, min(failures))
    return ElementCheck(True)


def verify_induction_step(w: WeightedElement, T: MultiplicationTable, L: SupportLattice) -> ElementCheck:
    """
    For each s with X = sigma(s): s(w - lambda_X) q_X(w) equals the residual
    of s*w times q_X(w), and every residual term s*t already dies under q_X(w).
    """
    lt = lambda_table(w, L)
    polys = build_eigen_polys(lt, L)
    failures = []
    for s in _support_order(T, L):
        x = L.sigma[s]
        q_roots = polys.q_roots[x]
        lhs = _apply_factors(WeightedElement.unit(s), w, (lt[x],) + q_roots, T)
        _, residual = lemma1_decompose(s, w, T, L)
        rhs = _apply_factors(residual, w, q_roots, T)
        killed = all(
            _apply_factors(WeightedElement.unit(st), w, q_roots, T).is_zero() for st in residual.support
        )
        if lhs != rhs or not rhs.is_zero() or not killed:
            failures.append(s)
    if failures:
        return ElementCheck(False, min(failures))
    return ElementCheck(True)


# ============= Matrices =============


def regular_representation(w: WeightedElement, T: MultiplicationTable, side: str = "right") -> RationalMatrix:
    """
    Matrix of multiplication by w on the basis S.

    side="right": column s holds s*w; side="left": column s holds w*s.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    _check_dimension(w, T.n)
    rows = T.rows
    entries = [[ZERO] * T.n for _ in range(T.n)]
    for s in range(T.n):
        for t, c in w.items():
            k = rows[s][t] if side == "right" else rows[t][s]
            entries[k][s] += c
    return RationalMatrix.from_rows(entries)


def verify_annihilation(w: WeightedElement, T: MultiplicationTable, L: SupportLattice) -> bool:
    """prod (w - lambda_i) = 0 in the algebra and on the right regular representation."""
    lt = lambda_table(w, L)
    _require_hypothesis(lt)
    in_algebra = _apply_factors(WeightedElement.unit(T.identity), w, lt.distinct, T).is_zero()
    in_matrix = apply_linear_factors(regular_representation(w, T, "right"), lt.distinct).is_zero()
    if in_algebra != in_matrix:
        logger.error("algebra and matrix annihilation disagree (%s vs %s)", in_algebra, in_matrix)
    return in_algebra and in_matrix


def spectrum_report(
    w: WeightedElement, T: MultiplicationTable, L: SupportLattice, side: str = "right"
) -> SpectrumReport:
    _check_dimension(w, T.n)
    if len(L.sigma) != T.n:
        raise ValueError("support lattice was built from a different table")

    lt = lambda_table(w, L)
    M = regular_representation(w, T, side)
    minimal = minimal_polynomial(M)
    diagonalizable = squarefree_check(minimal)
    kernel_dims = {value: kernel_dimension(M.shift(value)) for value in lt.distinct}
    lemma1 = verify_lemma1(w, T, L)

    notes: List[str] = []
    annihilation = lemma2 = induction = divides = None
    if lt.hypothesis_ok:
        annihilation = verify_annihilation(w, T, L)
        lemma2 = verify_lemma_kill(w, T, L).ok
        induction = verify_induction_step(w, T, L).ok
        divides = minimal.divides(poly_product_of_linear_factors(lt.distinct))
        if not (annihilation and diagonalizable and divides):
            notes.append("verification failed although the distinct-eigenvalue hypothesis holds")
    else:
        upper, lower = lt.violation
        notes.append(
            f"hypothesis fails: ideal {upper} > ideal {lower} but both have lambda "
            f"{format_rational(lt[upper])}; the diagonalizability criterion gives no information"
        )
        notes.append(
            "diagonalizable is the empirical verdict of the exact minimal polynomial"
        )
    if diagonalizable:
        total = sum(kernel_dims.values())
        notes.append(f"kernel dimensions sum to {total} of {T.n}")
    if not lemma1.ok:
        notes.append(f"sw decomposition failed at element {lemma1.failing}")

    report = SpectrumReport(
        lambda_table=lt,
        minimal_poly=minimal,
        annihilation_ok=annihilation,
        lemma1_ok=lemma1.ok,
        lemma2_ok=lemma2,
        induction_ok=induction,
        minimal_poly_divides_product=divides,
        diagonalizable=diagonalizable,
        kernel_dims=kernel_dims,
        side=side,
        notes=tuple(notes),
    )
    logger.info(
        "spectrum: %d ideals, %d distinct lambdas, minimal polynomial degree %d, diagonalizable=%s",
        L.m, len(lt.distinct), minimal.degree, diagonalizable,
    )
    return report
