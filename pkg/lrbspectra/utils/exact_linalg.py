"""
Exact rational polynomials and dense matrices.

Polynomials are ``sympy.Poly`` over QQ and matrices are sympy ``DomainMatrix``
objects over QQ; scalars cross the boundary as ``fractions.Fraction``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from sympy import Poly, QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from lrbspectra.utils.rationals import format_polynomial

logger = logging.getLogger(__name__)

Z = Symbol("z")


def to_qq(x):
    """Fraction, int, sympy Rational or QQ element -> QQ element."""
    if isinstance(x, Fraction):
        return QQ(x.numerator, x.denominator)
    if isinstance(x, int):
        return QQ(x)
    return QQ.convert(x)


def to_fraction(x) -> Fraction:
    return Fraction(int(QQ.numer(x)), int(QQ.denom(x)))


# ============= Polynomials =============


class RationalPoly:
    """Polynomial in z; ``coefficients[i]`` multiplies z**i, trailing zeros trimmed."""

    __slots__ = ("poly",)

    def __init__(self, coefficients: Iterable = ()):
        descending = [to_qq(c) for c in coefficients][::-1]
        self.poly = Poly.from_list(descending or [QQ.zero], Z, domain=QQ)

    @classmethod
    def wrap(cls, poly: Poly) -> "RationalPoly":
        out = cls.__new__(cls)
        out.poly = poly
        return out

    @classmethod
    def constant(cls, c) -> "RationalPoly":
        return cls((c,))

    @classmethod
    def linear(cls, root) -> "RationalPoly":
        """z - root"""
        return cls((-to_qq(root), QQ.one))

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        if self.poly.is_zero:
            return ()
        return tuple(Fraction(int(c.p), int(c.q)) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> int:
        return -1 if self.poly.is_zero else self.poly.degree()

    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def leading(self) -> Fraction:
        lead = self.poly.LC()
        return Fraction(int(lead.p), int(lead.q))

    def monic(self) -> "RationalPoly":
        if self.is_zero():
            return self
        return RationalPoly.wrap(self.poly.monic())

    def __add__(self, other: "RationalPoly") -> "RationalPoly":
        return RationalPoly.wrap(self.poly + other.poly)

    def __neg__(self) -> "RationalPoly":
        return RationalPoly.wrap(-self.poly)

    def __sub__(self, other: "RationalPoly") -> "RationalPoly":
        return RationalPoly.wrap(self.poly - other.poly)

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        return RationalPoly.wrap(self.poly * other.poly)

    def __divmod__(self, divisor: "RationalPoly") -> Tuple["RationalPoly", "RationalPoly"]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient, remainder = self.poly.div(divisor.poly)
        return RationalPoly.wrap(quotient), RationalPoly.wrap(remainder)

    def __floordiv__(self, divisor: "RationalPoly") -> "RationalPoly":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "RationalPoly") -> "RationalPoly":
        return divmod(self, divisor)[1]

    def divides(self, other: "RationalPoly") -> bool:
        return (other % self).is_zero()

    def derivative(self) -> "RationalPoly":
        return RationalPoly.wrap(self.poly.diff(Z))

    def __call__(self, x) -> Fraction:
        value = self.poly.eval(QQ.to_sympy(to_qq(x)))
        return Fraction(int(value.p), int(value.q))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalPoly):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"RationalPoly({self.coefficients!r})"

    def __str__(self) -> str:
        return format_polynomial(list(self.coefficients))


def poly_gcd(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    """Monic gcd (zero only when both inputs are zero)."""
    return RationalPoly.wrap(a.poly.gcd(b.poly)).monic()


def poly_lcm(a: RationalPoly, b: RationalPoly) -> RationalPoly:
    if a.is_zero() or b.is_zero():
        return RationalPoly()
    return RationalPoly.wrap(a.poly.lcm(b.poly)).monic()


def poly_product_of_linear_factors(roots: Sequence) -> RationalPoly:
    """prod (z - r) over ``roots``, repeats included."""
    result = RationalPoly.constant(1)
    for r in roots:
        result = result * RationalPoly.linear(r)
    return result


def squarefree_check(p: RationalPoly) -> bool:
    if p.is_zero():
        raise ValueError("squarefree_check needs a nonzero polynomial")
    return p.poly.is_sqf


# ============= Matrices =============


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    dm: DomainMatrix = field(repr=False)

    def __post_init__(self):
        dm = self.dm
        if dm.domain != QQ:
            dm = dm.convert_to(QQ)
        object.__setattr__(self, "dm", dm.to_dense())

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        entries = [[to_qq(x) for x in row] for row in rows]
        width = len(entries[0]) if entries else 0
        if any(len(row) != width for row in entries):
            raise ValueError("every row must have the same number of entries")
        return cls(DomainMatrix(entries, (len(entries), width), QQ))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(DomainMatrix.zeros((rows, cols), QQ))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(DomainMatrix.eye(n, QQ))

    @classmethod
    def scalar(cls, n: int, c) -> "RationalMatrix":
        c = to_qq(c)
        return cls.from_rows([[c if i == j else QQ.zero for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return self.dm.shape[0]

    @property
    def cols(self) -> int:
        return self.dm.shape[1]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return to_fraction(self.dm.to_list()[i][j])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.dm.shape} @ {other.dm.shape}")
        return RationalMatrix(self.dm.matmul(other.dm))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.dm + other.dm)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.dm - other.dm)

    def shift(self, scalar) -> "RationalMatrix":
        """self - scalar * I"""
        _require_square(self)
        return self - RationalMatrix.scalar(self.rows, scalar)

    def is_zero(self) -> bool:
        return self.dm.is_zero_matrix

    def row_sums(self) -> List[Fraction]:
        return [sum(row, Fraction(0)) for row in self.tolist()]

    def tolist(self) -> List[List[Fraction]]:
        return [[to_fraction(x) for x in row] for row in self.dm.to_list()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.dm.shape == other.dm.shape and self.dm.to_list() == other.dm.to_list()

    __hash__ = None


def _require_square(M: RationalMatrix) -> None:
    if not M.is_square:
        raise ValueError(f"square matrix required, got {M.rows}x{M.cols}")


def apply_linear_factors(M: RationalMatrix, roots: Sequence) -> RationalMatrix:
    """prod (M - r I) taken in the given order."""
    _require_square(M)
    result = RationalMatrix.identity(M.rows)
    for r in roots:
        result = result @ M.shift(r)
    return result


def evaluate_polynomial(M: RationalMatrix, p: RationalPoly) -> RationalMatrix:
    """p(M) by Horner's rule."""
    _require_square(M)
    result = RationalMatrix.zeros(M.rows, M.cols)
    for c in reversed(p.coefficients):
        result = (result @ M).shift(-c)
    return result


def _vector_annihilator(M: RationalMatrix, i: int) -> RationalPoly:
    """Monic least-degree p with p(M) e_i = 0, from the Krylov sequence e_i, M e_i, M^2 e_i, ..."""
    n = M.rows
    # Each basis entry is (reduced vector scaled to 1 at its pivot, combination, pivot)
    basis: List[Tuple[List, List, int]] = []
    power = DomainMatrix([[QQ.one if r == i else QQ.zero] for r in range(n)], (n, 1), QQ)
    degree = 0
    while True:
        reduced = [row[0] for row in power.to_list()]
        combination = [QQ.zero] * degree + [QQ.one]
        for vector, coeffs, pivot in basis:
            factor = reduced[pivot]
            if not factor:
                continue
            reduced = [x - factor * y for x, y in zip(reduced, vector)]
            for k, c in enumerate(coeffs):
                combination[k] -= factor * c
        pivot = next((k for k, x in enumerate(reduced) if x), None)
        if pivot is None:
            return RationalPoly(combination)
        scale = reduced[pivot]
        basis.append(([x / scale for x in reduced], [c / scale for c in combination], pivot))
        power = M.dm.matmul(power)
        degree += 1


def minimal_polynomial(M: RationalMatrix) -> RationalPoly:
    """lcm of the Krylov annihilators of the standard basis vectors."""
    _require_square(M)
    n = M.rows
    result = RationalPoly.constant(1)
    residue = evaluate_polynomial(M, result).dm.to_list()
    for i in range(n):
        if not any(row[i] for row in residue):
            continue
        result = poly_lcm(result, _vector_annihilator(M, i))
        residue = evaluate_polynomial(M, result).dm.to_list()
    logger.debug("minimal polynomial of %dx%d matrix has degree %d", n, n, result.degree)
    return result


def matrix_rank(M: RationalMatrix) -> int:
    if M.rows == 0 or M.cols == 0:
        return 0
    return M.dm.rank()


def kernel_dimension(M: RationalMatrix) -> int:
    _require_square(M)
    return M.cols - matrix_rank(M)
