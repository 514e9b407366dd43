import re
from fractions import Fraction
from typing import Iterable, List, Union

from lrbspectra.core.errors import MalformedRationalError

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: Union[str, int]) -> Fraction:
    """Parse "p/q" or "p" (ints are accepted as-is); rejects floats and zero denominators."""
    if isinstance(text, bool):
        raise MalformedRationalError(str(text))
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise MalformedRationalError(repr(text))
    match = _RATIONAL_RE.match(text)
    if not match or (match.group(2) is not None and int(match.group(2)) == 0):
        raise MalformedRationalError(text)
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Lowest terms, "p" alone when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_rationals(values: Iterable[Fraction]) -> List[str]:
    return [format_rational(v) for v in values]


def format_polynomial(coefficients: List[Fraction], variable: str = "z") -> str:
    """Human-readable form, highest degree first, e.g. "z^3 - 3/2*z^2 + 1/2*z"."""
    terms = []
    for degree in range(len(coefficients) - 1, -1, -1):
        c = Fraction(coefficients[degree])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if degree == 0:
            body = format_rational(magnitude)
        else:
            power = variable if degree == 1 else f"{variable}^{degree}"
            body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text
