"""
Number-theoretic helpers for exact magnitude arithmetic
"""

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Sequence, Tuple


def common_denominator(values: Sequence[Fraction]) -> int:
    """
    Least common multiple of the denominators of a sequence of rationals.

    Args:
        values: Rational numbers

    Returns:
        int: Positive common denominator (1 for an empty sequence)
    """
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result


def integerize(values: Sequence[Fraction]) -> Tuple[List[int], int]:
    """
    Scale a rational vector to integers.

    Returns:
        tuple: (integer vector, scale) with vector[i] = values[i] * scale
    """
    scale = common_denominator(values)
    return [int(Fraction(value) * scale) for value in values], scale


def coprime_base(values: Iterable[int]) -> List[int]:
    """
    Pairwise coprime integers > 1 over which every value factors.

    Built by gcd refinement only: whenever a candidate shares a factor g with
    a base element b, both are replaced by g, b/g and candidate/g. The
    product of all pending and base elements drops at every split, so the
    loop terminates; no integer is ever factorised into primes.

    Example:
        >>> coprime_base([12, 18])
        [2, 3]
        >>> coprime_base([6, 35])
        [6, 35]

    Raises:
        ValueError: If a value is not positive
    """
    base: List[int] = []
    for value in values:
        if value <= 0:
            raise ValueError(f"coprime base needs positive integers, got {value}")
        pending = [value] if value > 1 else []
        while pending:
            x = pending.pop()
            for position, b in enumerate(base):
                g = gcd(x, b)
                if g > 1:
                    del base[position]
                    pending.extend(piece for piece in (g, b // g, x // g) if piece > 1)
                    break
            else:
                base.append(x)
    return sorted(base)


def rational_base(values: Iterable[Fraction]) -> List[int]:
    """Coprime base of the numerators and denominators of positive rationals"""
    integers = []
    for value in values:
        value = Fraction(value)
        if value <= 0:
            raise ValueError(f"coprime base needs positive rationals, got {value}")
        integers.extend((value.numerator, value.denominator))
    return coprime_base(integers)


def _valuation(n: int, b: int) -> Tuple[int, int]:
    count = 0
    while n % b == 0:
        n //= b
        count += 1
    return count, n


def base_exponents(value: Fraction, base: Sequence[int]) -> Dict[int, int]:
    """
    Signed exponents of a positive rational over a coprime base.

    Logarithms of pairwise coprime integers > 1 are linearly independent over
    the rationals, so these exponents play the role of a prime factorisation.

    Raises:
        ValueError: If value is not positive or does not factor over base
    """
    value = Fraction(value)
    if value <= 0:
        raise ValueError(f"base exponents need a positive rational, got {value}")
    numerator, denominator = value.numerator, value.denominator
    exponents: Dict[int, int] = {}
    for b in base:
        up, numerator = _valuation(numerator, b)
        down, denominator = _valuation(denominator, b)
        if up != down:
            exponents[b] = up - down
    if numerator != 1 or denominator != 1:
        raise ValueError(f"{value} does not factor over the base {list(base)}")
    return exponents


def exponent_table(values: Sequence[Fraction]) -> Tuple[List[int], List[List[int]]]:
    """
    Coprime-base exponent matrix of a list of positive rationals.

    A rational combination of log|Q_e| vanishes iff it vanishes on every
    column of this table.

    Returns:
        tuple: (base, rows) where rows[e][p] is the exponent of base[p] in values[e]
    """
    base = rational_base(values)
    factored = [base_exponents(value, base) for value in values]
    rows = [[item.get(b, 0) for b in base] for item in factored]
    return base, rows


def power_product_is_one(values: Sequence[Fraction], exponents: Sequence[int]) -> bool:
    """
    Whether prod(values[e] ** exponents[e]) == 1 for integer exponents.

    Positive and negative exponents are multiplied out separately and the two
    products compared, which keeps the arithmetic in integers.
    """
    upper = Fraction(1)
    lower = Fraction(1)
    for value, exponent in zip(values, exponents):
        if exponent > 0:
            upper *= Fraction(value) ** exponent
        elif exponent < 0:
            lower *= Fraction(value) ** -exponent
    return upper == lower


def rational_power_product(bases: Sequence[Fraction], exponents: Sequence[Fraction],
                           base: Sequence[int]) -> Dict[int, Fraction]:
    """
    Exact coprime-base exponent form of prod(bases[e] ** exponents[e]).

    Rational exponents make the product irrational in general, so the result
    is kept as a map base element -> rational exponent instead of a number.
    """
    result: Dict[int, Fraction] = {}
    for value, exponent in zip(bases, exponents):
        if exponent == 0:
            continue
        for b, power in base_exponents(value, base).items():
            result[b] = result.get(b, Fraction(0)) + power * Fraction(exponent)
    return {b: power for b, power in sorted(result.items()) if power != 0}
