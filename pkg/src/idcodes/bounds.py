"""Closed-form bounds evaluated without float rounding in the comparisons.

Quantities that are rational stay ``Fraction``.  Anything involving a
logarithm becomes an ``mpmath.iv`` interval at 256 bits; an interval is only
trusted to decide a comparison when it lies strictly on one side, otherwise
the comparison reports ``None`` and the caller has to handle the tie.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from mpmath import iv

iv.prec = 256

Real = Union[int, Fraction, "iv.mpf"]


def is_interval(x) -> bool:
    return not isinstance(x, (int, Fraction))


def to_iv(x: Real):
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / iv.mpf(x.denominator)
    if isinstance(x, int):
        return iv.mpf(x)
    return x


def ln(x: Real):
    return iv.log(to_iv(x))


def to_float(x: Real) -> float:
    if isinstance(x, (int, Fraction)):
        return float(x)
    return float(x.mid)


def compare(a: Real, b: Real) -> int | None:
    """Sign of ``a - b``; ``None`` when the enclosure straddles zero."""
    if not is_interval(a) and not is_interval(b):
        d = Fraction(a) - Fraction(b)
        return (d > 0) - (d < 0)
    d = to_iv(a) - to_iv(b)
    if d.a > 0:
        return 1
    if d.b < 0:
        return -1
    if d.a == 0 and d.b == 0:
        return 0
    return None


def scale(x: Real, k: int | Fraction) -> Real:
    """``k * x``, staying exact when ``x`` is rational."""
    if not is_interval(x):
        return Fraction(x) * k
    return to_iv(x) * to_iv(Fraction(k))


def at_most(a: Real, b: Real) -> bool:
    """``a <= b``, raising if interval precision cannot decide."""
    c = compare(a, b)
    if c is None:
        raise ArithmeticError(f"cannot decide {to_float(a)} <= {to_float(b)} at {iv.prec} bits")
    return c <= 0


def at_least(a: Real, b: Real) -> bool:
    return at_most(b, a)


def rmin(a: Real, b: Real) -> Real:
    c = compare(a, b)
    if c is None:
        a, b = to_iv(a), to_iv(b)
        return iv.mpf([min(a.a, b.a), min(a.b, b.b)])
    return a if c <= 0 else b


# -- independent-set fractions ------------------------------------------------

def shearer_fraction(d: Real):
    """Shearer's function ``(d(ln d - 1) + 1) / (d - 1)^2`` (1 at d=0, 1/2 at d=1)."""
    if not is_interval(d):
        d = Fraction(d)
        if d == 0:
            return Fraction(1)
        if d == 1:
            return Fraction(1, 2)
    x = to_iv(d)
    return (x * (iv.log(x) - 1) + 1) / (x - 1) ** 2


def shearer_fraction_float(d: float) -> float:
    if d == 0:
        return 1.0
    e = d - 1.0
    if abs(e) < 1e-2:
        return 0.5 - e / 6 + e * e / 12 - e ** 3 / 20 + e ** 4 / 30
    return (d * (math.log(d) - 1) + 1) / (e * e)


def shearer_slope_float(d: float) -> float:
    """Derivative of :func:`shearer_fraction` (diverges like ``ln d`` at 0)."""
    e = d - 1.0
    if abs(e) < 1e-2:
        return -1 / 6 + e / 6 - 3 * e * e / 20 + 2 * e ** 3 / 15
    return (2 * e - (d + 1) * math.log(d)) / e ** 3


def degree_fraction(delta: int):
    """``(ln Δ - 1) / Δ``: the max-degree form of Shearer's bound, positive for Δ >= 3."""
    return (ln(delta) - 1) / iv.mpf(delta)


# -- identifying-code upper bounds ------------------------------------------

def main_bound(n: int, delta: int):
    """``n - n / (Δ + 3Δ / (ln Δ - 1))`` for triangle-free graphs."""
    n_, d = iv.mpf(n), iv.mpf(delta)
    return n_ - n_ / (d + 3 * d / (ln(delta) - 1))


def fraction_bound(n: int, delta: int, fprime: Real) -> Real:
    """``n - n / (Δ + 3 / f')``, exact when ``f'`` is rational."""
    if not is_interval(fprime):
        fp = Fraction(fprime)
        return n - Fraction(n) / (delta + 3 / fp)
    n_ = iv.mpf(n)
    return n_ - n_ / (iv.mpf(delta) + 3 / to_iv(fprime))


def no_false_twins_bound(n: int, delta: int):
    """``n - n (ln Δ - 1) / (3Δ)``."""
    n_ = iv.mpf(n)
    return n_ - n_ * (ln(delta) - 1) / (3 * iv.mpf(delta))


def case1_threshold(n: int, delta: int, fprime: Real | None = None) -> Real:
    """Smallest |Y| sending the construction to the independent-set branch.

    ``3n / (ln Δ + 2)`` for the Shearer fraction, ``3n / (Δ f' + 3)`` in general.
    """
    if fprime is None:
        return 3 * iv.mpf(n) / (ln(delta) + 2)
    if not is_interval(fprime):
        return Fraction(3 * n) / (delta * Fraction(fprime) + 3)
    return 3 * iv.mpf(n) / (iv.mpf(delta) * to_iv(fprime) + 3)


def lower_bound(n: int, delta: int) -> int:
    """``max(ceil(log2(n+1)), ceil(2n / (Δ+2)))``."""
    log_part = (n).bit_length()  # == ceil(log2(n + 1)) for n >= 1
    return max(log_part, -(-2 * n // (delta + 2)))


def tree_gamma(n: int, delta: int) -> int:
    """``ceil(n - n / (Δ - 1 + 1/Δ))`` for a complete (Δ-1)-ary tree on n vertices."""
    value = n - Fraction(n) / (delta - 1 + Fraction(1, delta))
    return math.ceil(value)
