"""Named partition functions built on the closed-sum engine.

Each function here is the coefficient sequence of a fixed quotient of
``(1 - t^m)``-style products.  Two evaluation routes exist and must agree:

* ``"faa"``: the partition-indexed closed sum (:mod:`bellforge.bellpoly`),
* ``"series"``: expansion of the product ratio (:mod:`bellforge.series`).

``method="auto"`` picks the closed sum up to :func:`bellpoly.faa_cap` and the
series route above it.  The theta coefficient functions default to the series
route because their defining checks run far past the cap.  All named counts
must come out as nonnegative integers; anything else raises
:class:`InconsistencyError` since it can only mean an internal defect.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .arith import require_natural
from .bellpoly import (
    IdentityReport,
    faa_cap,
    ratio_coefficient,
    reciprocal_coefficient,
)
from .series import TruncatedSeries, expand_product
from .supports import ProductSpec, SupportSet, spec_from_factors

_ALL = SupportSet.all_naturals()


class InconsistencyError(ArithmeticError):
    """An exact computation produced a value its contract rules out."""


# generating products for the named sequences
PARTITION_PRODUCT = spec_from_factors((_ALL, 1, 1))
CUBIC_PRODUCT = spec_from_factors((_ALL, 1, 1), (SupportSet.multiples_of(2), 1, 1))
OVERCUBIC_NUMERATOR = spec_from_factors((SupportSet.multiples_of(4), 1, 1))
OVERCUBIC_DENOMINATOR = spec_from_factors(
    (_ALL, 1, 2), (SupportSet.multiples_of(2), 1, 1)
)
CHAN_NUMERATOR = spec_from_factors(
    (SupportSet.multiples_of(3), 1, 3), (SupportSet.multiples_of(6), 1, 3)
)
CHAN_DENOMINATOR = spec_from_factors(
    (_ALL, 1, 4), (SupportSet.multiples_of(2), 1, 4)
)
KIM_NUMERATOR = spec_from_factors(
    (SupportSet.multiples_of(3), 1, 6), (SupportSet.multiples_of(4), 1, 3)
)
KIM_DENOMINATOR = spec_from_factors(
    (_ALL, 1, 8), (SupportSet.multiples_of(2), 1, 3)
)
PSI_NUMERATOR = spec_from_factors((SupportSet.multiples_of(2), 1, 2))
PSI_DENOMINATOR = PARTITION_PRODUCT
PHI_NUMERATOR = spec_from_factors((SupportSet.multiples_of(2), 1, 5))
PHI_DENOMINATOR = spec_from_factors(
    (_ALL, 1, 2), (SupportSet.multiples_of(4), 1, 2)
)


def restricted_product(parts) -> ProductSpec:
    """The product ``prod_{d in parts} (1 - t^d)`` for a distinct parts list."""
    return spec_from_factors((SupportSet.finite(parts), 1, 1))


_series_lock = threading.Lock()
_series_cache: dict[tuple, TruncatedSeries] = {}


def ratio_series(
    numer: ProductSpec | None, denom: ProductSpec | None, order: int
) -> TruncatedSeries:
    """Cached series of numerator/denominator to at least ``order``.

    The returned series may be longer than requested; coefficients up to the
    requested order are unaffected by the truncation point.
    """
    require_natural(order, "order")
    key = (numer, denom)
    with _series_lock:
        cur = _series_cache.get(key)
        if cur is None or cur.order < order:
            if numer is None and denom is None:
                cur = TruncatedSeries.constant(1, order)
            elif denom is None:
                cur = expand_product(numer, order)
            else:
                cur = expand_product(denom, order).reciprocal()
                if numer is not None:
                    cur = expand_product(numer, order).mul(cur)
            _series_cache[key] = cur
        return cur


def _value(n, numer, denom, method) -> Fraction:
    require_natural(n)
    route = _resolve_method(method, n)
    if route == "faa":
        return ratio_coefficient(n, numer, denom)
    return ratio_series(numer, denom, n).coefficient(n)


def _resolve_method(method: str, n: int) -> str:
    if method == "auto":
        return "faa" if n <= faa_cap() else "series"
    if method in ("faa", "series"):
        return method
    raise ValueError(f"method must be 'faa', 'series' or 'auto', got {method!r}")


def _as_count(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InconsistencyError(f"{what} evaluated to {value}, not a count")
    return int(value)


def partition_function(n: int, method: str = "auto") -> int:
    """p(n): partitions of ``n``, from the reciprocal of ``prod (1 - t^m)``.

    On the closed-sum route this is the sum over partitions of
    ``prod (1/k_j!) (sigma(j)/j)^{k_j}``, which must collapse to an integer.
    """
    return _as_count(_value(n, None, PARTITION_PRODUCT, method), f"p({n})")


def restricted_partition_count(n: int, parts, method: str = "auto") -> int:
    """Partitions of ``n`` into parts from a distinct positive list."""
    return _as_count(
        _value(n, None, restricted_product(parts), method), f"W({n},{sorted(parts)})"
    )


def cubic_partition_count(n: int, method: str = "auto") -> int:
    """a(n): partitions of ``n`` where even parts come in two colors."""
    return _as_count(_value(n, None, CUBIC_PRODUCT, method), f"a({n})")


def chan_product_coefficient(n: int) -> int:
    """Three times the ``t^n`` coefficient of Chan's product quotient;
    equals ``a(3n+2)``.  Series route only, so the identity check against
    :func:`cubic_partition_count` compares two independent expansions."""
    value = 3 * ratio_series(CHAN_NUMERATOR, CHAN_DENOMINATOR, n).coefficient(n)
    return _as_count(value, f"chan({n})")


def overcubic_partition_count(n: int, method: str = "auto") -> int:
    """abar(n): overlined variant of the cubic partitions, generated by
    ``prod (1-t^{4m}) / [prod (1-t^m)^2 prod (1-t^{2m})]``."""
    return _as_count(
        _value(n, OVERCUBIC_NUMERATOR, OVERCUBIC_DENOMINATOR, method), f"abar({n})"
    )


def kim_product_coefficient(n: int) -> int:
    """Six times the ``t^n`` coefficient of Kim's product quotient;
    equals ``abar(3n+2)``.  Series route only, as for Chan."""
    value = 6 * ratio_series(KIM_NUMERATOR, KIM_DENOMINATOR, n).coefficient(n)
    return _as_count(value, f"kim({n})")


def ramanujan_psi_coefficient(n: int, method: str = "series") -> int:
    """Coefficient of ``t^n`` in ``prod (1-t^{2m})^2 / prod (1-t^m)``:
    1 when ``n`` is a triangular number, else 0."""
    return _as_count(_value(n, PSI_NUMERATOR, PSI_DENOMINATOR, method), f"psi*({n})")


def ramanujan_phi_coefficient(n: int, method: str = "series") -> int:
    """Coefficient of ``t^n`` in
    ``prod (1-t^{2m})^5 / [prod (1-t^m)^2 prod (1-t^{4m})^2]``:
    2 when ``n`` is a positive square, 1 at ``n = 0``, else 0."""
    return _as_count(_value(n, PHI_NUMERATOR, PHI_DENOMINATOR, method), f"phi*({n})")


@dataclass(frozen=True)
class FourFactorSpec:
    """Up to two multiples-of factors above and two below the line:
    ``prod (1-t^{r1 m})^{a1} (1-t^{r2 m})^{a2} /
    [prod (1-t^{s1 m})^{b1} (1-t^{s2 m})^{b2}]``.
    A slot with modulus ``None`` is absent; present slots need modulus >= 1
    and exponent >= 1.
    """

    r1: int | None = None
    a1: int = 1
    r2: int | None = None
    a2: int = 1
    s1: int | None = None
    b1: int = 1
    s2: int | None = None
    b2: int = 1

    def __post_init__(self):
        for r, e, name in (
            (self.r1, self.a1, "numerator 1"),
            (self.r2, self.a2, "numerator 2"),
            (self.s1, self.b1, "denominator 1"),
            (self.s2, self.b2, "denominator 2"),
        ):
            if r is None:
                continue
            if r < 1 or e < 1:
                raise ValueError(f"{name}: modulus and exponent must be >= 1")

    def numerator(self) -> ProductSpec | None:
        return _multiples_spec((self.r1, self.a1), (self.r2, self.a2))

    def denominator(self) -> ProductSpec | None:
        return _multiples_spec((self.s1, self.b1), (self.s2, self.b2))


def _multiples_spec(*slots) -> ProductSpec | None:
    triples = [
        (SupportSet.multiples_of(r), 1, e) for r, e in slots if r is not None
    ]
    return spec_from_factors(*triples) if triples else None


def four_factor_coefficient(n: int, spec: FourFactorSpec, method: str = "auto") -> Fraction:
    """Exact ``t^n`` coefficient of the four-factor quotient.  Returned as a
    rational: arbitrary exponent choices need not give integer coefficients."""
    return _value(n, spec.numerator(), spec.denominator(), method)


def restricted_recursion_report(n: int, parts) -> IdentityReport:
    """Check ``W(n, parts) - W(n - last, parts) == W(n, parts-without-last)``
    exactly, counting ``W`` at negative arguments as 0."""
    require_natural(n)
    parts = list(parts)
    if len(parts) < 2:
        raise ValueError("the recursion needs at least two parts")
    last = parts[-1]
    full = restricted_partition_count(n, parts, method="series")
    shifted = (
        restricted_partition_count(n - last, parts, method="series")
        if n - last >= 0
        else 0
    )
    rhs = restricted_partition_count(n, parts[:-1], method="series")
    lhs = full - shifted
    return IdentityReport(
        "restricted-recursion",
        n,
        lhs == rhs,
        f"{full}-{shifted}={lhs}",
        str(rhs),
    )
