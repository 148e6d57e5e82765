"""Coefficients of factored products as closed sums over partitions.

For a product ``f(t) = prod_j prod_{m in C_j} (1 - z_j t^m)^{a_j}`` the
coefficient of ``t^n`` equals

    sum over multiplicity vectors (k_1..k_n) of n  of
        prod_j (1/k_j!) * (w_j / j)^{k_j}

where ``w_j = -sum_factors a * (sum_{d in C, d|j} d * z^{j/d})`` is ``j``
times the ``t^j`` coefficient of ``log f``.  The coefficient of ``t^n`` in
``1/f(t)`` is the same sum with an extra ``(-1)^(k_1+...+k_n)``.  Everything
is exact; every value computed here is independently checkable against
:mod:`bellforge.series`.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from .arith import require_natural, require_positive
from .supports import Factor, ProductSpec, SupportSet

DEFAULT_FAA_CAP = 60

_ZERO = Fraction(0)
_ONE = Fraction(1)


def faa_cap() -> int:
    """Size cap for the partition-sum path (env ``BELLFORGE_FAA_CAP``)."""
    raw = os.environ.get("BELLFORGE_FAA_CAP")
    if raw is None:
        return DEFAULT_FAA_CAP
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"BELLFORGE_FAA_CAP must be an integer, got {raw!r}") from exc
    if cap < 0:
        raise ValueError("BELLFORGE_FAA_CAP must be >= 0")
    return cap


def divisor_power_sum(n: int, support: SupportSet, z: Fraction) -> Fraction:
    """``sum_{d | n, d in support} d * z^(n/d)``."""
    require_positive(n)
    z = Fraction(z)
    total = _ZERO
    for d in support.divisors_in(n):
        total += d * z ** (n // d)
    return total


def log_weight(n: int, spec: ProductSpec) -> Fraction:
    """``-sum_factors a * divisor_power_sum(n, support, z)``; equals ``n``
    times the ``t^n`` coefficient of ``log f``."""
    require_positive(n)
    total = _ZERO
    for f in spec.factors:
        total -= f.a * divisor_power_sum(n, f.support, f.z)
    return total


def log_weight_table(spec: ProductSpec, n: int) -> list[Fraction]:
    """Weights ``[_, w_1, ..., w_n]`` for the partition sums (index 0 unused)."""
    require_natural(n)
    return [_ZERO] + [log_weight(j, spec) for j in range(1, n + 1)]


def partition_power_sum(n: int, weights, alternate_sign: bool = False) -> Fraction:
    """Exact evaluation of ``sum over (k_1..k_n), sum j k_j = n, of
    prod_j (1/k_j!) (weights[j]/j)^{k_j}``, one term per partition of ``n``.

    With ``alternate_sign`` each term also carries ``(-1)^(k_1+...+k_n)``,
    which is folded in by negating every weight.  Denominators are cleared
    up front (all weights are scaled by their lcm ``M``), so the depth-first
    accumulation below runs on plain integers: a partition with multiplicity
    vector ``k`` contributes ``prod scaled_j^{k_j}`` over the global
    denominator ``prod (M j)^{k_j} k_j!``, and the latter always divides
    ``M^n n!``.  Partitions using any part with weight zero contribute
    nothing and are pruned.
    """
    require_natural(n)
    if n == 0:
        return _ONE
    ws = [Fraction(w) for w in weights[: n + 1]]
    if len(ws) != n + 1:
        raise ValueError(f"need weights for parts 1..{n}")
    m_scale = lcm(*(w.denominator for w in ws[1:]))
    sign = -1 if alternate_sign else 1
    scaled = [0] * (n + 1)
    for j in range(1, n + 1):
        scaled[j] = sign * ws[j].numerator * (m_scale // ws[j].denominator)

    active = [j for j in range(n, 0, -1) if scaled[j]]
    denom = m_scale**n * factorial(n)
    if not active:
        return _ZERO
    return Fraction(_signed_partition_dfs(n, active, scaled, m_scale, denom), denom)


def _signed_partition_dfs(n, active, scaled, m_scale, denom) -> int:
    """Integer accumulator for :func:`partition_power_sum`; see there."""
    levels = len(active)
    # per part j: numerator powers scaled_j^k and denominators (M j)^k k!
    num_pow = []
    den_pow = []
    for j in active:
        kmax = n // j
        ps = [1] * (kmax + 1)
        ds = [1] * (kmax + 1)
        w = scaled[j]
        mj = m_scale * j
        for k in range(1, kmax + 1):
            ps[k] = ps[k - 1] * w
            ds[k] = ds[k - 1] * mj * k
        num_pow.append(ps)
        den_pow.append(ds)
    smallest = active[-1]

    acc = 0
    st_k = [0] * levels
    st_rem = [0] * levels
    st_num = [0] * levels
    st_den = [0] * levels
    st_rem[0] = n
    st_num[0] = 1
    st_den[0] = 1
    st_k[0] = n // active[0]
    i = 0
    while i >= 0:
        k = st_k[i]
        if k < 0:
            i -= 1
            if i >= 0:
                st_k[i] -= 1
            continue
        j = active[i]
        rem = st_rem[i] - j * k
        num = st_num[i] * num_pow[i][k]
        den = st_den[i] * den_pow[i][k]
        if rem == 0:
            acc += num * (denom // den)
            st_k[i] -= 1
            continue
        nxt = i + 1
        if nxt == levels or rem < smallest:
            st_k[i] -= 1
            continue
        if active[nxt] == 1:
            # multiplicity of part 1 is forced by the remainder
            acc += (num * num_pow[nxt][rem]) * (denom // (den * den_pow[nxt][rem]))
            st_k[i] -= 1
            continue
        st_rem[nxt] = rem
        st_num[nxt] = num
        st_den[nxt] = den
        st_k[nxt] = rem // active[nxt]
        i = nxt
    return acc


def product_coefficient(n: int, spec: ProductSpec) -> Fraction:
    """Coefficient of ``t^n`` in the product, via the partition sum."""
    return partition_power_sum(n, log_weight_table(spec, n))


def reciprocal_coefficient(n: int, spec: ProductSpec) -> Fraction:
    """Coefficient of ``t^n`` in the reciprocal of the product: the same
    partition sum with the alternating sign ``(-1)^(k_1+...+k_n)``."""
    return partition_power_sum(n, log_weight_table(spec, n), alternate_sign=True)


def reciprocal_coefficient_by_recursion(n: int, spec: ProductSpec) -> Fraction:
    """Reciprocal coefficient from the convolution recursion
    ``W_0 = 1, W_n = -sum_{k=0..n-1} W_k P_{n-k}``."""
    require_natural(n)
    prods = product_coefficients(spec, n)
    out = [_ONE]
    for m in range(1, n + 1):
        s = _ZERO
        for k in range(m):
            s += out[k] * prods[m - k]
        out.append(-s)
    return out[n]


_seq_lock = threading.Lock()
_seq_cache: dict[tuple[str, ProductSpec], list[Fraction]] = {}


def product_coefficients(spec: ProductSpec, n: int) -> list[Fraction]:
    """Cached ``[coefficient(0), ..., coefficient(n)]`` of the product."""
    return _cached_sequence("product", spec, n, product_coefficient)


def reciprocal_coefficients(spec: ProductSpec, n: int) -> list[Fraction]:
    """Cached reciprocal coefficients ``0..n``."""
    return _cached_sequence("reciprocal", spec, n, reciprocal_coefficient)


def _cached_sequence(kind, spec, n, compute) -> list[Fraction]:
    require_natural(n)
    key = (kind, spec)
    with _seq_lock:
        seq = _seq_cache.setdefault(key, [])
        while len(seq) <= n:
            seq.append(compute(len(seq), spec))
        return seq[: n + 1]


def ratio_coefficient(n: int, numer: ProductSpec | None, denom: ProductSpec | None) -> Fraction:
    """Coefficient of ``t^n`` in numerator-product / denominator-product,
    as the convolution of product and reciprocal coefficients.  ``None``
    on either side means the constant series 1.
    """
    require_natural(n)
    if numer is None and denom is None:
        return _ONE if n == 0 else _ZERO
    if numer is None:
        return reciprocal_coefficient(n, denom)
    if denom is None:
        return product_coefficient(n, numer)
    prods = product_coefficients(numer, n)
    recips = reciprocal_coefficients(denom, n)
    total = _ZERO
    for m in range(n + 1):
        if prods[m]:
            total += prods[m] * recips[n - m]
    return total


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one exact identity check, with both sides' values."""

    check: str
    n: int
    ok: bool
    lhs: str
    rhs: str


def index_additivity_report(n, base, a_index, b_index) -> IdentityReport:
    """Check that coefficients for exponent vector ``a + b`` equal the
    convolution of the coefficients for ``a`` and for ``b``, over the same
    (support, z) families.

    ``base`` is a sequence of (support, z) pairs; ``a_index``/``b_index``
    are equal-length vectors of nonzero integers.  Combined exponents that
    cancel to zero simply drop their factor.
    """
    require_natural(n)
    base = list(base)
    if not (len(base) == len(a_index) == len(b_index)):
        raise ValueError("index vectors must match the factor family")
    spec_a = ProductSpec(tuple(Factor(s, z, a) for (s, z), a in zip(base, a_index)))
    spec_b = ProductSpec(tuple(Factor(s, z, b) for (s, z), b in zip(base, b_index)))
    combined = tuple(
        Factor(s, z, a + b)
        for (s, z), a, b in zip(base, a_index, b_index)
        if a + b != 0
    )
    if combined:
        lhs = product_coefficient(n, ProductSpec(combined))
    else:
        lhs = _ONE if n == 0 else _ZERO
    rhs = _convolve_products(n, spec_a, spec_b)
    return IdentityReport("additivity-index", n, lhs == rhs, str(lhs), str(rhs))


def set_additivity_report(n, spec_a: ProductSpec, spec_b: ProductSpec) -> IdentityReport:
    """Check that coefficients of the merged factor list equal the
    convolution of the two sides' coefficients."""
    require_natural(n)
    lhs = product_coefficient(n, ProductSpec(spec_a.factors + spec_b.factors))
    rhs = _convolve_products(n, spec_a, spec_b)
    return IdentityReport("additivity-set", n, lhs == rhs, str(lhs), str(rhs))


def _convolve_products(n, spec_a, spec_b) -> Fraction:
    pa = product_coefficients(spec_a, n)
    pb = product_coefficients(spec_b, n)
    total = _ZERO
    for j in range(n + 1):
        if pa[j]:
            total += pa[j] * pb[n - j]
    return total
