"""Independent series oracle: truncated bigraded expansions in q and u.

A :class:`BigradedSeries` stores exact rational coefficients of q^m u^n and
represents pi^weight times that double series, where q is the Fourier
variable and u = pi*z.  With this normalization every generator expands with
rational coefficients:

* ``wp``  -> u^-2 + sum_{n>=1} (2n+1) ee_{2n+2} u^(2n)      (weight 2)
* ``e1``  -> u^-1 - sum_{n>=0} ee_{2n+2} u^(2n+1)           (weight 1)
* ``dwp`` -> termwise u-derivative of wp                     (weight 3)
* ``e2``, ``e4`` -> the normalized Eisenstein q-series ee_k  (weight k)

where ee_k is the weight-k Eisenstein series divided by pi^k.  Precision is
tracked conservatively: q-coefficients are valid for 0 <= m < q_prec, and
u-coefficients for u_val <= n <= u_max, with everything below u_val exactly
zero.  Requests outside a validity window raise :class:`PrecisionError`,
never silently compare as equal.
"""

from __future__ import annotations

import cmath
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .arith import bernoulli, sigma
from .forms import QJForm

Scalar = Union[int, Fraction]

DEFAULT_QPREC = 8
DEFAULT_UMAX = 16


class PrecisionError(ArithmeticError):
    """Requested data lies outside a series' validity window."""


class SeriesDerivation(Enum):
    DU = "du"    # d/du: realizes d/dz = pi * d/du, weight +1
    QDQ = "qdq"  # pi^2 q d/dq: realizes the normalized modular derivation, weight +2


class BigradedSeries:
    """Truncated Laurent-in-u, power-in-q series with exact coefficients."""

    __slots__ = ("weight", "q_prec", "u_val", "u_max", "_coeffs")

    def __init__(
        self,
        weight: int,
        q_prec: int,
        u_val: int,
        u_max: int,
        coeffs: Mapping[tuple[int, int], Scalar] | Iterable[tuple[tuple[int, int], Scalar]] | None = None,
    ):
        if q_prec < 1:
            raise PrecisionError("q_prec must be at least 1")
        if u_val > u_max:
            raise PrecisionError(f"empty u-window [{u_val}, {u_max}]")
        data: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            for (m, n), value in items:
                if m < 0 or m >= q_prec or n < u_val or n > u_max:
                    raise ValueError(f"coefficient at q^{m} u^{n} lies outside the validity window")
                value = Fraction(value)
                if value:
                    data[(m, n)] = value
        self.weight = weight
        self.q_prec = q_prec
        self.u_val = u_val
        self.u_max = u_max
        self._coeffs = data

    @classmethod
    def _raw(
        cls, weight: int, q_prec: int, u_val: int, u_max: int, coeffs: dict[tuple[int, int], Fraction]
    ) -> "BigradedSeries":
        obj = cls.__new__(cls)
        obj.weight = weight
        obj.q_prec = q_prec
        obj.u_val = u_val
        obj.u_max = u_max
        obj._coeffs = coeffs
        return obj

    def coefficient(self, m: int, n: int) -> Fraction:
        """Exact coefficient of q^m u^n; raises outside the validity window."""
        if m < 0 or m >= self.q_prec or n > self.u_max:
            raise PrecisionError(f"coefficient of q^{m} u^{n} is outside the validity window")
        return self._coeffs.get((m, n), Fraction(0))

    def items(self) -> list[tuple[tuple[int, int], Fraction]]:
        return sorted(self._coeffs.items())

    def is_zero(self) -> bool:
        return not self._coeffs

    # -- arithmetic sugar (delegates to the module-level operations) --------

    def __add__(self, other: "BigradedSeries") -> "BigradedSeries":
        if not isinstance(other, BigradedSeries):
            return NotImplemented
        return series_add(self, other)

    def __sub__(self, other: "BigradedSeries") -> "BigradedSeries":
        if not isinstance(other, BigradedSeries):
            return NotImplemented
        return series_add(self, series_scale(-1, other))

    def __neg__(self) -> "BigradedSeries":
        return series_scale(-1, self)

    def __mul__(self, other: "BigradedSeries | Scalar") -> "BigradedSeries":
        if isinstance(other, BigradedSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return series_scale(other, self)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "BigradedSeries":
        if isinstance(other, (int, Fraction)):
            return series_scale(other, self)
        return NotImplemented

    def __pow__(self, n: int) -> "BigradedSeries":
        if not isinstance(n, int) or n < 0:
            raise ValueError("series powers are nonnegative integers")
        out = BigradedSeries._raw(0, self.q_prec, 0, self.u_max - self.u_val, {(0, 0): Fraction(1)})
        for _ in range(n):
            out = series_mul(out, self)
        return out

    def __repr__(self) -> str:
        head = ", ".join(f"q^{m} u^{n}: {c}" for (m, n), c in self.items()[:6])
        more = "..." if len(self._coeffs) > 6 else ""
        return (
            f"BigradedSeries(weight={self.weight}, q_prec={self.q_prec}, "
            f"u in [{self.u_val}, {self.u_max}], {{{head}{more}}})"
        )


def series_scale(r: Scalar, a: BigradedSeries) -> BigradedSeries:
    r = Fraction(r)
    if not r:
        return BigradedSeries._raw(a.weight, a.q_prec, a.u_val, a.u_max, {})
    return BigradedSeries._raw(a.weight, a.q_prec, a.u_val, a.u_max, {k: r * c for k, c in a._coeffs.items()})


def series_add(a: BigradedSeries, b: BigradedSeries) -> BigradedSeries:
    """Exact truncated sum; the weight tags must agree.

    A series with no nonzero stored coefficient belongs to every weight, so
    it is weight-neutral here.
    """
    if a.weight != b.weight:
        if a.is_zero():
            a = BigradedSeries._raw(b.weight, a.q_prec, a.u_val, a.u_max, {})
        elif b.is_zero():
            b = BigradedSeries._raw(a.weight, b.q_prec, b.u_val, b.u_max, {})
        else:
            raise ValueError(f"weight mismatch in series addition: {a.weight} vs {b.weight}")
    q_prec = min(a.q_prec, b.q_prec)
    u_val = min(a.u_val, b.u_val)
    u_max = min(a.u_max, b.u_max)
    if u_val > u_max:
        raise PrecisionError("sum has an empty u-window")
    out: dict[tuple[int, int], Fraction] = {}
    for src in (a._coeffs, b._coeffs):
        for (m, n), c in src.items():
            if m < q_prec and n <= u_max:
                acc = out.get((m, n), 0) + c
                if acc:
                    out[(m, n)] = acc
                elif (m, n) in out:
                    del out[(m, n)]
    return BigradedSeries._raw(a.weight, q_prec, u_val, u_max, out)


def series_mul(a: BigradedSeries, b: BigradedSeries) -> BigradedSeries:
    """Exact truncated product with conservative window arithmetic."""
    q_prec = min(a.q_prec, b.q_prec)
    u_val = a.u_val + b.u_val
    u_max = min(a.u_val + b.u_max, b.u_val + a.u_max)
    if u_val > u_max:
        raise PrecisionError("product has an empty u-window")
    out: dict[tuple[int, int], Fraction] = {}
    for (m1, n1), c1 in a._coeffs.items():
        if m1 >= q_prec:
            continue
        for (m2, n2), c2 in b._coeffs.items():
            m = m1 + m2
            n = n1 + n2
            if m >= q_prec or n > u_max:
                continue
            acc = out.get((m, n), 0) + c1 * c2
            if acc:
                out[(m, n)] = acc
            elif (m, n) in out:
                del out[(m, n)]
    return BigradedSeries._raw(a.weight + b.weight, q_prec, u_val, u_max, out)


def series_derive(which: SeriesDerivation, a: BigradedSeries) -> BigradedSeries:
    """Termwise derivative: DU shifts u-exponents down, QDQ scales by m."""
    if which is SeriesDerivation.DU:
        out = {}
        for (m, n), c in a._coeffs.items():
            if n:
                out[(m, n - 1)] = n * c
        return BigradedSeries._raw(a.weight + 1, a.q_prec, a.u_val - 1, a.u_max - 1, out)
    if which is SeriesDerivation.QDQ:
        out = {}
        for (m, n), c in a._coeffs.items():
            if m:
                out[(m, n)] = m * c
        return BigradedSeries._raw(a.weight + 2, a.q_prec, a.u_val, a.u_max, out)
    raise ValueError(f"unknown series derivation {which!r}")


def series_equal(a: BigradedSeries, b: BigradedSeries, min_window: int = 1) -> bool:
    """Coefficient-wise equality on the common validity window.

    The common window must span at least ``min_window`` u-exponents and one
    q-order; otherwise a :class:`PrecisionError` is raised so that lack of
    precision is never reported as equality (or inequality).  A series with
    no nonzero stored coefficient is weight-neutral.
    """
    if a.weight != b.weight and not a.is_zero() and not b.is_zero():
        raise ValueError(f"weight mismatch in series comparison: {a.weight} vs {b.weight}")
    q_prec = min(a.q_prec, b.q_prec)
    lo = min(a.u_val, b.u_val)
    hi = min(a.u_max, b.u_max)
    if hi - lo + 1 < min_window:
        raise PrecisionError(
            f"common window [{lo}, {hi}] spans fewer than {min_window} u-exponents"
        )
    for (m, n), c in a._coeffs.items():
        if m < q_prec and n <= hi and b._coeffs.get((m, n), 0) != c:
            return False
    for (m, n), c in b._coeffs.items():
        if m < q_prec and n <= hi and (m, n) not in a._coeffs:
            return False
    return True


@lru_cache(maxsize=None)
def _eisenstein_coeff(k: int, m: int) -> Fraction:
    # q^m coefficient of ee_k = e_k / pi^k.
    bk = bernoulli(k)
    lead = Fraction(2**k) * abs(bk) / math.factorial(k)
    if m == 0:
        return lead
    return lead * Fraction(-2 * k) / bk * sigma(k, m)


def eisenstein_qseries(k: int, q_prec: int) -> BigradedSeries:
    """Normalized weight-k Eisenstein series ee_k as a u-constant series."""
    if k % 2 != 0 or k < 2:
        raise ValueError("Eisenstein series require an even weight >= 2")
    if q_prec < 1:
        raise PrecisionError("q_prec must be at least 1")
    coeffs = {(m, 0): _eisenstein_coeff(k, m) for m in range(q_prec)}
    return BigradedSeries._raw(k, q_prec, 0, 0, {key: c for key, c in coeffs.items() if c})


def _widen_u(a: BigradedSeries, u_val: int, u_max: int) -> BigradedSeries:
    # Valid only when the series' full u-support is known to lie in the
    # current window (true for the u-constant Eisenstein series).
    return BigradedSeries._raw(a.weight, a.q_prec, u_val, u_max, dict(a._coeffs))


@lru_cache(maxsize=None)
def _wp_series(q_prec: int, span: int) -> BigradedSeries:
    out: dict[tuple[int, int], Fraction] = {(0, -2): Fraction(1)}
    for n in range(2, span - 1, 2):
        factor = n + 1
        for m in range(q_prec):
            c = factor * _eisenstein_coeff(n + 2, m)
            if c:
                out[(m, n)] = c
    return BigradedSeries._raw(2, q_prec, -2, -2 + span, out)


@lru_cache(maxsize=None)
def _dwp_series(q_prec: int, span: int) -> BigradedSeries:
    return series_derive(SeriesDerivation.DU, _wp_series(q_prec, span + 1))


@lru_cache(maxsize=None)
def _e1_series(q_prec: int, span: int) -> BigradedSeries:
    out: dict[tuple[int, int], Fraction] = {(0, -1): Fraction(1)}
    for n in range(1, span, 2):
        for m in range(q_prec):
            c = -_eisenstein_coeff(n + 1, m)
            if c:
                out[(m, n)] = c
    return BigradedSeries._raw(1, q_prec, -1, -1 + span, out)


@lru_cache(maxsize=None)
def _monomial_series(expos: tuple[int, int, int, int, int], q_prec: int, u_max: int) -> BigradedSeries:
    a, b, c, d, e = expos
    u_val = -2 * a - 3 * b - d
    span = u_max - u_val
    if span < 0:
        raise PrecisionError(f"u_max={u_max} cannot reach the monomial valuation {u_val}")
    out = BigradedSeries._raw(0, q_prec, 0, span, {(0, 0): Fraction(1)})
    factors = (
        (a, lambda: _wp_series(q_prec, span)),
        (b, lambda: _dwp_series(q_prec, span)),
        (c, lambda: _widen_u(eisenstein_qseries(4, q_prec), 0, span)),
        (d, lambda: _e1_series(q_prec, span)),
        (e, lambda: _widen_u(eisenstein_qseries(2, q_prec), 0, span)),
    )
    for power, build in factors:
        if power:
            base = build()
            for _ in range(power):
                out = series_mul(out, base)
    return out


def expand(f: QJForm, q_prec: int = DEFAULT_QPREC, u_max: int = DEFAULT_UMAX) -> BigradedSeries:
    """Ring-homomorphic image of a weight-homogeneous form.

    The zero form expands to the zero series with weight tag 0.
    """
    comps = f.weight_components()
    if not comps:
        return BigradedSeries._raw(0, q_prec, min(0, u_max), u_max, {})
    if len(comps) > 1:
        raise ValueError("expand requires a weight-homogeneous form; split it first")
    _, comp = comps[0]
    total: BigradedSeries | None = None
    for expos, coeff in comp._terms.items():
        s = series_scale(coeff, _monomial_series(expos, q_prec, u_max))
        total = s if total is None else series_add(total, s)
    assert total is not None
    return total


def eval_numeric(
    f: QJForm,
    tau: complex,
    z: complex,
    q_prec: int = DEFAULT_QPREC,
    u_max: int = DEFAULT_UMAX,
) -> complex:
    """Approximate value from the truncated expansion; convenience only.

    The truncation error is unbounded in general; the domain restriction
    Im(tau) > 0, 0 < |z| < min(1, |tau|)/2 is deliberately crude.
    """
    tau = complex(tau)
    z = complex(z)
    if tau.imag <= 0:
        raise ValueError("tau must lie in the upper half-plane")
    if not 0 < abs(z) < min(1.0, abs(tau)) / 2:
        raise ValueError("z must satisfy 0 < |z| < min(1, |tau|)/2")
    q = cmath.exp(2j * cmath.pi * tau)
    u = cmath.pi * z
    total = 0j
    for k, comp in f.weight_components():
        s = expand(comp, q_prec, u_max)
        acc = 0j
        for (m, n), c in s._coeffs.items():
            acc += float(c) * q**m * u**n
        total += cmath.pi**k * acc
    return total
