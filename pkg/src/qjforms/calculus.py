"""Derivations, Rankin-Cohen brackets, transvectants and stability checks.

The two primitive derivations extend generator-image tables by the Leibniz
rule:

* ``DZ`` (elliptic, weight +1): wp -> dwp, dwp -> 6wp^2 - 30e4, e4 -> 0,
  e1 -> -wp - e2, e2 -> 0.
* ``DTAU`` (modular, weight +2): the normalized (pi/2i) d/dtau, whose
  generator images are the rational combinations below.

``OB`` is 4*DTAU + e1*DZ - (weight)*e2, applied per weight component; its
restriction to the modular subalgebra is the Serre derivation.  ``DJAC`` is
DTAU + (1/4)e1*DZ and ``DELTA`` multiplies a weight-k component by k/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial

from .arith import binomial
from .forms import (
    DWP,
    E1,
    E2,
    E4,
    WP,
    ZERO,
    Algebra,
    Exponents,
    QJForm,
    e6_form,
    member,
)


class Derivation(Enum):
    DZ = "dz"
    DTAU = "dtau"
    OB = "ob"
    DJAC = "d"
    DELTA = "delta"


class Bracket(Enum):
    RC_TAU = "rc"
    RC_D = "rcd"
    TV = "tv"


# Weight shift of each derivation and of the n-th bracket per unit n.
DERIVATION_WEIGHT_SHIFT = {
    Derivation.DZ: 1,
    Derivation.DTAU: 2,
    Derivation.OB: 2,
    Derivation.DJAC: 2,
    Derivation.DELTA: 0,
}
BRACKET_WEIGHT_SHIFT = {Bracket.RC_TAU: 2, Bracket.RC_D: 2, Bracket.TV: 3}

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)

# Generator images, indexed like the exponent tuple (wp, dwp, e4, e1, e2).
_DZ_IMAGES = (
    DWP,
    6 * WP**2 - 30 * E4,
    ZERO,
    -WP - E2,
    ZERO,
)
_DTAU_IMAGES = (
    -_QUARTER * (E1 * DWP) - _HALF * WP**2 + _HALF * (E2 * WP) + 5 * E4,
    Fraction(3, 2) * ((5 * E4 - WP**2) * E1) + Fraction(3, 4) * ((E2 - WP) * DWP),
    Fraction(-1, 10) * WP**3 + Fraction(1, 40) * DWP**2 + Fraction(3, 2) * (WP * E4) + E4 * E2,
    _QUARTER * (E1 * E2 + WP * E1 + _HALF * DWP),
    _QUARTER * (E2**2 - 5 * E4),
)


def _leibniz(images: tuple[QJForm, ...], f: QJForm) -> QJForm:
    out: dict[Exponents, Fraction] = {}
    for expos, coeff in f._terms.items():
        for gi in range(5):
            p = expos[gi]
            if not p:
                continue
            img = images[gi]
            if not img:
                continue
            scaled = coeff * p
            base = list(expos)
            base[gi] = p - 1
            b0, b1, b2, b3, b4 = base
            for iexp, icoeff in img._terms.items():
                key = (b0 + iexp[0], b1 + iexp[1], b2 + iexp[2], b3 + iexp[3], b4 + iexp[4])
                acc = out.get(key, 0) + scaled * icoeff
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
    return QJForm._raw(out)


def derive(tag: Derivation, f: QJForm) -> QJForm:
    """Apply one of the five derivations to an arbitrary form."""
    if tag is Derivation.DZ:
        return _leibniz(_DZ_IMAGES, f)
    if tag is Derivation.DTAU:
        return _leibniz(_DTAU_IMAGES, f)
    if tag is Derivation.DJAC:
        return derive(Derivation.DTAU, f) + _QUARTER * (E1 * derive(Derivation.DZ, f))
    if tag is Derivation.DELTA:
        out = ZERO
        for k, comp in f.weight_components():
            out = out + Fraction(k, 2) * comp
        return out
    if tag is Derivation.OB:
        out = ZERO
        for k, comp in f.weight_components():
            out = (
                out
                + 4 * derive(Derivation.DTAU, comp)
                + E1 * derive(Derivation.DZ, comp)
                - k * (E2 * comp)
            )
        return out
    raise ValueError(f"unknown derivation {tag!r}")


def _tower(d: Derivation, f: QJForm, n: int) -> list[QJForm]:
    out = [f]
    for _ in range(n):
        out.append(derive(d, out[-1]))
    return out


def _tv_slots(f: QJForm, n: int) -> list[QJForm]:
    # slots[r] = dtau^(n-r) dz^r f
    slots = []
    dzr = f
    for r in range(n + 1):
        v = dzr
        for _ in range(n - r):
            v = derive(Derivation.DTAU, v)
        slots.append(v)
        if r < n:
            dzr = derive(Derivation.DZ, dzr)
    return slots


def bracket(tag: Bracket, f: QJForm, g: QJForm, n: int) -> QJForm:
    """The n-th Rankin-Cohen bracket (tau or d flavour) or transvectant.

    The Rankin-Cohen brackets read the weights of both arguments, so mixed
    inputs are decomposed into weight components first; the transvectant
    formula is weight-free and applies directly.
    """
    if n < 0:
        raise ValueError("bracket order must be nonnegative")
    if n == 0:
        return f * g
    if tag is Bracket.TV:
        fslots = _tv_slots(f, n)
        gslots = _tv_slots(g, n)
        out = ZERO
        for r in range(n + 1):
            coeff = binomial(n, r) * (-1 if r % 2 else 1)
            out = out + coeff * (fslots[r] * gslots[n - r])
        return out
    d = Derivation.DTAU if tag is Bracket.RC_TAU else Derivation.DJAC
    fcomps = [(k, _tower(d, comp, n)) for k, comp in f.weight_components()]
    gcomps = [(l, _tower(d, comp, n)) for l, comp in g.weight_components()]
    out = ZERO
    for k, ftower in fcomps:
        for l, gtower in gcomps:
            for r in range(n + 1):
                coeff = binomial(k + n - 1, n - r) * binomial(l + n - 1, r)
                if coeff:
                    term = (ftower[r] * gtower[n - r]) * coeff
                    out = out + (-term if r % 2 else term)
    return out


def transvectant_by_recurrence(f: QJForm, g: QJForm, n: int) -> QJForm:
    """Transvectant via {f,g}_0 = fg and {f,g}_(m+1) = {df,g'}_m - {f',dg}_m.

    Independent of the binomial-sum formula in :func:`bracket`; the two must
    agree for all orders.  The recursion revisits equal argument pairs (the
    two primitive derivations commute), so results are memoized per call.
    """
    if n < 0:
        raise ValueError("bracket order must be nonnegative")
    memo: dict[tuple[QJForm, QJForm, int], QJForm] = {}

    def rec(a: QJForm, b: QJForm, m: int) -> QJForm:
        if m == 0:
            return a * b
        key = (a, b, m)
        hit = memo.get(key)
        if hit is None:
            hit = rec(derive(Derivation.DTAU, a), derive(Derivation.DZ, b), m - 1) - rec(
                derive(Derivation.DZ, a), derive(Derivation.DTAU, b), m - 1
            )
            memo[key] = hit
        return hit

    return rec(f, g, n)


def star_truncated(tag: Bracket, f: QJForm, g: QJForm, order: int) -> list[QJForm]:
    """Coefficients of hbar^0..hbar^order of the deformation product.

    The transvectant star product carries 1/n! weights; for the Rankin-Cohen
    tags the bracket sequence itself is the deformation.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    out = []
    for n in range(order + 1):
        term = bracket(tag, f, g, n)
        if tag is Bracket.TV and n > 1:
            term = Fraction(1, factorial(n)) * term
        out.append(term)
    return out


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of a closure check: closed, or the first failing generator."""

    closed: bool
    witness: str | None = None


# Generating sets, ordered as the structure theorems list them.
ALGEBRA_GENERATORS: dict[Algebra, tuple[tuple[str, QJForm], ...]] = {
    Algebra.M: (("e4", E4), ("e6", e6_form())),
    Algebra.MINF: (("e4", E4), ("e6", e6_form()), ("e2", E2)),
    Algebra.JS: (("wp", WP), ("dwp", DWP), ("e4", E4)),
    Algebra.JS0INF: (("wp", WP), ("dwp", DWP), ("e4", E4), ("e1", E1)),
    Algebra.JSINF0: (("wp", WP), ("dwp", DWP), ("e4", E4), ("e2", E2)),
    Algebra.JSINF: (("wp", WP), ("dwp", DWP), ("e4", E4), ("e1", E1), ("e2", E2)),
}


def check_stability(algebra: Algebra, tag: Derivation) -> StabilityReport:
    """Is the subalgebra closed under the derivation?

    Checking the generators decides closure: a Leibniz map preserves a
    polynomial subalgebra iff it maps each generator into it.
    """
    for name, gen in ALGEBRA_GENERATORS[algebra]:
        if not member(derive(tag, gen), algebra):
            return StabilityReport(False, name)
    return StabilityReport(True, None)
