"""Polynomial model of the five-generator algebra of quasi-Jacobi forms.

The generators ``wp``, ``dwp``, ``e4``, ``e1``, ``e2`` carry weights
2, 3, 4, 1, 2.  A monomial wp^a dwp^b e4^c e1^d e2^e is the exponent tuple
``(a, b, c, d, e)``; a :class:`QJForm` is a finite rational combination of
monomials.  The depth of a form is the pair (max e2-exponent, max
e1-exponent): the "modular" and "elliptic" depths.

The weight-6 Eisenstein combination is not a generator: :func:`e6_form`
returns its expression in wp, dwp, e4 and every operation that meets a
weight-6 Eisenstein term eliminates it eagerly through that relation.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Union

from .arith import binomial

Exponents = tuple[int, int, int, int, int]
Scalar = Union[int, Fraction]

GENERATOR_WEIGHTS: Exponents = (2, 3, 4, 1, 2)
GENERATOR_NAMES = ("wp", "dwp", "e4", "e1", "e2")


class Generator(Enum):
    """The five polynomial generators, in exponent-tuple order."""

    WP = 0
    DWP = 1
    E4 = 2
    EE1 = 3
    EE2 = 4

    @property
    def weight(self) -> int:
        return GENERATOR_WEIGHTS[self.value]

    @property
    def symbol(self) -> str:
        return GENERATOR_NAMES[self.value]


class DepthProfile(NamedTuple):
    """Bidegree (s1, s2): e2-degree (modular) and e1-degree (elliptic)."""

    s1: int
    s2: int

    def __add__(self, other: "DepthProfile") -> "DepthProfile":  # type: ignore[override]
        return DepthProfile(self.s1 + other[0], self.s2 + other[1])


def weight_of_exponents(expos: Exponents) -> int:
    a, b, c, d, e = expos
    return 2 * a + 3 * b + 4 * c + d + 2 * e


def _order_key(expos: Exponents) -> tuple[int, int, int, int, int]:
    # Depth-major ordering: lexicographic on (e, d, c, b, a).
    a, b, c, d, e = expos
    return (e, d, c, b, a)


class QJForm:
    """Exact polynomial in the five generators with rational coefficients.

    Immutable value type: all arithmetic returns new forms, zero coefficients
    are never stored, and equal forms compare equal as dictionaries.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] | None = None):
        data: dict[Exponents, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for expos, coeff in items:
                expos = tuple(expos)  # type: ignore[assignment]
                if len(expos) != 5 or any((not isinstance(p, int)) or p < 0 for p in expos):
                    raise ValueError(f"invalid exponent tuple {expos!r}")
                coeff = Fraction(coeff)
                acc = data.get(expos, 0) + coeff
                if acc:
                    data[expos] = acc
                elif expos in data:
                    del data[expos]
        self._terms = data
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponents, Fraction]) -> "QJForm":
        # Internal fast path; caller guarantees canonical content.
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Exponents, Fraction]]:
        """Term list in the canonical (depth-major, descending) order."""
        return [(e, self._terms[e]) for e in sorted(self._terms, key=_order_key, reverse=True)]

    def coefficient(self, expos: Exponents) -> Fraction:
        return self._terms.get(tuple(expos), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_homogeneous(self) -> bool:
        weights = {weight_of_exponents(e) for e in self._terms}
        return len(weights) <= 1

    def weight(self) -> int:
        """Weight of a nonzero homogeneous form."""
        weights = {weight_of_exponents(e) for e in self._terms}
        if len(weights) != 1:
            raise ValueError("weight is defined for nonzero homogeneous forms only")
        return weights.pop()

    def weight_components(self) -> list[tuple[int, "QJForm"]]:
        """Partition into weight-homogeneous parts, ascending by weight."""
        by_weight: dict[int, dict[Exponents, Fraction]] = {}
        for expos, coeff in self._terms.items():
            by_weight.setdefault(weight_of_exponents(expos), {})[expos] = coeff
        return [(w, QJForm._raw(by_weight[w])) for w in sorted(by_weight)]

    def depth(self) -> DepthProfile:
        """Bidegree (max e2-exponent, max e1-exponent); undefined for zero."""
        if not self._terms:
            raise ValueError("the zero form has no depth")
        s1 = max(e[4] for e in self._terms)
        s2 = max(e[3] for e in self._terms)
        return DepthProfile(s1, s2)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QJForm):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == QJForm.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __pos__(self) -> "QJForm":
        return self

    def __neg__(self) -> "QJForm":
        return QJForm._raw({e: -c for e, c in self._terms.items()})

    def __add__(self, other: "QJForm | Scalar") -> "QJForm":
        if isinstance(other, (int, Fraction)):
            other = QJForm.constant(other)
        if not isinstance(other, QJForm):
            return NotImplemented
        out = dict(self._terms)
        for expos, coeff in other._terms.items():
            acc = out.get(expos, 0) + coeff
            if acc:
                out[expos] = acc
            elif expos in out:
                del out[expos]
        return QJForm._raw(out)

    __radd__ = __add__

    def __sub__(self, other: "QJForm | Scalar") -> "QJForm":
        if isinstance(other, (int, Fraction)):
            other = QJForm.constant(other)
        if not isinstance(other, QJForm):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: "QJForm | Scalar") -> "QJForm":
        return (-self) + other

    def __mul__(self, other: "QJForm | Scalar") -> "QJForm":
        if isinstance(other, QJForm):
            out: dict[Exponents, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3], e1[4] + e2[4])
                    acc = out.get(key, 0) + c1 * c2
                    if acc:
                        out[key] = acc
                    elif key in out:
                        del out[key]
            return QJForm._raw(out)
        if isinstance(other, (int, Fraction)):
            if not other:
                return QJForm._raw({})
            r = Fraction(other)
            return QJForm._raw({e: c * r for e, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QJForm":
        if not isinstance(n, int) or n < 0:
            raise ValueError("QJForm exponents are nonnegative integers")
        out = QJForm.constant(1)
        for _ in range(n):
            out = out * self
        return out

    # -- construction -------------------------------------------------------

    @staticmethod
    def constant(value: Scalar) -> "QJForm":
        value = Fraction(value)
        return QJForm._raw({(0, 0, 0, 0, 0): value} if value else {})

    @staticmethod
    def monomial(expos: Exponents, coeff: Scalar = 1) -> "QJForm":
        return QJForm({tuple(expos): coeff})

    @staticmethod
    def generator(g: Generator) -> "QJForm":
        expos = [0, 0, 0, 0, 0]
        expos[g.value] = 1
        return QJForm._raw({tuple(expos): Fraction(1)})

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for expos, coeff in self.terms():
            body = "*".join(
                f"{name}^{p}" if p > 1 else name
                for name, p in zip(GENERATOR_NAMES, expos)
                if p
            )
            mag = abs(coeff)
            if body:
                text = body if mag == 1 else f"{mag}*{body}"
            else:
                text = str(mag)
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"QJForm({str(self)})"


ZERO = QJForm._raw({})
ONE = QJForm.constant(1)
WP = QJForm.generator(Generator.WP)
DWP = QJForm.generator(Generator.DWP)
E4 = QJForm.generator(Generator.E4)
E1 = QJForm.generator(Generator.EE1)
E2 = QJForm.generator(Generator.EE2)


@dataclass(frozen=True)
class ScaledJForm:
    """A form times an integer power of the formal constant c = 2*i*pi.

    Every displayed identity of the theory is c-homogeneous, so the
    transcendental constant never mixes into coefficients; it is tracked as
    the exponent ``c_power``.  The zero form is canonically (0, 0).
    """

    form: QJForm
    c_power: int = 0

    def __post_init__(self) -> None:
        if not self.form:
            object.__setattr__(self, "c_power", 0)

    def is_zero(self) -> bool:
        return not self.form

    def __add__(self, other: "ScaledJForm") -> "ScaledJForm":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.c_power != other.c_power:
            raise ValueError("cannot add scaled forms with different c powers")
        return ScaledJForm(self.form + other.form, self.c_power)

    def __mul__(self, other: "ScaledJForm | QJForm | Scalar") -> "ScaledJForm":
        if isinstance(other, ScaledJForm):
            return ScaledJForm(self.form * other.form, self.c_power + other.c_power)
        if isinstance(other, (QJForm, int, Fraction)):
            return ScaledJForm(self.form * other, self.c_power)
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self.c_power == 0:
            return str(self.form)
        return f"c^{self.c_power} * ({self.form})"


ZERO_SCALED = ScaledJForm(ZERO, 0)


class Algebra(Enum):
    """The remarkable subalgebras, by the generators they add to M or JS."""

    M = "M"
    MINF = "Minf"
    JS = "JS"
    JS0INF = "JS0inf"
    JSINF0 = "JSinf0"
    JSINF = "JSinf"


@lru_cache(maxsize=1)
def e6_form() -> QJForm:
    """The weight-6 Eisenstein combination -(1/140)dwp^2 + (1/35)wp^3 - (3/7)wp*e4."""
    return QJForm(
        {
            (0, 2, 0, 0, 0): Fraction(-1, 140),
            (3, 0, 0, 0, 0): Fraction(1, 35),
            (1, 0, 1, 0, 0): Fraction(-3, 7),
        }
    )


def monomials_of_weight(k: int, algebra: Algebra = Algebra.JSINF) -> list[Exponents]:
    """All exponent tuples of weight k whose support fits the given algebra.

    Only the four monomial subalgebras are supported; M and Minf are not
    spanned by monomials in these generators.
    """
    if algebra in (Algebra.M, Algebra.MINF):
        raise ValueError("M and Minf are not monomial subalgebras of the five generators")
    allow_d = algebra in (Algebra.JS0INF, Algebra.JSINF)
    allow_e = algebra in (Algebra.JSINF0, Algebra.JSINF)
    out: list[Exponents] = []
    for e in range((k // 2 if allow_e else 0) + 1):
        we = k - 2 * e
        for d in range((we if allow_d else 0) + 1):
            wd = we - d
            for c in range(wd // 4 + 1):
                wc = wd - 4 * c
                for b in range(wc // 3 + 1):
                    wb = wc - 3 * b
                    if wb % 2 == 0:
                        out.append((wb // 2, b, c, d, e))
    return out


def _eliminate(vec: dict[Exponents, Fraction], rows: list[tuple[Exponents, dict[Exponents, Fraction]]]) -> dict[Exponents, Fraction]:
    for pivot, row in rows:
        factor = vec.get(pivot)
        if factor:
            for expos, coeff in row.items():
                acc = vec.get(expos, 0) - factor * coeff
                if acc:
                    vec[expos] = acc
                elif expos in vec:
                    del vec[expos]
    return vec


def in_span(target: QJForm, basis: Iterable[QJForm]) -> bool:
    """Exact rational test of membership of target in the span of basis."""
    rows: list[tuple[Exponents, dict[Exponents, Fraction]]] = []
    for vec in basis:
        red = _eliminate(dict(vec._terms), rows)
        if red:
            pivot = max(red)
            inv = 1 / red[pivot]
            rows.append((pivot, {e: c * inv for e, c in red.items()}))
    return not _eliminate(dict(target._terms), rows)


@lru_cache(maxsize=None)
def _modular_basis(k: int) -> tuple[QJForm, ...]:
    # Products e4^i * e6^j of weight k, written in the JS generators.
    out = []
    e6 = e6_form()
    for j in range(k // 6 + 1):
        rem = k - 6 * j
        if rem % 4 == 0:
            out.append(E4 ** (rem // 4) * e6**j)
    return tuple(out)


def _in_modular_span(f: QJForm) -> bool:
    # f is supported on JS monomials; test each weight part against e4/e6 products.
    for k, comp in f.weight_components():
        if not in_span(comp, _modular_basis(k)):
            return False
    return True


def member(f: QJForm, algebra: Algebra) -> bool:
    """Support test for membership of f in one of the six subalgebras."""
    if algebra is Algebra.JSINF:
        return True
    if algebra is Algebra.JSINF0:
        return all(e[3] == 0 for e in f._terms)
    if algebra is Algebra.JS0INF:
        return all(e[4] == 0 for e in f._terms)
    if algebra is Algebra.JS:
        return all(e[3] == 0 and e[4] == 0 for e in f._terms)
    if algebra is Algebra.M:
        if not all(e[3] == 0 and e[4] == 0 for e in f._terms):
            return False
        return _in_modular_span(f)
    if algebra is Algebra.MINF:
        if not all(e[3] == 0 for e in f._terms):
            return False
        # Split off e2 powers and test each coefficient form against M.
        by_e2: dict[int, dict[Exponents, Fraction]] = {}
        for (a, b, c, d, e), coeff in f._terms.items():
            by_e2.setdefault(e, {})[(a, b, c, 0, 0)] = coeff
        return all(_in_modular_span(QJForm._raw(part)) for part in by_e2.values())
    raise ValueError(f"unknown algebra {algebra!r}")


def q_coefficient(f: QJForm, j1: int, j2: int) -> ScaledJForm:
    """Coefficient of X^j1 Y^j2 in the formal transformation expansion.

    Substituting e2 -> e2 - cX and e1 -> e1 + cY (other generators fixed)
    and collecting X^j1 Y^j2 gives a form times c^(j1+j2).  Out-of-range
    indices (including negative ones) give the zero scaled form.
    """
    sign = -1 if j1 % 2 else 1
    out: dict[Exponents, Fraction] = {}
    for (a, b, c, d, e), coeff in f._terms.items():
        w = binomial(e, j1) * binomial(d, j2)
        if w:
            key = (a, b, c, d - j2, e - j1)
            acc = out.get(key, 0) + coeff * (sign * w)
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    if not out:
        return ZERO_SCALED
    return ScaledJForm(QJForm._raw(out), j1 + j2)


class EisensteinMethod(Enum):
    LAURENT = "laurent"
    GUNTHER = "gunther"


class InconsistencyError(ArithmeticError):
    """Two routes that must agree produced different results."""


@lru_cache(maxsize=None)
def _laurent_c(n: int) -> QJForm:
    # c_n = (2n+1) * e_{2n+2} as a form; the Laurent recursion of the
    # Weierstrass ODE determines c_n for n >= 3 from c_1 and c_2.
    if n == 1:
        return 3 * E4
    if n == 2:
        return 5 * e6_form()
    acc = ZERO
    for a in range(1, n - 1):
        acc = acc + _laurent_c(a) * _laurent_c(n - 1 - a)
    return Fraction(6, 2 * n * (2 * n - 1) - 12) * acc


@lru_cache(maxsize=None)
def _gunther_e(two_n: int) -> QJForm:
    # Solve the z^(2n) Fourier-Laurent identity for e_{2n+4}, inductively.
    if two_n == 4:
        return E4
    from .calculus import Derivation, derive

    n = two_n // 2 - 2
    prev = _gunther_e(two_n - 2)
    acc = (n + 1) * (2 * n + 1) * (prev * E2)
    for a in range(1, n):
        b = n - a
        acc = acc + (2 * a + 1) * (a - 2 * b - 1) * (_gunther_e(2 * a + 2) * _gunther_e(2 * b + 2))
    acc = acc - 2 * (2 * n + 1) * derive(Derivation.DTAU, prev)
    result = Fraction(1, (n + 2) * (2 * n + 5)) * acc
    if any(e[4] != 0 or e[3] != 0 for e in result._terms):
        raise InconsistencyError(f"e_{two_n} solved with residual depth: {result}")
    return result


def eisenstein_in_generators(two_n: int, method: EisensteinMethod = EisensteinMethod.LAURENT) -> QJForm:
    """The weight-2n Eisenstein form expressed in the JS generators wp, dwp, e4."""
    if two_n % 2 != 0 or two_n < 4:
        raise ValueError("Eisenstein reduction requires an even weight >= 4")
    if method is EisensteinMethod.GUNTHER:
        return _gunther_e(two_n)
    if two_n == 4:
        return E4
    n = two_n // 2 - 1
    return Fraction(1, 2 * n + 1) * _laurent_c(n)
