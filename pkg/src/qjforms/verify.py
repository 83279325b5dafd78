"""Named verification suites: every invariant battery behind `qjalg verify`.

Each suite returns a list of :class:`Check` results; randomized batteries
draw from a deterministic generator seeded per suite, so runs are
reproducible.  The `quick` flag shrinks the randomized sample sizes for
interactive use; the defaults meet the acceptance-level counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from types import SimpleNamespace
from typing import Callable, Iterable

from .arith import binomial
from .calculus import (
    Bracket,
    Derivation,
    bracket,
    check_stability,
    derive,
    star_truncated,
    transvectant_by_recurrence,
)
from .dimensions import (
    DimFamily,
    alcuin,
    dim_brute,
    dim_closed,
    modular_dim,
    nearest_int,
    series_coefficients,
)
from .forms import (
    DWP,
    E1,
    E2,
    E4,
    ONE,
    WP,
    ZERO,
    Algebra,
    DepthProfile,
    EisensteinMethod,
    QJForm,
    ScaledJForm,
    e6_form,
    eisenstein_in_generators,
    member,
    monomials_of_weight,
    q_coefficient,
)
from .series import (
    BigradedSeries,
    PrecisionError,
    SeriesDerivation,
    eisenstein_qseries,
    eval_numeric,
    expand,
    series_add,
    series_derive,
    series_equal,
    series_mul,
    series_scale,
)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


class _Recorder:
    def __init__(self) -> None:
        self.checks: list[Check] = []

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail if not ok else ""))

    def batch(self, name: str, runner: Callable[[], str | None]) -> None:
        """Run a battery that returns None on success or a failure detail."""
        try:
            detail = runner()
        except Exception as exc:  # a crash is a failed check, not a crashed suite
            self.add(name, False, f"raised {type(exc).__name__}: {exc}")
            return
        self.add(name, detail is None, detail or "")


def random_form(
    rng: random.Random,
    weight: int,
    algebra: Algebra = Algebra.JSINF,
    max_terms: int = 3,
) -> QJForm | None:
    """Random nonzero homogeneous form of the given weight, or None if empty."""
    monos = monomials_of_weight(weight, algebra)
    if not monos:
        return None
    chosen = rng.sample(monos, k=min(len(monos), rng.randint(1, max_terms)))
    return QJForm({m: Fraction(rng.randint(-4, 4) or 1, rng.randint(1, 3)) for m in chosen})


def _random_form_retry(
    rng: random.Random, max_weight: int, algebra: Algebra = Algebra.JSINF, max_terms: int = 3
) -> QJForm:
    while True:
        f = random_form(rng, rng.randint(1, max_weight), algebra, max_terms)
        if f is not None:
            return f


# ---------------------------------------------------------------------------
# identities: the displayed differential equations, exact and via the oracle
# ---------------------------------------------------------------------------

def _identity_cases(c: SimpleNamespace) -> list[tuple[str, object, object]]:
    F = Fraction
    wp, dwp, e4, e1, e2, e6 = c.wp, c.dwp, c.e4, c.e1, c.e2, c.e6
    dz, dtau = c.dz, c.dtau
    return [
        ("wp_ode", dwp * dwp + 60 * (e4 * wp) + 140 * e6, 4 * (wp * wp * wp)),
        ("dtau_wp", -4 * dtau(wp), e1 * dwp + 2 * (wp * wp) - 2 * (e2 * wp) - 20 * e4),
        ("dtau_e4_modular", dtau(e4), e4 * e2 - F(7, 2) * e6),
        (
            "dtau_e4_elliptic",
            dtau(e4),
            F(-1, 10) * (wp * wp * wp) + F(1, 40) * (dwp * dwp) + F(3, 2) * (wp * e4) + e4 * e2,
        ),
        ("dtau_e6", dtau(e6), F(3, 2) * (e6 * e2) - F(15, 7) * (e4 * e4)),
        (
            "ob_e4",
            4 * dtau(e4) + e1 * dz(e4) - 4 * (e2 * e4),
            F(-2, 5) * (wp * wp * wp) + 6 * (wp * e4) + F(1, 10) * (dwp * dwp),
        ),
        ("dz2_wp", dz(dwp), 6 * (wp * wp) - 30 * e4),
        (
            "dtau_dwp",
            dtau(dwp),
            F(3, 2) * ((5 * e4 - wp * wp) * e1) + F(3, 4) * ((e2 - wp) * dwp),
        ),
        (
            "ob_dwp",
            4 * dtau(dwp) + e1 * dz(dwp) - 3 * (e2 * dwp),
            -3 * (wp * dwp),
        ),
        (
            "ob_e1",
            4 * dtau(e1) + e1 * dz(e1) - e2 * e1,
            F(1, 2) * dwp - e1 * e2,
        ),
        ("dtau_e1", 4 * dtau(e1), e1 * e2 + wp * e1 + F(1, 2) * dwp),
        (
            "ob_e2",
            4 * dtau(e2) + e1 * dz(e2) - 2 * (e2 * e2),
            -1 * (e2 * e2) - 5 * e4,
        ),
        ("dtau_e2", dtau(e2), F(1, 4) * (e2 * e2 - 5 * e4)),
        ("dz_e1", dz(e1), -1 * wp - e2),
    ]


def suite_identities(rng: random.Random, quick: bool = False) -> list[Check]:
    rec = _Recorder()
    q_prec, u_max, min_window = 8, 16, 16

    form_ctx = SimpleNamespace(
        wp=WP,
        dwp=DWP,
        e4=E4,
        e1=E1,
        e2=E2,
        e6=e6_form(),
        dz=lambda f: derive(Derivation.DZ, f),
        dtau=lambda f: derive(Derivation.DTAU, f),
    )
    for name, lhs, rhs in _identity_cases(form_ctx):
        rec.add(f"form:{name}", lhs == rhs, f"lhs-rhs = {lhs - rhs}")

    series_ctx = SimpleNamespace(
        wp=expand(WP, q_prec, u_max),
        dwp=expand(DWP, q_prec, u_max),
        e4=expand(E4, q_prec, u_max),
        e1=expand(E1, q_prec, u_max),
        e2=expand(E2, q_prec, u_max),
        e6=expand(e6_form(), q_prec, u_max),
        dz=lambda s: series_derive(SeriesDerivation.DU, s),
        dtau=lambda s: series_derive(SeriesDerivation.QDQ, s),
    )
    for name, lhs, rhs in _identity_cases(series_ctx):
        try:
            ok = series_equal(lhs, rhs, min_window)
            rec.add(f"series:{name}", ok, "coefficient mismatch")
        except PrecisionError as exc:
            rec.add(f"series:{name}", False, f"precision: {exc}")
    return rec.checks


# ---------------------------------------------------------------------------
# stability: derivation matrix, depth calculus, Q-coefficient formulas
# ---------------------------------------------------------------------------

_EXPECTED_MATRIX: dict[tuple[Algebra, Derivation], str | None] = {
    (Algebra.M, Derivation.DZ): None,
    (Algebra.M, Derivation.DTAU): "e4",
    (Algebra.M, Derivation.OB): None,
    (Algebra.MINF, Derivation.DZ): None,
    (Algebra.MINF, Derivation.DTAU): None,
    (Algebra.MINF, Derivation.OB): None,
    (Algebra.JS, Derivation.DZ): None,
    (Algebra.JS, Derivation.DTAU): "wp",
    (Algebra.JS, Derivation.OB): None,
    (Algebra.JS0INF, Derivation.DZ): "e1",
    (Algebra.JS0INF, Derivation.DTAU): "wp",
    (Algebra.JS0INF, Derivation.OB): "e1",
    (Algebra.JSINF0, Derivation.DZ): None,
    (Algebra.JSINF0, Derivation.DTAU): "wp",
    (Algebra.JSINF0, Derivation.OB): None,
    (Algebra.JSINF, Derivation.DZ): None,
    (Algebra.JSINF, Derivation.DTAU): None,
    (Algebra.JSINF, Derivation.OB): None,
}


def suite_stability(rng: random.Random, quick: bool = False) -> list[Check]:
    rec = _Recorder()
    n_forms = 40 if quick else 200
    n_pairs = 10 if quick else 40

    for (alg, tag), expected_witness in _EXPECTED_MATRIX.items():
        report = check_stability(alg, tag)
        expected_closed = expected_witness is None
        ok = report.closed == expected_closed and report.witness == expected_witness
        rec.add(
            f"matrix:{alg.value}/{tag.value}",
            ok,
            f"got closed={report.closed} witness={report.witness}, expected witness={expected_witness}",
        )

    # Serre derivation on the modular generators.
    rec.add("serre:ob_e4", derive(Derivation.OB, E4) == -14 * e6_form())
    rec.add("serre:ob_e6", derive(Derivation.OB, e6_form()) == Fraction(-60, 7) * E4**2)

    def leibniz_battery() -> str | None:
        for _ in range(n_pairs):
            f = _random_form_retry(rng, 8)
            g = _random_form_retry(rng, 8)
            for tag in Derivation:
                if derive(tag, f * g) != derive(tag, f) * g + f * derive(tag, g):
                    return f"Leibniz fails for {tag} on {f} | {g}"
        return None

    rec.batch("leibniz:all_tags", leibniz_battery)

    def commutation_battery() -> str | None:
        for _ in range(n_pairs):
            f = _random_form_retry(rng, 10)
            lhs = derive(Derivation.DZ, derive(Derivation.DTAU, f))
            rhs = derive(Derivation.DTAU, derive(Derivation.DZ, f))
            if lhs != rhs:
                return f"dz dtau != dtau dz on {f}"
        return None

    rec.batch("commutation:dz_dtau", commutation_battery)

    def delta_theta_battery() -> str | None:
        for tag in (Derivation.DTAU, Derivation.DJAC):
            for _ in range(n_pairs):
                f = _random_form_retry(rng, 10)
                lhs = derive(Derivation.DELTA, derive(tag, f)) - derive(tag, derive(Derivation.DELTA, f))
                if lhs != derive(tag, f):
                    return f"Delta-commutator fails for {tag} on {f}"
        return None

    rec.batch("delta_commutator:dtau_djac", delta_theta_battery)

    def weight_shift_battery() -> str | None:
        shifts = {
            Derivation.DZ: 1,
            Derivation.DTAU: 2,
            Derivation.OB: 2,
            Derivation.DJAC: 2,
            Derivation.DELTA: 0,
        }
        for _ in range(n_pairs):
            k = rng.randint(1, 10)
            f = random_form(rng, k)
            if f is None:
                continue
            for tag, shift in shifts.items():
                img = derive(tag, f)
                if img and img.weight() != k + shift:
                    return f"{tag} is not homogeneous of shift {shift} on {f}"
        return None

    rec.batch("weight_shift:derivations", weight_shift_battery)

    def ob_battery() -> str | None:
        for _ in range(n_pairs):
            f = _random_form_retry(rng, 10)
            s1, s2 = f.depth()
            img = derive(Derivation.OB, f)
            if img:
                d1, d2 = img.depth()
                if d1 > s1 + 1 or d2 > s2:
                    return f"Ob depth ({d1},{d2}) exceeds ({s1 + 1},{s2}) on {f}"
            fjs = _random_form_retry(rng, 10, Algebra.JS)
            if not member(derive(Derivation.OB, fjs), Algebra.JS):
                return f"Ob leaves JS on {fjs}"
        return None

    rec.batch("ob:depth_and_js", ob_battery)

    def structure_battery() -> str | None:
        probes = ((0, 0), (1, 0), (0, 1), (1, 1), (2, 1))
        for _ in range(n_forms):
            k = rng.randint(1, 14)
            f = random_form(rng, k)
            if f is None:
                continue
            g = _random_form_retry(rng, 10)
            s1, s2 = f.depth()
            t1, t2 = g.depth()
            if (f * g).depth() != DepthProfile(s1 + t1, s2 + t2):
                return f"depth additivity fails on {f} | {g}"
            for i, j in probes:
                lhs = q_coefficient(f * g, i, j)
                acc = ScaledJForm(ZERO, 0)
                for al in range(i + 1):
                    for ga in range(j + 1):
                        acc = acc + q_coefficient(f, al, ga) * q_coefficient(g, i - al, j - ga)
                if lhs.form != acc.form:
                    return f"Q product rule fails at ({i},{j}) on {f} | {g}"
                if not lhs.is_zero() and lhs.c_power != i + j:
                    return f"Q c-power wrong at ({i},{j}) on {f} | {g}"
            if not q_coefficient(f, s1 + 1, s2).is_zero() or not q_coefficient(f, s1, s2 + 1).is_zero():
                return f"Q does not vanish beyond depth on {f}"
            corner = q_coefficient(f, s1, s2)
            if not member(corner.form, Algebra.JS):
                return f"corner coefficient leaves JS on {f}"
            if not corner.is_zero() and corner.form.weight() != k - 2 * s1 - s2:
                return f"corner weight wrong on {f}"
            for j1, j2 in probes:
                dzf = derive(Derivation.DZ, f)
                lhs_f = q_coefficient(dzf, j1, j2).form
                rhs_f = derive(Derivation.DZ, q_coefficient(f, j1, j2).form) + (j2 + 1) * q_coefficient(
                    f, j1 - 1, j2 + 1
                ).form
                if lhs_f != rhs_f:
                    return f"Q dz formula fails at ({j1},{j2}) on {f}"
                dtf = derive(Derivation.DTAU, f)
                lhs_t = -4 * q_coefficient(dtf, j1, j2).form
                rhs_t = (
                    -4 * derive(Derivation.DTAU, q_coefficient(f, j1, j2).form)
                    + derive(Derivation.DZ, q_coefficient(f, j1, j2 - 1).form)
                    + (k - j1 + 1) * q_coefficient(f, j1 - 1, j2).form
                )
                if lhs_t != rhs_t:
                    return f"Q dtau formula fails at ({j1},{j2}) on {f}"
                qv = q_coefficient(f, j1, j2).form
                lhs_o = q_coefficient(derive(Derivation.OB, f), j1, j2).form
                rhs_o = (
                    4 * derive(Derivation.DTAU, qv)
                    + E1 * derive(Derivation.DZ, qv)
                    - k * (E2 * qv)
                    + (j1 + j2 - 1) * q_coefficient(f, j1 - 1, j2).form
                    + (j2 + 1) * (E1 * q_coefficient(f, j1 - 1, j2 + 1).form)
                )
                if lhs_o != rhs_o:
                    return f"Q Oberdieck formula fails at ({j1},{j2}) on {f}"
            for (_, _, _, dd, ee), _coeff in derive(Derivation.DZ, f)._terms.items():
                if not ((ee <= s1 and dd <= s2) or (ee <= s1 + 1 and dd <= s2 - 1)):
                    return f"refined dz inclusion fails on {f}"
            for (_, _, _, dd, ee), _coeff in derive(Derivation.DTAU, f)._terms.items():
                if not ((ee <= s1 + 1 and dd <= s2) or (ee <= s1 and dd <= s2 + 1)):
                    return f"refined dtau inclusion fails on {f}"
        return None

    rec.batch("structure:depth_q_calculus", structure_battery)
    return rec.checks


# ---------------------------------------------------------------------------
# brackets: stability theorems, witnesses, recurrence, classical restriction
# ---------------------------------------------------------------------------

def _classical_rc_qseries(k: int, l: int, fs: BigradedSeries, gs: BigradedSeries, n: int) -> BigradedSeries:
    # Classical Rankin-Cohen bracket evaluated directly on q-expansions.
    ftower = [fs]
    gtower = [gs]
    for _ in range(n):
        ftower.append(series_derive(SeriesDerivation.QDQ, ftower[-1]))
        gtower.append(series_derive(SeriesDerivation.QDQ, gtower[-1]))
    out: BigradedSeries | None = None
    for r in range(n + 1):
        coeff = binomial(k + n - 1, n - r) * binomial(l + n - 1, r)
        if not coeff:
            continue
        term = series_scale(Fraction((-1) ** r * coeff), series_mul(ftower[r], gtower[n - r]))
        out = term if out is None else series_add(out, term)
    assert out is not None
    return out


def suite_brackets(rng: random.Random, quick: bool = False) -> list[Check]:
    rec = _Recorder()
    n_pairs = 15 if quick else 100
    n_rec_pairs = 8 if quick else 50
    n_misc = 8 if quick else 25
    e6 = e6_form()

    def stability_battery(tag: Bracket, algebra: Algebra, with_e1: bool) -> Callable[[], str | None]:
        def run() -> str | None:
            for _ in range(n_pairs):
                f = _random_form_retry(rng, 10, algebra)
                g = _random_form_retry(rng, 10, algebra)
                for n in range(5):
                    if not member(bracket(tag, f, g, n), algebra):
                        return f"{tag} order {n} leaves {algebra.value} on {f} | {g}"
                    if with_e1 and n >= 1 and not member(bracket(tag, f, E1, n), algebra):
                        return f"{tag} order {n} with e1 leaves {algebra.value} on {f}"
            return None

        return run

    rec.batch("rc_tau:preserves_JS0inf", stability_battery(Bracket.RC_TAU, Algebra.JS0INF, False))
    rec.batch("rc_d:preserves_JS", stability_battery(Bracket.RC_D, Algebra.JS, False))
    rec.batch("tv:preserves_JSinf0", stability_battery(Bracket.TV, Algebra.JSINF0, True))

    witness = bracket(Bracket.RC_TAU, E4, WP, 1)
    expected = (
        -1 * (E4 * E1 * DWP)
        + Fraction(1, 5) * WP**4
        - 5 * (WP**2 * E4)
        + 20 * E4**2
        - Fraction(1, 20) * (WP * DWP**2)
    )
    rec.add(
        "witness:rc_e4_wp",
        witness == expected
        and witness.depth() == (0, 1)
        and not member(witness, Algebra.JSINF0)
        and not member(witness, Algebra.JS),
        f"got {witness}",
    )
    wd = bracket(Bracket.RC_D, E1, E4, 1)
    rec.add(
        "witness:rcd_e1_e4",
        wd.depth().s1 == 1 and not member(wd, Algebra.JS0INF),
        f"got depth {wd.depth()}",
    )
    wt = bracket(Bracket.TV, E4, WP, 1)
    rec.add("witness:tv_e4_wp", not member(wt, Algebra.JS0INF), f"got {wt}")
    rec.add(
        "value:rcd_e4_wp_in_JS",
        bracket(Bracket.RC_D, E4, WP, 1)
        == Fraction(1, 5) * WP**4 - 5 * (WP**2 * E4) + 20 * E4**2 - Fraction(1, 20) * (WP * DWP**2),
    )
    rec.add(
        "value:tv_e2_e1",
        bracket(Bracket.TV, E2, E1, 1) == Fraction(1, 4) * ((E2**2 - 5 * E4) * (-1 * WP - E2)),
    )

    def tv_vanishes_on_m() -> str | None:
        modular = (E4, e6, E4 * e6, E4**2)
        for f in modular:
            for g in modular:
                for n in range(1, 4):
                    if bracket(Bracket.TV, f, g, n) != ZERO:
                        return f"tv order {n} nonzero on modular pair"
        return None

    rec.batch("tv:vanishes_on_M", tv_vanishes_on_m)

    def e1_transfer() -> str | None:
        # Moving a factor e1 across the transvectant slots differs by lower
        # order brackets only; the exact combination follows from star
        # associativity.
        for _ in range(n_misc):
            f = _random_form_retry(rng, 6, max_terms=2)
            g = _random_form_retry(rng, 6, max_terms=2)
            for n in range(1, 5):
                lhs = bracket(Bracket.TV, f * E1, g, n) - bracket(Bracket.TV, f, g * E1, n)
                rhs = f * bracket(Bracket.TV, E1, g, n) + (-1) ** (n - 1) * (
                    g * bracket(Bracket.TV, E1, f, n)
                )
                for i in range(1, n):
                    c = binomial(n, i)
                    rhs = rhs - c * bracket(Bracket.TV, bracket(Bracket.TV, f, E1, i), g, n - i)
                    rhs = rhs - c * (-1) ** (n - 1) * bracket(
                        Bracket.TV, bracket(Bracket.TV, g, E1, i), f, n - i
                    )
                if lhs != rhs:
                    return f"e1-transfer identity fails at n={n} on {f} | {g}"
        return None

    rec.batch("tv:e1_transfer_identity", e1_transfer)

    def symmetry() -> str | None:
        for _ in range(n_misc):
            f = _random_form_retry(rng, 8)
            g = _random_form_retry(rng, 8)
            for tag in Bracket:
                for n in range(4):
                    if bracket(tag, f, g, n) != (-1) ** n * bracket(tag, g, f, n):
                        return f"{tag} symmetry fails at n={n}"
        return None

    rec.batch("symmetry:minus_one_n", symmetry)

    def weight_shifts() -> str | None:
        for _ in range(n_misc):
            k = rng.randint(1, 8)
            l = rng.randint(1, 8)
            f = random_form(rng, k)
            g = random_form(rng, l)
            if f is None or g is None:
                continue
            for tag, per_n in ((Bracket.RC_TAU, 2), (Bracket.RC_D, 2), (Bracket.TV, 3)):
                for n in range(4):
                    h = bracket(tag, f, g, n)
                    if h and h.weight() != k + l + per_n * n:
                        return f"{tag} weight shift wrong at n={n}"
        return None

    rec.batch("weight_shift:brackets", weight_shifts)

    def tv_recurrence() -> str | None:
        for _ in range(n_rec_pairs):
            f = _random_form_retry(rng, 6, max_terms=2)
            g = _random_form_retry(rng, 6, max_terms=2)
            for n in range(6):
                if transvectant_by_recurrence(f, g, n) != bracket(Bracket.TV, f, g, n):
                    return f"recurrence != formula at n={n} on {f} | {g}"
        return None

    rec.batch("tv:recurrence_equals_formula", tv_recurrence)

    rec.add(
        "classical:rc1_e4_e6",
        bracket(Bracket.RC_TAU, E4, e6, 1) == 21 * e6**2 - Fraction(60, 7) * E4**3,
    )

    def classical_restriction() -> str | None:
        q_prec, u_max = 8, 16
        fs = eisenstein_qseries(4, q_prec)
        gs = eisenstein_qseries(6, q_prec)
        for n in range(4):
            rc_form = bracket(Bracket.RC_TAU, E4, e6, n)
            rhs = _classical_rc_qseries(4, 6, fs, gs, n)
            if rc_form:
                if not series_equal(expand(rc_form, q_prec, u_max), rhs, 1):
                    return f"classical RC mismatch at n={n}"
            elif not rhs.is_zero():
                # orders 2 and 3 land in zero cusp spaces; both routes must vanish
                return f"classical series nonzero at n={n} but the bracket vanishes"
            if bracket(Bracket.RC_D, E4, e6, n) != rc_form:
                return f"rc_d differs from rc_tau on M at n={n}"
        return None

    rec.batch("classical:restriction_to_M", classical_restriction)
    return rec.checks


# ---------------------------------------------------------------------------
# deformations: order-by-order associativity of the three star products
# ---------------------------------------------------------------------------

def _assoc_defect(tag: Bracket, f: QJForm, g: QJForm, h: QJForm, n: int) -> QJForm:
    lhs = ZERO
    rhs = ZERO
    for r in range(n + 1):
        weight = binomial(n, r) if tag is Bracket.TV else 1
        lhs = lhs + weight * bracket(tag, bracket(tag, f, g, r), h, n - r)
        rhs = rhs + weight * bracket(tag, f, bracket(tag, g, h, r), n - r)
    return lhs - rhs


def suite_deformations(rng: random.Random, quick: bool = False) -> list[Check]:
    rec = _Recorder()
    n_triples = 4 if quick else 20

    def assoc_battery(tag: Bracket) -> Callable[[], str | None]:
        def run() -> str | None:
            for _ in range(n_triples):
                f = _random_form_retry(rng, 8, max_terms=2)
                g = _random_form_retry(rng, 8, max_terms=2)
                h = _random_form_retry(rng, 8, max_terms=2)
                for n in range(5):
                    if _assoc_defect(tag, f, g, h, n) != ZERO:
                        return f"associativity fails at n={n} on {f} | {g} | {h}"
            return None

        return run

    for tag in (Bracket.TV, Bracket.RC_TAU, Bracket.RC_D):
        rec.batch(f"associativity:{tag.value}", assoc_battery(tag))

    def fixed_triple() -> str | None:
        f, g, h = WP, E1, E2
        for n in range(4):
            if _assoc_defect(Bracket.TV, f, g, h, n) != ZERO:
                return f"wp,e1,e2 associativity fails at n={n}"
        return None

    rec.batch("associativity:wp_e1_e2", fixed_triple)

    f = _random_form_retry(rng, 6)
    g = _random_form_retry(rng, 6)
    heads = star_truncated(Bracket.TV, f, g, 3)
    rec.add(
        "star:tv_coefficients",
        heads[0] == f * g
        and heads[1] == bracket(Bracket.TV, f, g, 1)
        and heads[2] == Fraction(1, 2) * bracket(Bracket.TV, f, g, 2)
        and heads[3] == Fraction(1, 6) * bracket(Bracket.TV, f, g, 3),
    )
    heads_rc = star_truncated(Bracket.RC_TAU, f, g, 2)
    rec.add(
        "star:rc_coefficients",
        heads_rc[0] == f * g and heads_rc[2] == bracket(Bracket.RC_TAU, f, g, 2),
    )
    return rec.checks


# ---------------------------------------------------------------------------
# dimensions: closed forms, recurrences, oracle triangle
# ---------------------------------------------------------------------------

_FAMILY_ALGEBRA = {
    DimFamily.DS: Algebra.JS,
    DimFamily.DS0INF: Algebra.JS0INF,
    DimFamily.DSINF0: Algebra.JSINF0,
    DimFamily.DSINF: Algebra.JSINF,
}


def suite_dimensions(rng: random.Random, quick: bool = False) -> list[Check]:
    rec = _Recorder()
    kmax = 300 if quick else 2000
    krec = 120 if quick else 500

    table = [dim_closed(DimFamily.DS, k) for k in (0, 1, 2, 4, 6, 8, 10, 12)]
    rec.add("ds:table", table == [1, 0, 1, 2, 3, 4, 5, 7], f"got {table}")

    def triangle() -> str | None:
        for fam in DimFamily:
            coeffs = series_coefficients(fam, kmax)
            for k in range(kmax + 1):
                closed = dim_closed(fam, k)
                brute = dim_brute(fam, k)
                if not (closed == brute == coeffs[k]):
                    return f"{fam.value} k={k}: closed={closed} brute={brute} series={coeffs[k]}"
        return None

    rec.batch("triangle:closed_brute_series", triangle)

    def recurrences() -> str | None:
        for k in range(krec + 1):
            if dim_closed(DimFamily.DS, 2 * k + 3) != dim_closed(DimFamily.DS, 2 * k):
                return f"even-odd recurrence fails at k={k}"
            if dim_closed(DimFamily.DS, 2 * k + 13) != dim_closed(DimFamily.DS, 2 * k + 1) + k + 5:
                return f"shift-13 recurrence fails at k={k}"
            if dim_closed(DimFamily.DS, k) != alcuin(k + 3):
                return f"alcuin shift fails at k={k}"
            if dim_closed(DimFamily.DS, k) != sum(modular_dim(2 * k - 8 * c) for c in range(k // 4 + 1)):
                return f"modular-sum identity fails at k={k}"
            compact = Fraction(k**3 + 15 * k**2 + (72 * k + 144 if k % 2 == 0 else 63 * k + 65), 144)
            if dim_closed(DimFamily.DS0INF, k) != nearest_int(compact):
                return f"compact formula fails at k={k}"
        return None

    rec.batch("recurrences:k_le_500", recurrences)

    def monomial_counts() -> str | None:
        top = 30 if quick else 60
        for fam, alg in _FAMILY_ALGEBRA.items():
            for k in range(top + 1):
                if len(monomials_of_weight(k, alg)) != dim_brute(fam, k):
                    return f"monomial count mismatch {fam.value} k={k}"
        return None

    rec.batch("cross:monomial_spans", monomial_counts)

    rec.add(
        "nearest_int:convention",
        nearest_int(Fraction(5, 2)) == 2
        and nearest_int(Fraction(-1, 2)) == -1
        and nearest_int(Fraction(7, 3)) == 2,
    )
    rec.add(
        "modular_dim:values",
        modular_dim(0) == 1
        and modular_dim(14) == 1
        and modular_dim(-8) == 0
        and all(modular_dim(j + 12) == modular_dim(j) + 1 for j in range(-60, 61)),
    )
    rec.add("alcuin:values", (alcuin(0), alcuin(3), alcuin(15)) == (0, 1, 7))
    return rec.checks


# ---------------------------------------------------------------------------
# oracle: expansion homomorphism, derivation correspondences, Eisenstein data
# ---------------------------------------------------------------------------

def suite_oracle(rng: random.Random, quick: bool = False) -> list[Check]:
    rec = _Recorder()
    n_random = 8 if quick else 30
    q_prec, u_max = 8, 16

    ee2 = eisenstein_qseries(2, 3)
    rec.add(
        "eisenstein:ee2_head",
        [ee2.coefficient(m, 0) for m in range(3)]
        == [Fraction(1, 3), Fraction(-8), Fraction(-24)],
    )
    ee4 = eisenstein_qseries(4, 2)
    rec.add(
        "eisenstein:ee4_head",
        [ee4.coefficient(m, 0) for m in range(2)] == [Fraction(1, 45), Fraction(16, 3)],
    )
    ee6 = eisenstein_qseries(6, 2)
    rec.add(
        "eisenstein:ee6_head",
        [ee6.coefficient(m, 0) for m in range(2)] == [Fraction(2, 945), Fraction(-16, 15)],
    )

    xwp = expand(WP, 1, 2)
    rec.add(
        "expand:wp_leading",
        xwp.coefficient(0, -2) == 1
        and xwp.coefficient(0, 0) == 0
        and xwp.coefficient(0, 2) == Fraction(1, 15),
    )
    one = expand(ONE, 2, 2)
    rec.add("expand:one", one.weight == 0 and one.coefficient(0, 0) == 1)

    def homomorphism() -> str | None:
        for _ in range(n_random):
            k = rng.randint(1, 8)
            f = random_form(rng, k)
            g = random_form(rng, k)
            if f is None or g is None:
                continue
            lhs = expand(f + g, q_prec, u_max) if f + g else None
            if lhs is not None:
                rhs = series_add(expand(f, q_prec, u_max), expand(g, q_prec, u_max))
                if not series_equal(lhs, rhs, 8):
                    return f"additivity fails on {f} | {g}"
            h = random_form(rng, rng.randint(1, 6))
            if h is None:
                continue
            lhs2 = expand(f * h, q_prec, u_max)
            rhs2 = series_mul(expand(f, q_prec, u_max), expand(h, q_prec, u_max))
            if not series_equal(lhs2, rhs2, 8):
                return f"multiplicativity fails on {f} | {h}"
        return None

    rec.batch("homomorphism:add_mul", homomorphism)

    def correspondence() -> str | None:
        for _ in range(n_random):
            f = _random_form_retry(rng, 8)
            lhs = expand(derive(Derivation.DZ, f), q_prec, u_max)
            rhs = series_derive(SeriesDerivation.DU, expand(f, q_prec, u_max))
            if not series_equal(lhs, rhs, 8):
                return f"dz correspondence fails on {f}"
            lhs2 = expand(derive(Derivation.DTAU, f), q_prec, u_max)
            rhs2 = series_derive(SeriesDerivation.QDQ, expand(f, q_prec, u_max))
            if not series_equal(lhs2, rhs2, 8):
                return f"dtau correspondence fails on {f}"
        return None

    rec.batch("correspondence:dz_dtau", correspondence)

    def parity() -> str | None:
        for _ in range(n_random):
            k = rng.randint(1, 9)
            f = random_form(rng, k)
            if f is None:
                continue
            s = expand(f, 4, 10)
            for (_, n), coeff in s.items():
                if coeff and (n - k) % 2 != 0:
                    return f"parity fails on {f}: u^{n} present at weight {k}"
        return None

    rec.batch("parity:u_exponents", parity)

    def gunther_series() -> str | None:
        qp, um = 6, 12
        cache = {j: expand(eisenstein_in_generators(j), qp, um) for j in range(4, 16, 2)}
        cache_e2 = expand(E2, qp, um)
        for n in range(1, 6):
            lhs = 2 * (2 * n + 1) * series_derive(SeriesDerivation.QDQ, cache[2 * n + 2])
            rhs = (n + 1) * (2 * n + 1) * series_mul(cache[2 * n + 2], cache_e2)
            rhs = series_add(rhs, series_scale(-(n + 2) * (2 * n + 5), cache[2 * n + 4]))
            for a in range(1, n):
                b = n - a
                rhs = series_add(
                    rhs,
                    series_scale(
                        (2 * a + 1) * (a - 2 * b - 1), series_mul(cache[2 * a + 2], cache[2 * b + 2])
                    ),
                )
            if not series_equal(lhs, rhs, 8):
                return f"series identity fails at n={n}"
        return None

    rec.batch("gunther:series_consistency", gunther_series)

    def method_agreement() -> str | None:
        for two_n in range(4, 26, 2):
            if eisenstein_in_generators(two_n, EisensteinMethod.LAURENT) != eisenstein_in_generators(
                two_n, EisensteinMethod.GUNTHER
            ):
                return f"laurent != gunther at weight {two_n}"
        return None

    rec.batch("eisenstein:method_agreement", method_agreement)

    rec.add(
        "eisenstein:e8_value",
        eisenstein_in_generators(8) == Fraction(3, 7) * E4**2,
    )
    rec.add(
        "eisenstein:e10_value",
        eisenstein_in_generators(10) == Fraction(5, 11) * (E4 * e6_form()),
    )

    def fourier_laurent_match() -> str | None:
        for two_n in range(6, 16, 2):
            lhs = expand(eisenstein_in_generators(two_n), q_prec, u_max)
            rhs = eisenstein_qseries(two_n, q_prec)
            if not series_equal(lhs, rhs, 1):
                return f"expansion of e_{two_n} differs from its Fourier series"
        return None

    rec.batch("eisenstein:fourier_vs_laurent", fourier_laurent_match)

    def precision_contract() -> str | None:
        narrow = expand(WP, 2, 2)
        try:
            series_equal(narrow, narrow, 10)
            return "narrow comparison did not raise"
        except PrecisionError:
            return None

    rec.batch("precision:insufficient_window_raises", precision_contract)

    def numeric() -> str | None:
        tau, z = 2j, 0.1 + 0.05j
        residual = (
            eval_numeric(DWP**2, tau, z, 12, 16)
            - 4 * eval_numeric(WP**3, tau, z, 12, 16)
            + 60 * eval_numeric(E4 * WP, tau, z, 12, 16)
            + 140 * eval_numeric(e6_form(), tau, z, 12, 16)
        )
        if abs(residual) >= 1e-6:
            return f"ODE residual {abs(residual)} too large"
        if abs(eval_numeric(ONE, tau, z, 4, 4) - 1) > 1e-12:
            return "eval(1) != 1"
        small = 0.01 + 0.005j
        lead = eval_numeric(WP, tau, small, 12, 16) * small**2
        if abs(lead - 1) > 1e-4:
            return f"wp leading term off: {lead}"
        return None

    rec.batch("numeric:spot_checks", numeric)
    return rec.checks


SUITES: dict[str, Callable[[random.Random, bool], list[Check]]] = {
    "identities": suite_identities,
    "stability": suite_stability,
    "brackets": suite_brackets,
    "deformations": suite_deformations,
    "dimensions": suite_dimensions,
    "oracle": suite_oracle,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suites(names: Iterable[str], seed: int = 20240801, quick: bool = False) -> dict[str, list[Check]]:
    """Run the named suites with per-suite deterministic randomness."""
    expanded: list[str] = []
    for name in names:
        if name == "all":
            expanded.extend(SUITES)
        elif name in SUITES:
            expanded.append(name)
        else:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    out: dict[str, list[Check]] = {}
    for name in dict.fromkeys(expanded):
        rng = random.Random(f"{seed}:{name}")
        out[name] = SUITES[name](rng, quick)
    return out
