"""Closed-form bounds on the zero forcing number, and their assembly.

Every evaluator states its own applicability precondition; ``bound_report``
checks those preconditions on a concrete graph, evaluates whatever applies,
optionally attaches the exact value and a spectral summary, and asserts the
soundness invariants (no applicable lower bound may exceed any applicable
upper bound, nor the exact value when present).  A violation raises
``SoundnessError`` -- that is the falsification channel and should never
fire.

Conventions: bound values are real numbers; callers take ceilings when
comparing with the integer Z.  Negative lower bounds clamp to 0, and
vacuous upper bounds clamp to n.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InputError, SoundnessError
from .forcing import zero_forcing_number_exact, zero_forcing_upper_heuristic
from .graph import Graph, contains_kab, girth, is_regular, min_degree
from .spectral import SpectralSummary, greedy_witness, spectrum

SQRT2 = math.sqrt(2.0)


def moore_bound(d: float, g: int) -> float:
    """Minimum vertex count forced by average degree d and girth g."""
    if g < 3:
        raise InputError("girth must be >= 3")
    if g % 2 == 1:
        k = (g - 1) // 2
        return float((d - 1) ** k)
    k = (g - 2) // 2
    return 2.0 * (d - 1) ** k


def girth_lower_bound(delta, g: int):
    """Forcing lower bounds from girth: (sharp, simplified).

    For girth 2k+1 the simplified form is exp(-1) * (delta^k/(k+1) -
    delta^(k-1)) and the sharp form is (k*delta/(k+1) - 1)^k / (k+1); even
    girth doubles both.  The sharp value is returned as an exact ``Fraction``
    when ``delta`` is an integer (it is a rational expression), and always
    dominates the simplified value.  Both clamp below at 0.
    """
    if delta < 2 or g < 3:
        raise InputError("need min degree >= 2 and girth >= 3")
    if g % 2 == 1:
        k, factor = (g - 1) // 2, 1
    else:
        k, factor = (g - 2) // 2, 2
    simplified = factor * math.exp(-1.0) * (
        delta ** k / (k + 1) - delta ** (k - 1))
    simplified = max(0.0, simplified)
    if isinstance(delta, int):
        base = Fraction(k * delta - (k + 1), k + 1)
        sharp = factor * base ** k / (k + 1)
        sharp = max(Fraction(0), sharp)
    else:
        sharp = max(0.0, factor * (k * delta / (k + 1) - 1) ** k / (k + 1))
    return sharp, simplified


def davila_kenter_value(delta, g: int):
    """Comparison value delta + (delta - 2)(g - 3); not used for soundness."""
    if delta < 2 or g < 3:
        raise InputError("need min degree >= 2 and girth >= 3")
    return delta + (delta - 2) * (g - 3)


@dataclass(frozen=True)
class TuranParams:
    """Caller-supplied edge-count envelope: ex(n, H) <= beta * n^(1+c)."""

    beta: float
    c: float
    n0: int

    def __post_init__(self):
        if not self.beta > 0:
            raise InputError("beta must be positive")
        if not 0 < self.c < 1:
            raise InputError("c must lie in (0, 1)")
        if self.n0 < 1:
            raise InputError("n0 must be >= 1")


def hfree_lower_bound(delta, params: TuranParams):
    """Forcing lower bound for H-free graphs; returns (value, applicable).

    The two published forms 2^(-1-2/c) (delta/beta)^(1/c) and
    (1/2) (delta/(4 beta))^(1/c) coincide algebraically; both are evaluated
    and must agree to 1e-12 relative.  Applicable when delta >= 2*n0.
    """
    inv_c = 1.0 / params.c
    form_a = 2.0 ** (-1.0 - 2.0 * inv_c) * (delta / params.beta) ** inv_c
    form_b = 0.5 * (delta / (4.0 * params.beta)) ** inv_c
    if math.isfinite(form_a) and math.isfinite(form_b):
        denom = max(abs(form_a), abs(form_b), 1e-300)
        if abs(form_a - form_b) / denom > 1e-12:
            raise SoundnessError(
                f"equivalent bound forms disagree: {form_a} vs {form_b}")
    return form_b, delta >= 2 * params.n0


def kab_lower_bound(a: int, b: int, delta):
    """Forcing lower bound for K_{a,b}-free graphs; (value, applicable).

    value = (1/2) * (delta / (4 (b-1)^(1/a)))^(a/(a-1)); the degree
    precondition is delta >= 4a - 4.
    """
    if a < 2:
        raise InputError("a must be >= 2 (the exponent is singular at a=1)")
    if b < a:
        raise InputError("need a <= b")
    value = 0.5 * (delta / (4.0 * (b - 1) ** (1.0 / a))) ** (a / (a - 1.0))
    return value, delta >= 4 * a - 4


def kst_degree_bound(a: int, b: int, n: int) -> float:
    """Average-degree cap (b-1)^(1/a) n^(1-1/a) + a - 1 for K_{a,b}-free graphs."""
    if not (1 <= a <= b) or n < 1:
        raise InputError("need 1 <= a <= b and n >= 1")
    return (b - 1) ** (1.0 / a) * n ** (1.0 - 1.0 / a) + a - 1


def hoffman_forcing_lower(n: int, d, lambda_min) -> float:
    """Smallest-eigenvalue lower bound n(1 + 2 lambda_min/(d - lambda_min))."""
    if d <= 0:
        raise InputError("need positive degree")
    if lambda_min >= 0:
        raise InputError("the smallest adjacency eigenvalue must be negative")
    return max(0.0, n * (1.0 + 2.0 * lambda_min / (d - lambda_min)))


def spectral_forcing_upper(n: int, d, lam):
    """Spectral-gap upper bound; returns (value, vacuous).

    value = n(1 - log((d-lam)/(2 lam+1)) / (2(d-lam))).  When the gap d-lam
    is at most 2 lam + 1 the logarithm is non-positive and the bound is
    reported as vacuous with value n.
    """
    if not 0 <= lam < d:
        raise InputError("need 0 <= lam < d")
    gap = d - lam
    if gap <= 2 * lam + 1:
        return float(n), True
    return n * (1.0 - math.log(gap / (2 * lam + 1)) / (2.0 * gap)), False


def gnp_forcing_formula(n: int, p: float) -> float:
    """Asymptotic forcing value n - (2+sqrt(2)) log(np)/(-log(1-p)).

    The o(1) correction of the asymptotic statement is dropped.  The
    published guarantee covers log^2(n)/sqrt(n) <= p <= 2/3; the evaluator
    itself accepts any p in (0,1) with np > 1 and leaves the applicability
    judgement to the caller.
    """
    if not 0.0 < p < 1.0:
        raise InputError("p must lie strictly inside (0, 1)")
    if n * p <= 1.0:
        raise InputError("need n*p > 1")
    return n - (2.0 + SQRT2) * math.log(n * p) / (-math.log1p(-p))


def odd_inner_product_witness_cap(m: int) -> int:
    """Max witness order in the odd-inner-product graph: the label length m.

    Witness t-columns have independent GF(2) labels, so no witness can be
    longer than the label dimension; hence Z >= n - m for that graph.
    """
    if m < 3 or m % 2 == 0:
        raise InputError("label length must be odd and >= 3")
    return m


# ---------------------------------------------------------------------------
# Per-graph assembly


@dataclass(frozen=True)
class BoundEntry:
    name: str
    kind: str  # "lower" | "upper"
    value: float
    applicable: bool
    note: str


@dataclass(frozen=True)
class BoundReport:
    n: int
    edges: int
    min_degree: Optional[int]
    girth: float  # math.inf for forests
    regular_degree: Optional[int]
    exact_z: Optional[int]
    entries: tuple
    spectral: Optional[SpectralSummary]


_DEFAULT_KAB = ((2, 2), (2, 3), (3, 3))


def bound_report(g: Graph, *, eigensolve="auto", exact_cap: int = 22,
                 budget: int = 10**9, heuristic_restarts: int = 20,
                 seed: int = 0, kab_pairs=_DEFAULT_KAB,
                 kab_enumeration_cap: int = 60,
                 spectral_n_cap: int = 500) -> BoundReport:
    """Evaluate every applicable bound on one graph and cross-check them.

    ``eigensolve`` may be True, False, or "auto" (solve when the graph is
    regular and small enough).  The exact solver runs when n <= exact_cap.
    Raises ``SoundnessError`` if any applicable bound contradicts another
    or the exact value.
    """
    n = g.n
    delta = min_degree(g) if n else None
    gi = girth(g)
    reg = is_regular(g)
    entries = []

    spec = None
    want_spec = eigensolve is True or (
        eigensolve == "auto" and reg is not None and 1 <= n <= spectral_n_cap)
    if want_spec and n >= 1:
        spec = spectrum(g)

    if n:
        entries.append(BoundEntry(
            "min_degree_minus_one", "lower", max(0.0, float(delta - 1)),
            True, "trivial bound"))
        if delta >= 2 and gi != math.inf:
            sharp, simplified = girth_lower_bound(delta, int(gi))
            entries.append(BoundEntry(
                "girth_sharp", "lower", float(sharp), True,
                f"girth {int(gi)}, min degree {delta}"))
            entries.append(BoundEntry(
                "girth_simplified", "lower", simplified, True,
                f"girth {int(gi)}, min degree {delta}"))
            entries.append(BoundEntry(
                "davila_kenter", "lower",
                float(davila_kenter_value(delta, int(gi))), False,
                "comparison value only; never used for soundness"))
        else:
            entries.append(BoundEntry(
                "girth_sharp", "lower", 0.0, False,
                "needs min degree >= 2 and a cycle"))

    for a, b in kab_pairs:
        if n == 0 or n > kab_enumeration_cap:
            entries.append(BoundEntry(
                f"kab_free_{a}_{b}", "lower", 0.0, False,
                f"freeness not checked (n > {kab_enumeration_cap})"))
            continue
        embedding = contains_kab(g, a, b)
        value, degree_ok = kab_lower_bound(a, b, delta)
        if embedding is not None:
            entries.append(BoundEntry(
                f"kab_free_{a}_{b}", "lower", 0.0, False,
                f"graph contains K_{{{a},{b}}}"))
        elif not degree_ok:
            entries.append(BoundEntry(
                f"kab_free_{a}_{b}", "lower", value, False,
                f"min degree {delta} below {4 * a - 4}"))
        else:
            entries.append(BoundEntry(
                f"kab_free_{a}_{b}", "lower", value, True,
                f"K_{{{a},{b}}}-free, min degree {delta}"))

    if spec is not None and reg is not None and reg > 0:
        if spec.lambda_min < 0:
            entries.append(BoundEntry(
                "hoffman_spectral", "lower",
                hoffman_forcing_lower(n, reg, spec.lambda_min), True,
                f"lambda_min = {spec.lambda_min:.6f}"))
        if spec.lam < reg:
            value, vacuous = spectral_forcing_upper(n, reg, spec.lam)
            entries.append(BoundEntry(
                "spectral_gap_upper", "upper", value, True,
                "vacuous (gap too small), clamped to n" if vacuous
                else f"lam = {spec.lam:.6f}"))
        else:
            entries.append(BoundEntry(
                "spectral_gap_upper", "upper", float(n), False,
                "lam >= degree; precondition fails"))
        witness_obj, _ = greedy_witness(g, spec)
        entries.append(BoundEntry(
            "greedy_witness_upper", "upper", float(n - witness_obj.order),
            True, f"verified witness of order {witness_obj.order}"))

    if n:
        size, _ = zero_forcing_upper_heuristic(
            g, restarts=heuristic_restarts, seed=seed)
        entries.append(BoundEntry(
            "heuristic_removal_upper", "upper", float(size), True,
            f"verified forcing set, {heuristic_restarts} restarts"))

    exact_z = None
    if n <= exact_cap:
        exact_z = zero_forcing_number_exact(g, budget=budget).z

    report = BoundReport(
        n=n, edges=g.edge_count, min_degree=delta, girth=gi,
        regular_degree=reg, exact_z=exact_z, entries=tuple(entries),
        spectral=spec)
    _assert_sound(report)
    return report


_FP_SLACK = 1e-9


def _assert_sound(report: BoundReport) -> None:
    lowers = [e for e in report.entries if e.applicable and e.kind == "lower"]
    uppers = [e for e in report.entries if e.applicable and e.kind == "upper"]
    for lo in lowers:
        for up in uppers:
            if math.isfinite(lo.value) and math.isfinite(up.value):
                if lo.value > up.value + _FP_SLACK:
                    raise SoundnessError(
                        f"lower bound {lo.name}={lo.value} exceeds upper "
                        f"bound {up.name}={up.value}")
    if report.exact_z is not None:
        for lo in lowers:
            if lo.value > report.exact_z + _FP_SLACK:
                raise SoundnessError(
                    f"lower bound {lo.name}={lo.value} exceeds exact "
                    f"Z={report.exact_z}")
        for up in uppers:
            if up.value < report.exact_z - _FP_SLACK:
                raise SoundnessError(
                    f"upper bound {up.name}={up.value} is below exact "
                    f"Z={report.exact_z}")


# ---------------------------------------------------------------------------
# Serialization


def report_to_dict(report: BoundReport) -> dict:
    return {
        "format": "zeroforcing.bound_report.v1",
        "n": report.n,
        "edges": report.edges,
        "min_degree": report.min_degree,
        "girth": None if report.girth == math.inf else int(report.girth),
        "regular_degree": report.regular_degree,
        "exact_z": report.exact_z,
        "spectral": None if report.spectral is None else {
            "top": report.spectral.d,
            "lam": report.spectral.lam,
            "lambda_min": report.spectral.lambda_min,
            "tolerance": report.spectral.tolerance,
        },
        "entries": [
            {"name": e.name, "kind": e.kind, "value": e.value,
             "applicable": e.applicable, "note": e.note}
            for e in report.entries
        ],
    }


def report_to_json(report: BoundReport, indent: Optional[int] = 2) -> str:
    return json.dumps(report_to_dict(report), indent=indent)


def report_to_text(report: BoundReport) -> str:
    lines = []
    gi = "inf" if report.girth == math.inf else str(int(report.girth))
    head = (f"n={report.n} edges={report.edges} "
            f"min_degree={report.min_degree} girth={gi}")
    if report.regular_degree is not None:
        head += f" regular={report.regular_degree}"
    if report.exact_z is not None:
        head += f" exact Z = {report.exact_z}"
    lines.append(head)
    if report.spectral is not None:
        s = report.spectral
        lines.append(f"spectrum: top={s.d:.6f} lam={s.lam:.6f} "
                     f"lambda_min={s.lambda_min:.6f}")
    name_w = max((len(e.name) for e in report.entries), default=4)
    lines.append(f"{'bound':<{name_w}}  kind   value        applicable  note")
    for e in report.entries:
        lines.append(
            f"{e.name:<{name_w}}  {e.kind:<5}  {e.value:<11.4f}  "
            f"{str(e.applicable):<10}  {e.note}")
    return "\n".join(lines)
