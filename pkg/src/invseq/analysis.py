"""Classification of the 343 relation triples and numerical asymptotics.

Two jobs live here.  First, grouping all triples of binary relations by
the pattern set they induce — normalised by a closure under containment
implications, since different pattern sets can carve out the same
avoiders — and then by their counting sequence, which recovers the
classical equivalence-class and Wilf-class structure.  Second,
floating-point analysis of the exact counting sequences: extrapolating
the growth rate mu = lim I_{n+1}/I_n, estimating the polynomial
correction exponent, and fitting the stretched-exponential form that two
of the classes exhibit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import PatternSet, RelationTriple, all_triples, triple_to_pattern_set
from .gentree import ClassId
from .oracle import count_avoiders


# Containment implications among the 13 length-3 patterns: an inversion
# sequence that contains the pattern on the left necessarily contains at
# least one of the patterns on the right.  Most follow by replacing one
# element of an occurrence with the initial forced zero a_1 = 0 and case
# analysis on which occurrence values are zero; e.g. for 201 with
# occurrence (a_i, a_j, a_k), the subsequence (a_1, a_i, a_k) = (0, big,
# mid) is an occurrence of 021.  Consequently, forbidding the right-hand
# patterns already forbids the left-hand one, so adding it to a pattern
# set does not change the avoiders.
PATTERN_IMPLICATIONS: tuple[tuple[str, frozenset[str]], ...] = (
    ("021", frozenset({"001", "011"})),
    ("100", frozenset({"000", "001"})),
    ("100", frozenset({"000", "011"})),
    ("100", frozenset({"010", "021"})),
    ("101", frozenset({"001"})),
    ("101", frozenset({"011"})),
    ("101", frozenset({"010", "021"})),
    ("102", frozenset({"001"})),
    ("102", frozenset({"012"})),
    ("110", frozenset({"011"})),
    ("110", frozenset({"010", "021"})),
    ("120", frozenset({"012"})),
    ("120", frozenset({"010", "021"})),
    ("201", frozenset({"001"})),
    ("201", frozenset({"021"})),
    ("210", frozenset({"021"})),
    ("210", frozenset({"001", "110"})),
)


def close_pattern_set(patterns: PatternSet) -> PatternSet:
    """Add every pattern made redundant by the implication table.

    The result is a canonical enlargement with the same avoiders, so two
    triples are equivalent whenever their induced pattern sets have equal
    closures.
    """
    have = {str(p) for p in patterns.patterns}
    changed = True
    while changed:
        changed = False
        for p, alternatives in PATTERN_IMPLICATIONS:
            if p not in have and alternatives <= have:
                have.add(p)
                changed = True
    return PatternSet.of(*sorted(have))


@dataclass
class TripleClassification:
    """Triples grouped by closed pattern set, then by counting sequence."""

    n_max: int
    pattern_classes: dict[PatternSet, list[RelationTriple]]
    counts: dict[PatternSet, tuple[int, ...]]
    wilf_classes: dict[tuple[int, ...], list[PatternSet]] = field(default_factory=dict)

    @property
    def n_triples(self) -> int:
        return sum(len(v) for v in self.pattern_classes.values())

    @property
    def n_pattern_classes(self) -> int:
        return len(self.pattern_classes)

    @property
    def n_wilf_classes(self) -> int:
        return len(self.wilf_classes)

    def cell_of(self, patterns: PatternSet) -> PatternSet:
        """The equivalence cell (canonical closed pattern set) containing
        the avoidance class of the given pattern set."""
        key = close_pattern_set(patterns)
        if key not in self.pattern_classes:
            raise KeyError(f"no triple induces a pattern set equivalent to {patterns}")
        return key


def classify_triples(n_max: int = 9, bound: int | None = None) -> TripleClassification:
    """Group all 343 relation triples by pattern set and counting sequence.

    Two triples whose induced pattern sets agree after closure under the
    implication table have the same avoiders; Wilf classes additionally
    merge cells whose counting sequences agree up to n_max.
    """
    pattern_classes: dict[PatternSet, list[RelationTriple]] = {}
    for t in all_triples():
        key = close_pattern_set(triple_to_pattern_set(t))
        pattern_classes.setdefault(key, []).append(t)
    counts = {
        ps: tuple(count_avoiders(n, ps, bound) for n in range(n_max + 1))
        for ps in pattern_classes
    }
    wilf: dict[tuple[int, ...], list[PatternSet]] = {}
    for ps, vec in counts.items():
        wilf.setdefault(vec, []).append(ps)
    return TripleClassification(n_max, pattern_classes, counts, wilf)


# ---------------------------------------------------------------------------
# Reference growth rates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthInfo:
    """Reference asymptotics: I_n ~ C n^g mu^n, times mu1^(n^sigma) if stretched."""

    mu: float
    description: str
    mu_polynomial: tuple[int, ...] | None = None  # ascending coeffs, mu is a root
    exponent: float | None = None  # the power-law exponent g
    stretched: bool = False
    log_mu1: float | None = None  # stretched-exponential coefficient


SQRT2 = 2 ** 0.5

GROWTH_REFERENCE: dict[ClassId, GrowthInfo] = {
    ClassId.C663A: GrowthInfo(
        4.730576939379623, "algebraic root", (4, -12, 4, -24, 5), -1.5
    ),
    ClassId.C733: GrowthInfo(
        5.162073287778036, "algebraic root", (1, -14, 7, -6, 1), -1.5
    ),
    ClassId.C1016: GrowthInfo(4.0, "4", None, -0.5),
    ClassId.C1176: GrowthInfo(2 + 2 * SQRT2, "2 + 2*sqrt(2)", None, -1.5),
    ClassId.C1253: GrowthInfo(4.0, "4", None, -0.5),
    ClassId.C1420: GrowthInfo(27 / 5, "27/5", None, -1.5),
    ClassId.C1833A: GrowthInfo(
        5.980417720769260, "algebraic root", (32, 195, 12, 112, -20), -1.5
    ),
    ClassId.C214: GrowthInfo(4.0, "4", None, -1.5),
    ClassId.C830: GrowthInfo(27 / 4, "27/4", None, -1.5),
    ClassId.C1509: GrowthInfo(3 + 2 * SQRT2, "3 + 2*sqrt(2)", None, -1.5),
    ClassId.C1953A: GrowthInfo(27 / 4, "27/4", None, -1.5),
    ClassId.C247: GrowthInfo(
        8.0, "8, stretched", None, 4.25, stretched=True, log_mu1=-13.0
    ),
    ClassId.C759: GrowthInfo(
        9.0, "9, stretched", None, 3.25, stretched=True, log_mu1=-10.4
    ),
    ClassId.C2106: GrowthInfo(9.0, "9", None, -5.401),
}

ALGEBRAIC_CLASSES = (
    ClassId.C663A,
    ClassId.C733,
    ClassId.C1016,
    ClassId.C1176,
    ClassId.C1253,
    ClassId.C1420,
    ClassId.C1833A,
)


def check_root_constants(class_id: ClassId, tol: float = 1e-9) -> float:
    """Confirm the tabulated mu: if a defining polynomial is stored, it must
    vanish at mu and have a root there numerically; returns mu."""
    info = GROWTH_REFERENCE[class_id]
    if info.mu_polynomial is not None:
        val = sum(c * info.mu ** i for i, c in enumerate(info.mu_polynomial))
        scale = max(abs(c) * info.mu ** i for i, c in enumerate(info.mu_polynomial))
        if abs(val) > tol * scale:
            raise ArithmeticError(
                f"{class_id.value}: stored mu is not a polynomial root (residual {val})"
            )
        roots = np.roots(list(reversed(info.mu_polynomial)))
        real = [r.real for r in roots if abs(r.imag) < 1e-9]
        if not any(abs(r - info.mu) < 1e-6 for r in real):
            raise ArithmeticError(f"{class_id.value}: numpy disagrees about the root")
    return info.mu


# ---------------------------------------------------------------------------
# Extrapolation of counting sequences
# ---------------------------------------------------------------------------


@dataclass
class GrowthEstimate:
    mu: float
    exponent: float | None
    n_terms: int
    points_used: int


def _neville(xs: list[Fraction], ys: list[Fraction]) -> Fraction:
    """Exact polynomial extrapolation of (xs, ys) to x = 0.

    Exact rational arithmetic sidesteps the severe cancellation that makes
    the floating-point tableau useless at these closely spaced abscissae.
    """
    t = list(ys)
    n = len(t)
    for k in range(1, n):
        for i in range(n - k):
            t[i] = (xs[i + k] * t[i] - xs[i] * t[i + 1]) / (xs[i + k] - xs[i])
    return t[0]


def estimate_growth(counts: list[int], points: int = 10) -> GrowthEstimate:
    """Estimate mu (and the power-law exponent) from a counting sequence.

    Successive ratios I_{n+1}/I_n behave like mu (1 + g/n + ...), so
    polynomial extrapolation in 1/n to 1/n = 0 accelerates convergence;
    the exponent comes from extrapolating n (r_n / mu - 1).  Sample points
    are spread over the top half of the sequence.
    """
    n_max = len(counts) - 2
    if n_max < 2 * points + 2:
        raise ValueError("not enough terms for the requested extrapolation depth")
    step = max(1, n_max // (2 * points))
    ns = [n_max - j * step for j in range(points)]
    xs = [Fraction(1, n) for n in ns]
    ratios = [Fraction(counts[n + 1], counts[n]) for n in ns]
    mu = _neville(xs, ratios)
    gs = [n * (r / mu - 1) for n, r in zip(ns, ratios)]
    exponent = _neville(xs, gs)
    return GrowthEstimate(float(mu), float(exponent), len(counts), points)


@dataclass
class StretchedFit:
    base: float
    sigma: float
    exponent: float
    log_mu1: float
    log_c: float
    residual: float


def fit_stretched(
    counts: list[int],
    base: float,
    sigma: float = 0.375,
    n_min: int = 50,
) -> StretchedFit:
    """Least-squares fit of log I_n = log C + g log n + (log mu1) n^sigma + n log base.

    The exponent sigma is held fixed; this is a diagnostic fit, not a
    confirmed functional form.
    """
    n_max = len(counts) - 1
    ns = np.arange(n_min, n_max + 1)
    # log of huge integers, exactly: int.bit_length-based via Fraction -> float fails,
    # so use math on the exact integers through their bit length and top bits.
    ys = np.array([_log_int(counts[n]) - n * np.log(base) for n in ns])
    design = np.column_stack([np.ones_like(ns, dtype=float), np.log(ns), ns ** sigma])
    sol, res, _, _ = np.linalg.lstsq(design, ys, rcond=None)
    log_c, g, log_mu1 = sol
    residual = float(np.sqrt(res[0] / len(ns))) if len(res) else 0.0
    return StretchedFit(base, sigma, g, log_mu1, log_c, residual)


def _log_int(v: int) -> float:
    """Natural log of a (possibly enormous) positive integer."""
    if v <= 0:
        raise ValueError("log of a nonpositive count")
    bits = v.bit_length()
    if bits <= 900:
        return float(np.log(float(v)))
    shift = bits - 60
    return float(np.log(float(v >> shift))) + shift * float(np.log(2.0))
