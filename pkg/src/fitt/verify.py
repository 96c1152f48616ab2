"""The verification harness: chart-by-chart Fitting-ideal comparisons for the
Rees rings, the blow-up corollary in chart form, schematic image = center,
the non-normality probe, and grid runs over parameter tuples.

Two index policies ship.  "paper" uses n+s+l-1 for the global Fitting index;
"corrected" uses n+l-s+1, which is what the reduction to s=1 combined with
the shift law Fitt_{i+1}(M + free) = Fitt_i(M) actually forces.  They agree
exactly when s=1.  Chart indices are one lower (the localization splits off a
free rank-one summand).  An explicit integer index is accepted for negative
controls.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .groebner import (
    Ideal,
    eliminate,
    ideal_contains,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    localized_equal,
    transport_ideal,
)
from .kaehler import kaehler_fitting
from .polyring import CoefficientField, PolyRing
from .rees import (
    ChartAlgebra,
    ReesParams,
    ReesParamsError,
    chart_presentation,
    ci_chart_presentation,
    micali_kernel,
    rees_presentation,
    target_ideal,
)

Policy = Union[str, int]

POLICY_PAPER = "paper"
POLICY_CORRECTED = "corrected"


def fitting_index(params: ReesParams, policy: Policy) -> int:
    """Global Fitting index for the differentials of the Rees ring."""
    if policy == POLICY_PAPER:
        return params.n + params.s + params.l - 1
    if policy == POLICY_CORRECTED:
        return params.n + params.l - params.s + 1
    if isinstance(policy, int):
        return policy
    raise ValueError(f"unknown policy {policy!r}")


def chart_fitting_index(params: ReesParams, policy: Policy) -> int:
    """Chart index: one lower, since localizing splits off a free rank-one summand."""
    return fitting_index(params, policy) - 1


def policy_label(policy: Policy) -> str:
    if policy in (POLICY_PAPER, POLICY_CORRECTED):
        return policy
    if isinstance(policy, int):
        return "explicit"
    raise ValueError(f"unknown policy {policy!r}")


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


@dataclass(frozen=True)
class ChartCheck:
    r: int
    equal: bool
    ms: int


@dataclass
class VerificationReport:
    """One verification row.  Booleans are tri-state: None means the check was
    not requested, and does not count against the status."""

    params: ReesParams
    policy: str
    index_used: int
    charts: list[ChartCheck] = field(default_factory=list)
    micali_ok: Optional[bool] = None
    corollary_ok: Optional[bool] = None
    image_ok: Optional[bool] = None
    reason: Optional[str] = None

    @property
    def status(self) -> str:
        if self.reason is not None:
            return "skipped"
        checks = [self.micali_ok, self.corollary_ok, self.image_ok]
        if any(c is False for c in checks) or any(not c.equal for c in self.charts):
            return "fail"
        return "pass"

    def to_dict(self, include_timing: bool = True) -> dict:
        d = {
            "params": {
                "p": self.params.p,
                "n": self.params.n,
                "s": self.params.s,
                "l": self.params.l,
                "v": list(self.params.v),
            },
            "index_used": self.index_used,
            "policy": self.policy,
            "charts": [
                {"r": c.r, "equal": c.equal, "ms": c.ms if include_timing else 0}
                for c in self.charts
            ],
            "micali_ok": self.micali_ok,
            "corollary_ok": self.corollary_ok,
            "image_ok": self.image_ok,
            "status": self.status,
        }
        if self.reason is not None:
            d["reason"] = self.reason
        return d


# ---------------------------------------------------------------------------
# Theorem: the Fitting ideal and the target ideal agree in every chart localization

def check_theorem41(params: ReesParams, policy: Policy = POLICY_CORRECTED) -> VerificationReport:
    """For each r in s..n, compare the Fitting ideal of the differentials with
    the target ideal after inverting x_r^{v_r}T (the variable T_r), and check
    that the exchange binomials are the full relation kernel."""
    params.validate()
    index = fitting_index(params, policy)
    report = VerificationReport(params, policy_label(policy), index)
    algebra = rees_presentation(params)
    fitt = kaehler_fitting(algebra, index)
    target = target_ideal(params)
    for r in range(params.s, params.n + 1):
        start = time.perf_counter()
        g = algebra.ring.variable(f"T{r}")
        equal = localized_equal(fitt, target, g)
        report.charts.append(ChartCheck(r, equal, _ms(start)))
    report.micali_ok = ideal_equal(micali_kernel(params), algebra.relations)
    return report


# ---------------------------------------------------------------------------
# Corollary: chart form of the blow-up statement

def _chart_expected(params: ReesParams, chart: ChartAlgebra) -> Ideal:
    ring = chart.algebra.ring
    if chart.r <= params.l:
        return Ideal(ring, (ring.one(),))
    gens = [ring.variable(f"x{chart.r}")]
    gens.extend(ring.variable(f"U{i}") for i in range(params.s, params.l + 1))
    gens.extend(chart.algebra.relations.generators)
    return Ideal(ring, gens)


def corollary42_details(params: ReesParams, policy: Policy = POLICY_CORRECTED) -> list[ChartCheck]:
    """Per chart: the Fitting ideal of the chart algebra equals the unit ideal
    (r <= l) or (x_r, U_s..U_l) plus the chart relations (r > l)."""
    params.validate()
    index = chart_fitting_index(params, policy)
    out = []
    for r in range(params.s, params.n + 1):
        start = time.perf_counter()
        chart = chart_presentation(params, r)
        fitt = kaehler_fitting(chart.algebra, index)
        equal = ideal_equal(fitt, _chart_expected(params, chart))
        out.append(ChartCheck(r, equal, _ms(start)))
    return out


def check_corollary42(params: ReesParams, policy: Policy = POLICY_CORRECTED) -> bool:
    return all(c.equal for c in corollary42_details(params, policy))


# ---------------------------------------------------------------------------
# Schematic image of the Fitting subscheme equals the blow-up center

def image_details(params: ReesParams, policy: Policy = POLICY_CORRECTED) -> tuple[bool, list[ChartCheck]]:
    """Contract each chart Fitting ideal (r > l) down to the x-variables by
    eliminating the U block, intersect the contractions, and compare with the
    center's ideal.  Per-chart entries record containment of the center."""
    params.validate()
    index = chart_fitting_index(params, policy)
    xring = PolyRing(params.field, [f"x{i}" for i in range(1, params.n + 1)])
    center = Ideal(
        xring,
        [xring.variable(f"x{i}") ** params.exponent(i) for i in range(params.s, params.n + 1)],
    )
    details = []
    combined: Optional[Ideal] = None
    for r in range(params.l + 1, params.n + 1):
        start = time.perf_counter()
        chart = chart_presentation(params, r)
        fitt = kaehler_fitting(chart.algebra, index)
        ublock = [name for name in chart.algebra.ring.variables if name.startswith("U")]
        contraction = transport_ideal(eliminate(fitt, ublock), xring)
        combined = contraction if combined is None else ideal_intersect(combined, contraction)
        details.append(ChartCheck(r, ideal_contains(contraction, center), _ms(start)))
    ok = combined is not None and ideal_equal(combined, center)
    return ok, details


def check_image_equals_center(params: ReesParams, policy: Policy = POLICY_CORRECTED) -> bool:
    return image_details(params, policy)[0]


# ---------------------------------------------------------------------------
# Non-normality of the degree-zero localization (two p-divisible exponents)

@dataclass(frozen=True)
class NonnormalProbe:
    p: int
    chart: ChartAlgebra
    integral_witness: bool
    quotient_membership: bool
    sanity_control: bool

    @property
    def nonnormal(self) -> bool:
        return self.integral_witness and not self.quotient_membership


def nonnormality_probe(p: int, n: int, base: int, top: int) -> NonnormalProbe:
    """Chart of the blow-up of (x_base^p, x_top^{p^2}) at x_base^p T.  The
    fraction x_top^p / x_base satisfies Z^p = U (integral over the chart), yet
    x_top^p is not a multiple of x_base there, so the chart is non-normal."""
    field = CoefficientField(p)
    powers = ((base, p), (top, p * p))
    chart = ci_chart_presentation(field, n, powers, base)
    ring = chart.algebra.ring
    rel = chart.algebra.relations
    u = ring.variable(f"U{top}")
    xb = ring.variable(f"x{base}")
    xt = ring.variable(f"x{top}")
    witness = ideal_member(xt ** (p * p) - u * xb ** p, rel)
    member = ideal_member(xt ** p, Ideal(ring, [xb] + list(rel.generators)))
    sanity = ideal_member(xt ** (p * p), Ideal(ring, [xb ** p] + list(rel.generators)))
    return NonnormalProbe(p, chart, witness, member, sanity)


def check_nonnormal(p: int) -> bool:
    """The paper's four-variable example: blow up the origin-orbit ideal
    (x3^p, x4^{p^2}) in affine 4-space and probe the chart at x3^p T."""
    return nonnormality_probe(p, 4, 3, 4).nonnormal


# ---------------------------------------------------------------------------
# Grid runs

def evaluate_params(params: ReesParams, policy: Policy = POLICY_CORRECTED) -> VerificationReport:
    """Full verification row: theorem charts, relation kernel, corollary
    charts, and image = center."""
    try:
        params.validate()
    except ReesParamsError as err:
        return VerificationReport(
            params, policy_label(policy), 0, reason=str(err)
        )
    report = check_theorem41(params, policy)
    report.corollary_ok = check_corollary42(params, policy)
    report.image_ok = check_image_equals_center(params, policy)
    return report


def _evaluate_star(job: tuple[ReesParams, Policy]) -> VerificationReport:
    return evaluate_params(*job)


def run_grid(
    grid: Sequence[ReesParams],
    policy: Policy = POLICY_CORRECTED,
    workers: int = 1,
) -> list[VerificationReport]:
    """Evaluate each tuple independently; report order follows input order.
    Invalid tuples are reported as skipped, never aborting the run."""
    jobs = [(params, policy) for params in grid]
    if workers <= 1 or len(jobs) <= 1:
        return [_evaluate_star(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_evaluate_star, jobs))


def default_grid() -> list[ReesParams]:
    """The shipped verification grid, for p in {2, 3}."""
    grid = []
    for p in (2, 3):
        grid.extend(
            [
                ReesParams(p, 2, 1, 1, (p, 1)),
                ReesParams(p, 3, 1, 1, (p, 1, 1)),
                ReesParams(p, 3, 1, 2, (p, p, 1)),
                ReesParams(p, 3, 1, 2, (p, p * p, 1)),
                ReesParams(p, 4, 1, 2, (p, p, 1, 1)),
                ReesParams(p, 4, 1, 3, (p, p, p, 1)),
                ReesParams(p, 3, 2, 2, (p, 1)),
                ReesParams(p, 4, 2, 3, (p, p, 1)),
            ]
        )
    return grid
