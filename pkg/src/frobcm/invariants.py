"""Asymptotic invariants and their finite-q estimates.

The limits (F-signature, Hilbert-Kunz multiplicity, Frobenius Betti numbers)
are exact rationals.  Each closed form is recomputed internally from the
asymptotic class densities times the catalog Betti numbers; the two
derivations must agree exactly.  Finite-q estimates divide decomposition
data by q**dim and converge to the limits inside explicit 4/q envelopes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import mcm, pushforward
from .rings import SCROLL, SCROLL21, FrobeniusContext, RingFamily, context_from_q


def _check(condition: bool, message: str) -> None:
    if not condition:
        raise RuntimeError(message)


def _closed_fbetti(family: RingFamily, i: int) -> Fraction:
    if family.kind == SCROLL:
        d = family.delta
        return Fraction(d * (d - 1) ** i, 2)
    if family.kind == SCROLL21:
        return Fraction(9 * 2 ** (i - 1), 4)
    return Fraction(4 * 3 ** (i - 1))


def _class_densities(family: RingFamily) -> dict[str, Fraction]:
    """Limiting density multiplicity(class)/q**dim of each summand class."""
    if family.kind == SCROLL:
        d = family.delta
        return {f"M({l})": Fraction(1, d) for l in range(d)}
    if family.kind == SCROLL21:
        return {"R": Fraction(5, 12), "A": Fraction(5, 12), "BorC": Fraction(1, 6)}
    return {"R": Fraction(1, 2), "A": Fraction(1, 2)}


@dataclass(frozen=True)
class InvariantReport:
    family: RingFamily
    s: Fraction
    ehk: Fraction
    finite_q_samples: tuple = ()

    def fbetti(self, i: int) -> Fraction:
        """i-th Frobenius Betti number; i = 0 is the Hilbert-Kunz multiplicity."""
        if i < 0:
            raise ValueError("index must be nonnegative")
        if i == 0:
            return self.ehk
        value = _closed_fbetti(self.family, i)
        densities = _class_densities(self.family)
        from_densities = sum(
            (
                density * mcm.class_by_tag(self.family, tag).betti(i)
                for tag, density in densities.items()
            ),
            Fraction(0),
        )
        _check(
            value == from_densities,
            f"Betti limit mismatch for {self.family.label} at i={i}: "
            f"closed form {value}, density sum {from_densities}",
        )
        return value


def limits(family: RingFamily) -> InvariantReport:
    """Closed-form limits, cross-checked against the density derivation."""
    if family.kind == SCROLL:
        d = family.delta
        s, ehk = Fraction(1, d), Fraction(d + 1, 2)
    elif family.kind == SCROLL21:
        s, ehk = Fraction(5, 12), Fraction(7, 4)
    else:
        s, ehk = Fraction(1, 2), Fraction(2)
    densities = _class_densities(family)
    free_tag = "M(0)" if family.kind == SCROLL else "R"
    _check(densities[free_tag] == s, f"free density is not s for {family.label}")
    ehk_from_densities = sum(
        (
            density * mcm.class_by_tag(family, tag).mu
            for tag, density in densities.items()
        ),
        Fraction(0),
    )
    _check(
        ehk_from_densities == ehk,
        f"Hilbert-Kunz mismatch for {family.label}: {ehk_from_densities} vs {ehk}",
    )
    return InvariantReport(family, s, ehk)


def fbetti_pushforward(
    family: RingFamily,
    ctx: FrobeniusContext,
    i: int,
    route: str | None = None,
) -> int:
    """Exact i-th Betti number of the q-th root module, via the decomposition."""
    dec = pushforward.decompose(family, ctx, route)
    return sum(
        count * mcm.class_by_tag(family, tag).betti(i)
        for tag, count in dec.multiplicities
    )


@dataclass(frozen=True)
class FiniteQEstimates:
    family: RingFamily
    ctx: FrobeniusContext
    decomposition: pushforward.Decomposition
    s_est: Fraction
    ehk_est: Fraction
    canonical_est: Fraction | None  # canonical-class density, where tracked

    def fbetti_est(self, i: int) -> Fraction:
        total = sum(
            count * mcm.class_by_tag(self.family, tag).betti(i)
            for tag, count in self.decomposition.multiplicities
        )
        return Fraction(total, self.ctx.q ** self.family.krull_dim)


def finite_q_estimates(
    family: RingFamily, ctx: FrobeniusContext, route: str | None = None
) -> FiniteQEstimates:
    dec = pushforward.decompose(family, ctx, route)
    scale = ctx.q ** family.krull_dim
    s_est = Fraction(dec.free_multiplicity, scale)
    ehk_est = Fraction(dec.total_min_generators(), scale)
    canonical = None
    if family.kind != SCROLL:
        canonical = Fraction(dec.mult("A"), scale)
    return FiniteQEstimates(family, ctx, dec, s_est, ehk_est, canonical)


@dataclass(frozen=True)
class ConvergenceCheck:
    q: int
    name: str
    estimate: Fraction
    limit: Fraction
    bound: Fraction
    ok: bool

    @property
    def gap(self) -> Fraction:
        return abs(self.estimate - self.limit)

    def describe(self) -> str:
        status = "ok" if self.ok else "FAIL"
        return (
            f"[{status}] q={self.q} {self.name}: estimate {self.estimate} vs "
            f"limit {self.limit}, gap {self.gap} <= {self.bound}"
        )


@dataclass(frozen=True)
class ConvergenceReport:
    family: RingFamily
    limits: InvariantReport
    checks: tuple[ConvergenceCheck, ...]
    samples: tuple[FiniteQEstimates, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[ConvergenceCheck]:
        return [c for c in self.checks if not c.ok]


def convergence_check(
    family: RingFamily, q_list: list[int], max_betti: int = 4
) -> ConvergenceReport:
    """Verify the 4/q convergence envelopes at each q.

    The envelopes are deliberately generous fixed bounds: the scroll free
    class error is at most 1/q by per-residue congruence counting, the
    veronese2 error is exactly 1/(2 q^3), and the scroll21 errors come from
    O(q^2) boundary layers.  For i >= 1 the Betti envelope scales the 4/q
    bound by the growth ratio of the limits.  Failing any bound is reported,
    not raised.
    """
    lim = limits(family)
    checks: list[ConvergenceCheck] = []
    samples = []
    for q in q_list:
        ctx = context_from_q(q)
        family.validate_context(ctx)
        est = finite_q_estimates(family, ctx)
        samples.append(est)
        envelope = Fraction(4, q)

        def add(name: str, value: Fraction, target: Fraction, bound: Fraction):
            checks.append(
                ConvergenceCheck(q, name, value, target, bound, abs(value - target) <= bound)
            )

        add("s", est.s_est, lim.s, envelope)
        add("ehk", est.ehk_est, lim.ehk, envelope)
        for i in range(1, max_betti + 1):
            ratio = lim.fbetti(i) / lim.fbetti(1)
            add(f"fbetti_{i}", est.fbetti_est(i), lim.fbetti(i), envelope * ratio)
        if family.kind != SCROLL:
            # free and canonical multiplicities share the same limit
            witness = abs(
                Fraction(
                    est.decomposition.free_multiplicity
                    - est.decomposition.mult("A"),
                    q ** family.krull_dim,
                )
            )
            add("free_vs_canonical", witness, Fraction(0), envelope)
    report_limits = InvariantReport(family, lim.s, lim.ehk, tuple(samples))
    return ConvergenceReport(family, report_limits, tuple(checks), tuple(samples))
