"""Catalog of indecomposable maximal Cohen-Macaulay modules per ring family.

For each family the catalog fixes minimal generator counts, ranks, Betti
number closed forms together with the recurrences that pin them down, and
the graded Hilbert series where one is available.

Tags follow the conventional letters: "M(l)" for the scroll modules (with
"M(0)" the free class), and "R", "A", "B", "C", "D" for the three-dimensional
families.  "BorC" is a deliberate merged tag: B and C share mu, rank, and the
whole Betti sequence, and nothing downstream ever distinguishes them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import HilbertSeries, Polynomial
from .rings import SCROLL, SCROLL21, VERONESE2, RingFamily


class UnsupportedClassError(ValueError):
    """Raised for catalog data the class genuinely does not carry."""


@dataclass(frozen=True)
class SummandClass:
    family: RingFamily
    tag: str
    mu: int
    rank: int
    index: int | None = None  # l for scroll classes

    @property
    def is_free(self) -> bool:
        return self.tag == "R" or self.tag == "M(0)"

    def betti(self, i: int) -> int:
        """i-th Betti number from the closed forms."""
        if i < 0:
            raise ValueError("Betti index must be nonnegative")
        if i == 0:
            return self.mu
        kind = self.family.kind
        if kind == SCROLL:
            d = self.family.delta
            return d * (d - 1) ** (i - 1) * self.index
        if kind == SCROLL21:
            if self.tag == "R":
                return 0
            if self.tag == "A":
                return 3 * 2 ** (i - 1)
            if self.tag == "D":
                return 3 * 2 ** (i + 1)
            return 3 * 2 ** i  # B, C, BorC
        if self.tag == "R":
            return 0
        if self.tag == "A":
            return 8 * 3 ** (i - 1)
        return 8 * 3 ** i  # B

    def __str__(self) -> str:
        return f"{self.family.label}:{self.tag}"


def catalog(family: RingFamily) -> tuple[SummandClass, ...]:
    """All indecomposable MCM classes of the family, in reporting order."""
    if family.kind == SCROLL:
        return tuple(
            SummandClass(family, f"M({l})", l + 1, 1, index=l)
            for l in range(family.delta)
        )
    if family.kind == SCROLL21:
        return (
            SummandClass(family, "R", 1, 1),
            SummandClass(family, "A", 2, 1),
            SummandClass(family, "B", 3, 1),
            SummandClass(family, "C", 3, 1),
            SummandClass(family, "BorC", 3, 1),
            SummandClass(family, "D", 6, 2),
        )
    return (
        SummandClass(family, "R", 1, 1),
        SummandClass(family, "A", 3, 1),
        SummandClass(family, "B", 8, 2),
    )


def class_by_tag(family: RingFamily, tag: str) -> SummandClass:
    for cls in catalog(family):
        if cls.tag == tag:
            return cls
    raise UnsupportedClassError(f"{family.label} has no class tagged {tag!r}")


def free_class(family: RingFamily) -> SummandClass:
    return catalog(family)[0]


def class_tag_for_mu(family: RingFamily, mu: int) -> str:
    """Classify a rank-one residue class by its minimal generator count.

    Valid because the rank-one indecomposables of each family have pairwise
    distinct mu: scroll M(l) has mu = l + 1; scroll21 has 1, 2, 3 with B and C
    merged; veronese2 has 1 and 3.
    """
    if family.kind == SCROLL:
        if 1 <= mu <= family.delta:
            return f"M({mu - 1})"
    elif family.kind == SCROLL21:
        if mu in (1, 2, 3):
            return {1: "R", 2: "A", 3: "BorC"}[mu]
    else:
        if mu in (1, 3):
            return {1: "R", 3: "A"}[mu]
    raise ValueError(f"no rank-one class of {family.label} has mu = {mu}")


def recurrence_residuals(family: RingFamily, i: int) -> list[int]:
    """Evaluate every Betti recurrence of the family at index i.

    Each recurrence is applied only on its range of validity; all residuals
    must vanish when the closed forms are correct.
    """
    if i < 0:
        raise ValueError("index must be nonnegative")
    out: list[int] = []
    if family.kind == SCROLL:
        d = family.delta
        top = class_by_tag(family, f"M({d - 1})")
        for l in range(1, d):
            cls = class_by_tag(family, f"M({l})")
            out.append(cls.betti(i + 1) - l * top.betti(i))
        return out
    if family.kind == SCROLL21:
        a = class_by_tag(family, "A")
        b = class_by_tag(family, "B")
        c = class_by_tag(family, "C")
        dd = class_by_tag(family, "D")
        out.append(b.betti(i + 1) - dd.betti(i))
        out.append(a.betti(i + 1) - b.betti(i))
        if i >= 1:
            out.append(2 * a.betti(i) - c.betti(i))
            out.append(2 * a.betti(i) + b.betti(i) - dd.betti(i))
        return out
    a = class_by_tag(family, "A")
    b = class_by_tag(family, "B")
    out.append(a.betti(i + 1) - b.betti(i))
    if i == 1:
        out.append(3 * a.betti(1) - b.betti(1) + 1 - 3 * a.betti(0) + b.betti(0))
    if i >= 2:
        out.append(3 * a.betti(i) - b.betti(i))
    return out


def module_hilbert_series(cls: SummandClass) -> HilbertSeries:
    """Graded Hilbert series of the class, where the catalog records one.

    Scroll classes keep the ambient polynomial grading, so their series live
    over (1 - t^delta)^2; the veronese2 series live over (1 - t)^3.  The
    scroll21 classes carry no recorded series and raise.
    """
    family = cls.family
    if family.kind == SCROLL:
        d = family.delta
        l = cls.index
        # sum_{k>=0} (k d + l + 1) t^(k d + l) in closed form
        num = Polynomial.monomial(l + 1, l) + Polynomial.monomial(d - 1 - l, l + d)
        return HilbertSeries(num, 2, base=d)
    if family.kind == VERONESE2:
        if cls.tag == "R":
            return HilbertSeries(Polynomial((1, 3)), 3)
        if cls.tag == "A":
            return HilbertSeries(Polynomial((0, 0, 3, 1)), 3)
        if cls.tag == "B":
            return HilbertSeries(Polynomial((0, 0, 0, 8)), 3)
    raise UnsupportedClassError(
        f"no Hilbert series recorded for {cls}; the scroll21 classes do not "
        "carry one"
    )


@dataclass(frozen=True)
class ScrollSyzygy:
    """One first-syzygy generator x^a e_m - x^b e_(m+1), with 1-based m."""

    plus_monomial: tuple[int, int]
    plus_basis: int
    minus_monomial: tuple[int, int]
    minus_basis: int


def scroll_syzygy_generators(delta: int, l: int) -> tuple[ScrollSyzygy, ...]:
    """The delta*l generators of the first syzygy of the scroll module M(l).

    Basis element e_m of the covering free module maps to x^(l-m+1) y^(m-1);
    the listed elements are x^(delta-k) y^k e_m - x^(delta-k+1) y^(k-1) e_(m+1)
    for 1 <= k <= delta and 1 <= m <= l.
    """
    if delta < 2:
        raise ValueError("delta must be at least 2")
    if not 1 <= l <= delta - 1:
        raise ValueError(
            f"l must satisfy 1 <= l <= delta-1 (M(0) is free), got l={l}"
        )
    out = []
    for m in range(1, l + 1):
        for k in range(1, delta + 1):
            out.append(
                ScrollSyzygy((delta - k, k), m, (delta - k + 1, k - 1), m + 1)
            )
    return tuple(out)
