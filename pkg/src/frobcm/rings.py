"""The three graded semigroup rings of finite Cohen-Macaulay type.

Each ring is represented by a monomial membership predicate plus its list of
algebra generators, written as exponent vectors (plain integer tuples):

* ``scroll(delta)``: subalgebra of k[x, y] spanned by monomials whose total
  degree is a multiple of delta; generators x^delta, x^(delta-1) y, ..., y^delta.
* ``scroll21()``: k[x^2, xy, y^2, xz, yz]; a monomial x^i y^j z^k lies in it
  exactly when i + j >= k and i + j + k is even.
* ``veronese2()``: k[x^2, y^2, z^2, xy, xz, yz]; membership is "total degree
  even".  Needs odd characteristic.

Frobenius contexts bundle a prime p and an exponent e with q = p^e.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

SCROLL = "scroll"
SCROLL21 = "scroll21"
VERONESE2 = "veronese2"

_KINDS = (SCROLL, SCROLL21, VERONESE2)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FrobeniusContext:
    """A Frobenius power level q = p^e.  e = 0 (q = 1) is the identity case."""

    p: int
    e: int

    alpha_convention = 0  # all limits are normalized by q**krull_dim

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.e < 0:
            raise ValueError(f"e must be nonnegative, got {self.e}")

    @property
    def q(self) -> int:
        return self.p ** self.e

    def __str__(self) -> str:
        return f"q={self.q} (p={self.p}, e={self.e})"


def context_from_q(q: int) -> FrobeniusContext:
    """Factor a prime power q into its FrobeniusContext."""
    if q < 2:
        raise ValueError(f"q must be a prime power >= 2, got {q}")
    p = 2
    while q % p != 0:
        p += 1
    e = 0
    rest = q
    while rest % p == 0:
        rest //= p
        e += 1
    if rest != 1:
        raise ValueError(f"{q} is not a prime power")
    return FrobeniusContext(p, e)


@dataclass(frozen=True)
class RingFamily:
    kind: str
    delta: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == SCROLL:
            if not isinstance(self.delta, int) or self.delta < 2:
                raise ValueError(
                    "scroll rings need delta >= 2 (delta = 1 is the polynomial ring)"
                )
        elif self.delta is not None:
            raise ValueError(f"{self.kind} does not take a delta parameter")

    @property
    def ambient_vars(self) -> int:
        return 2 if self.kind == SCROLL else 3

    @property
    def krull_dim(self) -> int:
        """The d used in every q**d normalization."""
        return 2 if self.kind == SCROLL else 3

    @property
    def torsion_index(self) -> int:
        return self.delta if self.kind == SCROLL else 2

    @property
    def label(self) -> str:
        return f"scroll:{self.delta}" if self.kind == SCROLL else self.kind

    def generators(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vectors of the algebra generators."""
        if self.kind == SCROLL:
            d = self.delta
            return tuple((d - k, k) for k in range(d + 1))
        if self.kind == SCROLL21:
            return ((2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1))
        return ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))

    def contains(self, vec: tuple[int, ...]) -> bool:
        """True when the monomial with these exponents lies in the ring.

        Vectors with a negative coordinate are not monomials and yield False.
        """
        if len(vec) != self.ambient_vars:
            raise ValueError(
                f"{self.label} expects {self.ambient_vars} exponents, got {len(vec)}"
            )
        if min(vec) < 0:
            return False
        if self.kind == SCROLL:
            return (vec[0] + vec[1]) % self.delta == 0
        i, j, k = vec
        if (i + j + k) % 2 != 0:
            return False
        return True if self.kind == VERONESE2 else i + j >= k

    def frobenius_power_contains(self, vec: tuple[int, ...], ctx: FrobeniusContext) -> bool:
        """Membership in the Frobenius power of the maximal ideal.

        A ring monomial lies in m^[q] exactly when subtracting q times some
        algebra generator leaves a ring monomial; the finite search over
        generators decides it.
        """
        if not self.contains(vec):
            raise ValueError(f"{vec} is not a monomial of {self.label}")
        q = ctx.q
        for g in self.generators():
            diff = tuple(a - q * b for a, b in zip(vec, g))
            if min(diff) >= 0 and self.contains(diff):
                return True
        return False

    def validate_context(self, ctx: FrobeniusContext) -> None:
        """Reject characteristic/family combinations that have no theory."""
        if self.kind == VERONESE2 and ctx.p == 2:
            raise ValueError(
                "veronese2 needs odd characteristic: in characteristic two the "
                "ring is not the invariant ring of a sign action"
            )

    def coprime_torsion(self, ctx: FrobeniusContext) -> bool:
        return gcd(ctx.p, self.torsion_index) == 1

    def __str__(self) -> str:
        return self.label


def scroll(delta: int) -> RingFamily:
    return RingFamily(SCROLL, delta)


def scroll21() -> RingFamily:
    return RingFamily(SCROLL21)


def veronese2() -> RingFamily:
    return RingFamily(VERONESE2)


def parse_ring(text: str) -> RingFamily:
    """Parse "scroll:<delta>", "scroll21", or "veronese2"."""
    text = text.strip()
    if text == SCROLL21:
        return scroll21()
    if text == VERONESE2:
        return veronese2()
    if text.startswith("scroll:"):
        tail = text.split(":", 1)[1]
        try:
            delta = int(tail)
        except ValueError:
            raise ValueError(f"bad scroll parameter {tail!r}") from None
        return scroll(delta)
    raise ValueError(
        f"unknown ring {text!r}; expected scroll:<delta>, scroll21, or veronese2"
    )
