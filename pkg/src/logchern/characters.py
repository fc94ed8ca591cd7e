"""Formal bundle characters and the logarithmic/discriminant calculus.

A :class:`BundleCharacter` is a rank (any nonzero rational is allowed --
virtual characters are first class) together with homogeneous graded
components ch_1..ch_D over some coefficient ring.  By default the
coefficients are the free symbols e1..eD, where e_k stands for ch_k of an
underlying bundle; the oracle also builds characters over Chern-root rings.

Discriminants come from the logarithm of the normalized total character:

    log(ch/ch_0) = sum_{k>0} (-1)^{k+1} Delta_k / (k ch_0^k)

and the normalized class d_k is ch_0 times the degree-k log coefficient,
i.e. d_k = (-1)^{k+1} Delta_k / (k ch_0^{k-1}).  (The sign makes
log(ch/ch_0) = sum d_k/ch_0 hold on the nose; d_1 = ch_1, d_2 = ch_2 -
ch_1^2/(2 ch_0), and so on.)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from logchern.ring import GradedPoly, PolyRing, graded_generators, rat


@lru_cache(maxsize=None)
def ch_ring(D: int, prefix: str = "e") -> PolyRing:
    """The abstract coefficient ring e1..eD with deg e_k = k."""
    return PolyRing(graded_generators(prefix, D), D)


@dataclass(frozen=True)
class BundleCharacter:
    """Rank plus graded components ch_1..ch_D (component k homogeneous of degree k)."""

    rank: Fraction
    components: tuple[GradedPoly, ...]
    ring: PolyRing

    def __post_init__(self):
        object.__setattr__(self, "rank", rat(self.rank))
        if len(self.components) != self.ring.truncation:
            raise ValueError("need one component per degree 1..D")
        for k, comp in enumerate(self.components, start=1):
            if comp.ring != self.ring:
                raise ValueError("component rings disagree")
            if not comp.is_homogeneous(k):
                raise ValueError(f"component {k} is not homogeneous of degree {k}")

    @property
    def D(self) -> int:
        return self.ring.truncation

    def ch(self, k: int) -> GradedPoly:
        """ch_k for 0 <= k <= D (ch_0 as a constant polynomial)."""
        if k == 0:
            return self.ring.scalar(self.rank)
        return self.components[k - 1]

    def total(self) -> GradedPoly:
        acc = self.ring.scalar(self.rank)
        for comp in self.components:
            acc = acc + comp
        return acc

    @classmethod
    def from_total(cls, ring: PolyRing, total: GradedPoly) -> BundleCharacter:
        if total.ring != ring:
            raise ValueError("total character lives in the wrong ring")
        comps = tuple(total.component(k) for k in range(1, ring.truncation + 1))
        return cls(total.constant(), comps, ring)

    def _check(self, other: BundleCharacter) -> None:
        if self.ring != other.ring:
            raise ValueError("mixed generator sets or truncations")

    def __add__(self, other: BundleCharacter) -> BundleCharacter:
        """Direct sum: component-wise, rank included."""
        self._check(other)
        comps = tuple(a + b for a, b in zip(self.components, other.components))
        return BundleCharacter(self.rank + other.rank, comps, self.ring)

    def __mul__(self, other):
        if isinstance(other, BundleCharacter):
            return tensor(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> BundleCharacter:
        """Q-linear scaling in the representation ring."""
        c = rat(c)
        return BundleCharacter(
            c * self.rank, tuple(comp.scale(c) for comp in self.components), self.ring
        )

    def __sub__(self, other: BundleCharacter) -> BundleCharacter:
        return self + other.scale(-1)

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        ch = {
            str(k): comp.compact()
            for k, comp in enumerate(self.components, start=1)
            if not comp.is_zero()
        }
        return {"rank": str(self.rank), "D": self.D, "ch": ch}

    @classmethod
    def from_json_dict(cls, data: dict) -> BundleCharacter:
        ring = ch_ring(int(data["D"]))
        comps = []
        for k in range(1, ring.truncation + 1):
            text = data.get("ch", {}).get(str(k))
            comps.append(ring.parse(text) if text else ring.zero())
        return cls(Fraction(data["rank"]), tuple(comps), ring)


def base_bundle(rank, D: int) -> BundleCharacter:
    """The generic bundle E: ch_k is the free symbol e_k."""
    ring = ch_ring(D)
    comps = tuple(ring.gen(f"e{k}") for k in range(1, D + 1))
    return BundleCharacter(rat(rank), comps, ring)


def trivial_character(rank, ring: PolyRing) -> BundleCharacter:
    comps = tuple(ring.zero() for _ in range(ring.truncation))
    return BundleCharacter(rat(rank), comps, ring)


def tensor(a: BundleCharacter, b: BundleCharacter) -> BundleCharacter:
    """Product character: graded pieces of total(a)*total(b)."""
    a._check(b)
    return BundleCharacter.from_total(a.ring, a.total() * b.total())


def power_sum_character(d: int, rank, D: int) -> BundleCharacter:
    """Virtual character with ch_k = d^k * e_k and the given rank."""
    ring = ch_ring(D)
    comps = tuple(ring.gen(f"e{k}").scale(d**k) for k in range(1, D + 1))
    return BundleCharacter(rat(rank), comps, ring)


def log_character(a: BundleCharacter) -> GradedPoly:
    """log(ch/ch_0); degree-k coefficient is d_k/ch_0."""
    if a.rank == 0:
        raise ZeroDivisionError("log character needs nonzero rank")
    return (a.total() / a.rank).log()


def d_k(a: BundleCharacter, k: int) -> GradedPoly:
    """Normalized discriminant d_k = (-1)^(k+1) Delta_k / (k ch_0^(k-1))."""
    if not 1 <= k <= a.D:
        raise ValueError(f"k must lie in 1..{a.D}")
    return log_character(a).component(k).scale(a.rank)


def delta_k(a: BundleCharacter, k: int) -> GradedPoly:
    """Discriminant Delta_k extracted from the logarithmic character."""
    sign = Fraction((-1) ** (k + 1))
    return d_k(a, k).scale(sign * k * a.rank ** (k - 1))


def discriminants(a: BundleCharacter, up_to: int) -> tuple[GradedPoly, ...]:
    """Delta_1..Delta_up_to."""
    if not 1 <= up_to <= a.D:
        raise ValueError(f"up_to must lie in 1..{a.D}")
    if a.rank == 0:
        raise ZeroDivisionError("discriminants need nonzero rank")
    log = log_character(a)
    out = []
    for k in range(1, up_to + 1):
        sign = Fraction((-1) ** (k + 1))
        out.append(log.component(k).scale(sign * k * a.rank**k))
    return tuple(out)


DiscriminantVector = tuple[GradedPoly, ...]


def delta_explicit(a: BundleCharacter, k: int) -> GradedPoly:
    """Delta_k from its explicit expansion in ch_0..ch_k (k <= 5).

    Kept separate from the log extraction so the two can cross-check each
    other; any disagreement is a bug in one of them.
    """
    r = a.ring.scalar(a.rank)
    c = a.ch
    if k == 1:
        return c(1)
    if k == 2:
        return c(1) * c(1) - 2 * r * c(2)
    if k == 3:
        return c(1) ** 3 - 3 * r * c(1) * c(2) + 3 * r**2 * c(3)
    if k == 4:
        return (
            c(1) ** 4
            - 4 * r * c(1) ** 2 * c(2)
            + 2 * r**2 * (c(2) ** 2 + 2 * c(1) * c(3))
            - 4 * r**3 * c(4)
        )
    if k == 5:
        return (
            c(1) ** 5
            - 5 * r * c(1) ** 3 * c(2)
            + 5 * r**2 * c(1) * (c(2) ** 2 + c(1) * c(3))
            - 5 * r**3 * (c(2) * c(3) + c(1) * c(4))
            + 5 * r**4 * c(5)
        )
    raise ValueError("explicit expansions cover k <= 5 only")


def delta4t(a: BundleCharacter, t) -> GradedPoly:
    """The degree-4 class with parameter t tuned for symmetric powers.

    Delta_{4,t} = t ch1^4 - 4t ch0 ch1^2 ch2
                  + 2 ch0^2 ((t+1) ch2^2 + 2(t-1) ch1 ch3)
                  - 4(t-1) ch0^3 ch4.
    """
    if a.D < 4:
        raise ValueError("need D >= 4")
    t = rat(t)
    r = a.ring.scalar(a.rank)
    c = a.ch
    return (
        c(1) ** 4 * t
        - 4 * t * r * c(1) ** 2 * c(2)
        + 2 * r**2 * (c(2) ** 2 * (t + 1) + 2 * (t - 1) * c(1) * c(3))
        - 4 * (t - 1) * r**3 * c(4)
    )


def modified_delta(a: BundleCharacter, k: int) -> GradedPoly:
    """The rank-sensitive modifications that vanish for rank < k.

    k=4: (r+1) Delta_4 - Delta_2^2;  k=5: (r+5) Delta_5 - 5 Delta_2 Delta_3.
    """
    if k not in (4, 5):
        raise ValueError("modified classes exist for k in {4, 5}")
    if a.D < k:
        raise ValueError(f"need D >= {k}")
    r = a.rank
    if r.denominator != 1 or r <= 0:
        raise ValueError("modified classes need a positive integer rank")
    ds = discriminants(a, k)
    if k == 4:
        return ds[3].scale(r + 1) - ds[1] * ds[1]
    return ds[4].scale(r + 5) - 5 * ds[1] * ds[2]


# -- Chern class conversion --------------------------------------------------


@dataclass(frozen=True)
class ChernClassVector:
    classes: tuple[GradedPoly, ...]  # c_1..c_D

    def c(self, i: int) -> GradedPoly:
        return self.classes[i - 1]


def chern_classes(a: BundleCharacter) -> ChernClassVector:
    """Chern classes from the character via Newton's identities.

    With p_k = k! ch_k:  c_k = (-1)^(k+1)/k * (p_k - c_1 p_{k-1} + ...
    + (-1)^(k-1) c_{k-1} p_1).
    """
    D = a.D
    p = [None] + [a.ch(k).scale(factorial(k)) for k in range(1, D + 1)]
    cs: list[GradedPoly] = []
    for k in range(1, D + 1):
        acc = p[k]
        for i in range(1, k):
            acc = acc + cs[i - 1] * p[k - i] * Fraction((-1) ** i)
        cs.append(acc.scale(Fraction((-1) ** (k + 1), k)))
    return ChernClassVector(tuple(cs))


def from_chern_classes(rank: int, classes, D: int, ring: PolyRing | None = None) -> BundleCharacter:
    """Character of a rank-r bundle with the given c_1..c_min(r,D).

    Classes beyond index r are forced to zero (a rank-r bundle has none),
    which pins down every ch_k through degree D.
    """
    if not (isinstance(rank, int) or (isinstance(rank, Fraction) and rank.denominator == 1)):
        raise ValueError("rank must be a positive integer")
    r = int(rank)
    if r <= 0:
        raise ValueError("rank must be a positive integer")
    classes = list(classes)
    if ring is None:
        if not classes:
            raise ValueError("need a ring or at least one class")
        ring = classes[0].ring
    zero = ring.zero()

    def c(i: int) -> GradedPoly:
        if i < 1 or i > min(r, len(classes)):
            return zero
        return classes[i - 1]

    p = [zero] * (D + 1)
    comps = []
    for k in range(1, D + 1):
        acc = c(k).scale(Fraction((-1) ** (k - 1) * k))
        for i in range(1, k):
            acc = acc + c(i) * p[k - i] * Fraction((-1) ** (i - 1))
        p[k] = acc
        comps.append(acc / factorial(k))
    return BundleCharacter(Fraction(r), tuple(comps), ring)
