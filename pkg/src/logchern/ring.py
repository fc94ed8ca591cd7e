"""Truncated graded-commutative polynomial algebra over exact rationals.

Everything downstream computes in rings of this shape: a finite list of named
generators, each with a positive integer degree, and a global truncation
bound ``D`` above which all terms are discarded.  Coefficients are
``fractions.Fraction`` throughout -- there is no floating point anywhere.

Values are immutable after construction and all operations are pure, so
polynomials can be shared freely between threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

Rational = Fraction

_NUM_RE = re.compile(r"\d+(?:/\d+)?")
_GEN_RE = re.compile(r"([A-Za-z_]\w*?)(?:\^(\d+))?$")
_TERM_RE = re.compile(r"[+-]?[^+-]+")


def rat(x) -> Fraction:
    """Coerce an int, Fraction or ``num/den`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Generator(NamedTuple):
    name: str
    degree: int


class GeneratorSet:
    """Ordered list of named generators with positive integer degrees."""

    def __init__(self, gens: Iterable[Generator | tuple[str, int]]):
        gens = tuple(Generator(n, d) for n, d in gens)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for g in gens:
            if g.degree < 1:
                raise ValueError(f"generator {g.name} must have degree >= 1")
        self.gens = gens
        self.names = tuple(names)
        self.degrees = tuple(g.degree for g in gens)
        self._index = {n: i for i, n in enumerate(names)}

    def __len__(self) -> int:
        return len(self.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, GeneratorSet) and self.gens == other.gens

    def __hash__(self) -> int:
        return hash(self.gens)

    def __repr__(self) -> str:
        return "GeneratorSet(%s)" % ", ".join(
            f"{g.name}:{g.degree}" for g in self.gens
        )

    def index(self, name: str) -> int:
        return self._index[name]


def root_generators(r: int, name: str = "a") -> GeneratorSet:
    """r degree-1 generators a1..ar (Chern roots)."""
    return GeneratorSet((f"{name}{i}", 1) for i in range(1, r + 1))


def graded_generators(prefix: str, count: int) -> GeneratorSet:
    """Generators prefix1..prefixN where prefixK has degree K."""
    return GeneratorSet((f"{prefix}{k}", k) for k in range(1, count + 1))


class PolyRing:
    """A generator set together with a global truncation degree.

    The default bound of 5 is the highest degree any implemented class needs
    (the modified degree-5 discriminant).
    """

    def __init__(self, gens: GeneratorSet, truncation: int = 5):
        if truncation < 1:
            raise ValueError("truncation must be >= 1")
        self.gens = gens
        self.truncation = truncation
        self._zero_exp = (0,) * len(gens)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.gens == other.gens
            and self.truncation == other.truncation
        )

    def __hash__(self) -> int:
        return hash((self.gens, self.truncation))

    def __repr__(self) -> str:
        return f"PolyRing({self.gens!r}, D={self.truncation})"

    def wdeg(self, exps: tuple[int, ...]) -> int:
        degs = self.gens.degrees
        return sum(e * d for e, d in zip(exps, degs))

    def zero(self) -> GradedPoly:
        return GradedPoly(self, {})

    def one(self) -> GradedPoly:
        return self.scalar(1)

    def scalar(self, c) -> GradedPoly:
        c = rat(c)
        return GradedPoly(self, {self._zero_exp: c} if c else {})

    def gen(self, name: str) -> GradedPoly:
        i = self.gens.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.gens)))
        return self.monomial(exps)

    def monomial(self, exps: Iterable[int], coeff=1) -> GradedPoly:
        exps = tuple(exps)
        if len(exps) != len(self.gens) or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent vector {exps}")
        if self.wdeg(exps) > self.truncation:
            raise ValueError("monomial exceeds the truncation degree")
        c = rat(coeff)
        return GradedPoly(self, {exps: c} if c else {})

    def from_terms(self, terms: Mapping[tuple[int, ...], Fraction]) -> GradedPoly:
        out = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            c = rat(c)
            if not c:
                continue
            if len(exps) != len(self.gens) or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            if self.wdeg(exps) > self.truncation:
                raise ValueError("term exceeds the truncation degree")
            out[exps] = c
        return GradedPoly(self, out)

    def restrict(self, truncation: int) -> PolyRing:
        return PolyRing(self.gens, truncation)

    def parse(self, text: str) -> GradedPoly:
        """Parse the canonical text form (spaces optional)."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return self.zero()
        terms: dict[tuple[int, ...], Fraction] = {}
        consumed = 0
        for m in _TERM_RE.finditer(s):
            consumed += len(m.group(0))
            piece = m.group(0)
            sign = -1 if piece.startswith("-") else 1
            piece = piece.lstrip("+-")
            coeff = Fraction(sign)
            exps = [0] * len(self.gens)
            for factor in piece.split("*"):
                if _NUM_RE.fullmatch(factor):
                    coeff *= Fraction(factor)
                    continue
                gm = _GEN_RE.fullmatch(factor)
                if not gm or gm.group(1) not in self.gens._index:
                    raise ValueError(f"cannot parse term factor {factor!r}")
                e = int(gm.group(2)) if gm.group(2) else 1
                exps[self.gens.index(gm.group(1))] += e
            key = tuple(exps)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        if consumed != len(s):
            raise ValueError(f"cannot parse polynomial {text!r}")
        return self.from_terms(terms)


class GradedPoly:
    """Element of a PolyRing: exponent-vector -> nonzero Fraction map.

    Invariants: no stored term has weighted degree above the ring truncation
    and no stored coefficient is zero.  Instances are never mutated.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict[tuple[int, ...], Fraction]):
        self.ring = ring
        self.terms = terms

    # -- ring operations ---------------------------------------------------

    def _check(self, other: GradedPoly) -> None:
        if self.ring != other.ring:
            raise ValueError("mixed generator sets or truncations")

    def __add__(self, other: GradedPoly) -> GradedPoly:
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps)
            if s is None:
                out[exps] = c
            else:
                s = s + c
                if s:
                    out[exps] = s
                else:
                    del out[exps]
        return GradedPoly(self.ring, out)

    def __neg__(self) -> GradedPoly:
        return GradedPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: GradedPoly) -> GradedPoly:
        return self + (-other)

    def __mul__(self, other) -> GradedPoly:
        if not isinstance(other, GradedPoly):
            return self.scale(other)
        self._check(other)
        D = self.ring.truncation
        wdeg = self.ring.wdeg
        a = sorted(((wdeg(e), e, c) for e, c in self.terms.items()))
        b = sorted(((wdeg(e), e, c) for e, c in other.terms.items()))
        out: dict[tuple[int, ...], Fraction] = {}
        for da, ea, ca in a:
            limit = D - da
            if b and b[0][0] > limit:
                break
            for db, eb, cb in b:
                if db > limit:
                    break
                key = tuple(x + y for x, y in zip(ea, eb))
                c = ca * cb
                s = out.get(key)
                if s is None:
                    out[key] = c
                else:
                    s = s + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return GradedPoly(self.ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> GradedPoly:
        c = rat(c)
        if not c:
            return self.ring.zero()
        return GradedPoly(self.ring, {e: c * v for e, v in self.terms.items()})

    def __truediv__(self, c) -> GradedPoly:
        return self.scale(Fraction(1) / rat(c))

    def __pow__(self, n: int) -> GradedPoly:
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPoly)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- structure ---------------------------------------------------------

    def constant(self) -> Fraction:
        return self.terms.get(self.ring._zero_exp, Fraction(0))

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def component(self, k: int) -> GradedPoly:
        """Homogeneous part of weighted degree k."""
        wdeg = self.ring.wdeg
        return GradedPoly(
            self.ring, {e: c for e, c in self.terms.items() if wdeg(e) == k}
        )

    def top_degree(self) -> int:
        wdeg = self.ring.wdeg
        return max((wdeg(e) for e in self.terms), default=0)

    def is_homogeneous(self, k: int) -> bool:
        wdeg = self.ring.wdeg
        return all(wdeg(e) == k for e in self.terms)

    def truncate(self, truncation: int) -> GradedPoly:
        """Image in the same generators with a lower truncation bound."""
        target = self.ring.restrict(truncation)
        wdeg = self.ring.wdeg
        return GradedPoly(
            target, {e: c for e, c in self.terms.items() if wdeg(e) <= truncation}
        )

    def substitute(
        self, target: PolyRing, images: Mapping[str, GradedPoly]
    ) -> GradedPoly:
        """Evaluate by sending each generator to the given target-ring value.

        Every generator that actually occurs must have an image; images must
        live in ``target``.
        """
        for img in images.values():
            if img.ring != target:
                raise ValueError("substitution images live in the wrong ring")
        powers: dict[int, list[GradedPoly]] = {}
        names = self.ring.gens.names
        result = target.zero()
        for exps, c in self.terms.items():
            term = target.scalar(c)
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                if names[i] not in images:
                    raise ValueError(f"no image for generator {names[i]}")
                cache = powers.setdefault(i, [target.one()])
                while len(cache) <= e:
                    cache.append(cache[-1] * images[names[i]])
                term = term * cache[e]
            result = result + term
        return result

    # -- analytic series ---------------------------------------------------

    def exp(self) -> GradedPoly:
        """Truncated exponential; requires a zero constant term."""
        if self.constant():
            raise ValueError("exp needs a zero constant term")
        result = self.ring.one()
        power = self.ring.one()
        fact = 1
        for j in range(1, self.ring.truncation + 1):
            power = power * self
            if power.is_zero():
                break
            fact *= j
            result = result + power / fact
        return result

    def log(self) -> GradedPoly:
        """Truncated logarithm; requires constant term 1."""
        if self.constant() != 1:
            raise ValueError("log needs constant term 1")
        q = self - self.ring.one()
        result = self.ring.zero()
        power = self.ring.one()
        for j in range(1, self.ring.truncation + 1):
            power = power * q
            if power.is_zero():
                break
            result = result + power.scale(Fraction((-1) ** (j + 1), j))
        return result

    # -- canonical form ----------------------------------------------------

    def _sorted_terms(self):
        wdeg = self.ring.wdeg
        return sorted(
            self.terms.items(), key=lambda it: (wdeg(it[0]), tuple(-e for e in it[0]))
        )

    def leading(self) -> tuple[tuple[int, ...], Fraction] | None:
        """First term in the canonical (graded-lex) ordering, or None."""
        items = self._sorted_terms()
        return items[0] if items else None

    def _monomial_str(self, exps: tuple[int, ...]) -> str:
        names = self.ring.gens.names
        pieces = []
        for name, e in zip(names, exps):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "*".join(pieces)

    def text(self, spaces: bool = True) -> str:
        """Canonical text form, e.g. ``1 - 11/10*c1^2 + 5*ch2``."""
        if not self.terms:
            return "0"
        plus, minus = (" + ", " - ") if spaces else ("+", "-")
        out = []
        for exps, c in self._sorted_terms():
            mono = self._monomial_str(exps)
            mag = -c if c < 0 else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((minus if c < 0 else plus) + body)
        return "".join(out)

    def compact(self) -> str:
        return self.text(spaces=False)

    def __repr__(self) -> str:
        return f"<{self.text()}>"


def proportion(x: GradedPoly, y: GradedPoly) -> tuple[bool, Fraction | None]:
    """Exact proportionality test: is x a scalar multiple of y?

    Returns (True, lam) with x == lam*y, (True, None) when both vanish, and
    (False, None) otherwise (in particular when y == 0 != x).
    """
    x._check(y)
    lead = y.leading()
    if lead is None:
        return (x.is_zero(), None)
    lam = x.coefficient(lead[0]) / lead[1]
    if x == y.scale(lam):
        return (True, lam)
    return (False, None)
