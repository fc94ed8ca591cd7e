"""Partitions, tableaux and the classical symmetric polynomial families.

This is the combinatorial substrate shared by the closed formulas and the
brute-force oracle: partition enumeration, Stirling numbers, the Weyl
dimension product, semistandard tableau counting (an independent dimension
count), Schur evaluation through the Jacobi-Trudi determinant, and the change
of basis from symmetric polynomials in degree-1 roots to power sums.

All functions are pure; the memo tables (Stirling numbers, power-sum
expansion data) sit behind lru_cache, so concurrent use is safe and
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from logchern.ring import GradedPoly, PolyRing, graded_generators, root_generators


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts (zeros normalized away)."""

    parts: tuple[int, ...]
    context_rank: int | None = None

    def __post_init__(self):
        parts = tuple(p for p in self.parts if p != 0)
        if any(p < 0 for p in parts):
            raise ValueError("partition parts must be non-negative")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {self.parts}")
        object.__setattr__(self, "parts", parts)
        r = self.context_rank
        if r is not None and len(parts) > r:
            raise ValueError(f"partition {parts} has more than {r} parts")

    @classmethod
    def of(cls, obj, context_rank: int | None = None) -> Partition:
        if isinstance(obj, Partition):
            if context_rank is not None and obj.context_rank != context_rank:
                return cls(obj.parts, context_rank)
            return obj
        return cls(tuple(obj), context_rank)

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        return cls(tuple(int(p) for p in text.split(",")))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def padded(self, r: int) -> tuple[int, ...]:
        if len(self.parts) > r:
            raise ValueError(f"partition {self.parts} has more than {r} parts")
        return self.parts + (0,) * (r - len(self.parts))

    def __str__(self) -> str:
        parts = self.parts
        if self.context_rank is not None:
            parts = self.padded(self.context_rank)
        return ",".join(str(p) for p in parts) if parts else "0"


def enumerate_partitions(size: int, max_parts: int) -> list[Partition]:
    """All partitions of ``size`` into at most ``max_parts`` parts.

    Deterministic order: decreasing lexicographic, e.g. (3) before (2,1).
    """
    if size < 0:
        raise ValueError("size must be non-negative")
    out: list[Partition] = []

    def rec(remaining, cap, nparts, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        if nparts == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            rec(remaining - first, first, nparts - 1, prefix + [first])

    rec(size, size if size else 1, max_parts, [])
    return out


@lru_cache(maxsize=None)
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind, 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be non-negative")
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def weyl_dim(alpha, r: int) -> int:
    """Dimension of the Schur module: prod over i<j of (a_i-a_j+j-i)/(j-i)."""
    a = Partition.of(alpha).padded(r)
    num = den = 1
    for i in range(r):
        for j in range(i + 1, r):
            num *= a[i] - a[j] + j - i
            den *= j - i
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("Weyl product did not clear denominators")
    return q


def ssyt_count(alpha, r: int) -> int:
    """Number of semistandard tableaux of shape alpha, entries in 1..r.

    Direct backtracking enumeration; intentionally independent of weyl_dim.
    """
    shape = Partition.of(alpha).padded(r)
    rows = [p for p in shape if p]
    if not rows:
        return 1

    count = 0
    cells = [(i, j) for i, row in enumerate(rows) for j in range(row)]
    grid = [[0] * row for row in rows]

    def fill(pos):
        nonlocal count
        if pos == len(cells):
            count += 1
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, r + 1):
            grid[i][j] = v
            fill(pos + 1)
        grid[i][j] = 0

    fill(0)
    return count


# -- symmetric polynomial families evaluated at given ring elements ---------


def _check_values(values) -> PolyRing:
    if not values:
        raise ValueError("need at least one value")
    ring = values[0].ring
    for v in values:
        if v.ring != ring:
            raise ValueError("values live in different rings")
    return ring


def power_sum_poly(k: int, values) -> GradedPoly:
    """p_k = v_1^k + ... + v_r^k."""
    ring = _check_values(values)
    if k == 0:
        return ring.scalar(len(values))
    acc = ring.zero()
    for v in values:
        acc = acc + v**k
    return acc


def _newton_family(up_to: int, values, signed: bool) -> list[GradedPoly]:
    """h_k (signed=False) or sigma_k (signed=True) via Newton recurrences."""
    ring = _check_values(values)
    ps = [power_sum_poly(i, values) for i in range(up_to + 1)]
    fam = [ring.one()]
    for k in range(1, up_to + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = ps[i] * fam[k - i]
            if signed and i % 2 == 0:
                acc = acc - term
            else:
                acc = acc + term
        fam.append(acc / k)
    return fam


def complete_poly(k: int, values) -> GradedPoly:
    """Complete homogeneous h_k evaluated at the values."""
    if k < 0:
        return _check_values(values).zero()
    return _newton_family(k, values, signed=False)[k]


def elementary_poly(k: int, values) -> GradedPoly:
    """Elementary sigma_k evaluated at the values; 0 for k > #values."""
    ring = _check_values(values)
    if k < 0 or k > len(values):
        return ring.zero()
    return _newton_family(k, values, signed=True)[k]


def schur_in_roots(alpha, r: int, values) -> GradedPoly:
    """Schur polynomial s_alpha at the given r values (Jacobi-Trudi).

    s_alpha = det( h_{alpha_i - i + j} ) over 1 <= i,j <= len(alpha).
    """
    alpha = Partition.of(alpha)
    if len(values) != r:
        raise ValueError(f"expected {r} values, got {len(values)}")
    ring = _check_values(values)
    if len(alpha) > r:
        raise ValueError(f"partition {alpha.parts} has more than {r} parts")
    ell = len(alpha)
    if ell == 0:
        return ring.one()
    top = max(alpha.parts[i] - i + j for i in range(ell) for j in range(ell))
    hs = _newton_family(max(top, 0), values, signed=False)

    def h(k):
        return ring.zero() if k < 0 else hs[k]

    matrix = [[h(alpha.parts[i] - (i + 1) + (j + 1)) for j in range(ell)] for i in range(ell)]
    return _det(matrix, ring)


def _det(matrix, ring: PolyRing) -> GradedPoly:
    """Determinant by column-subset expansion (memoized cofactors)."""
    n = len(matrix)
    cache: dict[tuple[int, ...], GradedPoly] = {(): ring.one()}

    def minor(cols: tuple[int, ...]) -> GradedPoly:
        got = cache.get(cols)
        if got is not None:
            return got
        i = n - len(cols)
        acc = ring.zero()
        for pos, c in enumerate(cols):
            rest = cols[:pos] + cols[pos + 1 :]
            term = matrix[i][c] * minor(rest)
            acc = acc - term if pos % 2 else acc + term
        cache[cols] = acc
        return acc

    return minor(tuple(range(n)))


def family_in_roots(kind: str, index, r: int, values) -> GradedPoly:
    """Dispatch on family name: 'p', 'h', 'sigma' (or 'e'), 's'."""
    if kind == "s":
        return schur_in_roots(index, r, values)
    if len(values) != r:
        raise ValueError(f"expected {r} values, got {len(values)}")
    if kind == "p":
        return power_sum_poly(index, values)
    if kind == "h":
        return complete_poly(index, values)
    if kind in ("sigma", "e"):
        return elementary_poly(index, values)
    raise ValueError(f"unknown family kind {kind!r}")


# -- power-sum basis conversion ---------------------------------------------


def powersum_ring(D: int) -> PolyRing:
    """Ring of power-sum generators p1..pD with deg p_k = k."""
    return PolyRing(graded_generators("p", D), D)


def is_symmetric(p: GradedPoly) -> bool:
    """Invariance under adjacent transpositions of the (degree-1) generators."""
    n = len(p.ring.gens)
    for i in range(n - 1):
        swapped = {}
        for exps, c in p.terms.items():
            e = list(exps)
            e[i], e[i + 1] = e[i + 1], e[i]
            swapped[tuple(e)] = c
        if swapped != p.terms:
            return False
    return True


@lru_cache(maxsize=None)
def _powersum_matrix(r: int, k: int):
    """Expansion data of all products p_mu, |mu| = k, over r roots.

    Returns (row index: partitions of k with <= r parts, candidate mu list in
    ascending lex order, matrix columns keyed by mu as coefficient tuples).
    """
    ring = PolyRing(root_generators(r), k)
    roots = [ring.gen(name) for name in ring.gens.names]
    rows = [lam.padded(r) for lam in enumerate_partitions(k, r)]
    candidates = sorted(p.parts for p in enumerate_partitions(k, k))
    cols = []
    for mu in candidates:
        poly = ring.one()
        for part in mu:
            poly = poly * power_sum_poly(part, roots)
        cols.append(tuple(poly.coefficient(m) for m in rows))
    return rows, candidates, cols


def _solve_preferring(cols, rhs):
    """Solve sum_j g_j * cols[j] = rhs, pivoting on the earliest columns.

    Free coordinates are set to zero, so the solution is supported on the
    first linearly independent subset of columns.  Raises if inconsistent.
    """
    nrows = len(rhs)
    ncols = len(cols)
    m = [[cols[j][i] for j in range(ncols)] + [rhs[i]] for i in range(nrows)]
    pivot_of_col: dict[int, int] = {}
    rank = 0
    for j in range(ncols):
        sel = next((i for i in range(rank, nrows) if m[i][j]), None)
        if sel is None:
            continue
        m[rank], m[sel] = m[sel], m[rank]
        inv = Fraction(1) / m[rank][j]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][j]:
                f = m[i][j]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        pivot_of_col[j] = rank
        rank += 1
    for i in range(rank, nrows):
        if m[i][ncols]:
            raise ArithmeticError("inconsistent power-sum system")
    sol = [Fraction(0)] * ncols
    for j, i in pivot_of_col.items():
        sol[j] = m[i][ncols]
    return sol


def sym_to_power_sums(p: GradedPoly, r: int) -> GradedPoly:
    """Rewrite a symmetric polynomial in r Chern roots in power sums p1..pD.

    The input must be symmetric (checked).  In degrees <= r the power-sum
    monomials are a basis and the answer is unique; above that they are
    dependent and the result is the deterministic section supported on the
    lexicographically earliest independent products (small parts first).
    Substituting p_k -> p_k(a_1..a_r) always recovers the input exactly.
    """
    if len(p.ring.gens) != r or set(p.ring.gens.degrees) - {1}:
        raise ValueError("input must live in a ring of r degree-1 roots")
    if not is_symmetric(p):
        raise ValueError("input polynomial is not symmetric")
    D = p.ring.truncation
    target = powersum_ring(D)
    result = target.scalar(p.constant())
    for k in range(1, D + 1):
        comp = p.component(k)
        if comp.is_zero():
            continue
        rows, candidates, cols = _powersum_matrix(r, k)
        rhs = [comp.coefficient(m) for m in rows]
        sol = _solve_preferring(cols, rhs)
        for mu, g in zip(candidates, sol):
            if not g:
                continue
            exps = [0] * D
            for part in mu:
                exps[part - 1] += 1
            result = result + target.monomial(tuple(exps), g)
    return result


def powersums_to_roots(q: GradedPoly, r: int) -> GradedPoly:
    """Substitute p_k -> p_k(a_1..a_r); inverse check for sym_to_power_sums."""
    D = q.ring.truncation
    ring = PolyRing(root_generators(r), D)
    roots = [ring.gen(name) for name in ring.gens.names]
    images = {
        f"p{k}": power_sum_poly(k, roots) for k in range(1, D + 1)
    }
    return q.substitute(ring, images)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside the usual range."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)
