"""Splitting-principle brute force: the single source of truth.

Everything here works in the ring of r Chern roots a1..ar.  A Schur functor
of the generic rank-r bundle has total character s_alpha(exp a1, ..., exp ar)
-- no formula involved beyond the definition -- and any symmetric result is
re-expressed bundle-intrinsically through power sums (ch_k = p_k/k!).  The
closed formulas elsewhere in the package are verified against these values;
nothing is ever compared with a tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from logchern.characters import (
    BundleCharacter,
    ch_ring,
    delta4t,
    delta_k,
    discriminants,
)
from logchern.formulas import ext_power_ch3, f4_sym, schur_coefficients, schur_ch3, sym_power_ch
from logchern.ring import GradedPoly, PolyRing, proportion, root_generators
from logchern.symfunc import (
    Partition,
    enumerate_partitions,
    power_sum_poly,
    schur_in_roots,
    sym_to_power_sums,
    weyl_dim,
)

MAX_SWEEP_RANK = 6
MAX_SWEEP_SIZE = 8


def root_ring(r: int, D: int) -> PolyRing:
    return PolyRing(root_generators(r), D)


def exp_roots(ring: PolyRing) -> list[GradedPoly]:
    return [ring.gen(name).exp() for name in ring.gens.names]


def base_in_roots(r: int, D: int) -> BundleCharacter:
    """The generic bundle itself: ch(E) = sum_i exp(a_i)."""
    ring = root_ring(r, D)
    total = ring.zero()
    for q in exp_roots(ring):
        total = total + q
    return BundleCharacter.from_total(ring, total)


def oracle_schur_total(alpha, r: int, D: int) -> GradedPoly:
    """Total character of S^alpha E in the root ring: s_alpha(exp a)."""
    ring = root_ring(r, D)
    return schur_in_roots(alpha, r, exp_roots(ring))


def roots_to_e_poly(p: GradedPoly, r: int) -> GradedPoly:
    """Express a symmetric root-ring polynomial over the free symbols e_k.

    Rewrites in power sums (symmetry is checked degree by degree) and then
    substitutes p_k -> k! e_k, since ch_k(E) = p_k(a)/k!.  Above degree r the
    power-sum rewriting is the deterministic section documented in symfunc.
    """
    in_powersums = sym_to_power_sums(p, r)
    target = ch_ring(p.ring.truncation)
    terms = {}
    for exps, c in in_powersums.terms.items():
        scale = 1
        for j, e in enumerate(exps, start=1):
            if e:
                scale *= factorial(j) ** e
        terms[exps] = c * scale
    return target.from_terms(terms)


def roots_to_ch_basis(total: GradedPoly, r: int) -> BundleCharacter:
    """Bundle character over e1..eD from a symmetric root-ring total."""
    e_total = roots_to_e_poly(total, r)
    return BundleCharacter.from_total(e_total.ring, e_total)


def oracle_schur_ch(alpha, r: int, D: int) -> BundleCharacter:
    """ch(S^alpha E) over e1..eD, computed purely from the splitting principle."""
    alpha = Partition.of(alpha)
    total = oracle_schur_total(alpha, r, D)
    out = roots_to_ch_basis(total, r)
    if out.rank != weyl_dim(alpha, r):
        raise ArithmeticError("oracle rank disagrees with the Weyl dimension")
    return out


def char_to_roots(a: BundleCharacter, r: int) -> BundleCharacter:
    """Interpret an e-ring character on the generic rank-r bundle.

    Substitutes e_k -> p_k(a)/k!; this is the canonical place to compare
    expressions whose degree exceeds r.
    """
    D = a.D
    ring = root_ring(r, D)
    roots = [ring.gen(name) for name in ring.gens.names]
    images = {
        f"e{k}": power_sum_poly(k, roots) / factorial(k) for k in range(1, D + 1)
    }
    total = a.total().substitute(ring, images)
    return BundleCharacter.from_total(ring, total)


# -- verification records -----------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    lhs: str = ""
    rhs: str = ""


@dataclass(frozen=True)
class VerificationRecord:
    alpha: Partition
    r: int
    D: int
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def _equality_check(name: str, lhs, rhs) -> Check:
    if lhs == rhs:
        return Check(name, True)
    fmt = lambda x: x.text() if isinstance(x, GradedPoly) else str(x)
    return Check(name, False, fmt(lhs), fmt(rhs))


def _factor_check(name: str, lhs: GradedPoly, rhs: GradedPoly, expected) -> Check:
    """lhs == expected * rhs, with 0 == lam*0 handled as the vanishing regime."""
    if rhs.is_zero():
        if lhs.is_zero():
            return Check(name + " (vanishing regime)", True)
        return Check(name, False, lhs.text(), "0")
    ok, lam = proportion(lhs, rhs)
    if ok and lam == expected:
        return Check(name, True)
    return Check(name, False, f"factor {lam if ok else 'none'}", f"factor {expected}")


def verify_schur(alpha, r: int, D: int = 3) -> VerificationRecord:
    """Compare the oracle against every applicable closed formula.

    Field-by-field equality of ch_0..ch_min(D,3) against the Schur table
    (ch_3 only for r >= 3), against the symmetric-power double sum for rows
    and the exterior table for columns, plus the three discriminant scaling
    factors.  Failures are recorded, not raised.
    """
    if D > 3:
        raise ValueError("verify_schur compares the degree <= 3 tables")
    alpha = Partition.of(alpha)
    total = oracle_schur_total(alpha, r, D)
    ring = total.ring
    oracle_root = BundleCharacter.from_total(ring, total)
    oracle_e = roots_to_ch_basis(total, r)
    sc = schur_coefficients(alpha, r)
    checks = [
        _equality_check("rank equals Weyl dimension", oracle_e.rank, Fraction(weyl_dim(alpha, r)))
    ]

    table_up_to = min(D, 3 if r >= 3 else (2 if r == 2 else 1))
    # re-express in the table's own ring (e1..e_table_up_to)
    if table_up_to < D:
        oracle_t = roots_to_ch_basis(total.truncate(table_up_to), r)
    else:
        oracle_t = oracle_e
    closed = schur_ch3(alpha, r, up_to=table_up_to)
    checks.append(_equality_check("rank vs Schur table", oracle_t.rank, closed.rank))
    for k in range(1, table_up_to + 1):
        checks.append(
            _equality_check(f"ch{k} vs Schur table", oracle_t.ch(k), closed.ch(k))
        )

    if len(alpha) <= 1:
        row = sym_power_ch(alpha.size, r, D)
        row_root = char_to_roots(row, r)
        checks.append(
            _equality_check("total vs symmetric double sum", total, row_root.total())
        )
    if alpha.parts and all(p == 1 for p in alpha.parts):
        col = ext_power_ch3(len(alpha), r, up_to=table_up_to)
        for k in range(1, table_up_to + 1):
            checks.append(
                _equality_check(f"ch{k} vs exterior table", oracle_t.ch(k), col.ch(k))
            )

    base = base_in_roots(r, D)
    weight = Fraction(sc.r_alpha, r)
    ds_schur = discriminants(oracle_root, D)
    ds_base = discriminants(base, D)
    checks.append(
        _factor_check("Delta_1 scaling", ds_schur[0], ds_base[0], alpha.size * weight)
    )
    if D >= 2:
        checks.append(
            _factor_check(
                "Delta_2 scaling", ds_schur[1], ds_base[1], sc.delta2_tilde * weight**2
            )
        )
    if D >= 3:
        expected = sc.delta3_tilde * weight**3 if sc.delta3_tilde is not None else None
        if expected is None:
            # rank <= 2: Delta_3 vanishes identically on both sides
            checks.append(
                _equality_check("Delta_3 vanishing (r <= 2)", ds_schur[2], ring.zero())
            )
        else:
            checks.append(
                _factor_check("Delta_3 scaling", ds_schur[2], ds_base[2], expected)
            )
    return VerificationRecord(alpha, r, D, tuple(checks))


def verify_sym_power_full(m: int, r: int, D: int) -> Check:
    """Full-degree check of the symmetric-power double sum against the oracle."""
    total = oracle_schur_total((m,), r, D)
    closed_root = char_to_roots(sym_power_ch(m, r, D), r)
    return _equality_check(f"S^{m}, r={r}, D={D}", total, closed_root.total())


# -- degree-4 proportionality -------------------------------------------------


@dataclass(frozen=True)
class Delta4Result:
    m: int
    r: int
    t: Fraction
    is_proportional: bool
    lam: Fraction | None
    printed: Fraction

    @property
    def matches_printed(self) -> bool:
        return self.is_proportional and self.lam == self.printed


def verify_delta4_proportionality(m: int, r: int, t=None) -> Delta4Result:
    """Is Delta_{4,t}(S^m V) an exact multiple of Delta_{4,t}(V)?  (t defaults to r.)

    Returns the measured ratio next to the printed coefficient
    f4 * (r_m/r)^4 without deciding which normalization was intended.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    t = Fraction(r) if t is None else Fraction(t)
    sym = BundleCharacter.from_total(
        root_ring(r, 4), oracle_schur_total((m,), r, 4)
    )
    base = base_in_roots(r, 4)
    ok, lam = proportion(delta4t(sym, t), delta4t(base, t))
    printed = f4_sym(m, r) * Fraction(weyl_dim((m,), r), r) ** 4
    return Delta4Result(m, r, t, ok, lam, printed)


def plain_delta4_witnesses(max_m: int = 4, max_r: int = 4) -> list[tuple[int, int]]:
    """(m, r) pairs where the unmodified Delta_4(S^m V) is NOT a multiple of Delta_4(V)."""
    out = []
    for r in range(2, max_r + 1):
        base = base_in_roots(r, 4)
        for m in range(2, max_m + 1):
            sym = BundleCharacter.from_total(
                root_ring(r, 4), oracle_schur_total((m,), r, 4)
            )
            ok, _ = proportion(delta_k(sym, 4), delta_k(base, 4))
            if not ok:
                out.append((m, r))
    return out


def verify_nonproportional_hook(alpha, r: int, t) -> bool:
    """True when Delta_{4,t}(S^alpha V) is confirmed NOT a multiple of Delta_{4,t}(V)."""
    alpha = Partition.of(alpha)
    sym = BundleCharacter.from_total(root_ring(r, 4), oracle_schur_total(alpha, r, 4))
    base = base_in_roots(r, 4)
    ok, _ = proportion(delta4t(sym, Fraction(t)), delta4t(base, Fraction(t)))
    return not ok


# -- the sweep ----------------------------------------------------------------


@dataclass
class SweepReport:
    cases: int = 0
    passed: int = 0
    failed: int = 0
    records: list[VerificationRecord] = field(default_factory=list)
    discrepancies: list = field(default_factory=list)

    def add(self, record: VerificationRecord) -> None:
        self.cases += 1
        self.records.append(record)
        if record.ok:
            self.passed += 1
        else:
            self.failed += 1

    def to_json_dict(self) -> dict:
        return {
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "discrepancies": [d.to_json_dict() for d in self.discrepancies],
        }


def sweep(max_r: int, max_size: int, D: int = 3, include_report: bool = True) -> SweepReport:
    """verify_schur over every (r <= max_r, 1 <= |alpha| <= max_size, <= r parts).

    Rank 1 (where every Schur functor is a power of a line and every table
    degenerates) is included only when it is the only rank in range.
    Deterministic case order (rank, then size, then decreasing-lex
    partitions); results are aggregated in case order.  With include_report
    the measured printed-vs-derived claim table is attached as well.
    """
    if not 1 <= max_r <= MAX_SWEEP_RANK:
        raise ValueError(f"max_r must lie in 1..{MAX_SWEEP_RANK}")
    if not 1 <= max_size <= MAX_SWEEP_SIZE:
        raise ValueError(f"max_size must lie in 1..{MAX_SWEEP_SIZE}")
    report = SweepReport()
    for r in range(1 if max_r == 1 else 2, max_r + 1):
        for size in range(1, max_size + 1):
            for alpha in enumerate_partitions(size, r):
                report.add(verify_schur(alpha, r, D))
    if include_report:
        from logchern.report import build_report

        report.discrepancies = build_report()
    return report
