"""Brute-force enumeration of projective space over prime fields.

Strata of the skew quadric matrix are classified through Pfaffian
vanishing (for an alternating matrix, rank < 2k+2 exactly when all
(2k+2)-Pfaffians vanish), evaluated as vectorized arithmetic over all
canonical points at once; exact Gaussian elimination is kept as the
per-point oracle and cross-checked on every scan.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .exactnum import nth_root_in_prime_field
from .heisenberg import pminus_chart, s_matrix
from .linalg import rank_gauss_mod
from .mpoly import SparsePoly
from . import golden

CROSS_CHECK_SAMPLES = 512


@dataclass(frozen=True)
class ProjPoint:
    q: int
    coords: tuple[int, ...]


@dataclass(frozen=True)
class StratumCensus:
    d: int
    q: int
    counts: dict  # rank -> number of points
    min_rank: int
    min_rank_points: tuple[tuple[int, ...], ...]

    def total(self) -> int:
        return sum(self.counts.values())


def projective_point_count(ncoords: int, q: int) -> int:
    return (q ** ncoords - 1) // (q - 1)


DEFAULT_BLOCK = 1 << 20


def point_blocks(ncoords: int, q: int, block_size: int = DEFAULT_BLOCK):
    """Canonical points of P^(ncoords-1)(F_q) in scan order, in bounded blocks.

    Scan order: by position of the leading 1, then lexicographically in
    the free coordinates.  Block boundaries never change the enumeration,
    so partitioned runs merge to identical censuses.
    """
    for lead in range(ncoords):
        free = ncoords - lead - 1
        total = q ** free
        for start in range(0, total, block_size):
            stop = min(start + block_size, total)
            block = np.zeros((stop - start, ncoords), dtype=np.int64)
            block[:, lead] = 1
            rem = np.arange(start, stop, dtype=np.int64)
            for pos in range(free - 1, -1, -1):
                block[:, lead + 1 + pos] = rem % q
                rem //= q
            yield block


def canonical_points(ncoords: int, q: int) -> np.ndarray:
    """All canonical points at once; prefer point_blocks for large fields."""
    pts = np.concatenate(list(point_blocks(ncoords, q)), axis=0)
    assert pts.shape[0] == projective_point_count(ncoords, q)
    return pts


def _single_term_pattern(f: SparsePoly) -> tuple[int, tuple[int, ...]]:
    (exps, coeff), = f.terms.items()
    if coeff not in (1, -1):
        raise ValueError("entry is not a signed monomial")
    return (1 if coeff == 1 else -1), exps


def evaluate_poly_batch(f: SparsePoly, X: np.ndarray, q: int) -> np.ndarray:
    """Values of f at each row of X, mod q; coefficients must be rational."""
    from .exactnum import fraction_mod

    total = np.zeros(X.shape[0], dtype=np.int64)
    for exps, coeff in f.terms.items():
        term = np.full(X.shape[0], fraction_mod(coeff, q), dtype=np.int64)
        for i, e in enumerate(exps):
            for _ in range(e):
                term = term * X[:, i] % q
        total = (total + term) % q
    return total


class _BatchSkew:
    """Skew matrix whose entries are arrays of values mod q, one per point."""

    def __init__(self, size: int, entries: dict, q: int, npoints: int) -> None:
        self.size = size
        self.entries = entries  # (i, j) i<j -> int64 array
        self.q = q
        self.npoints = npoints

    def entry(self, i: int, j: int) -> np.ndarray:
        if i < j:
            return self.entries[(i, j)]
        return (-self.entries[(j, i)]) % self.q

    def pf_on(self, idx: tuple[int, ...], memo: dict) -> np.ndarray:
        if not idx:
            return np.ones(self.npoints, dtype=np.int64)
        if idx in memo:
            return memo[idx]
        i0, rest = idx[0], idx[1:]
        acc = np.zeros(self.npoints, dtype=np.int64)
        for t, j in enumerate(rest):
            term = self.entry(i0, j) * self.pf_on(rest[:t] + rest[t + 1:], memo) % self.q
            acc = acc + term if t % 2 == 0 else acc - term
        memo[idx] = acc % self.q
        return memo[idx]


def _batch_s_matrix(d: int, q: int, pts: np.ndarray) -> _BatchSkew:
    s = s_matrix(d)
    entries = {}
    for (i, j), f in s.upper.items():
        sign, exps = _single_term_pattern(f)
        val = np.ones(pts.shape[0], dtype=np.int64)
        for v, e in enumerate(exps):
            for _ in range(e):
                val = val * pts[:, v] % q
        entries[(i, j)] = (sign * val) % q
    return _BatchSkew(s.size, entries, q, pts.shape[0])


def _batch_ranks(batch: _BatchSkew) -> np.ndarray:
    """Rank classification by Pfaffian vanishing; sizes 5 and 6 supported."""
    n = batch.size
    memo: dict = {}
    zero_mask = np.ones(batch.npoints, dtype=bool)
    for arr in batch.entries.values():
        zero_mask &= arr == 0
    # rank <= 2 iff every principal 4x4 Pfaffian vanishes
    rank2_mask = np.ones(batch.npoints, dtype=bool)
    for quad in combinations(range(n), 4):
        rank2_mask &= batch.pf_on(quad, memo) == 0
    ranks = np.full(batch.npoints, 4, dtype=np.int64)
    if n % 2 == 0:
        pf = batch.pf_on(tuple(range(n)), memo)
        ranks[pf != 0] = 6
    ranks[rank2_mask] = 2
    ranks[zero_mask] = 0
    return ranks


def rank_at_point(d: int, q: int, point) -> int:
    """Exact elimination rank of the quadric matrix at one point."""
    s = s_matrix(d)
    rows = [
        [s.entry(i, j).evaluate_mod(point, q) if s.entry(i, j) else 0
         for j in range(s.size)]
        for i in range(s.size)
    ]
    return rank_gauss_mod(rows, q)


def scan_strata(d: int, q: int, block_size: int = DEFAULT_BLOCK) -> StratumCensus:
    if d not in (9, 11):
        raise ValueError("d must be 9 or 11")
    if (q - 1) % d != 0:
        raise ValueError(f"{d} must divide {q}-1 so roots of unity reduce")
    ncoords = (d - 1) // 2
    total = projective_point_count(ncoords, q)
    step = max(1, total // CROSS_CHECK_SAMPLES)  # global, partition-independent

    possible = [0, 2, 4] + ([6] if d == 11 else [])
    counts = {r: 0 for r in possible}
    # the minimal stratum is tiny (the census contract reports its points);
    # higher strata grow like q^3 and only their counts are kept
    collected: dict[int, list] = {0: [], 2: []}
    offset = 0
    for pts in point_blocks(ncoords, q, block_size):
        batch = _batch_s_matrix(d, q, pts)
        ranks = _batch_ranks(batch)
        for r in possible:
            counts[r] += int(np.count_nonzero(ranks == r))
        for r in collected:
            for row in pts[ranks == r]:
                collected[r].append(tuple(int(c) for c in row))
        first = (-offset) % step
        for k in range(first, pts.shape[0], step):
            expected = rank_at_point(d, q, [int(c) for c in pts[k]])
            if expected != int(ranks[k]):
                raise AssertionError(
                    f"Pfaffian stratification disagrees with elimination at point {pts[k]}"
                )
        offset += pts.shape[0]

    assert offset == total
    observed = [r for r in possible if counts[r] > 0]
    min_rank = observed[0] if observed else 0
    if min_rank in collected:
        min_points = tuple(collected[min_rank])
    else:
        # the minimal stratum is unexpectedly large; collect it in a second pass
        min_points = tuple(
            tuple(int(c) for c in row)
            for pts in point_blocks(ncoords, q, block_size)
            for row in pts[_batch_ranks(_batch_s_matrix(d, q, pts)) == min_rank]
        )
    return StratumCensus(d=d, q=q, counts=counts, min_rank=min_rank,
                         min_rank_points=min_points)


def find_stratum_point(d: int, q: int, target_rank: int) -> ProjPoint | None:
    """First canonical point (scan order) whose matrix has the target rank."""
    if (q - 1) % d != 0:
        raise ValueError(f"{d} must divide {q}-1")
    for pts in point_blocks((d - 1) // 2, q):
        batch = _batch_s_matrix(d, q, pts)
        ranks = _batch_ranks(batch)
        hits = np.nonzero(ranks == target_rank)[0]
        if hits.size:
            row = pts[hits[0]]
            return ProjPoint(q=q, coords=tuple(int(c) for c in row))
    return None


# -- d = 9 oracle sets -----------------------------------------------------------


def ci_curve_points_d9(q: int) -> set[tuple[int, ...]]:
    """Common zeros in P^3(F_q) of the two golden complete-intersection cubics."""
    cubics = golden.load_poly_list("ci_curve_d9.txt", [f"x{i}" for i in range(1, 5)])
    pts = canonical_points(4, q)
    mask = np.ones(pts.shape[0], dtype=bool)
    for f in cubics:
        mask &= evaluate_poly_batch(f, pts, q) == 0
    return {tuple(int(c) for c in row) for row in pts[mask]}


def special_points_d9_mod(q: int) -> set[tuple[int, ...]]:
    """Reductions of the four isolated rank-2 points, as canonical chart points."""
    root = nth_root_in_prime_field(9, q)
    chart = pminus_chart(9)
    labeled = golden.load_labeled("special_points_d9.txt")
    out = set()
    for name in ("P1", "P2", "P3", "P4"):
        full = []
        for cell in labeled[name].split(","):
            f = golden.parse_poly(cell.strip(), ["z"])
            full.append(f.evaluate_mod([root], q))
        # oddness holds exactly mod q as well
        if full[0] % q != 0:
            raise AssertionError("special point leaves the odd eigenspace mod q")
        for k in range(1, chart.half + 1):
            if (full[9 - k] + full[k]) % q != 0:
                raise AssertionError("special point violates the odd sign rule mod q")
        coords = [full[k] % q for k in range(1, chart.half + 1)]
        lead = next(c for c in coords if c)
        inv = pow(lead, q - 2, q)
        out.add(tuple(c * inv % q for c in coords))
    return out


# -- smoothness scan -------------------------------------------------------------


def jacobian_zero_scan(q: int) -> int:
    """Common projective zeros of the five quadrics x_i^2 + 2 x_(i+1) x_(i+2)
    together with the cubic itself.

    Cubic membership follows from the quadrics by the Euler relation when
    q does not divide 3; it is checked anyway, and imposed as an honest
    extra condition at q = 3 (where 1 + 2 = 0 makes (1:1:1:1:1) a zero of
    the quadrics alone).
    """
    counts = jacobian_zero_counts(q)
    if q % 3 != 0 and counts["jacobian"] != counts["system"]:
        raise AssertionError("Jacobian zero misses the cubic; Euler relation violated")
    return counts["system"]


def jacobian_zero_counts(q: int) -> dict:
    """Zero counts of the Jacobian quadrics alone and of the full system."""
    from .grassfano import jacobian_quadrics, klein_cubic

    if q == 2:
        raise ValueError("q = 2 degenerates the factor 2 in the system")
    quadrics = jacobian_quadrics()
    cubic = klein_cubic()
    jac_count = 0
    full = 0
    for pts in point_blocks(5, q):
        mask = np.ones(pts.shape[0], dtype=bool)
        for f in quadrics:
            mask &= evaluate_poly_batch(f, pts, q) == 0
        jac_count += int(np.count_nonzero(mask))
        hits = pts[mask]
        if hits.shape[0]:
            cubic_vals = evaluate_poly_batch(cubic, hits, q)
            full += int(np.count_nonzero(cubic_vals == 0))
    return {"jacobian": jac_count, "system": full}


# -- reporting -------------------------------------------------------------------


def census_csv(censuses: list[StratumCensus]) -> str:
    buf = io.StringIO()
    buf.write("q,d,rank,count\n")
    for census in censuses:
        for rank in sorted(census.counts):
            buf.write(f"{census.q},{census.d},{rank},{census.counts[rank]}\n")
    return buf.getvalue()


def weil_window_d1(d: int, q: int) -> tuple[int, int]:
    """Heuristic curve window: q + 1 +/- 2 g sqrt(q), genus 26 for d = 11.

    Evidence only; the complex-geometric degree and genus statements are
    not theorems over F_q, so misses downgrade to warnings, never failures.
    """
    if d != 11:
        raise ValueError("curve window is calibrated for d = 11 only")
    genus = 26
    spread = int(2 * genus * q ** 0.5) + 1
    return (max(0, q + 1 - spread), q + 1 + spread)


def hypersurface_window_d2(q: int, c: int = 1) -> tuple[int, int]:
    """Heuristic sextic-threefold window: q^3+q^2+q+1 +/- c * 6 q^2 sqrt(q)."""
    center = q ** 3 + q ** 2 + q + 1
    spread = int(c * 6 * q * q * q ** 0.5) + 1
    return (max(0, center - spread), center + spread)
