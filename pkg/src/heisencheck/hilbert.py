"""Hilbert functions: combinatorial for monomial ideals, degreewise linear
algebra for general homogeneous ideals, and flatness evidence for families.

Graded ranks are computed over two fixed 30-bit primes; on disagreement the
computation falls back to exact rationals.  Monomial generators are split
off first (their degree-t multiples are standard basis vectors), which keeps
the elimination small.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

import numpy as np

from .linalg import rank_fraction, rank_mod
from .mpoly import SparsePoly, graded_monomials

# Two 30-bit primes away from 2, 3, 5, 11; recorded in the run config.
RANK_PRIMES = (1073741789, 1073741783)


def _monomial_exps(g: SparsePoly) -> tuple[int, ...] | None:
    if len(g.terms) != 1:
        return None
    (exps, _), = g.terms.items()
    return exps


def _divides(d: tuple[int, ...], e: tuple[int, ...]) -> bool:
    return all(a <= b for a, b in zip(d, e))


def monomial_hilbert(generators, nvars: int, t_max: int) -> list[int]:
    """values[t] = number of degree-t monomials outside the monomial ideal."""
    divisors = []
    for g in generators:
        exps = g if isinstance(g, tuple) else _monomial_exps(g)
        if exps is None:
            raise ValueError(f"non-monomial generator {g}")
        divisors.append(exps)
    values = []
    for t in range(t_max + 1):
        free = 0
        for mono in graded_monomials(nvars, t):
            if not any(_divides(d, mono) for d in divisors):
                free += 1
        values.append(free)
    return values


class SimplicialComplex:
    """The complex of squarefree monomials outside a squarefree ideal."""

    def __init__(self, nvars: int, faces: set[frozenset]) -> None:
        self.nvars = nvars
        self.faces = faces

    @classmethod
    def from_squarefree_ideal(cls, generators, nvars: int) -> "SimplicialComplex":
        supports = []
        for g in generators:
            exps = g if isinstance(g, tuple) else _monomial_exps(g)
            if exps is None or any(e > 1 for e in exps):
                raise ValueError(f"generator {g} is not squarefree")
            supports.append(frozenset(i for i, e in enumerate(exps) if e))
        faces = set()
        vertices = range(nvars)
        for size in range(nvars + 1):
            for combo in combinations(vertices, size):
                face = frozenset(combo)
                if not any(s <= face for s in supports):
                    faces.add(face)
        return cls(nvars, faces)

    def face_vector(self) -> tuple[int, ...]:
        """(f_0, f_1, ...): counts by dimension, empty face omitted."""
        top = max((len(f) for f in self.faces), default=0)
        counts = [0] * top
        for f in self.faces:
            if f:
                counts[len(f) - 1] += 1
        return tuple(counts)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * c for i, c in enumerate(self.face_vector()))

    def faces_of_dimension(self, dim: int) -> list[frozenset]:
        return sorted((f for f in self.faces if len(f) == dim + 1), key=sorted)


def face_vector(generators, nvars: int = 9) -> tuple[int, ...]:
    return SimplicialComplex.from_squarefree_ideal(generators, nvars).face_vector()


def stanley_reisner_hilbert(fvec: tuple[int, ...], t: int) -> int:
    """Face-ring Hilbert function: sum_i f_(i-1) C(t-1, i-1) for t >= 1."""
    if t == 0:
        return 1
    return sum(fvec[i] * math.comb(t - 1, i) for i in range(len(fvec)))


# -- graded linear algebra -------------------------------------------------------


def _degree_rows(generators: list[SparsePoly], nvars: int, t: int):
    """Monomial-killed columns plus coefficient rows of non-monomial multiples."""
    basis = graded_monomials(nvars, t)
    col = {m: i for i, m in enumerate(basis)}
    killed: set[int] = set()
    poly_rows: list[dict[int, Fraction]] = []
    for g in generators:
        dg = g.degree()
        if dg > t or g.is_zero():
            continue
        exps = _monomial_exps(g)
        if exps is not None:
            for m in graded_monomials(nvars, t - dg):
                shifted = tuple(a + b for a, b in zip(exps, m))
                killed.add(col[shifted])
        else:
            for m in graded_monomials(nvars, t - dg):
                row = {}
                for e, c in g.terms.items():
                    shifted = tuple(a + b for a, b in zip(e, m))
                    row[col[shifted]] = Fraction(c)
                poly_rows.append(row)
    return len(basis), killed, poly_rows


def _project_rows(killed: set[int], poly_rows, ncols: int):
    """Restrict rows to surviving columns; returns (new width, dense int rows)."""
    survivors = [c for c in range(ncols) if c not in killed]
    remap = {c: i for i, c in enumerate(survivors)}
    dense = []
    seen = set()
    for row in poly_rows:
        entries = tuple(sorted((remap[c], v) for c, v in row.items() if c not in killed and v))
        if not entries or entries in seen:
            continue
        seen.add(entries)
        dense.append(entries)
    return len(survivors), dense


def _rows_to_int_matrix(rows, width: int) -> np.ndarray:
    """Dense integer matrix; rows are scaled by denominator lcms (rank-safe)."""
    mat = np.zeros((len(rows), width), dtype=np.int64)
    for r, entries in enumerate(rows):
        lcm = 1
        for _, v in entries:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        for c, v in entries:
            mat[r, c] = int(v * lcm)
    return mat


def graded_hilbert(
    generators,
    nvars: int,
    t_max: int,
    primes: tuple[int, int] = RANK_PRIMES,
) -> list[int]:
    """values[t] = C(t+n-1, n-1) - dim of the degree-t piece of the ideal."""
    gens = list(generators)
    for g in gens:
        if not g.is_homogeneous():
            raise ValueError(f"inhomogeneous generator {g}")
    values = []
    for t in range(t_max + 1):
        ncols, killed, poly_rows = _degree_rows(gens, nvars, t)
        width, rows = _project_rows(killed, poly_rows, ncols)
        if rows:
            mat = _rows_to_int_matrix(rows, width)
            ranks = {rank_mod(mat, p) for p in primes}
            if len(ranks) == 1:
                rank = ranks.pop()
            else:
                dense = [[Fraction(0)] * width for _ in rows]
                for r, entries in enumerate(rows):
                    for c, v in entries:
                        dense[r][c] = v
                rank = rank_fraction(dense)
        else:
            rank = 0
        values.append(ncols - len(killed) - rank)
    return values


def flatness_evidence(family_sampler, samples, t_max: int) -> tuple[bool, dict]:
    """Degree-by-degree Hilbert agreement across sampled family members."""
    if len(samples) < 2:
        raise ValueError("need at least two samples")
    profiles = {}
    for lam, mu in samples:
        gens = family_sampler(lam, mu)
        profiles[f"{lam}:{mu}"] = graded_hilbert(gens, 9, t_max)
    reference = next(iter(profiles.values()))
    flat = all(p == reference for p in profiles.values())
    return flat, profiles


def abelian_surface_profile(t_max: int) -> list[int]:
    """1, then 9 t^2: the Hilbert polynomial of a degree-18 surface in P^8."""
    return [1] + [9 * t * t for t in range(1, t_max + 1)]
