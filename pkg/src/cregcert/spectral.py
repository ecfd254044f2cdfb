"""Krawtchouk polynomials, the MacWilliams transform, and packing weights.

Everything here is exact: Krawtchouk values are integers, transforms are
Fractions, and the uniformly-packed weights come out of a small rational
Gaussian elimination.  Sign decisions (nonnegativity of the transform)
are proof steps, so floating point never appears.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .codes import Code


def krawtchouk(m: int, k: int, x: int) -> int:
    """K_k(x) = sum_j (-1)^j C(x, j) C(m-x, k-j), the binary-scheme value."""
    if not 0 <= k <= m:
        raise ValueError(f"degree {k} out of range 0..{m}")
    if not 0 <= x <= m:
        raise ValueError(f"point {x} out of range 0..{m}")
    return sum((-1) ** j * comb(x, j) * comb(m - x, k - j) for j in range(k + 1))


@lru_cache(maxsize=None)
def krawtchouk_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Full (m+1) x (m+1) table, table[k][x] = K_k(x)."""
    return tuple(
        tuple(krawtchouk(m, k, x) for x in range(m + 1)) for k in range(m + 1)
    )


def macwilliams_transform(a) -> tuple[Fraction, ...]:
    """a'_k = sum_i a_i K_k(i) for a distance distribution of length m+1."""
    m = len(a) - 1
    table = krawtchouk_table(m)
    coeffs = [Fraction(ai) for ai in a]
    return tuple(
        sum((ai * table[k][i] for i, ai in enumerate(coeffs)), Fraction(0))
        for k in range(m + 1)
    )


def external_distance(code: Code) -> int:
    """One less than the number of nonzero MacWilliams transform entries."""
    aprime = macwilliams_transform(code.distance_distribution)
    return sum(1 for v in aprime if v != 0) - 1


@dataclass(frozen=True)
class PackingSolution:
    """Outcome of the uniformly-packed (wide sense) certification.

    ``lambdas`` are the rational weights when the defining identity
    sum_{k=0..rho} lambda_k * f_k(nu) = 1 (a single index k binds both
    the weight and the radius) holds for every vertex nu; ``rows`` are
    the distinct outer-distribution prefixes the solver worked from.
    """

    satisfied: bool
    lambdas: tuple[Fraction, ...] | None
    rows: tuple[tuple[int, ...], ...]
    note: str = (
        "identity used: sum over k = 0..rho of lambda_k * f_k(nu) = 1 "
        "for every vertex nu"
    )


def solve_rational_system(rows, rhs) -> list[Fraction] | None:
    """Solve A x = b exactly over the rationals.

    Returns one solution (free variables pinned to zero) or None when the
    system is inconsistent.  Plain Gauss-Jordan on Fractions; the systems
    here have at most rho+1 <= 5 unknowns.
    """
    if not rows:
        return []
    ncols = len(rows[0])
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [v * inv for v in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c]
                aug[i] = [v - factor * p for v, p in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    for row in aug[r:]:
        if row[-1] != 0:
            return None
    solution = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        solution[c] = aug[i][-1]
    return solution


def certify_uniformly_packed(code: Code) -> PackingSolution:
    """Decide whether rational weights lambda_0..lambda_rho exist with
    sum_k lambda_k |Gamma_k(nu) cap C| = 1 for every vertex nu.

    Collects the distinct (f_0..f_rho) vectors over all 2^m vertices,
    solves the exact linear system, then re-verifies any solution vertex
    by vertex.  Unsatisfiable is a verdict, not an error.
    """
    rho = code.covering_radius
    m = code.length
    words = code.words
    rows = set()
    for mask in range(1 << m):
        f = [0] * (rho + 1)
        for w in words:
            d = (mask ^ w).bit_count()
            if d <= rho:
                f[d] += 1
        rows.add(tuple(f))
    distinct = tuple(sorted(rows))
    solution = solve_rational_system(distinct, [1] * len(distinct))
    if solution is None:
        return PackingSolution(False, None, distinct)
    lambdas = tuple(solution)
    for row in distinct:
        if sum(l * v for l, v in zip(lambdas, row)) != 1:
            return PackingSolution(False, None, distinct)
    return PackingSolution(True, lambdas, distinct)
