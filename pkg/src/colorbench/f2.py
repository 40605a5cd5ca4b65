"""GF(2) linear algebra on integer bitmasks.

Vectors are plain Python ints (bit i = coordinate i), which makes XOR
composition and popcount cheap for the few-hundred-qubit systems used
here.  All routines are destructive-free; generators are passed as
sequences of masks.
"""
from __future__ import annotations

from typing import Iterable, Sequence


def weight(v: int) -> int:
    return v.bit_count()


class RowBasis:
    """Incremental row-echelon basis with combination tracking.

    Each inserted row is reduced against the basis; we remember which
    input rows each basis row is a combination of, so `solve` can return
    a certificate in terms of the original generators.
    """

    def __init__(self):
        self.rows: list[int] = []       # reduced rows, distinct pivots
        self.combos: list[int] = []     # combo[i] = mask over input rows
        self.pivots: list[int] = []     # pivot bit of rows[i]
        self.n_inserted = 0

    def insert(self, row: int) -> bool:
        """Add a generator; returns True if it increased the rank."""
        combo = 1 << self.n_inserted
        self.n_inserted += 1
        for r, c, p in zip(self.rows, self.combos, self.pivots):
            if (row >> p) & 1:
                row ^= r
                combo ^= c
        if row == 0:
            return False
        self.rows.append(row)
        self.combos.append(combo)
        self.pivots.append(row.bit_length() - 1)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: int) -> tuple[int, int]:
        """Reduce v against the basis; returns (residual, combo mask)."""
        combo = 0
        for r, c, p in zip(self.rows, self.combos, self.pivots):
            if (v >> p) & 1:
                v ^= r
                combo ^= c
        return v, combo

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    def solve(self, v: int) -> int | None:
        """Mask over inserted generators summing to v, or None."""
        res, combo = self.reduce(v)
        return combo if res == 0 else None


def basis_of(gens: Iterable[int]) -> RowBasis:
    b = RowBasis()
    for g in gens:
        b.insert(g)
    return b


def rank(gens: Iterable[int]) -> int:
    return basis_of(gens).rank


def in_span(gens: Sequence[int], v: int) -> bool:
    return basis_of(gens).contains(v)


def solve(gens: Sequence[int], v: int) -> list[int] | None:
    """Indices of a subset of gens summing to v, or None."""
    combo = basis_of(gens).solve(v)
    if combo is None:
        return None
    return [i for i in range(len(gens)) if (combo >> i) & 1]


def kernel_basis(gens: Sequence[int]) -> list[int]:
    """Basis (as masks over generator indices) of combinations summing to 0."""
    b = RowBasis()
    out = []
    for i, g in enumerate(gens):
        res, combo = b.reduce(g)
        combo |= 1 << i
        if res == 0:
            out.append(combo)
        else:
            b.rows.append(res)
            b.combos.append(combo)
            b.pivots.append(res.bit_length() - 1)
    return out


def min_weight_solution(gens: Sequence[int], target: int,
                        max_kernel_dim: int = 22) -> list[int] | None:
    """Minimum-cardinality subset of gens summing to target.

    Enumerates the affine solution space (particular + kernel), so the
    kernel dimension must stay small; decoder lift stars satisfy this.
    Returns generator indices, or None if insolvable.
    """
    sol = solve(gens, target)
    if sol is None:
        return None
    ker = kernel_basis(gens)
    if len(ker) > max_kernel_dim:
        raise ValueError(f"kernel dimension {len(ker)} too large to enumerate")
    part = 0
    for i in sol:
        part |= 1 << i
    best = part
    best_w = weight(part)
    # Gray-code walk over the kernel span
    cur = part
    state = 0
    for s in range(1, 1 << len(ker)):
        g = s ^ (s >> 1)
        flip = (g ^ state).bit_length() - 1
        state = g
        cur ^= ker[flip]
        w = weight(cur)
        if w < best_w:
            best, best_w = cur, w
    return [i for i in range(len(gens)) if (best >> i) & 1]
