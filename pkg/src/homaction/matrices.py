"""Exact integer matrices.

Small immutable matrices over the integers, used for homology
representations of graph automorphisms and for torsion searches in
GL(2,Z).  Everything is plain Python int arithmetic, so results are
exact at any size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

__all__ = ["IntMatrix"]


@dataclass(frozen=True)
class IntMatrix:
    """A square integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.rows)
        for r in self.rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: {n} rows, row of length {len(r)}")

    @staticmethod
    def from_rows(rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(int(x) for x in r) for r in rows))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "IntMatrix") -> "IntMatrix":
        n = self.dimension
        if other.dimension != n:
            raise ValueError("dimension mismatch")
        a, b = self.rows, other.rows
        cols = tuple(zip(*b))
        return IntMatrix(
            tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.rows))

    def __pow__(self, k: int) -> "IntMatrix":
        if k < 0:
            raise ValueError("negative powers not supported")
        result = IntMatrix.identity(self.dimension)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.dimension))

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination; exact."""
        n = self.dimension
        if n == 0:
            return 1
        m = [list(r) for r in self.rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_identity(self) -> bool:
        return self == IntMatrix.identity(self.dimension)

    def multiplicative_order(self, cap: int = 1000) -> int | None:
        """Smallest k >= 1 with self**k == I, or None if none up to cap."""
        ident = IntMatrix.identity(self.dimension)
        p = self
        for k in range(1, cap + 1):
            if p == ident:
                return k
            p = p * self
        return None

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows) + "]"
