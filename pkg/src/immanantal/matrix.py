"""Dense square matrices over arbitrary-precision integers.

All matrices are immutable; every operation returns a new value. Row and
column indices are 0-based throughout the matrix layer (graph vertex labels
are 1-based only in file formats and CLI output).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """A k-by-k integer matrix stored as a tuple of row tuples.

    The 0-by-0 matrix is a legal value; its determinant is 1 by the empty
    product convention, which the rest of the library relies on.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.rows)
        for i, row in enumerate(self.rows):
            if len(row) != k:
                raise ValueError(f"row {i} has length {len(row)}, expected {k}")
            for j, v in enumerate(row):
                if not isinstance(v, int):
                    raise TypeError(f"entry ({i},{j}) is {type(v).__name__}, expected int")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> IntMatrix:
        return cls(tuple(tuple(int(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, k: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k)))

    @classmethod
    def zeros(cls, k: int) -> IntMatrix:
        return cls(tuple((0,) * k for _ in range(k)))

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> IntMatrix:
        k = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(k)) for i in range(k)))

    @property
    def k(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def trace(self) -> int:
        return sum(self.rows[i][i] for i in range(self.k))

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i] for i in range(self.k))

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def is_symmetric(self) -> bool:
        r = self.rows
        return all(r[i][j] == r[j][i] for i in range(self.k) for j in range(i + 1, self.k))

    def minor(self, deleted_rows: Iterable[int], deleted_cols: Iterable[int]) -> IntMatrix:
        """Submatrix with the given 0-based rows and columns removed."""
        dr = set(deleted_rows)
        dc = set(deleted_cols)
        for i in dr | dc:
            if not 0 <= i < self.k:
                raise IndexError(f"minor index {i} out of range for size {self.k}")
        return IntMatrix(
            tuple(
                tuple(v for j, v in enumerate(row) if j not in dc)
                for i, row in enumerate(self.rows)
                if i not in dr
            )
        )

    def principal_minor(self, i: int) -> IntMatrix:
        """Submatrix with row i and column i removed."""
        return self.minor((i,), (i,))

    def with_entry(self, i: int, j: int, value: int) -> IntMatrix:
        if self.rows[i][j] == value:
            return self
        row = self.rows[i]
        new_row = row[:j] + (value,) + row[j + 1 :]
        return IntMatrix(self.rows[:i] + (new_row,) + self.rows[i + 1 :])

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")
        return IntMatrix(
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.k != other.k:
            raise ValueError(f"size mismatch: {self.k} vs {other.k}")
        return IntMatrix(
            tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.rows, other.rows))
        )

    def __rmul__(self, c: int) -> IntMatrix:
        if not isinstance(c, int):
            return NotImplemented
        return IntMatrix(tuple(tuple(c * v for v in row) for row in self.rows))

    def __neg__(self) -> IntMatrix:
        return -1 * self

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def max_abs_entry(self) -> int:
        return max((abs(v) for row in self.rows for v in row), default=0)

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(str(v) for v in row) + "]" for row in self.rows)
