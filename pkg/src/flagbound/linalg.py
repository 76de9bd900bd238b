"""Exact rational linear algebra: sparse square matrices and fraction-free rank."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Number = int | Fraction


class MatrixElement:
    """Sparse square matrix with exact rational entries, 0-based indices.

    Instances are treated as immutable.
    """

    __slots__ = ("size", "_entries")

    def __init__(self, size: int, entries: Mapping[tuple[int, int], Number] | None = None):
        self.size = size
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in (entries or {}).items():
            if not (0 <= i < size and 0 <= j < size):
                raise IndexError(f"entry ({i}, {j}) outside a {size}x{size} matrix")
            if v:
                clean[(i, j)] = Fraction(v)
        self._entries = clean

    @classmethod
    def unit(cls, size: int, i: int, j: int) -> "MatrixElement":
        """The matrix unit E_ij, 1-based as in the usual notation."""
        return cls(size, {(i - 1, j - 1): 1})

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Number]]) -> "MatrixElement":
        size = len(rows)
        return cls(size, {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row)})

    @property
    def entries(self) -> Mapping[tuple[int, int], Fraction]:
        return self._entries

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        return self._entries.get(ij, Fraction(0))

    def _check(self, other: "MatrixElement") -> None:
        if not isinstance(other, MatrixElement):
            raise TypeError(f"expected MatrixElement, got {type(other).__name__}")
        if other.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def __add__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) + v
        return MatrixElement(self.size, out)

    def __neg__(self) -> "MatrixElement":
        return MatrixElement(self.size, {k: -v for k, v in self._entries.items()})

    def __sub__(self, other: "MatrixElement") -> "MatrixElement":
        return self + (-other)

    def scale(self, c: Number) -> "MatrixElement":
        return MatrixElement(self.size, {k: c * v for k, v in self._entries.items()})

    def __rmul__(self, c: Number) -> "MatrixElement":
        return self.scale(c)

    def __matmul__(self, other: "MatrixElement") -> "MatrixElement":
        self._check(other)
        by_row: dict[int, list[tuple[int, Fraction]]] = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], Fraction] = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + a * b
        return MatrixElement(self.size, out)

    def transpose(self) -> "MatrixElement":
        return MatrixElement(self.size, {(j, i): v for (i, j), v in self._entries.items()})

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self._entries.items() if i == j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._entries

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self._entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixElement):
            return NotImplemented
        return self.size == other.size and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.size, frozenset(self._entries.items())))

    def to_rows(self) -> list[list[Fraction]]:
        rows = [[Fraction(0)] * self.size for _ in range(self.size)]
        for (i, j), v in self._entries.items():
            rows[i][j] = v
        return rows

    def to_json(self) -> list[list[str]]:
        return [[f"{v.numerator}/{v.denominator}" for v in row] for row in self.to_rows()]

    def __repr__(self) -> str:
        items = ", ".join(f"({i + 1},{j + 1}): {v}" for (i, j), v in sorted(self._entries.items()))
        return f"MatrixElement({self.size}, {{{items}}})"


def bracket(x: MatrixElement, y: MatrixElement) -> MatrixElement:
    """Commutator XY - YX."""
    return x @ y - y @ x


def _integer_rows(rows: Iterable[Sequence[Number]]) -> list[list[int]]:
    out = []
    for row in rows:
        fr = [Fraction(v) for v in row]
        if not any(fr):
            continue
        den = math.lcm(*(v.denominator for v in fr))
        out.append([int(v * den) for v in fr])
    return out


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank over Q by Bareiss fraction-free elimination."""
    m = _integer_rows(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][c]
        for i in range(r + 1, len(m)):
            mic = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, ncols):
                row_i[j] = (pv * row_i[j] - mic * row_r[j]) // prev
            row_i[c] = 0
        prev = pv
        r += 1
        if r == len(m):
            break
    return r


def columns(m: MatrixElement, indices: Iterable[int]) -> list[list[Fraction]]:
    """The listed columns of ``m`` (0-based), each returned as a list."""
    rows = m.to_rows()
    return [[rows[i][j] for i in range(m.size)] for j in indices]


def column_space_contains(space: Sequence[Sequence[Number]], vectors: Sequence[Sequence[Number]]) -> bool:
    """Whether every vector lies in the span of ``space`` (vectors given as lists)."""
    base = rank(space)
    return rank(list(space) + list(vectors)) == base
