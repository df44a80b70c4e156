"""Symmetric latin squares and the color-matrix algebra.

A :class:`ColorMatrix` is a symmetric ``n x n`` integer array over
``{0, 1..n}``; ``0`` marks a blank cell and is never treated as a color.
Matrices are immutable: every operation returns a new matrix.  Public
indices are 1-based.
"""

from __future__ import annotations

import hashlib
from typing import Iterable

import numpy as np

from .instance import DerivedSets, Pair, ParseError


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=np.int64)
    a.setflags(write=False)
    return a


class ColorMatrix:
    """Symmetric matrix of cell colors, ``0`` for blank."""

    magic = "CMAT"

    def __init__(self, entries):
        a = _frozen(entries)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        n = a.shape[0]
        if a.size and (a.min() < 0 or a.max() > n):
            raise ValueError(f"entries must lie in 0..{n}")
        if not np.array_equal(a, a.T):
            raise ValueError("color matrix must be symmetric")
        self.entries = a

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij: Pair) -> int:
        i, j = ij
        return int(self.entries[i - 1, j - 1])

    def row(self, i: int) -> np.ndarray:
        return self.entries[i - 1]

    def col(self, j: int) -> np.ndarray:
        return self.entries[:, j - 1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColorMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash(self.entries.tobytes())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.entries.tolist()})"

    def to_text(self) -> str:
        rows = [" ".join(str(int(v)) for v in r) for r in self.entries]
        return "\n".join([f"{self.magic} {self.n}", *rows]) + "\n"

    def digest(self) -> str:
        """Short SHA-256 digest of the text form."""
        return hashlib.sha256(self.to_text().encode()).hexdigest()[:16]

    def as_color_matrix(self) -> "ColorMatrix":
        return ColorMatrix(self.entries)


class SymmetricLatinSquare(ColorMatrix):
    """Symmetric ``n x n`` array whose rows and columns permute ``1..n``."""

    magic = "LATIN"

    def __init__(self, entries):
        super().__init__(entries)
        problems = latin_problems(self.entries)
        if problems:
            raise ValueError("not a symmetric latin square: " + "; ".join(problems))


def latin_problems(a: np.ndarray) -> list[str]:
    """Describe every row, column or symmetry failure of ``a``."""
    a = np.asarray(a)
    n = a.shape[0]
    want = np.arange(1, n + 1)
    out = []
    for i in range(n):
        if not np.array_equal(np.sort(a[i]), want):
            out.append(f"row {i + 1} is not a permutation")
        if not np.array_equal(np.sort(a[:, i]), want):
            out.append(f"column {i + 1} is not a permutation")
    if not np.array_equal(a, a.T):
        out.append("not symmetric")
    return out


def is_symmetric_latin(a) -> bool:
    a = np.asarray(a)
    return a.ndim == 2 and a.shape[0] == a.shape[1] and not latin_problems(a)


def cyclic_symmetric_latin(n: int) -> SymmetricLatinSquare:
    """The square with ``(i, j)`` entry ``((i + j - 2) mod n) + 1``."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    idx = np.arange(n)
    return SymmetricLatinSquare((idx[:, None] + idx[None, :]) % n + 1)


def parse_matrix(text: str) -> ColorMatrix:
    """Read the ``LATIN <n>`` or ``CMAT <n>`` text form."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    head = lines[0].split(" ") if lines else []
    if len(head) != 2 or head[0] not in ("LATIN", "CMAT") or not head[1].isdigit():
        raise ParseError(1, "expected 'LATIN <n>' or 'CMAT <n>'")
    n = int(head[1])
    if len(lines) != n + 1:
        raise ParseError(min(len(lines), n + 1) + 1, f"expected {n} matrix rows")
    rows = []
    for k, line in enumerate(lines[1:], start=2):
        vals = line.split(" ")
        if len(vals) != n or not all(v.isdigit() for v in vals):
            raise ParseError(k, f"expected {n} space-separated integers")
        rows.append([int(v) for v in vals])
    cls = SymmetricLatinSquare if head[0] == "LATIN" else ColorMatrix
    try:
        return cls(np.array(rows, dtype=np.int64).reshape(n, n))
    except ValueError as exc:
        raise ParseError(1, str(exc)) from None


def blank_for_instance(square: ColorMatrix, sets: DerivedSets) -> ColorMatrix:
    """Zero the diagonal and both cells of every pair of disjoint cliques."""
    if square.n != sets.n:
        raise ValueError(f"square has order {square.n}, instance has n = {sets.n}")
    a = np.array(square.entries)
    np.fill_diagonal(a, 0)
    for i, j in sets.missing:
        a[i - 1, j - 1] = a[j - 1, i - 1] = 0
    return ColorMatrix(a)


def _check_color(C: ColorMatrix, x: int) -> None:
    if not 1 <= x <= C.n:
        raise ValueError(f"color {x} outside 1..{C.n}")


def occupancy(C: ColorMatrix, axis: str, index: int, x: int) -> int:
    """Count cells equal to color ``x`` in one row (``axis='row'``) or column."""
    _check_color(C, x)
    if not 1 <= index <= C.n:
        raise ValueError(f"{axis} {index} outside 1..{C.n}")
    if axis == "row":
        line = C.row(index)
    elif axis in ("col", "column"):
        line = C.col(index)
    else:
        raise ValueError(f"unknown axis {axis!r}")
    return int(np.count_nonzero(line == x))


def replace_pair(C: ColorMatrix, i: int, j: int, x: int) -> ColorMatrix:
    if i == j:
        raise ValueError("diagonal cells are never recolored")
    _check_color(C, x)
    a = np.array(C.entries)
    a[i - 1, j - 1] = a[j - 1, i - 1] = x
    return ColorMatrix(a)


def swap_colors(C: ColorMatrix, x: int, y: int, protected: Iterable[Pair] = ()) -> ColorMatrix:
    """Exchange colors ``x`` and ``y``; cells of ``protected`` pairs keep ``y``."""
    if x == y:
        raise ValueError("swap needs two distinct colors")
    _check_color(C, x)
    _check_color(C, y)
    a = C.entries
    out = np.array(a)
    out[a == x] = y
    keep = np.zeros_like(a, dtype=bool)
    for l, m in protected:
        keep[l - 1, m - 1] = keep[m - 1, l - 1] = True
    out[(a == y) & ~keep] = x
    return ColorMatrix(out)


def line_colors(C: ColorMatrix, i: int, j: int) -> set[int]:
    """Nonzero colors in row ``i`` together with column ``j``."""
    vals = np.concatenate([C.row(i), C.col(j)])
    return {int(v) for v in vals[vals != 0]}


def fresh_color(C: ColorMatrix, i: int, j: int) -> int | None:
    """Smallest color absent from row ``i`` and column ``j``, else ``None``."""
    used = line_colors(C, i, j)
    for x in range(1, C.n + 1):
        if x not in used:
            return x
    return None
