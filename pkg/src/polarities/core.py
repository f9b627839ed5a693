"""Finite polarities, bitset subsets and the Galois maps between them.

Subsets of a carrier ``{0, ..., n-1}`` are Python ints used as bitsets:
bit ``i`` set means element ``i`` is a member.  A relation is stored as a
tuple of row masks, one per domain element, each a bitset over the
codomain.  Everything here is immutable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from ._config import check_cap
from .errors import DimensionError

LOWER = "lower"
UPPER = "upper"


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for i in elements:
        m |= 1 << i
    return m


def members(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def is_subset(x: int, y: int) -> bool:
    return x & ~y == 0


def check_subset(mask: int, n: int, what: str = "subset") -> None:
    if mask < 0 or mask >> n:
        raise DimensionError(f"{what} {mask:#b} does not fit a carrier of size {n}")


def _transpose(rows: Sequence[int], n_cols: int) -> tuple[int, ...]:
    cols = [0] * n_cols
    for r, row in enumerate(rows):
        bit = 1 << r
        for c in members(row):
            cols[c] |= bit
    return tuple(cols)


@dataclass(frozen=True)
class Relation:
    """A binary relation between ``range(n_rows)`` and ``range(n_cols)``.

    ``rows[r]`` is the forward image of ``r`` as a bitset over the columns.
    """

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n_rows < 0 or self.n_cols < 0:
            raise DimensionError("negative relation shape")
        if len(self.rows) != self.n_rows:
            raise DimensionError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        limit = full_mask(self.n_cols)
        for row in self.rows:
            if row & ~limit:
                raise DimensionError(f"row {row:#b} exceeds {self.n_cols} columns")

    # constructors

    @classmethod
    def empty(cls, n_rows: int, n_cols: int) -> Relation:
        return cls(n_rows, n_cols, (0,) * n_rows)

    @classmethod
    def full(cls, n_rows: int, n_cols: int) -> Relation:
        return cls(n_rows, n_cols, (full_mask(n_cols),) * n_rows)

    @classmethod
    def from_pairs(cls, n_rows: int, n_cols: int, pairs: Iterable[tuple[int, int]]) -> Relation:
        rows = [0] * n_rows
        for r, c in pairs:
            if not (0 <= r < n_rows and 0 <= c < n_cols):
                raise DimensionError(f"pair {(r, c)} outside {n_rows}x{n_cols}")
            rows[r] |= 1 << c
        return cls(n_rows, n_cols, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[int]], n_cols: int | None = None) -> Relation:
        """Build from a 0/1 nested sequence (lists, tuples or a numpy array)."""
        matrix = [list(row) for row in matrix]
        if n_cols is None:
            n_cols = len(matrix[0]) if matrix else 0
        rows = []
        for row in matrix:
            if len(row) != n_cols:
                raise DimensionError(f"ragged matrix: row of length {len(row)}, expected {n_cols}")
            rows.append(mask_of(c for c, v in enumerate(row) if v))
        return cls(len(rows), n_cols, tuple(rows))

    @classmethod
    def from_columns(cls, n_rows: int, cols: Sequence[int]) -> Relation:
        for col in cols:
            check_subset(col, n_rows, "column")
        return cls(n_rows, len(cols), _transpose(cols, n_rows))

    @classmethod
    def from_bits(cls, n_rows: int, n_cols: int, bits: int) -> Relation:
        """Inverse of :attr:`bits`."""
        check_subset(bits, n_rows * n_cols, "relation bits")
        row = full_mask(n_cols)
        return cls(n_rows, n_cols, tuple((bits >> (r * n_cols)) & row for r in range(n_rows)))

    # views

    @cached_property
    def cols(self) -> tuple[int, ...]:
        return _transpose(self.rows, self.n_cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.n_rows, self.n_cols)

    @cached_property
    def bits(self) -> int:
        """Row-major bitset: pair ``(r, c)`` is bit ``r * n_cols + c``."""
        out = 0
        for r, row in enumerate(self.rows):
            out |= row << (r * self.n_cols)
        return out

    def pairs(self) -> list[tuple[int, int]]:
        return [(r, c) for r, row in enumerate(self.rows) for c in members(row)]

    def to_matrix(self) -> list[list[int]]:
        return [[(row >> c) & 1 for c in range(self.n_cols)] for row in self.rows]

    def __contains__(self, pair) -> bool:
        r, c = pair
        return bool((self.rows[r] >> c) & 1)

    def __len__(self) -> int:
        return sum(bin(row).count("1") for row in self.rows)

    @property
    def T(self) -> Relation:
        return Relation(self.n_cols, self.n_rows, self.cols)

    # lattice of relations

    def _same_shape(self, other: Relation) -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")

    def __and__(self, other: Relation) -> Relation:
        self._same_shape(other)
        return Relation(self.n_rows, self.n_cols, tuple(a & b for a, b in zip(self.rows, other.rows)))

    def __or__(self, other: Relation) -> Relation:
        self._same_shape(other)
        return Relation(self.n_rows, self.n_cols, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def issubset(self, other: Relation) -> bool:
        self._same_shape(other)
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    # Galois maps

    def up(self, x: int) -> int:
        """Common forward image of the rows in ``x``; full column set when ``x`` is empty."""
        check_subset(x, self.n_rows)
        if x.bit_count() > self.n_cols:
            return sum(1 << c for c, col in enumerate(self.cols) if x & ~col == 0)
        out = full_mask(self.n_cols)
        rows = self.rows
        for r in members(x):
            out &= rows[r]
        return out

    def down(self, y: int) -> int:
        """Rows related to every column in ``y``; all rows when ``y`` is empty."""
        check_subset(y, self.n_cols)
        if y.bit_count() > self.n_rows:
            return sum(1 << r for r, row in enumerate(self.rows) if y & ~row == 0)
        out = full_mask(self.n_rows)
        cols = self.cols
        for c in members(y):
            out &= cols[c]
        return out

    def __repr__(self) -> str:
        body = " ".join(format(row, f"0{self.n_cols}b")[::-1] if self.n_cols else "-" for row in self.rows)
        return f"Relation({self.n_rows}x{self.n_cols}: {body or '-'})"


def _default_labels(prefix: str, n: int) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(n))


@dataclass(frozen=True)
class Polarity:
    """A polarity (formal context): lower carrier, upper carrier and incidence.

    Equality and hashing look at the incidence only; labels are for display.
    """

    incidence: Relation
    lower_labels: tuple[str, ...] | None = field(default=None, compare=False)
    upper_labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        for labels, n, side in (
            (self.lower_labels, self.incidence.n_rows, LOWER),
            (self.upper_labels, self.incidence.n_cols, UPPER),
        ):
            if labels is None:
                continue
            if len(labels) != n:
                raise DimensionError(f"{len(labels)} {side} labels for {n} elements")
            if len(set(labels)) != n:
                raise ValueError(f"duplicate {side} labels")

    @classmethod
    def from_pairs(cls, lower_size, upper_size, pairs, lower_labels=None, upper_labels=None) -> Polarity:
        return cls(
            Relation.from_pairs(lower_size, upper_size, pairs),
            tuple(lower_labels) if lower_labels is not None else None,
            tuple(upper_labels) if upper_labels is not None else None,
        )

    @classmethod
    def from_matrix(cls, matrix, n_cols=None, lower_labels=None, upper_labels=None) -> Polarity:
        return cls(
            Relation.from_matrix(matrix, n_cols),
            tuple(lower_labels) if lower_labels is not None else None,
            tuple(upper_labels) if upper_labels is not None else None,
        )

    @property
    def lower_size(self) -> int:
        return self.incidence.n_rows

    @property
    def upper_size(self) -> int:
        return self.incidence.n_cols

    @property
    def lower_names(self) -> tuple[str, ...]:
        return self.lower_labels or _default_labels("a", self.lower_size)

    @property
    def upper_names(self) -> tuple[str, ...]:
        return self.upper_labels or _default_labels("x", self.upper_size)

    def size(self, side: str) -> int:
        return self.lower_size if side == LOWER else self.upper_size

    def up(self, x: int) -> int:
        return self.incidence.up(x)

    def down(self, y: int) -> int:
        return self.incidence.down(y)

    def cl_lower(self, x: int) -> int:
        return self.incidence.down(self.incidence.up(x))

    def cl_upper(self, y: int) -> int:
        return self.incidence.up(self.incidence.down(y))

    def closure(self, side: str):
        return self.cl_lower if side == LOWER else self.cl_upper

    def __repr__(self) -> str:
        return f"Polarity({self.lower_size}x{self.upper_size}: {self.incidence!r})"


def galois_up(P: Polarity, x: int) -> int:
    return P.up(x)


def galois_down(P: Polarity, y: int) -> int:
    return P.down(y)


def cl_lower(P: Polarity, x: int) -> int:
    return P.cl_lower(x)


def cl_upper(P: Polarity, y: int) -> int:
    return P.cl_upper(y)


@dataclass(frozen=True)
class ClosedFamily:
    """The Galois-closed subsets of one side, sorted by bitset value."""

    side: str
    size: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask) -> bool:
        return mask in self.index

    @cached_property
    def index(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.members)}


def next_closure_sets(closure, n: int) -> Iterator[int]:
    """Enumerate the fixpoints of ``closure`` on subsets of ``range(n)``.

    Ganter's NextClosure with bit ``n-1`` as the most significant element, so
    the lectic order coincides with increasing integer value of the bitset.
    """
    current = closure(0)
    while True:
        yield current
        for i in range(n):
            bit = 1 << i
            if current & bit:
                continue
            high = ~((bit << 1) - 1)
            candidate = closure((current & high) | bit)
            if (candidate ^ current) & high == 0:
                current = candidate
                break
        else:
            return


def closed_sets(P: Polarity, side: str = LOWER) -> ClosedFamily:
    n = P.size(side)
    check_cap("closed_sets", n, f"{side} carrier")
    return ClosedFamily(side, n, tuple(next_closure_sets(P.closure(side), n)))


def relation_from_singleton_table(table: Sequence[int], lower_size: int, cols: int | None = None) -> Relation:
    """The relation relating ``a`` to ``beta`` exactly when ``a`` is in ``table[beta]``.

    ``table`` lists the values of an antitone map on the singletons of the
    codomain, as lower-side bitsets.
    """
    if cols is not None and len(table) != cols:
        raise DimensionError(f"table has {len(table)} entries, expected {cols}")
    return Relation.from_columns(lower_size, list(table))
