"""Quantum row/column minors and the operations on minor labels."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .laurent import LaurentPoly, neg_q_power
from .tensor import Tensor

__all__ = [
    "MinorSpec",
    "row_minor",
    "col_minor",
    "minor_tensor",
    "inversion_length",
    "sort_minor",
    "antipode_image",
    "parse_minor",
    "parse_product",
    "relabel",
    "minors_of_size",
    "minors_of_size_all",
]

FLAVORS = ("row", "column", "abstract")


def _distinct(seq: Sequence[int], what: str) -> tuple[int, ...]:
    seq = tuple(int(x) for x in seq)
    if len(set(seq)) != len(seq):
        raise ValueError(f"repeated entries in {what} {seq}")
    if any(x < 1 for x in seq):
        raise ValueError(f"indices must be >= 1, got {seq}")
    return seq


@dataclass(frozen=True, order=True)
class MinorSpec:
    """A quantum minor [rows, cols].

    ``flavor`` records which free-algebra representative is meant ("row",
    "column") or the class modulo the Manin ideal ("abstract").  Equality
    and ordering look at ``(rows, cols)`` first, so sorting a list of specs
    is lexicographic on the index pair.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    flavor: str = "abstract"

    def __post_init__(self):
        rows = _distinct(self.rows, "rows")
        cols = _distinct(self.cols, "cols")
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"minor needs |rows| = |cols| >= 1, got {rows}, {cols}")
        if self.flavor not in FLAVORS:
            raise ValueError(f"unknown flavor {self.flavor!r}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.rows, self.cols)

    def is_sorted(self) -> bool:
        return list(self.rows) == sorted(self.rows) and list(self.cols) == sorted(self.cols)

    def abstract(self) -> "MinorSpec":
        return MinorSpec(self.rows, self.cols, "abstract")

    def tensor(self) -> Tensor:
        if self.flavor == "column":
            return col_minor(self.rows, self.cols)
        return row_minor(self.rows, self.cols)

    def __str__(self) -> str:
        return "[" + " ".join(map(str, self.rows)) + "|" + " ".join(map(str, self.cols)) + "]"

    def to_latex(self) -> str:
        sep = "" if max(self.rows + self.cols) < 10 else " "
        return "[" + sep.join(map(str, self.rows)) + "," + sep.join(map(str, self.cols)) + "]"


def inversion_length(S: Sequence[int]) -> int:
    """Number of inversions of ``S`` (length of the permutation sorting it)."""
    S = _distinct(S, "index")
    return sum(1 for a, b in itertools.combinations(S, 2) if a > b)


def _expansion(fixed: tuple[int, ...], other: tuple[int, ...], fixed_is_row: bool) -> Tensor:
    target = tuple(sorted(other))
    terms = {}
    for values in itertools.permutations(target):
        # l(sigma): inversions of the value sequence against sorted target
        c = neg_q_power(-inversion_length(values))
        if fixed_is_row:
            w = tuple(zip(fixed, values))
        else:
            w = tuple(zip(values, fixed))
        terms[w] = c
    return Tensor(terms)


def row_minor(I: Sequence[int], J: Sequence[int]) -> Tensor:
    """Row expansion sum_sigma (-q)^-l(sigma) a_{i1 sigma(i1)} ... a_{ir sigma(ir)}.

    Letters appear with rows in the given order of ``I``; ``J`` is used as a
    set.  Passing an unsorted ``I`` gives the representative of
    (-q)^-l(I) [I_ord, J].
    """
    I = _distinct(I, "rows")
    J = _distinct(J, "cols")
    if len(I) != len(J) or not I:
        raise ValueError(f"size mismatch: {I} vs {J}")
    return _expansion(I, J, True)


def col_minor(I: Sequence[int], J: Sequence[int]) -> Tensor:
    """Column expansion; letters appear with columns in the order of ``J``."""
    I = _distinct(I, "rows")
    J = _distinct(J, "cols")
    if len(I) != len(J) or not I:
        raise ValueError(f"size mismatch: {I} vs {J}")
    return _expansion(J, I, False)


def minor_tensor(I: Sequence[int], J: Sequence[int]) -> Tensor:
    """Representative of [I, J] for arbitrary (possibly unsorted) I and J."""
    coef, m = sort_minor(MinorSpec(tuple(I), tuple(J)))
    return row_minor(m.rows, m.cols).scale(coef)


def sort_minor(m: MinorSpec) -> tuple[LaurentPoly, MinorSpec]:
    """Return ``(c, m_sorted)`` with ``[I, J] = c [I_ord, J_ord]`` modulo the Manin ideal."""
    c = neg_q_power(-inversion_length(m.rows) - inversion_length(m.cols))
    return c, MinorSpec(tuple(sorted(m.rows)), tuple(sorted(m.cols)), m.flavor)


def antipode_image(m: MinorSpec, n: int) -> tuple[LaurentPoly, MinorSpec]:
    """Image of a sorted minor under S([I,J]) = (-q)^(sum J - sum I) [I^c, J^c]."""
    if not m.is_sorted():
        raise ValueError(f"antipode_image needs sorted indices, got {m}")
    if max(m.rows + m.cols) > n:
        raise ValueError(f"{m} does not fit in n={n}")
    if m.size >= n:
        raise ValueError("full-size minor has empty complement")
    rows = tuple(x for x in range(1, n + 1) if x not in m.rows)
    cols = tuple(x for x in range(1, n + 1) if x not in m.cols)
    return neg_q_power(sum(m.cols) - sum(m.rows)), MinorSpec(rows, cols, m.flavor)


def relabel(m: MinorSpec, row_map: dict[int, int], col_map: dict[int, int]) -> MinorSpec:
    return MinorSpec(tuple(row_map[x] for x in m.rows), tuple(col_map[x] for x in m.cols), m.flavor)


_MINOR = re.compile(r"\[\s*([\d\s,]*?)\s*\|\s*([\d\s,]*?)\s*\]")


def _parse_indices(text: str) -> tuple[int, ...]:
    text = text.strip()
    if "," in text or " " in text:
        return tuple(int(x) for x in re.split(r"[\s,]+", text) if x)
    # compact form "34" is read digit by digit
    return tuple(int(ch) for ch in text)


def parse_minor(text: str, flavor: str = "abstract") -> MinorSpec:
    """Parse ``"[3 4|1 3]"`` (whitespace separated, 1-based)."""
    m = _MINOR.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"cannot parse minor {text!r}; expected e.g. '[3 4|1 3]'")
    return MinorSpec(_parse_indices(m.group(1)), _parse_indices(m.group(2)), flavor)


def parse_product(text: str) -> list[MinorSpec]:
    """Parse a product such as ``"[3 4|1 3][1 2|2 4]"``."""
    found = [parse_minor(m.group(0)) for m in _MINOR.finditer(text)]
    if not found or "".join(m.group(0) for m in _MINOR.finditer(text)).replace(" ", "") != text.replace(" ", ""):
        raise ValueError(f"cannot parse minor product {text!r}")
    return found


def minors_of_size(n: int, size: int) -> list[MinorSpec]:
    """All sorted minors [I, J] with |I| = |J| = size inside 1..n, lexicographic."""
    subsets = list(itertools.combinations(range(1, n + 1), size))
    return [MinorSpec(I, J) for I in subsets for J in subsets]


def minors_of_size_all(n: int, max_size: int, min_size: int = 1) -> list[MinorSpec]:
    ms = [m for s in range(min_size, max_size + 1) for m in minors_of_size(n, s)]
    return sorted(ms, key=lambda m: m.key)
