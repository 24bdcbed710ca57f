"""C-set recursions: the index pairs that label correction terms.

Each entry of a level is an :class:`IndexPair`: a row pair ``(Z, Z')`` and
a column pair ``(W, W')`` with a sign.  The first minor of a product term is
``[Z, W]`` and the second ``[Z', W']``; primed indices are complements in the
relevant ambient alphabet and need not be sorted.

The recursion runs the column tower first (pruning with ``phi``: pairs where
``m`` precedes ``m + 1``), then the row tower (pruning with ``psi``: pairs
where ``m + 1`` precedes ``m``).  Pruned pairs drop out of the carry from
level ``i - 1`` to level ``i``; every level is also pushed through the
current transposition.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .towers import Tower, apply_transposition, standard_col_tower, standard_row_tower

__all__ = [
    "IndexPair",
    "CSetFamily",
    "precedes",
    "phi_subset",
    "psi_subset",
    "csets_column",
    "csets_rowcol",
]


@dataclass(frozen=True)
class IndexPair:
    rows: tuple[int, ...] = ()
    rows_c: tuple[int, ...] = ()
    cols: tuple[int, ...] = ()
    cols_c: tuple[int, ...] = ()
    sign: int = 1

    def row_concat(self) -> tuple[int, ...]:
        return self.rows + self.rows_c

    def col_concat(self) -> tuple[int, ...]:
        return self.cols + self.cols_c

    def act_rows(self, sigma: tuple[int, int]) -> "IndexPair":
        return replace(
            self,
            rows=apply_transposition(sigma, self.rows),
            rows_c=apply_transposition(sigma, self.rows_c),
        )

    def act_cols(self, sigma: tuple[int, int]) -> "IndexPair":
        return replace(
            self,
            cols=apply_transposition(sigma, self.cols),
            cols_c=apply_transposition(sigma, self.cols_c),
        )

    def label(self) -> str:
        """Table notation ``(Z,W)(Z',W')``, signed when the sign is -1."""
        f = lambda t: "".join(map(str, t)) if all(x < 10 for x in t) else " ".join(map(str, t))  # noqa: E731
        body = f"({f(self.rows)},{f(self.cols)})({f(self.rows_c)},{f(self.cols_c)})"
        return ("-" if self.sign < 0 else "+") + body


@dataclass
class CSetFamily:
    """Levels ``i -> list of IndexPair`` (multisets kept as lists, in table order)."""

    levels: dict[int, list[IndexPair]]
    history: list[tuple[str, tuple[int, int] | None, dict[int, list[IndexPair]], dict[int, list[IndexPair]]]]

    def level(self, i: int) -> list[IndexPair]:
        return self.levels.get(i, [])

    def max_level(self) -> int:
        return max((i for i, v in self.levels.items() if v), default=0)

    def __iter__(self):
        for i in sorted(self.levels):
            for p in self.levels[i]:
                yield i, p


def precedes(seq: Sequence[int], a: int, b: int) -> bool:
    """True iff ``a`` occurs before ``b`` in ``seq`` (both must occur)."""
    seq = tuple(seq)
    try:
        return seq.index(a) < seq.index(b)
    except ValueError:
        raise ValueError(f"{a} and {b} must both occur in {seq}") from None


def phi_subset(level: Sequence[IndexPair], z: int, on: str = "cols") -> list[IndexPair]:
    """Pairs whose concatenation (first, second) has z before z+1."""
    get = IndexPair.col_concat if on == "cols" else IndexPair.row_concat
    return [p for p in level if precedes(get(p), z, z + 1)]


def psi_subset(level: Sequence[IndexPair], m: int, on: str = "rows") -> list[IndexPair]:
    """Pairs whose concatenation has m+1 before m."""
    get = IndexPair.row_concat if on == "rows" else IndexPair.col_concat
    return [p for p in level if precedes(get(p), m + 1, m)]


def _complement(index, ambient) -> tuple[int, ...]:
    return tuple(x for x in sorted(ambient) if x not in index)


def _column_phase(levels, tower: Tower, history, signed: bool):
    for stage, sigma in enumerate(tower.ascending_steps(), start=1):
        a, b = sigma
        new: dict[int, list[IndexPair]] = {}
        pruned: dict[int, list[IndexPair]] = {}
        for i in range(0, stage + 1):
            carried = []
            for p in levels.get(i - 1, []):
                if precedes(p.col_concat(), a, b):
                    pruned.setdefault(i, []).append(p)
                else:
                    carried.append(replace(p, sign=(-1) ** i) if signed else p)
            moved = [p.act_cols(sigma) for p in levels.get(i, [])]
            if carried or moved:
                new[i] = carried + moved
        history.append(("column", sigma, new, pruned))
        levels = new
    return levels


def _row_phase(levels, tower: Tower, history):
    for stage, sigma in enumerate(tower.ascending_steps(), start=1):
        a, b = sigma
        top = max(levels, default=0) + 1
        new: dict[int, list[IndexPair]] = {}
        pruned: dict[int, list[IndexPair]] = {}
        for i in range(0, top + 1):
            carried = []
            for p in levels.get(i - 1, []):
                if precedes(p.row_concat(), b, a):
                    pruned.setdefault(i, []).append(p)
                else:
                    carried.append(p)
            moved = [p.act_rows(sigma) for p in levels.get(i, [])]
            if carried or moved:
                new[i] = carried + moved
        history.append(("row", sigma, new, pruned))
        levels = new
    return levels


def csets_column(I: Sequence[int], ambient: Sequence[int] | int, r: int | None = None) -> CSetFamily:
    """Column-only C-sets of the column index ``I`` inside ``ambient``.

    Entries carry only the column pair ``(R, R')``; ``r`` is accepted for
    symmetry with the signed row-and-column variant and is unused.
    """
    if isinstance(ambient, int):
        ambient = range(1, ambient + 1)
    tower = standard_col_tower(I, ambient)
    base = tower.base
    levels = {0: [IndexPair(cols=base, cols_c=_complement(base, tower.ambient))]}
    history = [("base", None, levels, {})]
    levels = _column_phase(levels, tower, history, signed=False)
    return CSetFamily(levels, history)


def csets_rowcol(
    I: Sequence[int],
    J: Sequence[int],
    row_ambient: Sequence[int] | int,
    col_ambient: Sequence[int] | int,
) -> CSetFamily:
    """Signed C-sets for row index ``I`` and column index ``J``.

    Column phase first (sign (-1)^level), then the row phase, which keeps
    signs.  Either index may be empty.
    """
    if isinstance(row_ambient, int):
        row_ambient = range(1, row_ambient + 1)
    if isinstance(col_ambient, int):
        col_ambient = range(1, col_ambient + 1)
    row_ambient = tuple(sorted(row_ambient))
    col_ambient = tuple(sorted(col_ambient))
    rtower = standard_row_tower(I, row_ambient)
    ctower = standard_col_tower(J, col_ambient)
    base = IndexPair(
        rows=rtower.base,
        rows_c=_complement(rtower.base, row_ambient),
        cols=ctower.base,
        cols_c=_complement(ctower.base, col_ambient),
    )
    levels = {0: [base]}
    history = [("base", None, levels, {})]
    levels = _column_phase(levels, ctower, history, signed=True)
    levels = _row_phase(levels, rtower, history)
    return CSetFamily(levels, history)
