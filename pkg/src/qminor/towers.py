"""Standard row/column transpositions and towers.

A row tower walks a strictly increasing index down, one adjacent
transposition at a time, to the first ``r`` letters of its ambient
alphabet; a column tower walks it up to the last ``s`` letters.  Ambient
alphabets other than ``1..n`` are handled by relabeling order-isomorphically
onto ``1..m``.

Transposition rules:

* row: first ``p`` with ``i_p - i_{p-1} > 1`` taking ``i_0 = 0``;
  transposition ``(i_p - 1, i_p)``;
* column: rightmost ``p`` with ``j_p < m - s + p``; transposition
  ``(j_p, j_p + 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

__all__ = [
    "Tower",
    "standard_row_transposition",
    "standard_col_transposition",
    "standard_row_tower",
    "standard_col_tower",
    "intr",
    "intc",
    "int_total",
    "apply_transposition",
]


def _increasing(I: Sequence[int]) -> tuple[int, ...]:
    I = tuple(int(x) for x in I)
    if any(a >= b for a, b in zip(I, I[1:])):
        raise ValueError(f"index {I} is not strictly increasing")
    return I


def apply_transposition(sigma: tuple[int, int], seq: Sequence[int]) -> tuple[int, ...]:
    a, b = sigma
    return tuple(b if x == a else a if x == b else x for x in seq)


def standard_row_transposition(I: Sequence[int]) -> tuple[int, int]:
    """Adjacent transposition moving ``I`` one step down its row tower (alphabet 1..n)."""
    I = _increasing(I)
    prev = 0
    for x in I:
        if x - prev > 1:
            return (x - 1, x)
        prev = x
    raise ValueError(f"{I} is already the minimal index")


def standard_col_transposition(J: Sequence[int], n: int) -> tuple[int, int]:
    """Adjacent transposition moving ``J`` one step up its column tower (alphabet 1..n)."""
    J = _increasing(J)
    s = len(J)
    if J and J[-1] > n:
        raise ValueError(f"{J} does not fit in 1..{n}")
    for p in range(s, 0, -1):
        if J[p - 1] < n - s + p:
            x = J[p - 1]
            return (x, x + 1)
    raise ValueError(f"{J} is already the maximal index")


@dataclass(frozen=True)
class Tower:
    """A standard tower ``index = I_N, I_{N-1}, ..., I_0 = base``.

    ``indices[k]`` is ``I_{N-k}``; ``transpositions[k]`` is sigma_{N-k}, the
    transposition exchanging ``I_{N-k}`` and ``I_{N-k-1}``.  Everything is
    expressed in the labels of ``ambient``.
    """

    kind: str
    ambient: tuple[int, ...]
    indices: tuple[tuple[int, ...], ...]
    transpositions: tuple[tuple[int, int], ...]

    @property
    def index(self) -> tuple[int, ...]:
        return self.indices[0]

    @property
    def base(self) -> tuple[int, ...]:
        return self.indices[-1]

    def __len__(self) -> int:
        return len(self.transpositions)

    def ascending_steps(self) -> list[tuple[int, int]]:
        """sigma_1, ..., sigma_N: the order in which the C-set recursion consumes them."""
        return list(reversed(self.transpositions))


def _relabel_in(index: Sequence[int], ambient: Sequence[int]) -> tuple[tuple[int, ...], dict, dict]:
    ambient = tuple(sorted(set(int(x) for x in ambient)))
    to_local = {x: k + 1 for k, x in enumerate(ambient)}
    to_global = {k + 1: x for k, x in enumerate(ambient)}
    try:
        local = tuple(to_local[x] for x in index)
    except KeyError as exc:
        raise ValueError(f"{tuple(index)} is not inside ambient {ambient}") from exc
    return local, to_local, to_global


def _tower(index, ambient, kind: str) -> Tower:
    index = _increasing(index)
    if ambient is None:
        ambient = range(1, max(index, default=0) + 1)
    local, _, to_global = _relabel_in(index, ambient)
    m = len(to_global)
    indices = [local]
    sigmas = []
    cur = local
    while True:
        try:
            if kind == "row":
                sigma = standard_row_transposition(cur)
            else:
                sigma = standard_col_transposition(cur, m)
        except ValueError:
            break
        sigmas.append(sigma)
        cur = tuple(sorted(apply_transposition(sigma, cur)))
        indices.append(cur)
    g = lambda seq: tuple(to_global[x] for x in seq)  # noqa: E731
    return Tower(
        kind=kind,
        ambient=tuple(sorted(to_global.values())),
        indices=tuple(g(ix) for ix in indices),
        transpositions=tuple(g(s) for s in sigmas),
    )


def standard_row_tower(I: Sequence[int], ambient: Sequence[int] | None = None) -> Tower:
    return _tower(I, ambient, "row")


def standard_col_tower(J: Sequence[int], ambient: Sequence[int] | int | None = None) -> Tower:
    if isinstance(ambient, int):
        ambient = range(1, ambient + 1)
    return _tower(J, ambient, "column")


def intr(I: Sequence[int], ambient: Sequence[int] | None = None) -> int:
    return len(standard_row_tower(I, ambient))


def intc(J: Sequence[int], ambient: Sequence[int] | int | None = None) -> int:
    return len(standard_col_tower(J, ambient))


def int_total(I, J, row_ambient=None, col_ambient=None) -> int:
    return intr(I, row_ambient) + intc(J, col_ambient)
