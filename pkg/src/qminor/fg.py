"""Single-step rewrites of type F and G and the reorderings built from them."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .laurent import ONE, QDIFF, ZERO, LaurentPoly, q_power
from .manin import abc
from .tensor import Tensor, Word, column_sequence, parse_word, row_sequence, word_str

__all__ = [
    "apply_F",
    "apply_G",
    "reorder_rows",
    "reorder_cols",
    "coeff_E",
    "target_sequence",
]


def _select(t: Tensor, selector) -> Word:
    w = parse_word(selector) if isinstance(selector, str) else tuple(tuple(x) for x in selector)
    if t.coefficient(w).is_zero():
        raise KeyError(f"word {word_str(w)} does not occur in the tensor")
    return w


def _replace(t: Tensor, w: Word, i, j, k, l, column_kept: bool) -> Tensor:
    pair = ((i, j), (k, l))
    for p in range(len(w) - 1):
        if (w[p], w[p + 1]) == pair:
            break
    else:
        return t
    coef = t.coefficient(w)
    pre, post = w[:p], w[p + 2:]
    coeffs = abc(i, j, k, l)
    # q^(A+B) is 1 unless the two letters share a row or a column
    out = {pre + ((k, l), (i, j)) + post: q_power(coeffs.A + coeffs.B)}
    C = coeffs.C
    if C:
        corr = ((i, l), (k, j)) if column_kept else ((k, j), (i, l))
        out[pre + corr + post] = out.get(pre + corr + post, LaurentPoly()) + QDIFF * C
    replacement = Tensor(out).scale(coef)
    return t - Tensor.from_word(w, coef) + replacement


def apply_F(t: Tensor, selector, i: int, j: int, k: int, l: int) -> Tensor:
    """Replace a_ij a_kl by a_kl a_ij + C (q^-1 - q) a_kj a_il in the selected word.

    When the two letters share a row or a column the swapped term carries
    q^(A+B), so the result is always congruent to the input.

    ``selector`` is the word (tuple or text form such as ``"a31.a43.a12.a24"``).
    A word without an adjacent a_ij a_kl is left alone.
    """
    return _replace(t, _select(t, selector), i, j, k, l, column_kept=False)


def apply_G(t: Tensor, selector, i: int, j: int, k: int, l: int) -> Tensor:
    """Replace a_ij a_kl by a_kl a_ij + C (q^-1 - q) a_il a_kj in the selected word."""
    return _replace(t, _select(t, selector), i, j, k, l, column_kept=True)


def target_sequence(K: Sequence[int], n0: int) -> tuple[int, ...]:
    """(K, K') with K' the increasing complement of K in 1..n0.

    A K of full length n0 is taken as the whole target sequence.
    """
    K = tuple(int(x) for x in K)
    if len(set(K)) != len(K) or any(not 1 <= x <= n0 for x in K):
        raise ValueError(f"{K} is not a set of distinct indices in 1..{n0}")
    return K + tuple(x for x in range(1, n0 + 1) if x not in K)


@lru_cache(maxsize=200_000)
def _reorder_word(w: Word, target: tuple[int, ...], rows: bool) -> tuple[tuple[Word, LaurentPoly], ...]:
    pos = {x: p for p, x in enumerate(target)}
    s = row_sequence(w) if rows else column_sequence(w)
    bad = next((p for p in range(len(w) - 1) if pos[s[p]] > pos[s[p + 1]]), None)
    if bad is None:
        return ((w, ONE),)
    (i, j), (k, l) = w[bad], w[bad + 1]
    step = _replace(Tensor.from_word(w), w, i, j, k, l, column_kept=not rows)
    acc: dict[Word, LaurentPoly] = {}
    for w2, c2 in step.items():
        for w3, c3 in _reorder_word(w2, target, rows):
            acc[w3] = acc.get(w3, ZERO) + c2 * c3
    return tuple((x, c) for x, c in acc.items() if c)


def _reorder(t: Tensor, K: Sequence[int], rows: bool) -> Tensor:
    if not t:
        return t
    degrees = t.degrees()
    if len(degrees) != 1:
        raise ValueError("tensor is not homogeneous")
    (n0,) = degrees
    target = target_sequence(K, n0)
    seq = row_sequence if rows else column_sequence
    acc: dict[Word, LaurentPoly] = {}
    for w, c in t.items():
        if sorted(seq(w)) != sorted(target):
            raise ValueError(
                f"{'row' if rows else 'column'} indices of {word_str(w)} are not a permutation of {target}"
            )
        # operations on different words commute, so each word is reordered on its own
        for w2, c2 in _reorder_word(w, target, rows):
            acc[w2] = acc.get(w2, ZERO) + c * c2
    return Tensor(acc)


def reorder_rows(t: Tensor, K: Sequence[int]) -> Tensor:
    """Bring every word to row order (K, K') by operations of type F.

    Bubble schedule: in each word, swap the leftmost adjacent pair that is
    out of target order, so each pair of rows is interchanged at most once.
    """
    return _reorder(t, K, rows=True)


def reorder_cols(t: Tensor, L: Sequence[int]) -> Tensor:
    """Column counterpart of :func:`reorder_rows`, using operations of type G."""
    return _reorder(t, L, rows=False)


def coeff_E(m: int, target: Sequence[int], source: Sequence[int]) -> int:
    """Correction sign for a tower step (m, m+1).

    ``target`` is K (completed to (K, K') by the increasing complement in
    1..len(source)) and ``source`` is the current row or column sequence.
    0 when m, m+1 appear in the same relative order in both; +1 when the
    target has m first and the source has m+1 first; -1 for the reverse.
    """
    source = tuple(source)
    full = target_sequence(target, len(source)) if len(target) < len(source) else tuple(target)
    for seq in (full, source):
        if m not in seq or m + 1 not in seq:
            raise ValueError(f"{m} and {m + 1} must both occur in {seq}")
    t_first = full.index(m) < full.index(m + 1)
    s_first = source.index(m) < source.index(m + 1)
    if t_first == s_first:
        return 0
    return 1 if t_first else -1
