"""Manin relations, the R/S relation constructors and the normal-form oracle.

Normal form: a word is canonical when its letters are sorted
nondecreasingly by ``(row, col)``.  An adjacent out-of-order pair
``a_ij a_kl`` with ``(i, j) > (k, l)`` is rewritten with the Manin relation
solved for that product:

    i == k, j > l :  a_ij a_il -> q a_il a_ij
    j == l, i > k :  a_ij a_kj -> q a_kj a_ij
    i > k,  j < l :  a_ij a_kl -> a_kl a_ij
    i > k,  j > l :  a_ij a_kl -> a_kl a_ij - (q^-1 - q) a_il a_kj

Every right-hand word is smaller than ``a_ij a_kl`` in degree-lex order, so
rewriting terminates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .laurent import ONE, QDIFF, LaurentPoly, q_power
from .tensor import Tensor, Word

__all__ = [
    "ABCCoeffs",
    "abc",
    "relation_R",
    "relation_S",
    "relation_R_applied",
    "relation_S_applied",
    "rewrite_pair",
    "normal_form",
    "normal_form_randomized",
    "congruent",
    "is_normal_word",
    "clear_cache",
]

_NEG_QDIFF = -QDIFF
_Q = q_power(1)


@dataclass(frozen=True)
class ABCCoeffs:
    A: int
    B: int
    C: int


def _check_indices(n, *idx):
    for x in idx:
        if not isinstance(x, int) or x < 1 or (n is not None and x > n):
            bound = f"1..{n}" if n is not None else ">= 1"
            raise ValueError(f"index {x!r} out of range {bound}")


def abc(i: int, j: int, k: int, l: int, n: int | None = None) -> ABCCoeffs:
    """The A, B, C exponents/coefficients attached to the product a_ij a_kl."""
    _check_indices(n, i, j, k, l)
    A = -1 if (i < k and j == l) else (1 if (i > k and j == l) else 0)
    B = -1 if (j < l and i == k) else (1 if (j > l and i == k) else 0)
    C = 1 if (i < k and j < l) else (-1 if (i > k and j > l) else 0)
    return ABCCoeffs(A, B, C)


def _applied(coeff_idx, letters, column_kept: bool, n) -> Tensor:
    i, j, k, l = coeff_idx
    al, be, ga, de = letters
    _check_indices(n, i, j, k, l, al, be, ga, de)
    c = abc(i, j, k, l)
    t = {((al, be), (ga, de)): ONE}
    swapped = ((ga, de), (al, be))
    t[swapped] = t.get(swapped, LaurentPoly()) - q_power(c.A + c.B)
    if c.C:
        corr = ((al, de), (ga, be)) if column_kept else ((ga, be), (al, de))
        t[corr] = t.get(corr, LaurentPoly()) - QDIFF * c.C
    return Tensor(t)


def relation_R(i: int, j: int, k: int, l: int, n: int | None = None) -> Tensor:
    """a_ij a_kl - q^(A+B) a_kl a_ij - C (q^-1 - q) a_kj a_il."""
    return _applied((i, j, k, l), (i, j, k, l), False, n)


def relation_S(i: int, j: int, k: int, l: int, n: int | None = None) -> Tensor:
    """As :func:`relation_R` with correction word a_il a_kj."""
    return _applied((i, j, k, l), (i, j, k, l), True, n)


def relation_R_applied(ijkl, target, n: int | None = None) -> Tensor:
    """R-relation with coefficients from ``ijkl`` and letters from ``target``.

    Not in the Manin ideal in general.
    """
    return _applied(tuple(ijkl), tuple(target), False, n)


def relation_S_applied(ijkl, target, n: int | None = None) -> Tensor:
    return _applied(tuple(ijkl), tuple(target), True, n)


def rewrite_pair(x, y) -> list[tuple[LaurentPoly, Word]] | None:
    """Rewrite of the two-letter word ``x y``; ``None`` if already ordered."""
    if x <= y:
        return None
    i, j = x
    k, l = y
    if i == k or j == l:
        return [(_Q, (y, x))]
    if j < l:
        return [(ONE, (y, x))]
    return [(ONE, (y, x)), (_NEG_QDIFF, ((i, l), (k, j)))]


def is_normal_word(w: Word) -> bool:
    return all(w[p] <= w[p + 1] for p in range(len(w) - 1))


@lru_cache(maxsize=None)
def _nf_word(w: Word) -> tuple[tuple[Word, LaurentPoly], ...]:
    for p in range(len(w) - 1):
        if w[p] > w[p + 1]:
            break
    else:
        return ((w, ONE),)
    acc: dict[Word, LaurentPoly] = {}
    prefix, suffix = w[:p], w[p + 2:]
    for c, pair in rewrite_pair(w[p], w[p + 1]):
        for v, d in _nf_word(prefix + pair + suffix):
            cd = c * d
            prev = acc.get(v)
            acc[v] = cd if prev is None else prev + cd
    return tuple((v, c) for v, c in acc.items() if c)


def clear_cache() -> None:
    _nf_word.cache_clear()


def normal_form(t: Tensor) -> Tensor:
    """Canonical representative of ``t`` modulo the Manin ideal."""
    acc: dict[Word, LaurentPoly] = {}
    for w, c in t.items():
        for v, d in _nf_word(w):
            cd = c * d
            prev = acc.get(v)
            acc[v] = cd if prev is None else prev + cd
    return Tensor._raw({v: c for v, c in acc.items() if c})


def normal_form_randomized(t: Tensor, rng: random.Random | None = None) -> Tensor:
    """Normal form computed by rewriting a randomly chosen out-of-order pair.

    Uncached and slow; exists to gather confluence evidence against
    :func:`normal_form`.
    """
    rng = rng or random.Random()
    work: dict[Word, LaurentPoly] = dict(t.items())
    done: dict[Word, LaurentPoly] = {}
    while work:
        w = rng.choice(list(work))
        c = work.pop(w)
        spots = [p for p in range(len(w) - 1) if w[p] > w[p + 1]]
        if not spots:
            prev = done.get(w)
            s = c if prev is None else prev + c
            if s:
                done[w] = s
            else:
                done.pop(w, None)
            continue
        p = rng.choice(spots)
        for d, pair in rewrite_pair(w[p], w[p + 1]):
            v = w[:p] + pair + w[p + 2:]
            s = work.get(v, LaurentPoly()) + c * d
            if s:
                work[v] = s
            else:
                work.pop(v, None)
    return Tensor._raw(done)


def congruent(t1: Tensor, t2: Tensor) -> bool:
    return normal_form(t1 - t2).is_zero()
