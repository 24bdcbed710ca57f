"""Words and linear combinations in the free algebra k_q<a_ij>.

A generator a_ij is the pair ``(i, j)``; a word is a tuple of such pairs and
the empty tuple is the unit.  ``Tensor`` is a finite linear combination of
words with ``LaurentPoly`` coefficients.
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Sequence

from .laurent import ONE, LaurentPoly

Gen = tuple[int, int]
Word = tuple[Gen, ...]

__all__ = [
    "Gen",
    "Word",
    "Tensor",
    "word_str",
    "parse_word",
    "gen",
    "word",
    "tensor_add",
    "tensor_mul",
    "row_action",
    "column_action",
    "is_in_row_order",
    "is_in_column_order",
    "row_sequence",
    "column_sequence",
]


def gen(i: int, j: int) -> Gen:
    return (int(i), int(j))


def word(*letters) -> Word:
    """Build a word from ``(i, j)`` pairs or two-digit shorthand like ``31``."""
    out = []
    for x in letters:
        if isinstance(x, int):
            if not 11 <= x <= 99:
                raise ValueError("integer shorthand only covers indices 1..9")
            out.append((x // 10, x % 10))
        else:
            out.append(gen(*x))
    return tuple(out)


def word_str(w: Word) -> str:
    if not w:
        return "1"
    if all(i < 10 and j < 10 for i, j in w):
        return ".".join(f"a{i}{j}" for i, j in w)
    return ".".join(f"a{i},{j}" for i, j in w)


_LETTER = re.compile(r"^a(\d+),(\d+)$|^a(\d)(\d)$")


def parse_word(text: str) -> Word:
    """Inverse of :func:`word_str`.  Accepts ``a31.a43`` or ``a3,1.a4,3``."""
    text = text.strip()
    if text == "1":
        return ()
    out = []
    for piece in text.split("."):
        m = _LETTER.match(piece.strip())
        if m is None:
            raise ValueError(f"bad generator {piece!r}")
        a, b = (m.group(1), m.group(2)) if m.group(1) else (m.group(3), m.group(4))
        out.append((int(a), int(b)))
    return tuple(out)


def row_sequence(w: Word) -> tuple[int, ...]:
    return tuple(i for i, _ in w)


def column_sequence(w: Word) -> tuple[int, ...]:
    return tuple(j for _, j in w)


class Tensor:
    """Finite k_q-linear combination of words; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, LaurentPoly] | Iterable[tuple[Word, LaurentPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, LaurentPoly] = {}
        for w, c in items:
            if isinstance(c, int):
                c = LaurentPoly.constant(c)
            w = tuple(tuple(x) for x in w)
            prev = acc.get(w)
            acc[w] = c if prev is None else prev + c
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Word, LaurentPoly]) -> "Tensor":
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def from_word(cls, w: Word, coeff: LaurentPoly = ONE) -> "Tensor":
        return cls._raw({tuple(w): coeff} if coeff else {})

    @classmethod
    def one(cls) -> "Tensor":
        return cls.from_word(())

    def items(self):
        return self._terms.items()

    def words(self) -> list[Word]:
        return sorted(self._terms)

    def coefficient(self, w: Word) -> LaurentPoly:
        return self._terms.get(tuple(w), LaurentPoly())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def __add__(self, other: "Tensor") -> "Tensor":
        if not isinstance(other, Tensor):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                s = prev + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return Tensor._raw(out)

    def __neg__(self) -> "Tensor":
        return Tensor._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "Tensor":
        if isinstance(c, int):
            c = LaurentPoly.constant(c)
        if not c:
            return Tensor()
        return Tensor._raw({w: v * c for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        if not isinstance(other, Tensor):
            return NotImplemented
        out: dict[Word, LaurentPoly] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = c1 * c2
                prev = out.get(w)
                out[w] = c if prev is None else prev + c
        return Tensor._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def map_words(self, fn) -> "Tensor":
        """Apply ``fn`` to every word, summing coefficients of collisions."""
        return Tensor((fn(w), c) for w, c in self._terms.items())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w in sorted(self._terms):
            c = self._terms[w]
            cs = str(c)
            if cs == "1":
                parts.append(word_str(w))
            elif cs == "-1":
                parts.append("-" + word_str(w))
            else:
                parts.append(f"({cs})*{word_str(w)}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self) -> str:
        return f"Tensor({self})"


def tensor_add(a: Tensor, b: Tensor) -> Tensor:
    return a + b


def tensor_mul(a: Tensor, b: Tensor) -> Tensor:
    return a * b


def _check_perm(sigma: Mapping[int, int] | Sequence[int], n0: int) -> dict[int, int]:
    if isinstance(sigma, Mapping):
        perm = {int(k): int(v) for k, v in sigma.items()}
        for x in range(1, n0 + 1):
            perm.setdefault(x, x)
    else:
        if len(sigma) != n0:
            raise ValueError(f"permutation must have {n0} entries")
        perm = {x: int(sigma[x - 1]) for x in range(1, n0 + 1)}
    if sorted(perm.values()) != sorted(perm):
        raise ValueError(f"{sigma!r} is not a permutation")
    return perm


def _check_length(t: Tensor, n0: int) -> None:
    for w, _ in t.items():
        if len(w) != n0:
            raise ValueError(f"word {word_str(w)} does not have length {n0}")


def row_action(sigma, t: Tensor, n0: int | None = None) -> Tensor:
    """Act by ``sigma`` on every row index of every word.

    ``sigma`` is either one-line notation (sequence of images of 1..n0) or a
    mapping; unmapped points are fixed.
    """
    if n0 is None:
        n0 = len(sigma) if not isinstance(sigma, Mapping) else max(t.degrees(), default=0)
    _check_length(t, n0)
    perm = _check_perm(sigma, n0)
    return t.map_words(lambda w: tuple((perm.get(i, i), j) for i, j in w))


def column_action(sigma, t: Tensor, n0: int | None = None) -> Tensor:
    """Column counterpart of :func:`row_action`."""
    if n0 is None:
        n0 = len(sigma) if not isinstance(sigma, Mapping) else max(t.degrees(), default=0)
    _check_length(t, n0)
    perm = _check_perm(sigma, n0)
    return t.map_words(lambda w: tuple((i, perm.get(j, j)) for i, j in w))


def _target_order(K: Sequence[int], n0: int) -> tuple[int, ...]:
    K = tuple(K)
    if len(set(K)) != len(K) or any(not 1 <= k <= n0 for k in K):
        raise ValueError(f"{K} is not a set of distinct indices in 1..{n0}")
    rest = tuple(x for x in range(1, n0 + 1) if x not in K)
    return K + rest


def is_in_row_order(t: Tensor, K: Sequence[int], n0: int | None = None) -> bool:
    """True iff every word has row sequence (K, K') with K' the sorted complement."""
    if not t:
        return True
    if n0 is None:
        n0 = max(t.degrees())
    target = _target_order(K, n0)
    return all(row_sequence(w) == target for w, _ in t.items())


def is_in_column_order(t: Tensor, L: Sequence[int], n0: int | None = None) -> bool:
    if not t:
        return True
    if n0 is None:
        n0 = max(t.degrees())
    target = _target_order(L, n0)
    return all(column_sequence(w) == target for w, _ in t.items())
