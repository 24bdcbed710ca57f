"""Exact Laurent polynomials in q with integer coefficients."""

from __future__ import annotations

import json
import re
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "ZERO",
    "ONE",
    "Q",
    "QINV",
    "QDIFF",
    "poly_add",
    "poly_mul",
    "poly_eval_at_one",
    "neg_q_power",
    "q_power",
]


class LaurentPoly:
    """Element of Z[q, q^-1], stored as exponent -> nonzero coefficient.

    Instances are immutable and hashable; arithmetic always returns a
    canonical object with no zero coefficients.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            e = int(e)
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # terms must already be canonical (no zeros)
        obj = object.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._raw({exponent: coeff} if coeff else {})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls.monomial(0, c)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        exps = list(self._terms)
        return exps[0], exps[-1]

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible in Z[q, q^-1]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("only unit monomials are invertible in Z[q, q^-1]")
            return LaurentPoly.monomial(e * k, c ** (-k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def evaluate(self, value):
        """Evaluate at a number (or anything supporting ``**`` and ``+``)."""
        return sum(c * value**e for e, c in self._terms.items())

    # text / json -------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for e, c in self._terms.items():
            if e == 0:
                body = str(abs(c))
            else:
                mono = "q" if e == 1 else f"q^{{{e}}}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            if not out:
                out = ("-" if c < 0 else "") + body
            else:
                out += (" - " if c < 0 else " + ") + body
        return out

    def to_json(self) -> list[list]:
        return [[e, str(c)] for e, c in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((int(e), int(c)) for e, c in data)

    _TERM = re.compile(
        r"^(?:(?P<coef>\d+)(?:\*(?P<q1>q(?:\^(?P<e1>-?\d+))?))?|(?P<q2>q(?:\^(?P<e2>-?\d+))?))$"
    )

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text form, e.g. ``"-2*q^-1 + 3 + q^2"``."""
        s = text.replace(" ", "").replace("^-", "^~")
        if s == "0" or not s:
            return ZERO
        tokens = re.findall(r"[+-]?[^+-]+", s)
        acc: dict[int, int] = {}
        for tok in tokens:
            tok = tok.replace("~", "-")
            sign = -1 if tok.startswith("-") else 1
            tok = tok.lstrip("+-")
            m = cls._TERM.match(tok)
            if m is None:
                raise ValueError(f"cannot parse Laurent term {tok!r} in {text!r}")
            if m.group("q2") is not None:
                coef, e = 1, int(m.group("e2") or 1)
            else:
                coef = int(m.group("coef"))
                e = int(m.group("e1") or 1) if m.group("q1") else 0
            acc[e] = acc.get(e, 0) + sign * coef
        return cls(acc)


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
Q = LaurentPoly.monomial(1)
QINV = LaurentPoly.monomial(-1)
#: the recurring scalar q^-1 - q
QDIFF = LaurentPoly({-1: 1, 1: -1})


def poly_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def poly_eval_at_one(a: LaurentPoly) -> int:
    return a.eval_at_one()


def q_power(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


def neg_q_power(e: int) -> LaurentPoly:
    """Return (-q)^e."""
    return LaurentPoly.monomial(e, -1 if e % 2 else 1)
