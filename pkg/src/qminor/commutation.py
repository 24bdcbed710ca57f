"""Commutation relations between two quantum minors.

For minors ``a = [K, L] > b = [I, J]`` (lexicographically) the generator
emits

    q^(rho - gamma) [K,L][I,J]  ==  sum_i (q^-1 - q)^i  sum_{(Z,W) in C_i}
        sign(Z,W) [Z u R, W u C][Z' u R, W' u C]

where ``R = I n K`` (|R| = rho), ``C = J n L`` (|C| = gamma) and the C-sets
come from the row tower of ``I - R`` in ``(I u K) - R`` and the column tower
of ``J - C`` in ``(J u L) - C``.  Unsorted labels are sorted with the factor
(-q)^-l.  This single recursion covers every case of the case table; the
case tag only records which situation the pair falls in.  Each relation is
checked against the normal-form oracle before it is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .csets import csets_rowcol
from .laurent import ONE, QDIFF, ZERO, LaurentPoly, neg_q_power, q_power
from .manin import normal_form
from .minors import MinorSpec, antipode_image, inversion_length, minor_tensor, parse_minor
from .tensor import Tensor
from .towers import intc, intr

__all__ = [
    "Relation",
    "VerificationError",
    "commute",
    "commute_q_special",
    "gl_less",
    "case_tag",
    "relation_residual",
    "CASE_TAGS",
]

CASE_TAGS = ("4.4", "5.1", "5.4", "5.5", "6.1", "6.3", "7.1", "7.2", "7.3")


class VerificationError(RuntimeError):
    """A generated relation failed the normal-form check."""


@dataclass
class Relation:
    """``lead_coef * lead[0] * lead[1] == sum(coef * left * right)`` modulo the Manin ideal."""

    n: int
    lead_coef: LaurentPoly
    lead: tuple[MinorSpec, MinorSpec]
    terms: list[tuple[LaurentPoly, MinorSpec, MinorSpec]]
    case: str
    verified: bool = False
    swapped: bool = False
    notes: dict = field(default_factory=dict)

    @property
    def reversed_coef(self) -> LaurentPoly:
        a, b = self.lead
        for c, left, right in self.terms:
            if left.key == b.key and right.key == a.key:
                return c
        return ZERO

    def corrections(self) -> list[tuple[LaurentPoly, MinorSpec, MinorSpec]]:
        """Terms other than the reversed product."""
        a, b = self.lead
        return [t for t in self.terms if not (t[1].key == b.key and t[2].key == a.key)]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lead_coef": self.lead_coef.to_json(),
            "lead": [str(self.lead[0]), str(self.lead[1])],
            "terms": [{"coef": c.to_json(), "left": str(l), "right": str(r)} for c, l, r in self.terms],
            "case": self.case,
            "verified": self.verified,
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    @classmethod
    def from_dict(cls, data: dict) -> "Relation":
        terms = [
            (LaurentPoly.from_json(t["coef"]), parse_minor(t["left"]), parse_minor(t["right"]))
            for t in data["terms"]
        ]
        lead = tuple(parse_minor(x) for x in data["lead"])
        return cls(
            n=int(data["n"]),
            lead_coef=LaurentPoly.from_json(data["lead_coef"]),
            lead=lead,
            terms=terms,
            case=str(data.get("case", "")),
            verified=bool(data.get("verified", False)),
        )

    @classmethod
    def from_json(cls, text: str) -> "Relation":
        return cls.from_dict(json.loads(text))

    def format(self, style: str = "plain") -> str:
        if style == "json":
            return self.to_json(indent=2)
        latex = style == "latex"

        def coef(c: LaurentPoly) -> str:
            return c.to_latex() if latex else str(c)

        def mn(m: MinorSpec) -> str:
            return m.to_latex() if latex else str(m)

        a, b = self.lead
        lhs = f"{mn(a)}{mn(b)}"
        if self.lead_coef != ONE:
            lhs = f"({coef(self.lead_coef)}){lhs}"
        parts = []
        for c, left, right in self.terms:
            prod = f"{mn(left)}{mn(right)}"
            if c == ONE:
                parts.append(("+", prod))
            elif c == -ONE:
                parts.append(("-", prod))
            else:
                parts.append(("+", f"({coef(c)}){prod}"))
        rhs = parts[0][1] if parts and parts[0][0] == "+" else ""
        if parts and parts[0][0] == "-":
            rhs = "-" + parts[0][1]
        for sgn, body in parts[1:]:
            rhs += f" {sgn} {body}"
        op = r" \equiv " if latex else " == "
        return lhs + op + (rhs or "0")

    def __str__(self) -> str:
        return self.format("plain")


def gl_less(a: MinorSpec, b: MinorSpec) -> bool:
    """Strict order (K,L) <_GL (I,J): K <=_r I and L <=_c J.

    ``K <=_r I`` iff |K| < |I| or k_a <= i_a for all a;
    ``L <=_c J`` iff |L| < |J| or j_b <= l_b for all b.
    """
    if a.key == b.key:
        return False
    K, L, I, J = a.rows, a.cols, b.rows, b.cols
    rows_ok = len(K) < len(I) or (len(K) == len(I) and all(k <= i for k, i in zip(K, I)))
    cols_ok = len(L) < len(J) or (len(L) == len(J) and all(j <= l for j, l in zip(J, L)))
    return rows_ok and cols_ok


def case_tag(a: MinorSpec, b: MinorSpec) -> str:
    """Which entry of the case table covers ``a * b`` (``a > b``)."""
    K, L, I, J = a.rows, a.cols, b.rows, b.cols
    R = set(I) & set(K)
    C = set(J) & set(L)
    r0 = intr([x for x in I if x not in R], sorted((set(I) | set(K)) - R)) == 0
    c0 = intc([x for x in J if x not in C], sorted((set(J) | set(L)) - C)) == 0
    if not R and not C:
        if r0 and c0:
            return "4.4"
        if r0:
            return "5.1"
        if c0:
            return "7.1"
        return "6.1"
    if not R:
        if r0 and c0:
            return "5.4"
        if r0:
            return "5.5"
        return "6.3"
    if not C:
        return "7.1" if c0 else "7.2"
    return "7.3"


def _check_pair(a: MinorSpec, b: MinorSpec, n: int) -> None:
    for m in (a, b):
        if not m.is_sorted():
            raise ValueError(f"minor {m} must have increasing indices")
        if max(m.rows + m.cols) > n:
            raise ValueError(f"minor {m} does not fit in n={n}")


def relation_residual(rel: Relation) -> Tensor:
    """Normal form of lead_coef*a*b - sum(coef*left*right), expanded with row minors."""
    a, b = rel.lead
    diff = (minor_tensor(a.rows, a.cols) * minor_tensor(b.rows, b.cols)).scale(rel.lead_coef)
    for c, left, right in rel.terms:
        diff = diff - (minor_tensor(left.rows, left.cols) * minor_tensor(right.rows, right.cols)).scale(c)
    return normal_form(diff)


def _order_map(values) -> tuple[dict[int, int], dict[int, int]]:
    vals = sorted(set(values))
    fwd = {x: k + 1 for k, x in enumerate(vals)}
    return fwd, {v: k for k, v in fwd.items()}


def _closed_form(a: MinorSpec, b: MinorSpec):
    """Lead coefficient and collated terms for a > b, all indices in the labels given."""
    K, L, I, J = a.rows, a.cols, b.rows, b.cols
    R = tuple(sorted(set(I) & set(K)))
    C = tuple(sorted(set(J) & set(L)))
    row_amb = sorted((set(I) | set(K)) - set(R))
    col_amb = sorted((set(J) | set(L)) - set(C))
    fam = csets_rowcol(
        [x for x in I if x not in R], [x for x in J if x not in C], row_amb, col_amb
    )
    collated: dict[tuple, LaurentPoly] = {}
    for level, p in fam:
        c = QDIFF**level * p.sign * neg_q_power(
            -inversion_length(p.rows)
            - inversion_length(p.rows_c)
            - inversion_length(p.cols)
            - inversion_length(p.cols_c)
        )
        left = MinorSpec(tuple(sorted(p.rows + R)), tuple(sorted(p.cols + C)))
        right = MinorSpec(tuple(sorted(p.rows_c + R)), tuple(sorted(p.cols_c + C)))
        key = (left, right)
        collated[key] = collated.get(key, ZERO) + c
    lead_coef = q_power(len(R) - len(C))
    # with identical row sets one correction is the lead product itself
    self_coef = collated.pop((a.abstract(), b.abstract()), ZERO)
    lead_coef = lead_coef - self_coef
    terms = [(c, left, right) for (left, right), c in collated.items() if c]
    return lead_coef, terms, fam


def commute(a: MinorSpec, b: MinorSpec, n: int | None = None, verify: bool = True) -> Relation:
    """Commutation relation between two sorted minors.

    If ``a < b`` lexicographically the pair is swapped (``swapped=True``) so
    that the relation is always written for the larger minor on the left.
    With ``verify`` the relation is checked by normal form and
    :class:`VerificationError` is raised on a nonzero residual.
    """
    a, b = a.abstract(), b.abstract()
    if n is None:
        n = max(a.rows + a.cols + b.rows + b.cols)
    _check_pair(a, b, n)
    swapped = False
    if a.key < b.key:
        a, b = b, a
        swapped = True
    if a.key == b.key:
        rel = Relation(n, ONE, (a, b), [(ONE, b, a)], "7.3", swapped=False)
        rel.notes["trivial"] = True
        return _finish(rel, verify)

    # relabel onto the minimal joint alphabets
    rfwd, rback = _order_map(a.rows + b.rows)
    cfwd, cback = _order_map(a.cols + b.cols)
    la = MinorSpec(tuple(rfwd[x] for x in a.rows), tuple(cfwd[x] for x in a.cols))
    lb = MinorSpec(tuple(rfwd[x] for x in b.rows), tuple(cfwd[x] for x in b.cols))
    lead_coef, terms, fam = _closed_form(la, lb)

    def back(m: MinorSpec) -> MinorSpec:
        return MinorSpec(tuple(rback[x] for x in m.rows), tuple(cback[x] for x in m.cols))

    terms = [(c, back(left), back(right)) for c, left, right in terms]
    tag = case_tag(a, b)
    rel = Relation(n, lead_coef, (a, b), terms, tag, swapped=swapped)
    rel.notes["levels"] = fam.max_level()
    if tag == "7.3":
        rel.notes["antipode_reduction"] = _antipode_reduction(la, lb, rback, cback)
    return _finish(rel, verify)


def _antipode_reduction(la: MinorSpec, lb: MinorSpec, rback, cback) -> str:
    """S-image of the product in the (enlarged) local alphabet, as text."""
    m = max(len(rback), len(cback))
    ca, sa = antipode_image(la, m) if la.size < m else (ONE, la)
    cb, sb = antipode_image(lb, m) if lb.size < m else (ONE, lb)
    return f"{ca * cb}*{sb}{sa}"


def _finish(rel: Relation, verify: bool) -> Relation:
    if verify:
        residual = relation_residual(rel)
        if not residual.is_zero():
            raise VerificationError(f"relation for {rel.lead[0]}{rel.lead[1]} leaves residual {residual}")
        rel.verified = True
    return rel


def commute_q_special(a: MinorSpec, b: MinorSpec, n: int | None = None, verify: bool = True) -> Relation:
    """Single-term q-commutation q^-z [K,L][I,J] == [I,J][K,L].

    Requires disjoint rows with every row of ``b`` above every row of ``a``,
    and every non-shared column of ``a`` left of every non-shared column of
    ``b``; ``z`` is the number of shared columns.
    """
    a, b = a.abstract(), b.abstract()
    if n is None:
        n = max(a.rows + a.cols + b.rows + b.cols)
    _check_pair(a, b, n)
    if set(a.rows) & set(b.rows):
        raise ValueError("rows must be disjoint")
    if max(b.rows) > min(a.rows):
        raise ValueError("rows of the right minor must all lie above the rows of the left minor")
    shared = set(a.cols) & set(b.cols)
    la = [x for x in a.cols if x not in shared]
    lb = [x for x in b.cols if x not in shared]
    if la and lb and max(la) > min(lb):
        raise ValueError("non-shared columns are not in staircase position")
    rel = Relation(n, q_power(-len(shared)), (a, b), [(ONE, b, a)], "5.4" if shared else "4.4")
    return _finish(rel, verify)
