"""A short tour: build a few commutation relations, print them, and check them.

Run with ``python3 demos/relations_tour.py``.
"""

from qminor import commute, normal_form
from qminor.manin import congruent
from qminor.minors import col_minor, parse_minor, row_minor
from qminor.verify import descent_check, q1_check, verify_relation

PAIRS = [
    ("[3 4|1 3]", "[1 2|2 4]", 4),
    ("[3 4|2 3]", "[1 2|1 3]", 4),
    ("[3 4|3 4]", "[1 2|1 2]", 4),
    ("[2 3|1 3]", "[1 4|2 4]", 4),
    ("[3 4 5|1 3 4]", "[1 2 3|1 2 5]", 5),
]


def show(lhs, rhs, n):
    rel = commute(parse_minor(lhs), parse_minor(rhs), n)
    print(rel.format("plain"))
    print(f"  case {rel.case}, {len(rel.terms)} terms, residual zero: {verify_relation(rel).ok}")
    print(f"  q=1 collapse: {q1_check(rel)}, descent: {descent_check(rel)}")
    print(f"  latex: {rel.format('latex')}")
    print()


def main():
    # the two expansions of a minor agree once reduced to normal form
    r, c = row_minor((1, 2), (2, 4)), col_minor((1, 2), (2, 4))
    print("row expansion    :", r)
    print("column expansion :", c)
    print("same class       :", congruent(r, c))
    print("normal form      :", normal_form(r))
    print()
    for lhs, rhs, n in PAIRS:
        show(lhs, rhs, n)


if __name__ == "__main__":
    main()
