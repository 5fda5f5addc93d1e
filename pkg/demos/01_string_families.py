#!/usr/bin/env python3
"""Tour of the string families: membership, enumeration, weight counts.

Walks through the five vertex families at small lengths and prints the
weight-level table that the closed-form counters reproduce.
"""

from cubecodes import (
    BitWord,
    FIBONACCI,
    HYPERCUBE,
    LUCAS,
    circulation,
    count_weight_level,
    enumerate_family,
    gen_lucas,
    has_circular_ones_run,
    is_member,
)

W = BitWord.from_string


def show_family(family, n):
    members = enumerate_family(family, n)
    print(f"{family} at n={n}: {len(members)} members")
    print("  " + " ".join(str(w) for w in members))


def main():
    print("== membership ==")
    for text, family in (("0101", FIBONACCI), ("1010", LUCAS), ("1001", LUCAS)):
        print(f"{text} in {family}? {is_member(family, W(text))}")

    print()
    print("== circulations ==")
    w = W("1101111")
    for i in (1, 3, 5):
        print(f"circulation {i} of {w} = {circulation(w, i)}")
    print(f"{w} has a cyclic run of 6 ones: {has_circular_ones_run(w, 6)}")

    print()
    print("== enumeration ==")
    show_family(LUCAS, 4)
    show_family(LUCAS, 5)
    show_family(gen_lucas(3), 5)

    print()
    print("== weight-level table for the Lucas family ==")
    header = "n\\k " + "".join(f"{k:>5}" for k in range(0, 8))
    print(header)
    for n in range(4, 13):
        row = [count_weight_level(LUCAS, n, k) for k in range(0, min(n, 7) + 1)]
        print(f"{n:>3} " + "".join(f"{c:>5}" for c in row))
    print()
    print("closed forms: level 2 is n(n-3)/2, level 3 is n(n-4)(n-5)/6")
    for n in (8, 12, 16):
        print(
            f"  n={n}: {count_weight_level(LUCAS, n, 2)} == {n * (n - 3) // 2},",
            f"{count_weight_level(LUCAS, n, 3)} == {n * (n - 4) * (n - 5) // 6}",
        )

    print()
    print("== hypercube levels are plain binomials ==")
    print([count_weight_level(HYPERCUBE, 6, k) for k in range(7)])


if __name__ == "__main__":
    main()
