#!/usr/bin/env python3
"""Build induced cube graphs and inspect neighborhoods, distances, exports."""

from cubecodes import (
    BitWord,
    LUCAS,
    build_graph,
    closed_neighborhood,
    gen_lucas,
    hamming_distance,
)

W = BitWord.from_string


def main():
    g4 = build_graph(LUCAS, 4)
    print(f"Lucas cube n=4: {len(g4)} vertices, {g4.edge_count()} edges")
    nb = closed_neighborhood(g4, W("0101"))
    print("N[0101] =", sorted(str(w) for w in nb.words()))

    g5 = build_graph(LUCAS, 5)
    u, v = W("10100"), W("01010")
    print(
        f"distance in the graph {g5.graph_distance(u, v)}"
        f" == Hamming distance {hamming_distance(u, v)} (isometric subgraph)"
    )

    print()
    print("degree profile between weight levels of the n=9 Lucas cube:")
    g9 = build_graph(LUCAS, 9)
    for k_from, k_to in ((2, 1), (3, 2), (4, 3)):
        values = set(g9.level_degree_profile(k_from, k_to))
        print(f"  every weight-{k_from} vertex has {values} neighbors at weight {k_to}")

    print()
    print("generalized graphs and their orders at n=7:")
    for s in range(2, 8):
        g = build_graph(gen_lucas(s), 7)
        print(f"  cyclic runs of {s} forbidden: {len(g)} vertices,"
              f" connected={g.is_connected()}")

    print()
    print("DOT export of the n=3 Lucas cube:")
    print(build_graph(LUCAS, 3).to_dot(), end="")


if __name__ == "__main__":
    main()
