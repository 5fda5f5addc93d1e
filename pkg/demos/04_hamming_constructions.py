#!/usr/bin/env python3
"""Hamming codes, syndrome decoding, and perfect codes in circular-run graphs."""

from cubecodes import (
    BitWord,
    HYPERCUBE,
    build_graph,
    build_hamming,
    construct_gen_lucas_code,
    is_perfect_code,
)

W = BitWord.from_string


def main():
    code = build_hamming(3)
    print(f"Hamming code p=3: length {code.n}, {code.size()} codewords")
    print("  " + " ".join(str(w) for w in code.codewords()))
    print(f"  minimum distance: {code.min_distance()}")
    print(f"  all-ones word is a codeword: {code.is_codeword(W('1111111'))}")

    print()
    print("syndrome decoding flips the position the syndrome names:")
    for text in ("1111011", "0000100", "1010101"):
        print(f"  {text} -> {code.decode(W(text))}")

    print()
    q7 = build_graph(HYPERCUBE, 7)
    print("the code is perfect in the 7-cube:", is_perfect_code(q7, code.codewords()))
    coset = code.translate(W("0000001"))
    print("translating by 0000001 keeps it perfect:", is_perfect_code(q7, coset))
    print("and removes the all-ones word:", all(str(w) != "1111111" for w in coset))

    print()
    print("perfect codes in the circular-run graphs, p=2..4:")
    for p in (2, 3, 4):
        for s_kind in ("n", "n-1", "n-2"):
            code_set = construct_gen_lucas_code(p, s_kind)
            graph = code_set.graph
            ok = is_perfect_code(graph, code_set)
            print(
                f"  p={p} run={s_kind}: graph order {len(graph)},"
                f" code order {len(code_set)}, perfect={ok}"
            )


if __name__ == "__main__":
    main()
