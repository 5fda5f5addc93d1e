"""Induced subgraphs of the hypercube: neighborhoods, distances, exports.

Vertices are family members at a fixed length, stored ascending; the dense
vertex id of a word is its rank in that order, which is stable across runs.
Vertex sets are bitmaps over dense ids, packed into a single integer.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator

from .limits import ResourceLimitError, graph_cap
from .words import BitWord, Family, iter_family_bits

# Above this vertex count, neighbor lists are not stored; flips are probed
# against the index on every query instead.
DENSE_ADJ_LIMIT = 1 << 16


def hamming_distance(x: BitWord, y: BitWord) -> int:
    """Number of positions in which two equal-length words differ."""
    if x.length != y.length:
        raise ValueError(f"length mismatch: {x.length} vs {y.length}")
    return (x.bits ^ y.bits).bit_count()


class InducedGraph:
    """The subgraph of Q_n induced by a fixed set of words.

    Immutable after construction; adjacency is exactly the single-bit-flip
    relation restricted to the vertex set.
    """

    def __init__(self, n: int, vertices: list[int], family: Family | None = None):
        if any(not 0 <= bits < (1 << n) for bits in vertices):
            raise ValueError(f"vertex words must fit in {n} bits")
        if any(a >= b for a, b in zip(vertices, vertices[1:])):
            raise ValueError("vertices must be strictly ascending")
        self.n = n
        self.family = family
        self.vertices = vertices
        self.index = {bits: i for i, bits in enumerate(vertices)}
        self._adj: list[list[int]] | None = None
        if len(vertices) <= DENSE_ADJ_LIMIT:
            self._adj = [self._probe_neighbors(i) for i in range(len(vertices))]

    def _probe_neighbors(self, i: int) -> list[int]:
        bits = self.vertices[i]
        index = self.index
        found = []
        for b in range(self.n):
            j = index.get(bits ^ (1 << b))
            if j is not None:
                found.append(j)
        found.sort()
        return found

    def __len__(self) -> int:
        return len(self.vertices)

    def word(self, i: int) -> BitWord:
        return BitWord(self.n, self.vertices[i])

    def words(self) -> list[BitWord]:
        return [BitWord(self.n, bits) for bits in self.vertices]

    def id_of(self, w: BitWord) -> int:
        """Dense id of a vertex; rejects words outside the graph."""
        if w.length != self.n:
            raise ValueError(f"word length {w.length} does not match graph length {self.n}")
        i = self.index.get(w.bits)
        if i is None:
            raise ValueError(f"word {w} is not a vertex of this graph")
        return i

    def neighbor_ids(self, i: int) -> list[int]:
        if self._adj is not None:
            return self._adj[i]
        return self._probe_neighbors(i)

    def closed_mask(self, i: int) -> int:
        """Bitmap of N[i]: the vertex and its neighbors."""
        mask = 1 << i
        for j in self.neighbor_ids(i):
            mask |= 1 << j
        return mask

    def degree(self, i: int) -> int:
        return len(self.neighbor_ids(i))

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as id pairs (i, j) with i < j, in ascending order."""
        for i in range(len(self.vertices)):
            for j in self.neighbor_ids(i):
                if i < j:
                    yield (i, j)

    def edge_count(self) -> int:
        return sum(len(self.neighbor_ids(i)) for i in range(len(self.vertices))) // 2

    def graph_distance(self, u: BitWord, v: BitWord) -> int | None:
        """BFS distance between two vertices; None when unreachable."""
        src, dst = self.id_of(u), self.id_of(v)
        if src == dst:
            return 0
        dist = {src: 0}
        queue = deque([src])
        while queue:
            i = queue.popleft()
            d = dist[i] + 1
            for j in self.neighbor_ids(i):
                if j not in dist:
                    if j == dst:
                        return d
                    dist[j] = d
                    queue.append(j)
        return None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = 1
        queue = deque([0])
        count = 1
        while queue:
            i = queue.popleft()
            for j in self.neighbor_ids(i):
                if not seen >> j & 1:
                    seen |= 1 << j
                    count += 1
                    queue.append(j)
        return count == len(self.vertices)

    def level_degree_profile(
        self,
        k_from: int,
        k_to: int,
        restrict: Callable[[BitWord], bool] | None = None,
    ) -> list[int]:
        """Per-vertex counts of weight-k_to neighbors, over weight-k_from vertices.

        The levels must be adjacent.  An optional restriction predicate
        filters both the profiled vertices and the neighbors counted.
        """
        if abs(k_from - k_to) != 1:
            raise ValueError(f"levels must be adjacent, got {k_from} and {k_to}")
        if not (0 <= k_from <= self.n and 0 <= k_to <= self.n):
            raise ValueError(f"levels must lie in 0..{self.n}")
        profile = []
        for i, bits in enumerate(self.vertices):
            if bits.bit_count() != k_from:
                continue
            if restrict is not None and not restrict(BitWord(self.n, bits)):
                continue
            count = 0
            for j in self.neighbor_ids(i):
                nb = self.vertices[j]
                if nb.bit_count() != k_to:
                    continue
                if restrict is not None and not restrict(BitWord(self.n, nb)):
                    continue
                count += 1
            profile.append(count)
        return profile

    # -- export ------------------------------------------------------------

    def to_json_dict(self, code: "VertexSet | None" = None) -> dict:
        """JSON-ready adjacency dump with stable key and element order."""
        out = {
            "n": self.n,
            "family": str(self.family) if self.family is not None else None,
            "vertices": [str(w) for w in self.words()],
            "edges": [[i, j] for i, j in self.edges()],
        }
        if code is not None:
            self._check_same_graph(code)
            out["code"] = sorted(code.ids())
        return out

    def to_dot(self, code: "VertexSet | None" = None) -> str:
        """DOT text: every vertex declared, one line per edge, byte-stable."""
        if code is not None:
            self._check_same_graph(code)
        name = str(self.family) if self.family is not None else "induced"
        lines = [f'graph "{name} n={self.n}" {{']
        for i, w in enumerate(self.words()):
            mark = " [style=filled]" if code is not None and code.mask >> i & 1 else ""
            lines.append(f'  "{w}"{mark};')
        for i, j in self.edges():
            lines.append(f'  "{self.word(i)}" -- "{self.word(j)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def _check_same_graph(self, vs: "VertexSet"):
        if vs.graph is not self:
            raise ValueError("vertex set belongs to a different graph")


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of one graph, as a bitmap over dense ids."""

    graph: InducedGraph
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> len(self.graph):
            raise ValueError("bitmap contains ids outside the graph")

    @classmethod
    def from_words(cls, graph: InducedGraph, words) -> "VertexSet":
        mask = 0
        for w in words:
            mask |= 1 << graph.id_of(w)
        return cls(graph, mask)

    @classmethod
    def from_ids(cls, graph: InducedGraph, ids) -> "VertexSet":
        mask = 0
        for i in ids:
            if not 0 <= i < len(graph):
                raise ValueError(f"vertex id {i} out of range")
            mask |= 1 << i
        return cls(graph, mask)

    def ids(self) -> list[int]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def words(self) -> list[BitWord]:
        return [self.graph.word(i) for i in self.ids()]

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, w) -> bool:
        if isinstance(w, BitWord):
            i = self.graph.index.get(w.bits) if w.length == self.graph.n else None
            return i is not None and bool(self.mask >> i & 1)
        return bool(self.mask >> w & 1)


def build_graph(family: Family, n: int, max_vertices: int | None = None) -> InducedGraph:
    """Materialize the subgraph of Q_n induced by the family's members.

    The enumeration scan cap and the graph vertex cap both apply; either
    rejection names the cap that was hit.
    """
    cap = graph_cap() if max_vertices is None else max_vertices
    if family.kind == "qn" and (1 << n) > cap:
        raise ResourceLimitError(
            f"hypercube at n={n} has 2^{n} vertices, above the cap of {cap}"
            " (raise CUBECODES_GRAPH_CAP to override)",
            "graph_cap",
            cap,
        )
    vertices = list(iter_family_bits(family, n))
    if len(vertices) > cap:
        raise ResourceLimitError(
            f"graph would have {len(vertices)} vertices, above the cap of {cap}"
            " (raise CUBECODES_GRAPH_CAP to override)",
            "graph_cap",
            cap,
        )
    return InducedGraph(n, vertices, family)


def closed_neighborhood(graph: InducedGraph, v: BitWord) -> VertexSet:
    """N[v]: the vertex together with its neighbors in the graph."""
    return VertexSet(graph, graph.closed_mask(graph.id_of(v)))
