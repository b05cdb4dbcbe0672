"""Core graph representation, graph6/edge-list I/O, BFS layers, and family generators.

Graphs are simple and undirected, with dense 0-based vertex ids. A ``Graph`` is
immutable after construction: adjacency is stored as a tuple of frozensets, so
instances can be shared freely and used as dict keys.

Vertex sets throughout the library are plain ``frozenset[int]`` / ``set[int]``
values; there is no wrapper class.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    DisconnectedGraphError,
    EdgeListFormatError,
    Graph6FormatError,
    GraphConstructionError,
)

GRAPH6_HEADER = ">>graph6<<"

# Largest n representable by the 4-byte graph6 size form (single byte covers n <= 62).
_GRAPH6_MAX_N = 258047


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with frozen adjacency sets."""

    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphConstructionError(f"negative vertex count {self.n}")
        if len(self.adj) != self.n:
            raise GraphConstructionError(
                f"adjacency length {len(self.adj)} does not match n={self.n}"
            )
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if not 0 <= v < self.n:
                    raise GraphConstructionError(f"neighbor {v} of {u} out of range")
                if v == u:
                    raise GraphConstructionError(f"loop at vertex {u}")
                if u not in self.adj[v]:
                    raise GraphConstructionError(f"asymmetric edge {u}-{v}")

    @property
    def vertices(self) -> range:
        return range(self.n)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(self.n))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in non-increasing order."""
        return tuple(sorted((len(nbrs) for nbrs in self.adj), reverse=True))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the given vertices, relabeled 0..k-1 in sorted order."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        adj = [frozenset(index[w] for w in self.adj[v] if w in index) for v in order]
        return Graph(len(order), tuple(adj))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph with vertex order[i] renamed to i; order must be a permutation."""
        index = {v: i for i, v in enumerate(order)}
        if len(index) != self.n:
            raise GraphConstructionError("relabel order is not a permutation")
        adj = [frozenset()] * self.n
        for v, i in index.items():
            adj[i] = frozenset(index[w] for w in self.adj[v])
        return Graph(self.n, tuple(adj))


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers from a root: layers[i] holds the vertices at distance exactly i."""

    root: int
    layers: tuple[frozenset[int], ...] = field(default_factory=tuple)

    def layer(self, i: int) -> frozenset[int]:
        """Layer i, empty beyond the last nonempty one."""
        if 0 <= i < len(self.layers):
            return self.layers[i]
        return frozenset()

    @property
    def depth(self) -> int:
        """Index of the last nonempty layer (the root's eccentricity)."""
        return len(self.layers) - 1

    def covered(self) -> frozenset[int]:
        """All vertices reached from the root (its component)."""
        return frozenset().union(*self.layers) if self.layers else frozenset()


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from explicit edges, rejecting loops and duplicates."""
    if n < 0:
        raise GraphConstructionError(f"negative vertex count {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u},{v}) has an id outside [0,{n})")
        if u == v:
            raise GraphConstructionError(f"loop edge ({u},{v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphConstructionError(f"duplicate edge ({u},{v})")
        seen.add(key)
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in adj))


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line (the ">>graph6<<" header is tolerated and stripped).

    Missing trailing body bytes are read as all-zero bits; extra bytes and
    nonzero padding bits are rejected.
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise Graph6FormatError("empty graph6 string")
    data = s.encode("ascii", errors="replace")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6FormatError(f"byte {b} outside graph6 range [63,126]")
    n, body = _decode_size(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) > nbytes:
        raise Graph6FormatError(
            f"trailing garbage: {len(body)} body bytes where at most {nbytes} expected"
        )
    bits = []
    for b in body:
        val = b - 63
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6FormatError("nonzero padding bits")
    bits.extend([0] * (nbits - len(bits)))
    adj: list[set[int]] = [set() for _ in range(n)]
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                adj[u].add(v)
                adj[v].add(u)
            idx += 1
    return Graph(n, tuple(frozenset(s) for s in adj))


def to_graph6(graph: Graph) -> str:
    """Encode a graph as a canonical-length graph6 string (no header, no newline)."""
    n = graph.n
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if graph.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    out = bytearray(_encode_size(n))
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return out.decode("ascii")


def _decode_size(data: bytes) -> tuple[int, bytes]:
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) < 4 or data[1] == 126:
        raise Graph6FormatError("unsupported or truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, data[4:]


def _encode_size(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= _GRAPH6_MAX_N:
        return bytes([126, ((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    raise Graph6FormatError(f"graph order {n} exceeds supported graph6 range")


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v"; '#' comments.
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise EdgeListFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise EdgeListFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise EdgeListFormatError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise EdgeListFormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListFormatError(f"edge line must be 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise EdgeListFormatError(f"non-integer edge line {line!r}") from exc
    try:
        return from_edge_list(n, edges)
    except GraphConstructionError as exc:
        raise EdgeListFormatError(str(exc)) from exc


def to_edge_list(graph: Graph) -> str:
    """Serialize a graph in the edge-list text format."""
    edges = graph.edges()
    lines = [f"{graph.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Neighborhoods, domination relation, BFS
# ---------------------------------------------------------------------------

def _bad_id(v: int, n: int) -> GraphConstructionError:
    return GraphConstructionError(f"vertex id {v} outside [0,{n})")


def closed_neighborhood(graph: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """N[X]: the members of X together with all their neighbors."""
    result: set[int] = set()
    for v in vertices:
        if not 0 <= v < graph.n:
            raise _bad_id(v, graph.n)
        result.add(v)
        result |= graph.adj[v]
    return frozenset(result)


def dominates(graph: Graph, dominators: Iterable[int], targets: Iterable[int]) -> bool:
    """True iff every target lies in the closed neighborhood of the dominators."""
    return set(targets) <= closed_neighborhood(graph, dominators)


def bfs_layers(graph: Graph, root: int) -> LayerDecomposition:
    """Distance layers from root; trailing empty layers are omitted."""
    if not 0 <= root < graph.n:
        raise _bad_id(root, graph.n)
    dist = {root: 0}
    queue = deque([root])
    layers: list[set[int]] = [{root}]
    while queue:
        v = queue.popleft()
        for w in sorted(graph.adj[v]):
            if w not in dist:
                dist[w] = dist[v] + 1
                if dist[w] == len(layers):
                    layers.append(set())
                layers[dist[w]].add(w)
                queue.append(w)
    return LayerDecomposition(root, tuple(frozenset(s) for s in layers))


def eccentricity(graph: Graph, v: int) -> int:
    """Maximum distance from v within its component."""
    return bfs_layers(graph, v).depth


def min_eccentricity_vertex(graph: Graph) -> int:
    """Vertex of minimum eccentricity, lowest id on ties."""
    if graph.n == 0:
        raise DisconnectedGraphError("empty graph has no vertices")
    best, best_ecc = 0, None
    for v in range(graph.n):
        ecc = eccentricity(graph, v)
        if best_ecc is None or ecc < best_ecc:
            best, best_ecc = v, ecc
    return best


def is_connected(graph: Graph) -> bool:
    """One BFS from vertex 0 reaches everything; the empty graph is not connected."""
    if graph.n == 0:
        return False
    return len(bfs_layers(graph, 0).covered()) == graph.n


# ---------------------------------------------------------------------------
# Family generators. Labelings are fixed so tests can address named vertices:
#   K*_n: clique x_1..x_n at ids 0..n-1, pendant y_i at id n-1+i.
#   S*_n: center x at id 0, middle y_i at id i, tip z_i at id n+i.
# ---------------------------------------------------------------------------

def _require_positive(n: int, family: str) -> None:
    if n < 1:
        raise GraphConstructionError(f"{family} requires n >= 1, got {n}")


def gen_path(n: int) -> Graph:
    """Path P_n with ids 0..n-1 along the path."""
    _require_positive(n, "gen_path")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def gen_complete(n: int) -> Graph:
    """Complete graph K_n."""
    _require_positive(n, "gen_complete")
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def gen_empty(n: int) -> Graph:
    """Edgeless graph on n vertices (n = 0 allowed)."""
    if n < 0:
        raise GraphConstructionError(f"gen_empty requires n >= 0, got {n}")
    return Graph(n, tuple(frozenset() for _ in range(n)))


def gen_k_star(n: int) -> Graph:
    """K*_n: an n-clique with one pendant vertex attached to each clique vertex."""
    _require_positive(n, "gen_k_star")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges.extend((i, n + i) for i in range(n))
    return from_edge_list(2 * n, edges)


def gen_s_star(n: int) -> Graph:
    """S*_n: a spider with n legs of length two hanging off a central vertex."""
    _require_positive(n, "gen_s_star")
    edges = [(0, i) for i in range(1, n + 1)]
    edges.extend((i, n + i) for i in range(1, n + 1))
    return from_edge_list(2 * n + 1, edges)


def kstar_clique_vertex(n: int, i: int) -> int:
    """Id of x_i in gen_k_star(n), 1-based i."""
    return i - 1


def kstar_pendant_vertex(n: int, i: int) -> int:
    """Id of y_i in gen_k_star(n), 1-based i."""
    return n + i - 1


def sstar_center_vertex() -> int:
    """Id of x in gen_s_star(n)."""
    return 0


def sstar_middle_vertex(n: int, i: int) -> int:
    """Id of y_i in gen_s_star(n), 1-based i."""
    return i


def sstar_tip_vertex(n: int, i: int) -> int:
    """Id of z_i in gen_s_star(n), 1-based i."""
    return n + i
