"""Graph corpora: exhaustive small-graph enumeration and seeded random sampling.

The connected graphs on up to 8 vertices (one representative per isomorphism
class) ship as a packaged graph6 fixture. Running this module as a script
regenerates the fixture from scratch; the enumeration is independent of the
shipped file, so the test suite can cross-check counts.

Isomorph rejection uses a canonical labeling computed by equitable partition
refinement with individualization. There is no automorphism pruning, so very
symmetric graphs cost more time, which is acceptable at fixture scale.
"""

from __future__ import annotations

import random
from importlib import resources
from typing import Iterable, Iterator, Optional, Sequence

from .graph_core import Graph, from_edge_list, is_connected, parse_graph6, to_graph6
from .subgraph import is_free

CORPUS_FILE = "connected_n_le_8.g6"
CORPUS_MAX_N = 8

# Connected graphs per vertex count, for validating enumeration and fixture.
EXPECTED_CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


# ---------------------------------------------------------------------------
# Canonical labeling
# ---------------------------------------------------------------------------

def _refine(graph: Graph, cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Equitable refinement: split cells by neighbor count into every cell."""
    while True:
        for splitter in cells:
            splitter_set = frozenset(splitter)
            new_cells: list[tuple[int, ...]] = []
            split_happened = False
            for cell in cells:
                if len(cell) == 1:
                    new_cells.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for v in cell:
                    groups.setdefault(len(graph.adj[v] & splitter_set), []).append(v)
                if len(groups) == 1:
                    new_cells.append(cell)
                else:
                    split_happened = True
                    for count in sorted(groups):
                        new_cells.append(tuple(groups[count]))
            if split_happened:
                cells = new_cells
                break
        else:
            return cells


def canonical_graph6(graph: Graph) -> str:
    """Label-independent graph6 string: equal iff the graphs are isomorphic.

    Minimum graph6 encoding over the leaves of the refinement plus
    individualization search tree.
    """
    if graph.n == 0:
        return to_graph6(graph)
    best: Optional[str] = None

    def search(cells: list[tuple[int, ...]]) -> None:
        nonlocal best
        cells = _refine(graph, cells)
        target = next((idx for idx, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [v for (v,) in cells]
            encoded = to_graph6(graph.relabel(order))
            if best is None or encoded < best:
                best = encoded
            return
        cell = cells[target]
        for v in cell:
            rest = tuple(u for u in cell if u != v)
            search(cells[:target] + [(v,), rest] + cells[target + 1:])

    search([tuple(range(graph.n))])
    assert best is not None
    return best


def canonical_form(graph: Graph) -> Graph:
    """Canonical representative of the graph's isomorphism class."""
    return parse_graph6(canonical_graph6(graph))


def are_isomorphic(first: Graph, second: Graph) -> bool:
    """Isomorphism test via canonical labels."""
    if first.n != second.n or first.edge_count() != second.edge_count():
        return False
    return canonical_graph6(first) == canonical_graph6(second)


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------

def enumerate_connected_graphs(max_n: int) -> dict[int, list[Graph]]:
    """All connected graphs with 1..max_n vertices, one per isomorphism class.

    Augmentation: every connected graph on n vertices is some connected graph
    on n-1 vertices plus a new vertex joined to a nonempty subset (delete any
    non-cut vertex, e.g. a spanning-tree leaf, to see this). Children are
    deduplicated by canonical label and returned canonically labeled, sorted
    by their graph6 string.
    """
    if max_n < 1:
        return {}
    result: dict[int, list[Graph]] = {1: [Graph(1, (frozenset(),))]}
    for n in range(2, max_n + 1):
        seen: set[str] = set()
        for parent in result[n - 1]:
            base_edges = parent.edges()
            for mask in range(1, 1 << (n - 1)):
                edges = base_edges + [
                    (i, n - 1) for i in range(n - 1) if mask >> i & 1
                ]
                seen.add(canonical_graph6(from_edge_list(n, edges)))
        result[n] = [parse_graph6(key) for key in sorted(seen)]
    return result


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices, one per edge-subset, 2^(n(n-1)/2) total."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield from_edge_list(n, edges)


# ---------------------------------------------------------------------------
# Fixture I/O
# ---------------------------------------------------------------------------

def fixture_path():
    return resources.files("domcert").joinpath("data").joinpath(CORPUS_FILE)


def load_fixture_corpus() -> dict[int, list[Graph]]:
    """Parse the packaged corpus, grouped by vertex count."""
    grouped: dict[int, list[Graph]] = {}
    for line in fixture_path().read_text().splitlines():
        line = line.strip()
        if line:
            graph = parse_graph6(line)
            grouped.setdefault(graph.n, []).append(graph)
    return grouped


def corpus_graphs(max_n: int = CORPUS_MAX_N) -> list[Graph]:
    """Flat list of the fixture graphs with at most max_n vertices."""
    grouped = load_fixture_corpus()
    return [g for n in sorted(grouped) if n <= max_n for g in grouped[n]]


def write_fixture(path, max_n: int = CORPUS_MAX_N) -> dict[int, int]:
    """Regenerate the corpus file; returns the per-size counts written."""
    grouped = enumerate_connected_graphs(max_n)
    lines = [to_graph6(g) for n in sorted(grouped) for g in grouped[n]]
    with open(path, "w") as handle:
        handle.write("\n".join(lines) + "\n")
    return {n: len(graphs) for n, graphs in grouped.items()}


# ---------------------------------------------------------------------------
# Seeded random sampling
# ---------------------------------------------------------------------------

def erdos_renyi(n: int, p: float, rng: random.Random) -> Graph:
    """One draw of G(n, p) using the supplied generator."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edge_list(n, edges)


def sample_free_connected(
    count: int,
    configs: Sequence[tuple[int, float]],
    patterns: Iterable[Graph],
    seed: int,
    max_attempts: Optional[int] = None,
) -> list[Graph]:
    """Rejection-sample connected graphs free of all patterns.

    Draws cycle through the (n, p) configs; connectivity and freeness are
    rechecked on every draw, so the output is certified, not heuristic.
    Deterministic for a fixed seed and config sequence.
    """
    pattern_list = list(patterns)
    rng = random.Random(seed)
    out: list[Graph] = []
    attempts = 0
    limit = max_attempts if max_attempts is not None else 4000 * max(count, 1)
    while len(out) < count:
        if attempts >= limit:
            raise RuntimeError(
                f"sampling stalled: {len(out)}/{count} accepted in {attempts} draws"
            )
        n, p = configs[attempts % len(configs)]
        attempts += 1
        graph = erdos_renyi(n, p, rng)
        if is_connected(graph) and is_free(graph, pattern_list):
            out.append(graph)
    return out


def main() -> None:
    import os

    target = os.path.join(os.path.dirname(__file__), "data", CORPUS_FILE)
    counts = write_fixture(target)
    for n in sorted(counts):
        print(f"n={n}: {counts[n]} connected graphs")
    print(f"wrote {sum(counts.values())} graphs to {target}")


if __name__ == "__main__":
    main()
