#!/usr/bin/env python3
"""Regenerates the graph6 atlas files under data/graphs/.

Sources:
  all_n{1..7}.g6   every simple graph on n vertices (networkx graph atlas)
  trees_n8.g6      every tree on 8 vertices (networkx nonisomorphic_trees)
  cubic_n6.g6      connected 3-regular graphs on 6 vertices
  cubic_n8.g6      connected 3-regular graphs on 8 vertices (backtracking
                   over degree-constrained edge sets, isomorphism-deduped)
"""

import itertools
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parent.parent / "data" / "graphs"


def g6(graph: nx.Graph) -> str:
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def write(name: str, comment: str, graphs: list[nx.Graph]) -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    lines = [f"# {comment}"] + [g6(g) for g in graphs]
    (OUT / name).write_text("\n".join(lines) + "\n")
    print(f"{name}: {len(graphs)} graphs")


def all_graphs_by_order() -> dict[int, list[nx.Graph]]:
    by_n: dict[int, list[nx.Graph]] = {n: [] for n in range(1, 8)}
    for g in nx.graph_atlas_g()[1:]:  # entry 0 is the empty graph
        by_n[g.number_of_nodes()].append(g)
    return by_n


def cubic_graphs(n: int) -> list[nx.Graph]:
    """All connected 3-regular graphs on n vertices, one per iso class."""
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[nx.Graph] = []

    def extend(i: int, deg: list[int], edges: list[tuple[int, int]]) -> None:
        if i == len(pairs):
            if all(d == 3 for d in deg):
                g = nx.Graph(edges)
                g.add_nodes_from(range(n))
                if nx.is_connected(g) and not any(
                    nx.is_isomorphic(g, r) for r in reps
                ):
                    reps.append(g)
            return
        u, v = pairs[i]
        # prune: remaining pairs touching u must be able to finish u's degree
        remaining_u = sum(1 for (a, b) in pairs[i:] if u in (a, b))
        if 3 - deg[u] > remaining_u:
            return
        extend(i + 1, deg, edges)
        if deg[u] < 3 and deg[v] < 3:
            deg[u] += 1
            deg[v] += 1
            edges.append((u, v))
            extend(i + 1, deg, edges)
            edges.pop()
            deg[u] -= 1
            deg[v] -= 1

    extend(0, [0] * n, [])
    return reps


def main() -> None:
    by_n = all_graphs_by_order()
    for n in range(1, 8):
        write(f"all_n{n}.g6", f"all simple graphs on {n} vertices", by_n[n])
    write("trees_n8.g6", "all trees on 8 vertices",
          list(nx.nonisomorphic_trees(8)))
    write("cubic_n6.g6", "connected cubic graphs on 6 vertices",
          cubic_graphs(6))
    write("cubic_n8.g6", "connected cubic graphs on 8 vertices",
          cubic_graphs(8))


if __name__ == "__main__":
    main()
