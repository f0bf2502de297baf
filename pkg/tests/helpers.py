from itertools import combinations

import networkx as nx
import numpy as np

from components.generate import generate_instance
from schemas.instance import Instance, Point

LINE5 = [(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)]


def make_instance(coords, d):
    return Instance(points=[Point(x=x, y=y) for x, y in coords], d=d)


def seeded_instances(count, n_range, d_choices, width, height, seed=0):
    """Deterministic mixed uniform/cluster instances."""
    rng = np.random.default_rng(seed)
    instances = []
    for index in range(count):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        d = int(d_choices[index % len(d_choices)])
        dist = "cluster" if index % 3 == 2 else "uniform"
        instances.append(generate_instance(n, d, width, height, dist, seed * 10_000 + index))
    return instances


def networkx_mis_size(graph: nx.Graph) -> int:
    if graph.number_of_nodes() == 0:
        return 0
    clique, _ = nx.max_weight_clique(nx.complement(graph), weight=None)
    return len(clique)


def networkx_mds_size(graph: nx.Graph) -> int:
    nodes = sorted(graph.nodes)
    if not nodes:
        return 0
    for size in range(1, len(nodes) + 1):
        for chosen in combinations(nodes, size):
            if nx.is_dominating_set(graph, chosen):
                return size
    raise AssertionError("unreachable")
