import random

import pytest

from voltage_tower import (
    CraterSpec,
    DirectedMultigraph,
    VolcanoSpec,
    bouquet,
    directed_cycle,
    doubled,
    is_connected,
    volcano,
)


def path_graph(k: int) -> DirectedMultigraph:
    return DirectedMultigraph(
        k, tuple((i, i + 1) for i in range(k - 1)), name=f"path({k})"
    )


def _random_multigraphs(count: int, seed: int = 20240) -> list[DirectedMultigraph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, 6)
        m = rng.randint(n, 10)
        edges = tuple(
            (rng.randrange(n), rng.randrange(n)) for _ in range(m)
        )
        g = DirectedMultigraph(n, edges, name=f"random({len(out)})")
        if is_connected(g):
            out.append(g)
    return out


def build_corpus() -> list[DirectedMultigraph]:
    """Connected graphs with at most 16 edges: cycles, bouquets, small
    volcanoes, doubled paths and cycles, assorted multigraphs."""
    graphs = [directed_cycle(k) for k in range(1, 7)]
    graphs += [bouquet(k) for k in (1, 2, 3)]
    graphs += [
        volcano(VolcanoSpec(2, 1, CraterSpec.cycle(3))),
        volcano(VolcanoSpec(2, 1, CraterSpec.cycle(1))),
        volcano(VolcanoSpec(2, 1, CraterSpec.two_loops())),
        volcano(VolcanoSpec(3, 1, CraterSpec.cycle(2))),
        volcano(VolcanoSpec(2, 2, CraterSpec.cycle(1))),
        volcano(VolcanoSpec(2, 2, CraterSpec.cycle(4))),
    ]
    graphs += [doubled(path_graph(k)) for k in (2, 3, 4)]
    graphs += [doubled(directed_cycle(k)) for k in (3, 4, 5)]
    graphs += [doubled(volcano(VolcanoSpec(2, 1, CraterSpec.cycle(3))))]
    graphs += [
        DirectedMultigraph(2, ((0, 1), (1, 0)), name="digon"),
        DirectedMultigraph(2, ((0, 1), (0, 1)), name="parallel-pair"),
        DirectedMultigraph(2, ((0, 1), (0, 1), (1, 0)), name="triple-link"),
        DirectedMultigraph(
            3, ((0, 1), (1, 2), (2, 0), (0, 2)), name="triangle-chord"
        ),
        DirectedMultigraph(1, (), name="point"),
    ]
    graphs += _random_multigraphs(9)
    assert all(len(g.edges) <= 16 for g in graphs)
    assert all(is_connected(g) for g in graphs)
    assert len(graphs) >= 30
    return graphs


@pytest.fixture(scope="session")
def corpus() -> list[DirectedMultigraph]:
    return build_corpus()
