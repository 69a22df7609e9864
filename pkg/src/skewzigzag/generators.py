"""Seeded random graphs, coefficient families and closed walks for tests."""

from fractions import Fraction

from .coefficients import SkewCoefficients
from .graphs import Graph, Walk, spanning_tree

SMALL_VALUES = tuple(Fraction(p, q) for p in (-3, -2, -1, 1, 2, 3, 5) for q in (1, 2, 3))


def random_connected_graph(rng, n, extra=None):
    """Random tree on n vertices plus ``extra`` random chords."""
    vs = [chr(ord("a") + i) for i in range(n)]
    rng.shuffle(order := list(vs))
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    missing = [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:] if (a, b) not in edges]
    if extra is None:
        extra = rng.randint(0, len(missing))
    edges |= set(rng.sample(missing, min(extra, len(missing))))
    return Graph(vs, sorted(edges))


def random_tree(rng, n):
    return random_connected_graph(rng, n, extra=0)


def random_family(rng, g, values=SMALL_VALUES):
    return SkewCoefficients(g, {x: {y: rng.choice(values) for y in g.neighbors(x)}
                                for x in g.vertices})


def random_closed_walk(rng, g, steps):
    """A random walk of ``steps`` steps, closed up along the spanning tree."""
    start = rng.choice(g.vertices)
    seq = [start]
    for _ in range(steps):
        ns = g.neighbors(seq[-1])
        if not ns:
            break
        seq.append(rng.choice(ns))
    back = spanning_tree(g).path(seq[-1], start)
    return Walk(tuple(seq) + tuple(back[1:]))
