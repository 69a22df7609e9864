"""Simple graphs, their double quivers, walks, spanning trees and automorphisms.

Vertices are opaque strings ordered lexicographically; every "deterministic
order" in the package refers to that order.
"""

import json
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    Disconnected,
    DuplicateEdge,
    GraphSyntaxError,
    InvalidWalk,
    LoopEdge,
    NotAutomorphism,
    UnknownVertex,
)

__all__ = [
    "Graph",
    "DoubleQuiver",
    "Walk",
    "SpanningTree",
    "BipartiteCheck",
    "GraphAutomorphism",
    "parse_graph",
    "is_connected",
    "is_bipartite",
    "spanning_tree",
    "double_quiver",
    "enumerate_automorphisms",
    "apply_automorphism",
    "edge_key",
]


def edge_key(a, b):
    """Canonical (smaller, larger) key of the undirected edge {a, b}."""
    return (a, b) if a < b else (b, a)


class Graph:
    """A finite simple graph: no loops, no multi-edges."""

    __slots__ = ("vertices", "edges", "_adj")

    def __init__(self, vertices, edges):
        vertices = [str(x) for x in vertices]
        if len(set(vertices)) != len(vertices):
            raise GraphSyntaxError("duplicate vertex identifier")
        known = set(vertices)
        seen = set()
        adj = {x: [] for x in vertices}
        for pair in edges:
            if len(pair) != 2:
                raise GraphSyntaxError(f"edge {pair!r} is not a pair")
            a, b = (str(x) for x in pair)
            for x in (a, b):
                if x not in known:
                    raise UnknownVertex(f"edge {a}-{b} uses undeclared vertex {x!r}")
            if a == b:
                raise LoopEdge(f"loop at {a!r}")
            key = edge_key(a, b)
            if key in seen:
                raise DuplicateEdge(f"edge {key[0]}-{key[1]} listed twice")
            seen.add(key)
            adj[a].append(b)
            adj[b].append(a)
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(sorted(seen))
        self._adj = {x: tuple(sorted(ns)) for x, ns in adj.items()}

    def neighbors(self, x):
        return self._adj[x]

    def degree(self, x):
        return len(self._adj[x])

    def has_vertex(self, x):
        return x in self._adj

    def has_edge(self, a, b):
        return a in self._adj and b in self._adj[a]

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        es = ",".join(f"{a}{b}" if len(a) == len(b) == 1 else f"{a}-{b}"
                      for a, b in self.edges)
        return f"Graph(V={{{','.join(self.vertices)}}}, E={{{es}}})"

    def to_json(self):
        return {"vertices": list(self.vertices),
                "edges": [list(e) for e in self.edges]}

    def to_dot(self, name="G"):
        lines = [f"graph {name} {{"]
        lines += [f'  "{x}";' for x in self.vertices]
        lines += [f'  "{a}" -- "{b}";' for a, b in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"


_COMPACT = re.compile(r"^\s*V\s*=\s*\{(?P<v>[^}]*)\}\s*[,;]?\s*E\s*=\s*\{(?P<e>[^}]*)\}\s*$")


def _split_edge(token, vertices):
    for sep in ("-", "|", " "):
        if sep in token:
            parts = [p.strip() for p in token.split(sep) if p.strip()]
            if len(parts) != 2:
                raise GraphSyntaxError(f"cannot read edge {token!r}")
            return parts
    if len(token) == 2 and all(len(x) == 1 for x in vertices):
        return [token[0], token[1]]
    raise GraphSyntaxError(f"cannot read edge {token!r}; write it as 'a-b'")


def parse_graph(description):
    """Build a Graph from a JSON object, JSON text, or ``V={..}, E={..}`` text.

    >>> parse_graph("V={a,b,c}, E={ab,bc}").edges
    (('a', 'b'), ('b', 'c'))
    """
    if isinstance(description, Graph):
        return description
    if isinstance(description, str):
        text = description.strip()
        m = _COMPACT.match(text)
        if m:
            vs = [t.strip() for t in m.group("v").split(",") if t.strip()]
            es = [_split_edge(t.strip(), vs) for t in m.group("e").split(",") if t.strip()]
            return Graph(vs, es)
        try:
            description = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphSyntaxError(f"not a graph description: {exc}") from None
    if not isinstance(description, dict):
        raise GraphSyntaxError("graph JSON must be an object")
    if "vertices" not in description or "edges" not in description:
        raise GraphSyntaxError('graph JSON needs "vertices" and "edges"')
    vs, es = description["vertices"], description["edges"]
    if not isinstance(vs, list) or not isinstance(es, list):
        raise GraphSyntaxError('"vertices" and "edges" must be lists')
    if not all(isinstance(x, str) for x in vs):
        raise GraphSyntaxError("vertex identifiers must be strings")
    return Graph(vs, es)


@dataclass(frozen=True)
class Walk:
    """A vertex sequence (a_1, ..., a_n), n >= 1, read as the path (a_1|...|a_n)."""

    vertices: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise InvalidWalk("a walk needs at least one vertex")

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def source(self):
        return self.vertices[0]

    @property
    def target(self):
        return self.vertices[-1]

    @property
    def is_closed(self):
        return self.vertices[0] == self.vertices[-1]

    def reverse(self):
        """The walk P* traversed backwards."""
        return Walk(self.vertices[::-1])

    def concat(self, other):
        """P1 P2; the target of P1 must be the source of P2."""
        if self.target != other.source:
            raise InvalidWalk(f"cannot concatenate: {self.target!r} != {other.source!r}")
        return Walk(self.vertices + other.vertices[1:])

    def arrows(self):
        return list(zip(self.vertices, self.vertices[1:]))

    def check(self, graph):
        for x in self.vertices:
            if not graph.has_vertex(x):
                raise InvalidWalk(f"{x!r} is not a vertex")
        for a, b in self.arrows():
            if not graph.has_edge(a, b):
                raise InvalidWalk(f"{a!r} and {b!r} are not adjacent")
        return self

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __str__(self):
        return "(" + "|".join(self.vertices) + ")"


def as_walk(w, graph=None):
    if not isinstance(w, Walk):
        w = Walk(tuple(w))
    if graph is not None:
        w.check(graph)
    return w


def is_connected(g):
    if not g.vertices:
        return True
    seen = {g.vertices[0]}
    todo = [g.vertices[0]]
    while todo:
        x = todo.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(g.vertices)


def require_connected(g):
    if not is_connected(g):
        raise Disconnected("graph is not connected")


@dataclass(frozen=True)
class BipartiteCheck:
    bipartite: bool
    parts: tuple = None
    odd_cycle: Walk = None

    def __bool__(self):
        return self.bipartite


def is_bipartite(g):
    """Breadth-first 2-colouring; returns a bipartition or an odd cycle."""
    colour, parent, depth = {}, {}, {}
    for root in g.vertices:
        if root in colour:
            continue
        colour[root], parent[root], depth[root] = 0, None, 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y not in colour:
                    colour[y], parent[y], depth[y] = 1 - colour[x], x, depth[x] + 1
                    queue.append(y)
                elif colour[y] == colour[x]:
                    return BipartiteCheck(False, odd_cycle=_odd_cycle(x, y, parent, depth))
    a = tuple(x for x in g.vertices if colour[x] == 0)
    b = tuple(x for x in g.vertices if colour[x] == 1)
    return BipartiteCheck(True, parts=(a, b))


def _odd_cycle(x, y, parent, depth):
    # climb both BFS branches to their meeting point
    left, right = [x], [y]
    while depth[left[-1]] > depth[right[-1]]:
        left.append(parent[left[-1]])
    while depth[right[-1]] > depth[left[-1]]:
        right.append(parent[right[-1]])
    while left[-1] != right[-1]:
        left.append(parent[left[-1]])
        right.append(parent[right[-1]])
    top = left[-1]
    return Walk(tuple(reversed(left)) + tuple(right[:-1]) + (top,))


@dataclass(frozen=True)
class SpanningTree:
    """Breadth-first spanning tree rooted at the least vertex."""

    graph: Graph
    root: str
    tree_edges: tuple      # canonical keys, in discovery order
    non_tree_edges: tuple  # canonical keys, lexicographic
    parent: dict

    def depth(self, x):
        d = 0
        while self.parent[x] is not None:
            x = self.parent[x]
            d += 1
        return d

    def path(self, start, end):
        """Vertices of the unique tree path from ``start`` to ``end``."""
        up, down = [start], [end]
        while self.depth(up[-1]) > self.depth(down[-1]):
            up.append(self.parent[up[-1]])
        while self.depth(down[-1]) > self.depth(up[-1]):
            down.append(self.parent[down[-1]])
        while up[-1] != down[-1]:
            up.append(self.parent[up[-1]])
            down.append(self.parent[down[-1]])
        return up + down[-2::-1]

    def is_tree_edge(self, a, b):
        return self.parent.get(a) == b or self.parent.get(b) == a


def spanning_tree(g):
    require_connected(g)
    if not g.vertices:
        raise Disconnected("empty graph has no spanning tree")
    root = g.vertices[0]
    parent = {root: None}
    tree = []
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in parent:
                parent[y] = x
                tree.append(edge_key(x, y))
                queue.append(y)
    in_tree = set(tree)
    rest = tuple(e for e in g.edges if e not in in_tree)
    return SpanningTree(g, root, tuple(tree), rest, parent)


@dataclass(frozen=True)
class DoubleQuiver:
    base: Graph
    arrows: tuple

    def to_dot(self, name="DG"):
        lines = [f"digraph {name} {{"]
        lines += [f'  "{x}";' for x in self.base.vertices]
        lines += [f'  "{a}" -> "{b}";' for a, b in self.arrows]
        lines.append("}")
        return "\n".join(lines) + "\n"


def double_quiver(g):
    arrows = sorted([(a, b) for a, b in g.edges] + [(b, a) for a, b in g.edges])
    return DoubleQuiver(g, tuple(arrows))


class GraphAutomorphism:
    """A vertex permutation; ``(s * t)(x) == s(t(x))``."""

    __slots__ = ("_map",)

    def __init__(self, mapping):
        self._map = dict(mapping)
        if sorted(self._map) != sorted(self._map.values()):
            raise NotAutomorphism("mapping is not a permutation")

    @classmethod
    def identity(cls, g):
        return cls({x: x for x in g.vertices})

    def __call__(self, x):
        return self._map[x]

    def mapping(self):
        return dict(sorted(self._map.items()))

    def inverse(self):
        return GraphAutomorphism({y: x for x, y in self._map.items()})

    def __mul__(self, other):
        return GraphAutomorphism({x: self._map[other(x)] for x in other._map})

    @property
    def is_identity(self):
        return all(x == y for x, y in self._map.items())

    def preserves(self, g):
        if sorted(self._map) != list(g.vertices):
            return False
        return all(g.has_edge(self(a), self(b)) for a, b in g.edges)

    def __eq__(self, other):
        if not isinstance(other, GraphAutomorphism):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return hash(tuple(sorted(self._map.items())))

    def cycle_notation(self):
        seen, out = set(), []
        for x in sorted(self._map):
            if x in seen or self._map[x] == x:
                continue
            cyc, y = [], x
            while y not in seen:
                seen.add(y)
                cyc.append(y)
                y = self._map[y]
            out.append("(" + " ".join(cyc) + ")")
        return "".join(out) or "id"

    def __repr__(self):
        return f"GraphAutomorphism({self.cycle_notation()})"


def enumerate_automorphisms(g):
    """All automorphisms of ``g``, identity first, in lexicographic order of
    the image tuple (sigma(v_1), ..., sigma(v_n))."""
    return list(_automorphisms(g))


@lru_cache(maxsize=256)
def _automorphisms(g):
    vs = g.vertices
    images = {}
    used = set()
    found = []

    def extend(i):
        if i == len(vs):
            found.append(GraphAutomorphism(images))
            return
        x = vs[i]
        for y in vs:
            if y in used or g.degree(y) != g.degree(x):
                continue
            if any(g.has_edge(x, w) != g.has_edge(y, images[w]) for w in vs[:i]):
                continue
            images[x] = y
            used.add(y)
            extend(i + 1)
            used.discard(y)
            del images[x]

    extend(0)
    return tuple(found)


def apply_automorphism(sigma, w):
    w = as_walk(w)
    return Walk(tuple(sigma(x) for x in w.vertices))
