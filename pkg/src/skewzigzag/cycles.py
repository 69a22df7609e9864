"""Edge chains, the boundary map and fundamental cycle bases.

A chain is an integer combination of directed edges modulo
``(a|b) + (b|a) = 0``.  It is stored as one signed integer per undirected
edge, read in the canonical direction smaller -> larger endpoint.
"""

from dataclasses import dataclass

from .errors import NotACycle, NotClosed, ReconstructionMismatch, UnknownEdge
from .graphs import Walk, as_walk, edge_key, spanning_tree

__all__ = [
    "CycleVector",
    "BasisCycle",
    "FundamentalCycleBasis",
    "boundary",
    "chain_of",
    "walk_to_vector",
    "fundamental_basis",
    "decompose",
    "recompose",
]


class CycleVector:
    """Sparse signed edge vector; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for (a, b), m in (coeffs or {}).items():
            if a == b:
                raise UnknownEdge(f"{a}-{b} is a loop")
            key = edge_key(a, b)
            c[key] = c.get(key, 0) + (m if key == (a, b) else -m)
        self._c = {k: v for k, v in sorted(c.items()) if v}

    @classmethod
    def from_arrows(cls, arrows):
        """Sum of directed edges (a|b) given as pairs."""
        total = {}
        for a, b in arrows:
            key = edge_key(a, b)
            total[key] = total.get(key, 0) + (1 if key == (a, b) else -1)
        return cls(total)

    def coeff(self, a, b):
        """Coefficient of the directed edge (a|b)."""
        key = edge_key(a, b)
        m = self._c.get(key, 0)
        return m if key == (a, b) else -m

    def items(self):
        return self._c.items()

    def support(self):
        return tuple(self._c)

    @property
    def is_zero(self):
        return not self._c

    def __add__(self, other):
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return CycleVector(out)

    def __neg__(self):
        return CycleVector({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, n):
        return CycleVector({k: n * v for k, v in self._c.items()})

    def __eq__(self, other):
        if not isinstance(other, CycleVector):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        terms = " ".join(f"{v:+d}({a}|{b})" for (a, b), v in self._c.items())
        return f"CycleVector({terms or '0'})"

    def to_json(self):
        return {"coeffs": {f"{a}-{b}": v for (a, b), v in self._c.items()}}

    @classmethod
    def from_json(cls, data):
        coeffs = {}
        for key, v in data["coeffs"].items():
            a, sep, b = key.partition("-")
            if not sep or not isinstance(v, int):
                raise UnknownEdge(f"bad cycle vector entry {key!r}: {v!r}")
            coeffs[(a, b)] = v
        return cls(coeffs)


def chain_of(w):
    """The chain sum_i (a_i|a_{i+1}) of a walk; back-and-forth steps cancel."""
    return CycleVector.from_arrows(as_walk(w).arrows())


def walk_to_vector(w):
    w = as_walk(w)
    if not w.is_closed:
        raise NotClosed(f"walk {w} is not closed")
    return chain_of(w)


def boundary(x):
    """delta: (a|b) -> a - b, extended linearly.  Returns the nonzero
    vertex coefficients only, so a cycle maps to ``{}``."""
    if not isinstance(x, CycleVector):
        x = chain_of(x)
    out = {}
    for (a, b), m in x.items():
        out[a] = out.get(a, 0) + m
        out[b] = out.get(b, 0) - m
    return {k: v for k, v in sorted(out.items()) if v}


@dataclass(frozen=True)
class BasisCycle:
    walk: Walk
    vector: CycleVector
    edge: tuple  # distinguished directed edge (b_i|c_i), b_i < c_i


@dataclass(frozen=True, eq=False)
class FundamentalCycleBasis:
    """One cycle per non-tree edge; triangular in the non-tree edges."""

    tree: object
    cycles: tuple

    @property
    def graph(self):
        return self.tree.graph

    @property
    def edges(self):
        return tuple(c.edge for c in self.cycles)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __getitem__(self, i):
        return self.cycles[i]

    def __eq__(self, other):
        if not isinstance(other, FundamentalCycleBasis):
            return NotImplemented
        return self.graph == other.graph and self.tree.tree_edges == other.tree.tree_edges

    def __hash__(self):
        return hash((self.graph, self.tree.tree_edges))

    def to_json(self):
        return {
            "tree_edges": [f"{a}-{b}" for a, b in self.tree.tree_edges],
            "cycles": [
                {"edge": f"{c.edge[0]}-{c.edge[1]}",
                 "walk": list(c.walk.vertices),
                 "vector": c.vector.to_json()["coeffs"]}
                for c in self.cycles
            ],
        }


def fundamental_basis(g, tree=None):
    tree = tree or spanning_tree(g)
    cycles = []
    for x, y in tree.non_tree_edges:
        # tree path y -> x, then the non-tree edge x -> y
        walk = Walk(tuple(tree.path(y, x)) + (y,))
        cycles.append(BasisCycle(walk, walk_to_vector(walk), (x, y)))
    return FundamentalCycleBasis(tree, tuple(cycles))


def recompose(coeffs, basis):
    coeffs = list(coeffs)
    if len(coeffs) != len(basis):
        raise ValueError(f"expected {len(basis)} coefficients, got {len(coeffs)}")
    total = CycleVector()
    for m, c in zip(coeffs, basis):
        if m:
            total = total + m * c.vector
    return total


def decompose(z, basis):
    """Integer coordinates of a cycle in the fundamental basis.

    The i-th coordinate is the coefficient of the i-th non-tree edge, since
    no other basis cycle uses that edge.
    """
    if not isinstance(z, CycleVector):
        z = walk_to_vector(z)
    g = basis.graph
    for a, b in z.support():
        if not g.has_edge(a, b):
            raise UnknownEdge(f"{a}-{b} is not an edge")
    if boundary(z):
        raise NotACycle(f"boundary of {z!r} is {boundary(z)}")
    coeffs = tuple(z.coeff(*c.edge) for c in basis)
    if recompose(coeffs, basis) != z:
        raise ReconstructionMismatch(f"{z!r} is not spanned by the basis")
    return coeffs
