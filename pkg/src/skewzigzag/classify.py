"""Deciding and certifying isomorphisms between skew-zigzag algebras.

Two families give vertex-fixing isomorphic algebras exactly when their
cohomology classes agree; arbitrary graded isomorphisms add a graph
automorphism in front.  Every positive answer comes with an explicit map
that :func:`verify_homomorphism` checks against the multiplication tables.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import build
from .coefficients import (
    SkewCoefficients,
    act,
    act_class,
    class_of,
    cycle_product,
    format_scalar,
    ones,
    to_scalar,
)
from .cycles import fundamental_basis
from .errors import GraphMismatch, NotEquivalent, ScalarSyntaxError
from .graphs import (
    GraphAutomorphism,
    Walk,
    edge_key,
    enumerate_automorphisms,
    is_bipartite,
    require_connected,
    spanning_tree,
)

__all__ = [
    "Obstruction",
    "EquivalenceVerdict",
    "EdgeScaling",
    "IsoCertificate",
    "HomomorphismCheck",
    "OrientationCoefficients",
    "ObstructionReport",
    "decide_equivalent",
    "construct_vertex_fixing_iso",
    "verify_homomorphism",
    "decide_isomorphic",
    "orientation_to_coefficients",
    "all_orientations",
    "check_bipartite_obstruction",
]

EXHAUSTIVE_EDGE_LIMIT = 12
SAMPLED_ORIENTATIONS = 256


@dataclass(frozen=True)
class Obstruction:
    cycle: Walk
    lhs: Fraction
    rhs: Fraction

    def to_json(self):
        return {"cycle": list(self.cycle.vertices),
                "lhs": format_scalar(self.lhs), "rhs": format_scalar(self.rhs)}


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    obstruction: Obstruction = None

    def __bool__(self):
        return self.equivalent


def _same_graph(v, u):
    if v.graph != u.graph:
        raise GraphMismatch("coefficient families live on different graphs")
    require_connected(v.graph)


def decide_equivalent(v, u):
    """Is there a graded isomorphism A_v -> A_u fixing every vertex?"""
    _same_graph(v, u)
    if len(v.graph.vertices) <= 2:
        return EquivalenceVerdict(True)
    basis = fundamental_basis(v.graph)
    fv, fu = class_of(v, basis), class_of(u, basis)
    i = fv.first_difference(fu)
    if i is None:
        return EquivalenceVerdict(True)
    return EquivalenceVerdict(False, Obstruction(basis[i].walk, fv.values[i], fu.values[i]))


class EdgeScaling:
    """Arrow scalars alpha_{d,e} of a vertex-fixing map [d|e] -> alpha_{d,e}[d|e].

    Only the products beta_{d,e} = alpha_{d,e} alpha_{e,d} matter; the default
    split puts beta on the canonical direction and 1 on the other.
    """

    __slots__ = ("alpha",)

    def __init__(self, alpha):
        self.alpha = {k: Fraction(q) for k, q in sorted(alpha.items())}

    @classmethod
    def from_beta(cls, beta):
        alpha = {}
        for (a, b), q in beta.items():
            alpha[(a, b)] = Fraction(q)
            alpha[(b, a)] = Fraction(1)
        return cls(alpha)

    @classmethod
    def identity(cls, graph):
        return cls.from_beta({e: 1 for e in graph.edges})

    def __call__(self, d, e):
        return self.alpha[(d, e)]

    def beta(self, d, e):
        return self.alpha[(d, e)] * self.alpha[(e, d)]

    def edges(self):
        return sorted({edge_key(a, b) for a, b in self.alpha})

    def with_alpha(self, d, e, q):
        alpha = dict(self.alpha)
        alpha[(d, e)] = Fraction(q)
        return EdgeScaling(alpha)

    def __eq__(self, other):
        if not isinstance(other, EdgeScaling):
            return NotImplemented
        return self.alpha == other.alpha

    def __repr__(self):
        return f"EdgeScaling({', '.join(f'{a}-{b}: {self.beta(a, b)}' for a, b in self.edges())})"

    def to_json(self):
        return {f"{a}-{b}": {"forward": format_scalar(self.alpha[(a, b)]),
                             "backward": format_scalar(self.alpha[(b, a)])}
                for a, b in self.edges()}

    @classmethod
    def from_json(cls, data):
        alpha = {}
        for key, row in data.items():
            a, sep, b = key.partition("-")
            if not sep:
                raise ScalarSyntaxError(f"bad edge key {key!r}")
            alpha[(a, b)] = to_scalar(row["forward"])
            alpha[(b, a)] = to_scalar(row["backward"])
        return cls(alpha)


def construct_vertex_fixing_iso(v, u):
    """Edge scalars of a vertex-fixing isomorphism A_v -> A_u.

    The map must satisfy u^x_{z,y} = (beta_{x,y}/beta_{x,z}) v^x_{z,y}, so
    beta_{x,y} = lam_x * h_x(y) with h_x = (u-weights)/(v-weights) at x.
    lam is propagated from the root along the spanning tree; each non-tree
    edge is then a consistency check, equivalent to equal cycle products on
    its fundamental cycle.
    """
    _same_graph(v, u)
    g = v.graph
    if len(g.vertices) == 1:
        return EdgeScaling({})
    tree = spanning_tree(g)

    def h(x, y):
        return u.weight(x, y) / v.weight(x, y)

    lam = {tree.root: Fraction(1)}
    beta = {}
    for a, b in tree.tree_edges:
        p, c = (a, b) if tree.parent.get(b) == a else (b, a)
        beta[(a, b)] = lam[p] * h(p, c)
        lam[c] = beta[(a, b)] / h(c, p)
    for x, y in tree.non_tree_edges:
        left, right = lam[x] * h(x, y), lam[y] * h(y, x)
        if left != right:
            walk = Walk(tuple(tree.path(y, x)) + (y,))
            raise NotEquivalent(Obstruction(walk, cycle_product(v, walk), cycle_product(u, walk)))
        beta[(x, y)] = left
    return EdgeScaling.from_beta(beta)


@dataclass(frozen=True)
class HomomorphismCheck:
    ok: bool
    failure: str = None

    def __bool__(self):
        return self.ok


def _images(cert_sigma, scaling, av, au):
    """phi on the basis of A_v as (index in A_u, coefficient) pairs, or None
    when some basis element maps to zero or to a non-monomial."""
    imgs = []
    for b in av.basis:
        if b.path is None:
            imgs.append((au.index[b.label], Fraction(1)))
        elif b.degree == 0:
            imgs.append((au.index[f"[{cert_sigma(b.source)}]"], Fraction(1)))
        elif b.degree == 1:
            d, e = b.path
            imgs.append((au.index[f"[{cert_sigma(d)}|{cert_sigma(e)}]"], scaling(d, e)))
        else:
            x, y, _ = b.path
            k1, c1 = imgs[av.index[f"[{x}|{y}]"]]
            k2, c2 = imgs[av.index[f"[{y}|{x}]"]]
            hit = au.table.get((k1, k2))
            if hit is None:
                return None
            imgs.append((hit[0], c1 * c2 * hit[1]))
    return imgs


def verify_homomorphism(cert, av, au):
    """Check a certificate against the full multiplication tables.

    ``cert`` is an EdgeScaling (vertex-fixing map), a pair
    (GraphAutomorphism, EdgeScaling) for [a] -> [s(a)],
    [d|e] -> alpha_{d,e}[s(d)|s(e)], or an IsoCertificate.
    """
    if isinstance(cert, IsoCertificate):
        if not cert.is_isomorphic:
            return HomomorphismCheck(False, "certificate is negative")
        cert = (cert.automorphism, cert.edge_scaling)
    if isinstance(cert, EdgeScaling):
        sigma, scaling = GraphAutomorphism.identity(av.graph), cert
    else:
        sigma, scaling = cert
    if av.graph != au.graph or av.dim != au.dim:
        return HomomorphismCheck(False, "algebras have different graphs")
    if not sigma.preserves(av.graph):
        return HomomorphismCheck(False, f"{sigma!r} is not a graph automorphism")
    try:
        imgs = _images(sigma, scaling, av, au)
    except KeyError as exc:
        return HomomorphismCheck(False, f"no scalar for arrow {exc}")
    if imgs is None:
        return HomomorphismCheck(False, "a loop maps to zero")
    # bijective: monomial with nonzero entries onto distinct basis elements
    if any(c == 0 for _, c in imgs) or len({k for k, _ in imgs}) != av.dim:
        return HomomorphismCheck(False, "map is not bijective")
    unit = {}
    for i, b in enumerate(av.basis):
        if b.degree == 0:
            k, c = imgs[i]
            unit[k] = unit.get(k, 0) + c
    expected = {i: Fraction(1) for i, b in enumerate(au.basis) if b.degree == 0}
    if unit != expected:
        return HomomorphismCheck(False, "unit is not preserved")
    for i in range(av.dim):
        ki, ci = imgs[i]
        for j in range(av.dim):
            kj, cj = imgs[j]
            lhs = av.table.get((i, j))
            if lhs is not None:
                k, q = lhs
                lhs = (imgs[k][0], q * imgs[k][1])
            rhs = au.table.get((ki, kj))
            if rhs is not None:
                rhs = (rhs[0], ci * cj * rhs[1])
            if lhs != rhs:
                return HomomorphismCheck(
                    False, f"phi({av.basis[i].label}*{av.basis[j].label}) != "
                           f"phi({av.basis[i].label})*phi({av.basis[j].label})")
    return HomomorphismCheck(True)


@dataclass(frozen=True)
class IsoCertificate:
    """Outcome of decide_isomorphic.

    verdict is "equivalent" (vertex-fixing map exists), "isomorphic" (only
    after a non-trivial automorphism) or "not-isomorphic".  A positive
    certificate describes phi = sigma o gamma with gamma vertex-fixing:
    [a] -> [sigma(a)], [d|e] -> alpha_{d,e} [sigma(d)|sigma(e)].
    """

    verdict: str
    automorphism: GraphAutomorphism = None
    edge_scaling: EdgeScaling = None
    obstruction: Obstruction = None

    @property
    def is_isomorphic(self):
        return self.verdict != "not-isomorphic"

    @property
    def is_equivalent(self):
        return self.verdict == "equivalent"

    def to_json(self):
        out = {"verdict": self.verdict}
        if self.automorphism is not None:
            out["automorphism"] = self.automorphism.mapping()
        if self.edge_scaling is not None:
            out["edge_scaling"] = self.edge_scaling.to_json()
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.to_json()
        return out

    @classmethod
    def from_json(cls, data):
        return cls(
            data["verdict"],
            GraphAutomorphism(data["automorphism"]) if "automorphism" in data else None,
            EdgeScaling.from_json(data["edge_scaling"]) if "edge_scaling" in data else None,
            Obstruction(Walk(tuple(data["obstruction"]["cycle"])),
                        to_scalar(data["obstruction"]["lhs"]),
                        to_scalar(data["obstruction"]["rhs"]))
            if "obstruction" in data else None)


def decide_isomorphic(v, u):
    """Search Aut(G) for sigma with class(v) = sigma^{-1} . class(u)."""
    _same_graph(v, u)
    g = v.graph
    ident = GraphAutomorphism.identity(g)
    if len(g.vertices) <= 2:
        return IsoCertificate("equivalent", ident, EdgeScaling.identity(g))
    basis = fundamental_basis(g)
    fv, fu = class_of(v, basis), class_of(u, basis)
    for sigma in enumerate_automorphisms(g):
        inv = sigma.inverse()
        if act_class(inv, fu) == fv:
            scaling = construct_vertex_fixing_iso(v, act(inv, u))
            verdict = "equivalent" if sigma.is_identity else "isomorphic"
            return IsoCertificate(verdict, sigma, scaling)
    i = fv.first_difference(fu)
    return IsoCertificate("not-isomorphic",
                          obstruction=Obstruction(basis[i].walk, fv.values[i], fu.values[i]))


class OrientationCoefficients:
    """Antisymmetric nonzero edge values eps_{a,b} = -eps_{b,a}."""

    __slots__ = ("graph", "eps")

    def __init__(self, graph, eps):
        eps = {k: to_scalar(q) for k, q in eps.items()}
        for a, b in graph.edges:
            if (a, b) not in eps and (b, a) in eps:
                eps[(a, b)] = -eps[(b, a)]
            elif (b, a) not in eps and (a, b) in eps:
                eps[(b, a)] = -eps[(a, b)]
            if (a, b) not in eps:
                raise ScalarSyntaxError(f"no orientation value on edge {a}-{b}")
            if eps[(a, b)] == 0:
                raise ScalarSyntaxError(f"zero orientation value on edge {a}-{b}")
            if eps[(a, b)] != -eps[(b, a)]:
                raise ScalarSyntaxError(f"eps({a},{b}) != -eps({b},{a})")
        for a, b in eps:
            if not graph.has_edge(a, b):
                raise ScalarSyntaxError(f"{a}-{b} is not an edge")
        self.graph = graph
        self.eps = dict(sorted(eps.items()))

    @classmethod
    def from_orientation(cls, graph, arrows):
        """+1 on the chosen direction of every edge, -1 on the other."""
        arrows = [tuple(p) for p in arrows]
        chosen = {edge_key(a, b): (a, b) for a, b in arrows}
        if set(chosen) != set(graph.edges) or len(chosen) != len(arrows):
            raise ScalarSyntaxError("an orientation picks exactly one direction per edge")
        return cls(graph, {arrow: 1 for arrow in chosen.values()})

    def __call__(self, a, b):
        return self.eps.get((a, b), Fraction(0))

    def to_json(self):
        return {"epsilon": [{"from": a, "to": b, "value": format_scalar(q)}
                            for (a, b), q in self.eps.items()]}

    @classmethod
    def from_json(cls, graph, data):
        if "orientation" in data:
            return cls.from_orientation(graph, [tuple(p) for p in data["orientation"]])
        if "epsilon" in data:
            return cls(graph, {(r["from"], r["to"]): r["value"] for r in data["epsilon"]})
        raise ScalarSyntaxError('orientation JSON needs "orientation" or "epsilon"')


def orientation_to_coefficients(omega):
    """v^a_{b,c} = eps_{a,c} / eps_{a,b}."""
    g = omega.graph
    return SkewCoefficients(g, {a: {y: omega(a, y) for y in g.neighbors(a)}
                                for a in g.vertices})


def all_orientations(graph):
    for flips in product((False, True), repeat=len(graph.edges)):
        yield OrientationCoefficients.from_orientation(
            graph, [(b, a) if f else (a, b) for (a, b), f in zip(graph.edges, flips)])


def _sampled_orientations(graph, count, seed):
    rng = random.Random(seed)
    for _ in range(count):
        yield OrientationCoefficients.from_orientation(
            graph, [(b, a) if rng.random() < 0.5 else (a, b) for a, b in graph.edges])


@dataclass(frozen=True)
class ObstructionReport:
    bipartite: bool
    exhaustive: bool
    checked: int
    isomorphic_count: int
    odd_cycle: Walk = None
    witness: OrientationCoefficients = None   # first orientation giving A(G)

    @property
    def holds(self):
        if self.bipartite:
            return self.isomorphic_count >= 1
        return self.isomorphic_count == 0

    def to_json(self):
        out = {"bipartite": self.bipartite, "exhaustive": self.exhaustive,
               "orientations_checked": self.checked,
               "isomorphic_to_zigzag": self.isomorphic_count,
               "holds": self.holds}
        if self.odd_cycle is not None:
            out["odd_cycle"] = list(self.odd_cycle.vertices)
        if self.witness is not None:
            out["witness_orientation"] = [
                [a, b] for (a, b), q in self.witness.eps.items() if q > 0]
        return out


def check_bipartite_obstruction(g, seed=0):
    """Compare the zigzag algebra with every orientation-induced algebra
    (a fixed random sample once there are more than 12 edges)."""
    require_connected(g)
    parity = is_bipartite(g)
    zig = ones(g)
    exhaustive = len(g.edges) <= EXHAUSTIVE_EDGE_LIMIT
    source = (all_orientations(g) if exhaustive
              else _sampled_orientations(g, SAMPLED_ORIENTATIONS, seed))
    checked = hits = 0
    witness = None
    for omega in source:
        checked += 1
        if decide_isomorphic(zig, orientation_to_coefficients(omega)).is_isomorphic:
            hits += 1
            witness = witness or omega
    return ObstructionReport(parity.bipartite, exhaustive, checked, hits,
                             parity.odd_cycle, witness)


def verify_certificate(cert, v, u):
    """Build both algebras and run the table check."""
    return verify_homomorphism(cert, build(v.graph, v), build(u.graph, u))
