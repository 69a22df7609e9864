"""Skew-zigzag coefficient families and their cohomology classes.

A family assigns a nonzero rational v^a_{b,c} to every vertex ``a`` and pair
of neighbours ``b, c`` of ``a``.  The three axioms force the ratio form

    v^a_{b,c} = g_a(c) / g_a(b)

for a weight function g_a on the neighbours of ``a``; families are stored that
way, normalised so that g_a(r_a) = 1 at the least neighbour r_a.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian

from .cycles import CycleVector, decompose, fundamental_basis, walk_to_vector
from .errors import (
    AxiomViolation,
    BasisMismatch,
    GraphMismatch,
    InconsistentCompletion,
    InvalidTriple,
    MissingTriple,
    NotAutomorphism,
    NotClosed,
    ScalarSyntaxError,
    ZeroValue,
)
from .graphs import apply_automorphism, as_walk, require_connected

__all__ = [
    "to_scalar",
    "format_scalar",
    "SkewCoefficients",
    "CohomologyClass",
    "validate",
    "ones",
    "compose",
    "invert",
    "path_product",
    "cycle_product",
    "class_of",
    "evaluate_class",
    "construct_from_class",
    "act",
    "act_class",
]


def to_scalar(x):
    """Exact rational from an int, Fraction or "p/q" string.  Floats are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise ScalarSyntaxError(f"{x!r}: write rationals as integers or 'p/q' strings")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ScalarSyntaxError(f"cannot read {x!r} as a rational") from None
    raise ScalarSyntaxError(f"cannot read {x!r} as a rational")


def format_scalar(q):
    return str(Fraction(q))


class SkewCoefficients:
    """A valid coefficient family in canonical weight form."""

    __slots__ = ("graph", "_w")

    def __init__(self, graph, weights):
        # weights: vertex -> {neighbour: nonzero Fraction}; normalised here
        w = {}
        for x in graph.vertices:
            ns = graph.neighbors(x)
            gx = weights.get(x, {})
            if not ns:
                w[x] = {}
                continue
            if set(gx) != set(ns):
                raise MissingTriple(f"weights at {x!r} must cover exactly {ns}")
            ref = Fraction(gx[ns[0]])
            if ref == 0 or any(gx[y] == 0 for y in ns):
                raise ZeroValue(f"zero weight at {x!r}")
            w[x] = {y: Fraction(gx[y]) / ref for y in ns}
        self.graph = graph
        self._w = w

    @classmethod
    def from_weights(cls, graph, weights):
        return cls(graph, weights)

    def weight(self, x, y):
        return self._w[x][y]

    def weights(self):
        return {x: dict(gx) for x, gx in self._w.items()}

    def value(self, a, b, c):
        """v^a_{b,c}"""
        try:
            wa = self._w[a]
            return wa[c] / wa[b]
        except KeyError:
            raise InvalidTriple(f"({a}; {b}, {c}) is not a valid triple") from None

    __call__ = value

    def triples(self):
        for a in self.graph.vertices:
            ns = self.graph.neighbors(a)
            for b in ns:
                for c in ns:
                    yield a, b, c

    def as_mapping(self):
        return {t: self.value(*t) for t in self.triples()}

    @property
    def is_trivial(self):
        return all(q == 1 for gx in self._w.values() for q in gx.values())

    def __eq__(self, other):
        if not isinstance(other, SkewCoefficients):
            return NotImplemented
        return self.graph == other.graph and self._w == other._w

    def __hash__(self):
        return hash((self.graph, tuple((x, tuple(g.items())) for x, g in self._w.items())))

    def __repr__(self):
        odd = [(t, q) for t, q in self.as_mapping().items() if q != 1]
        body = ", ".join(f"v^{a}_{{{b},{c}}}={q}" for (a, b, c), q in odd[:6])
        more = ", ..." if len(odd) > 6 else ""
        return f"SkewCoefficients({body or 'all ones'}{more})"

    def to_json(self, nontrivial_only=False):
        rows = []
        for (a, b, c), q in self.as_mapping().items():
            if nontrivial_only and q == 1:
                continue
            rows.append({"at": a, "from": b, "to": c, "value": format_scalar(q)})
        return {"values": rows}

    @classmethod
    def from_json(cls, graph, data):
        return validate(graph, parse_raw(data))


def parse_raw(data):
    """``{"values": [{"at", "from", "to", "value"}, ...]}`` -> triple mapping."""
    if not isinstance(data, dict) or not isinstance(data.get("values"), list):
        raise ScalarSyntaxError('coefficient JSON needs a "values" list')
    raw = {}
    for row in data["values"]:
        try:
            key = (str(row["at"]), str(row["from"]), str(row["to"]))
            val = row["value"]
        except (KeyError, TypeError):
            raise ScalarSyntaxError(f"bad coefficient entry {row!r}") from None
        q = to_scalar(val)
        if key in raw and raw[key] != q:
            raise InconsistentCompletion(f"{key} given twice with different values")
        raw[key] = q
    return raw


def ones(graph):
    """The zigzag family: every coefficient equal to 1."""
    return SkewCoefficients(graph, {x: {y: 1 for y in graph.neighbors(x)}
                                    for x in graph.vertices})


def validate(graph, raw):
    """Check a (possibly partial) triple mapping and complete it.

    A vertex with no entries gets the all-ones star.  Elsewhere omitted
    triples are filled in only where the axioms determine them; a neighbour
    whose weight is not pinned down raises MissingTriple.
    """
    raw = {tuple(k): to_scalar(v) for k, v in dict(raw).items()}
    for (a, b, c), q in raw.items():
        if not (graph.has_edge(a, b) and graph.has_edge(a, c)):
            raise InvalidTriple(f"({a}; {b}, {c}): {a!r} must be adjacent to {b!r} and {c!r}")
        if q == 0:
            raise ZeroValue(f"v^{a}_{{{b},{c}}} = 0")
    _check_axioms(raw)

    weights = {}
    for a in graph.vertices:
        ns = graph.neighbors(a)
        if not ns:
            weights[a] = {}
            continue
        links = {y: [] for y in ns}
        for (x, b, c), q in raw.items():
            if x == a and b != c:
                links[b].append((c, q))        # g(c) = g(b) * q
                links[c].append((b, 1 / q))
        if not any(links.values()):
            weights[a] = {y: Fraction(1) for y in ns}
            continue
        g = {ns[0]: Fraction(1)}
        queue = deque([ns[0]])
        while queue:
            b = queue.popleft()
            for c, q in links[b]:
                if c not in g:
                    g[c] = g[b] * q
                    queue.append(c)
        missing = [y for y in ns if y not in g]
        if missing:
            raise MissingTriple(
                f"v^{a}_{{{ns[0]},{missing[0]}}} is not given and not implied by the axioms")
        for (x, b, c), q in raw.items():
            if x == a and g[c] / g[b] != q:
                raise InconsistentCompletion(
                    f"v^{a}_{{{b},{c}}} = {q} conflicts with the value {g[c] / g[b]} "
                    f"forced by the other entries at {a!r}")
        weights[a] = g
    return SkewCoefficients(graph, weights)


def _check_axioms(raw):
    for (a, b, c), q in raw.items():
        if b == c and q != 1:
            raise AxiomViolation(1, [(a, b, b)], f"v^{a}_{{{b},{b}}} = {q} != 1")
        back = raw.get((a, c, b))
        if back is not None and q * back != 1:
            raise AxiomViolation(2, [(a, b, c), (a, c, b)], f"{q} * {back} != 1")
    stars = {}
    for (a, b, c), q in raw.items():
        stars.setdefault(a, {})[(b, c)] = q
    for a, known in stars.items():
        ns = sorted({b for b, _ in known} | {c for _, c in known})
        for b, c, d in _cartesian(ns, repeat=3):
            if len({b, c, d}) < 3:
                continue
            try:
                p = known[(b, c)] * known[(c, d)] * known[(d, b)]
            except KeyError:
                continue
            if p != 1:
                raise AxiomViolation(3, [(a, b, c), (a, c, d), (a, d, b)], f"product {p} != 1")


def _same_graph(u, v):
    if u.graph != v.graph:
        raise GraphMismatch("coefficient families live on different graphs")


def compose(u, v):
    """Pointwise product (u.v)^a_{b,c} = u^a_{b,c} v^a_{b,c}."""
    _same_graph(u, v)
    return SkewCoefficients(u.graph, {
        x: {y: u.weight(x, y) * v.weight(x, y) for y in u.graph.neighbors(x)}
        for x in u.graph.vertices})


def invert(v):
    return SkewCoefficients(v.graph, {
        x: {y: 1 / v.weight(x, y) for y in v.graph.neighbors(x)}
        for x in v.graph.vertices})


def path_product(v, w):
    """Product of v over the interior vertices of the walk."""
    w = as_walk(w)
    w.check(v.graph)
    p = Fraction(1)
    seq = w.vertices
    for i in range(1, len(seq) - 1):
        p *= v.value(seq[i], seq[i - 1], seq[i + 1])
    return p


def cycle_product(v, w):
    """Path product times the wrap-around factor at the base point."""
    w = as_walk(w)
    if not w.is_closed:
        raise NotClosed(f"walk {w} is not closed")
    w.check(v.graph)
    if w.length == 0:
        return Fraction(1)
    seq = w.vertices
    return v.value(seq[0], seq[-2], seq[1]) * path_product(v, w)


@dataclass(frozen=True)
class CohomologyClass:
    """A homomorphism from the cycle space to Q*, given on a fundamental basis."""

    basis: object
    values: tuple

    def __post_init__(self):
        vals = tuple(to_scalar(q) for q in self.values)
        if len(vals) != len(self.basis):
            raise BasisMismatch(f"{len(self.basis)} basis cycles but {len(vals)} values")
        if any(q == 0 for q in vals):
            raise ZeroValue("class values must be nonzero")
        object.__setattr__(self, "values", vals)

    @classmethod
    def trivial(cls, basis):
        return cls(basis, (1,) * len(basis))

    @property
    def is_trivial(self):
        return all(q == 1 for q in self.values)

    def _check(self, other):
        if self.basis != other.basis:
            raise BasisMismatch("classes are recorded on different bases")

    def __mul__(self, other):
        self._check(other)
        return CohomologyClass(self.basis, tuple(p * q for p, q in zip(self.values, other.values)))

    def inverse(self):
        return CohomologyClass(self.basis, tuple(1 / q for q in self.values))

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return self.basis == other.basis and self.values == other.values

    def __hash__(self):
        return hash((self.basis, self.values))

    def first_difference(self, other):
        """Index of the first basis cycle where the classes differ, or None."""
        self._check(other)
        for i, (p, q) in enumerate(zip(self.values, other.values)):
            if p != q:
                return i
        return None

    def to_json(self):
        return [{"basis_edge": f"{c.edge[0]}-{c.edge[1]}", "value": format_scalar(q)}
                for c, q in zip(self.basis, self.values)]

    @classmethod
    def from_json(cls, basis, data):
        if isinstance(data, dict):
            data = data.get("class", data.get("values"))
        if not isinstance(data, list):
            raise ScalarSyntaxError("class JSON must be a list of {basis_edge, value}")
        by_edge = {}
        for row in data:
            try:
                a, _, b = str(row["basis_edge"]).partition("-")
                by_edge[(min(a, b), max(a, b))] = to_scalar(row["value"])
            except (KeyError, TypeError):
                raise ScalarSyntaxError(f"bad class entry {row!r}") from None
        if set(by_edge) != set(basis.edges):
            raise BasisMismatch(
                f"class must give one value per non-tree edge {[f'{a}-{b}' for a, b in basis.edges]}")
        return cls(basis, tuple(by_edge[e] for e in basis.edges))


def class_of(v, basis=None):
    require_connected(v.graph)
    basis = basis or fundamental_basis(v.graph)
    if basis.graph != v.graph:
        raise GraphMismatch("basis belongs to a different graph")
    return CohomologyClass(basis, tuple(cycle_product(v, c.walk) for c in basis))


def evaluate_class(f, z):
    """f(z) = prod_i f(C_i)^{m_i} where z = sum_i m_i C_i."""
    if not isinstance(z, CycleVector):
        z = walk_to_vector(z)
    out = Fraction(1)
    for q, m in zip(f.values, decompose(z, f.basis)):
        if m:
            out *= q ** m
    return out


def construct_from_class(f):
    """A family whose class is ``f``.

    Coefficients default to 1; at the tail b_i of each distinguished edge
    (b_i|c_i) the weight of c_i becomes f(C_i), which gives
    v^{b_i}_{a,c_i} = f(C_i) and v^{b_i}_{c_k,c_i} = f(C_i)/f(C_k).
    """
    g = f.basis.graph
    weights = {x: {y: Fraction(1) for y in g.neighbors(x)} for x in g.vertices}
    for c, q in zip(f.basis, f.values):
        b_i, c_i = c.edge
        weights[b_i][c_i] = q
    return SkewCoefficients(g, weights)


def _check_automorphism(sigma, g):
    if not sigma.preserves(g):
        raise NotAutomorphism(f"{sigma!r} is not an automorphism of {g!r}")


def act(sigma, v):
    """(sigma v)^a_{b,c} = v^{s(a)}_{s(b),s(c)} with s = sigma^{-1}."""
    g = v.graph
    _check_automorphism(sigma, g)
    inv = sigma.inverse()
    return SkewCoefficients(g, {
        a: {y: v.weight(inv(a), inv(y)) for y in g.neighbors(a)}
        for a in g.vertices})


def act_class(sigma, f):
    """(sigma f)(C) = f(sigma^{-1}(C)), evaluated on each basis cycle."""
    _check_automorphism(sigma, f.basis.graph)
    inv = sigma.inverse()
    return CohomologyClass(f.basis, tuple(
        evaluate_class(f, walk_to_vector(apply_automorphism(inv, c.walk)))
        for c in f.basis))

