"""The skew-zigzag algebra A_v(G) as an explicit graded algebra over Q.

Basis J (at least two vertices): idempotents [a], arrows [a|b] and one loop
[x|y_x|x] per vertex, where y_x is a distinguished neighbour of x (the least
one unless overridden).  With a single vertex the algebra is Q[X]/(X^2) with
basis {1, X}.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coefficients import format_scalar, to_scalar
from .errors import AlgebraMismatch, GraphMismatch, InvalidWalk, UnknownBasisElement
from .graphs import as_walk, require_connected
from .linalg import rank

__all__ = [
    "BasisElement",
    "ZigzagAlgebra",
    "AlgebraElement",
    "FrobeniusReport",
    "build",
    "normal_form",
    "multiply",
    "trace",
    "gram",
    "check_frobenius",
    "check_associativity",
    "check_grading",
    "grading",
]


@dataclass(frozen=True)
class BasisElement:
    label: str
    path: tuple   # vertex sequence; None for the one-vertex basis {1, X}
    degree: int

    @property
    def source(self):
        return self.path[0]

    @property
    def target(self):
        return self.path[-1]


def _label(path):
    return "[" + "|".join(path) + "]"


class ZigzagAlgebra:
    """Basis, multiplication table and trace form of A_v(G)."""

    def __init__(self, graph, coeffs, distinguished=None):
        require_connected(graph)
        if coeffs.graph != graph:
            raise GraphMismatch("coefficients belong to a different graph")
        self.graph = graph
        self.coeffs = coeffs
        vs = graph.vertices
        if len(vs) == 1:
            self.distinguished = {}
            self.basis = (BasisElement("1", None, 0), BasisElement("X", None, 1))
        else:
            y = {x: graph.neighbors(x)[0] for x in vs}
            for x, yx in (distinguished or {}).items():
                if not graph.has_edge(x, yx):
                    raise InvalidWalk(f"distinguished neighbour {yx!r} of {x!r} is not adjacent")
                y[x] = yx
            self.distinguished = y
            arrows = sorted([(a, b) for a, b in graph.edges] + [(b, a) for a, b in graph.edges])
            self.basis = (
                tuple(BasisElement(_label((a,)), (a,), 0) for a in vs)
                + tuple(BasisElement(_label(e), e, 1) for e in arrows)
                + tuple(BasisElement(_label((x, y[x], x)), (x, y[x], x), 2) for x in vs))
        self.index = {b.label: i for i, b in enumerate(self.basis)}
        self._by_path = {b.path: i for i, b in enumerate(self.basis) if b.path}
        self.table = self._build_table()

    @property
    def dim(self):
        return len(self.basis)

    @property
    def top_degree(self):
        return self.basis[-1].degree

    def labels(self):
        return [b.label for b in self.basis]

    def _reduce(self, path):
        """Normal form of a path as (basis index, coefficient), or None for 0."""
        n = len(path) - 1
        if n <= 1:
            return self._by_path[path], Fraction(1)
        if n >= 3 or path[0] != path[2]:
            return None
        x, yy = path[0], path[1]
        yx = self.distinguished[x]
        return self._by_path[(x, yx, x)], self.coeffs.value(x, yy, yx)

    def _build_table(self):
        table = {}
        if self.basis[0].path is None:
            table[(0, 0)] = (0, Fraction(1))
            table[(0, 1)] = (1, Fraction(1))
            table[(1, 0)] = (1, Fraction(1))
            return table
        starting = {}
        for j, b in enumerate(self.basis):
            starting.setdefault(b.source, []).append(j)
        for i, bi in enumerate(self.basis):
            for j in starting.get(bi.target, ()):
                prod = self._reduce(bi.path + self.basis[j].path[1:])
                if prod is not None:
                    table[(i, j)] = prod
        return table

    def product_of_basis(self, i, j):
        return self.table.get((i, j))

    # elements

    def element(self, spec):
        """An element from a basis label, a ``{label: value}`` mapping or
        ``{"coords": {...}}``."""
        if isinstance(spec, AlgebraElement):
            return spec
        if isinstance(spec, str):
            spec = {spec: 1}
        if "coords" in spec and isinstance(spec["coords"], dict):
            spec = spec["coords"]
        coords = [Fraction(0)] * self.dim
        for label, q in spec.items():
            if label not in self.index:
                raise UnknownBasisElement(f"{label!r} is not a basis label of this algebra")
            coords[self.index[label]] += to_scalar(q)
        return AlgebraElement(self, coords)

    def basis_element(self, i):
        coords = [Fraction(0)] * self.dim
        coords[i] = Fraction(1)
        return AlgebraElement(self, coords)

    def zero(self):
        return AlgebraElement(self, [Fraction(0)] * self.dim)

    def unit(self):
        return AlgebraElement(self, [Fraction(1 if b.degree == 0 else 0) for b in self.basis])

    def to_json(self):
        return {
            "dim": self.dim,
            "basis": self.labels(),
            "degrees": [b.degree for b in self.basis],
            "distinguished": dict(self.distinguished),
        }

    def table_csv(self):
        lines = ["left,right,product,coefficient"]
        for (i, j), (k, q) in sorted(self.table.items()):
            lines.append(f"{self.basis[i].label},{self.basis[j].label},"
                         f"{self.basis[k].label},{format_scalar(q)}")
        return "\n".join(lines) + "\n"


class AlgebraElement:
    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(Fraction(q) for q in coords)

    def _same(self, other):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        return AlgebraElement(self.algebra, [p + q for p, q in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same(other)
        return AlgebraElement(self.algebra, [p - q for p, q in zip(self.coords, other.coords)])

    def __neg__(self):
        return AlgebraElement(self.algebra, [-q for q in self.coords])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return AlgebraElement(self.algebra, [q * other for q in self.coords])

    def __rmul__(self, scalar):
        return AlgebraElement(self.algebra, [scalar * q for q in self.coords])

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    @property
    def is_zero(self):
        return not any(self.coords)

    def terms(self):
        return [(self.algebra.basis[i].label, q) for i, q in enumerate(self.coords) if q]

    def __repr__(self):
        body = " + ".join(f"{q}*{lab}" for lab, q in self.terms())
        return f"AlgebraElement({body or '0'})"

    def to_json(self):
        return {"coords": {lab: format_scalar(q) for lab, q in self.terms()}}


def build(graph, coeffs, distinguished=None):
    return ZigzagAlgebra(graph, coeffs, distinguished)


def normal_form(alg, w):
    """Reduce a walk of the double quiver to its coordinates in J."""
    w = as_walk(w)
    w.check(alg.graph)
    if alg.basis[0].path is None:
        return alg.basis_element(0)
    reduced = alg._reduce(w.vertices)
    if reduced is None:
        return alg.zero()
    k, q = reduced
    return q * alg.basis_element(k)


def multiply(x, y):
    x._same(y)
    alg = x.algebra
    out = [Fraction(0)] * alg.dim
    nz = [(j, q) for j, q in enumerate(y.coords) if q]
    for i, p in enumerate(x.coords):
        if not p:
            continue
        for j, q in nz:
            hit = alg.table.get((i, j))
            if hit is not None:
                k, c = hit
                out[k] += p * q * c
    return AlgebraElement(alg, out)


def trace(x):
    """Sum of the top-degree coordinates (the loops [x|y_x|x], or X)."""
    alg = x.algebra
    top = alg.top_degree
    return sum((q for b, q in zip(alg.basis, x.coords) if b.degree == top), Fraction(0))


def gram(alg):
    top = alg.top_degree
    g = [[Fraction(0)] * alg.dim for _ in range(alg.dim)]
    for (i, j), (k, q) in alg.table.items():
        if alg.basis[k].degree == top:
            g[i][j] = q
    return g


@dataclass(frozen=True)
class FrobeniusReport:
    dim: int
    rank: int
    nondegenerate: bool
    symmetric: bool
    asymmetric_pair: tuple = None   # (label_i, label_j, tr(b_i b_j), tr(b_j b_i))
    note: str = None

    def to_json(self):
        out = {"dim": self.dim, "rank": self.rank,
               "nondegenerate": self.nondegenerate, "symmetric": self.symmetric}
        if self.asymmetric_pair:
            li, lj, p, q = self.asymmetric_pair
            out["asymmetric_pair"] = {"left": li, "right": lj,
                                      "trace_left_right": format_scalar(p),
                                      "trace_right_left": format_scalar(q)}
        if self.note:
            out["note"] = self.note
        return out


def check_frobenius(alg):
    g = gram(alg)
    r = rank(g)
    pair = None
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if g[i][j] != g[j][i]:
                pair = (alg.basis[i].label, alg.basis[j].label, g[i][j], g[j][i])
                break
        if pair:
            break
    note = None
    if len(alg.graph.vertices) == 2:
        note = "two-vertex case: trace 1 on the length-two loops is an extension, not a stated result"
    elif len(alg.graph.vertices) == 1:
        note = "one-vertex case: trace is 1 on X"
    return FrobeniusReport(alg.dim, r, r == alg.dim, pair is None, pair, note)


def grading(x):
    """Split an element into its homogeneous components {degree: element}."""
    alg = x.algebra
    parts = {}
    for d in range(alg.top_degree + 1):
        parts[d] = AlgebraElement(alg, [q if b.degree == d else 0
                                        for b, q in zip(alg.basis, x.coords)])
    return parts


def check_associativity(alg):
    """First basis triple (i, j, l) with (b_i b_j) b_l != b_i (b_j b_l), or None.

    Products of basis elements are monomials, so each side is one table
    lookup chain.
    """
    t = alg.table
    n = alg.dim
    for i in range(n):
        for j in range(n):
            ij = t.get((i, j))
            for l in range(n):
                left = None
                if ij is not None:
                    hit = t.get((ij[0], l))
                    if hit is not None:
                        left = (hit[0], ij[1] * hit[1])
                right = None
                jl = t.get((j, l))
                if jl is not None:
                    hit = t.get((i, jl[0]))
                    if hit is not None:
                        right = (hit[0], jl[1] * hit[1])
                if left != right:
                    return i, j, l
    return None


def check_grading(alg):
    """First table entry whose product leaves the expected degree, or None."""
    for (i, j), (k, _) in sorted(alg.table.items()):
        if alg.basis[k].degree != alg.basis[i].degree + alg.basis[j].degree:
            return i, j
    return None
