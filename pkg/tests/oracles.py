"""Independent reference computations used by the tests.

Nothing here calls into the package beyond reading plain data off graphs
and coefficient families (and building families from weights); the point is to recompute the same quantities by
a different route (brute force or sympy).
"""

from fractions import Fraction
from itertools import permutations

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from skewzigzag.coefficients import SkewCoefficients


def brute_automorphisms(g):
    """All vertex permutations preserving the edge set, as dicts."""
    vs = list(g.vertices)
    edges = {frozenset(e) for e in g.edges}
    out = []
    for image in permutations(vs):
        m = dict(zip(vs, image))
        if {frozenset((m[a], m[b])) for a, b in g.edges} == edges:
            out.append(m)
    return out


def incidence_matrix(g):
    """Rows indexed by vertices, columns by edges a<b, entry +1 at a, -1 at b."""
    idx = {x: i for i, x in enumerate(g.vertices)}
    m = sympy.zeros(len(g.vertices), len(g.edges))
    for j, (a, b) in enumerate(g.edges):
        m[idx[a], j] = 1
        m[idx[b], j] = -1
    return m


def cycle_rank(g):
    """dim ker(delta) computed by sympy."""
    if not g.edges:
        return 0
    return len(g.edges) - incidence_matrix(g).rank()


def sympy_rank(rows):
    if not rows:
        return 0
    m = DomainMatrix([[QQ(q.numerator, q.denominator) for q in map(Fraction, r)] for r in rows],
                     (len(rows), len(rows[0])), QQ)
    return m.rank()


def quotient_dimension(v):
    """dim of the path algebra of the double quiver modulo the defining
    relations, computed as a linear quotient of the span of paths of
    length <= 2 (length >= 3 paths vanish once these relations hold).

    Relations: (a|b|c) = 0 for a != c, and (x|y|x) - v^x_{y,z} (x|z|x).
    """
    g = v.graph
    if len(g.vertices) == 1:
        return 2   # k[X]/(X^2): there are no arrows to carry the relations
    short = len(g.vertices) + 2 * len(g.edges)
    paths = [(a, b, c) for b in g.vertices for a in g.neighbors(b) for c in g.neighbors(b)]
    pos = {p: i for i, p in enumerate(paths)}
    rows = []
    for a, b, c in paths:
        row = [Fraction(0)] * len(paths)
        if a != c:
            row[pos[(a, b, c)]] = Fraction(1)
            rows.append(row)
    for x in g.vertices:
        for y in g.neighbors(x):
            for z in g.neighbors(x):
                if y == z:
                    continue
                row = [Fraction(0)] * len(paths)
                row[pos[(x, y, x)]] += 1
                row[pos[(x, z, x)]] -= v.value(x, y, z)
                rows.append(row)
    return short + len(paths) - sympy_rank(rows)


def direct_cycle_product(v, seq):
    """Product of v^{a_i}_{a_{i-1}, a_{i+1}} around a closed walk, indices mod n."""
    seq = list(seq)[:-1]
    n = len(seq)
    out = Fraction(1)
    for i in range(n):
        out *= v.value(seq[i], seq[i - 1], seq[(i + 1) % n])
    return out


def map_images(cert_sigma, alpha, av, au):
    """Images of the basis of A_v under [a] -> [s a], [d|e] -> alpha(d,e) [s d|s e],
    built label by label with the target algebra's own product."""
    imgs = []
    for b in av.basis:
        if b.path is None:
            imgs.append(au.element(b.label))
        elif b.degree == 0:
            imgs.append(au.element(f"[{cert_sigma(b.source)}]"))
        elif b.degree == 1:
            d, e = b.path
            imgs.append(alpha(d, e) * au.element(f"[{cert_sigma(d)}|{cert_sigma(e)}]"))
        else:
            x, y, _ = b.path
            imgs.append(imgs[av.index[f"[{x}|{y}]"]] * imgs[av.index[f"[{y}|{x}]"]])
    return imgs


def is_algebra_isomorphism(imgs, av, rng, trials=30):
    """Bijective, unital, and multiplicative on basis pairs and random elements."""
    if sympy_rank([list(x.coords) for x in imgs]) != av.dim:
        return False

    def phi(x):
        out = imgs[0] * 0
        for q, y in zip(x.coords, imgs):
            if q:
                out = out + q * y
        return out

    if phi(av.unit()) != imgs[0].algebra.unit():
        return False
    for i in range(av.dim):
        for j in range(av.dim):
            x, y = av.basis_element(i), av.basis_element(j)
            if phi(x * y) != phi(x) * phi(y):
                return False
    for _ in range(trials):
        x = av.element({lab: rng.randint(-2, 2) for lab in av.labels()})
        y = av.element({lab: rng.randint(-2, 2) for lab in av.labels()})
        if phi(x * y) != phi(x) * phi(y):
            return False
    return True


def transported_classes_agree(v, u, m, basis_walks):
    """f_v(C) == f_u(m(C)) on every basis cycle, by direct products."""
    return all(direct_cycle_product(v, w) == direct_cycle_product(u, [m[x] for x in w])
               for w in basis_walks)


def gauge(rng, v, values):
    """A family in the class of v: weight_x(y) times beta_{xy} / lam_x.

    Every cycle product is unchanged because each edge contributes
    beta_{xy} once in each direction around a cycle.
    """
    g = v.graph
    lam = {x: rng.choice(values) for x in g.vertices}
    beta = {e: rng.choice(values) for e in g.edges}
    return SkewCoefficients(g, {
        x: {y: v.weight(x, y) * beta[tuple(sorted((x, y)))] / lam[x] for y in g.neighbors(x)}
        for x in g.vertices})
