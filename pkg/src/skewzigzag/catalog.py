"""Named graphs and the four-vertex worked example."""

from fractions import Fraction

from .coefficients import validate
from .graphs import Graph


def _names(n):
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"v{i:02d}" for i in range(n)]


def path_graph(n):
    vs = _names(n)
    return Graph(vs, list(zip(vs, vs[1:])))


def cycle_graph(n):
    vs = _names(n)
    return Graph(vs, list(zip(vs, vs[1:] + vs[:1])))


def complete_graph(n):
    vs = _names(n)
    return Graph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def star_graph(leaves):
    vs = _names(leaves + 1)
    return Graph(vs, [(vs[0], x) for x in vs[1:]])


def single_vertex():
    return Graph(["a"], [])


def single_edge():
    return Graph(["a", "b"], [("a", "b")])


def triangle():
    return cycle_graph(3)


def kite():
    """Four vertices a, b, c, d; edges ab, ad, dc, bc, bd (two triangles on bd)."""
    return Graph("abcd", [("a", "b"), ("a", "d"), ("d", "c"), ("b", "c"), ("b", "d")])


KITE_VALUES = {
    ("a", "b", "d"): 2, ("c", "b", "d"): 2,
    ("a", "d", "b"): Fraction(1, 2), ("c", "d", "b"): Fraction(1, 2),
    ("d", "a", "c"): 5, ("b", "a", "c"): 5,
    ("d", "c", "a"): Fraction(1, 5), ("b", "c", "a"): Fraction(1, 5),
    ("d", "b", "c"): 7, ("b", "d", "c"): 7,
    ("d", "c", "b"): Fraction(1, 7), ("b", "c", "d"): Fraction(1, 7),
    ("d", "a", "b"): Fraction(5, 7), ("b", "a", "d"): Fraction(5, 7),
    ("d", "b", "a"): Fraction(7, 5), ("b", "d", "a"): Fraction(7, 5),
}

KITE_P1 = ("d", "b", "c", "d")
KITE_P2 = ("d", "a", "b", "d")


def kite_family():
    return validate(kite(), KITE_VALUES)


def triangle_family(x):
    """Triangle family whose only non-unit values are v^c_{a,b} = x, v^c_{b,a} = 1/x."""
    x = Fraction(x)
    return validate(triangle(), {("c", "a", "b"): x, ("c", "b", "a"): 1 / x})
