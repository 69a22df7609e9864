"""Exception hierarchy.

Every error carries a short machine-readable ``code`` which the CLI puts in
its ``{"error": code, "detail": ...}`` payload.
"""


class SkewZigzagError(ValueError):
    code = "error"


# graphs

class GraphSyntaxError(SkewZigzagError):
    code = "GraphSyntax"


class LoopEdge(SkewZigzagError):
    code = "LoopEdge"


class DuplicateEdge(SkewZigzagError):
    code = "DuplicateEdge"


class UnknownVertex(SkewZigzagError):
    code = "UnknownVertex"


class Disconnected(SkewZigzagError):
    code = "Disconnected"


class InvalidWalk(SkewZigzagError):
    code = "InvalidWalk"


class NotClosed(SkewZigzagError):
    code = "NotClosed"


class NotAutomorphism(SkewZigzagError):
    code = "NotAutomorphism"


# cycle space

class UnknownEdge(SkewZigzagError):
    code = "UnknownEdge"


class NotACycle(SkewZigzagError):
    code = "NotACycle"


class ReconstructionMismatch(SkewZigzagError):
    code = "ReconstructionMismatch"


class BasisMismatch(SkewZigzagError):
    code = "BasisMismatch"


# coefficients

class ScalarSyntaxError(SkewZigzagError):
    code = "ScalarSyntax"


class InvalidTriple(SkewZigzagError):
    code = "InvalidTriple"


class ZeroValue(SkewZigzagError):
    code = "ZeroValue"


class MissingTriple(SkewZigzagError):
    code = "MissingTriple"


class InconsistentCompletion(SkewZigzagError):
    code = "InconsistentCompletion"


class AxiomViolation(SkewZigzagError):
    code = "AxiomViolation"

    def __init__(self, axiom, triples, detail):
        self.axiom = axiom
        self.triples = triples
        super().__init__(f"axiom {axiom} fails at {triples}: {detail}")


class GraphMismatch(SkewZigzagError):
    code = "GraphMismatch"


# algebra

class AlgebraMismatch(SkewZigzagError):
    code = "AlgebraMismatch"


class UnknownBasisElement(SkewZigzagError):
    code = "UnknownBasisElement"


# classification

class NotEquivalent(SkewZigzagError):
    code = "NotEquivalent"

    def __init__(self, obstruction):
        self.obstruction = obstruction
        super().__init__(
            f"cycle products differ on {obstruction.cycle}: "
            f"{obstruction.lhs} vs {obstruction.rhs}")
