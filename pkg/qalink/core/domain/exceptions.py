# qalink/core/domain/exceptions.py


class QALinkError(Exception):
    """Base class for every error raised by the library."""


class MalformedInput(QALinkError):
    """
    Raised by the PD parser when a line cannot be read as `X[a,b,c,d];eps=±1`
    or as one of the `mark=` / `loops=` headers.
    """
    def __init__(self, msg: str, line: int | None = None, text: str | None = None):
        super().__init__(msg if line is None else f"line {line}: {msg}")
        self.line = line
        self.text = text


class DanglingArc(QALinkError):
    """An arc label does not occur exactly twice across the crossing tuples."""
    def __init__(self, arc: int, count: int):
        super().__init__(f"arc {arc} occurs {count} times (expected 2)")
        self.arc = arc
        self.count = count


class NonPlanar(QALinkError):
    """
    The rotation system given by the crossing tuples is not a planar embedding:
    V - E + F != 2 on some connected piece.
    """
    def __init__(self, vertices: int, edges: int, faces: int):
        super().__init__(f"not planar: V={vertices} E={edges} F={faces}, V-E+F={vertices - edges + faces}")
        self.vertices = vertices
        self.edges = edges
        self.faces = faces


class Disconnected(QALinkError):
    """The operation needs a connected diagram."""
    def __init__(self, pieces: int):
        super().__init__(f"diagram has {pieces} connected pieces")
        self.pieces = pieces


class EmptyDiagram(QALinkError):
    """The operation needs at least one crossing."""
    def __init__(self):
        super().__init__("diagram has no crossings")


class MarkError(QALinkError):
    """The marked arc does not touch exactly one black region."""
    def __init__(self, arc: int, touching: int):
        super().__init__(f"marked arc {arc} touches {touching} black regions")
        self.arc = arc
        self.touching = touching


class TooLarge(QALinkError):
    """Brute force refused: too many crossings."""
    def __init__(self, crossings: int, bound: int):
        super().__init__(f"{crossings} crossings exceeds the brute-force bound {bound}")
        self.crossings = crossings
        self.bound = bound


class NoSuchCrossing(QALinkError):
    def __init__(self, crossing: int, count: int):
        super().__init__(f"no crossing {crossing} (diagram has {count})")
        self.crossing = crossing
        self.count = count


class ZeroDeterminant(QALinkError):
    """det = 0 links are never quasi-alternating."""
    def __init__(self):
        super().__init__("determinant is 0")


class NotExtending(QALinkError):
    """Some tangle coefficient fails epsilon * a_i >= 1."""
    def __init__(self, coefficient: int, epsilon: int):
        super().__init__(f"coefficient {coefficient} does not extend a crossing with epsilon {epsilon}")
        self.coefficient = coefficient
        self.epsilon = epsilon


class DegenerateFraction(QALinkError):
    """Continued fraction evaluation divides by zero or yields 0."""
    def __init__(self, terms: list[int]):
        super().__init__(f"degenerate continued fraction {terms}")
        self.terms = list(terms)


class BadParameters(QALinkError):
    def __init__(self, msg: str, **params):
        super().__init__(msg)
        self.params = params


class NotBlowable(QALinkError):
    """Blow-down needs weight -1 and degree <= 2."""
    def __init__(self, vertex: int, weight: int, degree: int):
        super().__init__(f"vertex {vertex} has weight {weight} and degree {degree}")
        self.vertex = vertex
        self.weight = weight
        self.degree = degree


class BudgetExhausted(QALinkError):
    """Raised inside the search; surfaced to callers as an UNKNOWN result."""
    def __init__(self, budget: int):
        super().__init__(f"node budget {budget} exhausted")
        self.budget = budget


class InvalidMove(QALinkError):
    """A recorded Reidemeister move does not apply to the diagram it is replayed on."""
    def __init__(self, kind: str, darts, reason: str):
        super().__init__(f"{kind} at {darts}: {reason}")
        self.kind = kind
        self.darts = darts
        self.reason = reason
