"""Exception hierarchy shared by every module of the package."""


class CFError(Exception):
    """Base class for all errors raised by cfindex."""


class NotATree(CFError, ValueError):
    pass


class EdgeListSyntaxError(CFError, ValueError):
    def __init__(self, lineno: int, line: str, reason: str = "expected two non-negative integer ids"):
        self.lineno = lineno
        self.line = line
        super().__init__(f"line {lineno}: {reason}: {line!r}")


class NotALeaf(CFError, ValueError):
    pass


class IsRoot(CFError, ValueError):
    pass


class EmptyList(CFError, ValueError):
    pass


class PreconditionViolated(CFError, ValueError):
    pass


class UnknownEdge(CFError, KeyError):
    pass


class PartialColoring(CFError, ValueError):
    pass


class NotConflictFree(CFError, ValueError):
    pass


class LeafVertex(CFError, ValueError):
    pass


class TooLarge(CFError, ValueError):
    pass


class NoColoringWithin(CFError, RuntimeError):
    pass


class MixedLevel(CFError, ValueError):
    pass


class WholeTreeFull(CFError, ValueError):
    pass


class ShapeMismatch(CFError, ValueError):
    pass


class Infeasible(CFError, ValueError):
    pass


class HypothesesFail(CFError, ValueError):
    pass


class OracleTooLarge(TooLarge):
    pass


class BadBranching(CFError, ValueError):
    pass


class BadMultiplicities(CFError, ValueError):
    pass


class IncompleteState(CFError, RuntimeError):
    pass
