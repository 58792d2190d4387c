"""Exception types raised across seidel_lab."""


class SeidelLabError(Exception):
    pass


class InvalidVertex(SeidelLabError, ValueError):
    pass


class SelfLoop(SeidelLabError, ValueError):
    pass


class NotATree(SeidelLabError, ValueError):
    pass


class TooSmall(SeidelLabError, ValueError):
    pass


class InvalidFamilyParams(SeidelLabError, ValueError):
    pass


class NotDisjoint(SeidelLabError, ValueError):
    pass


class IsLambdaEdge(SeidelLabError, ValueError):
    pass


class ClassificationFailure(SeidelLabError, RuntimeError):
    """A Lambda-nonedge of a tree matched none of the three structural cases."""


class InvalidPrufer(SeidelLabError, ValueError):
    pass


class EnumerationTooLarge(SeidelLabError, ValueError):
    pass


class OutOfDomain(SeidelLabError, ValueError):
    pass


class ExcludedTree(SeidelLabError, ValueError):
    """Tree is one of S_n, P_4, P_5, P_6, which the lemma statements exclude."""


class EigenNoConvergence(SeidelLabError, ArithmeticError):
    pass


class OracleTooLarge(SeidelLabError, ValueError):
    pass
