"""Exception hierarchy.

Every error carries a short machine-readable ``code`` used by the CLI.
"""


class SkewlabError(Exception):
    code = "ERROR"


class ParseError(SkewlabError, ValueError):
    code = "PARSE"


class NonPrimeP(SkewlabError, ValueError):
    code = "NON_PRIME_P"


class ReducibleModulus(SkewlabError, ValueError):
    code = "REDUCIBLE_MODULUS"


class DegreeMismatch(SkewlabError, ValueError):
    code = "DEGREE_MISMATCH"


class TowerMismatch(SkewlabError, ValueError):
    code = "TOWER_MISMATCH"


class DivisionByZero(SkewlabError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO"


class BothZero(SkewlabError, ValueError):
    code = "BOTH_ZERO"


class ZeroInput(SkewlabError, ValueError):
    code = "ZERO_INPUT"


class ConstantInput(SkewlabError, ValueError):
    code = "CONSTANT_INPUT"


class DegenerateInput(SkewlabError, ValueError):
    code = "DEGENERATE_INPUT"


class EmptyList(SkewlabError, ValueError):
    code = "EMPTY_LIST"


class DegreeTooHigh(SkewlabError, ValueError):
    code = "DEGREE_TOO_HIGH"


class RightInvariantInput(SkewlabError, ValueError):
    code = "RIGHT_INVARIANT_INPUT"


class TValuationNonzero(SkewlabError, ValueError):
    code = "T_VALUATION_NONZERO"


class HypothesisViolated(SkewlabError, ValueError):
    code = "HYPOTHESIS_VIOLATED"


class TooLarge(SkewlabError):
    code = "TOO_LARGE"


class Inconclusive(SkewlabError):
    code = "INCONCLUSIVE"
