"""Exception types raised by coxlab."""


class CoxlabError(Exception):
    pass


class WindowInvalid(CoxlabError, ValueError):
    """A window does not describe an element of the requested group."""


class SpecMismatch(CoxlabError, ValueError):
    pass


class LetterOutOfAlphabet(CoxlabError, ValueError):
    pass


class FrozenPosition(CoxlabError, ValueError):
    pass


class FamilyMismatch(CoxlabError, ValueError):
    pass


class CapExceeded(CoxlabError):
    pass


class BudgetExceeded(CoxlabError):
    """An enumeration grew past its element budget."""


class InsufficientRootHorizon(CoxlabError):
    """Roots harvested up to the given height cannot certify a minimum cost."""
