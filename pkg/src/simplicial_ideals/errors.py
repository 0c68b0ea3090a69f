"""Exception types shared across the package.

The CLI maps these onto its exit-code contract (see cli.py): parameter,
dimension and parse problems exit 2, exceeded budgets exit 3.
"""


class DimensionError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


class ParameterError(ValueError):
    """A numeric parameter (n, c, m, r, ...) is outside its allowed range."""


class MonomialParseError(ValueError):
    """A monomial string does not match the x<i>^<e> grammar."""


class BudgetExceededError(RuntimeError):
    """An enumeration or intersection grew past its configured budget.

    Raised instead of returning a partial (and therefore wrong) answer.
    """
