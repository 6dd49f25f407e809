"""Exception types shared across the package."""


class ToricError(Exception):
    """Base class for every error raised by simptoric."""


class ValidationError(ToricError, ValueError):
    """Family parameters violate one of the defining conditions."""

    condition = None


class ConditionIFailure(ValidationError):
    condition = "I"

    def __init__(self, index, c, p):
        self.index = index
        super().__init__(f"condition (I) fails: p={p} divides c_{index}={c}")


class ConditionIIFailure(ValidationError):
    condition = "II"

    def __init__(self, a, d):
        super().__init__(f"condition (II) fails: gcd(a={a}, d={d}) != 1")


class ConditionIIIFailure(ValidationError):
    condition = "III"

    def __init__(self, p, ell, a, d):
        super().__init__(
            f"condition (III) fails: {p}^{ell} = a*g + d*h has no solution "
            f"in positive integers for a={a}, d={d}"
        )


class NoSuchRootOfUnity(ToricError, ValueError):
    pass


class BudgetError(ToricError, RuntimeError):
    """An enumeration would exceed the configured point budget."""


class SearchExhausted(ToricError, RuntimeError):
    """A bounded search hit its documented cap."""
