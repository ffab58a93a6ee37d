"""Exception hierarchy.

Every error carries a stable ``code`` string; the CLI prints it in JSON mode
and maps ``exit_code`` onto the process status.
"""


class HKError(Exception):
    code = "error"
    exit_code = 1


# -- permutation groups ------------------------------------------------------

class InvalidPermutation(HKError, ValueError):
    code = "invalid_permutation"


class DegreeMismatch(HKError, ValueError):
    code = "degree_mismatch"


class EmptyGeneratorList(HKError, ValueError):
    code = "empty_generator_list"


class OrderExceedsCap(HKError):
    code = "order_exceeds_cap"

    def __init__(self, cap, message=None):
        self.cap = cap
        super().__init__(message or f"group order exceeds element cap {cap}")


class SubsetBudgetExceeded(HKError):
    code = "subset_budget_exceeded"


class DegreeTooLarge(HKError, ValueError):
    code = "degree_too_large"


# -- finite fields -----------------------------------------------------------

class NotPrime(HKError, ValueError):
    code = "not_prime"


class FieldTooLarge(HKError, ValueError):
    code = "field_too_large"


class UnsupportedKind(HKError, ValueError):
    code = "unsupported_kind"


# -- hodge / hochschild ------------------------------------------------------

class InvalidDiamond(HKError, ValueError):
    code = "invalid_diamond"


class WrongDimension(HKError, ValueError):
    code = "wrong_dimension"


class NegativeDimension(HKError, ValueError):
    code = "negative_dimension"


class SupportOutOfRange(HKError, ValueError):
    code = "support_out_of_range"


class NotPalindromic(HKError, ValueError):
    code = "not_palindromic"


class OddDegreePresent(HKError, ValueError):
    code = "odd_degree_present"


# -- orbifold ----------------------------------------------------------------

class NonIntegralResult(HKError, ArithmeticError):
    code = "non_integral_result"


# -- group-spec language (exit status 2, like flag errors) --------------------

class ParseError(HKError, ValueError):
    code = "parse_error"
    exit_code = 2

    def __init__(self, offset, expected, text=""):
        self.offset = offset
        self.expected = tuple(sorted(expected))
        self.text = text
        super().__init__(
            f"parse error at byte {offset}: expected one of {', '.join(self.expected)}"
        )


class UnknownFamily(HKError, ValueError):
    code = "unknown_family"
    exit_code = 2


class BadParameter(HKError, ValueError):
    code = "bad_parameter"
    exit_code = 2
