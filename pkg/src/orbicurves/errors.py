class OrbicurvesError(Exception):
    """Base class for every domain error; ``code`` is machine readable."""

    code = "error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.__class__.__name__)
        self.details = details

    def to_dict(self) -> dict:
        payload = {"code": self.code, "message": str(self)}
        if self.details:
            payload["details"] = {key: str(value) for key, value in self.details.items()}
        return payload


class InvalidInput(OrbicurvesError, ValueError):
    code = "invalid_input"


class UsageError(OrbicurvesError, ValueError):
    code = "usage"


class NotGeneralPosition(OrbicurvesError, ValueError):
    code = "not_general_position"


class WrongCount(OrbicurvesError, ValueError):
    code = "wrong_count"


class NotDeficitForm(OrbicurvesError, ValueError):
    code = "not_deficit_form"


class SearchLimitExceeded(OrbicurvesError):
    code = "search_limit_exceeded"


class IndexOutOfRange(OrbicurvesError, IndexError):
    code = "index_out_of_range"


class InfiniteMultiplicity(OrbicurvesError, ValueError):
    code = "infinite_multiplicity"


class UnsupportedMultiplicity(OrbicurvesError, ValueError):
    code = "unsupported_multiplicity"


class DivisibilityViolation(OrbicurvesError, ValueError):
    code = "divisibility_violation"


class DuplicateLabel(OrbicurvesError, ValueError):
    code = "duplicate_label"


class SingularInput(OrbicurvesError, ArithmeticError):
    code = "singular_input"


class PointOnArrangement(OrbicurvesError, ValueError):
    code = "point_on_arrangement"


class NoConvergence(OrbicurvesError, RuntimeError):
    code = "no_convergence"
