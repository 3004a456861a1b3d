"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class SemigroupError(Exception):
    code = "semigroup_error"


class ParseError(SemigroupError, ValueError):
    code = "parse_error"


class EmptyGenerators(SemigroupError, ValueError):
    code = "empty_generators"


class DimensionMismatch(SemigroupError, ValueError):
    code = "dimension_mismatch"


class ZeroGenerator(SemigroupError, ValueError):
    code = "zero_generator"


class NegativeCoordinate(SemigroupError, ValueError):
    code = "negative_coordinate"


class NonMinimalGeneratingSet(SemigroupError, ValueError):
    code = "non_minimal_generating_set"

    def __init__(self, message, generator=None, index=None):
        super().__init__(message)
        self.generator = generator
        self.index = index


class BoundTooSmallForCertification(SemigroupError):
    code = "bound_too_small_for_certification"


class EmptyGapSet(SemigroupError):
    code = "empty_gap_set"


class RequiresCertifiedPF(SemigroupError):
    code = "requires_certified_pf"


class DegreeNotInSemigroup(SemigroupError, ValueError):
    code = "degree_not_in_semigroup"


class StrategyPreconditionFailed(SemigroupError):
    code = "strategy_precondition_failed"


class PreconditionFailed(SemigroupError):
    code = "precondition_failed"


class SeriesNotStable(SemigroupError):
    code = "series_not_stable"


class BinomialNotInIdeal(SemigroupError, ValueError):
    code = "binomial_not_in_ideal"


class XNotInSemigroup(SemigroupError, ValueError):
    code = "x_not_in_semigroup"


class NotPseudoFrobenius(SemigroupError, ValueError):
    code = "not_pseudo_frobenius"


class SumInSemigroup(SemigroupError, ValueError):
    code = "sum_in_semigroup"


class UncertifiedPF(SemigroupError):
    code = "uncertified_pf"


class UncertifiedComponentPF(SemigroupError):
    code = "uncertified_component_pf"


class InvalidRowChoice(SemigroupError, ValueError):
    code = "invalid_row_choice"


class ComponentNotRFGenerated(SemigroupError):
    code = "component_not_rf_generated"


class TooManyGenerators(SemigroupError, ValueError):
    code = "too_many_generators"


class NoFrobeniusElement(SemigroupError):
    code = "no_frobenius_element"


class NotCSemigroup(SemigroupError):
    code = "not_c_semigroup"


class NotSimplicial(SemigroupError):
    code = "not_simplicial"


class UncertifiedApery(SemigroupError):
    code = "uncertified_apery"
