"""Exception types shared across the toolkit."""


class CMSurveyError(Exception):
    """Base class for all toolkit errors."""


class CompositeModulus(CMSurveyError):
    """A claimed prime failed the primality check."""


class NotSquarefree(CMSurveyError):
    """Root isolation requires a squarefree polynomial."""


class PrecisionExhausted(CMSurveyError):
    """Certified computation failed at the internal working-precision cap."""


class Reducible(CMSurveyError):
    """Field construction needs an irreducible defining polynomial."""


class UnsupportedIndex(CMSurveyError):
    """p-maximality of the order could not be certified."""


class IndexDivisor(CMSurveyError):
    """Prime decomposition requested at a prime dividing every usable equation-order index."""


class FieldMismatch(CMSurveyError):
    """Operands belong to different number fields."""


class InconclusiveBound(CMSurveyError):
    """Principality search exhausted its enumeration bound without a discrete-log fallback."""


class RelationSaturationFailure(CMSurveyError):
    """Class-group relation collection hit its effort cap before certification."""


class NonFundamental(CMSurveyError):
    """A fundamental discriminant was required."""


class NotCM(CMSurveyError):
    """The field is not CM."""


class ClosureDegreeUnsupported(CMSurveyError):
    """Galois closure construction supports base degree <= 4 only."""


class RecognitionFailure(CMSurveyError):
    """Certified rounding could not separate algebraic candidates."""


class EvenCharacter(CMSurveyError):
    """L-value machinery at s=0 requires an odd character."""


class EmptyInput(CMSurveyError):
    """A nonempty collection was required."""


class InvalidDiscriminant(CMSurveyError):
    """Discriminant fails the required congruence or sign conditions."""


class ConfigInvalid(CMSurveyError):
    """Survey configuration failed validation."""


class CacheCorrupt(CMSurveyError):
    """Cache record digest mismatch."""


class DegenerateInput(CMSurveyError):
    """Least-squares fit needs >= 3 pairs with distinct abscissae."""


class IOFailure(CMSurveyError):
    """Report emission failed."""
