"""
Exceptions raised by the algebra engine.
"""


class AlgebraError(Exception):
    """Base class for errors raised by ring, series and Hopf computations."""


class RingMismatchError(AlgebraError):
    """Operands live in different coefficient rings."""


class MissingImageError(AlgebraError):
    """An algebra morphism has no image for a generator it was asked to map."""


class NoTensorSquareError(AlgebraError):
    """A tensor embedding was requested for a ring that is not a Hopf carrier."""


class NonUnitLinearTermError(AlgebraError):
    """Series reversion needs the linear coefficient to be exactly 1."""


class NonMonicSeriesError(AlgebraError):
    """A logarithm or twist series does not start with x."""


class DescriptorMismatchError(AlgebraError):
    """Formal groups or covering series built over different Hopf descriptors."""


class NotCocommutativeError(AlgebraError):
    """Twisting by convolution powers needs a cocommutative Hopf algebra."""


class HopfStructureError(AlgebraError):
    """The diagonal table does not define a connected graded bialgebra."""


class InvalidFormalGroupLawError(AlgebraError):
    """A series failed the formal group law axioms."""


class DescriptorError(Exception):
    """A descriptor document could not be parsed."""
