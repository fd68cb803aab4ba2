"""Error types shared across the library.

Every failure mode that callers are expected to handle gets its own class;
plain ValueError / TypeError are reserved for programming mistakes.
"""


class RamifyError(Exception):
    """Base class for all library-specific errors."""


class PrecisionLoss(RamifyError):
    """A result is not determined at the working precision.

    Raised instead of guessing whenever a valuation, pivot, or root
    separation reaches the truncation bound.
    """


class NotEisenstein(RamifyError):
    """The given polynomial is not Eisenstein over the base ring."""


class DegreeOne(RamifyError):
    """Extensions of degree one are rejected; the theory below needs e >= 2."""


class NotGalois(RamifyError):
    """The extension is not Galois (fewer than e automorphisms found)."""


class NotFiniteLength(RamifyError):
    """A cokernel is certified to have infinite length (rank deficiency)."""


class NotIsolated(RamifyError):
    """The singularity length failed to stabilize below the configured caps."""


class NotStabilized(RamifyError):
    """A Hom-complex cohomology has no finite dimension (free part present)."""


class NotEquivariant(RamifyError):
    """An operator fails to commute with the group action."""


class TriangularIdentityFailed(RamifyError):
    """A duality datum failed its triangular identities (implementation bug)."""


class ParseError(RamifyError):
    """Rejected input in the polynomial / CLI grammar."""
