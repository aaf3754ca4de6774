"""Exception and warning types shared across the package."""


class HoicovError(Exception):
    """Base class for all errors raised by this package."""


class NotHermitian(HoicovError):
    """Input matrix is asymmetric beyond the accepted tolerance."""

    def __init__(self, asymmetry: float, threshold: float):
        self.asymmetry = asymmetry
        self.threshold = threshold
        super().__init__(
            f"matrix asymmetry {asymmetry:.3e} exceeds tolerance {threshold:.3e}"
        )


class KindMismatch(HoicovError):
    """Matrix declared real carries non-negligible imaginary parts."""


class NonPositiveDiagonal(HoicovError):
    """A diagonal entry is zero or negative."""

    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(f"diagonal entry {index} is {value:.6e}, must be > 0")


class NotPositiveDefinite(HoicovError):
    """Cholesky factorization hit a non-positive pivot."""

    def __init__(self, pivot_index: int, pivot_value: float):
        self.pivot_index = pivot_index
        self.pivot_value = pivot_value
        super().__init__(
            f"matrix is not positive definite: pivot {pivot_index} "
            f"is {pivot_value:.6e}"
        )


class PartitionMismatch(HoicovError):
    """Groups do not form a disjoint cover of the index range."""


class IndexOverlap(HoicovError):
    """Index sets expected to be disjoint overlap."""


class IndexOutOfRange(HoicovError):
    """Node or group index outside the valid range."""


class DimensionMismatch(HoicovError):
    """Array shapes or dimensions are inconsistent with the operation."""


class UnstableModel(HoicovError):
    """Autoregressive model has spectral radius >= 1."""

    def __init__(self, spectral_radius: float):
        self.spectral_radius = spectral_radius
        super().__init__(
            f"AR model is unstable: spectral radius estimate {spectral_radius:.6f}"
        )


class ConvergenceFailure(HoicovError):
    """Iterative estimate did not settle within the iteration budget."""

    def __init__(self, best_estimate: float, iterations: int):
        self.best_estimate = best_estimate
        self.iterations = iterations
        super().__init__(
            f"no convergence after {iterations} iterations; "
            f"best estimate {best_estimate:.6f}"
        )


class InvalidDof(HoicovError):
    """Degrees of freedom outside the valid range."""


class MalformedFile(HoicovError):
    """Input file does not match the expected format."""


class EpochMismatch(HoicovError):
    """Sample count is not divisible into the requested epochs."""


class DegenerateSystemWarning(UserWarning):
    """Measure is well-defined but analytically degenerate (p=2 or K=2)."""
