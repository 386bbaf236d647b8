"""Exception types shared across the package."""


class ModelError(ValueError):
    """Invalid model manifold definition or descriptor."""


class DescriptorError(ModelError):
    """Malformed JSON model descriptor."""


class NumericalError(RuntimeError):
    """A numerical routine failed to reach its accuracy contract."""


class CertificationError(NumericalError):
    """A certified constant could not be established on its grid."""
