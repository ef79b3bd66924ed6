"""Exception classes shared across the package.

The CLI maps these onto distinct exit codes, so keep the taxonomy small:
config problems, backend problems, and numeric failures during training.
"""


class ConceptForgeError(Exception):
    """Base class for all package errors."""


class ConfigError(ConceptForgeError):
    """Invalid or unparseable run configuration. Carries the offending key path."""

    def __init__(self, message: str, key_path: str = ""):
        self.key_path = key_path
        super().__init__(f"{key_path}: {message}" if key_path else message)


class TemplateError(ConceptForgeError):
    """A prompt template does not contain exactly one placeholder."""


class BackendError(ConceptForgeError):
    """A semantic backend failed or was fed incompatible inputs."""


class UnknownWordError(BackendError):
    """A word lookup missed the stub vocabulary and hash fallback is disabled."""


class BackendUnavailableError(BackendError):
    """A real-model adapter cannot run (missing packages or weights)."""


class EmptyAnswerError(BackendError):
    """The VQA backend produced no usable answer; the segment should be skipped."""


class NonFiniteLossError(ConceptForgeError):
    """Training produced a NaN/Inf loss. Carries a diagnostic snapshot."""

    def __init__(self, step: int, loss_value: float, snapshot: dict):
        self.step = step
        self.loss_value = loss_value
        self.snapshot = snapshot
        super().__init__(
            f"non-finite loss {loss_value!r} at step {step}; snapshot: {snapshot}"
        )
