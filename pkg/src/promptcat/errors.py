"""Exception hierarchy shared across the package."""


class PromptCatError(Exception):
    """Base class for every error raised by promptcat."""


class CompositionError(PromptCatError):
    """Arrow endpoints do not line up for composition."""


class UnknownObjectError(PromptCatError):
    """An object label is not part of the presentation."""


class MissingSemanticsError(PromptCatError):
    """The evaluation context has no semantics for an arrow."""

    def __init__(self, arrow_label: str):
        self.arrow_label = arrow_label
        super().__init__(f"no semantics registered for arrow {arrow_label!r}")


class IllFormedFunctorError(PromptCatError):
    """A functor's object or arrow map is inconsistent."""


class IncompleteTransformationError(PromptCatError):
    """A natural transformation is missing a component."""


class CurryShapeError(PromptCatError):
    """Currying applied to an arrow whose domain is not the expected tensor."""


class EvaluationError(PromptCatError):
    """A description or arrow could not be evaluated on the given input."""


class RenderError(PromptCatError):
    """A template could not be rendered (missing or surplus slot values)."""


class RequestError(PromptCatError):
    """A completion request violates its own invariants."""


class BudgetExceededError(PromptCatError):
    """Prompt plus requested output does not fit the token budget."""

    def __init__(self, prompt_tokens: int, max_output: int, k: int):
        self.prompt_tokens = prompt_tokens
        self.max_output = max_output
        self.k = k
        super().__init__(
            f"budget exceeded: {prompt_tokens} prompt tokens + "
            f"{max_output} output tokens > k={k}"
        )


class TransportError(PromptCatError):
    """The live backend failed after exhausting retries."""


class CacheMissError(PromptCatError):
    """Strict replay hit a request that was never recorded."""

    def __init__(self, key: str):
        self.key = key
        super().__init__(f"replay cache miss for request hash {key}")


class ConstructionError(PromptCatError):
    """A category, object, or arrow violates a construction-time invariant."""


class TaskMembershipError(PromptCatError):
    """An arrow's output escaped its codomain on a witness."""

    def __init__(self, arrow_label: str, witness: str, output: str):
        self.arrow_label = arrow_label
        self.witness = witness
        self.output = output
        super().__init__(
            f"arrow {arrow_label!r} applied to witness {witness!r} "
            f"produced {output!r}, which is outside its codomain"
        )


class MissingDualError(PromptCatError):
    """A generator has no reverse entry in the duality table."""


class NumberedListParseError(PromptCatError):
    """A completion did not contain the expected numbered list."""

    def __init__(self, message: str, partial: list[str]):
        self.partial = partial
        super().__init__(message)


class CorpusError(PromptCatError):
    """A corpus file is unreadable, too small, or an item is unusable."""


class RankingFormatError(PromptCatError):
    """A ranking file violates the strict-permutation contract."""


class DegenerateInputError(PromptCatError):
    """A statistic was requested on input it is undefined for."""


class ConfigError(PromptCatError):
    """A run configuration is invalid or incomplete."""


class FixtureError(PromptCatError):
    """A fixture file does not match the documented schema."""
