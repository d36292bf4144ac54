"""Exception hierarchy shared across the pipeline, glossary, and bench modules."""


class TermTipError(Exception):
    """Base class for all package errors."""


class ParseFailure(TermTipError):
    """Input could not be recovered as markup."""


class EmptyDocument(TermTipError):
    """Nothing remained after noise stripping."""


class NoContent(TermTipError):
    """No extraction candidate scored above the minimum-text threshold."""


class ProviderFailure(TermTipError):
    """A classification or definition provider errored or timed out."""


class TaxonomyUnavailable(ProviderFailure):
    """Taxonomy provider failed; chain degrades to the fallback provider."""


class LlmUnavailable(ProviderFailure):
    """Definition/fallback provider failed; unknown terms stay unresolved."""


class AllProvidersFailed(TermTipError):
    """Every provider in the classifier chain errored."""


class UnparseableResponse(ProviderFailure):
    """A boolean provider answer could not be parsed as yes/no."""


class GlossaryError(TermTipError):
    """Base class for glossary store and client errors."""


class StoreUnavailable(GlossaryError):
    """The glossary store could not be loaded."""


class GlossaryUnreachable(GlossaryError):
    """The glossary service could not be reached; fatal for resolution."""


class NotFound(GlossaryError):
    """No entry exists for the requested key."""


class ConflictCurated(GlossaryError):
    """A cached write attempted to overwrite a curated entry."""


class ValidationFailed(GlossaryError):
    """A contribution was submitted with empty fields."""


class EmptyInput(TermTipError):
    """Statistics were requested over an empty sample list."""


class ConfigError(TermTipError):
    """Pipeline configuration is invalid or inconsistent."""
