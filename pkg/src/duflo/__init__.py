"""Robinson-Schensted cells and the induced weak order on standard Young tableaux."""

from duflo.core_words import DomainError

__all__ = ["DomainError"]
__version__ = "0.1.0"
