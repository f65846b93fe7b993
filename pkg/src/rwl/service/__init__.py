"""HTTP service wrapping the core package, plus the shared request handlers."""

from . import handlers, schemas

__all__ = ["handlers", "schemas"]
