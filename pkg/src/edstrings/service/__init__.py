"""HTTP service layer over the edstrings package."""

from .app import app, create_app

__all__ = ["app", "create_app"]
