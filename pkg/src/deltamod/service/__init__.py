"""HTTP surface: a FastAPI app exposing the toolkit operations."""

from .app import app, create_app

__all__ = ["app", "create_app"]
