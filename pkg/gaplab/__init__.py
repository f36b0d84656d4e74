from .version import __version__  # noqa: F401

__all__ = []
