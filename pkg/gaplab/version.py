"""
``gaplab.__version__``, resolved on first use.

Sources, in order: setuptools_scm for a git checkout, the ``_version.py``
written at build time, the installed distribution metadata, and finally
``0.0.unknown``.
"""
from collections import UserString
from importlib import metadata
from pathlib import Path
from typing import Optional

UNKNOWN = "0.0.unknown"


def _from_scm() -> Optional[str]:
    here = Path(__file__).resolve()
    checkout = here.parent.parent
    if not any((checkout / marker).exists() for marker in (".git", ".git_archival.txt")):
        return None
    try:
        from setuptools_scm import get_version
        return get_version(root="..", relative_to=here)
    except (ImportError, LookupError):
        return None


def _from_build() -> Optional[str]:
    try:
        from ._version import version
    except ImportError:
        return None
    return version


def _from_metadata() -> Optional[str]:
    try:
        return metadata.version("gaplab")
    except metadata.PackageNotFoundError:
        return None


class VersionProxy(UserString):
    """A string that looks itself up the first time it is read."""

    def __init__(self):
        self._version: Optional[str] = None

    @property
    def data(self) -> str:
        if self._version is None:
            self._version = _from_scm() or _from_build() or _from_metadata() or UNKNOWN
        return self._version


__version__ = version = VersionProxy()
