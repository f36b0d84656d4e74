"""
Counter-based random streams.

A `Seed` is a root integer plus a path of labels.  The generator for a seed
depends only on that pair, never on how many other streams were drawn
before it, so replicates, tree nodes and greedy steps can be evaluated in
any order or process and still reproduce the same draws.
"""
from __future__ import annotations

import hashlib
import os
from dataclasses import dataclass
from typing import Tuple, Union

import numpy as np

Label = Union[int, str, Tuple[int, ...]]

SEED_ENV_VAR = "GAPLAB_SEED"
MAX_ROOT = 2**64


def _label_key(label: Label) -> int:
    # the type tag keeps 1, "1" and (1,) apart
    token = f"{type(label).__name__}:{label!r}".encode()
    return int.from_bytes(hashlib.blake2b(token, digest_size=8).digest(), "little")


@dataclass(frozen=True)
class Seed:
    """
    Root seed and structured stream label.

    Parameters
    ----------
    root : int
        64-bit root seed.
    labels : tuple
        Path of stream labels, e.g. ``("exp-1", 3, "G")``.
    """
    root: int
    labels: Tuple[Label, ...] = ()

    def __post_init__(self):
        if not isinstance(self.root, (int, np.integer)) or isinstance(self.root, bool):
            raise TypeError(f"Seed root must be an integer, got {self.root!r}")
        if not 0 <= int(self.root) < MAX_ROOT:
            raise ValueError(f"Seed root {self.root} outside [0, 2**64)")
        object.__setattr__(self, "root", int(self.root))
        object.__setattr__(self, "labels", tuple(self.labels))
        for label in self.labels:
            if not isinstance(label, (int, str, tuple, np.integer)):
                raise TypeError(f"Unsupported stream label {label!r}")

    def child(self, *labels: Label) -> Seed:
        """Extend the label path."""
        normalized = tuple(
            tuple(int(x) for x in label) if isinstance(label, tuple)
            else int(label) if isinstance(label, np.integer)
            else label
            for label in labels
        )
        return Seed(self.root, self.labels + normalized)

    def spawn_key(self) -> Tuple[int, ...]:
        return tuple(_label_key(label) for label in self.labels)

    def generator(self) -> np.random.Generator:
        """A fresh generator positioned at the start of this stream."""
        sequence = np.random.SeedSequence(self.root, spawn_key=self.spawn_key())
        return np.random.Generator(np.random.Philox(sequence))

    @classmethod
    def from_env(cls, default: int = 0) -> Seed:
        """Root seed from ``GAPLAB_SEED``, falling back to ``default``."""
        value = os.environ.get(SEED_ENV_VAR)
        if value is None or not value.strip():
            return cls(default)
        return cls(int(value.strip(), 0))

    def __str__(self) -> str:
        return "/".join([str(self.root), *(str(label) for label in self.labels)])
