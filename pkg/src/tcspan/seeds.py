"""Deterministic seed derivation.

All randomness in a run flows from one 64-bit root seed; each component mixes
its name into the root via SHA-256 so a single CLI seed reproduces an entire
sweep regardless of Python hash randomization.
"""

from __future__ import annotations

import hashlib
import random

MASK64 = (1 << 64) - 1


def derive_seed(root: int, *components: str | int) -> int:
    h = hashlib.sha256()
    h.update(str(int(root) & MASK64).encode())
    for c in components:
        h.update(b"/")
        h.update(str(c).encode())
    return int.from_bytes(h.digest()[:8], "big")


def rng_for(root: int, *components: str | int) -> random.Random:
    return random.Random(derive_seed(root, *components))
