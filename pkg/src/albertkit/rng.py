"""Deterministic seed derivation for randomized checks.

Every randomized routine takes a 64-bit seed and derives per-trial
generators from (seed, label, index), so results never depend on the
order trials are executed in.
"""

import hashlib
import random


def derive_seed(*parts) -> int:
    """Mix arbitrary labels/indices into a stable 64-bit seed."""
    text = "|".join(str(p) for p in parts)
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def spawn(*parts) -> random.Random:
    """A fresh generator keyed by the given labels."""
    return random.Random(derive_seed(*parts))
