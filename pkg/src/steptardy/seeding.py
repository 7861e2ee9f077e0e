"""Deterministic seed derivation.

Substream seeds are derived by hashing the master seed together with a label
path: ``derive_seed(master, *labels)`` is the first 8 bytes (big-endian) of
SHA-256 over the ':'-joined decimal/master strings.  The mixing is stable
across platforms and Python versions, so every run, replication and
generator cell gets an independent, reproducible stream.
"""

from __future__ import annotations

import hashlib


def derive_seed(master: int, *labels) -> int:
    """64-bit seed for the substream named by ``labels`` under ``master``."""
    msg = ":".join([str(master), *(str(x) for x in labels)]).encode()
    return int.from_bytes(hashlib.sha256(msg).digest()[:8], "big")
