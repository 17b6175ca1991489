"""Reproducible randomness: a 32-byte master seed and a keyed PRF.

All per-edge ranks and per-round subseeds are blake2b outputs keyed by the
master seed with domain-separation labels, so results are identical across
machines and query orders.
"""
from __future__ import annotations

import hashlib
import secrets

from .errors import InvalidParam

SEED_BYTES = 32
_RANK_BITS = 128


class Seed:
    """A 32-byte PRF key.  Hex form is the CLI currency (64 hex chars)."""

    __slots__ = ("master",)

    def __init__(self, master: bytes):
        if not isinstance(master, bytes) or len(master) != SEED_BYTES:
            raise InvalidParam(f"seed must be {SEED_BYTES} bytes")
        self.master = master

    @classmethod
    def from_hex(cls, s: str) -> "Seed":
        try:
            raw = bytes.fromhex(s.strip())
        except ValueError as exc:
            raise InvalidParam(f"bad seed hex: {exc}") from exc
        return cls(raw)

    @classmethod
    def from_int(cls, n: int) -> "Seed":
        return cls((n % (1 << (8 * SEED_BYTES))).to_bytes(SEED_BYTES, "big"))

    @classmethod
    def random(cls) -> "Seed":
        return cls(secrets.token_bytes(SEED_BYTES))

    @property
    def hex(self) -> str:
        return self.master.hex()

    def __repr__(self):
        return f"Seed({self.hex[:16]}...)"

    def __eq__(self, other):
        return isinstance(other, Seed) and self.master == other.master

    def __hash__(self):
        return hash(self.master)

    def derive(self, label: str, index: int = 0) -> "Seed":
        """Domain-separated subseed, e.g. the per-round seeds rho_t."""
        h = hashlib.blake2b(
            label.encode() + b":" + index.to_bytes(8, "big", signed=True),
            digest_size=SEED_BYTES,
            key=self.master,
        )
        return Seed(h.digest())

    def rank(self, data: bytes) -> int:
        """128-bit PRF value used to order edges."""
        h = hashlib.blake2b(b"rank:" + data, digest_size=_RANK_BITS // 8,
                            key=self.master)
        return int.from_bytes(h.digest(), "big")


def edge_rank(seed: Seed, enc_u: str, enc_v: str) -> tuple:
    """Total order key for an undirected edge: (PRF value, canonical id).

    The canonical id breaks the (negligible) chance of rank collisions so
    the greedy order is a strict total order.
    """
    lo, hi = sorted((enc_u, enc_v))
    key = f"{lo}|{hi}"
    return (seed.rank(key.encode()), key)
