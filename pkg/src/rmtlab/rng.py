"""Seeded, replicate-addressable random streams.

A stream is a value, not a stateful object: every sampler that receives an
:class:`RngStream` builds a fresh generator from it, so calling a sampler twice
with the same stream gives bit-identical output. Replicate ``r`` of a Monte
Carlo run uses ``RngStream(seed, r)``; independent draws inside one replicate
use :meth:`RngStream.child`.

Bits come from PCG64 seeded by ``SeedSequence(master_seed, spawn_key)``, which
is platform independent for a fixed numpy version. Normal variates use numpy's
ziggurat ``standard_normal``; exponentials use ``standard_exponential``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from rmtlab.errors import ValidationError

_U64 = 1 << 64


@dataclass(frozen=True)
class RngStream:
    master_seed: int
    stream_id: int = 0
    path: tuple[int, ...] = ()

    def __post_init__(self):
        for name in ("master_seed", "stream_id"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or not 0 <= int(v) < _U64:
                raise ValidationError(f"{name} must be an unsigned 64-bit integer, got {v!r}")

    def child(self, index: int) -> "RngStream":
        """An independent sub-stream, e.g. for a second sampler in the same replicate."""
        return RngStream(self.master_seed, self.stream_id, self.path + (int(index),))

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(int(self.master_seed), spawn_key=(int(self.stream_id), *self.path))
        return np.random.Generator(np.random.PCG64(ss))


def as_generator(rng) -> np.random.Generator:
    """Accept an :class:`RngStream`, a numpy ``Generator`` (used statefully) or an int seed."""
    if isinstance(rng, RngStream):
        return rng.generator()
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, (int, np.integer)):
        return RngStream(int(rng)).generator()
    raise ValidationError(f"cannot build a random generator from {type(rng).__name__}")
