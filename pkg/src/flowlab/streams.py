"""Counter-based random streams.

Every stochastic operation in the package draws its randomness from a
:class:`RandomStream`, a (base_seed, stream_id) pair keying a Philox
counter-based generator.  Deriving a replica stream is O(1), two streams with
distinct ids are statistically independent, and the same pair always
reproduces the same variate sequence, so replicas can be farmed out to
workers in any order without changing results.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["RandomStream", "derive_stream"]

_MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class RandomStream:
    """Key of a counter-based RNG stream."""

    base_seed: int
    stream_id: int

    def generator(self) -> np.random.Generator:
        """Fresh generator positioned at the start of this stream."""
        key = np.array(
            [self.base_seed & _MASK64, self.stream_id & _MASK64], dtype=np.uint64
        )
        return np.random.Generator(np.random.Philox(key=key))

    def child(self, lane: int) -> "RandomStream":
        """Substream for a named lane, disjoint from sibling lanes.

        Lanes fold into the high bits of the stream id so that experiment
        replicas (low bits) and internal lanes never collide for any
        realistic replica count.
        """
        return RandomStream(self.base_seed, (self.stream_id + (lane << 40)) & _MASK64)


def derive_stream(base_seed: int, replica: int) -> RandomStream:
    """Stream for one replica of a run seeded with ``base_seed``."""
    return RandomStream(int(base_seed), int(replica))
