"""Priority queues of critical pairs."""

import heapq
from typing import Callable, Generic, Iterator, Protocol, TypeVar


class _Sequenced(Protocol):
    entry_seq: int


P = TypeVar("P", bound=_Sequenced)


class PairQueue(Generic[P]):
    """Min-heap of pairs under ``key``; equal keys leave in insertion order.

    Entries are ``(key, entry_seq, pair)``. Sequence numbers are unique, so
    pairs themselves are never compared.
    """

    def __init__(self, key: Callable[[P], tuple]):
        self._key = key
        self._heap: list[tuple[tuple, int, P]] = []

    def __len__(self) -> int:
        return len(self._heap)

    def __bool__(self) -> bool:
        return bool(self._heap)

    def __iter__(self) -> Iterator[P]:
        """Pairs in heap (not priority) order."""
        return (entry[2] for entry in self._heap)

    def push(self, pair: P) -> None:
        heapq.heappush(self._heap, (self._key(pair), pair.entry_seq, pair))

    def pop(self) -> P:
        return heapq.heappop(self._heap)[2]

    def peek(self) -> P:
        return self._heap[0][2]

    def peek_key(self) -> tuple:
        return self._heap[0][0]

    def remove_if(self, predicate: Callable[[P], bool]) -> int:
        """Drop every pair matching ``predicate``; returns how many were dropped."""
        kept = [entry for entry in self._heap if not predicate(entry[2])]
        dropped = len(self._heap) - len(kept)
        if dropped:
            heapq.heapify(kept)
            self._heap = kept
        return dropped
