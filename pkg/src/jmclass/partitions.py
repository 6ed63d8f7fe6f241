"""Integer partitions: enumeration, conjugation, hooks, contents and the
small surgeries (add/remove a box, swap a part) used to index class
expansions.

A :class:`Partition` is an immutable tuple of weakly decreasing positive
integers.  The empty partition ``Partition()`` is a legitimate value.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> "Partition":
        # caller guarantees canonical form
        return tuple.__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Build from parts in any order; zeros are dropped."""
        return cls._trusted(sorted((p for p in parts if p), reverse=True))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the text form ``"3,2,1,1"`` (empty string is the empty partition)."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(map(str, self))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicity(self, i: int) -> int:
        return self.count(i)

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    @property
    def lowest_part(self) -> int:
        return self[-1] if self else 0

    @property
    def sign(self) -> int:
        """(-1)^(weight - length)."""
        return -1 if (self.weight - self.length) % 2 else 1

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    # --- surgery -------------------------------------------------------
    def without(self, *parts: int) -> "Partition | None":
        """Remove the given parts (with multiplicity); None if some part is missing."""
        rest = list(self)
        for p in parts:
            try:
                # remove the last occurrence so the result stays sorted
                idx = len(rest) - 1 - rest[::-1].index(p)
            except ValueError:
                return None
            del rest[idx]
        return Partition._trusted(rest)

    def union(self, *parts: int) -> "Partition":
        """Add parts (positive integers) and re-sort."""
        return Partition.from_parts(list(self) + list(parts))

    def replace(self, remove: Iterable[int], add: Iterable[int]) -> "Partition | None":
        """The partition ``self \\ remove ∪ add`` if every removed part exists."""
        rest = self.without(*remove)
        if rest is None:
            return None
        return rest.union(*add)


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in partitions_of(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n if max_part is None else max_part))


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition._trusted((first,) + tuple(rest)))
    return tuple(out)


def partitions_upto(max_weight: int) -> Iterator[Partition]:
    """Partitions of weight 0, 1, ..., max_weight."""
    for w in range(max_weight + 1):
        yield from _partitions(w, w)


def conjugate(la: Iterable[int]) -> Partition:
    la = tuple(la)
    if not la:
        return Partition()
    return Partition._trusted(
        tuple(sum(1 for p in la if p > j) for j in range(la[0]))
    )


def z_order(la: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``la``."""
    return prod(i ** m * factorial(m) for i, m in Counter(la).items())


def hook_lengths(la: Partition) -> list[int]:
    lc = conjugate(la)
    return [la[i] + lc[j] - i - j - 1 for i in range(len(la)) for j in range(la[i])]


def hook_product(la: Partition) -> int:
    return prod(hook_lengths(la))


def contents(la: Partition) -> list[int]:
    """Contents j - i of the boxes of ``la`` (row by row)."""
    return [j - i for i, row in enumerate(la) for j in range(row)]


def add_corner(la: Partition, i: int) -> Partition | None:
    """``la`` with one box added to row ``i`` (1-based), or None if that is not a partition."""
    if not 1 <= i <= len(la) + 1:
        raise IndexError(f"row {i} out of range for {la!r}")
    parts = list(la) + [0]
    parts[i - 1] += 1
    if i >= 2 and parts[i - 1] > parts[i - 2]:
        return None
    return Partition(parts)


def remove_corner(la: Partition, i: int) -> Partition | None:
    """``la`` with one box removed from row ``i`` (1-based), or None."""
    if not 1 <= i <= len(la):
        raise IndexError(f"row {i} out of range for {la!r}")
    parts = list(la)
    parts[i - 1] -= 1
    if i < len(parts) and parts[i - 1] < parts[i]:
        return None
    return Partition(parts)


def reduce(mu: Partition) -> Partition:
    """Erase the parts equal to 1."""
    return Partition._trusted(tuple(p for p in mu if p > 1))


def pad(rho: Partition, n: int) -> Partition:
    """Append parts 1 up to weight ``n``."""
    w = sum(rho)
    if n < w:
        raise ValueError(f"cannot pad {rho} of weight {w} to {n}")
    return Partition._trusted(tuple(rho) + (1,) * (n - w))


def partition_sort_key(la: Partition):
    """Key for the canonical ordering of mixed-weight keys: weight descending,
    then reverse-lexicographic."""
    return (-sum(la), tuple(-p for p in la))
