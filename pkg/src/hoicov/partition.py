"""Index partitions for group-structured measures."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexOutOfRange, PartitionMismatch


@dataclass(frozen=True)
class Partition:
    """Ordered list of disjoint index groups covering exactly {0..p-1}."""

    groups: tuple[tuple[int, ...], ...]
    p: int

    def __post_init__(self):
        groups = tuple(tuple(int(i) for i in g) for g in self.groups)
        object.__setattr__(self, "groups", groups)
        if not groups:
            raise PartitionMismatch("partition must contain at least one group")
        seen: set[int] = set()
        for g in groups:
            if not g:
                raise PartitionMismatch("empty group in partition")
            for i in g:
                if not 0 <= i < self.p:
                    raise PartitionMismatch(
                        f"index {i} outside range 0..{self.p - 1}"
                    )
                if i in seen:
                    raise PartitionMismatch(f"index {i} appears in two groups")
                seen.add(i)
        if len(seen) != self.p:
            missing = sorted(set(range(self.p)) - seen)
            raise PartitionMismatch(f"partition does not cover indices {missing}")

    @classmethod
    def from_groups(cls, groups) -> "Partition":
        """Build a partition, inferring p from the union of the groups."""
        idx = [int(i) for g in groups for i in g]
        p = max(idx) + 1 if idx else 0
        return cls(tuple(tuple(g) for g in groups), p)

    @classmethod
    def singletons(cls, p: int) -> "Partition":
        return cls(tuple((i,) for i in range(p)), p)

    @property
    def K(self) -> int:
        return len(self.groups)

    @property
    def is_singleton(self) -> bool:
        return all(len(g) == 1 for g in self.groups)

    def group(self, k: int) -> tuple[int, ...]:
        if not 0 <= k < self.K:
            raise IndexOutOfRange(f"group {k} outside range 0..{self.K - 1}")
        return self.groups[k]

    def drop_group(self, k: int) -> tuple["Partition", tuple[int, ...]]:
        """Partition induced on the remaining indices after removing group k.

        Returns the re-indexed sub-partition plus the surviving original
        indices in ascending order (the row/column order of the reduced
        matrix).
        """
        dropped = set(self.group(k))
        remaining = tuple(i for i in range(self.p) if i not in dropped)
        pos = {old: new for new, old in enumerate(remaining)}
        sub = tuple(
            tuple(pos[i] for i in g)
            for j, g in enumerate(self.groups)
            if j != k
        )
        return Partition(sub, len(remaining)), remaining
