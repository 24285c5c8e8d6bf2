"""Sparse index sets: the positions where coefficients or digits may be non-zero."""

from __future__ import annotations

import warnings


class SparseIndexSet:
    """Strictly increasing non-negative indices, normalized so the smallest is 0.

    Input is sorted and deduplicated. A set whose minimum is not 0 is shifted
    down with a warning; shifting relabels positions and does not affect any
    injectivity property built on top of the set.
    """

    __slots__ = ("indices",)

    def __init__(self, indices):
        distinct = sorted({int(i) for i in indices})
        if not distinct:
            raise ValueError("index set must be non-empty")
        if distinct[0] != 0:
            warnings.warn(
                f"shifting index set by {-distinct[0]} so the smallest index is 0",
                stacklevel=2,
            )
            low = distinct[0]
            distinct = [i - low for i in distinct]
        object.__setattr__(self, "indices", tuple(distinct))

    def __setattr__(self, name, _value):
        raise AttributeError(f"SparseIndexSet is immutable, cannot set {name}")

    @property
    def n(self) -> int:
        """Number of indices."""
        return len(self.indices)

    @property
    def span(self) -> int:
        """One past the largest index: the length of a dense carrier vector."""
        return self.indices[-1] + 1

    @property
    def slack(self) -> int:
        """How many positions below the top are absent (span - n)."""
        return self.span - len(self.indices)

    @classmethod
    def from_text(cls, text: str) -> "SparseIndexSet":
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"malformed index list {text!r}") from exc

    def to_text(self) -> str:
        return ",".join(str(i) for i in self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __getitem__(self, i):
        return self.indices[i]

    def __contains__(self, value) -> bool:
        return value in self.indices

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseIndexSet) and self.indices == other.indices

    def __hash__(self) -> int:
        return hash(self.indices)

    def __repr__(self) -> str:
        return f"SparseIndexSet({list(self.indices)})"
