"""Lattice points, ground sets and their JSON document format."""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

# Exponent vectors are plain integer tuples: hashable, immutable and
# lexicographically ordered by Python's tuple comparison.
LatticePoint = tuple


class GroundSetError(ValueError):
    """Raised for malformed ground-set documents."""


def is_even(p: Sequence[int]) -> bool:
    return all(c % 2 == 0 for c in p)


@dataclass(frozen=True)
class GroundSet:
    n: int
    points: tuple

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise GroundSetError("dimension n must be a positive integer")
        if not self.points:
            raise GroundSetError("empty point list")
        for p in self.points:
            if len(p) != self.n:
                raise GroundSetError(f"dimension mismatch: {list(p)} has length {len(p)}, expected {self.n}")
            if any(c < 0 for c in p):
                raise GroundSetError(f"negative coordinate in {list(p)}")
        if len(set(self.points)) != len(self.points):
            raise GroundSetError("duplicate points")
        if list(self.points) != sorted(self.points):
            raise GroundSetError("points must be in lexicographic order; use GroundSet.of")

    @classmethod
    def of(cls, points: Iterable[Iterable[int]], n: int | None = None) -> "GroundSet":
        """Build a canonical ground set from any iterable of points.

        Scalars are accepted for ``n = 1`` so ``GroundSet.of([0, 2, 4])`` works.
        """
        pts = [_as_point(p) for p in points]
        if n is None:
            if not pts:
                raise GroundSetError("empty point list")
            n = len(pts[0])
        if len(set(pts)) != len(pts):
            raise GroundSetError("duplicate points")
        return cls(n, tuple(sorted(pts)))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self._index

    @property
    def _index(self):
        # frozen dataclass: cache through object.__setattr__
        try:
            return self.__dict__["_idx"]
        except KeyError:
            idx = {p: i for i, p in enumerate(self.points)}
            object.__setattr__(self, "_idx", idx)
            return idx

    def index(self, p) -> int:
        return self._index[tuple(p)]


def _as_point(p) -> tuple:
    if isinstance(p, int):
        return (p,)
    return tuple(int(c) for c in p)


def even_subset(A: GroundSet) -> tuple:
    return tuple(p for p in A.points if is_even(p))


def to_document(A: GroundSet) -> dict:
    return {"n": A.n, "points": [list(p) for p in A.points]}


def serialize_ground_set(A: GroundSet) -> str:
    return json.dumps(to_document(A))


def parse_ground_set(text: str) -> GroundSet:
    """Parse a ``{"n": int, "points": [[int, ...], ...]}`` document.

    Points are sorted lexicographically. Duplicates, negative coordinates and
    points whose length differs from ``n`` are rejected.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroundSetError(f"malformed document: {exc}") from None
    return from_document(doc)


def from_document(doc) -> GroundSet:
    if not isinstance(doc, dict) or "n" not in doc or "points" not in doc:
        raise GroundSetError('malformed document: expected an object with keys "n" and "points"')
    n, raw = doc["n"], doc["points"]
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise GroundSetError("malformed document: n must be a positive integer")
    if not isinstance(raw, list):
        raise GroundSetError("malformed document: points must be a list")
    if not raw:
        raise GroundSetError("empty point list")
    pts = []
    for p in raw:
        if isinstance(p, int) and not isinstance(p, bool) and n == 1:
            p = [p]
        if not isinstance(p, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in p):
            raise GroundSetError(f"malformed document: point {p!r} is not a list of integers")
        if any(c < 0 for c in p):
            raise GroundSetError(f"negative coordinate in {p}")
        if len(p) != n:
            raise GroundSetError(f"dimension mismatch: {p} has length {len(p)}, expected {n}")
        pts.append(tuple(p))
    return GroundSet.of(pts, n)
