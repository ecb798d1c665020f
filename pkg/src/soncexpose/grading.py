"""Graded partitions by iterated vertex stripping around a protected set."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .circuits import Circuit, enumerate_circuits
from .geometry import vertices
from .lattice import GroundSet


class PartitionError(RuntimeError):
    pass


@dataclass(frozen=True)
class GradedPartition:
    """Layers ``L_0 .. L_K``; ``L_0`` is the protected set, outer hull layers get the highest index."""

    layers: tuple
    keep: frozenset

    @property
    def K(self) -> int:
        return len(self.layers) - 1

    @property
    def layer_of(self) -> dict:
        return {p: i for i, layer in enumerate(self.layers) for p in layer}

    @property
    def ground(self) -> frozenset:
        return frozenset(p for layer in self.layers for p in layer)


def graded_partition(E0: Iterable, keep: Iterable) -> GradedPartition:
    """Strip hull vertices outside ``keep`` until only ``keep`` is left.

    Round ``i`` removes ``V(E_{i-1}) \\ keep``; those points form layer
    ``K - i + 1``, so the first points stripped land in the top layer.
    Raises :class:`PartitionError` if a round removes nothing before ``keep``
    is reached.
    """
    E = frozenset(tuple(p) for p in E0)
    keep = frozenset(tuple(p) for p in keep)
    if not keep <= E:
        raise PartitionError("keep-set must be contained in E0")
    stripped = []
    while E != keep:
        removed = frozenset(vertices(E)) - keep
        if not removed:
            raise PartitionError(f"keep-set not reachable: stripping stalls at {sorted(E)}")
        stripped.append(tuple(sorted(removed)))
        E = E - removed
    layers = (tuple(sorted(keep)),) + tuple(reversed(stripped))
    return GradedPartition(layers, keep)


def check_layer_property(P: GradedPartition, A: GroundSet, defining: Optional[Circuit] = None,
                         circuits=None) -> bool:
    """Every circuit with ``beta`` in the partition has an ``S`` point in a strictly higher layer.

    ``defining`` (the certified circuit, if any) is exempt.
    """
    return not layer_property_violations(P, A, defining, circuits)


def layer_property_violations(P: GradedPartition, A: GroundSet, defining: Optional[Circuit] = None,
                              circuits=None) -> list:
    circuits = enumerate_circuits(A) if circuits is None else circuits
    layer_of = P.layer_of
    bad = []
    for c in circuits:
        if defining is not None and c.key == defining.key:
            continue
        if c.beta not in layer_of:
            continue
        top = layer_of[c.beta]
        if not any(layer_of.get(a, -1) > top for a in c.S):
            bad.append(c)
    return bad
