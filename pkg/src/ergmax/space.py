"""Constrained families of graphs over which objectives are optimized."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_connected, num_pairs


@dataclass(frozen=True)
class SampleSpace:
    """Feasible set of graphs: optionally connected, optionally of fixed edge count."""

    connected: bool = True
    density: int | None = None

    def __post_init__(self) -> None:
        if self.density is not None and self.density < 0:
            raise ValueError("fixed edge count must be nonnegative")

    @classmethod
    def connected_graphs(cls) -> "SampleSpace":
        return cls(connected=True)

    @classmethod
    def all_graphs(cls) -> "SampleSpace":
        return cls(connected=False)

    @classmethod
    def fixed_density(cls, d: int, connected: bool = False) -> "SampleSpace":
        return cls(connected=connected, density=d)

    def validate_for(self, n: int) -> None:
        if self.density is not None and self.density > num_pairs(n):
            raise ValueError(f"fixed edge count {self.density} exceeds {num_pairs(n)} pairs")

    def admits(self, g: Graph) -> bool:
        if self.density is not None and g.edge_count != self.density:
            return False
        if self.connected and not is_connected(g):
            return False
        return True

    def label(self) -> str:
        parts = ["connected" if self.connected else "all"]
        if self.density is not None:
            parts.append(f"density={self.density}")
        return "+".join(parts)
