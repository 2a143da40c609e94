"""Map-germs as tuples of jets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DimensionError
from .jets import Jet, jet_compose_components
from .linalg import Matrix, mat_vec
from .rationals import ZERO


@dataclass(frozen=True)
class MapJet:
    """A map-germ f: (R^m, 0) -> (R^n, 0) as an n-tuple of m-variable jets.

    Every component shares the variable count and truncation order and
    has zero constant term.
    """

    source_dim: int
    target_dim: int
    components: tuple[Jet, ...]

    def __post_init__(self):
        if len(self.components) != self.target_dim:
            raise DimensionError(
                f"{self.target_dim} components expected, got {len(self.components)}")
        object.__setattr__(self, "components", tuple(self.components))
        orders = {c.order for c in self.components}
        if len(orders) != 1:
            raise DimensionError(f"components disagree on truncation order: {orders}")
        for i, c in enumerate(self.components):
            if c.num_vars != self.source_dim:
                raise DimensionError(
                    f"component {i + 1} has {c.num_vars} variables, expected {self.source_dim}")
            if c.constant_term():
                raise DimensionError(
                    f"component {i + 1} has nonzero constant term (not a germ at 0)")

    @property
    def order(self) -> int:
        return self.components[0].order

    def jacobian_at_origin(self) -> Matrix:
        """The n x m matrix df_0 of first-order coefficients."""
        return [c.linear_coeffs() for c in self.components]

    def truncate(self, order: int) -> "MapJet":
        return MapJet(self.source_dim, self.target_dim,
                      tuple(c.truncate(order) for c in self.components))

    def apply_linear_target(self, T: Matrix) -> "MapJet":
        """Compose a constant linear map on the target: T o f."""
        if len(T) != self.target_dim or any(len(r) != self.target_dim for r in T):
            raise DimensionError("target change must be n x n")
        comps = []
        for row in T:
            acc = Jet.zero(self.source_dim, self.order)
            for coeff, comp in zip(row, self.components):
                if coeff:
                    acc = acc + comp.scale(coeff)
            comps.append(acc)
        return MapJet(self.source_dim, self.target_dim, tuple(comps))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"


def jet_compose(f: MapJet, g: MapJet) -> MapJet:
    """Truncated composition f o g; g must target f's source space."""
    if g.target_dim != f.source_dim:
        raise DimensionError(
            f"cannot compose: inner map targets R^{g.target_dim}, outer expects R^{f.source_dim}")
    comps = jet_compose_components(f.components, g.components)
    return MapJet(g.source_dim, f.target_dim, tuple(comps))


def map_from_components(components: Sequence[Jet]) -> MapJet:
    comps = tuple(components)
    return MapJet(comps[0].num_vars, len(comps), comps)
