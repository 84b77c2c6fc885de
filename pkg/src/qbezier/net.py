"""Triangular index sets and coefficient/control nets.

Index triples ``(i, j, k)`` with ``i + j + k = n`` are always listed in
the canonical order: descending ``i``, then descending ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

import numpy as np


def net_size(n: int) -> int:
    """Number of triples of degree ``n``: ``(n+1)(n+2)/2``."""
    return (n + 1) * (n + 2) // 2


@lru_cache(maxsize=None)
def triples(n: int) -> tuple[tuple[int, int, int], ...]:
    """Canonically ordered triples ``(i, j, k)`` with ``i + j + k = n``."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    return tuple(
        (i, j, n - i - j) for i in range(n, -1, -1) for j in range(n - i, -1, -1)
    )


@lru_cache(maxsize=None)
def triple_positions(n: int) -> dict[tuple[int, int, int], int]:
    return {t: pos for pos, t in enumerate(triples(n))}


def check_triple(idx: tuple[int, int, int], n: int) -> tuple[int, int, int]:
    i, j, k = (int(c) for c in idx)
    if min(i, j, k) < 0 or i + j + k != n:
        raise ValueError(f"index {idx} is not a valid triple of degree {n}")
    return i, j, k


@dataclass(frozen=True, eq=False)
class TriangularNet:
    """A triangular array of values indexed by ``(i, j, k)``, ``i+j+k = degree``.

    ``values`` has shape ``(net_size(degree),) + value_shape``: scalars for a
    coefficient net, ``(3,)`` for a 3D control net. Rows follow
    :func:`triples`.
    """

    degree: int
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if self.degree < 0:
            raise ValueError(f"degree must be nonnegative, got {self.degree}")
        if values.ndim == 0 or values.shape[0] != net_size(self.degree):
            raise ValueError(
                f"degree {self.degree} needs {net_size(self.degree)} entries, "
                f"got array of shape {values.shape}"
            )
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @classmethod
    def from_mapping(cls, degree: int, entries: Mapping) -> "TriangularNet":
        """Build from ``{(i, j, k): value}``; every triple must be present once."""
        expected = set(triples(degree))
        keys = {check_triple(t, degree) for t in entries}
        if keys != expected or len(entries) != len(expected):
            missing = sorted(expected - keys, reverse=True)
            raise ValueError(f"net of degree {degree} is missing triples {missing}")
        by_key = {check_triple(t, degree): v for t, v in entries.items()}
        return cls(degree, np.array([by_key[t] for t in triples(degree)], dtype=float))

    @classmethod
    def constant(cls, degree: int, value=1.0) -> "TriangularNet":
        value = np.asarray(value, dtype=float)
        values = np.broadcast_to(value, (net_size(degree),) + value.shape).copy()
        return cls(degree, values)

    @property
    def value_shape(self) -> tuple[int, ...]:
        return self.values.shape[1:]

    @property
    def is_points(self) -> bool:
        return self.value_shape != ()

    def __getitem__(self, idx):
        return self.values[triple_positions(self.degree)[check_triple(idx, self.degree)]]

    def __len__(self):
        return self.values.shape[0]

    def items(self) -> Iterable:
        return zip(triples(self.degree), self.values)

    def to_dict(self) -> dict:
        return {t: (v.copy() if self.is_points else float(v)) for t, v in self.items()}

    def to_grid(self) -> np.ndarray:
        """Dense ``(n+1, n+1, *value_shape)`` array indexed by ``[i, j]``.

        Entries with ``i + j > n`` are zero.
        """
        n = self.degree
        grid = np.zeros((n + 1, n + 1) + self.value_shape)
        for (i, j, _), v in self.items():
            grid[i, j] = v
        return grid

    @classmethod
    def from_grid(cls, grid: np.ndarray, degree: int) -> "TriangularNet":
        return cls(degree, np.array([grid[i, j] for i, j, _ in triples(degree)]))

    def map(self, func) -> "TriangularNet":
        """Apply ``func`` to the whole value array (affine maps, scalings, ...)."""
        return TriangularNet(self.degree, func(np.array(self.values)))

    def __eq__(self, other):
        if not isinstance(other, TriangularNet):
            return NotImplemented
        return self.degree == other.degree and np.array_equal(self.values, other.values)

    def __repr__(self):
        return f"TriangularNet(degree={self.degree}, value_shape={self.value_shape})"


# Aliases naming the two uses of a net.
CoefficientNet = TriangularNet
ControlNet3D = TriangularNet
