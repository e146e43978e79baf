"""Uniform rectangular grids, grid functions, and the discrete L2 inner product.

Fields live on the interior nodes of a uniform mesh over a rectangle
(0, l1) x (0, l2); boundary values are homogeneous Dirichlet and are never
stored.  Interior nodes are enumerated row-major with the i1 index fastest,
which fixes the layout of every matrix and CSV dump in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Uniform 2D grid with N_a cells per axis over a rectangle of side l_a.

    Interior nodes sit at x_a = i_a * h_a for i_a = 1 .. N_a - 1 with
    h_a = l_a / N_a.  There are (N1 - 1) * (N2 - 1) interior nodes.
    """

    n1: int
    n2: int
    l1: float = 1.0
    l2: float = 1.0

    def __post_init__(self):
        if self.n1 < 2 or self.n2 < 2:
            raise ValueError("need N1, N2 >= 2 so the grid has interior nodes")
        if self.l1 <= 0.0 or self.l2 <= 0.0:
            raise ValueError("domain lengths must be positive")

    @property
    def h1(self) -> float:
        return self.l1 / self.n1

    @property
    def h2(self) -> float:
        return self.l2 / self.n2

    @property
    def shape(self) -> tuple[int, int]:
        """(interior columns, interior rows) = (N1 - 1, N2 - 1)."""
        return (self.n1 - 1, self.n2 - 1)

    @property
    def num_interior(self) -> int:
        return (self.n1 - 1) * (self.n2 - 1)

    @property
    def cell_area(self) -> float:
        return self.h1 * self.h2

    def flat_index(self, i1, i2):
        """Flat index of interior node (i1, i2), i1 fastest."""
        return (np.asarray(i2) - 1) * (self.n1 - 1) + (np.asarray(i1) - 1)

    def interior_indices(self) -> tuple[np.ndarray, np.ndarray]:
        """(i1, i2) integer index arrays over interior nodes in storage order."""
        m1, m2 = self.shape
        i1 = np.tile(np.arange(1, m1 + 1), m2)
        i2 = np.repeat(np.arange(1, m2 + 1), m1)
        return i1, i2

    def interior_coords(self) -> tuple[np.ndarray, np.ndarray]:
        """(x1, x2) coordinate arrays over interior nodes in storage order."""
        i1, i2 = self.interior_indices()
        return i1 * self.h1, i2 * self.h2

    def num_edges(self, axis: int) -> int:
        """Number of interior-adjacent mesh edges along `axis` (1 or 2)."""
        if axis == 1:
            return self.n1 * (self.n2 - 1)
        if axis == 2:
            return (self.n1 - 1) * self.n2
        raise ValueError("axis must be 1 or 2")

    def edge_indices(self, axis: int) -> tuple[np.ndarray, np.ndarray]:
        """(i1, i2) tail-node indices of the edges along `axis`, storage order.

        An axis-1 edge (i1, i2) joins nodes (i1, i2) and (i1 + 1, i2) for
        i1 = 0 .. N1 - 1, i2 = 1 .. N2 - 1; axis-2 edges are symmetric.
        """
        if axis == 1:
            i1 = np.tile(np.arange(0, self.n1), self.n2 - 1)
            i2 = np.repeat(np.arange(1, self.n2), self.n1)
        elif axis == 2:
            i1 = np.tile(np.arange(1, self.n1), self.n2)
            i2 = np.repeat(np.arange(0, self.n2), self.n1 - 1)
        else:
            raise ValueError("axis must be 1 or 2")
        return i1, i2

    def edge_midpoints(self, axis: int) -> tuple[np.ndarray, np.ndarray]:
        """(x1, x2) midpoint coordinates of the edges along `axis`."""
        i1, i2 = self.edge_indices(axis)
        if axis == 1:
            return (i1 + 0.5) * self.h1, i2 * self.h2
        return i1 * self.h1, (i2 + 0.5) * self.h2


def build_grid(n1: int, n2: int, l1: float = 1.0, l2: float = 1.0) -> Grid:
    """Construct a uniform grid with n_a cells along axis a (n_a >= 2)."""
    return Grid(int(n1), int(n2), float(l1), float(l2))


@dataclass(frozen=True)
class GridFunction:
    """Values at the interior nodes of a grid, i1 fastest.

    Immutable value type; boundary values are implicitly zero.
    """

    grid: Grid
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.shape != (self.grid.num_interior,):
            raise ValueError(
                f"expected {self.grid.num_interior} interior values, got shape {v.shape}"
            )
        v = v.copy()
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @classmethod
    def zeros(cls, grid: Grid) -> "GridFunction":
        return cls(grid, np.zeros(grid.num_interior))

    @classmethod
    def from_callable(cls, grid: Grid, f) -> "GridFunction":
        x1, x2 = grid.interior_coords()
        return cls(grid, f(x1, x2))

    def as_array2d(self) -> np.ndarray:
        """View shaped (N2 - 1, N1 - 1): row = constant i2, column = i1."""
        m1, m2 = self.grid.shape
        return self.values.reshape(m2, m1)

    def __add__(self, other: "GridFunction") -> "GridFunction":
        _check_same_grid(self, other)
        return GridFunction(self.grid, self.values + other.values)

    def __sub__(self, other: "GridFunction") -> "GridFunction":
        _check_same_grid(self, other)
        return GridFunction(self.grid, self.values - other.values)

    def __mul__(self, c: float) -> "GridFunction":
        return GridFunction(self.grid, self.values * c)

    __rmul__ = __mul__


def _check_same_grid(y: GridFunction, w: GridFunction):
    if y.grid != w.grid:
        raise ValueError("grid functions live on different grids")


def inner_product(y: GridFunction, w: GridFunction) -> float:
    """Discrete L2 scalar product (y, w) = sum y*w * h1*h2 over interior nodes."""
    _check_same_grid(y, w)
    return float(np.dot(y.values, w.values) * y.grid.cell_area)


def norm(y: GridFunction) -> float:
    """Discrete L2 norm induced by :func:`inner_product`."""
    return math.sqrt(max(inner_product(y, y), 0.0))


def sample_exact(grid: Grid, t: float, n1: int, n2: int) -> GridFunction:
    """Separable decaying sine mode on the unit square at time t.

    u(x, t) = sin(n1 pi x1) sin(n2 pi x2) exp(-pi^2 (n1^2 + n2^2) t),
    the solution of the homogeneous heat problem with this initial profile.
    Defined for the unit square only.
    """
    if not (grid.l1 == 1.0 and grid.l2 == 1.0):
        raise ValueError("the closed-form solution is specific to the unit square")
    if n1 < 1 or n2 < 1:
        raise ValueError("mode numbers must be natural numbers")
    if t < 0.0:
        raise ValueError("t must be nonnegative")
    x1, x2 = grid.interior_coords()
    amp = math.exp(-math.pi**2 * (n1 * n1 + n2 * n2) * t)
    return GridFunction(grid, np.sin(n1 * math.pi * x1) * np.sin(n2 * math.pi * x2) * amp)


def laplacian_mode_eigenvalue(grid: Grid, n1: int, n2: int) -> float:
    """Eigenvalue of the 5-point Laplacian for the sampled sine mode (n1, n2).

    lambda_h = sum_a (4 / h_a^2) sin^2(n_a pi h_a / (2 l_a)); valid for
    n_a < N_a.
    """
    s1 = math.sin(n1 * math.pi * grid.h1 / (2.0 * grid.l1))
    s2 = math.sin(n2 * math.pi * grid.h2 / (2.0 * grid.l2))
    return 4.0 / grid.h1**2 * s1 * s1 + 4.0 / grid.h2**2 * s2 * s2


def write_field_csv(y: GridFunction, path) -> None:
    """Dump a grid function as CSV rows `i1,i2,x1,x2,value`, row-major order."""
    g = y.grid
    i1, i2 = g.interior_indices()
    x1, x2 = g.interior_coords()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("i1,i2,x1,x2,value\n")
        for a, b, xa, xb, v in zip(i1, i2, x1, x2, y.values):
            fh.write(f"{a},{b},{xa:.17g},{xb:.17g},{v:.17g}\n")
