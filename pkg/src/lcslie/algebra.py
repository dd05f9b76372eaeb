"""Lie algebras presented by structure constants on a fixed basis.

Elements are coordinate lists over the basis e_1, ..., e_n; there is no
abstract element type.  Only brackets [e_i, e_j] with i < j are stored,
antisymmetry being implicit.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg

MAX_DIM = 14  # keeps every exterior power at most C(14,7) = 3432 dimensional


def _frozen_brackets(brackets, dim):
    out = {}
    for (i, j), vec in brackets.items():
        if not (1 <= i < j <= dim):
            raise ValueError(f"bracket key ({i},{j}) out of range for dim {dim}")
        v = tuple(Fraction(x) for x in vec)
        if len(v) != dim:
            raise ValueError(f"bracket [e{i},e{j}] has length {len(v)}, expected {dim}")
        if any(v):
            out[(i, j)] = v
    return out


@dataclass(frozen=True, eq=False)
class LieAlgebra:
    """dim and a map (i, j) -> coordinates of [e_i, e_j], i < j.

    Zero brackets are dropped at construction.  The Jacobi identity is
    not enforced here; parse_structure_equations and the constructive
    operations run check_jacobi and refuse invalid input.
    """

    dim: int
    brackets: dict
    labels: tuple = field(default=None)

    def __post_init__(self):
        if not (1 <= self.dim <= MAX_DIM):
            raise ValueError(f"dimension must be in 1..{MAX_DIM}, got {self.dim}")
        object.__setattr__(self, "brackets", _frozen_brackets(self.brackets, self.dim))
        labels = self.labels or tuple(f"e{i}" for i in range(1, self.dim + 1))
        if len(labels) != self.dim:
            raise ValueError("label count does not match dimension")
        object.__setattr__(self, "labels", tuple(labels))

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.brackets == other.brackets

    def basis_bracket(self, i, j):
        """[e_i, e_j] as a coordinate list, any i, j in 1..dim."""
        if i == j:
            return [Fraction(0)] * self.dim
        if i < j:
            c = self.brackets.get((i, j))
            sign = 1
        else:
            c = self.brackets.get((j, i))
            sign = -1
        if c is None:
            return [Fraction(0)] * self.dim
        return [sign * x for x in c]

    def bracket(self, x, y):
        """[x, y] for coordinate vectors x and y."""
        out = [Fraction(0)] * self.dim
        for (i, j), c in self.brackets.items():
            s = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1]
            if s:
                for k in range(self.dim):
                    out[k] += s * c[k]
        return out

    def structure_constant(self, i, j, k):
        """c^k_{ij} with [e_i, e_j] = sum_k c^k_{ij} e_k (any i, j)."""
        return self.basis_bracket(i, j)[k - 1]

    def basis_vector(self, i):
        v = [Fraction(0)] * self.dim
        v[i - 1] = Fraction(1)
        return v


def abelian(dim):
    return LieAlgebra(dim, {})


def change_basis(g, columns):
    """The same algebra expressed in the basis given by the matrix columns."""
    n = g.dim
    inv = linalg.inv(columns)
    new_basis = [[row[j] for row in columns] for j in range(n)]
    brackets = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            w = g.bracket(new_basis[i - 1], new_basis[j - 1])
            brackets[(i, j)] = linalg.mat_vec(inv, w)
    return LieAlgebra(n, brackets)


def center(g):
    """Basis of {x : [x, y] = 0 for all y}."""
    rows = []
    for j in range(1, g.dim + 1):
        ej = g.basis_vector(j)
        for k in range(g.dim):
            rows.append([g.bracket(g.basis_vector(i), ej)[k] for i in range(1, g.dim + 1)])
    return linalg.nullspace(rows)
