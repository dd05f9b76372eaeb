"""Verification and classification of LCS structures.

An LCS structure is a nondegenerate 2-form omega with a closed 1-form
theta satisfying d(omega) = theta ^ omega.  theta restricted to the
subalgebra of infinitesimal automorphisms of omega is a morphism to the
reals, so it is either surjective (first kind) or identically zero
(second kind); omega is symplectic exactly when theta = 0.

Everything here is exact; there are no tolerances.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations

from . import linalg
from .exterior import (
    KForm,
    ce_differential,
    differential_matrix,
    form_basis,
    form_to_vector,
    is_unimodular,
    vector_to_form,
    wedge,
    zero_form,
)


class Kind(Enum):
    SYMPLECTIC = "symplectic"
    FIRST_KIND = "first"
    SECOND_KIND = "second"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class CheckResult:
    """Outcome of check_lcs: ok, or the first failing invariant."""

    ok: bool
    failure: str = None
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class KindVerdict:
    kind: Kind
    automorphism_basis: list
    lee_values: list


@dataclass(frozen=True)
class LCSStructure:
    """A verified pair (omega, theta) on a Lie algebra."""

    algebra: object
    omega: KForm
    theta: KForm

    def __post_init__(self):
        result = check_lcs(self.algebra, self.omega, self.theta)
        if not result:
            raise ValueError(f"not an LCS structure: {result.failure}")


def gram_matrix(omega):
    """Skew n x n matrix of omega(e_i, e_j)."""
    n = omega.dim
    gram = linalg.zeros(n, n)
    for (i, j), c in omega.coeffs.items():
        gram[i - 1][j - 1] = c
        gram[j - 1][i - 1] = -c
    return gram


def _validate_shapes(g, omega, theta):
    if g.dim % 2 != 0:
        raise ValueError("LCS structures need even dimension")
    if omega.dim != g.dim or theta.dim != g.dim:
        raise ValueError("form dimension does not match the algebra")
    if omega.degree != 2:
        raise ValueError(f"omega must be a 2-form, got degree {omega.degree}")
    if theta.degree != 1:
        raise ValueError(f"theta must be a 1-form, got degree {theta.degree}")


def check_lcs(g, omega, theta):
    """Verify dθ = 0, nondegeneracy of omega, and dω = θ ^ ω, in that order."""
    _validate_shapes(g, omega, theta)
    dtheta = ce_differential(g, theta)
    if not dtheta.is_zero():
        return CheckResult(False, "theta is not closed", dtheta)
    gram = gram_matrix(omega)
    if linalg.det(gram) == 0:
        kernel = linalg.nullspace(gram)
        return CheckResult(False, "omega is degenerate", kernel[0])
    residual = ce_differential(g, omega) - wedge(theta, omega)
    if not residual.is_zero():
        return CheckResult(False, "d(omega) != theta ^ omega", residual)
    return CheckResult(True)


def automorphism_algebra(g, omega):
    """Exact basis of g_omega = {X : omega([X,Y],Z) + omega(Y,[X,Z]) = 0}.

    Assembles the C(n,2) x n linear system over the coordinates of X and
    returns a nullspace basis.  The result is checked to be closed under
    the bracket, as it must be for a subalgebra.
    """
    if omega.dim != g.dim or omega.degree != 2:
        raise ValueError("omega must be a 2-form on the algebra")
    n = g.dim
    basis = [g.basis_vector(i) for i in range(1, n + 1)]
    rows = []
    for j, k in combinations(range(1, n + 1), 2):
        ej, ek = basis[j - 1], basis[k - 1]
        row = []
        for i in range(1, n + 1):
            ei = basis[i - 1]
            row.append(
                omega.evaluate(g.bracket(ei, ej), ek)
                + omega.evaluate(ej, g.bracket(ei, ek))
            )
        rows.append(row)
    solutions = linalg.nullspace(rows) if rows else basis
    for x in solutions:
        for y in solutions:
            if not linalg.in_span(solutions, g.bracket(x, y)):
                raise RuntimeError("automorphism space is not bracket-closed")
    return solutions


def classify_kind(g, omega, theta):
    """Symplectic, first kind, or second kind; requires check_lcs to pass.

    Over the reals the Lee morphism is surjective exactly when it is
    nonzero somewhere on g_omega, so the first/second distinction reduces
    to evaluating theta on an automorphism-algebra basis.
    """
    result = check_lcs(g, omega, theta)
    if not result:
        raise ValueError(f"not an LCS structure: {result.failure}")
    auto = automorphism_algebra(g, omega)
    lee_values = [theta.evaluate(x) for x in auto]
    if theta.is_zero():
        kind = Kind.SYMPLECTIC
    elif any(lee_values):
        kind = Kind.FIRST_KIND
    else:
        kind = Kind.SECOND_KIND
    return KindVerdict(kind, auto, lee_values)


def is_exact(g, omega, theta):
    """A 1-form eta with d(eta) - theta ^ eta = omega, or None.

    On unimodular algebras exactness must coincide with the first-kind
    classification, and that consistency is asserted here.
    """
    result = check_lcs(g, omega, theta)
    if not result:
        raise ValueError(f"not an LCS structure: {result.failure}")
    matrix = differential_matrix(g, 1, theta)
    rhs = form_to_vector(omega)
    solution = linalg.solve(matrix, rhs)
    eta = vector_to_form(g.dim, 1, solution) if solution is not None else None
    if is_unimodular(g):
        first = classify_kind(g, omega, theta).kind is Kind.FIRST_KIND
        if first != (eta is not None):
            raise RuntimeError(
                "exactness disagrees with first-kind classification on a "
                "unimodular algebra"
            )
    return eta


def recover_lee_form(g, omega):
    """Solve d(omega) = theta ^ omega for theta.

    Returns the unique solution when the system is solvable and the
    solution is closed; None when no closed solution exists.  A solution
    space of positive dimension raises, since it signals a degenerate
    omega (the nondegeneracy precondition) or an assembly bug.
    """
    if omega.dim != g.dim or omega.degree != 2:
        raise ValueError("omega must be a 2-form on the algebra")
    if linalg.det(gram_matrix(omega)) == 0:
        raise ValueError("omega is degenerate; the Lee form is not determined")
    n = g.dim
    three_basis = form_basis(n, 3)
    cols = []
    for i in range(1, n + 1):
        ei = KForm(n, 1, {(i,): Fraction(1)})
        cols.append(form_to_vector(wedge(ei, omega), three_basis))
    matrix = linalg.transpose(cols) if three_basis else []
    if not matrix or linalg.nullspace(matrix):
        raise ValueError("theta is not unique; omega does not determine a Lee form")
    rhs = form_to_vector(ce_differential(g, omega), three_basis)
    solution = linalg.solve(matrix, rhs)
    if solution is None:
        return None
    theta = vector_to_form(n, 1, solution)
    if not ce_differential(g, theta).is_zero():
        return None
    return theta
