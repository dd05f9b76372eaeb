"""Exterior algebra on the dual of a Lie algebra.

K-forms carry exact rational coefficients indexed by strictly increasing
tuples of basis indices.  The Chevalley-Eilenberg differential follows
the convention that d(alpha)(X, Y) = -alpha([X, Y]) on 1-forms, extended
to higher degree as an antiderivation, so the structure-equation tuples
are literally the expansions of the d(e^k).
"""

from fractions import Fraction
from itertools import combinations

from . import linalg
from .algebra import LieAlgebra, MAX_DIM

# An endomorphism of the underlying vector space: an n x n matrix of
# Fractions, rows/columns in the fixed basis.
Endomorphism = list


def _perm_sign(seq):
    """Sign of the permutation sorting seq, 0 if entries repeat."""
    s = list(seq)
    sign = 1
    for i in range(len(s)):
        for j in range(i + 1, len(s)):
            if s[i] == s[j]:
                return 0
            if s[i] > s[j]:
                sign = -sign
    return sign


class KForm:
    """Alternating k-form with exact rational coefficients.

    coeffs maps strictly increasing index tuples (1-based) to nonzero
    Fractions; missing keys are zero.  Degree-0 forms are scalars keyed
    by ().  Degrees above the ambient dimension admit no valid keys, so
    only the zero form exists there; wedge products that overflow the
    dimension return it.
    """

    __slots__ = ("dim", "degree", "coeffs")

    def __init__(self, dim, degree, coeffs=None):
        if not (1 <= dim <= MAX_DIM):
            raise ValueError(f"ambient dimension must be in 1..{MAX_DIM}")
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        clean = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"key {key} has length {len(key)}, degree is {degree}")
            if any(not (1 <= i <= dim) for i in key):
                raise ValueError(f"key {key} out of range for dim {dim}")
            if any(key[a] >= key[a + 1] for a in range(len(key) - 1)):
                raise ValueError(f"key {key} is not strictly increasing")
            value = Fraction(value)
            if value:
                clean[key] = value
        if degree > dim and clean:
            raise ValueError(f"nonzero form of degree {degree} impossible in dim {dim}")
        self.dim = dim
        self.degree = degree
        self.coeffs = clean

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, key):
        return self.coeffs.get(tuple(key), Fraction(0))

    def _check_compatible(self, other):
        if self.dim != other.dim:
            raise ValueError("ambient dimension mismatch")
        if self.degree != other.degree:
            raise ValueError("degree mismatch")

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.dim, self.degree, self.coeffs) == (other.dim, other.degree, other.coeffs)

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check_compatible(other)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs.get(key, Fraction(0)) + value
        return KForm(self.dim, self.degree, coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return KForm(self.dim, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return KForm(self.dim, self.degree, {k: scalar * v for k, v in self.coeffs.items()})

    __mul__ = __rmul__

    def evaluate(self, *vectors):
        """Value on degree-many coordinate vectors (a k-multilinear form)."""
        if len(vectors) != self.degree:
            raise ValueError(f"expected {self.degree} vectors, got {len(vectors)}")
        total = Fraction(0)
        for key, value in self.coeffs.items():
            minor = [[v[i - 1] for v in vectors] for i in key]
            total += value * linalg.det(minor)
        return total

    def __repr__(self):
        if not self.coeffs:
            return f"KForm({self.dim}, {self.degree}, 0)"
        parts = [f"{v}*e^{''.join(map(str, k))}" for k, v in sorted(self.coeffs.items())]
        return f"KForm({self.dim}, {self.degree}, {' + '.join(parts)})"


def zero_form(dim, degree):
    return KForm(dim, degree, {})


def basis_form(dim, indices, coeff=1):
    """coeff * e^{i1...ik} for strictly increasing indices."""
    return KForm(dim, len(indices), {tuple(indices): Fraction(coeff)})


def one_form(dim, coefficients):
    """1-form from its n coefficients on e^1..e^n."""
    if len(coefficients) != dim:
        raise ValueError("coefficient count does not match dimension")
    return KForm(dim, 1, {(i + 1,): Fraction(c) for i, c in enumerate(coefficients)})


def form_basis(dim, degree):
    """Strictly increasing index tuples in colexicographic order.

    Colex rank of a tuple is independent of the ambient dimension, which
    keeps the degree-wise matrix layouts stable when comparing algebras
    of different sizes.
    """
    return sorted(combinations(range(1, dim + 1), degree), key=lambda t: t[::-1])


def form_to_vector(a, basis=None):
    """Coefficient vector of a over form_basis(a.dim, a.degree)."""
    basis = basis if basis is not None else form_basis(a.dim, a.degree)
    return [a.coeffs.get(key, Fraction(0)) for key in basis]


def vector_to_form(dim, degree, vec, basis=None):
    basis = basis if basis is not None else form_basis(dim, degree)
    return KForm(dim, degree, dict(zip(basis, vec)))


def wedge(a, b):
    """Exterior product; bilinear, associative, graded-commutative."""
    if a.dim != b.dim:
        raise ValueError("ambient dimension mismatch")
    degree = a.degree + b.degree
    coeffs = {}
    for ka, va in a.coeffs.items():
        for kb, vb in b.coeffs.items():
            merged = ka + kb
            sign = _perm_sign(merged)
            if sign == 0:
                continue
            key = tuple(sorted(merged))
            coeffs[key] = coeffs.get(key, Fraction(0)) + sign * va * vb
    if degree > a.dim:
        return zero_form(a.dim, degree)
    return KForm(a.dim, degree, coeffs)


def _d_basis_one_form(g, k):
    """d(e^k) = - sum_{i<j} c^k_{ij} e^i ^ e^j, from the brackets."""
    coeffs = {}
    for (i, j), c in g.brackets.items():
        if c[k - 1]:
            coeffs[(i, j)] = -c[k - 1]
    return KForm(g.dim, 2, coeffs)


def ce_differential(g, a):
    """Chevalley-Eilenberg differential of a k-form on g.

    Acts on wedge monomials by the antiderivation rule
    d(e^{i1} ^ ... ^ e^{ik}) = sum_a (-1)^(a-1)
        e^{i1} ^ ... ^ d(e^{ia}) ^ ... ^ e^{ik}.
    """
    if a.dim != g.dim:
        raise ValueError("form does not live on this algebra")
    result = zero_form(g.dim, a.degree + 1)
    for key, value in a.coeffs.items():
        for pos, idx in enumerate(key):
            dpart = _d_basis_one_form(g, idx)
            if dpart.is_zero():
                continue
            prefix = basis_form(g.dim, key[:pos]) if pos else KForm(g.dim, 0, {(): 1})
            suffix_key = key[pos + 1 :]
            term = wedge(prefix, dpart)
            if suffix_key:
                term = wedge(term, basis_form(g.dim, suffix_key))
            sign = Fraction(-1) ** pos
            result = result + (sign * value) * term
    return result


def differential_matrix(g, degree, theta=None):
    """Matrix of d (or d_theta) from degree-forms to (degree+1)-forms.

    Columns are indexed by form_basis(dim, degree), rows by
    form_basis(dim, degree + 1); entry layout is colexicographic.
    theta, when given, twists the differential to d - theta ^ (.).
    """
    dom = form_basis(g.dim, degree)
    cod = form_basis(g.dim, degree + 1)
    cod_index = {key: r for r, key in enumerate(cod)}
    cols = []
    for key in dom:
        a = basis_form(g.dim, key)
        da = ce_differential(g, a)
        if theta is not None:
            da = da - wedge(theta, a)
        col = [Fraction(0)] * len(cod)
        for k, v in da.coeffs.items():
            col[cod_index[k]] = v
        cols.append(col)
    if not cod:
        return [[Fraction(0)] * len(dom)] if dom else [[]]
    return linalg.transpose(cols) if cols else [[] for _ in cod]


def pullback(a, columns):
    """The form a composed with the basis change given by the matrix columns."""
    n = a.dim
    new_basis = [[row[j] for row in columns] for j in range(n)]
    coeffs = {}
    for key in combinations(range(1, n + 1), a.degree):
        value = a.evaluate(*(new_basis[i - 1] for i in key))
        if value:
            coeffs[key] = value
    return KForm(n, a.degree, coeffs)


def check_jacobi(g):
    """(True, None) or (False, (i, j, k)) with a violating basis triple.

    Tests the cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
    for all i < j < k; equivalent to d(d(e^m)) = 0 for every m.
    """
    for i, j, k in combinations(range(1, g.dim + 1), 3):
        ei, ej, ek = (g.basis_vector(x) for x in (i, j, k))
        total = g.bracket(g.bracket(ei, ej), ek)
        for idx, t in enumerate(g.bracket(g.bracket(ej, ek), ei)):
            total[idx] += t
        for idx, t in enumerate(g.bracket(g.bracket(ek, ei), ej)):
            total[idx] += t
        if any(total):
            return False, (i, j, k)
    return True, None


def adjoint(g, x):
    """Matrix of y -> [x, y] in the fixed basis."""
    cols = [g.bracket(x, g.basis_vector(j)) for j in range(1, g.dim + 1)]
    return linalg.transpose(cols)


def is_unimodular(g):
    """True iff trace(ad_{e_i}) = 0 for every basis vector."""
    return all(
        linalg.trace(adjoint(g, g.basis_vector(i))) == 0 for i in range(1, g.dim + 1)
    )
