"""
Hom-Lie algebras, their morphisms and subalgebras, and representations.

A Hom-Lie algebra is stored as its full table of structure constants
``c[i][j]`` (so ``[e_i, e_j] = sum_k c[i][j][k] e_k``) together with the twist
matrix ``alpha``. Skew-symmetry is *checked* by the validator rather than
imposed, so a malformed table is reported instead of silently repaired.

All validators work on basis vectors only; by multilinearity that is enough.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .linalg import (
    Matrix, ShapeError, SingularMatrixError, Vector, is_invertible, is_zero_vector,
    rank, solve, unit_vector, vec_add, vec_scale, vector, zero_vector,
)

Structure = tuple  # tuple[tuple[Vector, ...], ...]


@dataclass(frozen=True)
class Violation:
    identity: str
    witness: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def __add__(self, other: "ValidationReport") -> "ValidationReport":
        return ValidationReport(self.violations + other.violations)


@dataclass(frozen=True)
class HomLieAlgebra:
    structure: Structure
    alpha: Matrix

    def __post_init__(self):
        n = len(self.structure)
        if self.alpha.shape != (n, n):
            raise ShapeError(f"alpha is {self.alpha.shape}, algebra has dimension {n}")
        for row in self.structure:
            if len(row) != n or any(len(v) != n for v in row):
                raise ShapeError("structure table must be n x n x n")

    @property
    def dim(self) -> int:
        return len(self.structure)

    @classmethod
    def from_brackets(cls, n: int, brackets: Mapping[tuple[int, int], Sequence],
                      alpha: Matrix | None = None) -> "HomLieAlgebra":
        """Build from ``{(i, j): coords}`` with i < j (0-based); the rest is filled by skewness."""
        table = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
        for (i, j), coords in brackets.items():
            if not i < j:
                raise ValueError(f"bracket key {(i, j)} must satisfy i < j")
            v = vector(coords)
            if len(v) != n:
                raise ShapeError(f"bracket [{i},{j}] has {len(v)} coordinates, expected {n}")
            table[i][j] = v
            table[j][i] = vec_scale(-1, v)
        if alpha is None:
            alpha = Matrix.identity(n)
        return cls(tuple(tuple(r) for r in table), alpha)

    @classmethod
    def abelian(cls, n: int, alpha: Matrix | None = None) -> "HomLieAlgebra":
        return cls.from_brackets(n, {}, alpha)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.structure[i][j]

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        return bracket_eval(self, x, y)

    def twist(self, x: Sequence) -> Vector:
        return self.alpha.apply(x)

    def brackets_upper(self) -> dict[tuple[int, int], Vector]:
        """Nonzero brackets ``[e_i, e_j]`` with i < j."""
        n = self.dim
        return {(i, j): self.structure[i][j]
                for i, j in combinations(range(n), 2)
                if not is_zero_vector(self.structure[i][j])}

    def is_regular(self) -> bool:
        return is_invertible(self.alpha)


def bracket_eval(A: HomLieAlgebra, x: Sequence, y: Sequence) -> Vector:
    n = A.dim
    if len(x) != n or len(y) != n:
        raise ShapeError(f"bracket arguments must have length {n}")
    out = zero_vector(n)
    for i, xi in enumerate(x):
        if not xi:
            continue
        for j, yj in enumerate(y):
            if yj:
                out = vec_add(out, vec_scale(xi * yj, A.structure[i][j]))
    return out


def validate_hom_lie(A: HomLieAlgebra) -> ValidationReport:
    """Check skewness, multiplicativity of alpha and the Hom-Jacobi identity."""
    n = A.dim
    out = []
    zero = zero_vector(n)
    for i in range(n):
        if not is_zero_vector(A.structure[i][i]):
            out.append(Violation("skew", (i, i), A.structure[i][i], zero))
        for j in range(i + 1, n):
            lhs = A.structure[i][j]
            rhs = vec_scale(-1, A.structure[j][i])
            if lhs != rhs:
                out.append(Violation("skew", (i, j), lhs, rhs))
    ae = [A.alpha.col(i) for i in range(n)]
    for i, j in combinations(range(n), 2):
        lhs = A.alpha.apply(A.structure[i][j])
        rhs = bracket_eval(A, ae[i], ae[j])
        if lhs != rhs:
            out.append(Violation("multiplicativity", (i, j), lhs, rhs))
    for i, j, k in combinations(range(n), 3):
        total = zero
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            total = vec_add(total, bracket_eval(A, ae[a], A.structure[b][c]))
        if not is_zero_vector(total):
            out.append(Violation("hom_jacobi", (i, j, k), total, zero))
    return ValidationReport(tuple(out))


@dataclass(frozen=True)
class Representation:
    """A representation ``rho`` of ``algebra`` on V with respect to ``beta``.

    ``rho[i]`` is the matrix of rho(e_i); rho extends linearly.
    """

    algebra: HomLieAlgebra
    rho: tuple[Matrix, ...]
    beta: Matrix
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "rho", tuple(self.rho))
        m = self.beta.rows
        if not self.beta.is_square:
            raise ShapeError("beta must be square")
        if len(self.rho) != self.algebra.dim:
            raise ShapeError(f"need {self.algebra.dim} rho matrices, got {len(self.rho)}")
        for r in self.rho:
            if r.shape != (m, m):
                raise ShapeError(f"rho matrix of shape {r.shape}, expected {(m, m)}")
        if not is_invertible(self.beta):
            raise SingularMatrixError("beta must be invertible")

    @property
    def vdim(self) -> int:
        return self.beta.rows

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @classmethod
    def trivial(cls, A: HomLieAlgebra, vdim: int = 1, beta: Matrix | None = None) -> "Representation":
        beta = Matrix.identity(vdim) if beta is None else beta
        return cls(A, tuple(Matrix.zeros(beta.rows, beta.rows) for _ in range(A.dim)), beta)

    @classmethod
    def adjoint(cls, A: HomLieAlgebra) -> "Representation":
        """rho(x) y = [x, y] with beta = alpha; needs alpha invertible."""
        n = A.dim
        rho = tuple(Matrix.from_columns([A.structure[i][j] for j in range(n)], rows=n)
                    for i in range(n))
        return cls(A, rho, A.alpha)

    def rho_of(self, x: Sequence) -> Matrix:
        m = self.vdim
        acc = Matrix.zeros(m, m)
        for xi, r in zip(x, self.rho):
            if xi:
                acc = acc + r.scale(xi)
        return acc

    def rho_alpha(self, i: int) -> Matrix:
        """rho(alpha(e_i)) = sum_j alpha[j][i] rho[j]."""
        key = ("rho_alpha", i)
        if key not in self._cache:
            self._cache[key] = self.rho_of(self.algebra.alpha.col(i))
        return self._cache[key]


def validate_representation(R: Representation) -> ValidationReport:
    """Check rho(alpha x) beta = beta rho(x) and
    rho([x, y]) beta = rho(alpha x) rho(y) - rho(alpha y) rho(x) on basis vectors."""
    A = R.algebra
    n = A.dim
    beta = R.beta
    out = []
    for i in range(n):
        lhs = R.rho_alpha(i) @ beta
        rhs = beta @ R.rho[i]
        if lhs != rhs:
            out.append(Violation("rho_alpha_beta", (i,), lhs, rhs))
    for i, j in combinations(range(n), 2):
        lhs = R.rho_of(A.structure[i][j]) @ beta
        rhs = R.rho_alpha(i) @ R.rho[j] - R.rho_alpha(j) @ R.rho[i]
        if lhs != rhs:
            out.append(Violation("rho_bracket", (i, j), lhs, rhs))
    return ValidationReport(tuple(out))


def is_morphism(psi: Matrix, A: HomLieAlgebra, B: HomLieAlgebra) -> ValidationReport:
    if psi.shape != (B.dim, A.dim):
        raise ShapeError(f"morphism must be {B.dim}x{A.dim}, got {psi.shape}")
    out = []
    images = [psi.col(i) for i in range(A.dim)]
    for i, j in combinations(range(A.dim), 2):
        lhs = psi.apply(A.structure[i][j])
        rhs = bracket_eval(B, images[i], images[j])
        if lhs != rhs:
            out.append(Violation("bracket", (i, j), lhs, rhs))
    lhs = psi @ A.alpha
    rhs = B.alpha @ psi
    if lhs != rhs:
        out.append(Violation("twist", (), lhs, rhs))
    return ValidationReport(tuple(out))


def is_subalgebra(A: HomLieAlgebra, span: Matrix) -> ValidationReport:
    """Is the column span of ``span`` closed under alpha and the bracket?"""
    if span.rows != A.dim:
        raise ShapeError(f"spanning vectors must have length {A.dim}")
    if rank(span) != span.cols:
        raise ValueError("spanning columns are linearly dependent")
    gens = span.columns()
    out = []

    def member(v):
        return solve(span, Matrix(len(v), 1, v)) is not None

    for a, u in enumerate(gens):
        au = A.alpha.apply(u)
        if not member(au):
            out.append(Violation("alpha_closed", (a,), au, None))
    for a, b in combinations(range(len(gens)), 2):
        w = bracket_eval(A, gens[a], gens[b])
        if not member(w):
            out.append(Violation("bracket_closed", (a, b), w, None))
    return ValidationReport(tuple(out))


def yau_twist(L: HomLieAlgebra, phi: Matrix) -> HomLieAlgebra:
    """Twist a Lie algebra by an automorphism: [x, y]' = phi[x, y], alpha = phi."""
    n = L.dim
    if L.alpha != Matrix.identity(n):
        raise ValueError("yau_twist expects an ordinary Lie algebra (alpha = id)")
    if not is_invertible(phi) or not is_morphism(phi, L, L).valid:
        raise ValueError("phi is not an automorphism of the Lie algebra")
    table = tuple(tuple(phi.apply(L.structure[i][j]) for j in range(n)) for i in range(n))
    return HomLieAlgebra(table, phi)


def basis_vectors(n: int) -> list[Vector]:
    return [unit_vector(n, i) for i in range(n)]


def hom_jacobi_defect(A: HomLieAlgebra, x: Sequence, y: Sequence, z: Sequence) -> Vector:
    """[alpha x, [y, z]] + [alpha y, [z, x]] + [alpha z, [x, y]] for arbitrary vectors."""
    ax, ay, az = A.twist(x), A.twist(y), A.twist(z)
    return vec_add(vec_add(bracket_eval(A, ax, bracket_eval(A, y, z)),
                           bracket_eval(A, ay, bracket_eval(A, z, x))),
                   bracket_eval(A, az, bracket_eval(A, x, y)))


__all__ = [
    "HomLieAlgebra", "Representation", "ValidationReport", "Violation",
    "bracket_eval", "validate_hom_lie", "validate_representation", "is_morphism",
    "is_subalgebra", "yau_twist", "hom_jacobi_defect", "basis_vectors",
]
