"""
Recovering a representation and a bracket from a family of coboundary operators.

Given alpha, beta and the matrices of d^s on C^0 and C^1 (plus the trivial
differential on g*), rho and the structure constants are read off, then
checked against every identity a representation of a Hom-Lie algebra must
satisfy. A family built from a genuine representation must come back
unchanged; a corrupted family must be caught by a named diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from .algebra import HomLieAlgebra, Representation
from .cochains import assemble_matrix, assemble_trivial_matrix, tuple_position
from .cohomology import TheoremCheckResult
from .linalg import (
    Matrix, ShapeError, SingularMatrixError, Vector, is_invertible, is_zero_vector,
    mat_power, unit_vector, vec_add, vec_scale, vec_sub, zero_vector,
)

DIAGNOSTICS = ("t1eq1", "t1eq2", "t1eq4", "t1eq5", "t1eq6", "d_squared_0")


@dataclass(frozen=True)
class OperatorFamily:
    n: int
    m: int
    alpha: Matrix
    beta: Matrix
    s: int
    D0: Matrix
    D1: Matrix
    Dtriv1: Matrix

    def __post_init__(self):
        n, m = self.n, self.m
        expected = {
            "alpha": (n, n),
            "beta": (m, m),
            "D0": (n * m, m),
            "D1": (comb(n, 2) * m, n * m),
            "Dtriv1": (comb(n, 2), n),
        }
        for name, shape in expected.items():
            got = getattr(self, name).shape
            if got != shape:
                raise ShapeError(f"{name} has shape {got}, expected {shape}")
        if self.s < 0:
            raise ValueError("the shift s must be non-negative")

    @classmethod
    def from_representation(cls, R: Representation, s: int) -> "OperatorFamily":
        A = R.algebra
        return cls(A.dim, R.vdim, A.alpha, R.beta, s,
                   assemble_matrix(R, s, 0), assemble_matrix(R, s, 1),
                   assemble_trivial_matrix(A, 1))

    def perturbed(self, which: str, i: int, j: int, delta=1) -> "OperatorFamily":
        """Copy with one entry of ``D0``, ``D1`` or ``Dtriv1`` shifted by ``delta``."""
        M = getattr(self, which)
        changes = {which: M.with_entry(i, j, M[i, j] + delta)}
        return OperatorFamily(**{**self.__dict__, **changes})


@dataclass
class ReconstructionResult:
    rho: tuple[Matrix, ...]
    structure: tuple
    diagnostics: list[TheoremCheckResult] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return all(d.holds for d in self.diagnostics)

    def failing(self) -> list[str]:
        return [d.name for d in self.diagnostics if not d.holds]

    def algebra(self, alpha: Matrix) -> HomLieAlgebra:
        return HomLieAlgebra(self.structure, alpha)


def extract_rho(F: OperatorFamily) -> tuple[Matrix, ...]:
    """rho(e_i) = beta^(-1-s) (block i of D0) beta^(2+s)."""
    if not is_invertible(F.beta):
        raise SingularMatrixError("beta must be invertible")
    m = F.m
    left = mat_power(F.beta, -1 - F.s)
    right = mat_power(F.beta, 2 + F.s)
    out = []
    for i in range(F.n):
        block = F.D0.submatrix(range(i * m, (i + 1) * m), range(m))
        out.append(left @ block @ right)
    return tuple(out)


def extract_bracket(F: OperatorFamily) -> tuple:
    """Coordinate k of [e_i, e_j] is minus the (i, j), k entry of the trivial differential."""
    n = F.n
    pos = tuple_position(n, 2)
    table = [[zero_vector(n) for _ in range(n)] for _ in range(n)]
    for i, j in combinations(range(n), 2):
        v = tuple(-x for x in F.Dtriv1.row(pos[(i, j)]))
        table[i][j] = v
        table[j][i] = vec_scale(-1, v)
    return tuple(tuple(r) for r in table)


def _bracket(structure, x: Vector, y: Vector) -> Vector:
    n = len(structure)
    out = zero_vector(n)
    for i in range(n):
        if x[i]:
            for j in range(n):
                if y[j]:
                    out = vec_add(out, vec_scale(x[i] * y[j], structure[i][j]))
    return out


def _rho_of(rho, x: Vector, m: int) -> Matrix:
    acc = Matrix.zeros(m, m)
    for xi, r in zip(x, rho):
        if xi:
            acc = acc + r.scale(xi)
    return acc


def cross_check_bracket(F: OperatorFamily, rho, structure) -> TheoremCheckResult:
    """<eta, [x, y]> = b^(2+s) rho(x) b^(-3-s) eta(alpha y) - (x <-> y) - d^s eta(x, y),
    for every basis pair and every basis 1-cochain eta = e^a (x) v_b."""
    n, m, s = F.n, F.m, F.s
    out = TheoremCheckResult("t1eq2")
    up, down = mat_power(F.beta, 2 + s), mat_power(F.beta, -3 - s)
    act = [up @ r @ down for r in rho]
    pos = tuple_position(n, 2)
    for i, j in combinations(range(n), 2):
        row0 = pos[(i, j)] * m
        for a in range(n):
            for b in range(m):
                vb = unit_vector(m, b)
                lhs = vec_scale(structure[i][j][a], vb)
                col = F.D1.col(a * m + b)
                d_eta = col[row0:row0 + m]
                rhs = vec_sub(vec_sub(act[i].apply(vec_scale(F.alpha[a, j], vb)),
                                      act[j].apply(vec_scale(F.alpha[a, i], vb))),
                              d_eta)
                if lhs != rhs:
                    out.fail((("pair", (i, j)), ("eta", (a, b))), lhs, rhs)
    return out


def verify_reconstructed_axioms(F: OperatorFamily, result: ReconstructionResult) -> ReconstructionResult:
    """Check the recovered data against the representation and Hom-Lie identities."""
    n, m = F.n, F.m
    rho, c, alpha, beta = result.rho, result.structure, F.alpha, F.beta
    ae = [alpha.col(i) for i in range(n)]
    rho_a = [_rho_of(rho, ae[i], m) for i in range(n)]

    eq1 = TheoremCheckResult("t1eq1")
    for i in range(n):
        lhs, rhs = rho_a[i] @ beta, beta @ rho[i]
        if lhs != rhs:
            eq1.fail((("i", i),), lhs, rhs)

    eq4 = TheoremCheckResult("t1eq4")
    eq5 = TheoremCheckResult("t1eq5")
    for i, j in combinations(range(n), 2):
        lhs, rhs = alpha.apply(c[i][j]), _bracket(c, ae[i], ae[j])
        if lhs != rhs:
            eq4.fail((("pair", (i, j)),), lhs, rhs)
        lhs = rho_a[i] @ rho[j] - rho_a[j] @ rho[i]
        rhs = _rho_of(rho, c[i][j], m) @ beta
        if lhs != rhs:
            eq5.fail((("pair", (i, j)),), lhs, rhs)

    eq6 = TheoremCheckResult("t1eq6")
    for i, j, k in combinations(range(n), 3):
        total = zero_vector(n)
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            total = vec_add(total, _bracket(c, c[x][y], ae[z]))
        if not is_zero_vector(total):
            eq6.fail((("triple", (i, j, k)),), total, zero_vector(n))

    dsq = TheoremCheckResult("d_squared_0")
    prod = F.D1 @ F.D0
    if not prod.is_zero():
        pos = prod.first_nonzero()
        dsq.fail((("entry", pos),), prod[pos], 0)

    result.diagnostics = [eq1, cross_check_bracket(F, rho, c), eq4, eq5, eq6, dsq]
    return result


def reconstruct(F: OperatorFamily) -> ReconstructionResult:
    result = ReconstructionResult(extract_rho(F), extract_bracket(F))
    return verify_reconstructed_axioms(F, result)


def roundtrip(R: Representation, s: int) -> TheoremCheckResult:
    """Assemble the operator family of ``R`` at shift ``s`` and recover ``R`` from it."""
    F = OperatorFamily.from_representation(R, s)
    result = reconstruct(F)
    out = TheoremCheckResult("roundtrip")
    for d in result.diagnostics:
        for w in d.witnesses:
            out.fail((("diagnostic", d.name),) + tuple(w.inputs), w.lhs, w.rhs)
    for i, (got, want) in enumerate(zip(result.rho, R.rho)):
        if got != want:
            out.fail((("rho", i),), got, want)
    want = R.algebra.structure
    for i in range(F.n):
        for j in range(F.n):
            if result.structure[i][j] != want[i][j]:
                out.fail((("bracket", (i, j)),), result.structure[i][j], want[i][j])
    return out
