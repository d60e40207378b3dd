"""
Cocycles, coboundaries and cohomology of the complexes (C^*(g; V), d^s), and
executable checks of the identities relating them.

Every check returns a :class:`TheoremCheckResult` carrying witnesses instead
of raising, so the same code serves as a debugging aid for user input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .algebra import HomLieAlgebra, Representation
from .cochains import (
    Cochain, alpha_bar, alpha_bar_matrix, assemble_matrix, beta_bar_matrix, coboundary,
    diamond, random_cochain, trivial_coboundary, wedge,
)
from .linalg import Matrix, image_basis, kernel_basis, rank, solve


@dataclass(frozen=True)
class DegreeDims:
    k: int
    dimC: int
    dimZ: int
    dimB: int
    rank_d: int

    @property
    def dimH(self) -> int:
        return self.dimZ - self.dimB


@dataclass(frozen=True)
class CohomologyReport:
    s: int
    degrees: tuple[DegreeDims, ...]

    @property
    def dimH(self) -> tuple[int, ...]:
        return tuple(d.dimH for d in self.degrees)

    def __getitem__(self, k: int) -> DegreeDims:
        return self.degrees[k]


@dataclass(frozen=True)
class Witness:
    inputs: object
    lhs: object
    rhs: object


@dataclass
class TheoremCheckResult:
    name: str
    witnesses: list[Witness] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.holds

    def fail(self, inputs, lhs, rhs):
        self.witnesses.append(Witness(inputs, lhs, rhs))


def _kmax(R: Representation, kmax: int | None) -> int:
    n = R.dim
    if kmax is None:
        return n
    if not 0 <= kmax <= n:
        raise ValueError(f"kmax must lie in 0..{n}")
    return kmax


def cohomology_dims(R: Representation, s: int, kmax: int | None = None) -> CohomologyReport:
    n, m = R.dim, R.vdim
    kmax = _kmax(R, kmax)
    ranks = [rank(assemble_matrix(R, s, k)) for k in range(kmax + 1)]
    degrees = []
    for k in range(kmax + 1):
        dimC = comb(n, k) * m
        dimZ = dimC - ranks[k]
        dimB = ranks[k - 1] if k > 0 else 0
        degrees.append(DegreeDims(k, dimC, dimZ, dimB, ranks[k]))
    return CohomologyReport(s, tuple(degrees))


def _compare(result: TheoremCheckResult, inputs, lhs: Matrix, rhs: Matrix):
    if lhs != rhs:
        pos = (lhs - rhs).first_nonzero()
        result.fail(inputs + (("entry", pos),), lhs[pos], rhs[pos])


def check_d_squared(R: Representation, s: int, kmax: int | None = None) -> TheoremCheckResult:
    """d^s o d^s = 0 on C^k for every k < kmax."""
    kmax = _kmax(R, kmax)
    out = TheoremCheckResult("d_squared")
    for k in range(kmax):
        prod = assemble_matrix(R, s, k + 1) @ assemble_matrix(R, s, k)
        if not prod.is_zero():
            pos = prod.first_nonzero()
            out.fail((("s", s), ("k", k), ("entry", pos)), prod[pos], 0)
    return out


def check_beta_chain_map(R: Representation, s: int, kmax: int | None = None) -> TheoremCheckResult:
    """beta-bar o d^s = d^{s+1} o beta-bar."""
    kmax = _kmax(R, kmax)
    out = TheoremCheckResult("beta_chain_map")
    for k in range(kmax + 1):
        lhs = beta_bar_matrix(R, k + 1) @ assemble_matrix(R, s, k)
        rhs = assemble_matrix(R, s + 1, k) @ beta_bar_matrix(R, k)
        _compare(out, (("s", s), ("k", k)), lhs, rhs)
    return out


def check_alpha_chain_map(R: Representation, s: int, kmax: int | None = None) -> TheoremCheckResult:
    """alpha-bar o d^s = d^{s+1} o alpha-bar."""
    kmax = _kmax(R, kmax)
    A, m = R.algebra, R.vdim
    out = TheoremCheckResult("alpha_chain_map")
    for k in range(kmax + 1):
        lhs = alpha_bar_matrix(A, k + 1, m) @ assemble_matrix(R, s, k)
        rhs = assemble_matrix(R, s + 1, k) @ alpha_bar_matrix(A, k, m)
        _compare(out, (("s", s), ("k", k)), lhs, rhs)
    return out


def _compare_cochains(result: TheoremCheckResult, inputs, lhs: Cochain, rhs: Cochain):
    if lhs != rhs:
        diff = lhs - rhs
        I = min(diff.coeffs)
        result.fail(inputs + (("at", I),), lhs[I], rhs[I])


def check_leibniz_trivial(A: HomLieAlgebra, xi1: Cochain, xi2: Cochain) -> TheoremCheckResult:
    """d(xi1 ^ xi2) = d xi1 ^ alpha-bar(xi2) + (-1)^k alpha-bar(xi1) ^ d xi2."""
    out = TheoremCheckResult("leibniz_trivial")
    k = xi1.degree
    lhs = trivial_coboundary(A, wedge(xi1, xi2))
    rhs = wedge(trivial_coboundary(A, xi1), alpha_bar(A, xi2)) \
        + wedge(alpha_bar(A, xi1), trivial_coboundary(A, xi2)).scale((-1) ** k)
    _compare_cochains(out, (("k", k), ("l", xi2.degree)), lhs, rhs)
    return out


def check_leibniz_diamond(R: Representation, s: int, xi: Cochain, eta: Cochain) -> TheoremCheckResult:
    """d^s(xi <> eta) = d xi <> alpha-bar(eta) + (-1)^k alpha-bar(xi) <> d^{s+k} eta."""
    A = R.algebra
    out = TheoremCheckResult("leibniz_diamond")
    k = xi.degree
    lhs = coboundary(R, s, diamond(xi, eta))
    rhs = diamond(trivial_coboundary(A, xi), alpha_bar(A, eta)) \
        + diamond(alpha_bar(A, xi), coboundary(R, s + k, eta)).scale((-1) ** k)
    _compare_cochains(out, (("s", s), ("k", k), ("l", eta.degree)), lhs, rhs)
    return out


def verify_iso(R: Representation, s: int, kmax: int | None = None) -> TheoremCheckResult:
    """H^k(d^s) and H^k(d^{s+1}) agree, witnessed by beta-bar and its inverse.

    Checks equal dimensions, beta-bar(Z^k(d^s)) in Z^k(d^{s+1}),
    beta-bar(B^k(d^s)) in B^k(d^{s+1}), and the two reverse inclusions
    under the inverse of beta-bar.
    """
    kmax = _kmax(R, kmax)
    out = TheoremCheckResult("cohomology_iso")
    here, there = cohomology_dims(R, s, kmax), cohomology_dims(R, s + 1, kmax)
    for k in range(kmax + 1):
        if here[k].dimH != there[k].dimH:
            out.fail((("s", s), ("k", k), ("dimH",)), here[k].dimH, there[k].dimH)
    for src, dst, inverse, tag in ((s, s + 1, False, "beta"), (s + 1, s, True, "beta_inv")):
        for k in range(kmax + 1):
            B_k = beta_bar_matrix(R, k, inverse)
            D_dst = assemble_matrix(R, dst, k)
            cycles = B_k @ kernel_basis(assemble_matrix(R, src, k))
            image = D_dst @ cycles
            if not image.is_zero():
                out.fail((("from_s", src), ("k", k), (tag, "Z")), image.first_nonzero(), 0)
            if k == 0:
                continue
            bounds = image_basis(assemble_matrix(R, src, k - 1))
            if bounds.cols and solve(assemble_matrix(R, dst, k - 1), B_k @ bounds) is None:
                out.fail((("from_s", src), ("k", k), (tag, "B")), "not a coboundary", None)
    return out


def leibniz_trials(R: Representation, s: int, trials: int, rng) -> tuple[TheoremCheckResult, TheoremCheckResult]:
    """Run both Leibniz checks on ``trials`` random cochain pairs of compatible degrees."""
    A, n, m = R.algebra, R.dim, R.vdim
    triv = TheoremCheckResult("leibniz_trivial")
    dia = TheoremCheckResult("leibniz_diamond")
    for t in range(trials):
        k = rng.randint(0, n)
        l = rng.randint(0, n - k)
        xi1, xi2 = random_cochain(rng, n, k), random_cochain(rng, n, l)
        eta = random_cochain(rng, n, l, m)
        for w in check_leibniz_trivial(A, xi1, xi2).witnesses:
            triv.fail((("trial", t),) + w.inputs, w.lhs, w.rhs)
        for w in check_leibniz_diamond(R, s, xi1, eta).witnesses:
            dia.fail((("trial", t),) + w.inputs, w.lhs, w.rhs)
    return triv, dia
