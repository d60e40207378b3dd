"""
Cochains C^k(g; V), the maps they inherit from alpha and beta, the wedge and
diamond products, and the shifted coboundary operators d^s.

A k-cochain is a skew k-linear map g x ... x g -> V. It is determined by its
values on increasing basis tuples I = (i_1 < ... < i_k); only nonzero values
are stored, which makes equality of cochains plain dict equality. Scalar
cochains (elements of the exterior algebra of g*) are cochains with vdim 1.

Coordinates of C^k(g; V) are ordered with the index tuple I lexicographic
and major, the V-coordinate minor. Every assembled matrix uses that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Mapping, Sequence

from .algebra import HomLieAlgebra, Representation
from .linalg import (
    Matrix, ShapeError, Vector, det, is_zero_vector, mat_power, vec_add, vec_scale,
    vector, zero_vector,
)


@lru_cache(maxsize=None)
def index_tuples(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All increasing k-tuples from range(n), in lexicographic order."""
    return tuple(combinations(range(n), k))


@lru_cache(maxsize=None)
def tuple_position(n: int, k: int) -> dict[tuple[int, ...], int]:
    return {I: p for p, I in enumerate(index_tuples(n, k))}


def cochain_dim(n: int, k: int, m: int) -> int:
    return comb(n, k) * m


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation that sorts ``seq`` (0 if an entry repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class Cochain:
    dim: int
    degree: int
    vdim: int
    coeffs: Mapping[tuple[int, ...], Vector]

    def __post_init__(self):
        clean = {}
        for I, v in self.coeffs.items():
            I = tuple(I)
            if len(I) != self.degree or any(a >= b for a, b in zip(I, I[1:])) \
                    or (I and not 0 <= I[0] <= I[-1] < self.dim):
                raise ValueError(f"bad index tuple {I} for a degree-{self.degree} cochain "
                                 f"on a {self.dim}-dimensional algebra")
            v = vector(v)
            if len(v) != self.vdim:
                raise ShapeError(f"value {v} should have length {self.vdim}")
            if not is_zero_vector(v):
                clean[I] = v
        object.__setattr__(self, "coeffs", clean)

    # -- construction ------------------------------------------------
    @classmethod
    def zero(cls, n: int, k: int, m: int = 1) -> "Cochain":
        return cls(n, k, m, {})

    @classmethod
    def basis(cls, n: int, I: Sequence[int], m: int = 1, j: int = 0) -> "Cochain":
        """e^I tensor v_j."""
        v = [0] * m
        v[j] = 1
        return cls(n, len(I), m, {tuple(I): v})

    @classmethod
    def constant(cls, n: int, value: Sequence) -> "Cochain":
        """A degree-0 cochain, i.e. a vector of V."""
        value = vector(value)
        return cls(n, 0, len(value), {(): value})

    @classmethod
    def scalar(cls, n: int, c) -> "Cochain":
        return cls.constant(n, [c])

    @classmethod
    def from_vector(cls, n: int, k: int, m: int, coords: Sequence) -> "Cochain":
        coords = vector(coords)
        if len(coords) != cochain_dim(n, k, m):
            raise ShapeError(f"expected {cochain_dim(n, k, m)} coordinates, got {len(coords)}")
        return cls(n, k, m, {I: coords[p * m:(p + 1) * m]
                             for p, I in enumerate(index_tuples(n, k))})

    # -- views -------------------------------------------------------
    def __getitem__(self, I: Sequence[int]) -> Vector:
        """Value on the basis tuple (e_{i_1}, ..., e_{i_k}), any order, repeats allowed."""
        I = tuple(I)
        sign = permutation_sign(I)
        if sign == 0:
            return zero_vector(self.vdim)
        v = self.coeffs.get(tuple(sorted(I)))
        if v is None:
            return zero_vector(self.vdim)
        return v if sign > 0 else vec_scale(-1, v)

    def to_vector(self) -> Vector:
        out = []
        zero = zero_vector(self.vdim)
        for I in index_tuples(self.dim, self.degree):
            out.extend(self.coeffs.get(I, zero))
        return tuple(out)

    def scalar_value(self, I: Sequence[int]) -> Fraction:
        if self.vdim != 1:
            raise ShapeError("scalar_value needs a scalar cochain")
        return self[I][0]

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- linear structure --------------------------------------------
    def _check_compatible(self, other: "Cochain"):
        if (self.dim, self.degree, self.vdim) != (other.dim, other.degree, other.vdim):
            raise ShapeError("cochains live in different spaces")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check_compatible(other)
        out = dict(self.coeffs)
        for I, v in other.coeffs.items():
            out[I] = vec_add(out[I], v) if I in out else v
        return Cochain(self.dim, self.degree, self.vdim, out)

    def __neg__(self) -> "Cochain":
        return self.scale(-1)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, c) -> "Cochain":
        return Cochain(self.dim, self.degree, self.vdim,
                       {I: vec_scale(c, v) for I, v in self.coeffs.items()})

    def __rmul__(self, c) -> "Cochain":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return ((self.dim, self.degree, self.vdim) == (other.dim, other.degree, other.vdim)
                and self.coeffs == other.coeffs)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Cochain(dim={self.dim}, degree={self.degree}, vdim={self.vdim}, coeffs={self.coeffs})"


def cochain_eval(eta: Cochain, args: Sequence[Sequence]) -> Vector:
    """Evaluate a cochain on k arbitrary vectors.

    Skew-multilinearity gives eta(x_1..x_k) = sum_I det(x_a[I_b]) eta(e_I).
    """
    k, n = eta.degree, eta.dim
    if len(args) != k:
        raise ShapeError(f"degree-{k} cochain applied to {len(args)} arguments")
    for x in args:
        if len(x) != n:
            raise ShapeError(f"argument of length {len(x)}, algebra has dimension {n}")
    if k == 0:
        return eta[()]
    out = zero_vector(eta.vdim)
    for I, v in eta.coeffs.items():
        minor = Matrix(k, k, [x[i] for x in args for i in I])
        d = det(minor)
        if d:
            out = vec_add(out, vec_scale(d, v))
    return out


def _columns_of(A: HomLieAlgebra) -> list[Vector]:
    return [A.alpha.col(i) for i in range(A.dim)]


def alpha_bar(A: HomLieAlgebra, eta: Cochain) -> Cochain:
    """(alpha-bar eta)(x_1..x_l) = eta(alpha x_1, ..., alpha x_l)."""
    if eta.dim != A.dim:
        raise ShapeError("cochain and algebra dimensions differ")
    if eta.degree == 0:
        return eta
    ae = _columns_of(A)
    return Cochain(A.dim, eta.degree, eta.vdim,
                   {J: cochain_eval(eta, [ae[j] for j in J])
                    for J in index_tuples(A.dim, eta.degree)})


def beta_bar(R: Representation, eta: Cochain, inverse: bool = False) -> Cochain:
    """Post-compose the values of ``eta`` with beta (or its inverse)."""
    if eta.vdim != R.vdim:
        raise ShapeError("cochain values do not live in the representation space")
    b = mat_power(R.beta, -1 if inverse else 1)
    return Cochain(eta.dim, eta.degree, eta.vdim,
                   {I: b.apply(v) for I, v in eta.coeffs.items()})


def _unshuffles(k: int, l: int):
    """Yield (sign, first_positions, rest_positions) for every (k, l)-unshuffle."""
    total = k + l
    for first in combinations(range(total), k):
        chosen = set(first)
        rest = tuple(p for p in range(total) if p not in chosen)
        yield permutation_sign(first + rest), first, rest


def diamond(xi: Cochain, eta: Cochain) -> Cochain:
    """Action of a scalar k-cochain on a V-valued l-cochain via (k, l)-unshuffles."""
    if xi.vdim != 1:
        raise ShapeError("the left factor of diamond must be a scalar cochain")
    if xi.dim != eta.dim:
        raise ShapeError("cochains over different algebras")
    n, k, l = xi.dim, xi.degree, eta.degree
    if k + l > n:
        return Cochain.zero(n, k + l, eta.vdim)
    shuffles = list(_unshuffles(k, l))
    out = {}
    for J in index_tuples(n, k + l):
        acc = zero_vector(eta.vdim)
        for sign, first, rest in shuffles:
            c = xi.coeffs.get(tuple(J[p] for p in first))
            if c is None:
                continue
            v = eta.coeffs.get(tuple(J[p] for p in rest))
            if v is None:
                continue
            acc = vec_add(acc, vec_scale(sign * c[0], v))
        out[J] = acc
    return Cochain(n, k + l, eta.vdim, out)


def wedge(xi1: Cochain, xi2: Cochain) -> Cochain:
    if xi1.vdim != 1 or xi2.vdim != 1:
        raise ShapeError("wedge is defined on scalar cochains")
    return diamond(xi1, xi2)


def _bracket_terms(A: HomLieAlgebra, eta: Cochain, J: tuple[int, ...],
                   twisted: list[Vector]) -> Vector:
    """sum_{a<b} (-1)^(a+b) eta([x_a, x_b], alpha x_1, ..^a..^b.., alpha x_{k+1}) on e_J."""
    acc = zero_vector(eta.vdim)
    for a, b in combinations(range(len(J)), 2):
        br = A.structure[J[a]][J[b]]
        if is_zero_vector(br):
            continue
        args = [br] + [twisted[J[c]] for c in range(len(J)) if c != a and c != b]
        val = cochain_eval(eta, args)
        acc = vec_add(acc, val if (a + b) % 2 == 0 else vec_scale(-1, val))
    return acc


def trivial_coboundary(A: HomLieAlgebra, xi: Cochain) -> Cochain:
    """The differential for the trivial representation, on scalar cochains."""
    if xi.vdim != 1:
        raise ShapeError("trivial_coboundary acts on scalar cochains")
    if xi.dim != A.dim:
        raise ShapeError("cochain and algebra dimensions differ")
    n, k = A.dim, xi.degree
    if k == 0:
        return Cochain.zero(n, 1, 1)
    ae = _columns_of(A)
    return Cochain(n, k + 1, 1,
                   {J: _bracket_terms(A, xi, J, ae) for J in index_tuples(n, k + 1)})


def twisted_action(R: Representation, s: int, k: int, i: int) -> Matrix:
    """beta^(k+1+s) rho(e_i) beta^(-k-2-s): the operator in d^s acting on C^k."""
    key = ("action", s, k, i)
    cache = R._cache
    if key not in cache:
        cache[key] = mat_power(R.beta, k + 1 + s) @ R.rho[i] @ mat_power(R.beta, -k - 2 - s)
    return cache[key]


def coboundary(R: Representation, s: int, eta: Cochain) -> Cochain:
    """d^s eta, a cochain of degree k + 1.

    d^s eta(x_1..x_{k+1}) = sum_i (-1)^(i+1) beta^(k+1+s) rho(x_i) beta^(-k-2-s)
                                eta(alpha x_1, ..^i.., alpha x_{k+1})
                          + sum_{i<j} (-1)^(i+j) eta([x_i, x_j], alpha x_1, ..^i..^j.., alpha x_{k+1})
    """
    if s < 0:
        raise ValueError("the shift s must be non-negative")
    A = R.algebra
    if eta.vdim != R.vdim:
        raise ShapeError("cochain values do not live in the representation space")
    if eta.dim != A.dim:
        raise ShapeError("cochain and algebra dimensions differ")
    n, k = A.dim, eta.degree
    ae = _columns_of(A)
    pulled = alpha_bar(A, eta)
    out = {}
    for J in index_tuples(n, k + 1):
        acc = zero_vector(R.vdim)
        for i, ji in enumerate(J):
            rest = J[:i] + J[i + 1:]
            v = pulled.coeffs.get(rest)
            if v is None:
                continue
            w = twisted_action(R, s, k, ji).apply(v)
            acc = vec_add(acc, w if i % 2 == 0 else vec_scale(-1, w))
        if k >= 1:
            acc = vec_add(acc, _bracket_terms(A, eta, J, ae))
        out[J] = acc
    return Cochain(n, k + 1, R.vdim, out)


@lru_cache(maxsize=1024)
def assemble_matrix(R: Representation, s: int, k: int) -> Matrix:
    """Matrix of d^s : C^k -> C^{k+1} in the standard basis."""
    n, m = R.dim, R.vdim
    if not 0 <= k <= n:
        raise ValueError(f"degree {k} outside 0..{n}")
    rows = cochain_dim(n, k + 1, m)
    cols = [coboundary(R, s, Cochain.basis(n, I, m, j)).to_vector()
            for I in index_tuples(n, k) for j in range(m)]
    return Matrix.from_columns(cols, rows=rows)


@lru_cache(maxsize=256)
def assemble_trivial_matrix(A: HomLieAlgebra, k: int) -> Matrix:
    """Matrix of the trivial differential d : wedge^k g* -> wedge^{k+1} g*."""
    n = A.dim
    cols = [trivial_coboundary(A, Cochain.basis(n, I)).to_vector()
            for I in index_tuples(n, k)]
    return Matrix.from_columns(cols, rows=comb(n, k + 1))


@lru_cache(maxsize=256)
def alpha_bar_matrix(A: HomLieAlgebra, k: int, m: int) -> Matrix:
    """Matrix of alpha-bar on C^k(g; V) for dim V = m."""
    n = A.dim
    cols = [alpha_bar(A, Cochain.basis(n, I, m, j)).to_vector()
            for I in index_tuples(n, k) for j in range(m)]
    return Matrix.from_columns(cols, rows=cochain_dim(n, k, m))


def beta_bar_matrix(R: Representation, k: int, inverse: bool = False) -> Matrix:
    """Block-diagonal matrix of beta-bar on C^k(g; V)."""
    b = mat_power(R.beta, -1 if inverse else 1)
    return Matrix.block_diagonal(b, comb(R.dim, k))


_ENTRIES = (0, 0, 1, -1, 2, -3, Fraction(1, 2), Fraction(-2, 3))


def random_cochain(rng, n: int, k: int, m: int = 1) -> Cochain:
    """A cochain with small rational coefficients drawn from ``rng`` (a random.Random)."""
    return Cochain.from_vector(n, k, m, [rng.choice(_ENTRIES) for _ in range(cochain_dim(n, k, m))])
