"""
Built-in small Hom-Lie algebras and representations used as a test bed.

Bases: sl2 is ordered (e, f, h) with [e, f] = h, [h, e] = 2e, [h, f] = -2f;
heisenberg3 has [e1, e2] = e3. The twisted sl2 is the Yau twist by the
diagonal automorphism e -> 4e, f -> f/4, h -> h.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import (
    HomLieAlgebra, Representation, is_morphism, validate_hom_lie, validate_representation,
    yau_twist,
)
from .linalg import Matrix, is_invertible

NAMES = ("abelian2", "abelian3", "heisenberg3", "sl2", "sl2_twisted")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    algebra: HomLieAlgebra
    representations: dict[str, Representation] = field(default_factory=dict)


def sl2() -> HomLieAlgebra:
    return HomLieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1], (0, 2): [-2, 0, 0], (1, 2): [0, 2, 0]})


def sl2_standard(A: HomLieAlgebra, beta: Matrix) -> Representation:
    """The 2-dimensional representation, twisted as rho(x) = beta rho_0(x)."""
    e = Matrix.from_rows([[0, 1], [0, 0]])
    f = Matrix.from_rows([[0, 0], [1, 0]])
    h = Matrix.from_rows([[1, 0], [0, -1]])
    return Representation(A, tuple(beta @ r for r in (e, f, h)), beta)


SL2_TWIST = Matrix.diagonal([4, Fraction(1, 4), 1])
SL2_TWIST_ON_V = Matrix.diagonal([2, Fraction(1, 2)])


def builtin(name: str, alpha: Matrix | None = None) -> CatalogEntry:
    """Look up a catalog entry; ``alpha`` overrides the twist of the abelian entries."""
    if name == "abelian2" or name == "abelian3":
        n = int(name[-1])
        if alpha is None:
            # swap for n = 2, cyclic shift for n = 3
            alpha = Matrix.from_rows([[int(i == (j + 1) % n) for j in range(n)] for i in range(n)])
        A = HomLieAlgebra.abelian(n, alpha)
        reps = {"trivial": Representation.trivial(A)}
        if is_invertible(alpha):
            reps["adjoint"] = Representation.adjoint(A)
        if name == "abelian2" and alpha == Matrix.from_rows([[0, 1], [1, 0]]):
            # rho(e1) = rho(e2) = 1 is compatible with the swap
            one = Matrix.from_rows([[1]])
            reps["character"] = Representation(A, (one, one), Matrix.from_rows([[2]]))
        return CatalogEntry(name, A, reps)
    if alpha is not None:
        raise ValueError(f"{name} has a fixed twist")
    if name == "heisenberg3":
        A = HomLieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]})
        return CatalogEntry(name, A, {
            "trivial": Representation.trivial(A),
            "adjoint": Representation.adjoint(A),
        })
    if name == "sl2":
        A = sl2()
        return CatalogEntry(name, A, {
            "trivial": Representation.trivial(A),
            "adjoint": Representation.adjoint(A),
            "standard": sl2_standard(A, Matrix.identity(2)),
        })
    if name == "sl2_twisted":
        A = yau_twist(sl2(), SL2_TWIST)
        return CatalogEntry(name, A, {
            "trivial": Representation.trivial(A),
            "adjoint": Representation.adjoint(A),
            "standard": sl2_standard(A, SL2_TWIST_ON_V),
        })
    raise KeyError(f"unknown catalog entry {name!r}; choose from {', '.join(NAMES)}")


def all_entries() -> list[CatalogEntry]:
    return [builtin(name) for name in NAMES]


def all_representations() -> list[tuple[str, str, Representation]]:
    return [(e.name, rname, R) for e in all_entries() for rname, R in e.representations.items()]


_SCALARS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-2), Fraction(1, 2),
            Fraction(3), Fraction(-1, 3))


def _random_nilpotent(rng: random.Random, n: int) -> HomLieAlgebra | None:
    """[e_i, e_j] in the span of e_k, k > j; returns None if Jacobi fails."""
    brackets = {}
    for i, j in combinations(range(n), 2):
        coords = [0] * n
        for k in range(j + 1, n):
            if rng.random() < 0.5:
                coords[k] = rng.choice((-2, -1, 1, 2))
        if any(coords):
            brackets[(i, j)] = coords
    L = HomLieAlgebra.from_brackets(n, brackets)
    return L if validate_hom_lie(L).valid else None


def _random_diagonal_automorphism(rng: random.Random, L: HomLieAlgebra) -> Matrix:
    n = L.dim
    t = [None] * n
    for k in range(n):
        for i, j in combinations(range(k), 2):
            if L.structure[i][j][k] and t[k] is None:
                t[k] = t[i] * t[j]
        if t[k] is None:
            t[k] = rng.choice(_SCALARS)
    phi = Matrix.diagonal(t)
    if n >= 2 and rng.random() < 0.3:
        a, b = sorted(rng.sample(range(n), 2))
        phi = phi.with_entry(b, a, rng.choice((-1, 1)))
    return phi


def random_twisted(seed: int, n: int, budget: int = 200) -> CatalogEntry:
    """Seeded Yau twist of a random nilpotent Lie algebra, with its adjoint representation."""
    if not 1 <= n <= 4:
        raise ValueError("random_twisted supports 1 <= n <= 4")
    rng = random.Random(seed)
    name = f"random_{seed}_{n}"
    for _ in range(budget):
        L = _random_nilpotent(rng, n)
        if L is None or not L.brackets_upper():
            continue
        phi = _random_diagonal_automorphism(rng, L)
        if not is_invertible(phi) or not is_morphism(phi, L, L).valid:
            continue
        A = yau_twist(L, phi)
        reps = {"trivial": Representation.trivial(A), "adjoint": Representation.adjoint(A)}
        if validate_hom_lie(A).valid and all(validate_representation(R).valid for R in reps.values()):
            return CatalogEntry(name, A, reps)
    alpha = Matrix.diagonal([rng.choice(_SCALARS) for _ in range(n)])
    A = HomLieAlgebra.abelian(n, alpha)
    return CatalogEntry(name, A, {"trivial": Representation.trivial(A),
                                  "adjoint": Representation.adjoint(A)})
