import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from homlie.algebra import HomLieAlgebra, Representation, validate_hom_lie
from homlie.catalog import all_representations, builtin, random_twisted, sl2
from homlie.cochains import (
    Cochain, alpha_bar, coboundary, diamond, random_cochain, trivial_coboundary,
)
from homlie.cohomology import (
    check_alpha_chain_map, check_beta_chain_map, check_d_squared, check_leibniz_diamond,
    check_leibniz_trivial, cohomology_dims, leibniz_trials, verify_iso,
)
from homlie.linalg import Matrix

REPS = all_representations()
REP_IDS = [f"{a}-{r}" for a, r, _ in REPS]


@pytest.mark.parametrize("name,dims", [
    ("sl2", (1, 0, 0, 1)),
    ("abelian3", (1, 3, 3, 1)),
    ("heisenberg3", (1, 2, 2, 1)),
    ("abelian2", (1, 2, 1)),
])
def test_trivial_cohomology(name, dims):
    R = builtin(name).representations["trivial"]
    for s in range(4):
        assert cohomology_dims(R, s).dimH == dims


def test_adjoint_cohomology_examples():
    assert cohomology_dims(builtin("heisenberg3").representations["adjoint"], 0).dimH == (1, 4, 5, 2)
    for name in ("sl2", "sl2_twisted"):
        for rep in ("adjoint", "standard"):
            R = builtin(name).representations[rep]
            for s in range(3):
                assert set(cohomology_dims(R, s).dimH) == {0}


def test_kmax_truncates():
    R = builtin("sl2").representations["trivial"]
    rep = cohomology_dims(R, 0, kmax=1)
    assert rep.dimH == (1, 0)
    with pytest.raises(ValueError):
        cohomology_dims(R, 0, kmax=4)


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_rank_nullity(_a, _r, R):
    for s in range(3):
        rep = cohomology_dims(R, s)
        for d in rep.degrees:
            assert d.dimC == comb(R.dim, d.k) * R.vdim
            assert d.dimZ + d.rank_d == d.dimC
            assert 0 <= d.dimB <= d.dimZ
        assert rep[0].dimB == 0
        assert rep.degrees[-1].rank_d == 0
        # the alternating sum of dim C equals that of dim H
        euler = sum((-1) ** d.k * d.dimC for d in rep.degrees)
        assert euler == sum((-1) ** d.k * d.dimH for d in rep.degrees)


@pytest.mark.parametrize("name", ["sl2", "heisenberg3", "abelian3"])
def test_untwisted_results_independent_of_s(name):
    entry = builtin(name, alpha=Matrix.identity(3)) if name == "abelian3" else builtin(name)
    assert entry.algebra.alpha == Matrix.identity(3)
    for R in entry.representations.values():
        assert R.beta == Matrix.identity(R.vdim)
        dims = {cohomology_dims(R, s).dimH for s in range(4)}
        assert len(dims) == 1


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_identities_hold_on_catalog(_a, _r, R):
    for s in range(3):
        for check in (check_d_squared, check_beta_chain_map, check_alpha_chain_map, verify_iso):
            result = check(R, s)
            assert result.holds, (result.name, result.witnesses[:1])


def _non_jacobi():
    # sl2 with [h, e] negated: still skew, not Lie
    return HomLieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1], (0, 2): [2, 0, 0], (1, 2): [0, 2, 0]})


def test_d_squared_detects_broken_structure():
    A = _non_jacobi()
    assert not validate_hom_lie(A).valid
    R = Representation.adjoint(A)
    result = check_d_squared(R, 0)
    assert not result.holds and result.name == "d_squared"
    w = result.witnesses[0]
    assert w.lhs != 0 and w.rhs == 0
    assert dict(w.inputs[:2]) == {"s": 0, "k": 0}


def test_trivial_rep_of_non_jacobi_fails_on_degree_one():
    R = Representation.trivial(_non_jacobi())
    result = check_d_squared(R, 1)
    assert [dict(w.inputs[:2])["k"] for w in result.witnesses] == [1]


def test_alpha_chain_map_detects_wrong_beta():
    # rho satisfies nothing in particular w.r.t. this beta
    A = builtin("sl2_twisted").algebra
    good = builtin("sl2_twisted").representations["standard"]
    R = Representation(A, good.rho, Matrix.identity(2))
    result = check_alpha_chain_map(R, 0)
    assert not result.holds and result.name == "alpha_chain_map"
    assert result.witnesses[0].lhs != result.witnesses[0].rhs


def test_beta_chain_map_holds_for_any_beta_on_trivial_abelian():
    A = HomLieAlgebra.abelian(2)
    R = Representation.trivial(A, 2, Matrix.from_rows([[1, 2], [3, 4]]))
    assert check_beta_chain_map(R, 0).holds and verify_iso(R, 0).holds


def test_leibniz_examples():
    A = sl2()
    e, f, h = (Cochain.basis(3, (i,)) for i in range(3))
    assert check_leibniz_trivial(A, e, f).holds
    assert check_leibniz_trivial(A, Cochain.scalar(3, 2), h).holds
    R = builtin("sl2_twisted").representations["standard"]
    eta = Cochain.constant(3, (1, 2))
    for s in range(3):
        assert check_leibniz_diamond(R, s, h, eta).holds


def test_leibniz_needs_the_shifted_differential():
    # with a non-trivial beta, using d^s instead of d^(s+k) on eta breaks the rule
    R = builtin("sl2_twisted").representations["standard"]
    A = R.algebra
    xi = Cochain.basis(3, (2,))
    eta = Cochain.constant(3, (1, 1))
    assert check_leibniz_diamond(R, 0, xi, eta).holds
    lhs = coboundary(R, 0, diamond(xi, eta))
    unshifted = diamond(trivial_coboundary(A, xi), alpha_bar(A, eta)) \
        - diamond(alpha_bar(A, xi), coboundary(R, 0, eta))
    assert lhs != unshifted


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_leibniz_random_pairs(_a, _r, R):
    rng = random.Random(11)
    for s in range(3):
        triv, dia = leibniz_trials(R, s, 25, rng)
        assert triv.holds and dia.holds


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10 ** 4), st.integers(2, 4))
def test_random_twisted_instances(seed, n):
    entry = random_twisted(seed, n)
    rng = random.Random(seed)
    for R in entry.representations.values():
        for s in range(3):
            assert check_d_squared(R, s).holds
            assert check_beta_chain_map(R, s).holds
            assert check_alpha_chain_map(R, s).holds
            assert verify_iso(R, s).holds
        triv, dia = leibniz_trials(R, 1, 5, rng)
        assert triv.holds and dia.holds
