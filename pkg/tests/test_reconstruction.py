from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from homlie.algebra import Representation, validate_hom_lie, validate_representation
from homlie.catalog import all_representations, builtin, random_twisted
from homlie.linalg import Matrix, ShapeError
from homlie.reconstruction import (
    DIAGNOSTICS, OperatorFamily, extract_bracket, extract_rho, reconstruct, roundtrip,
)

REPS = all_representations()
REP_IDS = [f"{a}-{r}" for a, r, _ in REPS]


def test_extract_rho_identity_beta():
    R = builtin("sl2").representations["adjoint"]
    for s in range(3):
        assert extract_rho(OperatorFamily.from_representation(R, s)) == R.rho


def test_extract_rho_twisted():
    R = builtin("sl2_twisted").representations["standard"]
    assert R.beta == Matrix.diagonal([2, F(1, 2)])
    for s in range(4):
        assert extract_rho(OperatorFamily.from_representation(R, s)) == R.rho


def test_extract_bracket_sl2():
    A = builtin("sl2").algebra
    c = extract_bracket(OperatorFamily.from_representation(Representation.trivial(A), 0))
    assert c[0][1] == (0, 0, 1)
    assert c[2][0] == (2, 0, 0)
    assert c[1][0] == (0, 0, -1)
    assert c[0][0] == (0, 0, 0)


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_roundtrip(_a, _r, R):
    for s in range(3):
        result = roundtrip(R, s)
        assert result.holds, result.witnesses[:2]


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_recovered_data_is_independent_of_s(_a, _r, R):
    results = [reconstruct(OperatorFamily.from_representation(R, s)) for s in range(3)]
    assert len({r.rho for r in results}) == 1
    assert len({r.structure for r in results}) == 1
    assert all(r.holds for r in results)
    assert [d.name for d in results[0].diagnostics] == list(DIAGNOSTICS)


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_recovered_bracket_is_skew(_a, _r, R):
    c = reconstruct(OperatorFamily.from_representation(R, 1)).structure
    n = R.dim
    for i in range(n):
        assert not any(c[i][i])
        for j in range(n):
            assert c[i][j] == tuple(-x for x in c[j][i])


def test_reconstructed_objects_validate():
    R = builtin("sl2_twisted").representations["standard"]
    F_ = OperatorFamily.from_representation(R, 2)
    res = reconstruct(F_)
    A = res.algebra(F_.alpha)
    assert validate_hom_lie(A).valid
    assert validate_representation(Representation(A, res.rho, F_.beta)).valid


def test_shape_checks():
    R = builtin("sl2").representations["adjoint"]
    F_ = OperatorFamily.from_representation(R, 0)
    with pytest.raises(ShapeError):
        OperatorFamily(**{**F_.__dict__, "D0": Matrix.zeros(3, 3)})
    with pytest.raises(ValueError):
        OperatorFamily(**{**F_.__dict__, "s": -1})


def _every_single_entry_perturbation(F_, which):
    M = getattr(F_, which)
    for i in range(M.rows):
        for j in range(M.cols):
            yield (i, j), F_.perturbed(which, i, j)


@pytest.mark.parametrize("_a,_r,R", REPS, ids=REP_IDS)
def test_every_d0_perturbation_is_detected(_a, _r, R):
    # A single changed entry can still describe a valid rho on its own; it then
    # disagrees with D1, which the cross-check and D1 D0 = 0 catch (dim >= 2).
    base = OperatorFamily.from_representation(R, 1)
    for pos, F_ in _every_single_entry_perturbation(base, "D0"):
        failing = reconstruct(F_).failing()
        assert failing, pos
        assert set(failing) <= {"t1eq1", "t1eq2", "t1eq5", "d_squared_0"}


def test_d0_perturbation_breaks_representation_identity():
    R = builtin("sl2").representations["adjoint"]
    F_ = OperatorFamily.from_representation(R, 0).perturbed("D0", 0, 0)
    res = reconstruct(F_)
    failing = res.failing()
    assert {"t1eq1", "t1eq5"} & set(failing)
    bad = next(d for d in res.diagnostics if d.name in ("t1eq1", "t1eq5") and not d.holds)
    w = bad.witnesses[0]
    assert w.lhs != w.rhs


def test_dtriv_perturbation_breaks_bracket_identities():
    R = builtin("sl2_twisted").representations["adjoint"]
    base = OperatorFamily.from_representation(R, 0)
    for pos, F_ in _every_single_entry_perturbation(base, "Dtriv1"):
        failing = set(reconstruct(F_).failing())
        assert failing & {"t1eq2", "t1eq4", "t1eq5", "t1eq6"}, pos


def test_d1_perturbation_caught_by_cross_check():
    R = builtin("heisenberg3").representations["adjoint"]
    base = OperatorFamily.from_representation(R, 2)
    for pos, F_ in _every_single_entry_perturbation(base, "D1"):
        assert "t1eq2" in reconstruct(F_).failing(), pos


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10 ** 4), st.integers(1, 4), st.integers(0, 3))
def test_random_twisted_roundtrip(seed, n, s):
    for R in random_twisted(seed, n).representations.values():
        assert roundtrip(R, s).holds
