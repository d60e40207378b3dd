import pytest
from hypothesis import given, settings, strategies as st

from homlie.algebra import validate_hom_lie, validate_representation
from homlie.catalog import NAMES, SL2_TWIST, all_entries, builtin, random_twisted
from homlie.linalg import Matrix


def test_names():
    assert [e.name for e in all_entries()] == list(NAMES)


@pytest.mark.parametrize("name", NAMES)
def test_entries_are_valid(name):
    entry = builtin(name)
    assert validate_hom_lie(entry.algebra).valid
    assert {"trivial", "adjoint"} <= set(entry.representations)
    for R in entry.representations.values():
        assert R.algebra is entry.algebra
        assert validate_representation(R).valid


def test_structure_of_named_entries():
    sl2 = builtin("sl2").algebra
    assert sl2.bracket_basis(0, 1) == (0, 0, 1)
    assert sl2.bracket_basis(2, 0) == (2, 0, 0)
    assert sl2.bracket_basis(2, 1) == (0, -2, 0)
    heis = builtin("heisenberg3").algebra
    assert heis.brackets_upper() == {(0, 1): (0, 0, 1)}
    assert heis.alpha == Matrix.identity(3)
    tw = builtin("sl2_twisted")
    assert tw.algebra.alpha == SL2_TWIST
    assert tw.representations["adjoint"].beta == SL2_TWIST


def test_abelian_accepts_supplied_twist():
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    entry = builtin("abelian2", alpha=swap)
    assert entry.algebra.alpha == swap
    assert not entry.algebra.brackets_upper()
    assert validate_hom_lie(entry.algebra).valid
    other = builtin("abelian3", alpha=Matrix.diagonal([1, 2, 3]))
    assert validate_hom_lie(other.algebra).valid


def test_unknown_name():
    with pytest.raises(KeyError):
        builtin("so3")


def test_random_twisted_is_deterministic():
    a, b = random_twisted(42, 3), random_twisted(42, 3)
    assert a.name == b.name == "random_42_3"
    assert a.algebra == b.algebra
    assert a.representations == b.representations


def test_random_twisted_falls_back_to_abelian():
    # n = 1 admits no non-zero bracket, and budget 0 skips sampling altogether
    for entry in (random_twisted(7, 1), random_twisted(7, 3, budget=0)):
        assert not entry.algebra.brackets_upper()
        assert validate_hom_lie(entry.algebra).valid


def test_random_twisted_rejects_large_n():
    with pytest.raises(ValueError):
        random_twisted(0, 5)


def test_random_twisted_produces_nonabelian_twists():
    found = [random_twisted(seed, 3) for seed in range(20)]
    assert any(e.algebra.brackets_upper() and e.algebra.alpha != Matrix.identity(3) for e in found)


@settings(max_examples=40, deadline=None)
@given(st.integers(-10 ** 6, 10 ** 6), st.integers(1, 4))
def test_random_twisted_always_valid(seed, n):
    entry = random_twisted(seed, n)
    assert entry.algebra.dim == n
    assert validate_hom_lie(entry.algebra).valid
    for R in entry.representations.values():
        assert validate_representation(R).valid
