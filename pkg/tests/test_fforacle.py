import pytest

from quiverstab import (
    DomainError,
    FFRep,
    IntervalRep,
    QuiverAn,
    ResourceLimitError,
    apply_group,
    enumerate_subrep_supports,
    enumerate_subspaces,
    intrinsic_weights,
    is_stable,
    is_stable_ff,
    random_rep,
    subrep_dimension_vectors,
    thin_rep,
)
from conftest import words_up_to


class TestThinRep:
    def test_identity_maps_inside(self):
        q = QuiverAn("RR")
        x = thin_rep(q, IntervalRep(1, 3), 2)
        assert x.maps == (((1,),), ((1,),))

    def test_empty_outside(self):
        q = QuiverAn("RRRLLR")
        x = thin_rep(q, IntervalRep(4, 4), 3)
        assert all(all(len(row) == 0 for row in m) for m in x.maps)

    def test_single_arrow(self):
        q = QuiverAn("R")
        x = thin_rep(q, IntervalRep(1, 2), 5)
        assert x.maps == (((1,),),)

    def test_prime_checked(self):
        with pytest.raises(DomainError):
            thin_rep(QuiverAn("R"), IntervalRep(1, 2), 6)


class TestRandomRep:
    def test_seed_determinism(self):
        q = QuiverAn("RLR")
        a = random_rep(q, (2, 1, 2, 1), 3, seed=99)
        b = random_rep(q, (2, 1, 2, 1), 3, seed=99)
        assert a == b

    def test_zero_dims(self):
        q = QuiverAn("RR")
        x = random_rep(q, (0, 0, 0), 2, seed=0)
        assert all(m == () for m in x.maps)

    def test_entries_in_field(self):
        q = QuiverAn("R")
        x = random_rep(q, (1, 1), 2, seed=4)
        assert x.maps[0][0][0] in (0, 1)


class TestSubspaces:
    def test_f2_dim2(self):
        spaces = enumerate_subspaces(2, 2)
        assert len(spaces) == 5  # zero, three lines, plane

    def test_f3_dim1(self):
        assert len(enumerate_subspaces(1, 3)) == 2

    def test_dim0(self):
        assert enumerate_subspaces(0, 2) == ((),)

    def test_gaussian_binomial_counts(self):
        # dim 3 over F_2: 1 + 7 + 7 + 1; dim 3 over F_3: 1 + 13 + 13 + 1
        assert len(enumerate_subspaces(3, 2)) == 16
        assert len(enumerate_subspaces(3, 3)) == 28

    def test_resource_guard(self):
        with pytest.raises(ResourceLimitError):
            enumerate_subspaces(5, 2)
        with pytest.raises(ResourceLimitError):
            enumerate_subspaces(2, 5)

    def test_canonical_and_distinct(self):
        spaces = enumerate_subspaces(3, 3)
        assert len(set(spaces)) == len(spaces)


class TestSubrepVectors:
    def test_thin_interval(self):
        q = QuiverAn("RR")
        x = thin_rep(q, IntervalRep(1, 3), 2)
        assert subrep_dimension_vectors(x, q) == {
            (0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1),
        }

    def test_nonzero_arrow(self):
        q = QuiverAn("R")
        x = FFRep(prime=3, dims=(1, 1), maps=(((1,),),))
        assert subrep_dimension_vectors(x, q) == {(0, 0), (0, 1), (1, 1)}

    def test_zero_arrow_adds_decomposable_subrep(self):
        q = QuiverAn("R")
        x = FFRep(prime=3, dims=(1, 1), maps=(((0,),),))
        assert subrep_dimension_vectors(x, q) == {(0, 0), (0, 1), (1, 0), (1, 1)}

    def test_guard(self):
        q = QuiverAn("R")
        x = FFRep(prime=5, dims=(1, 1), maps=(((1,),),))
        with pytest.raises(ResourceLimitError):
            subrep_dimension_vectors(x, q)

    def test_matches_combinatorial_enumeration(self):
        for word in words_up_to(5):
            q = QuiverAn(word)
            from quiverstab import enumerate_indecomposables

            for rep in enumerate_indecomposables(q):
                for prime in (2, 3):
                    x = thin_rep(q, rep, prime)
                    expected = {
                        tuple(1 if v in support else 0 for v in range(1, q.n + 1))
                        for support in enumerate_subrep_supports(q, rep)
                    }
                    assert subrep_dimension_vectors(x, q) == expected


class TestStableFF:
    def test_stable_interval(self):
        q = QuiverAn("R")
        x = thin_rep(q, IntervalRep(1, 2), 2)
        assert is_stable_ff(x, q, (1, -1))

    def test_zero_weights(self):
        q = QuiverAn("R")
        x = thin_rep(q, IntervalRep(1, 2), 2)
        assert not is_stable_ff(x, q, (0, 0))

    def test_zero_map_never_stable(self):
        q = QuiverAn("R")
        x = FFRep(prime=2, dims=(1, 1), maps=(((0,),),))
        for thetas in ((1, -1), (-1, 1), (0, 0), (5, 3)):
            assert not is_stable_ff(x, q, thetas)

    def test_zero_rep_rejected(self):
        q = QuiverAn("R")
        x = FFRep(prime=2, dims=(0, 0), maps=((),))
        with pytest.raises(DomainError):
            is_stable_ff(x, q, (1, -1))

    def test_agrees_with_combinatorial(self):
        for word in words_up_to(5):
            q = QuiverAn(word)
            thetas = intrinsic_weights(q)
            from quiverstab import enumerate_indecomposables

            for rep in enumerate_indecomposables(q):
                for prime in (2, 3):
                    x = thin_rep(q, rep, prime)
                    assert is_stable_ff(x, q, thetas) == is_stable(q, thetas, rep).stable


class TestApplyGroup:
    def test_identity(self):
        q = QuiverAn("RL")
        x = random_rep(q, (1, 2, 1), 3, seed=8)
        g = (((1,),), ((1, 0), (0, 1)), ((1,),))
        assert apply_group(g, x, q) == x

    def test_inverse_round_trip(self):
        import random as _random

        import quiverstab.fieldmath as fm

        q = QuiverAn("RL")
        x = random_rep(q, (2, 2, 1), 3, seed=15)
        rng = _random.Random(21)
        g = tuple(
            tuple(tuple(row) for row in fm.random_invertible(rng, d, 3))
            for d in x.dims
        )
        g_inv = tuple(
            tuple(tuple(row) for row in fm.mat_inv(block, 3, len(block)))
            for block in g
        )
        assert apply_group(g_inv, apply_group(g, x, q), q) == x

    def test_singular_rejected(self):
        q = QuiverAn("R")
        x = random_rep(q, (1, 1), 3, seed=1)
        with pytest.raises(DomainError):
            apply_group((((0,),), ((1,),)), x, q)

    def test_subreps_invariant(self):
        import random as _random

        import quiverstab.fieldmath as fm

        q = QuiverAn("RL")
        rng = _random.Random(5)
        x = thin_rep(q, IntervalRep(1, 2), 3)
        base = subrep_dimension_vectors(x, q)
        for _ in range(25):
            g = tuple(
                tuple(tuple(row) for row in fm.random_invertible(rng, d, 3))
                for d in x.dims
            )
            assert subrep_dimension_vectors(apply_group(g, x, q), q) == base

    def test_stability_invariant(self):
        import random as _random

        import quiverstab.fieldmath as fm

        q = QuiverAn("RLR")
        thetas = intrinsic_weights(q)
        rng = _random.Random(13)
        x = thin_rep(q, IntervalRep(2, 4), 3)
        base = is_stable_ff(x, q, thetas)
        for _ in range(25):
            g = tuple(
                tuple(tuple(row) for row in fm.random_invertible(rng, d, 3))
                for d in x.dims
            )
            assert is_stable_ff(apply_group(g, x, q), q, thetas) == base


def test_field_robustness():
    # identical subrep vectors over F_2 and F_3 on all thin instances
    for word in words_up_to(5):
        q = QuiverAn(word)
        from quiverstab import enumerate_indecomposables

        for rep in enumerate_indecomposables(q):
            two = subrep_dimension_vectors(thin_rep(q, rep, 2), q)
            three = subrep_dimension_vectors(thin_rep(q, rep, 3), q)
            assert two == three
