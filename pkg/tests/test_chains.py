import itertools
import math

import pytest
from hypothesis import given

from pinwheel import (
    Chain,
    GenPerm,
    act_on_chain,
    chain_dimension,
    enumerate_chains,
    group_order,
    identity,
    inverse,
    make_chain,
    maximal_refinements,
    multiply,
    refines,
)
from pinwheel.chains import coarsenings

from conftest import chains_over, genperms


def chain_count_oracle(r: int, n: int) -> int:
    """Count chains by dynamic programming over the subset lattice."""
    full = 1 << n
    ending_at = {}
    for mask in range(1, full):
        total = 1
        sub = (mask - 1) & mask
        while sub:
            total += ending_at[sub]
            sub = (sub - 1) & mask
        ending_at[mask] = total
    return 1 + sum(
        ending_at[mask] * r ** bin(mask).count("1") for mask in range(1, full)
    )


EXAMPLE = make_chain(3, 4, [[3], [2, 3, 4]], {2: 1, 3: 0, 4: 2})


class TestValidation:
    def test_worked_example_is_accepted(self):
        assert EXAMPLE.sets == ((3,), (2, 3, 4))
        assert EXAMPLE.decoration == ((2, 1), (3, 0), (4, 2))

    def test_non_strict_nesting_rejected(self):
        with pytest.raises(ValueError):
            Chain(2, 2, ((1,), (1,)), ((1, 0),))

    def test_incomparable_sets_rejected(self):
        with pytest.raises(ValueError):
            Chain(2, 3, ((1,), (2, 3)), ((2, 0), (3, 0)))

    def test_length_zero_chain(self):
        empty = Chain(2, 2, (), ())
        assert empty.length == 0 and empty.decoration == ()

    def test_decoration_domain_must_match_top(self):
        with pytest.raises(ValueError):
            Chain(2, 2, ((1,),), ())
        with pytest.raises(ValueError):
            Chain(2, 2, ((1,),), ((1, 0), (2, 0)))

    def test_out_of_range_elements_rejected(self):
        with pytest.raises(ValueError):
            Chain(2, 2, ((3,),), ((3, 0),))


class TestEnumeration:
    def test_octagon_census(self):
        chains = enumerate_chains(2, 2)
        assert len(chains) == 17
        by_length = [sum(1 for c in chains if c.length == k) for k in range(3)]
        assert by_length == [1, 8, 8]

    def test_r3_census(self):
        chains = enumerate_chains(3, 2)
        assert len(chains) == 34
        by_length = [sum(1 for c in chains if c.length == k) for k in range(3)]
        assert by_length == [1, 15, 18]

    def test_n0_has_single_chain(self):
        assert enumerate_chains(5, 0) == (Chain(5, 0, (), ()),)

    @pytest.mark.parametrize("r,n", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (4, 3)])
    def test_count_matches_lattice_oracle(self, r, n):
        assert len(enumerate_chains(r, n)) == chain_count_oracle(r, n)

    def test_no_duplicates_and_sorted(self):
        chains = enumerate_chains(3, 3)
        assert len(set(chains)) == len(chains)
        keys = [c.sort_key() for c in chains]
        assert keys == sorted(keys)

    @pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (2, 3), (3, 3)])
    def test_maximal_chain_count_is_group_order(self, r, n):
        maximal = [c for c in enumerate_chains(r, n) if c.length == n]
        assert len(maximal) == group_order(r, n)


class TestRefinement:
    def test_removing_one_set_is_refined(self):
        coarser = make_chain(3, 4, [[2, 3, 4]], {2: 1, 3: 0, 4: 2})
        assert refines(EXAMPLE, coarser)
        assert not refines(coarser, EXAMPLE)

    def test_reflexive(self):
        for c in enumerate_chains(2, 2):
            assert refines(c, c)

    def test_decoration_must_restrict(self):
        other = make_chain(3, 4, [[2, 3, 4]], {2: 1, 3: 0, 4: 1})
        assert not refines(EXAMPLE, other)

    @pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (2, 3)])
    def test_partial_order(self, r, n):
        chains = enumerate_chains(r, n)
        relation = {
            (fine, coarse)
            for fine in chains
            for coarse in chains
            if refines(fine, coarse)
        }
        for fine, coarse in relation:
            if (coarse, fine) in relation:
                assert fine == coarse
        for a, b in relation:
            for b2, c in relation:
                if b2 == b:
                    assert (a, c) in relation

    def test_partial_order_at_envelope_edge(self):
        # ancestor sets make the (3,3) check linear in the relation size
        for c in enumerate_chains(3, 3):
            ancestors = set(coarsenings(c))
            assert c in ancestors
            for a in ancestors:
                assert set(coarsenings(a)) <= ancestors
                if a != c:
                    assert c not in set(coarsenings(a))

    @pytest.mark.parametrize("r,n", [(2, 2), (3, 2), (2, 3)])
    def test_matches_set_deletion_closure(self, r, n):
        chains = enumerate_chains(r, n)
        for fine in chains:
            ancestors = set(coarsenings(fine))
            for coarse in chains:
                assert refines(fine, coarse) == (coarse in ancestors)


class TestDimension:
    def test_examples(self):
        assert chain_dimension(Chain(2, 4, (), ())) == 4
        assert chain_dimension(EXAMPLE) == 2
        maximal = make_chain(2, 2, [[2], [1, 2]], {1: 0, 2: 0})
        assert chain_dimension(maximal) == 0


ACTION_MATRIX = GenPerm(3, 4, (4, 1, 3, 2), (0, 2, 2, 1))


def identity_maximal_chain(r: int, n: int) -> Chain:
    sets = tuple(tuple(range(n + 1 - j, n + 1)) for j in range(1, n + 1))
    return Chain(r, n, sets, tuple((i, 0) for i in range(1, n + 1)))


class TestAction:
    def test_identity_fixes_chains(self):
        for c in enumerate_chains(3, 2):
            assert act_on_chain(c, identity(3, 2)) == c

    def test_worked_action_example(self):
        moved = act_on_chain(identity_maximal_chain(3, 4), ACTION_MATRIX)
        assert moved.sets == ((1,), (1, 3), (1, 3, 4), (1, 2, 3, 4))
        assert moved.decoration_map() == {1: 0, 2: 1, 3: 1, 4: 2}

    @given(chains_over(r=3, n=3), genperms(r=3, n=3))
    def test_inverse_action_restores(self, c, a):
        assert act_on_chain(act_on_chain(c, a), inverse(a)) == c

    @given(chains_over(r=3, n=3), genperms(r=3, n=3))
    def test_action_preserves_length(self, c, a):
        assert act_on_chain(c, a).length == c.length

    @pytest.mark.parametrize("r,n", [(2, 2), (3, 2)])
    def test_right_action_law_exhaustive(self, r, n):
        from pinwheel import enumerate_group

        for c in enumerate_chains(r, n):
            for a, b in itertools.product(enumerate_group(r, n), repeat=2):
                assert act_on_chain(act_on_chain(c, a), b) == act_on_chain(c, multiply(a, b))


class TestRefinements:
    def test_maximal_chain_refines_to_itself(self):
        maximal = identity_maximal_chain(2, 3)
        assert maximal_refinements(maximal) == (maximal,)

    def test_worked_example_has_six(self):
        refinements = maximal_refinements(EXAMPLE)
        assert len(refinements) == 6
        for fine in refinements:
            assert fine.length == 4
            assert refines(fine, EXAMPLE)

    def test_length_zero_chain_has_all_maximal_chains(self):
        empty = Chain(2, 2, (), ())
        assert set(maximal_refinements(empty)) == {
            c for c in enumerate_chains(2, 2) if c.length == 2
        }


class TestJson:
    def test_shape(self):
        data = EXAMPLE.to_json()
        assert data == {
            "r": 3,
            "n": 4,
            "sets": [[3], [2, 3, 4]],
            "decoration": {"2": 1, "3": 0, "4": 2},
        }

    @given(chains_over())
    def test_roundtrip(self, c):
        assert Chain.from_json(c.to_json()) == c
