"""Deciders for prime, primary, divided, and the (u,v)-absorbing family,
including the two split readings and witness replay."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlab.classify import (
    check_v1v_characterization,
    is_1_absorbing_primary,
    is_divided,
    is_primary,
    is_prime,
    is_uv_absorbing_i_primary,
    is_uv_absorbing_primary,
    is_uv_absorbing_prime,
    replay_uv_counterexample,
)
from hyperlab.core import elems_of, mask_of, subset
from hyperlab.ideals import enumerate_hyperideals, radical_nilpotent
from hyperlab.verdicts import ParameterError, SplitMode, UVParams

EVENS8 = mask_of({0, 2, 4, 6})
ZERO = mask_of({0})

# on z6:1,5 the zero ideal separates the two split readings: for each of
# these pairs the any-split decider accepts while the all-splits decider
# rejects, with a pinned minimal witness
Z6U_SPLIT_TABLE = {
    (3, 1): {"factors": [3, 2, 2], "v_part": [3], "rest": [2, 2]},
    (3, 2): {"factors": [2, 2, 3], "v_part": [2, 2], "rest": [3]},
    (4, 1): {"factors": [3, 2, 2, 2], "v_part": [3], "rest": [2, 2, 2]},
    (4, 2): {"factors": [2, 2, 3, 3], "v_part": [2, 2], "rest": [3, 3]},
    (4, 3): {"factors": [2, 2, 2, 3], "v_part": [2, 2, 2], "rest": [3]},
    (5, 1): {"factors": [3, 2, 2, 2, 2], "v_part": [3], "rest": [2, 2, 2, 2]},
    (5, 2): {"factors": [3, 3, 2, 2, 2], "v_part": [3, 3], "rest": [2, 2, 2]},
}


class TestUVParams:
    @pytest.mark.parametrize("u,v", [(2, 2), (1, 1), (3, 0), (2, 3)])
    def test_rejects_bad_arities(self, u, v):
        with pytest.raises(ParameterError):
            UVParams(u, v)

    def test_accepts_valid(self):
        p = UVParams(3, 2)
        assert (p.u, p.v) == (3, 2)


class TestPrimePrimary:
    def test_z8_maximal_is_prime(self, z8):
        assert is_prime(z8, EVENS8).holds

    def test_z8_small_ideal_not_prime(self, z8):
        v = is_prime(z8, mask_of({0, 4}))
        assert v.fails
        assert v.witness == {"x": 2, "y": 2}

    def test_z6u_zero_not_prime(self, z6u):
        v = is_prime(z6u, ZERO)
        assert v.fails
        assert v.witness == {"x": 2, "y": 3}

    def test_prime_witness_replays(self, z8):
        v = is_prime(z8, mask_of({0, 4}))
        x, y = v.witness["x"], v.witness["y"]
        prod = z8.hyperproduct([x, y])
        target = mask_of({0, 4})
        # whole product lands in the ideal yet neither factor lies in it
        assert subset(prod, target)
        assert not (mask_of({x}) & target) and not (mask_of({y}) & target)

    def test_z8_primary(self, z8):
        assert is_primary(z8, mask_of({0, 4}), EVENS8).holds

    def test_primary_needs_radical_escape(self, z6u):
        v = is_primary(z6u, ZERO, ZERO)
        assert v.fails


class TestAbsorbingDeciders:
    def test_z8_zero_prime_variant_fails(self, z8):
        v = is_uv_absorbing_prime(z8, ZERO, UVParams(3, 2))
        assert v.fails
        assert v.witness == {"factors": [2, 2, 2]}

    def test_z8_zero_primary_variant_holds(self, z8):
        assert is_uv_absorbing_primary(z8, ZERO, EVENS8, UVParams(3, 2)).holds

    def test_z8_one_absorbing(self, z8):
        v = is_1_absorbing_primary(z8, ZERO, EVENS8)
        assert v.holds
        assert v.tested == 20

    def test_one_absorbing_matches_3_2(self, z8, z6a, z6u, z7):
        for ring in (z8, z6a, z6u, z7):
            for ideal in enumerate_hyperideals(ring).ideals:
                if not ideal.proper:
                    continue
                rad = radical_nilpotent(ring, ideal.mask)
                a = is_1_absorbing_primary(ring, ideal.mask, rad)
                b = is_uv_absorbing_primary(ring, ideal.mask, rad, UVParams(3, 2))
                assert a.status == b.status, elems_of(ideal.mask)

    def test_split_mode_table(self, z6u):
        for (u, v), witness in Z6U_SPLIT_TABLE.items():
            any_v = is_uv_absorbing_primary(
                z6u, ZERO, ZERO, UVParams(u, v), mode=SplitMode.ANY
            )
            all_v = is_uv_absorbing_primary(
                z6u, ZERO, ZERO, UVParams(u, v), mode=SplitMode.ALL
            )
            assert any_v.holds, (u, v)
            assert all_v.fails, (u, v)
            assert all_v.witness == witness, (u, v)

    def test_split_table_witnesses_replay(self, z6u):
        for (u, v), witness in Z6U_SPLIT_TABLE.items():
            assert replay_uv_counterexample(
                z6u, ZERO, ZERO, witness["factors"], v, mode=SplitMode.ALL
            )

    def test_replay_respects_mode(self, z6u):
        factors = [2, 2, 3]
        assert replay_uv_counterexample(z6u, ZERO, ZERO, factors, 2, mode=SplitMode.ALL)
        assert not replay_uv_counterexample(
            z6u, ZERO, ZERO, factors, 2, mode=SplitMode.ANY
        )

    def test_prime_variant_split_modes(self, z6u):
        v = is_uv_absorbing_prime(z6u, ZERO, UVParams(3, 2), mode=SplitMode.ALL)
        assert v.fails
        assert v.witness == {"factors": [2, 2, 3], "v_part": [2, 2], "rest": [3]}


class TestHierarchy:
    def all_proper(self, rings):
        for ring in rings:
            lat = enumerate_hyperideals(ring)
            for ideal, prime in zip(lat.ideals, lat.prime):
                if ideal.proper:
                    yield ring, ideal, prime

    def test_prime_implies_uv_prime(self, z8, z6a, z6u, z7):
        pairs = [UVParams(u, v) for u in range(2, 5) for v in range(1, u)]
        for ring, ideal, prime in self.all_proper([z8, z6a, z6u, z7]):
            if not prime:
                continue
            for uv in pairs:
                assert is_uv_absorbing_prime(ring, ideal.mask, uv).holds

    def test_uv_prime_implies_uv_primary(self, z8, z6a, z6u, z7):
        pairs = [UVParams(u, v) for u in range(2, 5) for v in range(1, u)]
        for ring, ideal, _ in self.all_proper([z8, z6a, z6u, z7]):
            rad = radical_nilpotent(ring, ideal.mask)
            for uv in pairs:
                if is_uv_absorbing_prime(ring, ideal.mask, uv).holds:
                    assert is_uv_absorbing_primary(ring, ideal.mask, rad, uv).holds

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_all_mode_implies_any_mode(self, z8, z6a, z6u, data):
        ring = data.draw(st.sampled_from([z8, z6a, z6u]))
        lat = enumerate_hyperideals(ring)
        ideal = data.draw(st.sampled_from([i for i in lat.ideals if i.proper]))
        u = data.draw(st.integers(2, 5))
        v = data.draw(st.integers(1, u - 1))
        rad = radical_nilpotent(ring, ideal.mask)
        strict = is_uv_absorbing_primary(
            ring, ideal.mask, rad, UVParams(u, v), mode=SplitMode.ALL
        )
        if strict.holds:
            assert is_uv_absorbing_primary(
                ring, ideal.mask, rad, UVParams(u, v), mode=SplitMode.ANY
            ).holds


class TestAuxIdealVariant:
    def test_frozen_verdicts(self, z8):
        target = mask_of({0, 4})
        v = is_uv_absorbing_i_primary(z8, target, EVENS8, EVENS8, UVParams(3, 2))
        assert v.holds
        assert v.extra["ideal_product"] == [0]
        v = is_uv_absorbing_i_primary(z8, target, ZERO, EVENS8, UVParams(3, 2))
        assert v.holds
        assert v.extra["ideal_product"] == [0]


class TestCharacterization:
    def test_z8_report(self, z8):
        rep = check_v1v_characterization(z8, mask_of({0, 4}), EVENS8, v=1)
        clauses = [rep.i, rep.ii, rep.iii, rep.iv]
        assert [c.status for c in clauses] == ["holds"] * 4
        assert [c.tested for c in clauses] == [10, 2, 14, 6]
        assert rep.v == 1


class TestDivided:
    def test_z8_divided(self, z8):
        v = is_divided(z8)
        assert v.holds
        assert v.tested == 4

    def test_z6a_not_divided(self, z6a):
        v = is_divided(z6a)
        assert v.fails
        assert v.witness == {"prime": [0, 3], "a": 2, "principal": [0, 2, 4]}
