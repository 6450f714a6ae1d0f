import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kummerfib import (
    CurveClass,
    GenusMismatch,
    GramMatrix,
    InvalidDegree,
    MukaiVector,
    OutOfRange,
    OutOfRegimeWarning,
    PolarizedSurface,
    euler_characteristic,
    fm_double_transform,
    fm_transform,
    generic_ideal_twist_invariants,
    kummer_fiber_dim,
    mukai_pairing,
    slope_destabilizes,
)


def rank_one(n):
    return GramMatrix.diagonal(2 * n)


def curve(n):
    return CurveClass(PolarizedSurface(rank_one(n), (1,)), (1,))


coords = st.integers(-10**6, 10**6)
wit = st.sampled_from([0, 1, 2])
G2 = GramMatrix.parse("2,1;1,-2")


def mukai_vectors(rank=2):
    return st.builds(MukaiVector, coords, st.tuples(*[coords] * rank), coords)


class TestFmTransform:
    def test_ideal_twist_goes_to_torsion_sheaf(self):
        assert fm_transform(MukaiVector(1, (1,), 0), 1) == MukaiVector(0, (1,), -1)

    @pytest.mark.parametrize("n", [3, 4, 10])
    def test_line_bundle_of_curve(self, n):
        assert fm_transform(MukaiVector(1, (1,), n), 0) == MukaiVector(n, (-1,), 1)

    @pytest.mark.parametrize("i", [0, 1, 2])
    def test_zero_fixed(self, i):
        assert fm_transform(MukaiVector(0, (0,), 0), i) == MukaiVector(0, (0,), 0)

    def test_index_two(self):
        assert fm_transform(MukaiVector(2, (3, -1), 5), 2) == MukaiVector(5, (-3, 1), 2)

    @pytest.mark.parametrize("i", [-1, 3, True])
    def test_bad_index(self, i):
        with pytest.raises(OutOfRange):
            fm_transform(MukaiVector(1, (0,), 0), i)

    def test_dual_curve_consistency(self):
        for n in range(2, 30):
            c = curve(n)
            chi = euler_characteristic(c.surface, c.c)
            out = fm_transform(MukaiVector(1, c.c, chi), 0)
            assert (out.r, out.c1, out.chi) == (chi, (-1,), 1)

    @given(mukai_vectors(), mukai_vectors(), wit)
    def test_additive(self, v, w, i):
        assert fm_transform(v + w, i) == fm_transform(v, i) + fm_transform(w, i)

    @given(mukai_vectors(), mukai_vectors(), wit)
    def test_isometry(self, v, w, i):
        assert mukai_pairing(fm_transform(v, i), fm_transform(w, i), G2) == mukai_pairing(v, w, G2)


class TestDoubleTransform:
    def test_examples(self):
        assert fm_double_transform(MukaiVector(1, (1,), 0), 1) == MukaiVector(1, (1,), 0)
        assert fm_double_transform(MukaiVector(7, (-1,), 1), 2) == MukaiVector(7, (-1,), 1)
        assert fm_double_transform(MukaiVector(0, (0,), 0), 0) == MukaiVector(0, (0,), 0)

    @given(mukai_vectors(), wit)
    def test_involution(self, v, i):
        assert fm_double_transform(v, i) == v


class TestMukaiPairing:
    @pytest.mark.parametrize("n", [2, 3, 9])
    def test_examples(self, n):
        assert mukai_pairing(MukaiVector(1, (1,), 0), MukaiVector(1, (1,), 0), rank_one(n)) == 2 * n
        assert mukai_pairing(MukaiVector(1, (0,), -n), MukaiVector(1, (0,), -n), rank_one(n)) == 2 * n
        assert mukai_pairing(MukaiVector(0, (0,), 1), MukaiVector(1, (0,), 0), rank_one(n)) == -1

    @given(mukai_vectors(), mukai_vectors())
    def test_symmetric(self, v, w):
        assert mukai_pairing(v, w, G2) == mukai_pairing(w, v, G2)


class TestKummerFiberDim:
    @pytest.mark.parametrize("n,expected", [(3, 4), (9, 16), (100, 198)])
    def test_ideal_twist(self, n, expected):
        assert kummer_fiber_dim(MukaiVector(1, (1,), 0), rank_one(n)) == expected

    def test_dual_side(self):
        assert kummer_fiber_dim(MukaiVector(0, (1,), -1), rank_one(3)) == 4

    def test_warns_below_regime(self):
        with pytest.warns(OutOfRegimeWarning):
            assert kummer_fiber_dim(MukaiVector(1, (1,), 0), rank_one(2)) == 2

    def test_no_warning_in_regime(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            kummer_fiber_dim(MukaiVector(1, (1,), 0), rank_one(3))


class TestSlope:
    def test_examples(self):
        assert slope_destabilizes(1, 0, 2, -1)
        assert not slope_destabilizes(1, -1, 2, -1)
        assert slope_destabilizes(3, -2, 3, -2)

    @pytest.mark.parametrize("args", [(0, 1, 2, 1), (1, 1, -2, 1)])
    def test_invalid_degree(self, args):
        with pytest.raises(InvalidDegree):
            slope_destabilizes(*args)

    @given(st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-10**6, 10**6))
    def test_antisymmetric(self, d1, x1, d2, x2):
        forward = slope_destabilizes(d1, x1, d2, x2)
        backward = slope_destabilizes(d2, x2, d1, x1)
        equal = x1 * d2 == x2 * d1
        assert forward or backward
        assert (forward and backward) == equal


class TestGenericIdealTwist:
    @pytest.mark.parametrize("n", [2, 3, 4, 50])
    def test_invariants(self, n):
        v, i = generic_ideal_twist_invariants(curve(n), n)
        assert v == MukaiVector(1, (1,), 0) and i == 1

    def test_genus_mismatch(self):
        with pytest.raises(GenusMismatch):
            generic_ideal_twist_invariants(curve(3), 4)

    def test_transform_lands_on_dual_side(self):
        for n in range(3, 20):
            v, i = generic_ideal_twist_invariants(curve(n), n)
            dual = fm_transform(v, i)
            assert dual == MukaiVector(0, (1,), -1)
            assert kummer_fiber_dim(dual, rank_one(n)) == kummer_fiber_dim(v, rank_one(n)) == 2 * n - 2


def test_json_round_trip():
    v = MukaiVector(3, (1, -2), -7)
    assert MukaiVector.from_json(v.to_json()) == v
