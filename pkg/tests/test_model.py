import pytest
from hypothesis import given
from hypothesis import strategies as st

from beg_dobrushin import (
    DegenerateGroundStateError,
    DomainError,
    ModelParams,
    NeighborConfig,
    classify_region,
    ground_pairs,
    pair_energy,
)
from beg_dobrushin.model import MajorRegion, SubRegion

from conftest import point_in_band, point_in_major

spins = st.sampled_from((-1, 0, 1))
couplings = st.floats(-10, 10, allow_nan=False)

GROUND_BY_MAJOR = {
    MajorRegion.FERROMAGNETIC: frozenset({(-1, -1), (1, 1)}),
    MajorRegion.DISORDERED: frozenset({(0, 0)}),
    MajorRegion.ANTIQUADRUPOLAR: frozenset({(-1, 0), (0, 1)}),
}


class TestPairEnergy:
    def test_examples(self):
        assert pair_energy(0, 0, 3.7, -2.1) == 0
        assert pair_energy(1, 1, 0.5, 2.0) == -(1 + 2.0 + 2 * 0.5)
        assert pair_energy(0, 1, 0.5, 2.0) == -0.5

    @given(spins, spins, couplings, couplings)
    def test_symmetry(self, si, sj, x, y):
        assert pair_energy(si, sj, x, y) == pair_energy(sj, si, x, y)
        assert pair_energy(-si, -sj, x, y) == pair_energy(si, sj, x, y)

    def test_rejects_bad_spin(self):
        with pytest.raises(DomainError):
            pair_energy(2, 0, 0.0, 0.0)


class TestClassifyRegion:
    def test_examples(self):
        label = classify_region(-5, 2)
        assert (label.major, label.sub) == (MajorRegion.DISORDERED, SubRegion.A)
        label = classify_region(-3, 0)
        assert (label.major, label.sub) == (MajorRegion.DISORDERED, SubRegion.B)
        label = classify_region(1, -3)
        assert (label.major, label.sub) == (MajorRegion.ANTIQUADRUPOLAR, SubRegion.OUTSIDE_U)
        assert classify_region(0.1, 0).major is MajorRegion.FERROMAGNETIC

    def test_boundary_label(self):
        # 1 + 2x + y = 0 separates F from D
        assert classify_region(-1, 1).major is MajorRegion.BOUNDARY
        assert classify_region(-1 + 1e-14, 1).major is MajorRegion.BOUNDARY

    def test_disordered_outside_strip(self):
        # in D but x + y + 1 >= 0
        label = classify_region(-0.6, 0.0)
        assert (label.major, label.sub) == (MajorRegion.DISORDERED, SubRegion.OUTSIDE_U)

    def test_bands_partition_strip(self, rng):
        for _ in range(1000):
            band = rng.choice(["A", "B", "C"])
            x, y = point_in_band(band, rng)
            label = classify_region(x, y)
            assert label.major is MajorRegion.DISORDERED
            assert label.sub is SubRegion[band]

    def test_band_edges(self):
        assert classify_region(-4, 1).sub is SubRegion.A
        assert classify_region(-4, -1).sub is SubRegion.C


class TestGroundPairs:
    def test_examples(self):
        assert ground_pairs(-5, 2) == frozenset({(0, 0)})
        assert ground_pairs(1, -3) == frozenset({(-1, 0), (0, 1)})
        assert ground_pairs(0.1, 0) == frozenset({(-1, -1), (1, 1)})

    def test_agrees_with_classification(self, rng):
        majors = list(GROUND_BY_MAJOR)
        for _ in range(1000):
            major = rng.choice(majors)
            x, y = point_in_major(major, rng)
            assert ground_pairs(x, y) == GROUND_BY_MAJOR[major]
            assert classify_region(x, y).major is major

    def test_boundary_degeneracy_raises(self):
        # on 1 + 2x + y = 0 the pairs ++ and 00 tie
        with pytest.raises(DegenerateGroundStateError):
            ground_pairs(-1, 1)


class TestModelParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            ModelParams(x=0, y=0, beta=-1, d=2)
        with pytest.raises(DomainError):
            ModelParams(x=0, y=0, beta=1, d=0)


class TestNeighborConfig:
    @given(st.lists(spins, min_size=2, max_size=6).filter(lambda s: len(s) % 2 == 0))
    def test_cached_statistics(self, s):
        nb = NeighborConfig(tuple(s))
        tail = s[1:]
        assert nb.k == sum(1 for v in tail if v != 0)
        assert nb.n == sum(tail)
        assert nb.sigma_sq == nb.k + s[0] * s[0]
        assert 0 <= nb.k <= 2 * nb.d - 1
        assert -nb.k <= nb.n <= nb.k
        assert (nb.n - nb.k) % 2 == 0

    def test_rejects_odd_length(self):
        with pytest.raises(DomainError):
            NeighborConfig((1, 0, -1))

    def test_rejects_bad_spin(self):
        with pytest.raises(DomainError):
            NeighborConfig((1, 2))

    def test_with_distinguished(self):
        nb = NeighborConfig((0, 1, -1, 0))
        assert nb.with_distinguished(1).spins == (1, 1, -1, 0)
