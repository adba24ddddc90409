"""Tests for hopfext.orbits - orbit partitions of X(⊳)."""

import numpy as np

from hopfext.classifying import build_X
from hopfext.orbits import orbit_labels, orbit_of, orbit_sizes, orbits, same_orbit


class TestOrbitLabels:
    """Tests for the label propagation."""

    def test_single_cycle(self):
        """A 4-cycle on 0..3 plus a fixed point 4."""
        perm = np.array([1, 2, 3, 0, 4])
        labels = orbit_labels(5, [perm])
        assert labels.tolist() == [0, 0, 0, 0, 4]
        assert orbit_sizes(labels) == {0: 4, 4: 1}

    def test_two_generators(self):
        """Two transpositions chain 0-1-2."""
        swap01 = np.array([1, 0, 2, 3])
        swap12 = np.array([0, 2, 1, 3])
        assert orbit_labels(4, [swap01, swap12]).tolist() == [0, 0, 0, 3]

    def test_no_generators(self):
        """Without generators every point is its own orbit."""
        assert orbit_labels(3, []).tolist() == [0, 1, 2]

    def test_label_is_orbit_minimum(self):
        """Labels name the least point even when it is reached late."""
        perm = np.array([3, 0, 1, 2])
        assert orbit_labels(4, [perm]).tolist() == [0, 0, 0, 0]


class TestOrbitReport:
    """Tests for orbits() on real classifying groups."""

    def test_regular_z3xz3(self, regular_X_3):
        """Regular C_3 on Z3 x Z3: six orbits, four noncocommutative."""
        report = orbits(regular_X_3)
        assert report.total == 6
        assert report.nontrivial == 4
        assert report.cocommutative == 2
        assert sum(r.size for r in report.orbits) == regular_X_3.order

    def test_representatives_are_least(self, regular_X_3):
        """Each orbit is named by its least point; point 0 is its own orbit."""
        report = orbits(regular_X_3)
        reps = [r.representative for r in report.orbits]
        assert reps == sorted(reps)
        assert report.orbits[0].representative == 0
        assert report.orbits[0].size == 1

    def test_trivial_action_is_commutative(self, trivial_class_3):
        """Orbits of the trivial action are commutative, never nontrivial."""
        report = orbits(build_X(trivial_class_3))
        assert report.total == 4
        assert report.nontrivial == 0
        assert all(r.commutative for r in report.orbits)

    def test_a_orbits_refine(self, regular_X_3):
        """A(⊳)-orbits are no larger than G(⊳)-orbits."""
        for record in orbits(regular_X_3).orbits:
            assert record.a_orbit_size <= record.size
            assert record.size % record.a_orbit_size == 0

    def test_action_summary(self, regular_X_3):
        """The report carries the action data."""
        summary = orbits(regular_X_3).action
        assert summary.family == "elementary-regular"
        assert summary.x_order == regular_X_3.order
        assert summary.a_order == 6


class TestOrbitQueries:
    """Tests for orbit_of() and same_orbit()."""

    def test_orbit_of(self, regular_X_3):
        """orbit_of lists a whole orbit."""
        report = orbits(regular_X_3)
        for record in report.orbits:
            members = orbit_of(regular_X_3, record.representative)
            assert len(members) == record.size
            assert members[0] == record.representative

    def test_same_orbit(self, regular_X_3):
        """Points of one orbit share it; the zero point is alone."""
        record = max(orbits(regular_X_3).orbits, key=lambda r: r.size)
        members = orbit_of(regular_X_3, record.representative)
        assert same_orbit(regular_X_3, members[0], members[-1])
        assert not same_orbit(regular_X_3, 0, record.representative)
