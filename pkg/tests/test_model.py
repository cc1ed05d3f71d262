import math

import pytest

from qnodes import (
    Box,
    Constants,
    DomainError,
    NormalizationError,
    Oscillator,
    Ring,
    RingSuperposition,
    predicted_node_count,
    validate_state,
)


class TestConstruction:
    def test_default_natural_units(self):
        assert Box().length == 1.0
        assert Box().constants.hbar == 1.0
        assert Ring().moment_of_inertia == 1.0
        assert Oscillator().omega == 1.0

    def test_positive_parameter_enforcement(self):
        with pytest.raises(DomainError):
            Constants(hbar=0.0)
        with pytest.raises(DomainError):
            Box(length=-1.0)
        with pytest.raises(DomainError):
            Ring(moment_of_inertia=0.0)
        with pytest.raises(DomainError):
            Oscillator(omega=-2.0)

    def test_parameters_overridable(self):
        spec = Box(length=2.5, mass=3.0, constants=Constants(hbar=0.5))
        assert spec.length == 2.5
        assert spec.constants.hbar == 0.5


class TestValidateState:
    def test_box_smallest_valid_index(self):
        assert validate_state(Box(), 1) == 1

    def test_box_zero_rejected(self):
        # n = 0 makes the wavefunction identically zero
        with pytest.raises(DomainError):
            validate_state(Box(), 0)

    def test_ring_accepts_negative_m(self):
        assert validate_state(Ring(), -3) == -3

    def test_oscillator_ground_state(self):
        assert validate_state(Oscillator(), 0) == 0
        with pytest.raises(DomainError):
            validate_state(Oscillator(), -1)

    def test_idempotent(self):
        spec = Ring()
        once = validate_state(spec, -7)
        assert validate_state(spec, once) == once


class TestPredictedNodeCount:
    def test_box_ground_state_nodeless(self):
        assert predicted_node_count(Box(), 1) == 0

    def test_oscillator_n_nodes(self):
        assert predicted_node_count(Oscillator(), 3) == 3

    def test_ring_two_per_m(self):
        assert predicted_node_count(Ring(), 2) == 4
        assert predicted_node_count(Ring(), -2) == 4

    @pytest.mark.parametrize(
        "spec,levels",
        [
            (Box(), range(1, 30)),
            (Oscillator(), range(0, 30)),
            (Ring(), range(0, 15)),
        ],
    )
    def test_monotone_nondecreasing(self, spec, levels):
        counts = [predicted_node_count(spec, n) for n in levels]
        assert counts == sorted(counts)


class TestRingSuperposition:
    def test_normalized_pair(self):
        c = 1.0 / math.sqrt(2.0)
        s = RingSuperposition(((1, c), (-1, c)))
        assert len(s.terms) == 2

    def test_rejects_unnormalized(self):
        with pytest.raises(NormalizationError):
            RingSuperposition(((0, 0.5), (1, 0.5)))

    def test_rejects_duplicate_m(self):
        c = 1.0 / math.sqrt(2.0)
        with pytest.raises(DomainError):
            RingSuperposition(((1, c), (1, c)))

    def test_amplitude_matches_terms(self):
        s = RingSuperposition(((2, 1.0),))
        val = s.amplitude(0.0)
        assert abs(val - 1.0 / math.sqrt(2.0 * math.pi)) < 1e-15
