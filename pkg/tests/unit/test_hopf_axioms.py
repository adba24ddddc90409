"""Tests for hopfext.hopf.axioms and hopfext.hopf.presentation."""

import pytest

from hopfext.actions import catalog_actions
from hopfext.algebra.groups import parse_group
from hopfext.classifying import build_X
from hopfext.constants import ActionFamily, AxiomName
from hopfext.hopf.axioms import check_associativity, corrupt_comult, verify_axioms
from hopfext.hopf.builder import build, group_algebra
from hopfext.hopf.presentation import presentation, presentation_text
from hopfext.orbits import orbits
from hopfext.verification import first_noncocommutative


class TestVerifyAxioms:
    """Tests for verify_axioms()."""

    def test_every_axiom_checked(self, regular_class_3, regular_X_3):
        """All seven checks run, in order."""
        verdict = verify_axioms(build(regular_class_3, 1, regular_X_3))
        assert [c.name for c in verdict.checks] == [a.value for a in AxiomName]
        assert verdict.passed
        assert verdict.first_failure() is None

    @pytest.mark.parametrize("descriptor,p", [("Z2xZ2", 2), ("Z4", 2), ("Z3", 3), ("Z9", 3)])
    def test_orbit_representatives_pass(self, descriptor, p):
        """Every orbit representative on small groups is a Hopf algebra."""
        for action_class in catalog_actions(parse_group(descriptor), p):
            X = build_X(action_class)
            for record in orbits(X).orbits:
                H = build(action_class, record.representative, X)
                assert verify_axioms(H).passed, H.label

    @pytest.mark.parametrize("descriptor", ["Z9xZ3", "Z3^3"])
    def test_dimension_81_representatives_pass(self, descriptor):
        """The first noncocommutative representative of every class in dimension 81."""
        built = 0
        for action_class in catalog_actions(parse_group(descriptor), 3):
            H = first_noncocommutative(action_class)
            if H is None:
                continue
            assert H.dimension == 81
            verdict = verify_axioms(H)
            assert verdict.passed, (H.label, verdict.failed_names())
            built += 1
        assert built >= 2

    @pytest.mark.slow
    def test_dimension_625_central_passes(self):
        """Z25 x Z5 with the central action of C_5."""
        classes = catalog_actions(parse_group("Z25xZ5"), 5)
        central = next(c for c in classes if c.family is ActionFamily.GAMMA_CENTRAL)
        H = first_noncocommutative(central)
        assert H.dimension == 625
        assert verify_axioms(H).passed

    def test_group_algebra_passes(self, swap_class_2):
        """The zero class passes."""
        assert verify_axioms(group_algebra(swap_class_2.representative)).passed


class TestNegativeControl:
    """A corrupted comultiplication must be caught."""

    def test_corrupted_comult_fails(self, regular_class_3, regular_X_3):
        """Shifting one Δ coefficient breaks comultiplicativity with a witness."""
        mutant = corrupt_comult(build(regular_class_3, 1, regular_X_3))
        verdict = verify_axioms(mutant)
        check = verdict.check(AxiomName.COMULTIPLICATIVITY)
        assert not verdict.passed
        assert not check.passed
        assert check.witness.startswith("Δ(xy) ≠ Δ(x)Δ(y) at x=")
        assert str(AxiomName.COMULTIPLICATIVITY) in verdict.failed_names()
        assert verdict.check(AxiomName.ASSOCIATIVITY).passed
        assert mutant.label.endswith("-corrupted")

    def test_uncorrupted_passes_comultiplicativity(self, regular_class_3, regular_X_3):
        """The same algebra before corruption has no comultiplicativity witness."""
        check = verify_axioms(build(regular_class_3, 1, regular_X_3)).check(AxiomName.COMULTIPLICATIVITY)
        assert check.passed
        assert check.witness is None

    def test_mutant_keeps_algebra(self, regular_class_3, regular_X_3):
        """Only the coalgebra is touched; associativity still holds."""
        mutant = corrupt_comult(build(regular_class_3, 1, regular_X_3))
        assert check_associativity(mutant) is None


class TestPresentation:
    """Tests for presentation() and presentation_text()."""

    def test_generators_and_relations(self, regular_class_3, regular_X_3):
        """x1*, x2*, t with every relation holding."""
        point = next(r.representative for r in orbits(regular_X_3).orbits if not r.cocommutative)
        data = presentation(build(regular_class_3, point, regular_X_3))
        assert data.generators == ["x1*", "x2*", "t"]
        assert data.relations_hold
        assert "t^3 = 1" in [r.relation for r in data.relations]
        assert len(data.delta_t) == 9

    def test_conjugation_relation(self, regular_class_3, regular_X_3):
        """t x1* t^-1 follows the dual action."""
        data = presentation(build(regular_class_3, 1, regular_X_3))
        relations = [r.relation for r in data.relations]
        assert "t x1* t^-1 = x1*" in relations
        assert "t x2* t^-1 = x1* x2*" in relations

    def test_text(self, regular_class_3, regular_X_3):
        """Rendered text names the algebra and its generators."""
        text = presentation_text(build(regular_class_3, 1, regular_X_3))
        assert "R2#1" in text
        assert "generators: x1*, x2*, t" in text
        assert "[FAILS]" not in text
