"""Tests for boundary pairs, normal forms and rank classification."""

import numpy as np
import pytest

from qvertex.cases import DeltaCase, MixedRankCase, RankTwoACase, make_delta
from qvertex.errors import AdmissibilityError, DimensionError, ParameterError
from qvertex.presets import PRESETS
from qvertex.vertex import (
    BoundaryPair,
    CaseLabel,
    ReverseSTForm,
    STForm,
    assemble_boundary,
    case_label,
    classify,
    permute_lines,
    to_reverse_st_form,
    to_st_form,
    validate_admissible,
)


def _same_form(left: STForm, right: STForm, atol: float = 1e-9) -> None:
    assert left.perm == right.perm
    np.testing.assert_allclose(left.s, right.s, atol=atol)
    np.testing.assert_allclose(left.t, right.t, atol=atol)


class TestBoundaryPair:
    """Tests for BoundaryPair construction."""

    def test_shape_mismatch(self):
        """A and B must be square and equal in size."""
        with pytest.raises(DimensionError):
            BoundaryPair(np.eye(2), np.eye(3))

    def test_read_only(self):
        """Stored matrices cannot be modified."""
        pair = BoundaryPair(np.eye(2), np.zeros((2, 2)))
        with pytest.raises(ValueError):
            pair.a[0, 0] = 5


class TestAdmissibility:
    """Tests for validate_admissible."""

    def test_dirichlet(self):
        """Dirichlet (I, 0) is admissible."""
        assert validate_admissible(BoundaryPair(np.eye(2), np.zeros((2, 2)))).ok

    def test_rank_tolerance(self):
        """A weak row passes at the default tolerance and fails at a looser one."""
        pair = BoundaryPair(np.diag([1.0, 1e-7]), np.zeros((2, 2)))
        assert validate_admissible(pair).ok
        report = validate_admissible(pair, rank_tol=1e-6)
        assert not report.ok
        assert report.condition == "rank"

    def test_delta_template(self):
        """The delta vertex of strength 2 is admissible."""
        a = -np.array([[2, 0, 0], [-1, 1, 0], [-1, 0, 1]])
        b = [[1, 1, 1], [0, 0, 0], [0, 0, 0]]
        assert validate_admissible(BoundaryPair(a, b)).ok

    def test_rank_failure(self):
        """(0, 0) fails the rank condition."""
        report = validate_admissible(BoundaryPair(np.zeros((2, 2)), np.zeros((2, 2))))
        assert not report.ok
        assert report.condition == "rank"

    def test_hermitian_failure(self):
        """A = I, B = [[0, 1], [0, 0]] fails the Hermitian condition."""
        report = validate_admissible(BoundaryPair(np.eye(2), [[0, 1], [0, 0]]))
        assert not report.ok
        assert report.condition == "hermitian"

    def test_invariant_under_left_multiplication(self, random_vertex, rng):
        """(C A, C B) is admissible whenever (A, B) is."""
        pair = random_vertex(3)
        c = np.eye(3) + 0.2 * rng.normal(size=(3, 3))
        assert validate_admissible(pair.left_multiply(c)).ok


class TestSTForm:
    """Tests for the ST reduction and assembly."""

    def test_dirichlet_and_neumann(self):
        """Dirichlet gives r = 0, Neumann gives S = 0 with r = n."""
        dirichlet = to_st_form(BoundaryPair(np.eye(3), np.zeros((3, 3))))
        assert dirichlet.r == 0
        assert dirichlet.t.shape == (0, 3)
        neumann = to_st_form(BoundaryPair(np.zeros((3, 3)), np.eye(3)))
        assert neumann.r == 3
        np.testing.assert_allclose(neumann.s, 0, atol=1e-12)

    def test_delta_template_matrices(self):
        """n = 3, r_B = 1 assembles to the displayed delta matrices."""
        s, t2, t3 = 2.0, 0.5 + 1j, -1.0
        pair = assemble_boundary(STForm([[s]], [[t2, t3]], (0, 1, 2)))
        expected_a = -np.array(
            [[s, 0, 0], [-np.conj(t2), 1, 0], [-np.conj(t3), 0, 1]], dtype=complex
        )
        expected_b = np.array([[1, t2, t3], [0, 0, 0], [0, 0, 0]], dtype=complex)
        np.testing.assert_allclose(pair.a, expected_a)
        np.testing.assert_allclose(pair.b, expected_b)

    def test_round_trip(self, random_form):
        """Reducing an assembled form returns the same form."""
        for n in (2, 3, 4):
            for r in range(n + 1):
                form = random_form(n, r)
                _same_form(to_st_form(assemble_boundary(form)), form)

    def test_round_trip_with_line_order(self, random_form, rng):
        """A shuffled form is recovered when its order is given as preference."""
        for _ in range(20):
            n = int(rng.integers(2, 6))
            form = random_form(n, perm=tuple(int(i) for i in rng.permutation(n)))
            recovered = to_st_form(assemble_boundary(form), line_order=form.perm)
            _same_form(recovered, form)

    def test_invariant_under_left_multiplication(self, random_form, rng, unitary):
        """(C A, C B) reduces to the same form as (A, B)."""
        for n in (2, 3, 4):
            pair = assemble_boundary(random_form(n))
            c = unitary(n) @ np.diag(rng.uniform(0.5, 2.0, size=n))
            _same_form(to_st_form(pair.left_multiply(c)), to_st_form(pair))

    def test_idempotent(self, random_vertex):
        """Reducing the assembled reduction changes nothing."""
        for n in (2, 3, 4, 5):
            form = to_st_form(random_vertex(n))
            _same_form(to_st_form(assemble_boundary(form), line_order=form.perm), form)

    def test_inadmissible(self):
        """Reduction refuses an inadmissible pair."""
        with pytest.raises(AdmissibilityError):
            to_st_form(BoundaryPair(np.eye(2), [[0, 1], [0, 0]]))

    def test_non_hermitian_s(self):
        """Assembly refuses a non-Hermitian S block."""
        with pytest.raises(ParameterError):
            assemble_boundary(STForm([[0, 1], [2, 0]], np.zeros((2, 0)), (0, 1)))

    def test_bad_perm(self):
        """perm must be a permutation of the lines."""
        with pytest.raises(DimensionError):
            STForm([[1.0]], [[1.0]], (0, 0))


class TestReverseSTForm:
    """Tests for the reverse normal form."""

    def test_two_line_delta_prime(self):
        """Rank-one S = s [[1, c], [c*, |c|^2]] reverses to S-bar = 1/s, T-bar = c."""
        s, c = 4.0, 0.5 - 0.25j
        block = s * np.array([[1, c], [np.conj(c), abs(c) ** 2]])
        pair = assemble_boundary(STForm(block, np.zeros((2, 0)), (0, 1)))
        reverse = to_reverse_st_form(pair)
        assert isinstance(reverse, ReverseSTForm)
        np.testing.assert_allclose(reverse.s, [[1 / s]], atol=1e-12)
        np.testing.assert_allclose(reverse.t, [[c]], atol=1e-12)

    def test_mixed_rank_identification(self):
        """The rank-one mixed vertex reverses to S-bar = (1/s)[[1, t1], [t1*, |t1|^2]]."""
        case = MixedRankCase(s=6.0, c=1 / 3, t1=1 / 3, t2=0.0)
        reverse = to_reverse_st_form(case.boundary(), line_order=(0, 2, 1))
        assert reverse.perm == (0, 2, 1)
        np.testing.assert_allclose(
            reverse.s, (1 / 6) * np.array([[1, 1 / 3], [1 / 3, 1 / 9]]), atol=1e-12
        )
        np.testing.assert_allclose(reverse.t, [[1 / 3], [1 / 9]], atol=1e-12)
        assert case.t3_bar == pytest.approx(1 / 9)

    def test_rank_two_a(self):
        """Full-B vertex with rank-two S reverses to S-bar = G^-1, T-bar = (c, d)."""
        case = RankTwoACase(s=2.0, q=0.5 + 0.5j, r=1.0, c=0.3, d=-0.7j)
        reverse = to_reverse_st_form(case.boundary())
        expected = case.reverse_form()
        np.testing.assert_allclose(reverse.s, expected.s, atol=1e-10)
        np.testing.assert_allclose(reverse.t, expected.t, atol=1e-10)

    def test_assembled_pair_is_swapped(self):
        """A reverse form assembles to the ST template with A and B exchanged."""
        form = STForm([[2.0]], [[1.0, 1.0]], (0, 1, 2))
        direct = assemble_boundary(form)
        reverse = assemble_boundary(ReverseSTForm(form.s, form.t, form.perm))
        np.testing.assert_allclose(reverse.a, direct.b)
        np.testing.assert_allclose(reverse.b, direct.a)


class TestClassify:
    """Tests for rank classification."""

    @pytest.mark.parametrize(
        "name, triple, label",
        [
            ("fig2", (3, 1, 1), CaseLabel.DELTA_FAMILY),
            ("fig4", (2, 2, 1), CaseLabel.MIXED_RANK22),
            ("fig5", (2, 2, 1), CaseLabel.MIXED_RANK22),
            ("fig6", (3, 2, 2), CaseLabel.GENERIC_RANK23),
            ("fig8", (1, 3, 1), CaseLabel.DELTA_PRIME_FAMILY),
            ("fig9", (2, 3, 2), CaseLabel.GENERIC_RANK32),
            ("fig10", (3, 3, 3), CaseLabel.GENERIC_FULL),
        ],
    )
    def test_presets(self, name, triple, label):
        """Every preset lands in its rank family."""
        result = classify(PRESETS[name].case.boundary())
        assert result.triple == triple
        assert result.case_label is label
        assert result.r_a + result.r_b == result.n + result.r_s

    def test_scale_invariant(self):
        """A delta vertex with s = 0 is scale invariant."""
        result = classify(DeltaCase(0.0, (1.0, 1.0)).boundary())
        assert result.triple == (2, 1, 0)
        assert result.case_label is CaseLabel.FT_SCALE_INVARIANT

    @pytest.mark.parametrize("strength", [1e-9, 1e-10])
    def test_borderline_strength(self, strength):
        """A delta strength at the rank threshold still yields a consistent triple."""
        pair = make_delta(3, strength, [1.0, 1.0])
        assert validate_admissible(pair).ok
        result = classify(pair)
        assert result.r_b == 1
        assert result.triple == (2, 1, 0)
        assert result.r_a + result.r_b == result.n + result.r_s

    def test_borderline_strength_warns(self):
        """A strength sitting on the threshold is reported as an ambiguous rank."""
        result = classify(make_delta(3, 1e-9, [1.0, 1.0]))
        assert any("ambiguous" in message for message in result.warnings)

    def test_disjoint(self):
        """Dirichlet and Neumann vertices."""
        assert classify(BoundaryPair(np.eye(3), np.zeros((3, 3)))).case_label is (
            CaseLabel.DIRICHLET_DISJOINT
        )
        assert classify(BoundaryPair(np.zeros((2, 2)), np.eye(2))).case_label is (
            CaseLabel.NEUMANN_DISJOINT
        )

    def test_invariance(self, random_vertex, rng, unitary):
        """The triple survives left multiplication and line relabelling."""
        for _ in range(10):
            pair = random_vertex(4)
            base = classify(pair).triple
            c = unitary(4)
            order = [int(i) for i in rng.permutation(4)]
            assert classify(pair.left_multiply(c)).triple == base
            assert classify(permute_lines(pair, order)).triple == base

    def test_larger_n_has_no_label(self, random_vertex):
        """No family label beyond three lines."""
        assert classify(random_vertex(4)).case_label is None

    def test_case_table(self):
        """Spot checks of the rank table."""
        assert case_label(3, 2, 2) is CaseLabel.MIXED_RANK22
        assert case_label(2, 2, 1) is CaseLabel.DELTA_PRIME_FAMILY
        assert case_label(5, 2, 3) is None
