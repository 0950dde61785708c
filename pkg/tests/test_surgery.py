"""Smith normal form, surgery homology, and the meridian condition."""

import random
from importlib import resources

import pytest
import sympy

from _oracles import assert_valid_snf

from concordance.surgery import (
    AbelianGroupDescription,
    ClassMismatch,
    SurgeryPresentation,
    cobordism_meridian_check,
    first_homology,
    localize,
    presentation_from_text,
    presentation_to_text,
    satellite_cobordism_presentation,
    smith_normal_form,
)


snf_is_valid = assert_valid_snf


class TestSmithNormalForm:
    def test_zero_one_by_one(self):
        U, D, V = smith_normal_form([[0]])
        assert (U, D, V) == ([[1]], [[0]], [[1]])

    def test_coprime_diagonal_merges(self):
        M = [[2, 0], [0, 3]]
        U, D, V = smith_normal_form(M)
        assert snf_is_valid(M, U, D, V) == [1, 6]

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_hyperbolic_pair(self, p):
        M = [[0, p], [p, 0]]
        U, D, V = smith_normal_form(M)
        assert snf_is_valid(M, U, D, V) == [p, p]

    def test_pivot_rule_gives_exact_transforms(self):
        M = [[3, 2], [4, 5]]
        U, D, V = smith_normal_form(M)
        assert snf_is_valid(M, U, D, V) == [1, 7]
        # smallest absolute value is chosen first, so U, D, V are pinned
        U2, D2, V2 = smith_normal_form(M)
        assert (U, D, V) == (U2, D2, V2)

    def test_rectangular(self):
        M = [[2, 4, 4], [-6, 6, 12]]
        U, D, V = smith_normal_form(M)
        assert snf_is_valid(M, U, D, V) == [2, 6]
        Mt = [list(col) for col in zip(*M)]
        U, D, V = smith_normal_form(Mt)
        assert snf_is_valid(Mt, U, D, V) == [2, 6]

    def test_zero_matrix(self):
        M = [[0, 0], [0, 0], [0, 0]]
        U, D, V = smith_normal_form(M)
        assert snf_is_valid(M, U, D, V) == [0, 0]

    def test_ragged_rejected(self):
        with pytest.raises(ValueError, match="unequal"):
            smith_normal_form([[1, 2], [3]])

    def test_random_matrices(self):
        rng = random.Random(20260818)
        for _ in range(200):
            m = rng.randint(1, 8)
            n = rng.randint(1, 8)
            M = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            U, D, V = smith_normal_form(M)
            diag = snf_is_valid(M, U, D, V)
            assert len([d for d in diag if d]) == sympy.Matrix(M).rank()


TREFOIL_SURGERY = [[0]]
UNLINK2 = [[0, 0], [0, 0]]
HOPF = [[0, 1], [1, 0]]


class TestSurgeryPresentation:
    def test_validation(self):
        with pytest.raises(ValueError, match="square"):
            SurgeryPresentation([[0, 1]], {})
        with pytest.raises(ValueError, match=r"symmetric at \(1, 0\)"):
            SurgeryPresentation([[0, 1], [2, 0]], {})
        with pytest.raises(ValueError, match="length 1, matrix has 2"):
            SurgeryPresentation(UNLINK2, {"mu": (1,)})

    def test_repr(self):
        S = SurgeryPresentation(HOPF, {"a": (1, 0)}, name="hopf")
        assert "hopf" in repr(S)
        assert "2x2" in repr(S)


class TestFirstHomology:
    def test_zero_surgery_on_a_knot(self):
        S = SurgeryPresentation(TREFOIL_SURGERY, {"mu": (1,)})
        G = first_homology(S)
        assert (G.rank, G.torsion) == (1, ())
        assert G.images["mu"] == (1,)
        assert G.describe() == "Z"

    def test_zero_framed_unlink(self):
        G = first_homology(SurgeryPresentation(UNLINK2, {}))
        assert (G.rank, G.torsion) == (2, ())
        assert G.describe() == "Z + Z"

    def test_hopf_link_is_trivial(self):
        S = SurgeryPresentation(HOPF, {"a": (1, 0), "b": (0, 1)})
        G = first_homology(S)
        assert (G.rank, G.torsion) == (0, ())
        assert G.images["a"] == ()
        assert G.describe() == "0"

    def test_lens_space(self):
        S = SurgeryPresentation([[4]], {"mu": (1,), "five": (5,)})
        G = first_homology(S)
        assert (G.rank, G.torsion) == (0, (4,))
        # torsion coordinates are reduced into [0, d)
        assert G.images["mu"] == (1,)
        assert G.images["five"] == (1,)
        assert G.describe() == "Z/4"

    def test_mixed_group(self):
        S = SurgeryPresentation([[12, 0], [0, 0]], {"x": (5, 7)})
        G = first_homology(S)
        assert (G.rank, G.torsion) == (1, (12,))
        assert G.images["x"] == (5, 7)
        assert G.describe() == "Z/12 + Z"

    def test_chain_is_enforced_by_description_type(self):
        with pytest.raises(ValueError, match="divisibility chain"):
            AbelianGroupDescription(rank=0, torsion=(4, 6), images={})
        with pytest.raises(ValueError, match="< 2"):
            AbelianGroupDescription(rank=0, torsion=(1,), images={})

    def test_random_against_rank_and_determinant(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 6)
            L = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(i + 1):
                    L[i][j] = L[j][i] = rng.randint(-5, 5)
            G = first_homology(SurgeryPresentation(L, {}))
            Lm = sympy.Matrix(L)
            assert G.rank == n - Lm.rank()
            if G.rank == 0:
                order = 1
                for d in G.torsion:
                    order *= d
                assert order == abs(Lm.det())


class TestLocalize:
    def test_strips_p_primary_part(self):
        S = SurgeryPresentation([[12, 0], [0, 0]], {"x": (5, 7)})
        G = first_homology(S)
        G2 = localize(G, 2)
        assert (G2.rank, G2.torsion) == (1, (3,))
        assert G2.images["x"] == (5 % 3, 7)
        G3 = localize(G, 3)
        assert (G3.rank, G3.torsion) == (1, (4,))
        assert G3.images["x"] == (1, 7)

    def test_factor_can_vanish(self):
        G = AbelianGroupDescription(rank=0, torsion=(8,), images={"x": (3,)})
        G2 = localize(G, 2)
        assert (G2.rank, G2.torsion) == (0, ())
        assert G2.images["x"] == ()

    def test_identity_and_idempotence(self):
        G = AbelianGroupDescription(rank=1, torsion=(6, 12), images={"x": (1, 5, -2)})
        assert localize(G, 1) is G
        G2 = localize(G, 2)
        assert localize(G2, 2) == G2
        assert (G2.rank, G2.torsion) == (1, (3, 3))

    def test_validation(self):
        G = AbelianGroupDescription(rank=0, torsion=(), images={})
        for bad in (0, -2, 2.0):
            with pytest.raises(ValueError, match="p >= 1"):
                localize(G, bad)


class TestMeridianCheck:
    @pytest.mark.parametrize("p", [1, 2, 3, 5])
    def test_satellite_cobordism_passes(self, p):
        S = satellite_cobordism_presentation(p)
        result = cobordism_meridian_check(S, "mu_K", "mu_Ptilde", p)
        assert result.homology.describe() == "Z"
        assert result.homology.images["mu_K"] == (p,)
        assert result.homology.images["mu_Ptilde"] == (1,)
        assert any("free rank-one summand" in note for note in result.notes)

    def test_both_classes_null_holds_trivially(self):
        S = SurgeryPresentation(HOPF, {"mu_0": (1, 0), "mu_1": (1, 0)})
        result = cobordism_meridian_check(S, "mu_0", "mu_1", 3)
        assert result.homology.describe() == "0"
        assert any("trivially" in note for note in result.notes)

    def test_integral_mismatch_carries_residual(self):
        S = SurgeryPresentation([[4, 0], [0, 0]], {"a": (1, 0), "b": (0, 1)})
        with pytest.raises(ClassMismatch, match="residual") as info:
            cobordism_meridian_check(S, "a", "b", 2)
        assert info.value.residual == (1, -2)

    def test_torsion_component_fails(self):
        S = SurgeryPresentation([[9, 0], [0, 0]], {"x": (6, 2), "y": (3, 1)})
        with pytest.raises(ClassMismatch, match="torsion components"):
            cobordism_meridian_check(S, "x", "y", 2)

    def test_content_must_be_a_power_of_p(self):
        S = SurgeryPresentation([[0]], {"x": (6,), "y": (2,)})
        with pytest.raises(ClassMismatch, match="content 2"):
            cobordism_meridian_check(S, "x", "y", 3)
        # a content that is a power of p becomes a unit once p is inverted
        S = SurgeryPresentation([[0]], {"x": (4,), "y": (2,)})
        result = cobordism_meridian_check(S, "x", "y", 2)
        assert any("summand" in note for note in result.notes)

    def test_unknown_class_and_bad_p(self):
        S = satellite_cobordism_presentation(2)
        with pytest.raises(ValueError, match="no class named 'mu_X'"):
            cobordism_meridian_check(S, "mu_X", "mu_Ptilde", 2)
        with pytest.raises(ValueError, match="p >= 1"):
            cobordism_meridian_check(S, "mu_K", "mu_Ptilde", 0)
        with pytest.raises(ValueError, match="p >= 1"):
            satellite_cobordism_presentation(-1)

    @pytest.mark.parametrize("p", [2, 3])
    def test_permutation_invariance(self, p):
        import itertools

        S = satellite_cobordism_presentation(p)
        n = S.size
        for perm in itertools.permutations(range(n)):
            matrix = [[S.matrix[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
            classes = {
                label: tuple(vec[perm[i]] for i in range(n))
                for label, vec in S.classes.items()
            }
            result = cobordism_meridian_check(
                SurgeryPresentation(matrix, classes), "mu_K", "mu_Ptilde", p
            )
            assert result.homology.describe() == "Z"

    def test_permutation_invariance_of_failure(self):
        S = SurgeryPresentation([[4, 0], [0, 0]], {"a": (1, 0), "b": (0, 1)})
        flipped = SurgeryPresentation([[0, 0], [0, 4]], {"a": (0, 1), "b": (1, 0)})
        for pres in (S, flipped):
            with pytest.raises(ClassMismatch):
                cobordism_meridian_check(pres, "a", "b", 2)


class TestPresentationFiles:
    def test_round_trip(self):
        S = satellite_cobordism_presentation(3)
        S2 = presentation_from_text(presentation_to_text(S))
        assert S2.matrix == S.matrix
        assert S2.classes == S.classes

    def test_packaged_presentation_matches_builder(self):
        path = resources.files("concordance") / "_data" / "satellite-cobordism-p2.pres"
        S = presentation_from_text(path.read_text())
        built = satellite_cobordism_presentation(2)
        assert S.matrix == built.matrix
        assert S.classes == built.classes

    def test_comments_and_blanks_ignored(self):
        S = presentation_from_text(
            "# header\n\nM 1   # inline\n0\n\nC mu 1  # class\n"
        )
        assert S.matrix == [[0]]
        assert S.classes == {"mu": (1,)}

    @pytest.mark.parametrize(
        "text, message",
        [
            ("Q 1\n", "line 1: unknown record 'Q'"),
            ("M x\n", "M needs a size"),
            ("M 2\n0 0\n", "matrix needs 2 rows"),
            ("M 2\n0 0 0\n0 0\n", "line 2: expected 2 entries, got 3"),
            ("M 1\na\n", "matrix rows are integers"),
            ("M 1\n0\nC\n", "C needs a name"),
            ("M 1\n0\nC mu x\n", "class coordinates are integers"),
            ("M 1\n0\nM 1\n0\n", "second matrix block"),
            ("C mu 1\n", "no matrix block"),
            ("M 2\n0 5\n5 1\nC mu 1\n", "length 1, matrix has 2"),
        ],
    )
    def test_parse_errors(self, text, message):
        with pytest.raises(ValueError, match=message):
            presentation_from_text(text)
