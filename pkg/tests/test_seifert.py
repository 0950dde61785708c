"""Seifert-matrix invariants: frozen small-knot values, a numpy
eigenvalue oracle, and the algebraic symmetries of signatures."""

import random
from fractions import Fraction

import numpy as np
import pytest

from concordance.laurent import LaurentPoly, doteq, reciprocal
from concordance.seifert import (
    OmegaIsOne,
    RootOfUnity,
    SeifertMatrix,
    SingularAtOmega,
    alexander,
    block_sum,
    levine_tristram,
    mirror,
    signature_function,
)

TREFOIL = SeifertMatrix([[-1, 1], [0, -1]], name="right-handed trefoil")
FIGURE_EIGHT = SeifertMatrix([[-1, 1], [0, 1]], name="figure-eight")
TWIST3 = SeifertMatrix([[-1, 1], [0, 3]], name="3-twist knot")
UNKNOT = SeifertMatrix([], name="unknot")


def test_construction_validates():
    with pytest.raises(ValueError):
        SeifertMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        SeifertMatrix([[0, 0], [0, 0]])
    with pytest.raises(ValueError):
        SeifertMatrix([[1]])  # odd size cannot satisfy the skew condition
    with pytest.raises(TypeError):
        SeifertMatrix([[0.5, 1], [0, 1]])
    with pytest.raises(TypeError):
        SeifertMatrix([[True, 1], [0, 1]])
    assert TREFOIL.genus == 1 and UNKNOT.genus == 0
    assert TREFOIL[0, 1] == 1


def test_alexander_frozen_values():
    assert str(alexander(TREFOIL)) == "1*t^1 - 1 + 1*t^-1"
    assert str(alexander(FIGURE_EIGHT)) == "1*t^1 - 3 + 1*t^-1"
    assert str(alexander(TWIST3)) == "3*t^1 - 7 + 3*t^-1"
    assert alexander(UNKNOT) == LaurentPoly.one()


def test_alexander_normal_form_properties():
    for v in (TREFOIL, FIGURE_EIGHT, TWIST3, block_sum(TREFOIL, TWIST3)):
        d = alexander(v)
        assert reciprocal(d) == d
        assert doteq(d, reciprocal(d))
        assert abs(d.evaluate(Fraction(1))) == 1


def test_root_of_unity_normalization():
    assert RootOfUnity(2, 4) == RootOfUnity(1, 2)
    assert RootOfUnity(-1, 6) == RootOfUnity(5, 6)
    assert RootOfUnity(5, 5).is_one
    assert RootOfUnity(1, 3).power(2) == RootOfUnity(2, 3)
    assert RootOfUnity(1, 3).power(3).is_one
    assert RootOfUnity(1, 7).conjugate() == RootOfUnity(6, 7)
    assert RootOfUnity.from_fraction(Fraction(3, 12)) == RootOfUnity(1, 4)
    assert str(RootOfUnity(1, 2)) == "e^(2*pi*i*1/2)"
    with pytest.raises(ValueError):
        RootOfUnity(1, 0)


def test_levine_tristram_frozen_values():
    assert levine_tristram(TREFOIL, RootOfUnity(1, 2)) == -2
    assert levine_tristram(FIGURE_EIGHT, RootOfUnity(1, 2)) == 0
    assert levine_tristram(TREFOIL, RootOfUnity(1, 7)) == 0
    assert levine_tristram(TREFOIL, RootOfUnity(2, 7)) == -2
    assert levine_tristram(TREFOIL, RootOfUnity(6, 7)) == 0
    assert levine_tristram(UNKNOT, RootOfUnity(1, 2)) == 0


def test_levine_tristram_error_cases():
    with pytest.raises(OmegaIsOne):
        levine_tristram(TREFOIL, RootOfUnity(0, 1))
    # the trefoil Alexander polynomial vanishes at order-6 roots
    with pytest.raises(SingularAtOmega):
        levine_tristram(TREFOIL, RootOfUnity(1, 6))
    with pytest.raises(SingularAtOmega):
        levine_tristram(TREFOIL, RootOfUnity(5, 6))


def test_signature_function_trefoil_structure():
    sig = signature_function(TREFOIL)
    arcs = sig.arcs()
    assert [v for _, _, v in arcs] == [0, -2, 0]
    assert arcs[0][0] == 0.0 and arcs[-1][1] == 1.0
    assert abs(arcs[0][1] - 1 / 6) < 1e-9
    assert abs(arcs[1][1] - 5 / 6) < 1e-9
    jumps = sig.jumps()
    assert len(jumps) == 1
    assert abs(jumps[0][0] - 1 / 6) < 1e-9 and jumps[0][1] == -2
    assert sig.evaluate(Fraction(1, 3)) == -2
    assert sig.evaluate(RootOfUnity(1, 2)) == -2
    assert sig.evaluate(Fraction(9, 10)) == 0
    assert sig.evaluate(0) == 0
    assert sig.is_jump(Fraction(1, 6)) and sig.is_jump(Fraction(5, 6))
    assert not sig.is_jump(Fraction(1, 7))
    with pytest.raises(SingularAtOmega):
        sig.evaluate(Fraction(1, 6))


def test_signature_function_no_jump_cases():
    assert signature_function(FIGURE_EIGHT).is_identically_zero()
    assert signature_function(TWIST3).is_identically_zero()
    assert signature_function(UNKNOT).arcs() == [(0.0, 1.0, 0)]


def test_block_sum_and_mirror_frozen_values():
    granny = block_sum(TREFOIL, TREFOIL)
    square = block_sum(TREFOIL, mirror(TREFOIL))
    assert levine_tristram(granny, RootOfUnity(1, 2)) == -4
    assert levine_tristram(mirror(TREFOIL), RootOfUnity(1, 2)) == 2
    assert signature_function(square).is_identically_zero()
    # jump markers survive even when the values cancel
    assert len(signature_function(square).jumps()) == 1
    sig_granny = signature_function(granny)
    assert [v for _, _, v in sig_granny.arcs()] == [0, -4, 0]


def _lt_oracle(v, a, b):
    om = np.exp(2j * np.pi * a / b)
    m = (1 - om) * np.array(v.entries) + (1 - om.conjugate()) * np.array(v.entries).T
    eigs = np.linalg.eigvalsh(m)
    assert min(abs(e) for e in eigs) > 1e-9
    return int(sum(1 for e in eigs if e > 0) - sum(1 for e in eigs if e < 0))


def test_levine_tristram_matches_numpy_oracle():
    rng = random.Random(97)
    mats = [TREFOIL, FIGURE_EIGHT, TWIST3, block_sum(TREFOIL, FIGURE_EIGHT)]
    sigs = [signature_function(v) for v in mats]
    checked = 0
    while checked < 60:
        v, sig = mats[rng.randrange(len(mats))], None
        i = mats.index(v)
        sig = sigs[i]
        b = rng.randint(2, 60)
        a = rng.randint(1, b - 1)
        q = Fraction(a, b)
        if sig.is_jump(q):
            continue
        got = levine_tristram(v, RootOfUnity(a, b))
        assert got == _lt_oracle(v, q.numerator, q.denominator)
        assert got == sig.evaluate(q)
        checked += 1


def _random_seifert(rng, genus):
    n = 2 * genus
    s = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            s[i][j] = s[j][i] = rng.randint(-2, 2)
    for g in range(genus):
        s[2 * g][2 * g + 1] += 1
    return SeifertMatrix(s)


def test_signature_symmetries_on_random_matrices():
    rng = random.Random(4171)
    for _ in range(25):
        v1 = _random_seifert(rng, rng.randint(1, 2))
        v2 = _random_seifert(rng, 1)
        b = rng.choice([3, 4, 5, 7, 8, 9, 11])
        a = rng.randint(1, b - 1)
        om = RootOfUnity(a, b)
        try:
            s1 = levine_tristram(v1, om)
            s2 = levine_tristram(v2, om)
            s12 = levine_tristram(block_sum(v1, v2), om)
            sm = levine_tristram(mirror(v1), om)
            sc = levine_tristram(v1, om.conjugate())
        except SingularAtOmega:
            continue
        assert s1 % 2 == 0
        assert s12 == s1 + s2
        assert sm == -s1
        assert sc == s1


def test_congruence_invariance_of_signature():
    # V and P V P^T present the same form, so signatures agree
    rng = random.Random(555)
    for _ in range(10):
        v = _random_seifert(rng, 2)
        n = v.size
        p = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for _ in range(6):
            i, j = rng.randrange(n), rng.randrange(n)
            if i != j:
                c = rng.randint(-2, 2)
                for k in range(n):
                    p[i][k] += c * p[j][k]
        w = [
            [
                sum(p[i][a] * v.entries[a][bb] * p[j][bb] for a in range(n) for bb in range(n))
                for j in range(n)
            ]
            for i in range(n)
        ]
        vw = SeifertMatrix(w)
        om = RootOfUnity(rng.randint(1, 10), 11)
        try:
            assert levine_tristram(v, om) == levine_tristram(vw, om)
        except SingularAtOmega:
            continue


def test_dense_sampling_agrees_with_arc_values():
    # 100 interior rational samples per arc, evaluated both through the
    # step function and through a fresh Hermitian signature
    for v in (TREFOIL, FIGURE_EIGHT, block_sum(TREFOIL, TREFOIL)):
        sig = signature_function(v)
        for lo, hi, val in sig.arcs():
            n_grid = 1260
            ks = [k for k in range(1, n_grid) if lo < k / n_grid < hi]
            step = max(1, len(ks) // 100)
            picked = ks[::step][:100]
            assert len(picked) >= 100 or (hi - lo) < 0.1
            for k in picked:
                q = Fraction(k, n_grid)
                if sig.is_jump(q):
                    continue
                assert sig.evaluate(q) == val
                assert levine_tristram(v, RootOfUnity.from_fraction(q)) == val


def test_signature_function_values_always_even():
    rng = random.Random(31)
    for _ in range(6):
        v = _random_seifert(rng, rng.randint(1, 2))
        sig = signature_function(v)
        assert all(val % 2 == 0 for _, _, val in sig.arcs())
