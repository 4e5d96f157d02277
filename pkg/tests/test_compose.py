"""Moebius maps and the composition pipeline for the 12/60/72-edge presets."""

from fractions import Fraction

import pytest

from fullerene_belyi.exact import GaussRat, UniPoly
from fullerene_belyi.moebius import (INFINITY, Moebius, beta6_ratmap,
                                     beta12_ratmap, beta60_ratmap,
                                     beta72_ratmap, build_beta12, build_beta60,
                                     build_beta72, moebius_from_three_points,
                                     mu1, mu2, ratmap_compose_moebius,
                                     schwarz_check, schwarz_forms)


def rand_moebius(rng):
    while True:
        entries = [GaussRat.of(rng.randint(-5, 5), rng.randint(-5, 5))
                   for _ in range(4)]
        det = entries[0] * entries[3] - entries[1] * entries[2]
        if not det.is_zero:
            return Moebius.of(*entries)


# ---------------------------------------------------------------------------
# Moebius maps
# ---------------------------------------------------------------------------


def test_mu1_matches_printed_formula():
    printed = Moebius.of(GaussRat.of(0, -125), GaussRat.of(0, 125),
                         GaussRat.of(2, 11), GaussRat.of(2, -11))
    assert mu1() == printed
    assert mu1().apply(GaussRat.of(0)) == GaussRat.of(-11, 2)
    assert mu1().apply(GaussRat.of(1)) == GaussRat.of(0)
    assert mu1().apply(INFINITY) == GaussRat.of(-11, -2)


def test_mu2_matches_printed_formula():
    printed = Moebius.of(GaussRat.of(0, 1), GaussRat.of(-1),
                         GaussRat.of(0, 1), GaussRat.of(1))
    assert mu2() == printed
    assert mu2().apply(GaussRat.of(0)) == GaussRat.of(-1)
    assert mu2().apply(INFINITY) == GaussRat.of(1)
    assert mu2().apply(GaussRat.of(0, 1)) is INFINITY


def test_three_point_identity():
    m = moebius_from_three_points((0, 1, INFINITY), (0, 1, INFINITY))
    assert m == Moebius.identity()


def test_three_point_rejects_coincident():
    with pytest.raises(ValueError):
        moebius_from_three_points((0, 0, 1), (0, 1, INFINITY))


def test_three_point_random_correspondence(rng):
    for _ in range(40):
        pts = set()
        while len(pts) < 6:
            pts.add((rng.randint(-9, 9), rng.randint(-9, 9)))
        pts = [GaussRat.of(a, b) for a, b in pts]
        src, dst = pts[:3], pts[3:]
        m = moebius_from_three_points(src, dst)
        for s, d in zip(src, dst):
            assert m.apply(s) == d


def test_moebius_composition_is_matrix_product(rng):
    for _ in range(60):
        m1_, m2_ = rand_moebius(rng), rand_moebius(rng)
        composed = m1_.compose(m2_)
        for x in (GaussRat.of(2), GaussRat.of(0, 1), GaussRat.of(-3, 7)):
            inner = m2_.apply(x)
            assert composed.apply(x) == (m1_.apply(inner))
    a, b, c = rand_moebius(rng), rand_moebius(rng), rand_moebius(rng)
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


def test_moebius_inverse():
    m = mu1()
    assert m.compose(m.inverse()) == Moebius.identity()


# ---------------------------------------------------------------------------
# rational-map composition
# ---------------------------------------------------------------------------


def test_compose_with_identity_is_identity():
    f = beta6_ratmap()
    assert ratmap_compose_moebius(f, Moebius.identity(), "pre") == f


def test_compose_with_inverse_cancels(rng):
    f = beta6_ratmap()
    m = rand_moebius(rng)
    g = ratmap_compose_moebius(ratmap_compose_moebius(f, m, "pre"),
                               m.inverse(), "pre")
    assert g == f


def test_post_composition():
    # beta - 1 via the map z -> z - 1 applied after beta
    f = beta6_ratmap()
    shifted = ratmap_compose_moebius(f, Moebius.of(1, -1, 0, 1), "post")
    assert shifted.num.monic() == f.one_numerator().monic()


# ---------------------------------------------------------------------------
# the presets, coefficient-exactly
# ---------------------------------------------------------------------------


QUARTIC = UniPoly.from_terms({4: 1, 3: 228, 2: 494, 1: -228, 0: 1})
PENTAGON12 = UniPoly.from_terms({2: 1, 1: -11, 0: -1})


def test_beta12_pipeline_exact():
    f = beta12_ratmap()
    assert f.k == GaussRat.of(Fraction(1, 1728))
    assert f.num == QUARTIC ** 3
    assert f.den == UniPoly.x() * PENTAGON12 ** 5
    one = f.one_numerator().scale(GaussRat.of(1728))
    expected = (UniPoly.from_terms({2: 1, 0: 1}) ** 2
                * UniPoly.from_terms({4: 1, 3: -522, 2: -10006, 1: 522, 0: 1}) ** 2)
    assert one == expected


def test_beta12_one_side_factors():
    beta = build_beta12()
    (factor, exponent), = beta.one_factors
    assert exponent == 2
    assert factor == (UniPoly.from_terms({2: 1, 0: 1})
                      * UniPoly.from_terms({4: 1, 3: -522, 2: -10006, 1: 522, 0: 1}))


def test_beta60_exact(icosahedral_data):
    P, V, M, k = icosahedral_data
    f = beta60_ratmap()
    assert f.k == GaussRat.of(Fraction(1, 1728))
    assert f.num == V ** 3
    assert f.den == UniPoly.from_terms({5: 1}) * UniPoly.from_terms(
        {10: 1, 5: -11, 0: -1}) ** 5
    assert f.den == P ** 5


def test_beta72_exact():
    f = beta72_ratmap()
    V72 = UniPoly.from_terms({24: 1, 18: 228, 12: 494, 6: -228, 0: 1})
    P72 = UniPoly.from_terms({12: 1, 6: -11, 0: -1})
    assert f.num == V72 ** 3
    assert f.den == UniPoly.from_terms({6: 1}) * P72 ** 5


def test_substitution_matches_composition_coefficientwise():
    base = beta12_ratmap()
    for n, preset in ((5, beta60_ratmap()), (6, beta72_ratmap())):
        direct = base.substitute_power(n)
        assert direct == preset
        assert direct.degree == base.degree * n
        assert direct.num.coeffs == preset.num.coeffs


def test_preset_passports():
    assert str(build_beta12().verify()) == "(3^4 | 2^6 | 5^2 1^2)"
    assert str(build_beta60().verify()) == "(3^20 | 2^30 | 5^12)"
    assert str(build_beta72().verify()) == "(3^24 | 2^36 | 5^12 6^2)"


def test_beta12_substitute_power_example():
    # the degree-12 map with z -> z^5 is the degree-60 preset
    assert beta12_ratmap().substitute_power(5) == beta60_ratmap()


def test_passport_lift_relation_for_presets():
    # z -> z^n repeats every finite part away from 0 n times; the parts
    # sitting at 0 and at infinity are multiplied by n in place
    base = build_beta12().verify()
    for n, lifted_beta in ((5, build_beta60()), (6, build_beta72())):
        lifted = lifted_beta.verify()
        assert lifted.black == tuple(sorted(
            list(base.black) * n, reverse=True))
        assert lifted.white == tuple(sorted(
            list(base.white) * n, reverse=True))
        # faces of the base: two ring parts of 5 away from 0, the simple
        # pole at 0, and the simple pole at infinity
        expected_faces = sorted([5] * (2 * n) + [n, n], reverse=True)
        assert lifted.faces == tuple(expected_faces)


# ---------------------------------------------------------------------------
# Schwarz forms
# ---------------------------------------------------------------------------


def test_schwarz_identity_and_preset_match():
    assert schwarz_check()


def test_schwarz_forms_shape():
    phi12, phi20, phi30 = schwarz_forms()
    assert phi12 == UniPoly.from_terms({1: 1, 6: -11, 11: -1})
    assert phi20 ** 3 - phi30 ** 2 == (phi12 ** 5).scale(1728)


def test_schwarz_misprint_regression():
    # 1005 in place of 10005 (a known book misprint) must break the identity
    bad = UniPoly.from_terms(
        {0: 1, 5: -522, 10: -1005, 20: -1005, 25: 522, 30: 1})
    assert not schwarz_check(phi30_override=bad)
    bad_one = UniPoly.from_terms(
        {0: 1, 5: -522, 10: -1005, 20: -10005, 25: 522, 30: 1})
    assert not schwarz_check(phi30_override=bad_one)
