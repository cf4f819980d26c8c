"""Generator catalog, inner-automorphism decisions, orders, curve orbits."""

import random

import pytest

from mcgverify.errors import GenusMismatch
from mcgverify.homology import abelianize, matrix_identity, matrix_mul
from mcgverify.mcg import (
    Inconclusive,
    Inner,
    NotInner,
    build_catalog,
    compose,
    crosscap_slide,
    curve_class,
    curve_image,
    evaluate,
    get_catalog,
    identity_automorphism,
    inverse_word,
    is_identity,
    is_inner,
    mcg_equal,
    order_of,
    talpha,
    tbeta,
    teps,
    transposition,
    word_power,
)
from mcgverify.words import get_presentation, inverse, is_trivial, mul

from conftest import random_word


@pytest.fixture(scope="module", params=[3, 4, 5, 6])
def catalog(request):
    return get_catalog(request.param)


def all_symbols(genus):
    syms = [talpha(i, s) for i in range(1, genus) for s in (1, -1)]
    syms += [transposition(i, s) for i in range(1, genus) for s in (1, -1)]
    syms += [crosscap_slide(1), crosscap_slide(-1), teps(1), teps(-1)]
    if genus >= 4:
        syms += [tbeta(1), tbeta(-1)]
    return syms


# ---------------------------------------------------------------------------
# catalog construction


@pytest.mark.parametrize("genus", range(3, 10))
def test_build_catalog_validates(genus):
    build_catalog(genus)


def test_generator_inverses_exact(catalog):
    ident = identity_automorphism(catalog.genus)
    for sym in catalog.symbols():
        kind, idx, _ = sym
        a = catalog.automorphism(sym)
        b = catalog.automorphism((kind, idx, -1))
        assert compose(a, b) == ident
        assert compose(b, a) == ident


def test_braid_relation_up_to_inner():
    cat = get_catalog(5)
    w1 = (talpha(1), talpha(2), talpha(1))
    w2 = (talpha(2), talpha(1), talpha(2))
    assert mcg_equal(cat, w1, w2) is True


def test_distant_twists_commute():
    cat = get_catalog(5)
    assert mcg_equal(cat, (talpha(1), talpha(3)), (talpha(3), talpha(1))) is True


def test_locality_disjoint_support():
    cat = get_catalog(5)
    a3 = curve_class(cat, cat.curves["a3"])
    assert curve_image(cat, (transposition(1),), a3) == a3


# ---------------------------------------------------------------------------
# compose / evaluate


def test_compose_identity(catalog):
    ident = identity_automorphism(catalog.genus)
    a = catalog.automorphism(talpha(1))
    assert compose(ident, a) == a
    assert compose(a, ident) == a


def test_compose_genus_mismatch():
    with pytest.raises(GenusMismatch):
        compose(identity_automorphism(3), identity_automorphism(4))


def test_evaluate_empty_is_identity(catalog):
    assert is_identity(evaluate(catalog, ()))


def test_evaluate_single_symbol(catalog):
    assert evaluate(catalog, (talpha(1),)) == catalog.automorphism(talpha(1))


def test_evaluate_group_level_homomorphism(rng):
    """evaluate(w1 w2) and compose(evaluate(w1), evaluate(w2)) define the
    same automorphism: every image pair is equal as a group element.
    (Reduced spellings differ occasionally, since reduced forms of a
    surface-group element are not unique.)"""
    for genus in (3, 5):
        cat = get_catalog(genus)
        pres = get_presentation(genus)
        syms = all_symbols(genus)
        for _ in range(120):
            w1 = tuple(rng.choice(syms) for _ in range(rng.randrange(0, 5)))
            w2 = tuple(rng.choice(syms) for _ in range(rng.randrange(0, 5)))
            a = evaluate(cat, w1 + w2)
            b = compose(evaluate(cat, w1), evaluate(cat, w2))
            for x, y in zip(a.images, b.images):
                assert is_trivial(pres, mul(x, inverse(y)))


def test_compose_associative_at_group_level(rng):
    cat = get_catalog(4)
    pres = get_presentation(4)
    syms = all_symbols(4)
    for _ in range(80):
        a, b, c = (evaluate(cat, (rng.choice(syms),)) for _ in range(3))
        lhs = compose(compose(a, b), c)
        rhs = compose(a, compose(b, c))
        for x, y in zip(lhs.images, rhs.images):
            assert is_trivial(pres, mul(x, inverse(y)))


# ---------------------------------------------------------------------------
# inner automorphisms


def test_is_inner_conjugation_by_construction(rng):
    pres = get_presentation(4)
    for _ in range(40):
        w = random_word(rng, 4, 6)
        auto = type(identity_automorphism(4))(
            4, [mul(w, (i,), inverse(w)) for i in range(1, 5)]
        )
        status = is_inner(pres, auto)
        assert isinstance(status, Inner)
        for i in range(1, 5):
            assert is_trivial(
                pres, mul(status.witness, (i,), inverse(status.witness), inverse(auto.images[i - 1]))
            )


def test_is_inner_rejects_twist():
    cat = get_catalog(4)
    pres = get_presentation(4)
    assert isinstance(is_inner(pres, cat.automorphism(talpha(1))), NotInner)


def test_u2_squared_inner_in_genus3():
    cat = get_catalog(3)
    pres = get_presentation(3)
    u2 = cat.automorphism(transposition(2))
    assert isinstance(is_inner(pres, u2), NotInner)
    assert isinstance(is_inner(pres, compose(u2, u2)), Inner)


def test_rotation_powers_genus6():
    cat = get_catalog(6)
    pres = get_presentation(6)
    r = evaluate(cat, tuple(transposition(i) for i in range(1, 6)))
    power = identity_automorphism(6)
    for n in range(1, 6):
        power = compose(r, power)
        assert isinstance(is_inner(pres, power), NotInner), n
    power = compose(r, power)
    assert isinstance(is_inner(pres, power), Inner)


# ---------------------------------------------------------------------------
# orders


def test_order_examples_even_genus():
    cat = get_catalog(6)
    s = tuple(talpha(i) for i in range(1, 6))
    assert order_of(cat, s, 24) == 6
    sp = (talpha(1),) + s
    assert order_of(cat, sp, 24) == 5


def test_order_examples_odd_genus():
    cat = get_catalog(5)
    s = tuple(talpha(i) for i in range(1, 5))
    assert order_of(cat, s, 20) == 10
    sp = (talpha(1),) + s
    assert order_of(cat, sp, 20) == 8
    assert order_of(cat, s + (tbeta(),), 20) == 6


def test_order_of_identity_word(catalog):
    assert order_of(catalog, (), 4) == 1


def test_order_of_infinite_order_twist():
    from mcgverify.mcg import InfiniteWithinBound

    cat = get_catalog(4)
    result = order_of(cat, (talpha(1),), 16)
    assert isinstance(result, InfiniteWithinBound)
    assert result.bound == 16


def test_order_consistency_with_homology():
    cat = get_catalog(5)
    for word, n in [
        (tuple(transposition(i) for i in range(1, 5)), 5),
        (tuple(talpha(i) for i in range(1, 5)), 10),
    ]:
        assert order_of(cat, word, 24) == n
        m = abelianize(evaluate(cat, word))
        assert m.power(n).is_identity()


# ---------------------------------------------------------------------------
# identities


def test_chain_power_identity():
    for g in (4, 5, 6):
        cat = get_catalog(g)
        s = tuple(talpha(i) for i in range(1, g))
        sp = (talpha(1),) + s
        assert mcg_equal(cat, word_power(sp, g - 1), word_power(s, g)) is True


def test_talpha1_identity_genus5():
    cat = get_catalog(5)
    s = tuple(talpha(i) for i in range(1, 5))
    sp = (talpha(1),) + s
    assert mcg_equal(cat, (talpha(1),), sp + inverse_word(s)) is True


def test_talpha4_conjugation_identity_genus5():
    cat = get_catalog(5)
    stb = tuple(talpha(i) for i in range(1, 5)) + (tbeta(),)
    rhs = inverse_word(stb) + (tbeta(),) + stb
    assert mcg_equal(cat, (talpha(4),), rhs) is True


def test_mcg_equal_reflexive(catalog):
    w = (talpha(1), transposition(1))
    assert mcg_equal(catalog, w, w) is True


def test_mcg_equal_distinguishes():
    cat = get_catalog(5)
    assert mcg_equal(cat, (talpha(1),), (talpha(2),)) is False


# ---------------------------------------------------------------------------
# curves


def test_curves_equal_unoriented(catalog):
    pres = catalog.presentation
    a = curve_class(catalog, (1, 2))
    b = curve_class(catalog, inverse((1, 2)))
    assert a == b


def test_curves_distinct(catalog):
    assert curve_class(catalog, (1, 2)) != curve_class(catalog, (2, 3))


def test_s_and_r_shift_chain_curves():
    for g in (5, 6):
        cat = get_catalog(g)
        s = tuple(talpha(i) for i in range(1, g))
        r = tuple(transposition(i) for i in range(1, g))
        for i in range(1, g - 1):
            start = curve_class(cat, cat.curves[f"a{i}"])
            target = curve_class(cat, cat.curves[f"a{i+1}"])
            assert curve_image(cat, s, start) == target
            assert curve_image(cat, r, start) == target


def test_x_claims_genus6():
    cat = get_catalog(6)
    x = (crosscap_slide(-1), talpha(2), talpha(3), talpha(4), tbeta())
    a4 = curve_class(cat, cat.curves["a4"])
    assert curve_image(cat, x, a4) == curve_class(cat, cat.curves["b"])
    a2 = curve_class(cat, cat.curves["a2"])
    assert curve_image(cat, x, a2) == curve_class(cat, cat.curves["a3"])
    a3 = curve_class(cat, cat.curves["a3"])
    assert curve_image(cat, x, a3) == curve_class(cat, cat.curves["e"])


def test_epsilon_claim_genus5():
    cat = get_catalog(5)
    w = (crosscap_slide(-1),) + tuple(transposition(i) for i in range(2, 5)) + (crosscap_slide(),)
    a2 = curve_class(cat, cat.curves["a2"])
    assert curve_image(cat, w, a2) == curve_class(cat, cat.curves["e"])


def test_curve_image_respects_composition(rng):
    cat = get_catalog(5)
    syms = all_symbols(5)
    for _ in range(60):
        w1 = tuple(rng.choice(syms) for _ in range(rng.randrange(0, 4)))
        w2 = tuple(rng.choice(syms) for _ in range(rng.randrange(0, 4)))
        curve = curve_class(cat, cat.curves[f"a{rng.randrange(1, 5)}"])
        assert curve_image(cat, w1 + w2, curve) == curve_image(
            cat, w1, curve_image(cat, w2, curve)
        )


def test_identity_word_fixes_curves(catalog):
    for name in catalog.curves:
        c = curve_class(catalog, catalog.curves[name])
        assert curve_image(catalog, (), c) == c
