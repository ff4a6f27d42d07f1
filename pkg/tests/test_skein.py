"""State-sum engine: Kauffman relations, normal forms, composition."""

import json

import hypothesis.strategies as st
import pytest
from hypothesis import given

from torusskein.algebra import DELTA, Laurent
from torusskein.skein import (
    AnnularTangle,
    BudgetError,
    MalformedTangle,
    Multicurve,
    PlanarityError,
    SkeinElement,
    cap,
    compose,
    crossing,
    cup,
    kink_slices,
    loop_slices,
    multicurve_tangle,
    resolve,
    resolve_states,
    rot,
)

A = Laurent.A


def word_from_codes(width, codes):
    """Interpret a code stream as a well-formed slice word (fuzzing helper)."""
    slices = []
    w = width
    for code in codes:
        kind = code % 4
        if kind == 0 and w >= 2:
            slices.append(crossing((code // 8) % w, 1 if code % 8 < 4 else -1))
        elif kind == 1:
            slices.append(cup((code // 4) % (w + 1)))
            w += 2
        elif kind == 2 and w >= 2:
            slices.append(cap((code // 4) % w))
            w -= 2
        elif kind == 3 and w >= 1:
            slices.append(rot(1 if code % 8 < 4 else -1))
    return AnnularTangle(width, tuple(slices))


random_words = st.builds(
    word_from_codes,
    st.sampled_from([0, 2, 4, 6]),
    st.lists(st.integers(0, 255), max_size=8),
)


# -- Kauffman relation basics -------------------------------------------------


def test_contractible_loop_value():
    el = resolve(AnnularTangle(0, (cup(0), cap(0))))
    assert el == SkeinElement(0, {Multicurve((), 0): DELTA})


def test_core_loop_and_powers():
    for n in range(4):
        el = resolve(AnnularTangle(0, loop_slices(n)))
        assert el == SkeinElement(0, {Multicurve((), n): Laurent.one()})


def test_kink_factors_exact():
    for sign in (1, -1):
        states = resolve_states(AnnularTangle(1, kink_slices(0, sign)))
        (state, coeff), = states.items()
        assert state == ((("E", 0, 0),), (), 0)
        assert coeff == Laurent({3 * sign: -1})


def test_closed_kink_factors():
    # closing a curl against a cap realizes the opposite chirality
    for sign in (1, -1):
        el = resolve(AnnularTangle(2, (crossing(0, sign), cap(0))))
        assert el == SkeinElement(2, {Multicurve(((0, 1, 0),), 0): Laurent({-3 * sign: -1})})


def test_reidemeister_two_local():
    for width in (2, 3, 4, 5, 6):
        plain = resolve_states(AnnularTangle(width, ()))
        for i in range(width):
            for sign in (1, -1):
                word = AnnularTangle(width, (crossing(i, sign), crossing(i, -sign)))
                assert resolve_states(word) == plain, (width, i, sign)


def test_reidemeister_three_local():
    for width in (3, 4, 5, 6):
        for i in range(width):
            j = (i + 1) % width
            for sign in (1, -1):
                a = resolve_states(AnnularTangle(
                    width, (crossing(i, sign), crossing(j, sign), crossing(i, sign))))
                b = resolve_states(AnnularTangle(
                    width, (crossing(j, sign), crossing(i, sign), crossing(j, sign))))
                assert a == b, (width, i, sign)


def test_reidemeister_one_local():
    for width in (1, 2, 3):
        plain = resolve_states(AnnularTangle(width, ()))
        for pos in range(width):
            for sign in (1, -1):
                word = AnnularTangle(width, kink_slices(pos, sign))
                got = resolve_states(word)
                want = {s: c * Laurent({3 * sign: -1}) for s, c in plain.items()}
                assert got == want


@given(random_words, st.integers(0, 7), st.sampled_from([1, -1]))
def test_reidemeister_two_inserted_anywhere(tangle, cut, sign):
    # splice an opposite crossing pair into a random word at a random depth
    cut = min(cut, len(tangle.slices))
    w = AnnularTangle(tangle.endpoints, tangle.slices[:cut]).final_width
    if w < 2:
        return
    pos = cut % w
    spliced = (tangle.slices[:cut]
               + (crossing(pos, sign), crossing(pos, -sign))
               + tangle.slices[cut:])
    assert resolve_states(AnnularTangle(tangle.endpoints, spliced)) == resolve_states(tangle)


@given(random_words, st.integers(0, 7), st.sampled_from([1, -1]))
def test_crossing_elimination_identity(tangle, cut, sign):
    # a crossing equals A^s (parallel) + A^-s (turnback) in any context
    cut = min(cut, len(tangle.slices))
    head, tail = tangle.slices[:cut], tangle.slices[cut:]
    w = AnnularTangle(tangle.endpoints, head).final_width
    if w < 2:
        return
    pos = cut % w
    crossed = resolve_states(AnnularTangle(
        tangle.endpoints, head + (crossing(pos, sign),) + tail))
    parallel = resolve_states(tangle)
    if pos == w - 1:
        # a seam-straddling cup is a top cup followed by one rotation step
        turn_word = head + (cap(pos), cup(w - 2), rot(1)) + tail
    else:
        turn_word = head + (cap(pos), cup(pos)) + tail
    turnback = resolve_states(AnnularTangle(tangle.endpoints, turn_word))
    combined: dict = {}
    for states, scale in ((parallel, A(sign)), (turnback, A(-sign))):
        for s, c in states.items():
            v = combined.get(s, Laurent.zero()) + c * scale
            if v:
                combined[s] = v
            else:
                combined.pop(s, None)
    assert combined == crossed


def test_rot_round_trip_is_identity():
    for width in (1, 2, 3, 4):
        plain = resolve_states(AnnularTangle(width, ()))
        both = resolve_states(AnnularTangle(width, (rot(1), rot(-1))))
        assert both == plain


def test_full_rotation_of_closed_diagram():
    # 2k rot steps return any capped-off picture to itself
    word = (cap(3), cap(1))
    base = resolve(AnnularTangle(4, word))
    spun = resolve(AnnularTangle(4, (rot(1),) * 4 + word))
    assert spun == base


# -- normal forms -------------------------------------------------------------


def test_seam_and_trivial_arcs_are_distinct():
    trivial = resolve(AnnularTangle(2, (cap(0),)))
    seam = resolve(AnnularTangle(2, (cap(1),)))
    assert trivial == SkeinElement(2, {Multicurve(((0, 1, 0),), 0): Laurent.one()})
    assert seam == SkeinElement(2, {Multicurve(((0, 1, -1),), 0): Laurent.one()})
    assert trivial != seam


def test_rainbow_normal_form():
    el = resolve(AnnularTangle(6, (cap(5), cap(3), cap(1))))
    (mc, coeff), = el.terms.items()
    assert mc.arcs == ((0, 5, -1), (1, 4, -1), (2, 3, -1))
    assert coeff == Laurent.one()


@given(random_words)
def test_resolved_terms_round_trip_through_tangles(tangle):
    if not tangle.is_closed():
        return
    el = resolve(tangle)
    for mc, _ in el.items():
        back = resolve(multicurve_tangle(mc))
        assert back == SkeinElement(mc.endpoints, {mc: Laurent.one()})


def test_unrealizable_matching_rejected():
    crossing_matching = Multicurve(((0, 2, 0), (1, 3, 0)), 0)
    with pytest.raises(PlanarityError):
        multicurve_tangle(crossing_matching)
    winding_inside_trivial = Multicurve(((0, 3, 0), (1, 2, -1)), 0)
    with pytest.raises(PlanarityError):
        multicurve_tangle(winding_inside_trivial)


def test_mixed_trivial_and_winding_arcs():
    mc = Multicurve(((0, 5, -1), (1, 4, -1), (2, 3, 0)), 1)
    el = resolve(multicurve_tangle(mc))
    assert el == SkeinElement(6, {mc: Laurent.one()})


# -- composition --------------------------------------------------------------


def test_compose_with_identity_tangle():
    x = AnnularTangle(2, (crossing(0, 1), cap(0)))
    ident = AnnularTangle(2, ())
    assert resolve(compose(ident, x)) == resolve(x)


def test_compose_braid_with_inverse():
    sigma = AnnularTangle(4, (crossing(1, 1),))
    sigma_inv = AnnularTangle(4, (crossing(1, -1),))
    assert resolve_states(compose(sigma, sigma_inv)) == resolve_states(AnnularTangle(4, ()))


def test_compose_core_loops():
    loop = resolve(AnnularTangle(0, loop_slices(1)))
    assert compose(loop, loop) == SkeinElement(0, {Multicurve((), 2): Laurent.one()})


def test_compose_resolution_homomorphism():
    # resolving a stacked diagram equals the disjoint union of resolutions
    arcs = AnnularTangle(2, (cap(1),))
    loops = AnnularTangle(0, loop_slices(2))
    whole = AnnularTangle(2, arcs.slices + loops.slices)
    assert resolve(whole) == compose(resolve(loops), resolve(arcs))
    kinked = AnnularTangle(0, (cup(0), crossing(0, 1), rot(1), cap(0)))
    whole = AnnularTangle(2, arcs.slices + kinked.slices)
    assert resolve(whole) == compose(resolve(kinked), resolve(arcs))


def test_compose_boundary_mismatch():
    with pytest.raises(MalformedTangle):
        compose(AnnularTangle(2, ()), AnnularTangle(4, ()))


# -- guards and serialization -------------------------------------------------


def test_crossing_budget():
    word = (cup(0),) + (crossing(0, 1),) * 23 + (cap(0),)
    with pytest.raises(BudgetError):
        resolve(AnnularTangle(0, word))
    assert resolve(AnnularTangle(0, word), budget=None) is not None


def test_malformed_words_rejected():
    with pytest.raises(MalformedTangle):
        AnnularTangle(0, (cap(0),))
    with pytest.raises(MalformedTangle):
        AnnularTangle(2, (crossing(2, 1),))
    with pytest.raises(MalformedTangle):
        AnnularTangle(0, (rot(1),))
    with pytest.raises(MalformedTangle):
        resolve(AnnularTangle(2, ()))  # open tangle


def test_tangle_json_round_trip(tmp_path):
    tangle = AnnularTangle(2, (crossing(1, -1), rot(1), cap(1)))
    blob = tangle.to_json()
    assert blob["endpoints"] == 2
    assert blob["slices"][0] == {"op": "crossing", "pos": 1, "sign": -1}
    assert AnnularTangle.from_json(json.loads(json.dumps(blob))) == tangle


def test_skein_element_json():
    el = resolve(AnnularTangle(2, (crossing(0, 1), cap(0))))
    blob = el.to_json()
    assert blob == [{"matching": [[0, 1]], "windings": [0],
                     "core_loops": 0, "coeff": "-A^-3"}]
