"""Exact ring arithmetic, Chebyshev-style trace polynomials, substitution."""

from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import given

from torusskein.algebra import (
    DELTA,
    Laurent,
    TracePoly,
    UniPoly,
    chebyshev,
    chebyshev_in,
)

A = Laurent.A


def laurents(max_terms=4, max_exp=5, max_coeff=9):
    return st.dictionaries(
        st.integers(-max_exp, max_exp),
        st.integers(-max_coeff, max_coeff),
        max_size=max_terms,
    ).map(Laurent)


def trace_polys(max_exp=3, max_terms=4):
    keys = st.tuples(st.integers(0, max_exp), st.integers(0, max_exp),
                     st.integers(0, max_exp))
    return st.dictionaries(keys, st.integers(-9, 9), max_size=max_terms).map(
        lambda d: TracePoly({k: Fraction(v) for k, v in d.items()}))


# -- Laurent ----------------------------------------------------------------


def test_difference_of_squares():
    assert (A(1) + A(-1)) * (A(1) - A(-1)) == A(2) - A(-2)


def test_loop_value_square():
    assert DELTA * DELTA == Laurent({4: 1, 0: 2, -4: 1})


@given(laurents())
def test_additive_identity(f):
    assert f + Laurent.zero() == f


@given(laurents(), laurents())
def test_commutativity(f, g):
    assert f + g == g + f
    assert f * g == g * f


@given(laurents(), laurents(), laurents())
def test_associativity_and_distributivity(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_unit_parts_and_inverse():
    u = Laurent({3: -1})
    assert u.unit_parts() == (-1, 3)
    assert u * u.unit_inverse() == Laurent.one()
    assert (A(2) + A(0)).unit_parts() is None
    assert Laurent({5: 2}).unit_parts() is None


def test_laurent_rendering():
    assert str(DELTA) == "-A^2 - A^-2"
    assert str(DELTA * DELTA) == "A^4 + 2 + A^-4"
    assert str(Laurent.zero()) == "0"
    assert str(Laurent({1: 1})) == "A"


# -- Chebyshev polynomials ---------------------------------------------------


def test_chebyshev_base_cases():
    assert chebyshev(0) == UniPoly("s", (2,))
    assert chebyshev(1) == UniPoly("s", (0, 1))
    assert chebyshev(2) == UniPoly("s", (-2, 0, 1))


def test_chebyshev_defining_identity():
    # independent oracle: substitute s = t + 1/t and compare with t^n + t^-n
    t_plus_tinv = Laurent({1: 1, -1: 1})
    for n in range(0, 21):
        want = Laurent({n: 1}) + Laurent({-n: 1})
        assert chebyshev(n).evaluate(t_plus_tinv) == want


def test_chebyshev_degree_five():
    # T_5 = s^5 - 5 s^3 + 5 s, from the defining identity above
    assert chebyshev(5) == UniPoly("s", (0, 5, 0, -5, 0, 1))
    assert str(chebyshev(5)) == "s^5 - 5*s^3 + 5*s"


def test_chebyshev_product_rule():
    for m in range(0, 21):
        for n in range(0, 21):
            assert chebyshev(m) * chebyshev(n) == chebyshev(m + n) + chebyshev(abs(m - n))


def test_chebyshev_at_plus_minus_two():
    for n in range(0, 21):
        assert chebyshev(n).evaluate(2) == 2
        assert chebyshev(n).evaluate(-2) == 2 * (-1) ** n


def test_variable_tag_mismatch_is_error():
    try:
        chebyshev(2) + chebyshev_in("y", 2)
    except ValueError:
        pass
    else:
        raise AssertionError("expected a variable mismatch error")


# -- TracePoly ---------------------------------------------------------------


def test_trace_poly_rendering_graded_lex():
    f = TracePoly.x() * TracePoly.z() - TracePoly.y()
    assert str(f) == "x*z - y"
    g = TracePoly({(0, 0, 0): 2, (1, 1, 0): 1, (3, 0, 0): -1})
    assert str(g) == "-x^3 + x*y + 2"


def test_substitute_projection_and_constant():
    sx, sy, sz = chebyshev(2), chebyshev(3), chebyshev(5)
    assert TracePoly.z().substitute(sx, sy, sz) == sz
    assert TracePoly.constant(1).substitute(sx, sy, sz) == UniPoly("s", (1,))


def test_substitute_xy_product():
    sx, sy, sz = chebyshev(2), chebyshev(3), chebyshev(5)
    f = TracePoly.x() * TracePoly.y()
    assert f.substitute(sx, sy, sz) == chebyshev(2) * chebyshev(3)


@given(trace_polys(), trace_polys())
def test_substitute_is_multiplicative(f, g):
    sx, sy, sz = chebyshev(2), chebyshev(3), chebyshev(5)
    lhs = (f * g).substitute(sx, sy, sz)
    rhs = f.substitute(sx, sy, sz) * g.substitute(sx, sy, sz)
    assert lhs == rhs


@given(trace_polys(), trace_polys())
def test_trace_poly_ring_laws(f, g):
    assert f + g == g + f
    assert f * g == g * f
    assert f + TracePoly() == f


def test_trace_poly_evaluate_matches_terms():
    f = TracePoly.x() ** 2 * TracePoly.z() - 3 * TracePoly.y()
    assert f.evaluate(2, 1, 5) == 2 ** 2 * 5 - 3
    assert f.z_profile(2, 1) == [-3, 4]
