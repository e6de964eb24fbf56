import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from cmdual import (
    ChowClass,
    ConeSpec,
    InvalidInput,
    NonProperClass,
    NotDivisible,
    cone_class,
    cone_class_general,
    pk_class,
    poly_of_class,
    pullback_class,
    push_forward,
    ranks_of,
    signed,
    smooth_hypersurface_class,
    vertex_euler_obstruction,
    vertex_term,
)
from cmdual.cones import _cone_poly_by_duality, _cone_poly_closed_form
from strategies import coeff, oracle_settings, proper_classes

TWISTED_CUBIC = ChowClass(3, (2, 3, 0, 0))


def unsigned_linear(k, n):
    """c_Ma of a k-plane in P^n."""
    return signed(pk_class(k, n), k)


def test_twisted_cubic_cone():
    v = cone_class_general(TWISTED_CUBIC, 2)
    assert v.coeffs == (1, 5, 3, 0)
    assert vertex_euler_obstruction(TWISTED_CUBIC) == -1
    assert vertex_euler_obstruction(TWISTED_CUBIC, 1) == -1


@pytest.mark.parametrize("d", range(1, 8))
def test_cone_over_plane_curve(d):
    w = smooth_hypersurface_class(2, d)
    v = cone_class(w, 3)
    assert poly_of_class(v).poly_coeffs == (0, d, 4 * d - d * d, 5 * d - 2 * d * d)
    assert vertex_euler_obstruction(w) == 2 * d - d * d == vertex_term(w)


def test_cone_over_conic_values():
    assert cone_class(ChowClass(2, (2, 2, 0)), 3).coeffs == (2, 4, 2, 0)


@pytest.mark.parametrize("d,g", [(3, 0), (4, 1), (6, 4), (5, 2)])
def test_vertex_obstruction_for_space_curves(d, g):
    # c_Ma of a smooth curve: d[P^1] + (2-2g)[P^0]
    assert vertex_euler_obstruction(ChowClass(4, (2 - 2 * g, d, 0, 0, 0))) == 2 - 2 * g - d


@oracle_settings
@given(st.integers(1, 6), st.integers(1, 5), st.data())
def test_cone_forms_match_oracles(m, extra, data):
    n = m + extra
    body = data.draw(st.lists(coeff, min_size=m, max_size=m))
    w = ChowClass(m, tuple(body) + (0,))
    qw = list(poly_of_class(w).poly_coeffs)
    expected = oracles.cone_closed(qw, m, n)
    assert expected == oracles.cone_by_duality(qw, m, n)
    assert list(poly_of_class(cone_class(w, n)).poly_coeffs) == expected


@given(st.integers(1, 11), st.integers(1, 11), st.data())
def test_two_cone_forms_agree(m, extra, data):
    n = min(m + extra, 12)
    body = data.draw(st.lists(coeff, min_size=m, max_size=m))
    qw = poly_of_class(ChowClass(m, tuple(body) + (0,)))
    assert _cone_poly_closed_form(qw, n) == _cone_poly_by_duality(qw, n)


@pytest.mark.parametrize("m", range(1, 6))
@pytest.mark.parametrize("extra", range(1, 4))
def test_cone_over_linear_space(m, extra):
    n = m + extra
    for k in range(m):
        v = cone_class(unsigned_linear(k, m), n)
        assert v == unsigned_linear(k + n - m, n)
        assert vertex_euler_obstruction(unsigned_linear(k, m)) == 1


@given(st.integers(1, 8), st.integers(1, 4), st.data())
def test_general_form_matches_complementary(m, extra, data):
    n = m + extra
    body = data.draw(st.lists(coeff, min_size=m, max_size=m))
    w = ChowClass(m, tuple(body) + (0,))
    assert cone_class_general(push_forward(w, n), n - m + 1) == cone_class(w, n)


@given(st.integers(1, 8), st.integers(1, 4), st.data())
def test_cone_ranks_are_shifted_base_ranks(m, extra, data):
    n = m + extra
    dim = data.draw(st.integers(0, m - 1))
    body = data.draw(st.lists(coeff, min_size=dim + 1, max_size=dim + 1))
    w = ChowClass(m, tuple(body) + (0,) * (m - dim))
    v = cone_class(w, n)
    base_ranks = ranks_of(signed(w, dim)).ranks
    assert ranks_of(signed(v, dim + n - m)).ranks == (0,) * (n - m) + base_ranks


def test_quadric_cone_ranks():
    v = cone_class(ChowClass(2, (2, 2, 0)), 3)
    assert ranks_of(signed(v, 2)).ranks == (0, 2, 2)


def test_cone_errors():
    with pytest.raises(InvalidInput):
        cone_class(ChowClass(3, (1, 0, 0, 0)), 3)
    with pytest.raises(NonProperClass):
        cone_class(ChowClass(1, (3, 2)), 3)
    with pytest.raises(NotDivisible):
        cone_class_general(ChowClass(3, (1, 1, 1, 0)), 2)
    with pytest.raises(InvalidInput):
        cone_class_general(TWISTED_CUBIC, 1)


def test_cone_spec():
    assert ConeSpec(4, base_ambient=2).vertex_dim == 1
    assert ConeSpec(3, codim_bound=2).vertex_dim == 0


@given(proper_classes(max_n=8))
def test_euler_coherence(data):
    w, dim = data
    assert vertex_term(w) == vertex_euler_obstruction(w, dim)


def test_pullback():
    tp2 = ChowClass(2, (3, 3, 1))
    assert pullback_class(tp2, 2) == tp2
    # (1+H)((1+H)^3 - H^3) in P^3
    assert poly_of_class(pullback_class(tp2, 3)).poly_coeffs == (1, 4, 6, 3)


@given(st.integers(0, 6), st.integers(0, 5), st.data())
def test_pullback_linear(m, extra, data):
    n = m + extra
    a = ChowClass(m, tuple(data.draw(st.lists(coeff, min_size=m + 1, max_size=m + 1))))
    b = ChowClass(m, tuple(data.draw(st.lists(coeff, min_size=m + 1, max_size=m + 1))))
    k = data.draw(st.integers(-7, 7))
    assert pullback_class(a + k * b, n) == pullback_class(a, n) + k * pullback_class(b, n)
