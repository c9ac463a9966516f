import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yangmix import su3
from yangmix.expr import SYMBOLS, OperatorExpr, parse_operator_expr
from yangmix.states import MixingAmplitudes, basis_ket, initial_state
from yangmix.yangian import (CONJUGATE, FUNDAMENTAL, SitePairWeight, SiteConvention,
                             YangianParams, ZeroFinalState, all_conventions, apply, build_J,
                             build_J_reduced, convention_from_name, ladder, realize, total_I)

E = np.eye(3)
BOTH = [FUNDAMENTAL, CONJUGATE]
params = st.tuples(*[st.floats(-10, 10, allow_nan=False)] * 3).map(lambda t: YangianParams(*t))


def unit(i, j):
    m = np.zeros((3, 3))
    m[i, j] = 1
    return m


def brute_J(a, p, conv):
    """Direct transcription: loops over sites i != j and all 64 (b, c)."""
    g2 = conv.site2_generators()
    local = [lambda x: np.kron(su3.FUNDAMENTAL[x], E), lambda x: np.kron(E, g2[x])]
    omega = {(0, 1): -conv.omega, (1, 0): conv.omega}
    mu, nu, lam = p
    out = mu * local[0](a - 1) + nu * local[1](a - 1)
    for b in range(8):
        for c in range(8):
            f = su3.structure_constant(a, b + 1, c + 1)
            for (i, j), w in omega.items():
                out = out + 0.5j * lam * f * w * (local[i](b) @ local[j](c))
    return out


def test_omega_table():
    t = SitePairWeight().table()
    assert t[1, 0] == 1 and t[0, 1] == -1 and t[0, 0] == t[1, 1] == 0
    assert np.array_equal(t, -t.T)
    with pytest.raises(ValueError):
        SitePairWeight(0)


def test_convention_validation_and_names():
    with pytest.raises(ValueError):
        SiteConvention("adjoint")
    with pytest.raises(ValueError):
        SiteConvention(ladder=(1, 1))
    convs = all_conventions()
    assert len(convs) == 32 and len({c.name for c in convs}) == 32
    assert convs[0] == FUNDAMENTAL and convs[1] == CONJUGATE
    assert convention_from_name("fundamental/omega-reversed/V-reversed") == \
        SiteConvention("fundamental", -1, (1, 1, -1))
    with pytest.raises(ValueError):
        convention_from_name("nope")


def test_total_I_examples():
    uu = 0
    assert total_I(3, FUNDAMENTAL)[uu, uu] == pytest.approx(1)
    assert total_I(3, CONJUGATE)[uu, uu] == pytest.approx(0)
    with pytest.raises(IndexError):
        total_I(0)


@pytest.mark.parametrize("conv", BOTH, ids=str)
def test_total_I_closes(conv):
    gens = np.array([total_I(a, conv) for a in range(1, 9)])
    assert su3.commutator_residual(gens) < 1e-12


def test_J_reduces_to_I_without_bilinear():
    for conv in BOTH:
        for a in range(1, 9):
            np.testing.assert_allclose(build_J(a, YangianParams(1, 1, 0), conv), total_I(a, conv),
                                       atol=1e-15)


@pytest.mark.parametrize("conv", [FUNDAMENTAL, CONJUGATE,
                                  SiteConvention("fundamental", -1, (1, 1, -1))], ids=str)
def test_J_matches_brute_double_sum(conv):
    rng = np.random.default_rng(3)
    for a in range(1, 9):
        p = YangianParams(*rng.uniform(-3, 3, 3))
        assert np.max(np.abs(build_J(a, p, conv) - brute_J(a, p, conv))) < 1e-13


def test_pure_bilinear_J3():
    p = YangianParams(0, 0, 1)
    expected = sum(-1j * su3.structure_constant(3, b, c)
                   * np.kron(su3.fundamental_generator(b), su3.fundamental_generator(c))
                   for b, c in itertools.product(range(1, 9), repeat=2))
    np.testing.assert_allclose(build_J(3, p, FUNDAMENTAL), expected, atol=1e-15)


@settings(max_examples=30, deadline=None)
@given(params)
def test_omega_reduction(p):
    for conv in BOTH + [SiteConvention("conjugate", -1)]:
        for a in range(1, 9):
            assert np.max(np.abs(build_J(a, p, conv) - build_J_reduced(a, p, conv))) < 1e-13


@settings(max_examples=10, deadline=None)
@given(params)
def test_adjoint_covariance(p):
    f = su3.STRUCTURE_CONSTANTS
    for conv in BOTH + [SiteConvention("fundamental", -1)]:
        Is = [total_I(a, conv) for a in range(1, 9)]
        Js = np.array([build_J(a, p, conv) for a in range(1, 9)])
        for a, b in itertools.product(range(8), repeat=2):
            lhs = Is[a] @ Js[b] - Js[b] @ Is[a]
            rhs = 1j * np.einsum("c,cij->ij", f[a, b], Js)
            assert np.max(np.abs(lhs - rhs)) < 1e-11


@settings(max_examples=30, deadline=None)
@given(params)
def test_J_adjoint_flips_lambda(p):
    flipped = YangianParams(p.mu, p.nu, -p.lam)
    for conv in BOTH:
        for a in range(1, 9):
            np.testing.assert_allclose(build_J(a, p, conv).conj().T, build_J(a, flipped, conv),
                                       atol=1e-12)


@settings(max_examples=30, deadline=None)
@given(params)
def test_ladder_dagger(p):
    flipped = YangianParams(p.mu, p.nu, -p.lam)
    for conv in BOTH:
        for x in "IUV":
            np.testing.assert_allclose(ladder(x + "+", p, conv).conj().T, ladder(x + "-", flipped, conv),
                                       atol=1e-12)
        for d in ("I3", "I8"):
            np.testing.assert_allclose(ladder(d, p, conv).conj().T, ladder(d, flipped, conv), atol=1e-12)


def test_diagonal_ladders_hermitian_at_zero_lambda():
    p = YangianParams(0.3, -1.7, 0)
    for d in ("I3", "I8"):
        m = ladder(d, p)
        assert np.max(np.abs(m - m.conj().T)) < 1e-15


def test_undeformed_ladders():
    p = YangianParams(1, 1, 0)
    two_site = lambda m: np.kron(m, E) + np.kron(E, m)
    np.testing.assert_allclose(ladder("V+", p), two_site(unit(0, 2)), atol=1e-15)
    np.testing.assert_allclose(ladder("I+", p), two_site(unit(0, 1)), atol=1e-15)
    np.testing.assert_allclose(ladder("U-", p), two_site(unit(2, 1)), atol=1e-15)
    i8 = ladder("I8", p)
    assert i8[0, 0] == pytest.approx(2 / 3)
    np.testing.assert_allclose(i8, two_site(np.diag([1, 1, -2]) / 3), atol=1e-15)
    with pytest.raises(ValueError):
        ladder("W+", p)


def test_ladder_orientation_swaps_raising_and_lowering():
    p = YangianParams(0.4, 0.9, -1.3)
    rev = SiteConvention("fundamental", 1, (1, 1, -1))
    np.testing.assert_allclose(ladder("V+", p, rev), ladder("V-", p), atol=1e-15)
    np.testing.assert_allclose(ladder("I+", p, rev), ladder("I+", p), atol=1e-15)


def test_realize_examples():
    p = YangianParams(0.7, -0.2, 1.1)
    np.testing.assert_allclose(realize("I3", p), ladder("I3", p))
    np.testing.assert_allclose(realize("V+ + V-", p), ladder("V+", p) + ladder("V-", p))
    out = apply(realize("I+ + I-", YangianParams(1, 1, 0)), basis_ket("d", "d"))
    np.testing.assert_allclose(out, basis_ket("u", "d") + basis_ket("d", "u"), atol=1e-15)


exprs = st.lists(st.tuples(st.floats(-5, 5, allow_nan=False), st.sampled_from(SYMBOLS)),
                 min_size=1, max_size=4).map(lambda t: OperatorExpr(tuple(t)))


@settings(max_examples=40, deadline=None)
@given(exprs, exprs, st.floats(-5, 5, allow_nan=False), params)
def test_realize_linear(e1, e2, k, p):
    lhs = realize(e1 + k * e2, p)
    rhs = realize(e1, p) + k * realize(e2, p)
    assert np.max(np.abs(lhs - rhs)) < 1e-13 * max(1.0, np.max(np.abs(rhs)))


def test_apply_examples():
    s = initial_state(MixingAmplitudes(0.6, 0, 0.8))
    np.testing.assert_array_equal(apply(np.eye(9), s), s)
    out = apply(ladder("V+", YangianParams(1, 1, 0)), basis_ket("s", "s"))
    np.testing.assert_allclose(out, basis_ket("u", "s") + basis_ket("s", "u"), atol=1e-15)
    out = apply(2 * np.eye(9), s, normalize=True)
    assert np.linalg.norm(out) == pytest.approx(1)
    with pytest.raises(ZeroFinalState):
        apply(np.zeros((9, 9)), s, normalize=True)


def test_parse_and_realize_agree():
    p = YangianParams(0.5, 0.5, 1.0)
    np.testing.assert_allclose(realize(parse_operator_expr("2*I8 - 0.5*I3"), p),
                               2 * ladder("I8", p) - 0.5 * ladder("I3", p))
