import numpy as np
import pytest

from conftest import random_pair_state
from yangmix.mesons import (MESON_MATRIX, Meson, coefficients, compose, decompose, meson_vector,
                            out_of_span_norm)
from yangmix.states import MixingAmplitudes, basis_ket, initial_state


def test_labels_are_ascii_contract():
    assert [m.value for m in Meson] == ["pi+", "pi-", "pi0", "K+", "K-", "K0", "K0bar",
                                        "eta0", "eta0p"]
    assert str(Meson.K_ZERO_BAR) == "K0bar"


def test_orthonormal():
    gram = MESON_MATRIX @ MESON_MATRIX.conj().T
    assert np.max(np.abs(gram - np.eye(9))) < 1e-14


def test_meson_vector_examples():
    np.testing.assert_allclose(meson_vector("pi0"),
                               (basis_ket("u", "u") - basis_ket("d", "d")) / np.sqrt(2))
    np.testing.assert_allclose(
        meson_vector(Meson.ETA_OCTET),
        (-basis_ket("u", "u") - basis_ket("d", "d") + 2 * basis_ket("s", "s")) / np.sqrt(6))
    np.testing.assert_array_equal(meson_vector("K+"), basis_ket("u", "s"))
    np.testing.assert_array_equal(meson_vector("K0bar"), basis_ket("s", "d"))
    with pytest.raises(ValueError):
        meson_vector("rho0")


def test_decompose_uu():
    d = dict(decompose(basis_ket("u", "u")))
    assert d[Meson.PI_ZERO] == pytest.approx(1 / np.sqrt(2))
    assert d[Meson.ETA_SINGLET] == pytest.approx(1 / np.sqrt(3))
    assert d[Meson.ETA_OCTET] == pytest.approx(-1 / np.sqrt(6))
    others = [c for m, c in d.items() if m not in (Meson.PI_ZERO, Meson.ETA_SINGLET, Meson.ETA_OCTET)]
    assert np.allclose(others, 0)


def test_decompose_pi_plus():
    d = dict(decompose(meson_vector("pi+")))
    assert d.pop(Meson.PI_PLUS) == 1
    assert all(c == 0 for c in d.values())


def test_decompose_initial_state(rng):
    v = rng.normal(size=3)
    alpha = MixingAmplitudes.normalized(*v)
    d = dict(decompose(initial_state(alpha)))
    assert d[Meson.ETA_SINGLET] == pytest.approx(alpha.alpha1, abs=1e-14)
    assert d[Meson.PI_ZERO] == pytest.approx(alpha.alpha2, abs=1e-14)
    assert d[Meson.ETA_OCTET] == pytest.approx(alpha.alpha3, abs=1e-14)


def test_completeness(rng):
    for _ in range(100):
        s = random_pair_state(rng)
        recon = sum(c * meson_vector(m) for m, c in decompose(s))
        assert np.linalg.norm(s - recon) < 1e-12
        assert np.linalg.norm(compose(coefficients(s)) - s) < 1e-12


def test_out_of_span():
    s = (meson_vector("K+") + meson_vector("pi0")) / np.sqrt(2)
    assert out_of_span_norm(s, {"K+", "pi0"}) < 1e-15
    assert out_of_span_norm(s, {Meson.K_PLUS}) == pytest.approx(1 / np.sqrt(2))
