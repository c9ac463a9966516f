"""The light pseudoscalar nonet as an orthonormal basis of the pair space."""
import enum

import numpy as np

from .states import SQRT2, SQRT3, SQRT6, basis_ket


class Meson(enum.Enum):
    PI_PLUS = "pi+"
    PI_MINUS = "pi-"
    PI_ZERO = "pi0"
    K_PLUS = "K+"
    K_MINUS = "K-"
    K_ZERO = "K0"
    K_ZERO_BAR = "K0bar"
    ETA_OCTET = "eta0"
    ETA_SINGLET = "eta0p"

    def __str__(self):
        return self.value

    @classmethod
    def from_label(cls, label):
        return cls(label)


def _table():
    uu, dd, ss = basis_ket("u", "u"), basis_ket("d", "d"), basis_ket("s", "s")
    return {
        Meson.PI_PLUS: basis_ket("u", "d"),
        Meson.PI_MINUS: basis_ket("d", "u"),
        Meson.PI_ZERO: (uu - dd) / SQRT2,
        Meson.K_PLUS: basis_ket("u", "s"),
        Meson.K_MINUS: basis_ket("s", "u"),
        Meson.K_ZERO: basis_ket("d", "s"),
        Meson.K_ZERO_BAR: basis_ket("s", "d"),
        Meson.ETA_OCTET: (-uu - dd + 2 * ss) / SQRT6,
        Meson.ETA_SINGLET: (uu + dd + ss) / SQRT3,
    }


_VECTORS = _table()
# rows are <meson| in Meson declaration order
MESON_MATRIX = np.array([_VECTORS[m] for m in Meson]).conj()
MESON_MATRIX.setflags(write=False)


def meson_vector(label):
    """Unit pair state for a meson, given as a Meson or its ASCII label."""
    if not isinstance(label, Meson):
        label = Meson(label)
    return _VECTORS[label].copy()


def decompose(state):
    """[(meson, <meson|state>)] for all nine mesons, in declaration order."""
    coeffs = MESON_MATRIX @ np.asarray(state)
    return list(zip(Meson, coeffs))


def coefficients(state):
    """<meson|state> as an array ordered like ``Meson``."""
    return MESON_MATRIX @ np.asarray(state)


def compose(coeffs):
    """Inverse of ``coefficients``; accepts an array or a {Meson: c} mapping."""
    if isinstance(coeffs, dict):
        coeffs = np.array([coeffs.get(m, 0.0) for m in Meson], dtype=np.complex128)
    return MESON_MATRIX.conj().T @ np.asarray(coeffs, dtype=np.complex128)


def out_of_span_norm(state, allowed):
    """Norm of the part of ``state`` orthogonal to the span of ``allowed`` mesons."""
    allowed = {Meson(m) if not isinstance(m, Meson) else m for m in allowed}
    c = coefficients(state)
    mask = np.array([m not in allowed for m in Meson])
    return float(np.linalg.norm(c[mask]))
