"""Quark-antiquark pure states, reduced densities and the base-3 mean entropy.

A pair state is a length-9 complex vector; entry ``3*q + qbar`` (0-based,
q and qbar in u, d, s order) holds the amplitude of |q qbar>.
"""
from dataclasses import dataclass

import numpy as np

NORM_TOL = 1e-12
# threshold for the "S_i != 0" branch of the mean entropy
ENTROPY_GATE = 1e-12
EIG_CLIP = 1e-12

SQRT2 = np.sqrt(2.0)
SQRT3 = np.sqrt(3.0)
SQRT6 = np.sqrt(6.0)

FLAVORS = ("u", "d", "s")


class NotNormalizedError(ValueError):
    pass


@dataclass(frozen=True)
class MixingAmplitudes:
    """Real amplitudes of eta0', pi0 and eta0 in the mixing state."""

    alpha1: float
    alpha2: float
    alpha3: float

    def __post_init__(self):
        vals = np.array([self.alpha1, self.alpha2, self.alpha3], dtype=float)
        if not np.all(np.isfinite(vals)):
            raise ValueError("mixing amplitudes must be finite")
        if abs(vals @ vals - 1.0) > NORM_TOL:
            raise NotNormalizedError(
                f"alpha1^2 + alpha2^2 + alpha3^2 must equal 1, got {vals @ vals!r}")

    @classmethod
    def normalized(cls, a1, a2, a3):
        """Rescale (a1, a2, a3) to unit length before validating."""
        v = np.array([a1, a2, a3], dtype=float)
        n = np.linalg.norm(v)
        if n == 0:
            raise NotNormalizedError("zero mixing vector cannot be normalized")
        v = v / n
        return cls(*map(float, v))

    def as_array(self):
        return np.array([self.alpha1, self.alpha2, self.alpha3])


def diagonal_amplitudes(alpha):
    """Amplitudes of |u ubar>, |d dbar>, |s sbar> in the mixing state."""
    a1, a2, a3 = alpha.alpha1, alpha.alpha2, alpha.alpha3
    amp_uu = SQRT3 / 3 * a1 + SQRT2 / 2 * a2 - SQRT6 / 6 * a3
    amp_dd = SQRT3 / 3 * a1 - SQRT2 / 2 * a2 - SQRT6 / 6 * a3
    amp_ss = SQRT3 / 3 * a1 + SQRT6 / 3 * a3
    return np.array([amp_uu, amp_dd, amp_ss])


def basis_ket(q, qbar):
    """|q qbar> with flavors given as 'u'/'d'/'s' or 0-based indices."""
    if isinstance(q, str):
        q = FLAVORS.index(q)
    if isinstance(qbar, str):
        qbar = FLAVORS.index(qbar)
    v = np.zeros(9, dtype=np.complex128)
    v[3 * q + qbar] = 1.0
    return v


def initial_state(alpha):
    """alpha1|eta0'> + alpha2|pi0> + alpha3|eta0> expanded over |q qbar>."""
    v = np.zeros(9, dtype=np.complex128)
    v[[0, 4, 8]] = diagonal_amplitudes(alpha)
    return v


def norm(state):
    return float(np.linalg.norm(state))


def _require_normalized(state):
    state = np.asarray(state)
    if state.shape != (9,):
        raise ValueError(f"pair state must have 9 amplitudes, got shape {state.shape}")
    if not np.all(np.isfinite(state)):
        raise ValueError("pair state has non-finite amplitudes")
    if abs(np.vdot(state, state).real - 1.0) > NORM_TOL:
        raise NotNormalizedError(f"pair state has norm^2 {np.vdot(state, state).real!r}")
    return state


def amplitude_matrix(state):
    """3x3 view c[q, qbar] of a pair state."""
    return np.asarray(state).reshape(3, 3)


def reduced_density(state, site, raw=False):
    """Partial trace of |state><state| over the other site (site is 1 or 2).

    With ``raw=True`` the normalization check is skipped and the result has
    trace equal to the squared norm.
    """
    if not raw:
        state = _require_normalized(state)
    m = amplitude_matrix(state)
    if site == 1:
        return m @ m.conj().T
    if site == 2:
        return m.T @ m.conj()
    raise ValueError(f"site must be 1 or 2, got {site!r}")


def _xlog3x(p):
    p = np.asarray(p, dtype=float)
    out = np.zeros_like(p)
    nz = p > 0
    out[nz] = -p[nz] * np.log(p[nz]) / np.log(3.0)
    return out


def probability_entropy(p):
    """-sum p log3 p with 0 log 0 = 0; p need not sum to one."""
    return float(np.sum(_xlog3x(p)))


def _spectrum(rho):
    w = np.linalg.eigvalsh(rho)
    if np.any(w < -EIG_CLIP):
        raise ValueError(f"density matrix has negative eigenvalue {w.min():.3e}")
    return np.clip(w, 0.0, None)


def entropy_base3(rho, raw=False):
    """Von Neumann entropy -Tr(rho log3 rho).

    ``raw=True`` skips the unit-trace check and applies -p log3 p to the bare
    eigenvalues, which is how the printed final-state formulas treat an
    unnormalized prefactor.
    """
    rho = np.asarray(rho)
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
        raise ValueError("density matrix is not Hermitian")
    if not raw and abs(np.trace(rho).real - 1.0) > 1e-12:
        raise ValueError(f"density matrix has trace {np.trace(rho).real!r}, expected 1")
    w = _spectrum(rho)
    if not raw:
        w = np.clip(w, 0.0, 1.0)
    return probability_entropy(w)


def site_entropies(state, raw=False):
    return (entropy_base3(reduced_density(state, 1, raw), raw),
            entropy_base3(reduced_density(state, 2, raw), raw))


def entanglement_degree(state):
    """Mean single-site entropy; 0 when either site entropy vanishes."""
    s1, s2 = site_entropies(state)
    if s1 > ENTROPY_GATE and s2 > ENTROPY_GATE:
        return 0.5 * (s1 + s2)
    return 0.0


def unnormalized_degree(state):
    """Mean of the raw site entropies of an unnormalized state, ungated.

    Equals the normalized degree when the state has unit norm; otherwise
    the squared norm leaks into every -p log3 p term.
    """
    s1, s2 = site_entropies(state, raw=True)
    return 0.5 * (s1 + s2)


def entanglement_degree_closed_form(alpha):
    """Initial-state entanglement written out term by term over the amplitudes."""
    a1, a2, a3 = alpha.alpha1, alpha.alpha2, alpha.alpha3
    t1 = (SQRT3 / 3 * a1 + SQRT2 / 2 * a2 - SQRT6 / 6 * a3) ** 2
    t2 = (SQRT3 / 3 * a1 - SQRT2 / 2 * a2 - SQRT6 / 6 * a3) ** 2
    t3 = (SQRT3 / 3 * a1 + SQRT6 / 3 * a3) ** 2
    total = 0.0
    for t in (t1, t2, t3):
        if t > 0:
            total -= t * np.log(t) / np.log(3.0)
    return total


def schmidt_coefficients(state, raw=False):
    """Singular values of the amplitude matrix, descending."""
    if not raw:
        state = _require_normalized(state)
    return np.linalg.svd(amplitude_matrix(state), compute_uv=False)
