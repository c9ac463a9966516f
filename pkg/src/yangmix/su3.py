"""Gell-Mann basis, fundamental/conjugate generators and su(3) structure constants.

Indices follow the physics convention and run from 1 to 8.
"""
import itertools

import numpy as np

SQRT3 = np.sqrt(3.0)

# Nonzero f_abc for a < b < c; everything else follows from total antisymmetry.
CANONICAL_F = {
    (1, 2, 3): 1.0,
    (1, 4, 7): 0.5,
    (2, 4, 6): 0.5,
    (2, 5, 7): 0.5,
    (3, 4, 5): 0.5,
    (1, 5, 6): -0.5,
    (3, 6, 7): -0.5,
    (4, 5, 8): SQRT3 / 2,
    (6, 7, 8): SQRT3 / 2,
}


def _build_gell_mann():
    lam = np.zeros((8, 3, 3), dtype=np.complex128)
    lam[0][0, 1] = lam[0][1, 0] = 1
    lam[1][0, 1], lam[1][1, 0] = -1j, 1j
    lam[2] = np.diag([1, -1, 0])
    lam[3][0, 2] = lam[3][2, 0] = 1
    lam[4][0, 2], lam[4][2, 0] = -1j, 1j
    lam[5][1, 2] = lam[5][2, 1] = 1
    lam[6][1, 2], lam[6][2, 1] = -1j, 1j
    lam[7] = np.diag([1, 1, -2]) / SQRT3
    lam.setflags(write=False)
    return lam


GELL_MANN = _build_gell_mann()
FUNDAMENTAL = GELL_MANN / 2
CONJUGATE = -np.transpose(FUNDAMENTAL, (0, 2, 1))
FUNDAMENTAL.setflags(write=False)
CONJUGATE.setflags(write=False)


def _check_index(a):
    if not (isinstance(a, (int, np.integer)) and 1 <= a <= 8):
        raise IndexError(f"su(3) generator index must be an integer in 1..8, got {a!r}")


def gell_mann(a):
    """Return the Gell-Mann matrix lambda^a (a copy)."""
    _check_index(a)
    return GELL_MANN[a - 1].copy()


def fundamental_generator(a):
    """Return F^a = lambda^a / 2."""
    _check_index(a)
    return FUNDAMENTAL[a - 1].copy()


def conjugate_generator(a):
    """Return the conjugate-representation generator -(F^a)^T."""
    _check_index(a)
    return CONJUGATE[a - 1].copy()


def commutator(x, y):
    return x @ y - y @ x


def _trace_structure_constants():
    f = np.zeros((8, 8, 8))
    imag = 0.0
    for a, b, c in itertools.product(range(8), repeat=3):
        val = np.trace(commutator(GELL_MANN[a], GELL_MANN[b]) @ GELL_MANN[c]) / 4j
        f[a, b, c] = val.real
        imag = max(imag, abs(val.imag))
    if imag > 1e-14:
        raise ArithmeticError(f"structure constants have imaginary residual {imag:.3e}")
    return f


def canonical_table():
    """Dense 8x8x8 table built from CANONICAL_F by antisymmetric extension."""
    f = np.zeros((8, 8, 8))
    for (a, b, c), val in CANONICAL_F.items():
        a, b, c = a - 1, b - 1, c - 1
        f[a, b, c] = f[b, c, a] = f[c, a, b] = val
        f[b, a, c] = f[a, c, b] = f[c, b, a] = -val
    return f


def _checked_table():
    f = _trace_structure_constants()
    mismatch = np.max(np.abs(f - canonical_table()))
    if mismatch > 1e-14:
        raise ArithmeticError(
            f"trace-derived structure constants disagree with the canonical list by {mismatch:.3e}")
    f.setflags(write=False)
    return f


STRUCTURE_CONSTANTS = _checked_table()


def structure_constant(a, b, c):
    """f_abc = Tr([lambda^a, lambda^b] lambda^c) / (4i)."""
    for idx in (a, b, c):
        _check_index(idx)
    return float(STRUCTURE_CONSTANTS[a - 1, b - 1, c - 1])


def commutator_residual(generators):
    """Max entrywise |[T^a,T^b] - i f_abc T^c| over all 64 ordered pairs."""
    worst = 0.0
    for a, b in itertools.product(range(8), repeat=2):
        rhs = 1j * np.einsum("c,cij->ij", STRUCTURE_CONSTANTS[a, b], generators)
        worst = max(worst, np.max(np.abs(commutator(generators[a], generators[b]) - rhs)))
    return float(worst)
