"""Two-site Yangian generators, their ladder combinations, and operator realization.

A generator J^a at parameters (mu, nu, lam) is linear in the parameters,

    J^a = mu * A^a + nu * B^a + lam * C^a,

so the three component tensors are built once per convention and cached.
C^a is accumulated from the explicit site-pair weight table rather than a
pre-reduced formula.
"""
import functools
import itertools
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import su3
from .expr import OperatorExpr, parse_operator_expr

IDENTITY3 = np.eye(3, dtype=np.complex128)
ZERO_STATE_TOL = 1e-12


class ZeroFinalState(ArithmeticError):
    pass


class YangianParams(NamedTuple):
    mu: float
    nu: float
    lam: float

    @classmethod
    def structural(cls, lam, nu):
        """Parameters with the site-1 cancelling choice mu = lam/2."""
        return cls(lam / 2, nu, lam)

    @classmethod
    def preserving(cls, lam):
        """mu = lam/2 and mu + nu = 1."""
        return cls(lam / 2, 1 - lam / 2, lam)


@dataclass(frozen=True)
class SitePairWeight:
    """Antisymmetric weight omega_ij over the two sites.

    ``orientation=+1`` is omega_21 = +1, omega_12 = -1; ``-1`` reverses it.
    """

    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    def table(self):
        return np.array([[0, -1], [1, 0]]) * self.orientation


@dataclass(frozen=True)
class SiteConvention:
    """How the generators act on the antiquark site, and related sign choices.

    ``site2`` picks the fundamental or conjugate representation for the
    second site.  ``omega`` orients the site-pair weights.  ``ladder`` holds
    the signs (s_I, s_U, s_V) in X^{+-} = J^a +- i s_X J^b.
    """

    site2: str = "fundamental"
    omega: int = 1
    ladder: tuple = (1, 1, 1)

    def __post_init__(self):
        if self.site2 not in ("fundamental", "conjugate"):
            raise ValueError(f"site2 must be 'fundamental' or 'conjugate', got {self.site2!r}")
        SitePairWeight(self.omega)
        if len(self.ladder) != 3 or any(s not in (1, -1) for s in self.ladder):
            raise ValueError(f"ladder orientations must be three signs, got {self.ladder!r}")

    @property
    def name(self):
        parts = [self.site2]
        if self.omega == -1:
            parts.append("omega-reversed")
        flipped = "".join(x for x, s in zip("IUV", self.ladder) if s == -1)
        if flipped:
            parts.append(f"{flipped}-reversed")
        return "/".join(parts)

    @property
    def deviations(self):
        """Number of sign choices that differ from the as-written definitions."""
        return (self.omega == -1) + sum(s == -1 for s in self.ladder)

    def site2_generators(self):
        return su3.FUNDAMENTAL if self.site2 == "fundamental" else su3.CONJUGATE

    def __str__(self):
        return self.name


FUNDAMENTAL = SiteConvention("fundamental")
CONJUGATE = SiteConvention("conjugate")


def all_conventions():
    """Every site-2 / omega / ladder-orientation combination, fewest deviations first."""
    out = [SiteConvention(site2, omega, tuple(ladder))
           for site2, omega, ladder in itertools.product(
               ("fundamental", "conjugate"), (1, -1), itertools.product((1, -1), repeat=3))]
    return sorted(out, key=lambda c: (c.deviations, c.site2 != "fundamental"))


def convention_from_name(name):
    for conv in all_conventions():
        if conv.name == name:
            return conv
    raise ValueError(f"unknown convention {name!r}")


def site_operators(conv):
    """Generators embedded on each site: array of shape (2, 8, 9, 9)."""
    site1 = np.einsum("aij,kl->aikjl", su3.FUNDAMENTAL, IDENTITY3).reshape(8, 9, 9)
    site2 = np.einsum("ij,akl->aikjl", IDENTITY3, conv.site2_generators()).reshape(8, 9, 9)
    return np.stack([site1, site2])


@functools.lru_cache(maxsize=None)
def _components(conv):
    ops = site_operators(conv)
    omega = SitePairWeight(conv.omega).table()
    f = su3.STRUCTURE_CONSTANTS
    bilinear = np.zeros((8, 9, 9), dtype=np.complex128)
    for i, j in itertools.product(range(2), repeat=2):
        if i == j:
            continue
        # sum_bc f_abc I_i^b I_j^c
        prod = np.einsum("bxy,cyz->bcxz", ops[i], ops[j])
        bilinear += omega[i, j] * np.einsum("abc,bcxz->axz", f, prod)
    bilinear *= 0.5j
    for arr in (ops, bilinear):
        arr.setflags(write=False)
    return ops[0], ops[1], bilinear


def total_I(a, conv=FUNDAMENTAL):
    """I^a = F^a on site 1 plus the site-2 generator."""
    su3._check_index(a)
    site1, site2, _ = _components(conv)
    return site1[a - 1] + site2[a - 1]


def build_J(a, params, conv=FUNDAMENTAL):
    su3._check_index(a)
    mu, nu, lam = params
    site1, site2, bilinear = _components(conv)
    return mu * site1[a - 1] + nu * site2[a - 1] + lam * bilinear[a - 1]


def build_J_reduced(a, params, conv=FUNDAMENTAL):
    """Closed form mu F^a x 1 + nu 1 x F~^a - i omega_21 lam f_abc F^b x F~^c.

    Independent check on the weight-table accumulation in ``build_J``.
    """
    su3._check_index(a)
    mu, nu, lam = params
    g2 = conv.site2_generators()
    out = mu * np.kron(su3.FUNDAMENTAL[a - 1], IDENTITY3) + nu * np.kron(IDENTITY3, g2[a - 1])
    for b, c in itertools.product(range(8), repeat=2):
        fabc = su3.STRUCTURE_CONSTANTS[a - 1, b, c]
        if fabc:
            out = out - 1j * conv.omega * lam * fabc * np.kron(su3.FUNDAMENTAL[b], g2[c])
    return out


_LADDER_PAIRS = {"I": (1, 2, 0), "U": (6, 7, 1), "V": (4, 5, 2)}


def ladder(symbol, params, conv=FUNDAMENTAL):
    """Ladder or diagonal operator named by an expression symbol."""
    if symbol == "I3":
        return build_J(3, params, conv)
    if symbol == "I8":
        return 2 / np.sqrt(3.0) * build_J(8, params, conv)
    if len(symbol) == 2 and symbol[0] in _LADDER_PAIRS and symbol[1] in "+-":
        a, b, k = _LADDER_PAIRS[symbol[0]]
        sign = (1 if symbol[1] == "+" else -1) * conv.ladder[k]
        return build_J(a, params, conv) + sign * 1j * build_J(b, params, conv)
    raise ValueError(f"unknown ladder symbol {symbol!r}")


def realize(expr, params, conv=FUNDAMENTAL):
    """9x9 matrix of an OperatorExpr (or expression text)."""
    if isinstance(expr, str):
        expr = parse_operator_expr(expr)
    out = np.zeros((9, 9), dtype=np.complex128)
    for coeff, sym in expr.terms:
        out += coeff * ladder(sym, params, conv)
    return out


def apply(op, state, normalize=False):
    out = np.asarray(op) @ np.asarray(state)
    if normalize:
        n = np.linalg.norm(out)
        if n < ZERO_STATE_TOL:
            raise ZeroFinalState(f"transition operator annihilates the state (norm {n:.3e})")
        out = out / n
    return out


__all__ = [
    "OperatorExpr", "YangianParams", "SitePairWeight", "SiteConvention", "ZeroFinalState",
    "FUNDAMENTAL", "CONJUGATE", "all_conventions", "convention_from_name", "total_I",
    "build_J", "build_J_reduced", "ladder", "realize", "apply", "site_operators",
]
