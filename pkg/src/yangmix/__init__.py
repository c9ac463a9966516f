"""Two-site Yangian Y(su(3)) transition operators on quark-antiquark qutrit pairs."""
from .claims import ClaimReport, calibrate_conventions, verify
from .expr import OperatorExpr, parse_operator_expr
from .mesons import Meson, decompose, meson_vector
from .states import (MixingAmplitudes, entanglement_degree, entanglement_degree_closed_form,
                     initial_state, reduced_density, schmidt_coefficients)
from .yangian import SiteConvention, YangianParams, apply, build_J, ladder, realize

__version__ = "0.1.0"

__all__ = [
    "ClaimReport", "calibrate_conventions", "verify", "OperatorExpr", "parse_operator_expr",
    "Meson", "decompose", "meson_vector", "MixingAmplitudes", "entanglement_degree",
    "entanglement_degree_closed_form", "initial_state", "reduced_density",
    "schmidt_coefficients", "SiteConvention", "YangianParams", "apply", "build_J", "ladder",
    "realize",
]
