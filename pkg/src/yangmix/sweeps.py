"""Parameter grids behind the three entanglement surfaces, written as CSV."""
import csv
import io
from dataclasses import dataclass, field

import numpy as np

from .claims import EQ7_OP, EQ9_OP, closed_form_C_final, physical_C_final
from .states import NORM_TOL, MixingAmplitudes, entanglement_degree_closed_form
from .yangian import FUNDAMENTAL, YangianParams, ZeroFinalState

FIG_ALPHA = MixingAmplitudes(0.5, 0.5, np.sqrt(0.5))
DEFAULT_NU_RANGE = (-1.0, 1.0)
DEFAULT_LAMBDA_RANGE = (-2.0, 2.0)


def fmt(x):
    """Fixed 12-significant-digit rendering used for every printed number."""
    return "%#.12g" % x


@dataclass
class SweepGrid:
    axes: tuple
    steps: tuple
    rows: list = field(default_factory=list)
    mode: str = ""

    def values(self):
        """Grid values as a float array of shape ``steps``; missing entries are NaN."""
        vals = [np.nan if r[-1] is None else r[-1] for r in self.rows]
        return np.array(vals, dtype=float).reshape(self.steps)

    def coordinates(self):
        return np.array([r[:-1] for r in self.rows], dtype=float)

    def to_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(list(self.axes) + ["C"])
        for *coords, value in self.rows:
            w.writerow([fmt(c) for c in coords] + ["" if value is None else fmt(value)])

    def csv_text(self):
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()


def axis(lo, hi, n):
    """n points from lo to hi, mirror-symmetric about the midpoint in floating point."""
    if n < 2:
        raise ValueError("a sweep axis needs at least 2 steps")
    if not hi > lo:
        raise ValueError(f"empty range [{lo}, {hi}]")
    center, half = (lo + hi) / 2, (hi - lo) / 2
    k = np.arange(n)
    return center + half * (2 * k - (n - 1)) / (n - 1)


def alpha_on_disk(a1, a2):
    """Mixing amplitudes with alpha3 = +sqrt(1 - a1^2 - a2^2), or None off the disk."""
    r2 = a1 * a1 + a2 * a2
    if r2 > 1 + NORM_TOL:
        return None
    a3 = np.sqrt(max(0.0, 1 - r2))
    if r2 > 1:
        # rescale boundary round-off
        return MixingAmplitudes.normalized(a1, a2, 0.0)
    return MixingAmplitudes(float(a1), float(a2), float(a3))


def sweep_fig1(n):
    grid = SweepGrid(("alpha1", "alpha2"), (n, n), mode="closed form")
    pts = axis(-1.0, 1.0, n)
    for a1 in pts:
        for a2 in pts:
            alpha = alpha_on_disk(a1, a2)
            value = None if alpha is None else entanglement_degree_closed_form(alpha)
            grid.rows.append((float(a1), float(a2), value))
    return grid


def _sweep_final(example, n, nu_range, lam_range, mode, conv, alpha):
    if mode not in ("paper", "physical"):
        raise ValueError(f"mode must be 'paper' or 'physical', got {mode!r}")
    op = EQ7_OP if example == "eq8" else EQ9_OP
    label = "paper mode (inferred)" if mode == "paper" else "physical mode"
    grid = SweepGrid(("nu", "lambda"), (n, n), mode=label)
    for nu in axis(*nu_range, n):
        for lam in axis(*lam_range, n):
            if mode == "paper":
                value = closed_form_C_final(example, alpha, nu, lam)
            else:
                try:
                    value = physical_C_final(op, alpha, YangianParams.structural(lam, nu), conv)
                except ZeroFinalState:
                    value = None
            grid.rows.append((float(nu), float(lam), value))
    return grid


def sweep_fig3(n, nu_range=DEFAULT_NU_RANGE, lam_range=DEFAULT_LAMBDA_RANGE, mode="paper",
               conv=FUNDAMENTAL, alpha=FIG_ALPHA):
    """V+ + V- final-state entanglement over (nu, lam) with mu = lam/2."""
    return _sweep_final("eq8", n, nu_range, lam_range, mode, conv, alpha)


def sweep_fig5(n, nu_range=DEFAULT_NU_RANGE, lam_range=DEFAULT_LAMBDA_RANGE, mode="paper",
               conv=FUNDAMENTAL, alpha=FIG_ALPHA):
    """I8 final-state entanglement over (nu, lam) with mu = lam/2."""
    return _sweep_final("eq10", n, nu_range, lam_range, mode, conv, alpha)


def sweep(figure, n, **kwargs):
    if figure == 1:
        return sweep_fig1(n)
    if figure == 3:
        return sweep_fig3(n, **kwargs)
    if figure == 5:
        return sweep_fig5(n, **kwargs)
    raise ValueError(f"figure must be 1, 3 or 5, got {figure!r}")
