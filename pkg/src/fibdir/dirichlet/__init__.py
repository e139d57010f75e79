"""Evaluation of the Dirichlet series attached to delta(n)."""

from .continuation import continue_F, residue_at, series_value
from .kseries import k_eval, p_eval, q_eval
from .numerics import binom_coeffs, richardson
from .poles import PolePoint, nearest_pole, pole_zeros
from .series import DENSITY, RESIDUE, EvalResult, SeriesId, direct_sum
from .zeta import zeta_ref, zeta_relation_check, zeta_relation_sides

__all__ = [
    "DENSITY",
    "RESIDUE",
    "EvalResult",
    "PolePoint",
    "SeriesId",
    "binom_coeffs",
    "continue_F",
    "direct_sum",
    "k_eval",
    "nearest_pole",
    "p_eval",
    "pole_zeros",
    "q_eval",
    "residue_at",
    "richardson",
    "series_value",
    "zeta_ref",
    "zeta_relation_check",
    "zeta_relation_sides",
]
