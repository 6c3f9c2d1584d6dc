"""Maximal product-state overlap and geometric entanglement of three-qubit pure states."""

from .analytic import AnalyticPmax, Unavailable, classify, pmax_analytic, pmax_wlike
from .bloch import BlochForm2, BlochForm3, bloch2, bloch3, correlators
from .canonical import AcinForm, WLikeParams, acin_decompose, schmidt2, wlike_standard_form
from .errors import GroverianError
from .invariants import Invariants, check_relations, invariants_from_acin, invariants_from_state
from .numeric import OptimizerConfig, PmaxResult, pmax_grid_lower_bound, pmax_numeric_2site, pmax_numeric_3site
from .states import ProductState, from_acin, from_wlike, ghz_state, random_state, w_state

__all__ = [
    "AcinForm", "AnalyticPmax", "BlochForm2", "BlochForm3", "GroverianError", "Invariants",
    "OptimizerConfig", "PmaxResult", "ProductState", "Unavailable", "WLikeParams",
    "acin_decompose", "bloch2", "bloch3", "check_relations", "classify", "correlators",
    "from_acin", "from_wlike", "ghz_state", "invariants_from_acin", "invariants_from_state",
    "pmax_analytic", "pmax_grid_lower_bound", "pmax_numeric_2site", "pmax_numeric_3site",
    "pmax_wlike", "random_state", "schmidt2", "w_state", "wlike_standard_form",
]
