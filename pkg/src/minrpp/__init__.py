"""Jordan recoverability for minuscule heaps: rho, its inverse, and toggles."""

from .bijection import SplitObject, Window, rho, rho_inverse, rho_window, rho_xi, split_for_rpp
from .dynkin import DynkinDiagram, DynkinQuiver
from .heap import MinusculeHeap, minuscule_heap
from .rpp import INF, Rpp, cofin, promotion, toggle, toggle_fibre

__all__ = [
    "DynkinDiagram", "DynkinQuiver", "MinusculeHeap", "minuscule_heap", "Rpp", "INF", "cofin",
    "toggle", "toggle_fibre", "promotion", "rho", "rho_inverse", "rho_window", "rho_xi",
    "SplitObject", "Window", "split_for_rpp",
]
