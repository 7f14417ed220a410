"""Combinatorial maps on the torus: the closure bijection between balanced
unicellular maps and hexagon-rooted 6-quadrangulations, the hexagon
decomposition, exact counting series and a brute-force oracle."""

from .bijection import add_dummy, canonical_biorientation, close_all, open_map, phi, psi
from .core.maps import BLACK, WHITE, CombMap, angular_map, build_map, dual, iso, primal_from_angular
from .core.regions import is_in_H, is_in_Q, is_in_T
from .decomposition import iota, iota_inverse, maximal_enclosing_hexagon, patch, split, v_of_D
from .errors import MapError
from .kernels import BACKEND
from .orientations import Biorientation
from .unicellular import classify, enumerate_Ubal, is_balanced

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BLACK",
    "WHITE",
    "Biorientation",
    "CombMap",
    "MapError",
    "add_dummy",
    "angular_map",
    "build_map",
    "canonical_biorientation",
    "classify",
    "close_all",
    "dual",
    "enumerate_Ubal",
    "iota",
    "iota_inverse",
    "is_balanced",
    "is_in_H",
    "is_in_Q",
    "is_in_T",
    "iso",
    "maximal_enclosing_hexagon",
    "open_map",
    "patch",
    "phi",
    "primal_from_angular",
    "psi",
    "split",
    "v_of_D",
]
