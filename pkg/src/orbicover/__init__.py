"""Orbifold covers of the torus and lifts of Anosov maps through them."""

from .covers import build_tower
from .dynamics import TorusMap, find_power, periodic_points
from .eqcomplex import bipartite_surface, circle_pattern_surface, quotient_signature
from .lifting import verify_lemma
from .orbifold import OrbifoldSignature
from .report import build_report, grid_report, verify_report

__version__ = "0.1.0"

__all__ = [
    "OrbifoldSignature",
    "TorusMap",
    "bipartite_surface",
    "build_report",
    "build_tower",
    "circle_pattern_surface",
    "find_power",
    "grid_report",
    "periodic_points",
    "quotient_signature",
    "verify_lemma",
    "verify_report",
]
