"""Divisions of coin sets among players and their fractal structure.

The heavy lifting lives in the compiled extension ``coinfrac._core``; this
package re-exports its public surface.
"""

from ._core import (
    CoinSet,
    DimensionResult,
    GeometricFamily,
    ResourceCapError,
    analyze_report,
    cantor_dimension,
    cantor_phi,
    classify,
    construct_inductive,
    convergence_distances,
    convergence_report,
    embed,
    enumerate_divisions,
    first_unreachable,
    generator_set,
    hausdorff_distance,
    is_cantor_digit_string,
    is_complete,
    make_cent,
    make_geometric,
    parse_csv,
    render_pgm,
    render_svg,
    scaled_embedded_points,
    similarity_dimension,
    to_csv,
)

__all__ = [
    "CoinSet",
    "DimensionResult",
    "GeometricFamily",
    "ResourceCapError",
    "analyze_report",
    "cantor_dimension",
    "cantor_phi",
    "classify",
    "construct_inductive",
    "convergence_distances",
    "convergence_report",
    "embed",
    "enumerate_divisions",
    "first_unreachable",
    "generator_set",
    "hausdorff_distance",
    "is_cantor_digit_string",
    "is_complete",
    "make_cent",
    "make_geometric",
    "parse_csv",
    "render_pgm",
    "render_svg",
    "scaled_embedded_points",
    "similarity_dimension",
    "to_csv",
]

__version__ = "1.0.0"
