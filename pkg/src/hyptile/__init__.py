"""hyptile: hyperbolic polygon construction, tiling combinatorics, and
the verification suites built on them.

The package works in the hyperboloid model (signature -,+,+).  Core
primitives live in `core`; polygons and their reductions in `polygon`;
the constructive side (regular polygons, triangle/rhombus tiles,
equilateral even-gons with prescribed angles) in `construct`; vertex
combinatorics of tilings in `tiling`; the Euclidean regular-n-gon area
calculus in `euclid`; Poincare-disk SVG output in `render`; and the
named verification suites in `verify` (CLI: `hyptile verify <suite>`).
"""

from .core import (
    EPS_ANGLE,
    EPS_POINT,
    HPoint,
    Isometry,
    ORIGIN,
    RegularMetrics,
    angle_at,
    azimuth_from,
    boost_from,
    boost_to,
    dist,
    from_polar,
    lift,
    mdot,
    point_reflect,
    regular_angle_for_area,
    regular_metrics,
    side_from_angles,
    triangle_from_angles,
)
from .errors import (
    ClosureError,
    ConstructionError,
    DataError,
    DegeneracyError,
    DomainError,
    GeometryError,
    HypTileError,
    InfeasibleError,
)
from .polygon import (
    AngleClassification,
    Polygon,
    area,
    concave_vertices,
    convex_hull,
    fan_area,
    flatten,
    flatten_complementary_pair,
    from_side_angle_data,
    insert_degenerate_vertices,
    is_embedded,
    load_polygon,
    perimeter,
    polygon_from_json,
    polygon_to_json,
    reduce_equivalent,
    save_polygon,
)
from .construct import (
    Chain,
    EvenGonSolution,
    IsoTriangleParams,
    TileParams,
    build_chain,
    equilateral_even_gon,
    equilateral_tile,
    equilateral_tile_params,
    iso_triangle_params,
    isosceles_triangle_tile,
    regular_polygon,
    rhombic_tile,
    solve_equilateral_even_gon,
    walk_polygon,
)
from .tiling import (
    ComboSolution,
    DegreeAudit,
    Face,
    TilingGraph,
    angle_combinations,
    angle_combinations_rational,
    degree_audit,
    graph_from_json,
    graph_to_json,
    gs_condition,
    klein_quartic,
    margulis_check,
    regular_tiles,
    scalene_witness,
    square_torus,
)
from .euclid import (
    A_of_n,
    ConcavityReport,
    JensenReport,
    concavity_report,
    halving_inequality,
    jensen_audit,
)
from .render import disk_point, polygon_svg, save_svg
from .verify import SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = [
    "EPS_ANGLE", "EPS_POINT", "HPoint", "Isometry", "ORIGIN", "RegularMetrics",
    "angle_at", "azimuth_from", "boost_from", "boost_to", "dist", "from_polar",
    "lift", "mdot", "point_reflect", "regular_angle_for_area", "regular_metrics",
    "side_from_angles", "triangle_from_angles",
    "ClosureError", "ConstructionError", "DataError", "DegeneracyError",
    "DomainError", "GeometryError", "HypTileError", "InfeasibleError",
    "AngleClassification", "Polygon", "area", "concave_vertices", "convex_hull",
    "fan_area", "flatten", "flatten_complementary_pair", "from_side_angle_data",
    "insert_degenerate_vertices", "is_embedded", "load_polygon", "perimeter",
    "polygon_from_json", "polygon_to_json", "reduce_equivalent", "save_polygon",
    "walk_polygon",
    "Chain", "EvenGonSolution", "IsoTriangleParams", "TileParams", "build_chain",
    "equilateral_even_gon", "equilateral_tile", "equilateral_tile_params",
    "iso_triangle_params", "isosceles_triangle_tile", "regular_polygon",
    "rhombic_tile", "solve_equilateral_even_gon",
    "ComboSolution", "DegreeAudit", "Face", "TilingGraph", "angle_combinations",
    "angle_combinations_rational", "degree_audit", "graph_from_json",
    "graph_to_json", "gs_condition", "klein_quartic", "margulis_check",
    "regular_tiles", "scalene_witness", "square_torus",
    "A_of_n", "ConcavityReport", "JensenReport", "concavity_report",
    "halving_inequality", "jensen_audit",
    "disk_point", "polygon_svg", "save_svg",
    "SUITE_NAMES", "run_suite",
    "__version__",
]
