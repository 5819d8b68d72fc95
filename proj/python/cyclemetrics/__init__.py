"""Python bindings for the cyclemetrics C++ library."""

from ._core import (
    Graph,
    ResourceError,
    congestion_exact,
    cycle_width,
    distances,
    dual_graph,
    find_isometric_cycle,
    gen_complete,
    gen_cycle,
    gen_lok_counterexample,
    gen_path,
    gen_rect_grid,
    gen_tri_grid,
    is_isometric_cycle,
    lemma36_conditions,
    longest_isometric_cycle,
    plane_cycle,
    plane_rect_grid,
    stretch_exact,
    subdivide,
    support_approx,
    support_exact,
    supported_value,
    verify_certificate,
    verify_duality,
)

__all__ = [name for name in dir() if not name.startswith("_")]
