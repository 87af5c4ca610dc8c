"""Exact census and certified lower bounds for empty two-colored triangles."""

from ._rrb import (
    PointSet,
    bicolor,
    census_fast,
    census_oracle,
    ceiling_fact_scan,
    certificate,
    count_k_holes,
    gen_circle_pair,
    gen_horton,
    gen_random_gp,
    horton_scan,
    minimize_rrb,
    p_min,
    render_fan_svg,
    sector_witness_triangles,
    verify,
    witness_for_pair,
    __version__,
)

__all__ = [
    "PointSet",
    "bicolor",
    "census_fast",
    "census_oracle",
    "ceiling_fact_scan",
    "certificate",
    "count_k_holes",
    "gen_circle_pair",
    "gen_horton",
    "gen_random_gp",
    "horton_scan",
    "minimize_rrb",
    "p_min",
    "render_fan_svg",
    "sector_witness_triangles",
    "verify",
    "witness_for_pair",
    "__version__",
]
