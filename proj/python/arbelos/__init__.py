"""Arbelos areas, dimensionless radii and numerical verification."""

from ._core import (  # noqa: F401
    ArbelosConfig,
    ArbelosError,
    AreaReport,
    Branch,
    DimensionlessState,
    Estimate,
    Figure,
    OracleConfig,
    OracleMethod,
    Point,
    Radii,
    Region,
    RenderOptions,
    Semicircle,
    VerificationReport,
    __version__,
    area_decomposition,
    build_figure,
    chord_from_radii,
    complete_state,
    denormalize,
    estimate_area,
    in_knife,
    in_semicircle,
    knife_area,
    knife_area_ratio,
    normalize,
    radii_from_chord,
    render_figure,
    semicircle_areas,
    solve_r1,
    validate_config,
    verify_config,
    verify_geometric_mean,
    verify_right_angle,
)
