
__all__ = (
    "default_tolerance",
    "strict_margin",
    "monotone_tolerance",
    "weight_sum_tolerance",
    "relative_equality_tolerance",
    "alpha_range_snap",
    "default_chord_pairs",
    "default_chord_lambdas",
    "default_derivative_points",
    "default_support_points",
    "taylor_grid_points",
    "default_taylor_width",
    "default_h",
    "ml_epsilon",
    "ml_ratio_threshold",
    "ml_max_terms",
    "ml_precision",
    "quad_tolerance",
    "quad_max_evaluations",
    "riemann_default_ns",
    "csv_significant_digits",
    "max_witnesses"
)

# Verdict tolerances
default_tolerance = 1e-9  # Absolute tolerance on inequality margins
strict_margin = 1e-10  # Margin for strict convexity, ties within it are inconclusive
monotone_tolerance = 1e-10  # Slack for non-decreasing and sign checks of derivatives
weight_sum_tolerance = 1e-12  # Jensen weights must sum to one within it
relative_equality_tolerance = 1e-9  # Equality flags (proportional vectors, equal data)
alpha_range_snap = 1e-12  # Stop of start:stop:step is included when it lands within it

# Sampling grids
default_chord_pairs = 50
default_chord_lambdas = 41  # lambda in {0, 1/40, ..., 1}
default_derivative_points = 201
default_support_points = 41  # Nodes, all ordered pairs are checked
taylor_grid_points = 1001
default_taylor_width = 1.0  # Remainder interval is [x0, x0 + width] if not given

# Numeric difference quotient step
default_h = 1e-6

# Mittag-Leffler series truncation
ml_epsilon = 1e-15
ml_ratio_threshold = 0.5
ml_max_terms = 100_000
ml_precision = 1e-8  # Largest relative rounding error accepted from an alternating sum

# Quadrature of base images in fractal mode
quad_tolerance = 1e-10
quad_max_evaluations = 1_000_000

# Literal Riemann sum diagnostic
riemann_default_ns = (100, 1000, 10000)

# Reports
csv_significant_digits = 17
max_witnesses = 10  # Witnesses kept per report, first ones in grid order
