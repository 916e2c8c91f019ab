"""Exact combinatorics and geometry for the Hadamard map on the simplex category."""
from .hadamard import factor_hadamard, hadamard, homotopy, homotopy_endpoints
from .promonoidal import (
    DayClass,
    KernelClass,
    day_level,
    delta,
    eta,
    eta_inverse,
    kernel_act,
    normalize_kernel,
    theta,
    truncation_stability,
)
from .realization import (
    BaryPoint,
    PrismPoint,
    affine_image,
    cell_decompose,
    compare_on_grid,
    homotopy_point,
    realize_map,
    standard_contraction,
)
from .simplex import (
    MonotoneMap,
    compose,
    constant_map,
    count_maps,
    enumerate_maps,
    identity,
    make_map,
    terminal_map,
    vertex_map,
)

__version__ = "0.1.0"
