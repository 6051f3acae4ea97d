"""Exact-arithmetic laboratory for the discretised rotation
F(x, y) = (floor(lambda x) - y, x) and its near-integrable regime."""

from .arith import (
    LANDAU_RAMANUJAN_K,
    Rational,
    ceil_div,
    critical_count_up_to,
    critical_interval,
    critical_numbers_up_to,
    floor_div,
    floor_sqrt,
    is_critical,
    landau_ramanujan_ratio,
    next_critical,
    r_two_squares,
)
from .hamiltonian import (
    CriticalValueError,
    Polygon,
    PolygonClass,
    critical_circle_intersection,
    hamiltonian_value,
    p_affine,
    p_inverse,
    sides_count,
    trace_polygon,
    vertex_list,
)
from .lattice_map import (
    CapExceeded,
    Lambda,
    box_of,
    f4_apply,
    f4_inverse,
    f_apply,
    f_inverse,
    f_iterate,
    in_sigma,
    is_transition_point,
    measure_mu1,
    normalised_period,
    orbit_period,
    reversor_g,
    reversor_h,
    sweep_periods,
    v_field,
    w_at_box,
    w_field,
)
from .return_dynamics import (
    EmptyDomainError,
    HausdorffResult,
    NotRegularError,
    OrbitCode,
    RegularDomain,
    ReturnOrbit,
    hausdorff_shadowing,
    in_return_domain,
    measure_mu2,
    orbit_code,
    regular_domain,
    return_map,
    return_orbit,
    strip_map,
    strip_map_backward,
)
from .theory import (
    CodeCensus,
    DensityResult,
    InsufficientPopulationError,
    LatticeLe,
    TheoremAReport,
    class_label,
    coprimality_condition,
    count_codes,
    density_scan,
    is_symmetric_fixed_direct,
    is_symmetric_minimal_code,
    lattice_for_class,
    limit_density,
    phi_strip,
    q_sequence,
    verify_theorem_A,
    weak_coprimality_condition,
)

__version__ = "0.1.0"
