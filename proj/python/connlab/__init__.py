"""Connection, Green, Dirac and Hodge operators of finite abstract
simplicial complexes, with exact identity verification, simplicial dynamics
and discrete wave evolution."""

from fractions import Fraction

from connlab._core import (  # noqa: F401
    Complex,
    SimplicialMap,
    attractor,
    betti,
    boundary_sign,
    causality_check,
    chebyshev_series_check,
    complex_to_text,
    connection_degrees,
    connection_matrix,
    det_connection,
    dirac,
    dirac_degrees,
    dynamical_matrices,
    dynamical_zeta,
    eigh,
    emit_figures,
    exterior_derivative,
    find_automorphisms,
    fixed_points,
    green_matrix,
    heat_deformation_check,
    hodge,
    hodge_block,
    interlace_check,
    koopman,
    lefschetz_number,
    loewner_margins,
    mckean_singer_check,
    parse_complex,
    scan_green_top,
    scan_loewner,
    scan_spectral_radius,
    signature,
    spectrum,
    symplectic_evolve,
    verify_all,
    verify_lefschetz,
    wave_solve,
    boundary_solve,
    zeta,
)
from connlab import _core as _impl


def analytic_torsion(complex) -> Fraction:
    """Analytic torsion as an exact fraction."""
    num, den = _impl.analytic_torsion(complex)
    return Fraction(int(num), int(den))


__all__ = [name for name in dir() if not name.startswith("_")]
