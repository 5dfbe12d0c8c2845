#ifndef VACQ_CAPRI_HPP
#define VACQ_CAPRI_HPP

#include <complex>

#include "vacq/report.hpp"
#include "vacq/well.hpp"

namespace vacq {

/// Contour and principal-value settings for the point-split charge
/// integrals along the imaginary energy axis E = iy.
struct QuadratureConfig {
    double y_max = 200.0;    ///< contour half-extent, > m
    int n_nodes = 8192;      ///< node budget per half-contour, >= 64
    double pv_delta = 1e-4;  ///< exclusion radius around E = 0, > 0
    int pv_richardson = 3;   ///< delta halvings for extrapolation
    double tol = 1e-4;       ///< target absolute tolerance

    /// Defaults scaled to the mass: y_max = 200 m, pv_delta = 1e-4 m.
    static QuadratureConfig defaults_for(const WellParameters& well);
    void validate(const WellParameters& well) const;

    QuadratureConfig doubled() const;  ///< n_nodes and y_max doubled
};

/// Contour-point kinematics at E = iy.
///
/// k = sqrt(E^2 - m^2) is the principal root, which is continuous along the
/// whole contour and purely imaginary with Im k > 0; kprime is the principal
/// root of (E + eta)^2 - m^2, continuous on each half-contour with
/// kprime(-iy) = conj(kprime(iy)) and Im kprime > 0 at y = 0+. With these
/// choices the full integrand (including the i dy measure) is
/// conjugate-symmetric under y -> -y, which forces the totals to be real.
/// The integrand itself depends on kprime only through kprime^2, so the
/// kprime cut never enters the values.
struct ContourPoint {
    std::complex<double> E;       ///< iy
    std::complex<double> k;       ///< sqrt(E^2 - m^2)
    std::complex<double> kprime;  ///< sqrt((E + eta)^2 - m^2)
    std::complex<double> Delta;   ///< k k' cos(k'a) + i [m^2 - E(E+eta)] sin(k'a)
};

/// Kinematics at contour parameter y (|Im kprime a| must stay below overflow;
/// the charge integrands use exponentially rescaled forms internally and have
/// no such restriction).
ContourPoint contour_point(const WellParameters& well, double y);

/// Point-split vacuum density inside the well from the principal-value
/// contour integral; requires |z| < a/2 and eta <= m. The imaginary residue
/// of the contour total is checked to be below 1e-10 of scale.
double capri_density(const WellParameters& well, double z,
                     const QuadratureConfig& quad);

/// Integral of capri_density over |z| < a/2, evaluated by its own closed-form
/// contour integrand (not by z-quadrature of the density).
ChargeReport capri_charge_integral(const WellParameters& well,
                                   const QuadratureConfig& quad);

/// The point-splitting correction inside the well: eta / pi, position
/// independent. Throws OutOfRegionError for |z| >= a/2 (the exterior value is
/// not defined here).
double delta_rho(const WellParameters& well, double z);

/// Composite point-split charge: capri_charge_integral plus eta a / pi.
ChargeReport total_charge_point_split(const WellParameters& well,
                                      const QuadratureConfig& quad);

} // namespace vacq

#endif
