#ifndef VACQ_SPECTRUM_HPP
#define VACQ_SPECTRUM_HPP

#include <array>
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "vacq/well.hpp"

namespace vacq {

enum class Branch {
    SkyContinuum,  ///< E >= m
    SeaContinuum,  ///< E <= -m
    Bound,         ///< 0 < E < m
};

/// Degeneracy label for continuum modes. The symmetric well makes parity the
/// natural doubling index: Even means (psi1 even, psi2 odd) under z -> -z.
enum class Parity { Even, Odd };

using Spinor = std::array<std::complex<double>, 2>;

/// One eigensolution of (-i sigma1 d/dz + m sigma3 + V(z)) psi = E psi.
///
/// Continuum modes are delta-normalized against the measure dp1/(2 pi):
/// asymptotically they are phase-shifted standing waves with the same
/// amplitude as the free parity modes. Bound modes are unit-normalized.
/// The evaluator is exact piecewise; at z = +-a/2 it returns the
/// interior-side limit.
class SpectralMode {
public:
    Branch branch() const { return branch_; }
    Parity parity() const { return parity_; }
    double energy() const { return energy_; }
    double momentum() const { return p_; }           ///< exterior p1 (continuum), 0 for bound
    const WellParameters& well() const { return well_; }

    Spinor spinor(double z) const;
    double density(double z) const;                  ///< psi^dagger psi, exactly even in z
    double phase_shift() const { return phase_shift_; }

private:
    friend SpectralMode free_mode(double m, double p1, Parity j, Branch branch);
    friend SpectralMode scattering_mode(const WellParameters& well, double p1,
                                        Parity j, Branch branch);
    friend std::vector<SpectralMode> bound_modes(const WellParameters& well);

    Branch branch_ = Branch::SkyContinuum;
    Parity parity_ = Parity::Even;
    WellParameters well_;
    double energy_ = 0.0;
    double p_ = 0.0;           // exterior momentum (continuum)
    double kp2_ = 0.0;         // interior k'^2 = (E+eta)^2 - m^2
    double amp_ext_ = 0.0;     // continuum: B; bound: edge amplitude
    double amp_int_ = 0.0;     // interior amplitude (A, signed)
    double phase_shift_ = 0.0; // continuum: delta in cos(p|z| + delta)
    double kappa_ = 0.0;       // bound: exterior decay rate
};

SpectralMode free_mode(double m, double p1, Parity j, Branch branch);

/// Piecewise plane-wave solution matched at z = +-a/2 (both components
/// continuous). Reduces exactly to free_mode when eta = 0. Rejects p1 = 0
/// (degenerate matching) and eta > m.
SpectralMode scattering_mode(const WellParameters& well, double p1, Parity j,
                             Branch branch);

struct BoundStateSet {
    WellParameters well;
    std::vector<double> energies;  ///< strictly increasing, all in (0, m)
};

/// Positive-energy bound levels from a bracketing scan of the matching
/// functions refined by bisection to 1e-12 relative. Requires 0 < eta <= m.
BoundStateSet bound_state_energies(const WellParameters& well);

/// Unit-normalized bound eigenmodes, ordered by energy.
std::vector<SpectralMode> bound_modes(const WellParameters& well);

/// Matching functions whose roots in (max(0, m - eta), m) are the bound
/// levels; exposed so tests can scan them independently of the root finder.
double bound_matching(const WellParameters& well, double energy, Parity j);

/// Max over the grid of ||(H0 + V - E) psi(z)||_2, with d/dz taken by
/// 7-point finite differences; stencils never straddle the well edges
/// (one-sided stencils take over near +-a/2, where V is discontinuous).
/// The grid must be uniformly spaced and avoid the points +-a/2 themselves.
double mode_residual(const SpectralMode& mode, const WellParameters& well,
                     std::span<const double> z_grid);

/// Same instrument for an arbitrary candidate eigenfunction.
double mode_residual(double energy, const WellParameters& well,
                     const std::function<Spinor(double)>& psi,
                     std::span<const double> z_grid);

} // namespace vacq

#endif
