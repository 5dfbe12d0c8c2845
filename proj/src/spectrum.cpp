#include "vacq/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "vacq/errors.hpp"

namespace vacq {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

// cos(sqrt(w) x) and sin(sqrt(w) x)/sqrt(w) as entire functions of w, valid
// for oscillatory (w > 0) and evanescent (w < 0) interiors alike.
struct TrigPair {
    double c;
    double s;
};

TrigPair trig_of_w(double w, double x) {
    if (std::abs(w) * x * x < 1e-12) {
        const double wx2 = w * x * x;
        return {1.0 - 0.5 * wx2, x * (1.0 - wx2 / 6.0)};
    }
    if (w > 0.0) {
        const double r = std::sqrt(w);
        return {std::cos(r * x), std::sin(r * x) / r};
    }
    const double r = std::sqrt(-w);
    return {std::cosh(r * x), std::sinh(r * x) / r};
}

void require_regime(const WellParameters& well, const char* op) {
    if (!(well.eta <= well.m))
        throw RegimeError(std::string(op) + ": requires eta <= m (got eta = " +
                          std::to_string(well.eta) + ", m = " + std::to_string(well.m) + ")");
}

double continuum_amplitude(Branch branch, double energy, double m) {
    // asymptotic standing-wave amplitude of the delta-normalized parity modes
    return (branch == Branch::SkyContinuum) ? std::sqrt((energy + m) / energy)
                                            : std::sqrt((energy - m) / energy);
}

struct BoundRoot {
    double energy;
    Parity parity;
};

double matching_function(const WellParameters& well, double energy, Parity j) {
    const double m = well.m;
    const double eta = well.eta;
    const double kp2 = (energy + eta - m) * (energy + eta + m);
    const TrigPair half = trig_of_w(kp2, 0.5 * well.a);
    const double kappa = std::sqrt(std::max((m - energy) * (m + energy), 0.0));
    if (j == Parity::Even)
        return (energy + m) * (energy + eta - m) * half.s - kappa * half.c;
    return kappa * (energy + eta + m) * half.s + (energy + m) * half.c;
}

std::vector<BoundRoot> find_bound_roots(const WellParameters& well, int n_scan) {
    const double m = well.m;
    const double lo = std::max(0.0, m - well.eta);
    std::vector<BoundRoot> roots;
    for (Parity j : {Parity::Even, Parity::Odd}) {
        auto f = [&](double energy) { return matching_function(well, energy, j); };
        const double step = (m - lo) / n_scan;
        double e0 = lo;
        double f0 = f(e0);
        for (int i = 0; i < n_scan; ++i) {
            const double e1 = (i + 1 == n_scan) ? m : lo + (i + 1) * step;
            const double f1 = f(e1);
            if (f0 == 0.0) {
                roots.push_back({e0, j});
            } else if (f0 * f1 < 0.0) {
                double a = e0, b = e1, fa = f0;
                for (int iter = 0; iter < 200 && (b - a) > 1e-15 * m; ++iter) {
                    const double mid = 0.5 * (a + b);
                    const double fm = f(mid);
                    if (fm == 0.0) {
                        a = b = mid;
                        break;
                    }
                    if ((fa < 0.0) == (fm < 0.0)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                roots.push_back({0.5 * (a + b), j});
            }
            e0 = e1;
            f0 = f1;
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const BoundRoot& x, const BoundRoot& y) { return x.energy < y.energy; });
    return roots;
}

// sin(k'a)/k' and its partner integrals over the well interior,
// int cos^2(k'z) dz and int (sin(k'z)/k')^2 dz on (-a/2, a/2).
struct InteriorIntegrals {
    double ic;
    double is;
};

InteriorIntegrals interior_integrals(double kp2, double a, double ch, double sh) {
    const double s2 = 2.0 * sh * ch;  // sin(k'a)/k', entire in k'^2
    const double ic = 0.5 * (a + s2);
    double is;
    if (std::abs(kp2) * a * a < 1e-6) {
        const double a2 = a * a;
        is = (a * a2 / 12.0) * (1.0 - kp2 * a2 / 20.0 + kp2 * kp2 * a2 * a2 / 840.0);
    } else {
        is = (a - s2) / (2.0 * kp2);
    }
    return {ic, is};
}

} // namespace

// ---------------------------------------------------------------------------
// evaluators

Spinor SpectralMode::spinor(double z) const {
    const double zz = std::abs(z);
    const double m = well_.m;
    const double eta = well_.eta;
    const double e_val = energy_;
    std::complex<double> c1, c2;

    const bool interior =
        (branch_ == Branch::Bound || eta != 0.0) && zz <= 0.5 * well_.a;
    if (branch_ != Branch::Bound && !interior) {
        const double phi = p_ * zz + phase_shift_;
        const double cph = std::cos(phi);
        const double sph = std::sin(phi);
        if (branch_ == Branch::SkyContinuum) {
            const double q = p_ / (e_val + m);
            if (parity_ == Parity::Even) {
                c1 = amp_ext_ * cph;
                c2 = kImag * (amp_ext_ * q * sph);
            } else {
                c1 = kImag * (amp_ext_ * sph);
                c2 = amp_ext_ * q * cph;
            }
        } else {
            const double q = p_ / (e_val - m);
            if (parity_ == Parity::Even) {
                c1 = amp_ext_ * q * cph;
                c2 = kImag * (amp_ext_ * sph);
            } else {
                c1 = kImag * (amp_ext_ * q * sph);
                c2 = amp_ext_ * cph;
            }
        }
    } else if (interior) {
        const TrigPair t = trig_of_w(kp2_, zz);
        if (parity_ == Parity::Even) {
            c1 = amp_int_ * t.c;
            c2 = kImag * (amp_int_ * (e_val + eta - m) * t.s);
        } else {
            c1 = kImag * (amp_int_ * (e_val + eta + m) * t.s);
            c2 = amp_int_ * t.c;
        }
    } else {
        // bound exterior: evanescent tail
        const double decay = std::exp(-kappa_ * (zz - 0.5 * well_.a));
        if (parity_ == Parity::Even) {
            c1 = amp_ext_ * decay;
            c2 = kImag * (amp_ext_ * kappa_ / (e_val + m) * decay);
        } else {
            c1 = -kImag * ((e_val + m) / kappa_ * amp_ext_ * decay);
            c2 = amp_ext_ * decay;
        }
    }

    if (z < 0.0) {
        // parity extension: psi(-z) = +-sigma3 psi(z)
        if (parity_ == Parity::Even)
            c2 = -c2;
        else
            c1 = -c1;
    }
    return {c1, c2};
}

double SpectralMode::density(double z) const {
    const double zz = std::abs(z);
    const double m = well_.m;
    const double eta = well_.eta;
    const double e_val = energy_;

    const bool interior =
        (branch_ == Branch::Bound || eta != 0.0) && zz <= 0.5 * well_.a;
    if (branch_ != Branch::Bound && !interior) {
        const double phi = p_ * zz + phase_shift_;
        const double cph = std::cos(phi);
        const double sph = std::sin(phi);
        const double q = (branch_ == Branch::SkyContinuum) ? p_ / (e_val + m)
                                                           : p_ / (e_val - m);
        const double b2 = amp_ext_ * amp_ext_;
        if (branch_ == Branch::SkyContinuum) {
            return (parity_ == Parity::Even)
                       ? b2 * (cph * cph + q * q * sph * sph)
                       : b2 * (sph * sph + q * q * cph * cph);
        }
        return (parity_ == Parity::Even)
                   ? b2 * (q * q * cph * cph + sph * sph)
                   : b2 * (q * q * sph * sph + cph * cph);
    }
    if (interior) {
        const TrigPair t = trig_of_w(kp2_, zz);
        const double a2 = amp_int_ * amp_int_;
        const double coef = (parity_ == Parity::Even) ? (e_val + eta - m)
                                                      : (e_val + eta + m);
        return a2 * (t.c * t.c + coef * coef * t.s * t.s);
    }
    const double decay = std::exp(-2.0 * kappa_ * (zz - 0.5 * well_.a));
    const double g2 = amp_ext_ * amp_ext_ * decay;
    if (parity_ == Parity::Even) {
        const double r = kappa_ / (e_val + m);
        return g2 * (1.0 + r * r);
    }
    const double r = (e_val + m) / kappa_;
    return g2 * (r * r + 1.0);
}

// ---------------------------------------------------------------------------
// factories

SpectralMode free_mode(double m, double p1, Parity j, Branch branch) {
    if (!std::isfinite(m) || !(m > 0.0))
        throw ValidationError("free_mode: mass must be positive and finite");
    if (!std::isfinite(p1) || p1 < 0.0)
        throw ValidationError("free_mode: momentum must be non-negative");
    if (branch == Branch::Bound)
        throw ValidationError("free_mode: branch must be a continuum branch");

    const double omega = std::hypot(p1, m);
    SpectralMode mode;
    mode.branch_ = branch;
    mode.parity_ = j;
    mode.well_ = WellParameters{m, 1.0, 0.0, true};
    mode.energy_ = (branch == Branch::SkyContinuum) ? omega : -omega;
    mode.p_ = p1;
    mode.kp2_ = p1 * p1;
    mode.amp_ext_ = continuum_amplitude(branch, mode.energy_, m);
    mode.phase_shift_ = 0.0;
    return mode;
}

SpectralMode scattering_mode(const WellParameters& well, double p1, Parity j,
                             Branch branch) {
    require_regime(well, "scattering_mode");
    if (branch == Branch::Bound)
        throw ValidationError("scattering_mode: branch must be a continuum branch");
    if (!std::isfinite(p1) || p1 < 0.0)
        throw ValidationError("scattering_mode: momentum must be non-negative");
    if (well.eta == 0.0) return free_mode(well.m, p1, j, branch);
    if (p1 == 0.0)
        throw ValidationError("scattering_mode: p1 = 0 matching is degenerate");

    const double m = well.m;
    const double eta = well.eta;
    const double omega = std::hypot(p1, m);
    const double e_val = (branch == Branch::SkyContinuum) ? omega : -omega;
    const double kp2 = (e_val + eta - m) * (e_val + eta + m);
    const TrigPair half = trig_of_w(kp2, 0.5 * well.a);

    // Matching written as B cos(theta) = A * lambda * xt and
    // B sin(theta) = A * lambda * yt; lambda keeps the eta -> 0 limit
    // continuous (theta -> p a/2, interior amplitude -> free amplitude).
    double lambda, yt;
    const double xt = half.c;
    if (branch == Branch::SkyContinuum) {
        if (j == Parity::Even) {
            lambda = 1.0;
            yt = (e_val + m) * (e_val + eta - m) * half.s / p1;
        } else {
            lambda = (e_val + m) / p1;
            yt = p1 * (e_val + eta + m) * half.s / (e_val + m);
        }
    } else {
        if (j == Parity::Even) {
            lambda = (e_val - m) / p1;
            yt = p1 * (e_val + eta - m) * half.s / (e_val - m);
        } else {
            lambda = 1.0;
            yt = (e_val - m) * (e_val + eta + m) * half.s / p1;
        }
    }
    const double theta = std::atan2(yt, xt);
    const double norm = std::hypot(xt, yt);
    const double b_amp = continuum_amplitude(branch, e_val, m);

    SpectralMode mode;
    mode.branch_ = branch;
    mode.parity_ = j;
    mode.well_ = well;
    mode.energy_ = e_val;
    mode.p_ = p1;
    mode.kp2_ = kp2;
    mode.amp_ext_ = b_amp;
    mode.amp_int_ = b_amp / (lambda * norm);
    mode.phase_shift_ = theta - p1 * 0.5 * well.a;
    return mode;
}

double bound_matching(const WellParameters& well, double energy, Parity j) {
    if (!(well.eta > 0.0)) throw RegimeError("bound_matching: free field has no bound states");
    require_regime(well, "bound_matching");
    return matching_function(well, energy, j);
}

std::vector<SpectralMode> bound_modes(const WellParameters& well) {
    if (well.eta == 0.0)
        throw RegimeError("bound_modes: free field has no bound states");
    require_regime(well, "bound_modes");

    std::vector<SpectralMode> modes;
    for (const BoundRoot& root : find_bound_roots(well, 2048)) {
        const double m = well.m;
        const double eta = well.eta;
        const double e_val = root.energy;
        const double kp2 = (e_val + eta - m) * (e_val + eta + m);
        const double kappa = std::sqrt(std::max((m - e_val) * (m + e_val), 0.0));
        const TrigPair half = trig_of_w(kp2, 0.5 * well.a);
        const InteriorIntegrals ii = interior_integrals(kp2, well.a, half.c, half.s);

        double norm2;
        if (root.parity == Parity::Even) {
            const double coef = e_val + eta - m;
            norm2 = ii.ic + coef * coef * ii.is +
                    2.0 * m * half.c * half.c / (kappa * (e_val + m));
        } else {
            const double coef = e_val + eta + m;
            norm2 = coef * coef * ii.is + ii.ic +
                    2.0 * m * coef * coef * half.s * half.s / (kappa * (e_val + m));
        }
        const double amp = 1.0 / std::sqrt(norm2);

        SpectralMode mode;
        mode.branch_ = Branch::Bound;
        mode.parity_ = root.parity;
        mode.well_ = well;
        mode.energy_ = e_val;
        mode.p_ = 0.0;
        mode.kp2_ = kp2;
        mode.kappa_ = kappa;
        mode.amp_int_ = amp;
        // edge amplitude: psi1(a/2) for even, psi2(a/2) for odd
        mode.amp_ext_ = amp * half.c;
        modes.push_back(mode);
    }
    return modes;
}

BoundStateSet bound_state_energies(const WellParameters& well) {
    if (well.eta == 0.0)
        throw RegimeError("bound_state_energies: free field has no bound states");
    require_regime(well, "bound_state_energies");
    BoundStateSet set;
    set.well = well;
    for (const BoundRoot& root : find_bound_roots(well, 2048))
        set.energies.push_back(root.energy);
    return set;
}

// ---------------------------------------------------------------------------
// residual instrument

namespace {

int region_of(double z, const WellParameters& well) {
    if (well.eta == 0.0) return 0;  // no discontinuity anywhere
    if (z < -0.5 * well.a) return -1;
    if (z > 0.5 * well.a) return 1;
    return 0;
}

bool stencil_fits(double z0, double h, int first_offset,
                  const WellParameters& well, int region) {
    for (int k = 0; k < 7; ++k) {
        const double z = z0 + (first_offset + k) * h;
        if (region_of(z, well) != region) return false;
        if (well.eta != 0.0 &&
            (std::abs(z - 0.5 * well.a) < 1e-12 || std::abs(z + 0.5 * well.a) < 1e-12))
            return false;
    }
    return true;
}

} // namespace

double mode_residual(const SpectralMode& mode, const WellParameters& well,
                     std::span<const double> z_grid) {
    return mode_residual(mode.energy(), well,
                         [&mode](double z) { return mode.spinor(z); }, z_grid);
}

double mode_residual(double energy, const WellParameters& well,
                     const std::function<Spinor(double)>& psi,
                     std::span<const double> z_grid) {
    if (z_grid.size() < 2)
        throw ValidationError("mode_residual: grid needs at least two points");
    const double h = (z_grid.back() - z_grid.front()) /
                     static_cast<double>(z_grid.size() - 1);
    if (!(h > 0.0)) throw ValidationError("mode_residual: grid must be increasing");
    for (std::size_t i = 0; i < z_grid.size(); ++i)
        if (std::abs(z_grid[i] - (z_grid.front() + static_cast<double>(i) * h)) >
            1e-9 * std::abs(z_grid.back() - z_grid.front()))
            throw ValidationError("mode_residual: grid must be uniform");

    // 6th-order first-derivative stencils
    static constexpr double centered[7] = {-1.0, 9.0, -45.0, 0.0, 45.0, -9.0, 1.0};
    static constexpr double forward[7] = {-147.0, 360.0, -450.0, 400.0, -225.0, 72.0, -10.0};
    static constexpr double backward[7] = {10.0, -72.0, 225.0, -400.0, 450.0, -360.0, 147.0};

    double max_residual = 0.0;
    for (double z : z_grid) {
        const int region = region_of(z, well);
        if (well.eta != 0.0 && (std::abs(z - 0.5 * well.a) < 1e-12 ||
                                std::abs(z + 0.5 * well.a) < 1e-12))
            continue;  // V is discontinuous there

        const double* coef = nullptr;
        int first = 0;
        if (stencil_fits(z, h, -3, well, region)) {
            coef = centered;
            first = -3;
        } else if (stencil_fits(z, h, 0, well, region)) {
            coef = forward;
            first = 0;
        } else if (stencil_fits(z, h, -6, well, region)) {
            coef = backward;
            first = -6;
        } else {
            continue;
        }

        std::complex<double> d1{}, d2{};
        for (int k = 0; k < 7; ++k) {
            if (coef[k] == 0.0) continue;
            const Spinor sample = psi(z + (first + k) * h);
            d1 += coef[k] * sample[0];
            d2 += coef[k] * sample[1];
        }
        d1 /= 60.0 * h;
        d2 /= 60.0 * h;

        const Spinor value = psi(z);
        const double v = (region == 0 && well.eta != 0.0 && std::abs(z) < 0.5 * well.a)
                             ? -well.eta
                             : 0.0;
        const std::complex<double> r1 =
            -kImag * d2 + (well.m + v - energy) * value[0];
        const std::complex<double> r2 =
            -kImag * d1 + (-well.m + v - energy) * value[1];
        max_residual = std::max(max_residual, std::sqrt(std::norm(r1) + std::norm(r2)));
    }
    return max_residual;
}

} // namespace vacq
