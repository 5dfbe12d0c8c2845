#include "vacq/capri.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "vacq/errors.hpp"
#include "vacq/pv_quadrature.hpp"

namespace vacq {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0.0, 1.0};

void require_regime(const WellParameters& well, const char* op) {
    if (!(well.eta <= well.m))
        throw RegimeError(std::string(op) + ": requires eta <= m");
}

// Shared contour kinematics at E = iy, in the exponentially rescaled form.
//
// With u = exp(2 i k' a) (|u| <= 1 once Im k' >= 0 is enforced; k' enters the
// integrand only through even combinations, so the sign flip is free):
//   cos(k'a)        = e^{-i k'a} (1 + u) / 2
//   sin(k'a)        = i e^{-i k'a} (1 - u) / 2
//   Delta           = e^{-i k'a} Dt / 2,  Dt = k k' (1 + u) - w (1 - u)
// so every cos/sin-over-Delta ratio is overflow-free at any y.
struct ContourTerms {
    Complex E, k, w, kp2, kt, u, dt;
};

ContourTerms contour_terms(double m, double a, double eta, double y) {
    ContourTerms t;
    t.E = Complex(0.0, y);
    t.k = Complex(0.0, std::hypot(y, m));  // principal sqrt(E^2 - m^2)
    t.w = Complex(m * m + y * y, -y * eta);  // m^2 - E(E + eta)
    t.kp2 = Complex(eta * eta - y * y - m * m, 2.0 * eta * y);
    Complex kt = std::sqrt(t.kp2);
    if (kt.imag() < 0.0) kt = -kt;
    t.kt = kt;
    t.u = std::exp(2.0 * kI * kt * a);
    t.dt = t.k * kt * (1.0 + t.u) - t.w * (1.0 - t.u);
    return t;
}

struct Clearance {
    double min_delta = std::numeric_limits<double>::infinity();
    double min_w = std::numeric_limits<double>::infinity();

    void track(const ContourTerms& t) {
        // |Delta| = e^{a Im k'} |Dt| / 2 >= |Dt| / 2
        min_delta = std::min(min_delta, 0.5 * std::abs(t.dt));
        min_w = std::min(min_w, std::abs(t.w));
    }
    void check() const {
        if (!(min_delta > 1e-6) || !(min_w > 1e-6))
            throw ConvergenceError(
                "contour integrand: Delta or m^2 - E(E+eta) nearly vanishes at a node");
    }
};

PvConfig pv_config(const QuadratureConfig& quad) {
    PvConfig cfg;
    cfg.delta = quad.pv_delta;
    cfg.richardson_levels = quad.pv_richardson;
    cfg.nodes_per_half = quad.n_nodes;
    cfg.tol = quad.tol;
    return cfg;
}

struct ContourResult {
    double value;
    double error;
};

// Runs the PV contour integral, checks realness, and returns the real part
// with a combined error estimate.
template <class F>
ContourResult contour_integral(F&& integrand, const QuadratureConfig& quad) {
    const PvResult<Complex> pv =
        pv_quadrature(integrand, -quad.y_max, quad.y_max, 0.0, pv_config(quad));
    const double re = pv.value.real();
    const double im = std::abs(pv.value.imag());
    if (im > 1e-10 * std::max(1.0, std::abs(re)))
        throw ConvergenceError("contour integral has a non-negligible imaginary part");
    return {re, pv.richardson_spread + pv.tail_estimate + im};
}

std::string contour_digest(const char* method, const WellParameters& well,
                           const QuadratureConfig& quad) {
    return std::string("method=") + method + ";m=" + format_sig(well.m) +
           ";a=" + format_sig(well.a) + ";eta=" + format_sig(well.eta) +
           ";y_max=" + format_sig(quad.y_max) +
           ";n_nodes=" + std::to_string(quad.n_nodes) +
           ";pv_delta=" + format_sig(quad.pv_delta) +
           ";pv_richardson=" + std::to_string(quad.pv_richardson) +
           ";tol=" + format_sig(quad.tol);
}

} // namespace

QuadratureConfig QuadratureConfig::defaults_for(const WellParameters& well) {
    QuadratureConfig quad;
    quad.y_max = 200.0 * well.m;
    quad.n_nodes = 8192;
    quad.pv_delta = 1e-4 * well.m;
    quad.pv_richardson = 3;
    quad.tol = 1e-4;
    return quad;
}

void QuadratureConfig::validate(const WellParameters& well) const {
    if (!(y_max > well.m))
        throw ValidationError("quadrature: y_max must exceed the mass");
    if (n_nodes < 64) throw ValidationError("quadrature: n_nodes must be >= 64");
    if (!(pv_delta > 0.0)) throw ValidationError("quadrature: pv_delta must be positive");
    if (pv_richardson < 0)
        throw ValidationError("quadrature: pv_richardson must be >= 0");
    if (!(tol > 0.0)) throw ValidationError("quadrature: tol must be positive");
}

QuadratureConfig QuadratureConfig::doubled() const {
    QuadratureConfig quad = *this;
    quad.y_max *= 2.0;
    quad.n_nodes *= 2;
    return quad;
}

ContourPoint contour_point(const WellParameters& well, double y) {
    const double m = well.m;
    ContourPoint pt;
    pt.E = Complex(0.0, y);
    pt.k = Complex(0.0, std::hypot(y, m));
    pt.kprime = std::sqrt((pt.E + well.eta) * (pt.E + well.eta) - m * m);
    const Complex w = m * m - pt.E * (pt.E + well.eta);
    pt.Delta = pt.k * pt.kprime * std::cos(pt.kprime * well.a) +
               kI * w * std::sin(pt.kprime * well.a);
    return pt;
}

double capri_density(const WellParameters& well, double z,
                     const QuadratureConfig& quad) {
    require_regime(well, "capri_density");
    quad.validate(well);
    if (!(std::abs(z) < 0.5 * well.a))
        throw OutOfRegionError("capri_density: defined only for |z| < a/2");

    const double m = well.m;
    const double a = well.a;
    const double eta = well.eta;
    Clearance clearance;
    auto integrand = [&](double y) -> Complex {
        const ContourTerms t = contour_terms(m, a, eta, y);
        clearance.track(t);
        const Complex term_pole = t.k / (t.E * t.w);
        const Complex n_z = eta * (t.E + eta) * (1.0 + t.u) / t.w -
                            std::exp(kI * t.kt * (a + 2.0 * z)) -
                            std::exp(kI * t.kt * (a - 2.0 * z));
        const Complex term_well = eta * n_z / (t.kt * t.dt);
        return kI * (m * m / (2.0 * std::numbers::pi)) * (term_pole + term_well);
    };
    const ContourResult result = contour_integral(integrand, quad);
    clearance.check();
    return result.value;
}

ChargeReport capri_charge_integral(const WellParameters& well,
                                   const QuadratureConfig& quad) {
    require_regime(well, "capri_charge_integral");
    quad.validate(well);

    const double m = well.m;
    const double a = well.a;
    const double eta = well.eta;
    Clearance clearance;
    auto integrand = [&](double y) -> Complex {
        const ContourTerms t = contour_terms(m, a, eta, y);
        clearance.track(t);
        const Complex term_pole = t.k * a / (t.E * t.w);
        const Complex term_cos =
            a * eta * eta * (t.E + eta) * (1.0 + t.u) / (t.kt * t.dt * t.w);
        const Complex term_sin = -kI * eta * (1.0 - t.u) / (t.kp2 * t.dt);
        return kI * (m * m / (2.0 * std::numbers::pi)) *
               (term_pole + term_cos + term_sin);
    };
    const ContourResult result = contour_integral(integrand, quad);
    clearance.check();

    ChargeReport report;
    report.value = result.value;
    report.method = ChargeMethod::PointSplitContour;
    report.error_estimate = result.error;
    report.settings_digest = contour_digest("contour", well, quad);
    return report;
}

double delta_rho(const WellParameters& well, double z) {
    if (!(std::abs(z) < 0.5 * well.a))
        throw OutOfRegionError("delta_rho: defined only for |z| < a/2");
    return well.eta / std::numbers::pi;
}

ChargeReport total_charge_point_split(const WellParameters& well,
                                      const QuadratureConfig& quad) {
    const ChargeReport contour = capri_charge_integral(well, quad);
    ChargeReport report;
    report.value = contour.value + well.eta * well.a / std::numbers::pi;
    report.method = ChargeMethod::PointSplitComposite;
    report.error_estimate = contour.error_estimate;
    report.settings_digest = contour_digest("point-split", well, quad);
    return report;
}

} // namespace vacq
