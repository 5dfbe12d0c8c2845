#ifndef VACQ_PV_QUADRATURE_HPP
#define VACQ_PV_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "vacq/errors.hpp"
#include "vacq/quadrature.hpp"

namespace vacq {

struct PvConfig {
    double delta = 1e-4;        ///< initial symmetric exclusion radius, > 0
    int richardson_levels = 3;  ///< number of delta halvings for extrapolation
    int nodes_per_half = 8192;  ///< node budget per side of the pole
    double tol = 1e-4;          ///< extrapolant-agreement requirement
};

template <class T>
struct PvResult {
    T value{};
    double richardson_spread = 0.0;  ///< |last - previous| extrapolant
    double tail_estimate = 0.0;      ///< outermost-octave contribution magnitude
};

namespace detail {

inline double pv_abs(double v) { return std::abs(v); }
inline double pv_abs(const std::complex<double>& v) { return std::abs(v); }

/// Octave panels [lo*2^k, lo*2^(k+1)] covering [lo, hi], each integrated with
/// an order-p Gauss-Legendre rule. f is evaluated at pole_offset + t (side > 0)
/// or pole_offset - t (side < 0). The outermost panel's contribution magnitude
/// is reported for tail estimation.
template <class T, class F>
T pv_octave_sweep(F&& f, double pole, double lo, double hi, int side_sign,
                  std::size_t order, bool paired, double* outer_mag) {
    T total{};
    T outer{};
    std::vector<double> nodes, weights;
    double panel_lo = lo;
    while (panel_lo < hi) {
        double panel_hi = std::min(2.0 * panel_lo, hi);
        map_gauss_legendre(order, panel_lo, panel_hi, nodes, weights);
        T panel{};
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double t = nodes[i];
            if (paired) {
                // symmetric pair: odd pole parts cancel exactly node by node
                panel += weights[i] * (f(pole + t) + f(pole - t));
            } else {
                panel += weights[i] * f(side_sign > 0 ? pole + t : pole - t);
            }
        }
        total += panel;
        outer = panel;
        panel_lo = panel_hi;
    }
    if (outer_mag) *outer_mag = pv_abs(outer);
    return total;
}

} // namespace detail

/// Principal-value integral of f over [lo, hi] through a simple pole at
/// `pole`: symmetric exclusion (pole - delta, pole + delta) with panels graded
/// toward the pole in octaves, then polynomial extrapolation delta -> 0 over
/// `richardson_levels` halvings. Nodes at +-t from the pole are evaluated in
/// mirrored pairs so the pole's odd part cancels exactly.
///
/// T may be double or std::complex<double>. Throws ConvergenceError when the
/// last two extrapolants disagree by more than cfg.tol.
template <class F,
          class T = decltype(std::declval<F&>()(0.0))>
PvResult<T> pv_quadrature(F&& f, double lo, double hi, double pole,
                          const PvConfig& cfg) {
    if (!(lo < pole && pole < hi))
        throw ValidationError("pv_quadrature: pole must lie strictly inside [lo, hi]");
    if (!(cfg.delta > 0.0) || cfg.nodes_per_half < 8)
        throw ValidationError("pv_quadrature: need delta > 0 and nodes_per_half >= 8");

    const double right = hi - pole;
    const double left = pole - lo;
    const double common = std::min(left, right);
    const double longest = std::max(left, right);
    if (cfg.delta >= common)
        throw ValidationError("pv_quadrature: exclusion radius exceeds the interval");

    const int levels = std::max(0, cfg.richardson_levels);
    const double delta_min = cfg.delta / static_cast<double>(1 << levels);
    const int octaves =
        static_cast<int>(std::ceil(std::log2(longest / delta_min))) + 1;
    const std::size_t order = static_cast<std::size_t>(std::clamp(
        cfg.nodes_per_half / std::max(octaves, 1), 8, 384));

    // I(delta_k) for delta_k = delta / 2^k
    std::vector<double> deltas(static_cast<std::size_t>(levels) + 1);
    std::vector<T> values(deltas.size());
    double tail = 0.0;
    for (std::size_t k = 0; k < deltas.size(); ++k) {
        const double d = cfg.delta / static_cast<double>(1ull << k);
        deltas[k] = d;
        double outer_paired = 0.0;
        T v = detail::pv_octave_sweep<T>(f, pole, d, common, +1, order, true,
                                         &outer_paired);
        double outer_single = 0.0;
        if (right > left)
            v += detail::pv_octave_sweep<T>(f, pole, common, right, +1, order,
                                            false, &outer_single);
        else if (left > right)
            v += detail::pv_octave_sweep<T>(f, pole, common, left, -1, order,
                                            false, &outer_single);
        values[k] = v;
        if (k == 0) tail = std::max(outer_paired, outer_single);
    }

    // Neville extrapolation to delta = 0 (error is a power series in delta)
    std::vector<T> table = values;
    T previous = table.back();
    for (std::size_t m = 1; m < table.size(); ++m) {
        for (std::size_t i = 0; i + m < table.size(); ++i) {
            const double d_i = deltas[i];
            const double d_im = deltas[i + m];
            table[i] = table[i + 1] + (table[i + 1] - table[i]) * (d_im / (d_i - d_im));
        }
        if (m + 1 == table.size()) previous = table[1];
    }

    PvResult<T> result;
    result.value = table.empty() ? T{} : table[0];
    result.richardson_spread =
        (values.size() > 1) ? detail::pv_abs(result.value - previous) : 0.0;
    result.tail_estimate = tail;
    if (result.richardson_spread > cfg.tol)
        throw ConvergenceError("pv_quadrature: extrapolants disagree beyond tol");
    return result;
}

} // namespace vacq

#endif
