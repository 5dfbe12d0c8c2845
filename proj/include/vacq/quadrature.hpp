#ifndef VACQ_QUADRATURE_HPP
#define VACQ_QUADRATURE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace vacq {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes/weights for an n-point Gauss-Legendre rule (cached, thread-safe).
const GaussLegendreRule& gauss_legendre(std::size_t n);

/// Nodes/weights mapped onto [lo, hi].
void map_gauss_legendre(std::size_t n, double lo, double hi,
                        std::vector<double>& nodes, std::vector<double>& weights);

/// Fixed-order pairwise (cascade) sum; deterministic for a given input order.
double pairwise_sum(std::span<const double> values);

} // namespace vacq

#endif
