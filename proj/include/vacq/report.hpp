#ifndef VACQ_REPORT_HPP
#define VACQ_REPORT_HPP

#include <cstdio>
#include <string>
#include <vector>

#include "vacq/well.hpp"

namespace vacq {

/// 12-significant-digit rendering used for digests and CSV output.
inline std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

enum class ChargeMethod {
    ModeSum,             ///< subtracted continuum/bound mode sums
    PointSplitContour,   ///< contour integral of the point-split density
    PointSplitComposite, ///< contour value plus the eta*a/pi point-split term
};

const char* to_string(ChargeMethod method);

/// Total charge in |z| < a/2 with provenance.
struct ChargeReport {
    double value = 0.0;
    ChargeMethod method = ChargeMethod::ModeSum;
    double error_estimate = 0.0;         ///< >= 0
    std::string settings_digest;         ///< cutoff/quadrature parameters used
};

/// Density samples over a position grid.
struct ChargeProfile {
    std::vector<double> positions;  ///< strictly increasing
    std::vector<double> densities;  ///< finite, charge per unit length
    ChargeMethod method = ChargeMethod::ModeSum;
    WellParameters well;
};

/// Throws ValidationError unless positions are strictly increasing, the two
/// arrays match in length, and every density is finite.
void check_profile(const ChargeProfile& profile);

} // namespace vacq

#endif
