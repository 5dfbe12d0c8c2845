#include "vacq/report.hpp"

#include <cmath>

#include "vacq/errors.hpp"

namespace vacq {

const char* to_string(ChargeMethod method) {
    switch (method) {
        case ChargeMethod::ModeSum: return "mode-sum";
        case ChargeMethod::PointSplitContour: return "contour";
        case ChargeMethod::PointSplitComposite: return "point-split";
    }
    return "unknown";
}

void check_profile(const ChargeProfile& profile) {
    if (profile.positions.empty())
        throw ValidationError("profile grid is empty");
    if (profile.positions.size() != profile.densities.size())
        throw ValidationError("profile positions/densities length mismatch");
    for (std::size_t i = 0; i < profile.positions.size(); ++i) {
        if (!std::isfinite(profile.positions[i]) || !std::isfinite(profile.densities[i]))
            throw ValidationError("profile contains non-finite entries");
        if (i > 0 && !(profile.positions[i] > profile.positions[i - 1]))
            throw ValidationError("profile positions must be strictly increasing");
    }
}

} // namespace vacq
