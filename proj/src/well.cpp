#include "vacq/well.hpp"

#include <cmath>
#include <string>

#include "vacq/errors.hpp"

namespace vacq {

WellParameters validate_well(double m, double a, double eta) {
    if (!std::isfinite(m) || !std::isfinite(a) || !std::isfinite(eta))
        throw ValidationError("well parameters must be finite");
    if (!(m > 0.0))
        throw ValidationError("mass m must be positive, got " + std::to_string(m));
    if (!(a > 0.0))
        throw ValidationError("width a must be positive, got " + std::to_string(a));
    if (eta < 0.0)
        throw ValidationError("depth eta must be non-negative, got " + std::to_string(eta));

    WellParameters well;
    well.m = m;
    well.a = a;
    well.eta = eta;
    well.no_negative_bound_states = (eta <= m);
    return well;
}

} // namespace vacq
