#include "vacq/casimir.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "vacq/errors.hpp"
#include "vacq/parallel.hpp"

namespace vacq {

namespace {

double charge_at(const WellParameters& well_template, double eta,
                 RampChargeMethod method, const RegulatorConfig& reg,
                 const QuadratureConfig& quad) {
    const WellParameters well = validate_well(well_template.m, well_template.a, eta);
    if (method == RampChargeMethod::ModeSum)
        return total_charge_mode_sum(well, reg).value;
    return total_charge_point_split(well, quad).value;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f) {
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t i = 1; i < x.size(); ++i)
        out[i] = out[i - 1] + 0.5 * (x[i] - x[i - 1]) * (f[i] + f[i - 1]);
    return out;
}

} // namespace

EnergyTrace casimir_energy_adiabatic(const WellParameters& well_template,
                                     const RampSpec& ramp,
                                     const RegulatorConfig& reg,
                                     const QuadratureConfig& quad) {
    if (!(ramp.eta_final > 0.0) || !(ramp.eta_final <= well_template.m))
        throw RegimeError("casimir ramp: eta_final must lie in (0, m]");
    if (ramp.n_steps < 4)
        throw ValidationError("casimir ramp: n_steps must be >= 4");

    const int n = ramp.n_steps;
    EnergyTrace trace;
    trace.eta_grid.resize(n + 1);
    trace.charges.assign(n + 1, 0.0);
    for (int i = 0; i <= n; ++i)
        trace.eta_grid[i] = ramp.eta_final * static_cast<double>(i) / n;
    trace.eta_grid[0] = 0.0;
    // eta = 0 is the free field: zero charge by definition, nothing to compute

    std::vector<std::exception_ptr> failures(n + 1);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t idx) {
        const std::size_t i = idx + 1;
        try {
            trace.charges[i] = charge_at(well_template, trace.eta_grid[i],
                                         ramp.charge_method, reg, quad);
        } catch (...) {
            failures[i] = std::current_exception();
        }
    });
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);

    // xi(eta) - xi(0) = -int_0^eta Q; cumulative trapezoid on the fine grid,
    // with one Richardson step refining the final value when n is even.
    std::vector<double> neg_q(trace.charges.size());
    for (std::size_t i = 0; i < neg_q.size(); ++i) neg_q[i] = -trace.charges[i];
    trace.energy_delta = cumulative_trapezoid(trace.eta_grid, neg_q);
    if (n % 2 == 0) {
        double coarse = 0.0;
        for (int i = 2; i <= n; i += 2)
            coarse += 0.5 * (trace.eta_grid[i] - trace.eta_grid[i - 2]) *
                      (neg_q[i] + neg_q[i - 2]);
        trace.energy_delta.back() =
            (4.0 * trace.energy_delta.back() - coarse) / 3.0;
    }

    const double final_delta = trace.energy_delta.back();
    trace.casimir_sign =
        (final_delta >= 0.0) ? CasimirSign::Positive : CasimirSign::Negative;

    // discrete sign theorem: constant-sign Q forces the opposite energy sign
    const bool all_negative = std::all_of(
        trace.charges.begin() + 1, trace.charges.end(), [](double q) { return q < 0.0; });
    const bool all_positive = std::all_of(
        trace.charges.begin() + 1, trace.charges.end(), [](double q) { return q > 0.0; });
    if ((all_negative && !(final_delta > 0.0)) ||
        (all_positive && !(final_delta < 0.0)))
        throw ConvergenceError("casimir trace violates the discrete sign theorem");

    return trace;
}

AuditReport sign_consistency_audit(const WellParameters& well,
                                   const std::vector<ChargeReport>& charge_reports) {
    AuditReport audit;
    audit.free_field = (well.eta == 0.0);
    for (const ChargeReport& report : charge_reports) {
        MethodVerdict verdict;
        verdict.method = report.method;
        verdict.charge = report.value;
        if (audit.free_field) {
            // vacuous: the free vacuum carries no charge and no inequality applies
            verdict.satisfies_minimum_energy = true;
            verdict.contradiction = false;
        } else {
            verdict.satisfies_minimum_energy = (report.value > 0.0);
            // Q < 0 makes the adiabatic energy change positive, which cannot
            // happen if the vacuum is the minimum-energy state.
            verdict.contradiction = (report.value < 0.0);
        }
        audit.verdicts.push_back(verdict);
    }
    return audit;
}

std::string AuditReport::summary() const {
    if (free_field)
        return "free field: vacuum charge vanishes identically; no constraint to audit";
    std::string text;
    for (const MethodVerdict& v : verdicts) {
        text += std::string(to_string(v.method)) + ": Q = " + format_sig(v.charge);
        if (v.satisfies_minimum_energy)
            text += " > 0, consistent with a minimum-energy vacuum";
        else if (v.contradiction)
            text +=
                " < 0, so the adiabatic energy change is positive; this contradicts "
                "the minimum-energy vacuum requirement Q > 0";
        else
            text += " = 0, marginal";
        text += "\n";
    }
    return text;
}

} // namespace vacq
