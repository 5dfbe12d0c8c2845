#ifndef VACQ_CASIMIR_HPP
#define VACQ_CASIMIR_HPP

#include <string>
#include <vector>

#include "vacq/capri.hpp"
#include "vacq/mode_sum.hpp"
#include "vacq/report.hpp"
#include "vacq/well.hpp"

namespace vacq {

enum class RampChargeMethod { ModeSum, PointSplitComposite };
enum class CasimirSign { Positive, Negative };

/// Quasi-static ramp of the well depth from 0 to eta_final.
struct RampSpec {
    double eta_final = 1.0;  ///< in (0, m]
    int n_steps = 64;        ///< eta-grid resolution, >= 4
    RampChargeMethod charge_method = RampChargeMethod::ModeSum;
};

/// Energy evolution along the ramp. In the adiabatic limit the only surviving
/// dynamics is d(xi)/d(eta) = -Q(eta), so the trace stores the cumulative
/// trapezoid of -Q over an increasing eta grid.
struct EnergyTrace {
    std::vector<double> eta_grid;      ///< 0 = eta_grid[0] < ... <= eta_final
    std::vector<double> charges;       ///< Q(eta) per grid point, charges[0] = 0
    std::vector<double> energy_delta;  ///< xi(eta) - xi(0); final entry Richardson-refined
    CasimirSign casimir_sign = CasimirSign::Positive;

    double final_energy_delta() const { return energy_delta.back(); }
};

/// Integrates the adiabatic energy change for the given charge definition.
/// Charges at grid points are computed with the supplied configs (well depth
/// replaced by each grid eta). Asserts the discrete sign theorem: a charge of
/// constant sign on the grid forces the opposite sign for the energy change.
EnergyTrace casimir_energy_adiabatic(const WellParameters& well_template,
                                     const RampSpec& ramp,
                                     const RegulatorConfig& reg,
                                     const QuadratureConfig& quad);

/// One charge definition's standing with respect to the minimum-energy vacuum
/// assumption, which requires the induced well charge to be positive.
struct MethodVerdict {
    ChargeMethod method;
    double charge;
    bool satisfies_minimum_energy;  ///< charge > 0
    /// Set when a negative charge coexists with the positive adiabatic energy
    /// change it implies, contradicting the minimum-energy requirement.
    bool contradiction;
};

struct AuditReport {
    bool free_field = false;  ///< eta = 0: only the vacuum-nullity statement applies
    std::vector<MethodVerdict> verdicts;
    std::string summary() const;
};

/// Builds a verdict for each supplied report. Never fails.
AuditReport sign_consistency_audit(const WellParameters& well,
                                   const std::vector<ChargeReport>& charge_reports);

} // namespace vacq

#endif
