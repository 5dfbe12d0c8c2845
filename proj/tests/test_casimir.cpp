#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "vacq/casimir.hpp"
#include "vacq/errors.hpp"
#include "vacq/well.hpp"

using namespace vacq;

namespace {

RegulatorConfig light_regulator(const WellParameters& well) {
    RegulatorConfig reg = RegulatorConfig::defaults_for(well);
    reg.n_p = 1024;
    reg.p_max = 30.0 * well.m;
    reg.z_nodes = 96;
    return reg;
}

} // namespace

TEST_CASE("ramp validation") {
    const WellParameters well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = light_regulator(well);
    const QuadratureConfig quad = QuadratureConfig::defaults_for(well);

    RampSpec ramp;
    ramp.eta_final = 1.5;
    CHECK_THROWS_AS(casimir_energy_adiabatic(well, ramp, reg, quad), RegimeError);
    ramp.eta_final = 0.5;
    ramp.n_steps = 2;
    CHECK_THROWS_AS(casimir_energy_adiabatic(well, ramp, reg, quad), ValidationError);
}

TEST_CASE("mode-sum ramp gives a positive energy change, cross-checked by a trapezoid table") {
    const WellParameters well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = light_regulator(well);
    const QuadratureConfig quad = QuadratureConfig::defaults_for(well);

    RampSpec ramp;
    ramp.eta_final = 1.0;
    ramp.n_steps = 10;
    ramp.charge_method = RampChargeMethod::ModeSum;
    const EnergyTrace trace = casimir_energy_adiabatic(well, ramp, reg, quad);

    CHECK(trace.eta_grid.front() == 0.0);
    CHECK(trace.eta_grid.back() == 1.0);
    CHECK(trace.charges.front() == 0.0);
    CHECK(trace.energy_delta.front() == 0.0);
    CHECK(trace.final_energy_delta() > 0.0);
    CHECK(trace.casimir_sign == CasimirSign::Positive);
    CHECK(trace.final_energy_delta() == doctest::Approx(0.10).epsilon(0.1));

    // independent 11-point trapezoid over the same charge table
    double oracle = 0.0;
    double prev_eta = 0.0, prev_q = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double eta = 0.1 * i;
        const double q =
            total_charge_mode_sum(validate_well(1.0, 1.0, eta), reg).value;
        oracle += -0.5 * (eta - prev_eta) * (q + prev_q);
        prev_eta = eta;
        prev_q = q;
    }
    CHECK(std::abs(trace.final_energy_delta() - oracle) < 1e-3);
}

TEST_CASE("point-split ramp gives a negative energy change") {
    const WellParameters well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = light_regulator(well);
    const QuadratureConfig quad = QuadratureConfig::defaults_for(well);

    RampSpec ramp;
    ramp.eta_final = 1.0;
    ramp.n_steps = 32;
    ramp.charge_method = RampChargeMethod::PointSplitComposite;
    const EnergyTrace trace = casimir_energy_adiabatic(well, ramp, reg, quad);
    CHECK(trace.final_energy_delta() < 0.0);
    CHECK(trace.casimir_sign == CasimirSign::Negative);
    CHECK(trace.final_energy_delta() == doctest::Approx(-0.057).epsilon(0.1));
}

TEST_CASE("energy change is monotone when the charge has constant sign") {
    const WellParameters well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = light_regulator(well);
    const QuadratureConfig quad = QuadratureConfig::defaults_for(well);

    RampSpec ramp;
    ramp.eta_final = 1.0;
    ramp.n_steps = 16;
    ramp.charge_method = RampChargeMethod::PointSplitComposite;
    const EnergyTrace trace = casimir_energy_adiabatic(well, ramp, reg, quad);
    bool constant_sign = true;
    for (std::size_t i = 1; i < trace.charges.size(); ++i)
        constant_sign = constant_sign && trace.charges[i] > 0.0;
    REQUIRE(constant_sign);
    for (std::size_t i = 1; i < trace.energy_delta.size(); ++i)
        CHECK(trace.energy_delta[i] < trace.energy_delta[i - 1]);
}

TEST_CASE("energy change converges as the ramp grid is refined") {
    const WellParameters well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = light_regulator(well);
    const QuadratureConfig quad = QuadratureConfig::defaults_for(well);

    RampSpec coarse{0.8, 16, RampChargeMethod::PointSplitComposite};
    RampSpec fine{0.8, 32, RampChargeMethod::PointSplitComposite};
    const double delta_coarse =
        casimir_energy_adiabatic(well, coarse, reg, quad).final_energy_delta();
    const double delta_fine =
        casimir_energy_adiabatic(well, fine, reg, quad).final_energy_delta();
    CHECK(std::abs(delta_coarse - delta_fine) < 1e-3);
}

TEST_CASE("audit verdicts match the sign analysis") {
    const WellParameters well = validate_well(1.0, 1.0, 1.0);
    ChargeReport mode_sum;
    mode_sum.value = -0.204;
    mode_sum.method = ChargeMethod::ModeSum;
    ChargeReport split;
    split.value = 0.115;
    split.method = ChargeMethod::PointSplitComposite;

    const AuditReport audit = sign_consistency_audit(well, {mode_sum, split});
    CHECK_FALSE(audit.free_field);
    REQUIRE(audit.verdicts.size() == 2);
    CHECK_FALSE(audit.verdicts[0].satisfies_minimum_energy);
    CHECK(audit.verdicts[0].contradiction);
    CHECK(audit.verdicts[1].satisfies_minimum_energy);
    CHECK_FALSE(audit.verdicts[1].contradiction);
    CHECK(audit.summary().find("contradicts") != std::string::npos);
}

TEST_CASE("audit of the free field is vacuous") {
    const WellParameters well = validate_well(1.0, 1.0, 0.0);
    ChargeReport report;
    report.value = 0.0;
    report.method = ChargeMethod::ModeSum;
    const AuditReport audit = sign_consistency_audit(well, {report});
    CHECK(audit.free_field);
    CHECK_FALSE(audit.verdicts[0].contradiction);
    CHECK(audit.summary().find("free field") != std::string::npos);
}
