#include <doctest.h>

#include <cmath>
#include <vector>

#include "vacq/errors.hpp"
#include "vacq/mode_sum.hpp"
#include "vacq/quadrature.hpp"
#include "vacq/spectrum.hpp"
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

double integrate_well_region(const std::vector<double>& nodes,
                             const std::vector<double>& weights,
                             const std::vector<double>& samples) {
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) total += weights[i] * samples[i];
    return total;
}

} // namespace

TEST_CASE("subtracted densities vanish identically for the free field") {
    const WellParameters free_well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = light_regulator(free_well);
    CHECK(rho_sea(free_well, 0.3, reg) == 0.0);
    CHECK(rho_sky(free_well, -0.1, reg) == 0.0);
    const VacuumDensity vac = vacuum_density(free_well, 0.2, reg);
    CHECK(vac.value == 0.0);
    CHECK(vac.sea_only == 0.0);
}

TEST_CASE("free vacuum density sits below the regulator floor") {
    const WellParameters free_well = validate_well(1.0, 1.0, 0.0);
    const RegulatorConfig reg = RegulatorConfig::defaults_for(free_well);
    CHECK(std::abs(free_vacuum_density(1.0, 0.0, reg)) < 1e-10);
    CHECK(std::abs(free_vacuum_density(1.0, 3.7, reg)) < 1e-10);
}

TEST_CASE("rho_b rejects the free field but vacuum_density treats it as zero") {
    const WellParameters free_well = validate_well(1.0, 1.0, 0.0);
    CHECK_THROWS_AS(rho_b(free_well, 0.0), RegimeError);
    const RegulatorConfig reg = light_regulator(free_well);
    CHECK(vacuum_density(free_well, 0.0, reg).value == 0.0);
}

TEST_CASE("regime errors for eta > m") {
    const WellParameters deep = validate_well(1.0, 1.0, 1.3);
    const RegulatorConfig reg = light_regulator(deep);
    CHECK_THROWS_AS(rho_sea(deep, 0.0, reg), RegimeError);
    CHECK_THROWS_AS(rho_sky(deep, 0.0, reg), RegimeError);
    CHECK_THROWS_AS(rho_b(deep, 0.0), RegimeError);
    CHECK_THROWS_AS(total_charge_mode_sum(deep, reg), RegimeError);
}

TEST_CASE("bound density integrates to the number of bound states") {
    const WellParameters well = validate_well(1.0, 5.0, 0.5);
    const std::size_t count = bound_state_energies(well).energies.size();
    REQUIRE(count > 0);

    const double e_top = bound_state_energies(well).energies.back();
    const double kappa_min = std::sqrt(1.0 - e_top * e_top);
    const double panel = 2.0 / kappa_min;

    std::vector<double> all_nodes, all_weights, nodes, weights;
    map_gauss_legendre(96, -2.5, 2.5, nodes, weights);
    all_nodes = nodes;
    all_weights = weights;
    for (int side : {-1, 1}) {
        for (int k = 0; k < 40; ++k) {
            const double lo = 2.5 + k * panel;
            map_gauss_legendre(24, lo, lo + panel, nodes, weights);
            for (std::size_t i = 0; i < nodes.size(); ++i) {
                all_nodes.push_back(side * nodes[i]);
                all_weights.push_back(weights[i]);
            }
        }
    }
    const std::vector<double> samples = rho_b_profile(well, all_nodes);
    const double total = integrate_well_region(all_nodes, all_weights, samples);
    CHECK(total == doctest::Approx(static_cast<double>(count)).epsilon(1e-10));
}

TEST_CASE("bound density is even in z") {
    const WellParameters well = validate_well(1.0, 5.0, 0.5);
    for (double z : {0.2, 1.7, 2.4, 3.3})
        CHECK(rho_b(well, z) == rho_b(well, -z));
}

TEST_CASE("sea charge in the well region reproduces the golden total") {
    const WellParameters well = validate_well(1.0, 1.0, 1.0);
    const RegulatorConfig reg = RegulatorConfig::defaults_for(well);
    std::vector<double> nodes, weights;
    map_gauss_legendre(128, -0.5, 0.5, nodes, weights);
    const std::vector<double> sea = rho_sea_profile(well, nodes, reg);
    const double q_sea = integrate_well_region(nodes, weights, sea);
    CHECK(q_sea == doctest::Approx(-0.204).epsilon(0.05));
    CHECK(std::abs(q_sea + 0.204) < 0.01);
}

TEST_CASE("pointwise densities self-converge under a doubled regulator") {
    const WellParameters well = validate_well(1.0, 1.0, 0.5);
    const RegulatorConfig reg = RegulatorConfig::defaults_for(well);
    const RegulatorConfig fine = reg.doubled();
    CHECK(std::abs(rho_sea(well, 0.0, reg) - rho_sea(well, 0.0, fine)) < 1e-3);
    CHECK(std::abs(rho_sky(well, 0.0, reg) - rho_sky(well, 0.0, fine)) < 1e-3);
    const VacuumDensity coarse_v = vacuum_density(well, 0.0, reg);
    const VacuumDensity fine_v = vacuum_density(well, 0.0, fine);
    CHECK(std::abs(coarse_v.value - fine_v.value) < 1e-3);
}

TEST_CASE("positive and negative continuum densities balance the bound density") {
    const WellParameters well = validate_well(1.0, 1.0, 1.0);
    const RegulatorConfig reg = RegulatorConfig::defaults_for(well);
    const double z = 0.0;
    const double residual = rho_sea(well, z, reg) + rho_sky(well, z, reg) + rho_b(well, z);
    CHECK(std::abs(residual) < 1e-2);

    const VacuumDensity vac = vacuum_density(well, z, reg);
    CHECK(std::abs(vac.value - vac.sea_only) < 1e-2);
}

TEST_CASE("vacuum density is even in z") {
    const WellParameters well = validate_well(1.0, 1.0, 0.5);
    RegulatorConfig reg = light_regulator(well);
    const std::vector<double> grid = {-0.3, 0.3};
    const std::vector<VacuumDensity> vals = vacuum_density_profile(well, grid, reg);
    CHECK(vals[0].value == vals[1].value);
}

TEST_CASE("total mode-sum charge matches the golden rows") {
    {
        const WellParameters well = validate_well(1.0, 1.0, 0.1);
        const ChargeReport report =
            total_charge_mode_sum(well, RegulatorConfig::defaults_for(well));
        CHECK(std::abs(report.value - (-0.021)) < 0.01);
        CHECK(report.value < 0.0);
        CHECK(report.error_estimate >= 0.0);
    }
    {
        const WellParameters well = validate_well(1.0, 5.0, 0.5);
        const ChargeReport report =
            total_charge_mode_sum(well, RegulatorConfig::defaults_for(well));
        CHECK(std::abs(report.value - (-0.733)) < 0.02);
    }
    {
        const WellParameters well = validate_well(1.0, 10.0, 1.0);
        const ChargeReport report =
            total_charge_mode_sum(well, RegulatorConfig::defaults_for(well));
        CHECK(std::abs(report.value - (-3.05)) < 0.05);
    }
}

TEST_CASE("error estimate shrinks by at least 2x under a doubled regulator") {
    const WellParameters well = validate_well(1.0, 1.0, 0.5);
    RegulatorConfig coarse = light_regulator(well);
    coarse.p_max = 20.0;
    coarse.n_p = 512;
    const ChargeReport base = total_charge_mode_sum(well, coarse);
    const ChargeReport fine = total_charge_mode_sum(well, coarse.doubled());
    CHECK(base.error_estimate >= 2.0 * fine.error_estimate);
}

TEST_CASE("scalar and profile evaluations agree exactly") {
    const WellParameters well = validate_well(1.0, 1.0, 0.5);
    const RegulatorConfig reg = light_regulator(well);
    const std::vector<double> grid = {-0.2, 0.0, 0.31};
    const std::vector<double> sea = rho_sea_profile(well, grid, reg);
    for (std::size_t i = 0; i < grid.size(); ++i)
        CHECK(sea[i] == rho_sea(well, grid[i], reg));
}

TEST_CASE("results are bit-identical across worker counts") {
    const WellParameters well = validate_well(1.0, 1.0, 1.0);
    const RegulatorConfig reg = light_regulator(well);
    const std::vector<double> grid = {-0.3, 0.0, 0.4};

    setenv("VACUUM_CHARGE_THREADS", "1", 1);
    const std::vector<double> serial = rho_sea_profile(well, grid, reg);
    const double q_serial = total_charge_mode_sum(well, reg).value;
    unsetenv("VACUUM_CHARGE_THREADS");
    const std::vector<double> parallel = rho_sea_profile(well, grid, reg);
    const double q_parallel = total_charge_mode_sum(well, reg).value;

    for (std::size_t i = 0; i < grid.size(); ++i) CHECK(serial[i] == parallel[i]);
    CHECK(q_serial == q_parallel);
}
