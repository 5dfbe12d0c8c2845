#ifndef VACQ_REPORTING_HPP
#define VACQ_REPORTING_HPP

#include <optional>
#include <string>
#include <vector>

#include "vacq/capri.hpp"
#include "vacq/casimir.hpp"
#include "vacq/mode_sum.hpp"
#include "vacq/report.hpp"
#include "vacq/well.hpp"

namespace vacq {

enum class OutputFormat { Csv, Json };

/// One reference-table row: published total charge for m = 1.
struct TableRow {
    double a;
    double eta;
    double published;
    double tolerance;
};

/// Golden data reproduced by `reproduce-tables`: the naive (mode-sum/contour)
/// charges and their point-split counterparts, with per-row tolerances
/// (+-0.002 where three decimals are published, +-0.01 for the
/// three-significant-figure rows).
const std::vector<TableRow>& table1_rows();
const std::vector<TableRow>& table2_rows();

struct TableCheckRow {
    int table;  ///< 1 or 2
    double a;
    double eta;
    double computed;
    double published;
    double tolerance;
    bool pass;
};

/// Computes both tables at the given configuration (m forced to 1).
std::vector<TableCheckRow> reproduce_tables(const QuadratureConfig& quad);

/// CSV renderers. Numbers use 12 significant digits; output is deterministic.
std::string render_profile_csv(const ChargeProfile& profile);
std::string render_profiles_csv(const std::vector<ChargeProfile>& profiles);
std::string render_charges_csv(const WellParameters& well,
                               const std::vector<ChargeReport>& reports);
std::string render_table_csv(const std::vector<TableCheckRow>& rows);
std::string render_trace_csv(const EnergyTrace& trace);
std::string render_audit_csv(const AuditReport& audit);

/// JSON renderers mirroring the CSV fields plus error estimates and
/// settings digests.
std::string render_profile_json(const ChargeProfile& profile);
std::string render_profiles_json(const std::vector<ChargeProfile>& profiles);
std::string render_charges_json(const WellParameters& well,
                                const std::vector<ChargeReport>& reports);
std::string render_table_json(const std::vector<TableCheckRow>& rows);
std::string render_trace_json(const EnergyTrace& trace, RampChargeMethod method);
std::string render_audit_json(const AuditReport& audit);

/// Parses a CSV document into header + rows of string fields (used by the
/// round-trip checks; fields must not contain commas).
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

/// Writes to the path, or to stdout when path is empty. Throws IoError on
/// failure. Fails on empty payloads rather than creating empty files.
void write_artifact(const std::string& path, const std::string& payload);

/// Formats one double with 12 significant digits (the CSV number format).
std::string format_number(double v);

// ---------------------------------------------------------------------------
// command-line front end

enum class Command { Charge, DensityProfile, Casimir, ReproduceTables, Audit };
enum class MethodSelection { ModeSum, Contour, PointSplit, All };

struct RunConfig {
    Command command = Command::Charge;
    double m = 1.0;
    double a = 1.0;
    double eta = 0.0;
    double eta_final = 1.0;
    MethodSelection method = MethodSelection::All;
    // numeric knobs; unset values resolve to the mass-scaled module defaults
    std::optional<double> p_max;
    std::optional<int> n_p;
    std::optional<double> y_max;
    std::optional<int> n_nodes;
    std::optional<double> pv_delta;
    std::optional<int> n_steps;
    int z_points = 201;
    std::string out;  ///< empty = stdout
    OutputFormat format = OutputFormat::Csv;
    bool print_config = false;

    RegulatorConfig regulator(const WellParameters& well) const;
    QuadratureConfig quadrature(const WellParameters& well) const;
};

/// Exit codes: 0 success, 2 usage, 3 regime/out-of-region, 4 non-convergence,
/// 5 I/O.
int run_cli(int argc, const char* const* argv);

} // namespace vacq

#endif
