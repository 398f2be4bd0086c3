#ifndef HARDYLT_REPORT_HPP
#define HARDYLT_REPORT_HPP

#include <json.hpp>

#include <string>
#include <vector>

namespace hardylt::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Tolerance presets selected by HARDYLT_TOL_PROFILE (fast | strict).
struct ToleranceProfile {
    std::string name = "strict";
    double quad_tol = 1e-10;
    double opt_tol = 1e-6;
    int grid_n = 4000;
};

ToleranceProfile profile_by_name(const std::string& name);
ToleranceProfile profile_from_env();

struct RunConfig {
    std::string subcommand;
    nlohmann::json flags = nlohmann::json::object();
    ToleranceProfile tol;
    unsigned seed = 12345;
    std::string out_path; // empty = stdout
};

// One audited constant consumed by a run; source is "paper" or "computed".
struct ConstantUse {
    std::string name;
    double value;
    std::string source;
};

// Deterministic report envelope: no timestamps, stable key order via
// nlohmann's sorted objects.
nlohmann::json make_report(const RunConfig& config, nlohmann::json result,
                           const std::vector<ConstantUse>& constants);

} // namespace hardylt::cli

#endif
