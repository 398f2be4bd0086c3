#include "hardylt/report.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hardylt::cli {

ToleranceProfile profile_by_name(const std::string& name) {
    if (name == "strict") return {"strict", 1e-10, 1e-6, 4000};
    if (name == "fast") return {"fast", 1e-8, 1e-5, 1500};
    throw std::runtime_error("unknown tolerance profile '" + name + "' (expected fast or strict)");
}

ToleranceProfile profile_from_env() {
    const char* env = std::getenv("HARDYLT_TOL_PROFILE");
    return profile_by_name(env ? env : "strict");
}

nlohmann::json make_report(const RunConfig& config, nlohmann::json result,
                           const std::vector<ConstantUse>& constants) {
    nlohmann::json provenance = nlohmann::json::array();
    for (const ConstantUse& c : constants)
        provenance.push_back({{"name", c.name}, {"value", c.value}, {"source", c.source}});
    return nlohmann::json{
        {"tool_version", kToolVersion},
        {"config",
         {{"subcommand", config.subcommand},
          {"flags", config.flags},
          {"tolerances",
           {{"profile", config.tol.name},
            {"quad_tol", config.tol.quad_tol},
            {"opt_tol", config.tol.opt_tol},
            {"grid_n", config.tol.grid_n}}},
          {"seed", config.seed}}},
        {"constants_used", provenance},
        {"result", std::move(result)},
    };
}

} // namespace hardylt::cli
