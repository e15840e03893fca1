#pragma once

#include "hydro/tensor/bivector.hpp"
#include "hydro/tensor/verify.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace hydro::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

/// Operator read from a spec file, with the optional display names.
struct LoadedSpec {
    OperatorSpec spec;
    std::vector<std::string> variables; ///< n names, u1..un by default
};

/// Throws ParseError on any schema violation.
LoadedSpec spec_from_json(const nlohmann::json& j);
LoadedSpec load_spec_file(const std::string& path);

/// Canonical file form: constant matrix in full, linear entries with i <= j only.
Json spec_to_json(const OperatorSpec& spec, const std::vector<std::string>& variables = {});

Json report_to_json(const VerificationReport& r);

/// Default seed: $HYDRO_SEED when set, otherwise kDefaultSeed.
std::uint64_t default_seed();

/// Runs the command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hydro::cli
