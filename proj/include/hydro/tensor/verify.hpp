#pragma once

#include "hydro/tensor/bivector.hpp"
#include "hydro/tensor/check_options.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hydro {

struct Witness {
    std::vector<int> index; ///< 1-based
    std::string residual;
};

struct ConditionResult {
    std::string name;
    bool pass = true;
    /// Recorded for information; does not enter the verdict.
    bool informational = false;
    std::optional<Witness> witness;
};

struct VerificationReport {
    std::vector<ConditionResult> conditions;
    bool verdict = true;
    CheckMode mode = CheckMode::Symbolic;
    std::uint64_t seed = kDefaultSeed;

    void add(ConditionResult c);
    const ConditionResult* find(std::string_view name) const;
    bool passed(std::string_view name) const;
    std::vector<std::string> failures() const;
};

/// Both metrics flat (h recorded informationally), then the five conditions
/// on the obstruction tensor, named T1..T5.
VerificationReport mokhov_conditions(const Bivector& g, const Bivector& h, const CheckOptions& opts = {});

/// For constant g: "linearity", "nijenhuis", "killing"; "flat(h)" informational.
VerificationReport killing_nijenhuis_conditions(const Bivector& g, const Bivector& h,
                                                const CheckOptions& opts = {});

/// d = 2: both criteria, which must agree (DisagreementBug otherwise).
/// d >= 3: flatness of the first metric, then for every ordered pair (b, c),
/// b != c: "linearity[b,c]", "nijenhuis[b,c]", "killing[b,c]".
VerificationReport verify_operator(const OperatorSpec& spec, const CheckOptions& opts = {});

} // namespace hydro
