#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hydro::testing {

struct PropertyResult {
    bool ok = true;
    int cases = 0;      ///< instances actually checked
    std::string detail; ///< first counterexample
};

struct Property {
    std::string name;
    std::function<PropertyResult(std::uint64_t seed)> run;
};

/// Seeded property checks shared by the unit tests and the acceptance run.
const std::vector<Property>& property_suite();

PropertyResult field_axioms(std::uint64_t seed);
PropertyResult leibniz_rule(std::uint64_t seed);
PropertyResult evaluation_homomorphism(std::uint64_t seed);
PropertyResult matrix_inverse_identity(std::uint64_t seed);
PropertyResult obstruction_symmetry(std::uint64_t seed);
PropertyResult killing_residual_symmetry(std::uint64_t seed);
PropertyResult nijenhuis_antisymmetry(std::uint64_t seed);
PropertyResult t5_redundancy(std::uint64_t seed);
PropertyResult exact_pencils(std::uint64_t seed);
PropertyResult diagonal_eigenvalues_constant(std::uint64_t seed);

} // namespace hydro::testing
