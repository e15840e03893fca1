#pragma once

#include "hydro/tensor/bivector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hydro {

/// An eigenvalue re +- i*im of the affinor of the first two metrics.
struct ExpectedEigenvalue {
    MultiPoly re;
    MultiPoly im; ///< zero for real eigenvalues
};

struct CatalogEntry {
    std::string id;
    std::string family;      ///< shared by entries differing only in n or branch
    std::string description;
    OperatorSpec spec;
    /// Segre label of (metrics[0], metrics[1]); empty when not recorded.
    std::string segre;
    std::vector<ExpectedEigenvalue> eigenvalues;

    int n() const { return spec.n(); }
    int d() const { return spec.d(); }
};

/// Constant metric g with ones on the antidiagonal and
/// g~ = (b^{ij}_{i+j-1} + b^{ji}_{i+j-1}) u^{i+j-1}, b^{ij}_{i+j-1} = 3j - n - 2.
OperatorSpec mokhov_operator(int n);

/// Same g, g~ = (b^{ij}_{i+j} + b^{ji}_{i+j}) u^{i+j} + lambda g with b^{ij}_{i+j} = 3j - n - 1.
/// The ring carries the parameter "lambda". Requires n >= 3.
OperatorSpec shifted_mokhov_operator(int n);

/// Block-diagonal metrics on the combined coordinates; parameters are merged
/// by name. Both operands need the same number of metrics.
OperatorSpec direct_sum(const OperatorSpec& a, const OperatorSpec& b);

/// -P: every metric negated.
OperatorSpec negate(const OperatorSpec& p);

/// A constant pair (g, g~0) in Segre normal form together with the displayed
/// basis of the linear parts g~1.. of its general solution.
struct PencilNormalForm {
    std::string id;
    std::string segre;
    Bivector g;
    Bivector g0;
    std::vector<Bivector> basis;
};

/// Three-component [3] and the four-component types [2,2], [3,1] (both signs
/// of g), [4] and the complex pair.
const std::vector<PencilNormalForm>& pencil_normal_forms();

/// Every entry, in a fixed order.
const std::vector<CatalogEntry>& catalog();

/// Entries whose id or family equals `key`, optionally restricted to n.
std::vector<CatalogEntry> find_entries(const std::string& key, std::optional<int> n = std::nullopt);

/// The entry with this id (OutOfRange when unknown).
const CatalogEntry& catalog_entry(const std::string& id);

inline constexpr int kCatalogVersion = 1;

} // namespace hydro
