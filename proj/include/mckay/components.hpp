#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mckay/mckay_graph.hpp"
#include "mckay/weyl.hpp"

namespace mckay {

struct ComponentIndex {
    DimVec d;
    long long n = 0;   // size of d
    long long wt = 0;  // weight statistic
    long long dim = 0; // 2 * wt
    std::optional<WeylWord> witness;
};

inline constexpr long long kDefaultEnumerationBudget = 10'000'000;

// All d >= 0 with size n and nonnegative weight, in lexicographic order of
// entries. The budget caps visited search nodes (override with MCKAY_BUDGET
// through the CLI).
std::vector<ComponentIndex> enumerate_components(const RootDatum& r, long long n,
                                                 long long budget = kDefaultEnumerationBudget);

long long component_count(const RootDatum& r, long long n,
                          long long budget = kDefaultEnumerationBudget);

// Deterministic CSV or JSON table of (d, wt, dim); format is "csv" or "json".
std::string component_report(const RootDatum& r, long long n, const std::string& format,
                             long long budget = kDefaultEnumerationBudget,
                             const std::string& group_label = "");

} // namespace mckay
