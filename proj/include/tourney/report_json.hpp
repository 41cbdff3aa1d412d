#pragma once

#include <json.hpp>

#include "tourney/analysis.hpp"
#include "tourney/counting.hpp"
#include "tourney/loctrans.hpp"

namespace tourney {

inline constexpr int kJsonSchema = 1;

// Every top-level document carries "schema": kJsonSchema. Keys are emitted in
// sorted order, so equal inputs serialise to identical bytes.

nlohmann::json to_json(const CountProfile& p);
nlohmann::json to_json(const SampledQuadDensities& s);
nlohmann::json to_json(const Obstruction& o);
nlohmann::json to_json(const CyclicOrder& o);
nlohmann::json to_json(const DiagnosticReport& r);
/// mean, plain and factorial second moments, size and scale.
nlohmann::json moments_json(const EmpiricalDistribution& d);

/// Exact "value,count" rows (ascending, nonzero counts only).
std::string distribution_csv(const EmpiricalDistribution& d);
/// "bin_lo,bin_hi,count" rows over [0, 1]; the last bin is closed.
std::string histogram_csv(const EmpiricalDistribution& d, std::uint32_t bins);

}  // namespace tourney
