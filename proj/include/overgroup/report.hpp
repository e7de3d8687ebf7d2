#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include "json.hpp"
#include "overgroup/ball.hpp"
#include "overgroup/checks.hpp"
#include "overgroup/counting.hpp"
#include "overgroup/geodesics.hpp"

namespace overgroup {

using nlohmann::json;

/// Provenance block written at the top of every report.
struct ReportHeader {
  std::string omega;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
};

std::string tool_version();

json to_json(const ReportHeader& header);

/// Growth table with columns n, sphere, gamma, gamma_root, lower_curve, upper_curve.
/// Header lines start with '#'. Curve cells are empty for n < 3.
void write_growth_csv(std::ostream& out, const BallTable& table, double curve_epsilon,
                      const ReportHeader& header);
json growth_json(const BallTable& table, double curve_epsilon, const ReportHeader& header);

/// One JSON object per element: id, length, word, portrait_hash.
void write_ball_jsonl(std::ostream& out, const BallTable& table);

/// Locale-independent shortest round-trip formatting.
std::string format_double(double value);

json to_json(const OmegaClass& cls);
json to_json(const ReductionReceipt& receipt);
json to_json(const Portrait& portrait);
json to_json(const Lemma3Report& report);
json to_json(const Lemma8Report& report);
json to_json(const Lemma9Report& report);
json to_json(const Lemma11Report& report);
json to_json(const Prop6Report& report);
json to_json(const Eq2Report& report);
json to_json(const std::vector<ClaimResult>& claims);

}  // namespace overgroup
