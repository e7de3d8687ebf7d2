#include "overgroup/report.hpp"

#include <charconv>
#include <cmath>

namespace overgroup {

std::string tool_version() { return OVERGROUP_VERSION; }

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

json to_json(const ReportHeader& header) {
  return json{{"tool", "overgroup"},
              {"version", tool_version()},
              {"omega", header.omega},
              {"budget", header.budget},
              {"seed", header.seed}};
}

namespace {

struct GrowthRow {
  std::size_t n;
  std::uint64_t sphere;
  std::uint64_t gamma;
  double root;
  std::optional<double> lower;
  std::optional<double> upper;
};

std::vector<GrowthRow> growth_rows(const BallTable& table, double curve_epsilon) {
  const auto gamma = table.gamma();
  const auto roots = growth_exponent_estimate(gamma);
  std::vector<GrowthRow> rows;
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    GrowthRow row{n, table.sphere_size(n), gamma[n], roots[n], std::nullopt, std::nullopt};
    if (n >= 3) {
      const double x = static_cast<double>(n);
      row.lower = std::exp(BoundCurves::log_lower_at(x, curve_epsilon));
      row.upper = std::exp(BoundCurves::log_upper_at(x));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

void write_growth_csv(std::ostream& out, const BallTable& table, double curve_epsilon,
                      const ReportHeader& header) {
  out << "# tool=overgroup version=" << tool_version() << "\n";
  out << "# omega=" << header.omega << " shift=" << table.shift() << " budget=" << header.budget
      << " seed=" << header.seed << "\n";
  out << "# radius=" << table.radius() << " requested=" << table.requested_radius()
      << " complete=" << (table.complete() ? "true" : "false") << " curve_epsilon=" << format_double(curve_epsilon)
      << "\n";
  out << "n,sphere,gamma,gamma_root,lower_curve,upper_curve\n";
  for (const GrowthRow& r : growth_rows(table, curve_epsilon)) {
    out << r.n << ',' << r.sphere << ',' << r.gamma << ',' << format_double(r.root) << ','
        << (r.lower ? format_double(*r.lower) : "") << ',' << (r.upper ? format_double(*r.upper) : "") << "\n";
  }
}

json growth_json(const BallTable& table, double curve_epsilon, const ReportHeader& header) {
  json rows = json::array();
  for (const GrowthRow& r : growth_rows(table, curve_epsilon)) {
    rows.push_back({{"n", r.n},
                    {"sphere", r.sphere},
                    {"gamma", r.gamma},
                    {"gamma_root", r.root},
                    {"lower_curve", r.lower ? json(*r.lower) : json(nullptr)},
                    {"upper_curve", r.upper ? json(*r.upper) : json(nullptr)}});
  }
  return json{{"header", to_json(header)},
              {"shift", table.shift()},
              {"radius", table.radius()},
              {"requested_radius", table.requested_radius()},
              {"complete", table.complete()},
              {"curve_epsilon", curve_epsilon},
              {"rows", rows}};
}

void write_ball_jsonl(std::ostream& out, const BallTable& table) {
  for (ElementId id = 0; id < table.size(); ++id) {
    const BallEntry& e = table.entry(id);
    out << json{{"id", id}, {"length", e.length}, {"word", e.word.render()}, {"portrait_hash", e.key}}.dump()
        << "\n";
  }
}

json to_json(const OmegaClass& cls) {
  json j{{"class", std::string(to_string(cls.kind))}, {"two_symbol", cls.two_symbol}};
  j["star_M"] = cls.star_window ? json(*cls.star_window) : json(nullptr);
  return j;
}

json to_json(const ReductionReceipt& receipt) {
  return json{{"word", receipt.word.render()}, {"alpha", receipt.contractions}};
}

json to_json(const Portrait& portrait) {
  json labels = json::object();
  for (std::size_t i = 0; i < portrait.size(); ++i) {
    labels[Portrait::vertex_of(i)] = portrait.label_at(i) ? "P" : "I";
  }
  return json{{"depth", portrait.depth()}, {"labels", labels}};
}

json to_json(const Lemma3Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"id", v.id}, {"word", v.word}, {"length", v.length}, {"detail", v.detail}});
  }
  return json{{"suite", "lemma3"},
              {"omega", r.omega},
              {"n", r.n},
              {"shifted_radius", r.shifted_radius},
              {"complete", r.complete},
              {"stabilizer_elements", r.stabilizer_elements},
              {"gamma", r.gamma},
              {"shifted_gamma", r.shifted_gamma},
              {"gamma_violations", r.gamma_violations},
              {"violations", violations}};
}

json to_json(const Lemma8Report& r) {
  json violations = json::array();
  for (const auto& v : r.violations) violations.push_back({{"n", v.n}, {"id", v.id}, {"word", v.word}});
  return json{{"suite", "lemma8"},
              {"epsilon", r.epsilon.render()},
              {"max_n", r.max_n},
              {"f_sizes_from_n2", r.f_sizes},
              {"words_checked", r.words_checked},
              {"violations", violations}};
}

json to_json(const Lemma9Report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"k", row.k},
                    {"count", to_string(row.count)},
                    {"root", row.root},
                    {"envelope_root", row.envelope_root},
                    {"bound", r.bound},
                    {"above_bound", row.above_bound}});
  }
  return json{{"suite", "lemma9"},
              {"delta", r.delta.render()},
              {"bound", r.bound},
              {"within_envelope", r.within_envelope},
              {"non_decreasing_at", r.non_decreasing_at},
              {"rows", rows}};
}

namespace {

json violations_json(const std::vector<Lemma11Violation>& list) {
  json out = json::array();
  for (const auto& v : list) out.push_back({{"id", v.id}, {"word", v.word}, {"lhs", v.lhs}, {"rhs", v.rhs}});
  return out;
}

}  // namespace

json to_json(const Lemma11Report& r) {
  return json{{"suite", "lemma11"},
              {"epsilon", r.epsilon.render()},
              {"n", r.n},
              {"s", r.s},
              {"t", r.t},
              {"elements_in_stabilizer", r.elements_in_stabilizer},
              {"part_a", {{"words_checked", r.words_checked_a}, {"violations", violations_json(r.violations_a)}}},
              {"part_b",
               {{"status", std::string(to_string(r.part_b))},
                {"bound", r.bound_b},
                {"words_checked", r.words_checked_b},
                {"violations", violations_json(r.violations_b)}}}};
}

json to_json(const Prop6Report& r) {
  return json{{"suite", "prop6"},
              {"omega", r.omega},
              {"collapse_shift", r.collapse_shift},
              {"collapsed", r.collapsed},
              {"collapse_ok", r.collapse_ok},
              {"shifted_gamma", r.shifted_gamma},
              {"dihedral_ok", r.dihedral_ok},
              {"gamma", r.gamma},
              {"degree_estimates", r.degree_estimates},
              {"complete", r.complete}};
}

json to_json(const Eq2Report& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) mismatches.push_back({{"generator", m.generator}, {"detail", m.detail}});
  return json{{"suite", "eq2"}, {"omega", r.omega}, {"vertices_checked", r.vertices_checked}, {"mismatches", mismatches}};
}

json to_json(const std::vector<ClaimResult>& claims) {
  json out = json::array();
  for (const auto& c : claims) out.push_back({{"claim", c.claim}, {"ok", c.ok}});
  return out;
}

}  // namespace overgroup
