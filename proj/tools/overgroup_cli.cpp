// Command-line front end: element operations, growth tables and the
// verification suites. Exit codes: 0 success, 1 violation found, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "overgroup/ball.hpp"
#include "overgroup/checks.hpp"
#include "overgroup/counting.hpp"
#include "overgroup/elements.hpp"
#include "overgroup/geodesics.hpp"
#include "overgroup/omega.hpp"
#include "overgroup/report.hpp"

namespace og = overgroup;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::size_t default_budget() {
  if (const char* env = std::getenv("OVERGROUP_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed OVERGROUP_BUDGET\n";
    }
  }
  return og::BallOptions{}.element_budget;
}

struct Config {
  std::string omega = "(012)";
  std::size_t radius = 8;
  std::string epsilon = "0.1";
  std::string delta = "0.3";
  std::size_t kmax = 14;
  std::size_t budget = default_budget();
  std::string format = "json";
  std::string output;
  int workers = 0;
  std::uint64_t seed = 1;
  std::size_t shift = 0;
  std::string word;
  std::string w1;
  std::string w2;
  std::string vertex;
  std::size_t depth = 4;
  std::uint64_t max_order = 4096;
  std::string suite = "all";
  std::size_t s = 0;
  std::size_t samples = 10000;
  double curve_epsilon = 1.0;
};

og::BallOptions ball_options(const Config& cfg) {
  og::BallOptions o;
  o.element_budget = cfg.budget;
  o.workers = cfg.workers;
  return o;
}

og::ReportHeader header_for(const Config& cfg, const std::string& omega) {
  return og::ReportHeader{omega, cfg.budget, cfg.seed};
}

// Writes to --output when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Config& cfg, const og::json& j) {
  Sink sink(cfg.output);
  sink.stream() << j.dump(2) << "\n";
}

og::GroupPtr group_of(const Config& cfg) { return og::Overgroup::make(og::parse_omega(cfg.omega)); }

og::Element element_of(const Config& cfg, const og::GroupPtr& group, const std::string& word) {
  return og::Element::parse(group, word, cfg.shift);
}

std::size_t count_claim_failures(const std::vector<og::ClaimResult>& claims) {
  std::size_t n = 0;
  for (const auto& c : claims) n += c.ok ? 0 : 1;
  return n;
}

// Seeded random pairs: equal() against portraits to depth 14.
og::json wordproblem_suite(const Config& cfg, std::size_t& violations) {
  auto group = og::Overgroup::make(og::parse_omega("(012)"));
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> len(0, 10);
  std::uniform_int_distribution<std::size_t> pick(0, 7);
  auto random_element = [&] {
    std::vector<og::Letter> raw(len(rng));
    for (auto& l : raw) l = og::kGenerators[pick(rng)];
    return og::Element::from_letters(group, raw);
  };
  std::size_t equal_pairs = 0, bad = 0;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    const og::Element g = random_element();
    const og::Element h = random_element();
    const bool eq = og::equal(g, h);
    const bool same = og::portrait(g, 14) == og::portrait(h, 14);
    equal_pairs += eq ? 1 : 0;
    if (eq != same) ++bad;
  }
  violations += bad;
  return og::json{{"suite", "wordproblem"}, {"samples", cfg.samples}, {"equal_pairs", equal_pairs}, {"violations", bad}};
}

int run_verify(const Config& cfg, bool omega_given, bool radius_given) {
  const og::Rational eps = og::parse_rational(cfg.epsilon);
  const og::Rational delta = og::parse_rational(cfg.delta);
  if (!(og::Rational(0) < eps && eps < og::Rational(1, 2))) {
    throw std::invalid_argument("--epsilon must lie in (0, 1/2)");
  }
  const bool all = cfg.suite == "all";
  std::size_t violations = 0;
  og::json suites = og::json::array();
  const std::size_t radius = radius_given ? cfg.radius : 8;

  if (all || cfg.suite == "eq1") {
    const auto claims = og::eq1_check();
    violations += count_claim_failures(claims);
    suites.push_back({{"suite", "eq1"}, {"claims", og::to_json(claims)}});
  }
  if (all || cfg.suite == "eq2") {
    std::vector<std::string> omegas{"(012)", "(01)", "(0)", "(2)", "01(2)"};
    if (omega_given) omegas = {cfg.omega};
    for (const auto& w : omegas) {
      const auto r = og::eq2_check(og::Overgroup::make(og::parse_omega(w)));
      violations += r.mismatches.size();
      suites.push_back(og::to_json(r));
    }
  }
  if (all || cfg.suite == "lemma3") {
    const auto r = og::lemma3_check(group_of(cfg), radius, ball_options(cfg));
    violations += r.violations.size() + r.gamma_violations.size();
    suites.push_back(og::to_json(r));
  }
  if (all || cfg.suite == "lemma4") {
    const auto claims = og::lemma4_check();
    violations += count_claim_failures(claims);
    suites.push_back({{"suite", "lemma4"}, {"claims", og::to_json(claims)}});
  }
  if (all || cfg.suite == "lemma8") {
    const auto table = og::enumerate_ball(group_of(cfg), cfg.shift, radius, ball_options(cfg));
    const auto r = og::lemma8_check(table, eps, table.radius());
    violations += r.violations.size();
    suites.push_back(og::to_json(r));
  }
  if (all || cfg.suite == "lemma9") {
    const auto r = og::lemma9_report(delta, cfg.kmax);
    violations += r.within_envelope ? 0 : 1;
    suites.push_back(og::to_json(r));
  }
  if (all || cfg.suite == "lemma11") {
    const auto group = group_of(cfg);
    const auto shifted = group->omega().shift(cfg.shift);
    const auto third = og::first_third_symbol_index(shifted);
    const std::size_t s = cfg.s ? cfg.s : third.value_or(0);
    if (s == 0) throw std::invalid_argument("lemma11: omega never shows a third symbol");
    // Without an explicit radius, also run the smallest configuration where the
    // conditional bound applies.
    std::vector<std::pair<std::size_t, og::Rational>> runs{{radius, eps}};
    if (!radius_given) runs.emplace_back(13, og::Rational(1, 5));
    for (const auto& [n, e] : runs) {
      const auto table = og::enumerate_ball(group, cfg.shift, n, ball_options(cfg));
      const auto r = og::lemma11_check(table, e, s);
      violations += r.violations_a.size() + r.violations_b.size();
      suites.push_back(og::to_json(r));
    }
  }
  if (all || cfg.suite == "prop6") {
    std::vector<std::string> omegas{"(0)", "(1)", "(2)", "01(2)"};
    if (omega_given) omegas = {cfg.omega};
    const std::size_t n = radius_given ? cfg.radius : 20;
    for (const auto& w : omegas) {
      // The unshifted group of a preperiodic ω grows polynomially but fast.
      const auto r = og::prop6_check(og::Overgroup::make(og::parse_omega(w)), n, ball_options(cfg));
      violations += (r.collapse_ok ? 0 : 1) + (r.dihedral_ok ? 0 : 1);
      suites.push_back(og::to_json(r));
    }
  }
  if (all || cfg.suite == "wordproblem") suites.push_back(wordproblem_suite(cfg, violations));

  if (suites.empty()) throw CLI::ValidationError("--suite", "unknown suite " + cfg.suite);
  emit(cfg, og::json{{"header", og::to_json(header_for(cfg, og::parse_omega(cfg.omega).render()))},
                     {"suites", suites},
                     {"violations", violations}});
  return violations == 0 ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overgroups of spinal tree automorphism groups: word problem, growth and structural checks"};
  app.require_subcommand(1);
  Config cfg;

  auto add_omega = [&](CLI::App* cmd) { return cmd->add_option("--omega", cfg.omega, "sequence PRE(PER)"); };
  auto add_shift = [&](CLI::App* cmd) { cmd->add_option("--shift", cfg.shift, "shift k of the group G~_{σ^k ω}"); };
  auto add_output = [&](CLI::App* cmd) { cmd->add_option("--output,-o", cfg.output, "output path"); };

  auto* classify_cmd = app.add_subcommand("classify", "class and window of ω");
  add_omega(classify_cmd)->required();
  add_output(classify_cmd);

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a word with the simple contractions");
  reduce_cmd->add_option("--word", cfg.word, "letters from a b c d x B C D 1")->required();
  add_output(reduce_cmd);

  auto* equal_cmd = app.add_subcommand("equal", "decide w1 = w2");
  add_omega(equal_cmd);
  add_shift(equal_cmd);
  equal_cmd->add_option("--w1", cfg.w1)->required();
  equal_cmd->add_option("--w2", cfg.w2)->required();
  add_output(equal_cmd);

  auto* identity_cmd = app.add_subcommand("identity", "decide w = 1");
  add_omega(identity_cmd);
  add_shift(identity_cmd);
  identity_cmd->add_option("--word", cfg.word)->required();
  add_output(identity_cmd);

  auto* act_cmd = app.add_subcommand("act", "image of a vertex");
  add_omega(act_cmd);
  add_shift(act_cmd);
  act_cmd->add_option("--word", cfg.word)->required();
  act_cmd->add_option("--vertex", cfg.vertex)->required();
  add_output(act_cmd);

  auto* sections_cmd = app.add_subcommand("sections", "sections of a stabilizer element");
  add_omega(sections_cmd);
  add_shift(sections_cmd);
  sections_cmd->add_option("--word", cfg.word)->required();
  add_output(sections_cmd);

  auto* portrait_cmd = app.add_subcommand("portrait", "P/I labels to a depth");
  add_omega(portrait_cmd);
  add_shift(portrait_cmd);
  portrait_cmd->add_option("--word", cfg.word)->required();
  portrait_cmd->add_option("--depth", cfg.depth);
  add_output(portrait_cmd);

  auto* order_cmd = app.add_subcommand("order", "bounded order search");
  add_omega(order_cmd);
  add_shift(order_cmd);
  order_cmd->add_option("--word", cfg.word)->required();
  order_cmd->add_option("--max-order", cfg.max_order)->check(CLI::PositiveNumber);
  add_output(order_cmd);

  auto* growth_cmd = app.add_subcommand("growth", "growth function from ball enumeration");
  add_omega(growth_cmd);
  add_shift(growth_cmd);
  growth_cmd->add_option("--radius", cfg.radius);
  growth_cmd->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  growth_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  growth_cmd->add_option("--workers", cfg.workers);
  growth_cmd->add_option("--seed", cfg.seed);
  growth_cmd->add_option("--curve-epsilon", cfg.curve_epsilon)->check(CLI::PositiveNumber);
  add_output(growth_cmd);

  auto* ball_cmd = app.add_subcommand("ball", "export the ball as JSONL");
  add_omega(ball_cmd);
  add_shift(ball_cmd);
  ball_cmd->add_option("--radius", cfg.radius);
  ball_cmd->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  ball_cmd->add_option("--workers", cfg.workers);
  add_output(ball_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"eq1", "eq2", "lemma3", "lemma4", "lemma8", "lemma9", "lemma11", "prop6",
                             "wordproblem", "all"}));
  auto* verify_omega = add_omega(verify_cmd);
  add_shift(verify_cmd);
  auto* verify_radius = verify_cmd->add_option("--radius", cfg.radius);
  verify_cmd->add_option("--epsilon", cfg.epsilon);
  verify_cmd->add_option("--delta", cfg.delta);
  verify_cmd->add_option("--kmax", cfg.kmax);
  verify_cmd->add_option("--s", cfg.s, "level for lemma11 (default: first third-symbol index)");
  verify_cmd->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--workers", cfg.workers);
  verify_cmd->add_option("--seed", cfg.seed);
  verify_cmd->add_option("--samples", cfg.samples);
  add_output(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*classify_cmd) {
      const auto omega = og::parse_omega(cfg.omega);
      og::json j = og::to_json(og::classify(omega));
      j["omega"] = omega.render();
      emit(cfg, j);
    } else if (*reduce_cmd) {
      emit(cfg, og::to_json(og::reduce(og::parse_letters(cfg.word))));
    } else if (*equal_cmd) {
      const auto group = group_of(cfg);
      const bool eq = og::equal(element_of(cfg, group, cfg.w1), element_of(cfg, group, cfg.w2));
      emit(cfg, og::json{{"omega", group->omega().render()}, {"shift", cfg.shift}, {"equal", eq}});
    } else if (*identity_cmd) {
      const auto group = group_of(cfg);
      const auto g = element_of(cfg, group, cfg.word);
      emit(cfg, og::json{{"element", g.render()}, {"identity", og::is_identity(g)}});
    } else if (*act_cmd) {
      const auto group = group_of(cfg);
      const auto g = element_of(cfg, group, cfg.word);
      emit(cfg, og::json{{"element", g.render()}, {"vertex", cfg.vertex}, {"image", og::act(g, cfg.vertex)}});
    } else if (*sections_cmd) {
      const auto group = group_of(cfg);
      const auto g = element_of(cfg, group, cfg.word);
      const auto [left, right] = og::sections(g);
      emit(cfg, og::json{{"element", g.render()}, {"left", left.render()}, {"right", right.render()}});
    } else if (*portrait_cmd) {
      const auto group = group_of(cfg);
      const auto g = element_of(cfg, group, cfg.word);
      og::json j = og::to_json(og::portrait(g, cfg.depth));
      j["element"] = g.render();
      emit(cfg, j);
    } else if (*order_cmd) {
      const auto group = group_of(cfg);
      const auto g = element_of(cfg, group, cfg.word);
      const auto r = og::order_bounded(g, cfg.max_order);
      og::json j{{"element", g.render()}, {"max_order", cfg.max_order}};
      if (r.order) {
        j["result"] = "Finite";
        j["order"] = *r.order;
      } else {
        j["result"] = "ExceedsBound";
      }
      emit(cfg, j);
    } else if (*growth_cmd) {
      const auto group = group_of(cfg);
      const auto table = og::enumerate_ball(group, cfg.shift, cfg.radius, ball_options(cfg));
      const auto header = header_for(cfg, group->omega().render());
      Sink sink(cfg.output);
      if (cfg.format == "csv") {
        og::write_growth_csv(sink.stream(), table, cfg.curve_epsilon, header);
      } else {
        sink.stream() << og::growth_json(table, cfg.curve_epsilon, header).dump(2) << "\n";
      }
      if (!table.complete()) {
        std::cerr << "element budget exhausted: complete to radius " << table.radius() << " of "
                  << cfg.radius << "\n";
      }
    } else if (*ball_cmd) {
      const auto table = og::enumerate_ball(group_of(cfg), cfg.shift, cfg.radius, ball_options(cfg));
      Sink sink(cfg.output);
      og::write_ball_jsonl(sink.stream(), table);
    } else if (*verify_cmd) {
      return run_verify(cfg, verify_omega->count() > 0, verify_radius->count() > 0);
    }
  } catch (const og::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
