#include "overgroup/checks.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "overgroup/omega.hpp"

namespace overgroup {

namespace {

// Spine labels straight from the sequence definitions of b, c, d and x.
bool reference_label(Letter l, int symbol) {
  const bool b = symbol == 0 || symbol == 1;
  const bool c = symbol == 0 || symbol == 2;
  const bool d = symbol == 1 || symbol == 2;
  switch (l) {
    case Letter::b: return b;
    case Letter::c: return c;
    case Letter::d: return d;
    case Letter::x: return true;
    case Letter::bt: return !b;
    case Letter::ct: return !c;
    case Letter::dt: return !d;
    default: return false;
  }
}

void flip(std::string& v, std::size_t i) { v[i] = v[i] == '0' ? '1' : '0'; }

}  // namespace

std::string reference_act(std::span<const Letter> word, const Overgroup& group, std::size_t shift,
                          std::string_view vertex) {
  std::string v(vertex);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const Letter l = *it;
    if (l == Letter::one) continue;
    if (l == Letter::a) {
      if (!v.empty()) flip(v, 0);
      continue;
    }
    // v = 1^j 0 u: the letter acts at vertex 1^j 0 with its level-(j+1) label.
    const std::size_t j = v.find('0');
    if (j == std::string::npos || j + 1 >= v.size()) continue;
    if (reference_label(l, group.symbol(shift, j + 1))) flip(v, j + 1);
  }
  return v;
}

std::vector<ClaimResult> eq1_check() {
  struct Product {
    const char* lhs;
    const char* rhs;
    const char* result;
  };
  // Listed in the order of the simple contractions.
  static constexpr std::array<Product, 21> products{{
      {"b", "c", "d"}, {"c", "d", "b"}, {"d", "b", "c"},
      {"B", "C", "d"}, {"C", "D", "b"}, {"D", "B", "c"},
      {"b", "C", "D"}, {"c", "D", "B"}, {"d", "B", "C"},
      {"B", "c", "D"}, {"C", "d", "B"}, {"D", "b", "C"},
      {"b", "B", "x"}, {"c", "C", "x"}, {"d", "D", "x"},
      {"b", "x", "B"}, {"c", "x", "C"}, {"d", "x", "D"},
      {"B", "x", "b"}, {"C", "x", "c"}, {"D", "x", "d"},
  }};
  std::vector<ClaimResult> out;
  for (const auto& p : products) {
    const Letter l = parse_letters(p.lhs).front();
    const Letter r = parse_letters(p.rhs).front();
    const Letter expected = parse_letters(p.result).front();
    const bool forward = spine_mul(spine_of(l), spine_of(r)).letter() == expected;
    const bool backward = spine_mul(spine_of(r), spine_of(l)).letter() == expected;
    out.push_back({std::string(p.lhs) + p.rhs + " = " + p.rhs + p.lhs + " = " + p.result, forward && backward});
  }
  for (Letter l : kGenerators) {
    const std::vector<Letter> sq{l, l};
    const ReductionReceipt r = reduce(sq);
    out.push_back({std::string(1, letter_char(l)) + "^2 = 1", r.word.empty() && r.contractions == 1});
  }
  return out;
}

Eq2Report eq2_check(const GroupPtr& group, std::size_t shift, std::size_t depth) {
  // Left coordinate of each spine generator per row; true means a, false means 1.
  // Columns: b c d x B C D.
  static constexpr std::array<std::array<bool, 7>, 3> rows{{
      {true, true, false, true, false, false, true},
      {true, false, true, true, false, true, false},
      {false, true, true, true, true, false, false},
  }};
  Eq2Report report;
  report.omega = group->omega().render();
  const int symbol = group->symbol(shift, 1);
  const std::size_t child = group->next_shift(shift);

  for (Letter l : kGenerators) {
    const std::string name(1, letter_char(l));
    const Element g = generator(l, group, shift);
    const WreathDecomposition w = decompose(g);
    if (l == Letter::a) {
      if (!w.top_swap || !w.left.word().empty() || !w.right.word().empty()) {
        report.mismatches.push_back({name, "a must be a bare root swap"});
      }
    } else {
      const bool left_is_a = rows[symbol][static_cast<std::size_t>(l) - 1];
      const ReducedWord expected_left = left_is_a ? ReducedWord::single(Letter::a) : ReducedWord{};
      if (w.top_swap) report.mismatches.push_back({name, "spine generator swaps the root"});
      if (w.left.word() != expected_left || w.left.shift() != child) {
        report.mismatches.push_back({name, "left coordinate " + w.left.word().render()});
      }
      if (w.right.word() != ReducedWord::single(l) || w.right.shift() != child) {
        report.mismatches.push_back({name, "right coordinate " + w.right.word().render()});
      }
    }

    const std::vector<Letter> word{l};
    for (std::size_t len = 0; len <= depth; ++len) {
      for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
        std::string v(len, '0');
        for (std::size_t i = 0; i < len; ++i) {
          if ((bits >> (len - 1 - i)) & 1u) v[i] = '1';
        }
        ++report.vertices_checked;
        const std::string got = act(g, v);
        const std::string want = reference_act(word, *group, shift, v);
        if (got != want) report.mismatches.push_back({name, "act(" + v + ") = " + got + ", expected " + want});
      }
    }
  }
  return report;
}

std::vector<ClaimResult> lemma4_check() {
  std::vector<ClaimResult> out;
  auto g01 = Overgroup::make(parse_omega("(01)"));
  out.push_back({"(01): b = x", equal(generator(Letter::b, g01), generator(Letter::x, g01))});

  auto g0 = Overgroup::make(parse_omega("(0)"));
  auto gen = [&](Letter l) { return generator(l, g0); };
  out.push_back({"(0): d = 1", is_identity(gen(Letter::d))});
  out.push_back({"(0): b = x", equal(gen(Letter::b), gen(Letter::x))});
  out.push_back({"(0): c = x", equal(gen(Letter::c), gen(Letter::x))});
  out.push_back({"(0): b = c", equal(gen(Letter::b), gen(Letter::c))});
  out.push_back({"(0): B = 1", is_identity(gen(Letter::bt))});
  out.push_back({"(0): C = 1", is_identity(gen(Letter::ct))});
  out.push_back({"(0): D = x", equal(gen(Letter::dt), gen(Letter::x))});
  return out;
}

Lemma3Report lemma3_check(const BallTable& ball, const BallTable& shifted_ball) {
  const GroupPtr& group = ball.group();
  if (shifted_ball.shift() != group->next_shift(ball.shift()) ||
      !(shifted_ball.group()->omega() == group->omega())) {
    throw ContextMismatch();
  }
  Lemma3Report report;
  report.omega = group->omega().shift(ball.shift()).render();
  report.n = ball.radius();
  report.shifted_radius = shifted_ball.radius();
  report.gamma = ball.gamma();
  report.shifted_gamma = shifted_ball.gamma();
  report.complete = ball.complete() && shifted_ball.complete();

  for (ElementId id = 0; id < ball.size(); ++id) {
    const BallEntry& e = ball.entry(id);
    if (e.word.a_count() % 2 != 0) continue;
    ++report.stabilizer_elements;
    const auto [left, right] = sections(ball.element(id));
    for (const Element* part : {&left, &right}) {
      const auto found = shifted_ball.find(*part);
      if (!found) {
        report.violations.push_back({id, e.word.render(), e.length,
                                     "section " + part->word().render() + " outside the shifted ball"});
        continue;
      }
      const std::size_t len = shifted_ball.entry(*found).length;
      if (2 * len > e.length + 1) {
        report.violations.push_back({id, e.word.render(), e.length,
                                     "section " + part->word().render() + " has length " + std::to_string(len)});
      }
    }
  }

  for (std::size_t m = 0; m < report.gamma.size(); ++m) {
    const std::size_t half = (m + 3) / 2;  // ⌈(m+2)/2⌉
    if (half >= report.shifted_gamma.size()) continue;
    const unsigned __int128 rhs = static_cast<unsigned __int128>(2) * report.shifted_gamma[half] *
                                  report.shifted_gamma[half];
    if (report.gamma[m] > rhs) report.gamma_violations.push_back(m);
  }
  return report;
}

Lemma3Report lemma3_check(const GroupPtr& group, std::size_t n, const BallOptions& options) {
  const BallTable ball = enumerate_ball(group, 0, n, options);
  const BallTable shifted = enumerate_ball(group, group->next_shift(0), (n + 3) / 2, options);
  return lemma3_check(ball, shifted);
}

Prop6Report prop6_check(const GroupPtr& group, std::size_t n, const BallOptions& options) {
  const OmegaSpec& omega = group->omega();
  if (classify(omega).kind != OmegaClassKind::Omega2) {
    throw std::invalid_argument("prop6: omega must be eventually constant");
  }
  Prop6Report report;
  report.omega = omega.render();
  report.collapse_shift = omega.preperiod().size();
  const std::size_t p = report.collapse_shift;

  std::vector<Element> distinct{generator(Letter::a, group, p)};
  for (Letter l : kSpineLetters) {
    const Element g = generator(l, group, p);
    if (is_identity(g)) continue;
    bool seen = false;
    for (const Element& h : distinct) seen = seen || equal(g, h);
    if (!seen) distinct.push_back(g);
  }
  for (const Element& g : distinct) report.collapsed.push_back(g.word().render());
  report.collapse_ok = distinct.size() == 2 && equal(distinct[1], generator(Letter::x, group, p));

  const BallTable shifted = enumerate_ball(group, p, n, options);
  report.shifted_gamma = shifted.gamma();
  report.dihedral_ok = shifted.complete();
  for (std::size_t m = 0; m < report.shifted_gamma.size(); ++m) {
    report.dihedral_ok = report.dihedral_ok && report.shifted_gamma[m] == 2 * m + 1;
  }

  const BallTable base = p == 0 ? shifted : enumerate_ball(group, 0, n, options);
  report.gamma = base.gamma();
  report.complete = shifted.complete() && base.complete();
  for (std::size_t m = 2; m < report.gamma.size(); ++m) {
    report.degree_estimates.push_back(std::log(static_cast<double>(report.gamma[m])) /
                                      std::log(static_cast<double>(m)));
  }
  return report;
}

}  // namespace overgroup
