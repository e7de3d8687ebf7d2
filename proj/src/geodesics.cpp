#include "overgroup/geodesics.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "overgroup/omega.hpp"

namespace overgroup {

namespace {

// Largest count c with c <= (1/2 - ε)n, or -1 if none.
std::int64_t balanced_cap(Rational epsilon, std::size_t n) {
  const Rational cap = (Rational(1, 2) - epsilon) * Rational(static_cast<std::int64_t>(n));
  if (cap.num < 0) return -1;
  return cap.num / cap.den;
}

void check_epsilon(Rational epsilon) {
  if (!(epsilon > Rational(0)) || !(epsilon < Rational(1, 2))) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  }
}

}  // namespace

bool has_dominant_letter(std::span<const Letter> word, Rational epsilon, std::size_t n) {
  const std::int64_t cap = balanced_cap(epsilon, n);
  const LetterCounts counts = letter_counts(word);
  for (Letter l : kSpineLetters) {
    if (static_cast<std::int64_t>(counts[l]) > cap) return true;
  }
  return false;
}

namespace {

// Depth-first over the predecessor DAG, building words from the back and
// pruning as soon as a spine letter exceeds `cap`.
void walk_balanced(const BallTable& table, ElementId id, std::int64_t cap, bool stop_at_first,
                   const std::function<void(std::span<const Letter>)>& visit) {
  const std::size_t len = table.entry(id).length;
  std::vector<Letter> buffer(len);
  std::array<std::int64_t, 8> counts{};
  bool done = false;
  std::function<void(ElementId, std::size_t)> walk = [&](ElementId cur, std::size_t pos) {
    if (done) return;
    if (pos == 0) {
      visit(buffer);
      if (stop_at_first) done = true;
      return;
    }
    for (const GeodesicLink& link : table.entry(cur).links) {
      const std::size_t g = generator_index(link.generator);
      if (link.generator != Letter::a && counts[g] + 1 > cap) continue;
      ++counts[g];
      buffer[pos - 1] = link.generator;
      walk(link.pred, pos - 1);
      --counts[g];
      if (done) return;
    }
  };
  walk(id, len);
}

}  // namespace

GeodesicClassification classify_geodesics(const BallTable& table, Rational epsilon, std::size_t n) {
  check_epsilon(epsilon);
  GeodesicClassification out;
  out.epsilon = epsilon;
  out.n = n;
  const std::int64_t cap = balanced_cap(epsilon, n);
  auto [first, last] = table.sphere(n);
  for (ElementId id = first; id < last; ++id) {
    bool witness = false;
    walk_balanced(table, id, cap, true, [&](std::span<const Letter>) { witness = true; });
    (witness ? out.D : out.F).push_back(id);
  }
  return out;
}

std::vector<ReducedWord> balanced_geodesics(const BallTable& table, ElementId id, Rational epsilon) {
  check_epsilon(epsilon);
  std::vector<ReducedWord> out;
  const std::int64_t cap = balanced_cap(epsilon, table.entry(id).length);
  walk_balanced(table, id, cap, false, [&](std::span<const Letter> w) {
    out.emplace_back(std::vector<Letter>(w.begin(), w.end()));
  });
  return out;
}

Lemma8Result lemma8_map(const ReducedWord& word, Rational epsilon) {
  const std::size_t n = word.length();
  if (n < 2) throw std::invalid_argument("lemma8: word length must be at least 2");
  Lemma8Result out;
  for (Letter l : word.letters()) {
    if (l != Letter::a) out.image.push_back(l);
  }
  out.delta = Rational(2) * epsilon + Rational(3, static_cast<std::int64_t>(n - 1));
  const std::size_t m = out.image.size();
  out.length_ok = 2 * m + 1 >= n && 2 * m <= n + 1;
  const Rational share = (Rational(1) - out.delta) * Rational(static_cast<std::int64_t>(m));
  const LetterCounts counts = letter_counts(out.image);
  for (Letter l : kSpineLetters) {
    if (Rational(static_cast<std::int64_t>(counts[l])) > share) out.inequality_ok = true;
  }
  return out;
}

Lemma8Report lemma8_check(const BallTable& table, Rational epsilon, std::size_t max_n) {
  Lemma8Report report;
  report.epsilon = epsilon;
  report.max_n = max_n;
  for (std::size_t n = 2; n <= max_n; ++n) {
    const GeodesicClassification cls = classify_geodesics(table, epsilon, n);
    report.f_sizes.push_back(cls.F.size());
    for (ElementId id : cls.F) {
      table.for_each_geodesic(id, SIZE_MAX, [&](std::span<const Letter> w) {
        ++report.words_checked;
        const ReducedWord word(std::vector<Letter>(w.begin(), w.end()));
        if (!lemma8_map(word, epsilon).ok()) report.violations.push_back({n, id, word.render()});
      });
    }
  }
  return report;
}

std::size_t LevelData::total_length() const noexcept {
  std::size_t sum = 0;
  for (const auto& w : words) sum += w.length();
  return sum;
}

std::size_t LevelSectionTrace::contraction_sum(std::size_t first, std::size_t last) const {
  std::size_t sum = 0;
  for (std::size_t j = first; j <= last && j >= 1 && j <= levels.size(); ++j) sum += levels[j - 1].contractions;
  return sum;
}

std::size_t LevelSectionTrace::profile(std::size_t level, int symbol) const {
  const XyzProfile& p = level == 0 ? profile0 : levels.at(level - 1).profile;
  return symbol == 0 ? p.x : symbol == 1 ? p.y : p.z;
}

bool stabilizes_level(const Element& g, std::size_t s) { return portrait(g, s).all_identity(); }

LevelSectionTrace level_section_trace(const Element& w, std::size_t s) {
  if (!stabilizes_level(w, s)) throw NotLevelStabilizer(s);
  const Overgroup& group = *w.group();
  LevelSectionTrace trace;
  trace.s = s;
  trace.input = w.word();
  trace.profile0 = xyz_profile(w.word());

  std::vector<ReducedWord> current{w.word()};
  std::size_t shift = w.shift();
  for (std::size_t j = 1; j <= s; ++j) {
    LevelData level;
    for (const ReducedWord& word : current) {
      RawSections raw = substitute(word.letters(), group, shift);
      ReductionReceipt l = reduce(raw.left);
      ReductionReceipt r = reduce(raw.right);
      level.contractions += l.contractions + r.contractions;
      level.words.push_back(std::move(l.word));
      level.words.push_back(std::move(r.word));
    }
    for (const ReducedWord& word : level.words) {
      const XyzProfile p = xyz_profile(word);
      level.profile.x += p.x;
      level.profile.y += p.y;
      level.profile.z += p.z;
    }
    current = level.words;
    trace.levels.push_back(std::move(level));
    shift = group.next_shift(shift);
  }
  return trace;
}

std::string_view to_string(PartBStatus status) noexcept {
  switch (status) {
    case PartBStatus::Checked: return "checked";
    case PartBStatus::PreconditionUnmet: return "precondition unmet, skipped";
    case PartBStatus::BallIncomplete: return "not attempted at full scale";
  }
  return "?";
}

Lemma11Report lemma11_check(const BallTable& table, Rational epsilon, std::size_t s) {
  check_epsilon(epsilon);
  const Overgroup& group = *table.group();
  const OmegaSpec shifted = group.omega().shift(table.shift());
  const auto third = first_third_symbol_index(shifted);
  if (!third || *third != s) {
    throw std::invalid_argument("lemma11: s must be the first index of the third symbol");
  }
  Lemma11Report report;
  report.epsilon = epsilon;
  report.n = table.radius();
  report.s = s;
  report.t = *first_second_symbol_index(shifted);
  const int u = shifted.symbol_at(1);
  const int v = shifted.symbol_at(report.t);
  const int w = shifted.symbol_at(s);
  const std::int64_t branch_slack = (std::int64_t{1} << s) - 1;

  auto unconditional_rhs = [&](const LevelSectionTrace& tr, std::size_t n) {
    return static_cast<std::int64_t>(n) + branch_slack - static_cast<std::int64_t>(tr.profile(0, u)) -
           static_cast<std::int64_t>(tr.profile(report.t - 1, v)) -
           static_cast<std::int64_t>(tr.profile(s - 1, w)) -
           static_cast<std::int64_t>(tr.contraction_sum(1, s - 1));
  };

  for (ElementId id = 0; id < table.size(); ++id) {
    const Element g = table.element(id);
    if (!stabilizes_level(g, s)) continue;
    ++report.elements_in_stabilizer;
    table.for_each_geodesic(id, SIZE_MAX, [&](std::span<const Letter> letters) {
      ++report.words_checked_a;
      const Element word(table.group(), ReducedWord(std::vector<Letter>(letters.begin(), letters.end())),
                         table.shift());
      const LevelSectionTrace tr = level_section_trace(word, s);
      const auto lhs = static_cast<std::int64_t>(tr.levels.back().total_length());
      const std::int64_t rhs = unconditional_rhs(tr, letters.size());
      if (lhs > rhs) {
        report.violations_a.push_back(
            {id, word.word().render(), static_cast<std::size_t>(lhs), static_cast<double>(rhs)});
      }
    });
  }

  // Part B targets the requested radius even when the ball stopped short of it.
  const std::size_t target = std::max(report.n, table.requested_radius());
  const Rational bound = (Rational(1) - epsilon * Rational(1, 5)) * Rational(static_cast<std::int64_t>(target)) +
                         Rational(branch_slack);
  report.bound_b = bound.to_double();
  if (!table.complete()) {
    report.part_b = PartBStatus::BallIncomplete;
  } else if (!(epsilon * Rational(static_cast<std::int64_t>(report.n)) > Rational(5, 2))) {
    report.part_b = PartBStatus::PreconditionUnmet;
  } else {
    report.part_b = PartBStatus::Checked;
    auto [first, last] = table.sphere(report.n);
    for (ElementId id = first; id < last; ++id) {
      const Element g = table.element(id);
      if (!stabilizes_level(g, s)) continue;
      for (const ReducedWord& witness : balanced_geodesics(table, id, epsilon)) {
        ++report.words_checked_b;
        const LevelSectionTrace tr = level_section_trace(Element(table.group(), witness, table.shift()), s);
        const std::size_t lhs = tr.levels.back().total_length();
        if (Rational(static_cast<std::int64_t>(lhs)) > bound) {
          report.violations_b.push_back({id, witness.render(), lhs, report.bound_b});
        }
      }
    }
  }
  return report;
}

}  // namespace overgroup
