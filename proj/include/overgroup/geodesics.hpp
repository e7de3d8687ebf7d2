#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "overgroup/ball.hpp"
#include "overgroup/rational.hpp"

namespace overgroup {

/// True iff some spine letter occurs more than (1/2 - ε)n times in `word`.
bool has_dominant_letter(std::span<const Letter> word, Rational epsilon, std::size_t n);

struct GeodesicClassification {
  Rational epsilon;
  std::size_t n = 0;
  /// Every geodesic has a dominant spine letter.
  std::vector<ElementId> F;
  /// Some geodesic keeps every spine letter at most (1/2 - ε)n times.
  std::vector<ElementId> D;
};

/// Partitions the radius-n sphere. Requires 0 < ε < 1/2 and n <= table.radius().
GeodesicClassification classify_geodesics(const BallTable& table, Rational epsilon, std::size_t n);

/// Every geodesic word of `id` with no dominant spine letter (the D-witnesses).
std::vector<ReducedWord> balanced_geodesics(const BallTable& table, ElementId id, Rational epsilon);

struct Lemma8Result {
  std::vector<Letter> image;  // the word with all a's deleted
  Rational delta;             // 2ε + 3/(n-1)
  bool length_ok = false;     // (n-1)/2 <= |image| <= (n+1)/2
  bool inequality_ok = false; // some letter occurs > (1 - δ)|image| times
  bool ok() const noexcept { return length_ok && inequality_ok; }
};

/// Deletes the a's of a reduced word W with |W| >= 2. Throws std::invalid_argument otherwise.
Lemma8Result lemma8_map(const ReducedWord& word, Rational epsilon);

struct Lemma8Violation {
  std::size_t n;
  ElementId id;
  std::string word;
};

struct Lemma8Report {
  Rational epsilon;
  std::size_t max_n = 0;
  std::size_t words_checked = 0;
  std::vector<std::size_t> f_sizes;  // |F^ε(n)| for n = 2..max_n
  std::vector<Lemma8Violation> violations;
};

/// Applies lemma8_map to every geodesic word of every F^ε(n) element, 2 <= n <= max_n.
Lemma8Report lemma8_check(const BallTable& table, Rational epsilon, std::size_t max_n);

struct LevelData {
  std::vector<ReducedWord> words;  // W_{i1..ij} in lexicographic order of i1..ij
  std::size_t contractions = 0;    // α_j
  XyzProfile profile;              // x_j, y_j, z_j
  std::size_t total_length() const noexcept;
};

struct LevelSectionTrace {
  std::size_t s = 0;
  ReducedWord input;
  XyzProfile profile0;         // x_0, y_0, z_0
  std::vector<LevelData> levels;  // levels[j-1] holds level j, j = 1..s

  /// Σ_{i<=j<=k} α_j.
  std::size_t contraction_sum(std::size_t first, std::size_t last) const;
  /// The profile component that counts trivial left coordinates for `symbol`, at level j.
  std::size_t profile(std::size_t level, int symbol) const;
};

class NotLevelStabilizer : public std::domain_error {
 public:
  explicit NotLevelStabilizer(std::size_t s)
      : std::domain_error("element does not stabilize level " + std::to_string(s)), level(s) {}
  std::size_t level;
};

/// Iterates the wreath substitution and reduction s times.
LevelSectionTrace level_section_trace(const Element& w, std::size_t s);

bool stabilizes_level(const Element& g, std::size_t s);

struct Lemma11Violation {
  ElementId id;
  std::string word;
  std::size_t lhs;
  double rhs;
};

enum class PartBStatus { Checked, PreconditionUnmet, BallIncomplete };

std::string_view to_string(PartBStatus status) noexcept;

struct Lemma11Report {
  Rational epsilon;
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t elements_in_stabilizer = 0;
  std::size_t words_checked_a = 0;
  std::vector<Lemma11Violation> violations_a;
  PartBStatus part_b = PartBStatus::PreconditionUnmet;
  double bound_b = 0;  // (1 - ε/5)n + 2^s - 1
  std::size_t words_checked_b = 0;
  std::vector<Lemma11Violation> violations_b;
};

/// Part A checks the unconditional sum-of-sections inequality on every
/// geodesic word of every ball element stabilizing level s. Part B, when
/// nε > 5/2, checks the headline bound on every D-witness of the radius-n
/// sphere inside the level-s stabilizer. `s` must be the first index at which
/// the third symbol of the table's shifted sequence appears.
Lemma11Report lemma11_check(const BallTable& table, Rational epsilon, std::size_t s);

}  // namespace overgroup
