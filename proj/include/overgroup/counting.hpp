#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "overgroup/rational.hpp"

namespace overgroup {

using BigCount = unsigned __int128;

std::string to_string(BigCount value);
double to_double(BigCount value) noexcept;

/// Largest k accepted by count_ftilde (7^k must fit in 128 bits).
inline constexpr std::size_t kMaxFtildeLength = 45;

/// Number of length-k words over the 7 spine letters in which some letter
/// occurs more than (1 - δ)k times. Multinomial DP, no enumeration.
/// Requires 0 < δ < 1 and 1 <= k <= kMaxFtildeLength.
BigCount count_ftilde(Rational delta, std::size_t k);

/// Least count m with m > (1 - δ)k.
std::size_t ftilde_threshold(Rational delta, std::size_t k);

/// (1 - δ)^{-1} (δ/6)^{-δ}; equals 1 at δ = 0.
double lemma9_bound(double delta);

/// Union bound 7·C(k,m)·7^{k-m} on |F̃^δ(k)| with m = ftilde_threshold(δ, k).
BigCount ftilde_union_bound(Rational delta, std::size_t k);

struct Lemma9Row {
  std::size_t k = 0;
  BigCount count = 0;
  double root = 0;           // count^{1/k}
  double envelope_root = 0;  // union bound^{1/k}
  bool above_bound = false;  // root > limsup bound (allowed at finite k)
};

struct Lemma9Report {
  Rational delta;
  double bound = 0;
  std::vector<Lemma9Row> rows;
  /// Rows k >= 4 whose root exceeds the previous row's.
  std::vector<std::size_t> non_decreasing_at;
  bool within_envelope = true;
};

/// Throws std::invalid_argument unless 0 < δ < min(1, 6/e) and 1 <= k_max <= kMaxFtildeLength.
Lemma9Report lemma9_report(Rational delta, std::size_t k_max);

/// Reference curves, in natural logs, for n >= 3.
struct BoundCurves {
  double epsilon = 0;
  std::vector<std::size_t> n;
  std::vector<double> log_lower;  // n / (ln n)^{2+ε}
  std::vector<double> log_upper;  // n ln ln n / ln n
  /// Least sampled n from which lower < upper holds for every later sample.
  std::size_t crossover = 0;

  static double log_lower_at(double n, double epsilon);
  static double log_upper_at(double n);
};

/// Samples every n in [3, n_max]. Throws std::invalid_argument if n_max < 3 or ε <= 0.
BoundCurves bound_curves(std::size_t n_max, double epsilon);

}  // namespace overgroup
