#include "overgroup/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace overgroup {

std::string to_string(BigCount value) {
  if (value == 0) return "0";
  std::string out;
  while (value) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

double to_double(BigCount value) noexcept { return static_cast<double>(value); }

namespace {

BigCount binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigCount out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

BigCount pow7(std::size_t k) {
  BigCount out = 1;
  for (std::size_t i = 0; i < k; ++i) out *= 7;
  return out;
}

void check_args(Rational delta, std::size_t k) {
  if (!(delta > Rational(0)) || !(delta < Rational(1))) {
    throw std::invalid_argument("ftilde: delta must lie in (0, 1)");
  }
  if (k < 1 || k > kMaxFtildeLength) throw std::invalid_argument("ftilde: k out of range");
}

}  // namespace

std::size_t ftilde_threshold(Rational delta, std::size_t k) {
  const Rational share = (Rational(1) - delta) * Rational(static_cast<std::int64_t>(k));
  // floor of a nonnegative rational, plus one
  return static_cast<std::size_t>(share.num / share.den) + 1;
}

BigCount count_ftilde(Rational delta, std::size_t k) {
  check_args(delta, k);
  const std::size_t cap = ftilde_threshold(delta, k) - 1;  // every letter at most `cap` times
  // ways[r]: words of length r over the letters placed so far, all within cap.
  std::vector<BigCount> ways(k + 1, 0);
  ways[0] = 1;
  for (int letter = 0; letter < 7; ++letter) {
    std::vector<BigCount> next(k + 1, 0);
    for (std::size_t r = 0; r <= k; ++r) {
      for (std::size_t t = 0; t <= std::min(cap, r); ++t) next[r] += binomial(r, t) * ways[r - t];
    }
    ways = std::move(next);
  }
  return pow7(k) - ways[k];
}

BigCount ftilde_union_bound(Rational delta, std::size_t k) {
  check_args(delta, k);
  const std::size_t m = ftilde_threshold(delta, k);
  return 7 * binomial(k, m) * pow7(k - m);
}

double lemma9_bound(double delta) {
  if (delta == 0.0) return 1.0;
  return std::pow(1.0 - delta, -1.0) * std::pow(delta / 6.0, -delta);
}

Lemma9Report lemma9_report(Rational delta, std::size_t k_max) {
  if (delta.to_double() >= 6.0 / std::exp(1.0)) throw std::invalid_argument("lemma9: delta must be < 6/e");
  if (k_max < 1 || k_max > kMaxFtildeLength) throw std::invalid_argument("lemma9: k_max out of range");
  Lemma9Report report;
  report.delta = delta;
  report.bound = lemma9_bound(delta.to_double());
  for (std::size_t k = 1; k <= k_max; ++k) {
    Lemma9Row row;
    row.k = k;
    row.count = count_ftilde(delta, k);
    const double inv = 1.0 / static_cast<double>(k);
    row.root = std::pow(to_double(row.count), inv);
    row.envelope_root = std::pow(to_double(ftilde_union_bound(delta, k)), inv);
    row.above_bound = row.root > report.bound;
    if (row.count > ftilde_union_bound(delta, k)) report.within_envelope = false;
    if (k > 4 && row.root >= report.rows.back().root) report.non_decreasing_at.push_back(k);
    report.rows.push_back(row);
  }
  return report;
}

double BoundCurves::log_lower_at(double n, double epsilon) {
  return n / std::pow(std::log(n), 2.0 + epsilon);
}

double BoundCurves::log_upper_at(double n) { return n * std::log(std::log(n)) / std::log(n); }

BoundCurves bound_curves(std::size_t n_max, double epsilon) {
  if (n_max < 3) throw std::invalid_argument("bound curves: n_max must be >= 3");
  if (!(epsilon > 0)) throw std::invalid_argument("bound curves: epsilon must be positive");
  BoundCurves out;
  out.epsilon = epsilon;
  const std::size_t count = n_max - 2;
  out.n.reserve(count);
  out.log_lower.reserve(count);
  out.log_upper.reserve(count);
  for (std::size_t n = 3; n <= n_max; ++n) {
    const double x = static_cast<double>(n);
    out.n.push_back(n);
    out.log_lower.push_back(BoundCurves::log_lower_at(x, epsilon));
    out.log_upper.push_back(BoundCurves::log_upper_at(x));
  }
  out.crossover = n_max + 1;
  for (std::size_t i = count; i-- > 0;) {
    if (!(out.log_lower[i] < out.log_upper[i])) break;
    out.crossover = out.n[i];
  }
  return out;
}

}  // namespace overgroup
