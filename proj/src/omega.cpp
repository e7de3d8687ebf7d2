#include "overgroup/omega.hpp"

#include <algorithm>
#include <array>

namespace overgroup {

namespace {

void check_symbols(const std::string& s, std::size_t offset) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '2') {
      throw ParseError(std::string("illegal symbol '") + s[i] + "'", offset + i);
    }
  }
}

// Shortest root r of s with s = r^k.
std::string primitive_root(const std::string& s) {
  const std::size_t n = s.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = s[i] == s[i - d];
    if (ok) return s.substr(0, d);
  }
  return s;
}

}  // namespace

OmegaSpec::OmegaSpec(std::string preperiod, std::string period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw std::invalid_argument("omega: empty period");
  check_symbols(preperiod_, 0);
  check_symbols(period_, preperiod_.size() + 1);

  period_ = primitive_root(period_);
  // Absorb preperiod symbols that already agree with the periodic tail.
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

int OmegaSpec::symbol_at(std::uint64_t n) const {
  if (n == 0) throw std::out_of_range("omega: symbol index is 1-based");
  const std::uint64_t i = n - 1;
  if (i < preperiod_.size()) return preperiod_[i] - '0';
  return period_[(i - preperiod_.size()) % period_.size()] - '0';
}

OmegaSpec OmegaSpec::shift(std::uint64_t k) const {
  if (k <= preperiod_.size()) return OmegaSpec(preperiod_.substr(k), period_);
  const std::size_t r = (k - preperiod_.size()) % period_.size();
  return OmegaSpec("", period_.substr(r) + period_.substr(0, r));
}

std::size_t OmegaSpec::shift_normalize(std::uint64_t k) const noexcept {
  if (k < preperiod_.size()) return static_cast<std::size_t>(k);
  return preperiod_.size() + (k - preperiod_.size()) % period_.size();
}

std::string OmegaSpec::render() const { return preperiod_ + "(" + period_ + ")"; }

OmegaSpec parse_omega(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos) throw ParseError("omega: expected '('", text.size());
  for (std::size_t i = 0; i < open; ++i) {
    if (text[i] < '0' || text[i] > '2') {
      throw ParseError(std::string("omega: illegal symbol '") + text[i] + "'", i);
    }
  }
  const auto close = text.find(')', open + 1);
  if (close == std::string_view::npos) throw ParseError("omega: expected ')'", text.size());
  if (close == open + 1) throw ParseError("omega: empty period", close);
  for (std::size_t i = open + 1; i < close; ++i) {
    if (text[i] < '0' || text[i] > '2') {
      throw ParseError(std::string("omega: illegal symbol '") + text[i] + "'", i);
    }
  }
  if (close + 1 != text.size()) throw ParseError("omega: trailing characters", close + 1);
  return OmegaSpec(std::string(text.substr(0, open)),
                   std::string(text.substr(open + 1, close - open - 1)));
}

std::string_view to_string(OmegaClassKind kind) noexcept {
  switch (kind) {
    case OmegaClassKind::Omega0: return "Omega0";
    case OmegaClassKind::Omega1: return "Omega1";
    case OmegaClassKind::Omega2: return "Omega2";
  }
  return "?";
}

namespace {

std::size_t distinct_symbols(std::string_view s) {
  std::array<bool, 3> seen{};
  for (char ch : s) seen[ch - '0'] = true;
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
}

}  // namespace

OmegaClass classify(const OmegaSpec& omega) {
  // Symbols occurring infinitely often are exactly those of the period.
  const std::size_t tail = distinct_symbols(omega.period());
  OmegaClass out{};
  out.two_symbol = distinct_symbols(omega.preperiod() + omega.period()) <= 2;
  if (tail == 1) {
    out.kind = OmegaClassKind::Omega2;
    return out;
  }
  out.kind = tail == 3 ? OmegaClassKind::Omega0 : OmegaClassKind::Omega1;

  // Windows starting past cycle_length() repeat earlier ones.
  const std::size_t need = tail;
  std::size_t worst = 0;
  for (std::size_t k = 1; k <= omega.cycle_length(); ++k) {
    std::array<bool, 3> seen{};
    std::size_t count = 0;
    std::size_t len = 0;
    while (count < need) {
      const int sym = omega.symbol_at(k + len);
      ++len;
      if (!seen[sym]) {
        seen[sym] = true;
        ++count;
      }
    }
    worst = std::max(worst, len);
  }
  out.star_window = worst;
  return out;
}

namespace {

std::optional<std::size_t> first_index_with(const OmegaSpec& omega, std::size_t need) {
  std::array<bool, 3> seen{};
  std::size_t count = 0;
  const std::size_t horizon = omega.cycle_length();
  for (std::size_t n = 1; n <= horizon; ++n) {
    const int sym = omega.symbol_at(n);
    if (!seen[sym]) {
      seen[sym] = true;
      if (++count == need) return n;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::size_t> first_third_symbol_index(const OmegaSpec& omega) {
  return first_index_with(omega, 3);
}

std::optional<std::size_t> first_second_symbol_index(const OmegaSpec& omega) {
  return first_index_with(omega, 2);
}

}  // namespace overgroup
