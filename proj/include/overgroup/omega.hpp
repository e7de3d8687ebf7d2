#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace overgroup {

/// Raised for malformed textual input (omega sequences, words, vertices).
/// `position` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An eventually periodic sequence over {0,1,2}: `preperiod` followed by
/// `period` repeated forever. Always held in canonical form (primitive
/// period, shortest preperiod), so structural equality is sequence equality.
class OmegaSpec {
 public:
  /// Builds the canonical form of PRE followed by PER^inf.
  /// Throws std::invalid_argument for an empty period or a symbol outside {0,1,2}.
  OmegaSpec(std::string preperiod, std::string period);

  const std::string& preperiod() const noexcept { return preperiod_; }
  const std::string& period() const noexcept { return period_; }

  /// |preperiod| + |period|; the number of distinct shifts.
  std::size_t cycle_length() const noexcept { return preperiod_.size() + period_.size(); }

  /// ω_n with 1-based n. Throws std::out_of_range for n = 0.
  int symbol_at(std::uint64_t n) const;

  /// The canonical form of σ^k ω.
  OmegaSpec shift(std::uint64_t k) const;

  /// Least k' with shift(k') == shift(k); always k' < cycle_length().
  std::size_t shift_normalize(std::uint64_t k) const noexcept;

  /// Canonical `PRE(PER)` rendering.
  std::string render() const;

  friend bool operator==(const OmegaSpec&, const OmegaSpec&) = default;

 private:
  std::string preperiod_;
  std::string period_;
};

/// Parses `PRE(PER)`; whitespace is not allowed. Errors carry the offending position.
OmegaSpec parse_omega(std::string_view text);

enum class OmegaClassKind { Omega0, Omega1, Omega2 };

std::string_view to_string(OmegaClassKind kind) noexcept;

struct OmegaClass {
  OmegaClassKind kind;
  /// Least M such that every window of M consecutive symbols holds all three
  /// symbols (Omega0) or at least two (Omega1). Absent for Omega2.
  std::optional<std::size_t> star_window;
  /// True iff the whole sequence uses at most two distinct symbols.
  bool two_symbol;

  friend bool operator==(const OmegaClass&, const OmegaClass&) = default;
};

OmegaClass classify(const OmegaSpec& omega);

/// Least s with {ω_1..ω_s} = {0,1,2}, if the third symbol ever occurs.
std::optional<std::size_t> first_third_symbol_index(const OmegaSpec& omega);

/// Least t with ω_t != ω_1, if a second symbol ever occurs.
std::optional<std::size_t> first_second_symbol_index(const OmegaSpec& omega);

}  // namespace overgroup
