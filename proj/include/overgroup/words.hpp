#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace overgroup {

/// A letter of a raw word. Spine letters carry their (β_b, β_c, β_x) bit
/// vector as value (b = 1, c = 2, x = 4); `one` is the spine identity, which
/// may appear in raw input but never in a reduced word.
enum class Letter : std::uint8_t {
  one = 0,
  b = 1,
  c = 2,
  d = 3,
  x = 4,
  bt = 5,  // b̃ = xb
  ct = 6,  // c̃ = xc
  dt = 7,  // d̃ = xd
  a = 8,
};

/// Generators in canonical order a < b < c < d < x < b̃ < c̃ < d̃.
inline constexpr std::array<Letter, 8> kGenerators{Letter::a,  Letter::b,  Letter::c,  Letter::d,
                                                   Letter::x,  Letter::bt, Letter::ct, Letter::dt};

/// The seven nonidentity spine letters in canonical order.
inline constexpr std::array<Letter, 7> kSpineLetters{Letter::b,  Letter::c,  Letter::d, Letter::x,
                                                     Letter::bt, Letter::ct, Letter::dt};

/// Element of the order-8 elementary abelian spine group {1,b,c,d,x,b̃,c̃,d̃}.
struct SpineLetter {
  std::uint8_t bits = 0;

  constexpr bool is_identity() const noexcept { return bits == 0; }
  constexpr Letter letter() const noexcept { return static_cast<Letter>(bits); }
  friend constexpr bool operator==(SpineLetter, SpineLetter) = default;
};

constexpr bool is_spine(Letter l) noexcept { return l != Letter::a; }

constexpr SpineLetter spine_of(Letter l) noexcept {
  return SpineLetter{static_cast<std::uint8_t>(static_cast<std::uint8_t>(l) & 7u)};
}

/// Product in the spine group: bitwise XOR.
constexpr SpineLetter spine_mul(SpineLetter k1, SpineLetter k2) noexcept {
  return SpineLetter{static_cast<std::uint8_t>(k1.bits ^ k2.bits)};
}

/// Whether spine letter `k` acts as P at the vertex selected by a level
/// whose ω-symbol is `symbol` (the left coordinate in the wreath recursion).
constexpr bool spine_label(SpineLetter k, int symbol) noexcept {
  const unsigned bb = k.bits & 1u, bc = (k.bits >> 1) & 1u, bx = (k.bits >> 2) & 1u;
  return ((bb * (symbol != 2 ? 1u : 0u)) + (bc * (symbol != 1 ? 1u : 0u)) + bx) % 2u == 1u;
}

/// ASCII name: a b c d x B C D, and 1 for the spine identity.
char letter_char(Letter l) noexcept;

/// Position in canonical generator order (a=0 .. d̃=7). Undefined for `one`.
constexpr std::size_t generator_index(Letter l) noexcept {
  return l == Letter::a ? 0 : static_cast<std::size_t>(l);
}

/// Parses a raw word from `a b c d x B C D 1`; whitespace is ignored.
std::vector<Letter> parse_letters(std::string_view text);

/// Renders letters separated by single spaces.
std::string render_letters(std::span<const Letter> letters);

/// A word of the form (a) * a * ... * a * (a) with no identity spine letters.
class ReducedWord {
 public:
  ReducedWord() = default;

  /// Wraps letters already known to be reduced. Throws std::invalid_argument otherwise.
  explicit ReducedWord(std::vector<Letter> letters);

  static ReducedWord single(Letter l) { return ReducedWord(std::vector<Letter>{l}); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t a_count() const noexcept;
  std::size_t spine_count() const noexcept { return length() - a_count(); }
  bool leading_a() const noexcept { return !empty() && letters_.front() == Letter::a; }
  bool trailing_a() const noexcept { return !empty() && letters_.back() == Letter::a; }
  std::vector<SpineLetter> spine() const;

  /// The reverse word; reduced whenever this one is.
  ReducedWord reversed() const;

  std::string render() const { return render_letters(letters_); }

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
  friend auto operator<=>(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<Letter> letters_;
};

struct ReductionReceipt {
  ReducedWord word;
  /// Number of simple contractions applied by the left-to-right stack pass.
  std::size_t contractions = 0;
};

/// Reduces with a single stack pass: a·a → ε, k1·k2 → k1⊕k2 (one contraction,
/// including the deletion when the product is the identity); a bare identity
/// letter in the input is deleted as one contraction.
ReductionReceipt reduce(std::span<const Letter> raw);

/// Per-letter counts indexed by canonical generator order.
struct LetterCounts {
  std::array<std::size_t, 8> counts{};

  std::size_t operator[](Letter l) const noexcept { return counts[generator_index(l)]; }
  std::size_t total() const noexcept;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
};

LetterCounts letter_counts(std::span<const Letter> word);
inline LetterCounts letter_counts(const ReducedWord& w) { return letter_counts(w.letters()); }

/// Number of spine letters whose left coordinate is trivial in the wreath
/// row for `symbol`: symbol 0 counts d, b̃, c̃; 1 counts c, b̃, d̃; 2 counts b, c̃, d̃.
std::size_t trivial_row_count(std::span<const Letter> word, int symbol);

struct XyzProfile {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;
  friend bool operator==(const XyzProfile&, const XyzProfile&) = default;
};

XyzProfile xyz_profile(std::span<const Letter> word);
inline XyzProfile xyz_profile(const ReducedWord& w) { return xyz_profile(w.letters()); }

struct WordHash {
  std::size_t operator()(std::span<const Letter> w) const noexcept;
  std::size_t operator()(const ReducedWord& w) const noexcept { return (*this)(w.letters()); }
};

}  // namespace overgroup
