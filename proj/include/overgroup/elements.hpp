#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "overgroup/omega.hpp"
#include "overgroup/words.hpp"

namespace overgroup {

class OddParity : public std::domain_error {
 public:
  OddParity() : std::domain_error("element is not in the first-level stabilizer (odd a-count)") {}
};

class ContextMismatch : public std::invalid_argument {
 public:
  ContextMismatch() : std::invalid_argument("elements belong to different groups or shifts") {}
};

/// Shared context for all groups G̃_{σ^k ω}, k >= 0, over one base ω.
/// Holds the word-problem memo tables; safe for concurrent use.
class Overgroup {
 public:
  explicit Overgroup(OmegaSpec omega);

  static std::shared_ptr<const Overgroup> make(OmegaSpec omega) {
    return std::make_shared<const Overgroup>(std::move(omega));
  }

  const OmegaSpec& omega() const noexcept { return omega_; }
  std::size_t normalize(std::uint64_t shift) const noexcept { return omega_.shift_normalize(shift); }
  std::size_t next_shift(std::size_t shift) const noexcept { return normalize(shift + 1); }
  /// ω_{shift + level}, level >= 1.
  int symbol(std::size_t shift, std::uint64_t level) const { return omega_.symbol_at(shift + level); }

  /// Memoized identity test on (word, normalized shift).
  bool is_identity(std::span<const Letter> word, std::size_t shift) const;

  std::size_t memo_size() const;

 private:
  struct Key {
    std::vector<Letter> word;
    std::size_t shift;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return WordHash{}(k.word) * 31u + k.shift;
    }
  };

  bool is_identity_uncached(std::span<const Letter> word, std::size_t shift) const;

  OmegaSpec omega_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Key, bool, KeyHash> identity_memo_;
};

using GroupPtr = std::shared_ptr<const Overgroup>;

/// An element of G̃_{σ^shift ω}: a reduced word bound to its group.
class Element {
 public:
  Element(GroupPtr group, ReducedWord word, std::size_t shift);

  /// Reduces `raw` first.
  static Element from_letters(GroupPtr group, std::span<const Letter> raw, std::size_t shift = 0);
  static Element parse(GroupPtr group, std::string_view word, std::size_t shift = 0);
  static Element identity(GroupPtr group, std::size_t shift = 0) {
    return Element(std::move(group), ReducedWord{}, shift);
  }

  const GroupPtr& group() const noexcept { return group_; }
  const ReducedWord& word() const noexcept { return word_; }
  std::size_t shift() const noexcept { return shift_; }
  std::size_t length() const noexcept { return word_.length(); }
  bool in_stabilizer() const noexcept { return word_.a_count() % 2 == 0; }

  /// `word @ shift @ omega`.
  std::string render() const;

  bool same_context(const Element& other) const noexcept;

 private:
  GroupPtr group_;
  ReducedWord word_;
  std::size_t shift_;
};

/// Single-letter element; `a` or a nonidentity spine letter.
Element generator(Letter letter, const GroupPtr& group, std::size_t shift = 0);

/// Label of spine letter `k` at vertex 1^{level-1}0 of the tree of G̃_{σ^shift ω}.
/// True means P (swap).
bool spine_root_label(SpineLetter k, const Overgroup& group, std::size_t shift, std::uint64_t level);

struct WreathDecomposition {
  bool top_swap = false;
  Element left;   // section at vertex 0, over shift + 1
  Element right;  // section at vertex 1, over shift + 1
  /// Contractions spent reducing the two substituted child words.
  std::size_t contractions = 0;
};

/// Child words before reduction, for instrumentation.
struct RawSections {
  bool top_swap = false;
  std::vector<Letter> left;
  std::vector<Letter> right;
};

RawSections substitute(std::span<const Letter> word, const Overgroup& group, std::size_t shift);

WreathDecomposition decompose(const Element& g);

/// ψ(g) for g in the first-level stabilizer. Throws OddParity otherwise.
std::pair<Element, Element> sections(const Element& g);

/// Image of vertex `v` (a string over {0,1}). Throws ParseError on other characters.
std::string act(const Element& g, std::string_view vertex);

/// P/I labels on the 2^depth - 1 internal vertices above level `depth`.
/// Vertex v of length L is stored at index 2^L - 1 + value(v), v read MSB first.
class Portrait {
 public:
  Portrait() = default;
  explicit Portrait(std::size_t depth) : depth_(depth), labels_((std::size_t{1} << depth) - 1, false) {}

  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return labels_.size(); }
  bool label(std::string_view vertex) const;
  bool label_at(std::size_t index) const noexcept { return labels_[index]; }
  void set(std::size_t index, bool swap) { labels_[index] = swap; }
  bool all_identity() const noexcept;
  std::uint64_t hash() const noexcept;

  static std::size_t index_of(std::string_view vertex);
  static std::string vertex_of(std::size_t index);

  friend bool operator==(const Portrait&, const Portrait&) = default;

 private:
  std::size_t depth_ = 0;
  std::vector<bool> labels_;
};

Portrait portrait(const Element& g, std::size_t depth);

/// Hash of the depth-limited portrait without materializing it.
std::uint64_t portrait_hash(std::span<const Letter> word, const Overgroup& group, std::size_t shift,
                            std::size_t depth);

Element mul(const Element& g, const Element& h);
Element inverse(const Element& g);
Element power(const Element& g, std::uint64_t k);
bool is_identity(const Element& g);
bool equal(const Element& g, const Element& h);

struct OrderResult {
  /// Set iff the order was found within the bound.
  std::optional<std::uint64_t> order;
  bool exceeds_bound() const noexcept { return !order.has_value(); }
};

OrderResult order_bounded(const Element& g, std::uint64_t max_order);

}  // namespace overgroup
