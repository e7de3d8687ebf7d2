#include "overgroup/elements.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace overgroup {

namespace {

// Words longer than this skip the memo; they occur only in explicit powering.
constexpr std::size_t kMemoWordLimit = 64;

}  // namespace

Overgroup::Overgroup(OmegaSpec omega) : omega_(std::move(omega)) {}

std::size_t Overgroup::memo_size() const {
  std::shared_lock lock(mutex_);
  return identity_memo_.size();
}

bool Overgroup::is_identity(std::span<const Letter> word, std::size_t shift) const {
  shift = normalize(shift);
  if (word.empty()) return true;
  if (word.size() == 1 && word[0] == Letter::a) return false;
  if (word.size() > kMemoWordLimit) return is_identity_uncached(word, shift);

  Key key{std::vector<Letter>(word.begin(), word.end()), shift};
  {
    std::shared_lock lock(mutex_);
    if (auto it = identity_memo_.find(key); it != identity_memo_.end()) return it->second;
  }
  const bool result = is_identity_uncached(word, shift);
  std::unique_lock lock(mutex_);
  identity_memo_.emplace(std::move(key), result);
  return result;
}

bool Overgroup::is_identity_uncached(std::span<const Letter> word, std::size_t shift) const {
  if (word.size() == 1) {
    // A spine letter's labels along the spine are periodic with ω's tail.
    const SpineLetter k = spine_of(word[0]);
    for (std::size_t level = 1; level <= omega_.cycle_length(); ++level) {
      if (spine_label(k, symbol(shift, level))) return false;
    }
    return true;
  }
  const std::size_t a_count = static_cast<std::size_t>(std::count(word.begin(), word.end(), Letter::a));
  if (a_count % 2 == 1) return false;

  RawSections raw = substitute(word, *this, shift);
  const std::size_t child = next_shift(shift);
  const ReducedWord left = reduce(raw.left).word;
  if (!is_identity(left.letters(), child)) return false;
  const ReducedWord right = reduce(raw.right).word;
  return is_identity(right.letters(), child);
}

Element::Element(GroupPtr group, ReducedWord word, std::size_t shift)
    : group_(std::move(group)), word_(std::move(word)), shift_(0) {
  if (!group_) throw std::invalid_argument("element: null group");
  shift_ = group_->normalize(shift);
}

Element Element::from_letters(GroupPtr group, std::span<const Letter> raw, std::size_t shift) {
  return Element(std::move(group), reduce(raw).word, shift);
}

Element Element::parse(GroupPtr group, std::string_view word, std::size_t shift) {
  const auto letters = parse_letters(word);
  return from_letters(std::move(group), letters, shift);
}

std::string Element::render() const {
  return word_.render() + " @ " + std::to_string(shift_) + " @ " + group_->omega().render();
}

bool Element::same_context(const Element& other) const noexcept {
  return shift_ == other.shift_ &&
         (group_ == other.group_ || group_->omega() == other.group_->omega());
}

Element generator(Letter letter, const GroupPtr& group, std::size_t shift) {
  if (letter == Letter::one) throw std::invalid_argument("generator: identity is not a generator");
  return Element(group, ReducedWord::single(letter), shift);
}

bool spine_root_label(SpineLetter k, const Overgroup& group, std::size_t shift, std::uint64_t level) {
  if (level == 0) throw std::out_of_range("spine_root_label: level is 1-based");
  return spine_label(k, group.symbol(shift, level));
}

RawSections substitute(std::span<const Letter> word, const Overgroup& group, std::size_t shift) {
  RawSections out;
  const int symbol = group.symbol(shift, 1);
  const bool total = std::count(word.begin(), word.end(), Letter::a) % 2 == 1;
  out.top_swap = total;
  // A letter's section at input vertex i is taken at the image of i under the
  // letters to its right, so its side is the parity of a's after it.
  bool left_parity = false;
  for (Letter l : word) {
    if (l == Letter::a) {
      left_parity = !left_parity;
      continue;
    }
    if (l == Letter::one) continue;
    const bool side = left_parity != total;
    auto& near = side ? out.right : out.left;
    auto& far = side ? out.left : out.right;
    if (spine_label(spine_of(l), symbol)) near.push_back(Letter::a);
    far.push_back(l);
  }
  return out;
}

WreathDecomposition decompose(const Element& g) {
  RawSections raw = substitute(g.word().letters(), *g.group(), g.shift());
  ReductionReceipt l = reduce(raw.left);
  ReductionReceipt r = reduce(raw.right);
  const std::size_t child = g.group()->next_shift(g.shift());
  return WreathDecomposition{raw.top_swap, Element(g.group(), std::move(l.word), child),
                             Element(g.group(), std::move(r.word), child),
                             l.contractions + r.contractions};
}

std::pair<Element, Element> sections(const Element& g) {
  if (!g.in_stabilizer()) throw OddParity();
  WreathDecomposition w = decompose(g);
  return {std::move(w.left), std::move(w.right)};
}

std::string act(const Element& g, std::string_view vertex) {
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    if (vertex[i] != '0' && vertex[i] != '1') throw ParseError("vertex: expected 0 or 1", i);
  }
  std::string out(vertex);
  const Overgroup& group = *g.group();
  ReducedWord current = g.word();
  std::size_t shift = g.shift();
  for (std::size_t i = 0; i < out.size() && !current.empty(); ++i) {
    RawSections raw = substitute(current.letters(), group, shift);
    const bool bit = out[i] == '1';
    if (raw.top_swap) out[i] = bit ? '0' : '1';
    current = reduce(bit ? raw.right : raw.left).word;
    shift = group.next_shift(shift);
  }
  return out;
}

bool Portrait::label(std::string_view vertex) const { return labels_.at(index_of(vertex)); }

bool Portrait::all_identity() const noexcept {
  return std::none_of(labels_.begin(), labels_.end(), [](bool b) { return b; });
}

std::uint64_t Portrait::hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull ^ depth_;
  std::uint64_t chunk = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    chunk = (chunk << 1) | (labels_[i] ? 1u : 0u);
    if (i % 64 == 63 || i + 1 == labels_.size()) {
      h ^= chunk + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      chunk = 0;
    }
  }
  return h;
}

std::size_t Portrait::index_of(std::string_view vertex) {
  std::size_t value = 0;
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    if (vertex[i] != '0' && vertex[i] != '1') throw ParseError("vertex: expected 0 or 1", i);
    value = (value << 1) | (vertex[i] == '1' ? 1u : 0u);
  }
  return (std::size_t{1} << vertex.size()) - 1 + value;
}

std::string Portrait::vertex_of(std::size_t index) {
  std::size_t level = 0;
  while ((std::size_t{2} << level) - 1 <= index) ++level;
  std::size_t value = index - ((std::size_t{1} << level) - 1);
  std::string out(level, '0');
  for (std::size_t i = 0; i < level; ++i) {
    if ((value >> (level - 1 - i)) & 1u) out[i] = '1';
  }
  return out;
}

namespace {

template <typename Sink>
void walk_portrait(std::span<const Letter> word, const Overgroup& group, std::size_t shift,
                   std::size_t level, std::size_t value, std::size_t depth, Sink& sink) {
  if (level >= depth || word.empty()) return;
  RawSections raw = substitute(word, group, shift);
  if (raw.top_swap) sink(level, value);
  const std::size_t child = group.next_shift(shift);
  const ReducedWord left = reduce(raw.left).word;
  walk_portrait(left.letters(), group, child, level + 1, value << 1, depth, sink);
  const ReducedWord right = reduce(raw.right).word;
  walk_portrait(right.letters(), group, child, level + 1, (value << 1) | 1u, depth, sink);
}

}  // namespace

Portrait portrait(const Element& g, std::size_t depth) {
  Portrait out(depth);
  auto sink = [&](std::size_t level, std::size_t value) {
    out.set((std::size_t{1} << level) - 1 + value, true);
  };
  walk_portrait(g.word().letters(), *g.group(), g.shift(), 0, 0, depth, sink);
  return out;
}

std::uint64_t portrait_hash(std::span<const Letter> word, const Overgroup& group, std::size_t shift,
                            std::size_t depth) {
  // Order-independent combination of the swapped vertex indices.
  std::uint64_t h = 0x84222325cbf29ce4ull;
  auto sink = [&](std::size_t level, std::size_t value) {
    std::uint64_t v = ((std::uint64_t{1} << level) - 1 + value) * 0x9e3779b97f4a7c15ull;
    v ^= v >> 29;
    v *= 0xbf58476d1ce4e5b9ull;
    v ^= v >> 32;
    h += v;
  };
  walk_portrait(word, group, group.normalize(shift), 0, 0, depth, sink);
  return h;
}

Element mul(const Element& g, const Element& h) {
  if (!g.same_context(h)) throw ContextMismatch();
  std::vector<Letter> raw(g.word().letters().begin(), g.word().letters().end());
  raw.insert(raw.end(), h.word().letters().begin(), h.word().letters().end());
  return Element::from_letters(g.group(), raw, g.shift());
}

Element inverse(const Element& g) { return Element(g.group(), g.word().reversed(), g.shift()); }

Element power(const Element& g, std::uint64_t k) {
  Element result = Element::identity(g.group(), g.shift());
  Element base = g;
  while (k) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k) base = mul(base, base);
  }
  return result;
}

bool is_identity(const Element& g) { return g.group()->is_identity(g.word().letters(), g.shift()); }

bool equal(const Element& g, const Element& h) {
  if (!g.same_context(h)) throw ContextMismatch();
  if (g.word() == h.word()) return true;
  return is_identity(mul(g, inverse(h)));
}

namespace {

struct OrderMemoEntry {
  std::optional<std::uint64_t> order;
  std::uint64_t failed_below = 0;  // no order <= this bound exists
};

class OrderSolver {
 public:
  explicit OrderSolver(const Overgroup& group) : group_(group) {}

  std::optional<std::uint64_t> solve(const ReducedWord& w, std::size_t shift, std::uint64_t bound) {
    if (bound == 0) return std::nullopt;
    if (group_.is_identity(w.letters(), shift)) return 1;
    if (bound < 2) return std::nullopt;

    const auto key = std::make_pair(w, shift);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      if (it->second.order) {
        return *it->second.order <= bound ? it->second.order : std::nullopt;
      }
      if (it->second.failed_below >= bound) return std::nullopt;
    }

    std::optional<std::uint64_t> result;
    if (w.a_count() % 2 == 1) {
      // Odd powers are odd, so ord(g) = 2 ord(g^2).
      std::vector<Letter> sq(w.letters().begin(), w.letters().end());
      sq.insert(sq.end(), w.letters().begin(), w.letters().end());
      const ReducedWord square = reduce(sq).word;
      if (auto r = solve(square, shift, bound / 2)) result = 2 * *r;
    } else if (w.length() == 1) {
      result = 2;
    } else {
      // ψ is injective on the stabilizer: ord(g) = lcm of section orders.
      RawSections raw = substitute(w.letters(), group_, shift);
      const std::size_t child = group_.next_shift(shift);
      const ReducedWord left = reduce(raw.left).word;
      if (auto r0 = solve(left, child, bound)) {
        const ReducedWord right = reduce(raw.right).word;
        if (auto r1 = solve(right, child, bound)) {
          const std::uint64_t l = std::lcm(*r0, *r1);
          if (l <= bound) result = l;
        }
      }
    }

    auto& entry = memo_[key];
    if (result) {
      entry.order = result;
    } else {
      entry.failed_below = std::max(entry.failed_below, bound);
    }
    return result;
  }

 private:
  const Overgroup& group_;
  std::map<std::pair<ReducedWord, std::size_t>, OrderMemoEntry> memo_;
};

}  // namespace

OrderResult order_bounded(const Element& g, std::uint64_t max_order) {
  if (max_order == 0) throw std::invalid_argument("order_bounded: max_order must be positive");
  OrderSolver solver(*g.group());
  OrderResult out{solver.solve(g.word(), g.shift(), max_order)};
  if (out.order && !is_identity(power(g, *out.order))) {
    throw std::logic_error("order_bounded: candidate order failed explicit verification");
  }
  return out;
}

}  // namespace overgroup
