#include "overgroup/words.hpp"

#include <algorithm>
#include <stdexcept>

#include "overgroup/omega.hpp"

namespace overgroup {

char letter_char(Letter l) noexcept {
  static constexpr std::array<char, 9> names{'1', 'b', 'c', 'd', 'x', 'B', 'C', 'D', 'a'};
  return names[static_cast<std::size_t>(l)];
}

std::vector<Letter> parse_letters(std::string_view text) {
  std::vector<Letter> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case ' ': case '\t': case '\n': case '\r': break;
      case 'a': out.push_back(Letter::a); break;
      case 'b': out.push_back(Letter::b); break;
      case 'c': out.push_back(Letter::c); break;
      case 'd': out.push_back(Letter::d); break;
      case 'x': out.push_back(Letter::x); break;
      case 'B': out.push_back(Letter::bt); break;
      case 'C': out.push_back(Letter::ct); break;
      case 'D': out.push_back(Letter::dt); break;
      case '1': out.push_back(Letter::one); break;
      default:
        throw ParseError(std::string("word: illegal letter '") + text[i] + "'", i);
    }
  }
  return out;
}

std::string render_letters(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size() * 2);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out.push_back(' ');
    out.push_back(letter_char(letters[i]));
  }
  return out;
}

ReducedWord::ReducedWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == Letter::one) throw std::invalid_argument("reduced word: identity letter");
    if (i && is_spine(letters_[i]) == is_spine(letters_[i - 1])) {
      throw std::invalid_argument("reduced word: letters do not alternate: " + render());
    }
  }
}

std::size_t ReducedWord::a_count() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), Letter::a));
}

std::vector<SpineLetter> ReducedWord::spine() const {
  std::vector<SpineLetter> out;
  for (Letter l : letters_) {
    if (is_spine(l)) out.push_back(spine_of(l));
  }
  return out;
}

ReducedWord ReducedWord::reversed() const {
  ReducedWord out;
  out.letters_.assign(letters_.rbegin(), letters_.rend());
  return out;
}

ReductionReceipt reduce(std::span<const Letter> raw) {
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  std::size_t contractions = 0;
  for (Letter l : raw) {
    if (l == Letter::one) {
      ++contractions;
      continue;
    }
    if (stack.empty() || is_spine(stack.back()) != is_spine(l)) {
      stack.push_back(l);
      continue;
    }
    ++contractions;
    if (l == Letter::a) {
      stack.pop_back();
      continue;
    }
    const SpineLetter product = spine_mul(spine_of(stack.back()), spine_of(l));
    stack.pop_back();
    if (!product.is_identity()) stack.push_back(product.letter());
  }
  ReductionReceipt receipt;
  receipt.word = ReducedWord(std::move(stack));
  receipt.contractions = contractions;
  return receipt;
}

std::size_t LetterCounts::total() const noexcept {
  std::size_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

LetterCounts letter_counts(std::span<const Letter> word) {
  LetterCounts out;
  for (Letter l : word) {
    if (l != Letter::one) ++out.counts[generator_index(l)];
  }
  return out;
}

std::size_t trivial_row_count(std::span<const Letter> word, int symbol) {
  std::size_t n = 0;
  for (Letter l : word) {
    if (is_spine(l) && l != Letter::one && !spine_label(spine_of(l), symbol)) ++n;
  }
  return n;
}

XyzProfile xyz_profile(std::span<const Letter> word) {
  return {trivial_row_count(word, 0), trivial_row_count(word, 1), trivial_row_count(word, 2)};
}

std::size_t WordHash::operator()(std::span<const Letter> w) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Letter l : w) {
    h ^= static_cast<std::uint64_t>(l);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace overgroup
