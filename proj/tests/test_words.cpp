#include <random>

#include "doctest.h"
#include "overgroup/omega.hpp"
#include "overgroup/words.hpp"

using namespace overgroup;

namespace {

std::vector<Letter> random_raw(std::mt19937_64& rng, std::size_t max_len, bool with_one) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> pick(with_one ? 0 : 1, 8);
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = static_cast<Letter>(pick(rng));
  return w;
}

bool reducible(Letter l, Letter r) { return (l == Letter::a) == (r == Letter::a); }

// Applies contractions at random positions until none remain.
std::vector<Letter> random_order_rewrite(std::vector<Letter> w, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::size_t> sites;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == Letter::one) sites.push_back(2 * i + 1);
      if (i + 1 < w.size() && reducible(w[i], w[i + 1])) sites.push_back(2 * i);
    }
    if (sites.empty()) return w;
    const std::size_t site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
    const std::size_t i = site / 2;
    if (site % 2 == 1) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    } else if (w[i] == Letter::a) {
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
    } else {
      const auto p = static_cast<Letter>(static_cast<int>(w[i]) ^ static_cast<int>(w[i + 1]));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      if (p == Letter::one) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        w[i] = p;
      }
    }
  }
}

}  // namespace

TEST_CASE("letter parsing and rendering") {
  CHECK(render_letters(parse_letters("a b c d x B C D")) == "a b c d x B C D");
  CHECK(render_letters(parse_letters("abcd")) == "a b c d");
  CHECK(parse_letters("1").front() == Letter::one);
  CHECK(parse_letters("").empty());
  CHECK_THROWS_AS(parse_letters("a q"), ParseError);
}

TEST_CASE("spine group is the XOR group") {
  CHECK(spine_mul(spine_of(Letter::b), spine_of(Letter::c)).letter() == Letter::d);
  CHECK(spine_mul(spine_of(Letter::bt), spine_of(Letter::ct)).letter() == Letter::d);
  CHECK(spine_mul(spine_of(Letter::b), spine_of(Letter::bt)).letter() == Letter::x);
  CHECK(spine_mul(spine_of(Letter::dt), spine_of(Letter::x)).letter() == Letter::d);
  for (Letter l : kSpineLetters) CHECK(spine_mul(spine_of(l), spine_of(l)).is_identity());
}

TEST_CASE("spine labels per symbol") {
  // b: P on 0 and 1; c: P on 0 and 2; d: P on 1 and 2; x always P.
  CHECK(spine_label(spine_of(Letter::b), 0));
  CHECK(spine_label(spine_of(Letter::b), 1));
  CHECK_FALSE(spine_label(spine_of(Letter::b), 2));
  CHECK_FALSE(spine_label(spine_of(Letter::c), 1));
  CHECK_FALSE(spine_label(spine_of(Letter::d), 0));
  for (int s = 0; s < 3; ++s) {
    CHECK(spine_label(spine_of(Letter::x), s));
    for (Letter l : {Letter::b, Letter::c, Letter::d}) {
      const Letter tilde = static_cast<Letter>(static_cast<int>(l) ^ 4);
      CHECK(spine_label(spine_of(l), s) != spine_label(spine_of(tilde), s));
    }
  }
}

TEST_CASE("reduction receipts") {
  const ReductionReceipt r = reduce(parse_letters("a b c a a d"));
  CHECK(r.word.render() == "a");
  CHECK(r.contractions == 3);
  CHECK(reduce(parse_letters("b b")).word.empty());
  CHECK(reduce(parse_letters("b b")).contractions == 1);
  CHECK(reduce(parse_letters("1")).contractions == 1);
  CHECK(reduce(parse_letters("a b a")).contractions == 0);
  CHECK(reduce(parse_letters("b x")).word.render() == "B");
}

TEST_CASE("reduced words reject non-alternating input") {
  CHECK_THROWS(ReducedWord(parse_letters("a a")));
  CHECK_THROWS(ReducedWord(parse_letters("b c")));
  CHECK_THROWS(ReducedWord(parse_letters("a 1")));
  const ReducedWord w(parse_letters("a b a c"));
  CHECK(w.a_count() == 2);
  CHECK(w.spine_count() == 2);
  CHECK(w.leading_a());
  CHECK_FALSE(w.trailing_a());
  CHECK(w.reversed().render() == "c a b a");
}

TEST_CASE("reduction is confluent, idempotent and length-parity preserving") {
  std::mt19937_64 rng(20241015);
  for (int i = 0; i < 3000; ++i) {
    const auto raw = random_raw(rng, 24, true);
    const ReductionReceipt r = reduce(raw);
    CHECK(r.word.letters().size() == random_order_rewrite(raw, rng).size());
    const auto other = random_order_rewrite(raw, rng);
    CHECK(std::vector<Letter>(r.word.letters().begin(), r.word.letters().end()) == other);
    CHECK(reduce(r.word.letters()).contractions == 0);
    CHECK(reduce(r.word.letters()).word == r.word);

    std::size_t raw_a = 0;
    for (Letter l : raw) raw_a += l == Letter::a ? 1 : 0;
    CHECK(raw_a % 2 == r.word.a_count() % 2);
    CHECK(r.word.length() <= raw.size());
    CHECK(r.contractions <= raw.size());
  }
}

TEST_CASE("letter counts and profiles") {
  const auto w = parse_letters("a b a B a C a D a x");
  const LetterCounts c = letter_counts(w);
  CHECK(c[Letter::a] == 5);
  CHECK(c[Letter::b] == 1);
  CHECK(c[Letter::x] == 1);
  CHECK(c.total() == 10);
  // Generators with trivial left coordinate: row 0 {d,B,C}, row 1 {c,B,D}, row 2 {b,C,D}.
  CHECK(trivial_row_count(w, 0) == 2);
  CHECK(trivial_row_count(w, 1) == 2);
  CHECK(trivial_row_count(w, 2) == 3);
  const XyzProfile p = xyz_profile(w);
  CHECK(p.x == 2);
  CHECK(p.y == 2);
  CHECK(p.z == 3);
}

TEST_CASE("word hash distinguishes orders") {
  const WordHash h;
  CHECK(h(parse_letters("a b")) != h(parse_letters("b a")));
  CHECK(h(ReducedWord(parse_letters("a b"))) == h(parse_letters("a b")));
}
