#include <random>

#include "doctest.h"
#include "overgroup/checks.hpp"
#include "overgroup/elements.hpp"

using namespace overgroup;

namespace {

GroupPtr grig() {
  static const GroupPtr g = Overgroup::make(parse_omega("(012)"));
  return g;
}

Element el(const std::string& w, const GroupPtr& group = grig(), std::size_t shift = 0) {
  return Element::parse(group, w, shift);
}

std::vector<Letter> random_word(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, 7);
  std::vector<Letter> w(len(rng));
  for (auto& l : w) l = kGenerators[pick(rng)];
  return w;
}

std::vector<std::string> vertices(std::size_t depth) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= depth; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string v(len, '0');
      for (std::size_t i = 0; i < len; ++i) v[i] = ((bits >> (len - 1 - i)) & 1u) ? '1' : '0';
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("spine root labels") {
  const auto& g = *grig();
  CHECK(spine_root_label(spine_of(Letter::b), g, 0, 1));
  CHECK_FALSE(spine_root_label(spine_of(Letter::bt), g, 0, 1));
  CHECK(spine_root_label(spine_of(Letter::dt), g, 0, 1));
  CHECK_FALSE(spine_root_label(spine_of(Letter::b), g, 0, 3));
}

TEST_CASE("decompose") {
  const auto b = decompose(el("b"));
  CHECK_FALSE(b.top_swap);
  CHECK(b.left.word().render() == "a");
  CHECK(b.right.word().render() == "b");
  CHECK(b.right.shift() == 1);

  const auto a = decompose(el("a"));
  CHECK(a.top_swap);
  CHECK(a.left.word().empty());
  CHECK(a.right.word().empty());

  const auto aba = decompose(el("a b a"));
  CHECK_FALSE(aba.top_swap);
  CHECK(aba.left.word().render() == "b");
  CHECK(aba.right.word().render() == "a");
}

TEST_CASE("sections") {
  const auto [l, r] = sections(el("b"));
  CHECK(l.word().render() == "a");
  CHECK(r.word().render() == "b");
  const auto [l0, r0] = sections(el(""));
  CHECK(l0.word().empty());
  CHECK(r0.word().empty());
  CHECK_THROWS_AS(sections(el("a")), OddParity);
}

TEST_CASE("act examples") {
  CHECK(act(el("a"), "01") == "11");
  CHECK(act(el("b"), "00") == "01");
  CHECK(act(el("x"), "111") == "111");
  CHECK(act(el("x"), "011") == "001");
  CHECK(act(el("b"), "") == "");
  CHECK_THROWS_AS(act(el("a"), "012"), ParseError);
}

TEST_CASE("act agrees with the definitional oracle") {
  std::mt19937_64 rng(7);
  const auto vs = vertices(7);
  for (const char* w : {"(012)", "(01)", "(0)", "(2)", "01(2)", "2(10)", "(0012)"}) {
    const auto group = Overgroup::make(parse_omega(w));
    for (int i = 0; i < 60; ++i) {
      const auto raw = random_word(rng, 12);
      const std::size_t shift = static_cast<std::size_t>(i % 4);
      const Element g = Element::from_letters(group, raw, shift);
      for (const auto& v : vs) {
        REQUIRE(act(g, v) == reference_act(raw, *group, group->normalize(shift), v));
      }
    }
  }
}

TEST_CASE("portraits") {
  const Portrait pa = portrait(el("a"), 2);
  CHECK(pa.label(""));
  CHECK_FALSE(pa.label("0"));
  CHECK_FALSE(pa.label("1"));

  const Portrait pb = portrait(el("b"), 3);
  CHECK_FALSE(pb.label(""));
  CHECK(pb.label("0"));
  CHECK_FALSE(pb.label("1"));
  CHECK(pb.label("10"));
  CHECK_FALSE(pb.label("11"));
  CHECK_FALSE(pb.label("01"));
  CHECK_FALSE(pb.label("00"));

  CHECK(portrait(el(""), 5).all_identity());
  CHECK(Portrait::index_of("") == 0);
  CHECK(Portrait::vertex_of(Portrait::index_of("0110")) == "0110");

  // Label at v is the last letter of g(v0) when g(v) is known.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto raw = random_word(rng, 10);
    const Element g = Element::from_letters(grig(), raw);
    const Portrait p = portrait(g, 6);
    for (std::size_t idx = 0; idx < p.size(); ++idx) {
      const std::string v = Portrait::vertex_of(idx);
      const std::string image = reference_act(raw, *grig(), 0, v + "0");
      REQUIRE(p.label_at(idx) == (image.back() == '1'));
    }
    // Equal elements share the truncated key whatever word represents them.
    const Element h = mul(mul(g, el("a d a d a d a d")), el("b c d"));
    CHECK(portrait_hash(g.word().letters(), *grig(), 0, 6) == portrait_hash(h.word().letters(), *grig(), 0, 6));
    CHECK(portrait(h, 6) == p);
  }
}

TEST_CASE("group operations") {
  CHECK(mul(el("b"), el("c")).word().render() == "d");
  CHECK(mul(el("a b"), el("b a")).word().empty());
  CHECK(inverse(el("a b c")).word().render() == "d a");
  CHECK(inverse(el("a")).word().render() == "a");
  CHECK(power(el("a d"), 4).word().length() > 0);
  CHECK(is_identity(power(el("a d"), 4)));
  CHECK_FALSE(is_identity(power(el("a d"), 2)));

  const auto other = Overgroup::make(parse_omega("(01)"));
  CHECK_THROWS_AS(mul(el("a"), el("a", other)), ContextMismatch);
  CHECK_THROWS_AS(mul(el("a"), el("a", grig(), 1)), ContextMismatch);
  CHECK_THROWS_AS(equal(el("a"), el("a", other)), ContextMismatch);
}

TEST_CASE("identity and equality") {
  const auto g0 = Overgroup::make(parse_omega("(0)"));
  const auto g01 = Overgroup::make(parse_omega("(01)"));
  CHECK(is_identity(el("d", g0)));
  CHECK(is_identity(mul(el("b", g01), el("x", g01))));
  CHECK(is_identity(el("B", g01)));
  CHECK_FALSE(is_identity(el("a b a b")));
  CHECK_FALSE(is_identity(el("a")));
  CHECK(is_identity(el("")));
  CHECK(equal(el("b", g01), el("x", g01)));
  CHECK_FALSE(equal(el("b"), el("c")));
  CHECK(equal(el("a c a d"), el("a c a d")));
  // Classical relators of the first Grigorchuk group hold in the subgroup <a,b,c,d>.
  CHECK(is_identity(power(el("a b"), 16)));
  CHECK(is_identity(power(el("a c"), 8)));
  CHECK(is_identity(power(el("a d a c a c"), 4)));
  CHECK(is_identity(el("a d a d a d a d")));
  // Over (120) d already swaps at the first level.
  CHECK_FALSE(is_identity(el("d", grig(), 1)));
}

TEST_CASE("equal() agrees with leaf permutations at depth 10") {
  std::mt19937_64 rng(99);
  std::size_t equal_pairs = 0;
  const auto leaves = vertices(10);
  for (int i = 0; i < 400; ++i) {
    auto raw_g = random_word(rng, 6);
    auto raw_h = random_word(rng, 6);
    if (i % 4 == 0) {
      raw_h = raw_g;
      const std::vector<Letter> relator = parse_letters("a d a d a d a d");
      raw_h.insert(raw_h.begin() + static_cast<std::ptrdiff_t>(raw_h.size() / 2), relator.begin(), relator.end());
    }
    const Element g = Element::from_letters(grig(), raw_g);
    const Element h = Element::from_letters(grig(), raw_h);
    bool same = true;
    for (std::size_t j = leaves.size() - 1024; j < leaves.size() && same; ++j) {
      same = reference_act(raw_g, *grig(), 0, leaves[j]) == reference_act(raw_h, *grig(), 0, leaves[j]);
    }
    CHECK(equal(g, h) == same);
    equal_pairs += same ? 1 : 0;
  }
  CHECK(equal_pairs >= 100);
}

TEST_CASE("section map is a homomorphism on the stabilizer") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 300) {
    const Element g = Element::from_letters(grig(), random_word(rng, 8));
    const Element h = Element::from_letters(grig(), random_word(rng, 8));
    if (!g.in_stabilizer() || !h.in_stabilizer()) continue;
    const auto [gl, gr] = sections(g);
    const auto [hl, hr] = sections(h);
    const auto [pl, pr] = sections(mul(g, h));
    CHECK(equal(pl, mul(gl, hl)));
    CHECK(equal(pr, mul(gr, hr)));
    CHECK(2 * gl.length() <= g.length() + 1);
    CHECK(2 * gr.length() <= g.length() + 1);
    ++checked;
  }
}

TEST_CASE("equality is a congruence") {
  std::mt19937_64 rng(6);
  const Element r = el("a d a d a d a d");
  for (int i = 0; i < 200; ++i) {
    const Element g = Element::from_letters(grig(), random_word(rng, 8));
    const Element k = Element::from_letters(grig(), random_word(rng, 8));
    const Element g2 = mul(mul(g, r), inverse(k));
    const Element g3 = mul(g2, k);
    CHECK(equal(g, g3));
    CHECK(equal(mul(k, g), mul(k, g3)));
    CHECK(equal(inverse(g), inverse(g3)));
  }
}

TEST_CASE("bounded orders") {
  CHECK(order_bounded(el("a"), 10).order == 2u);
  CHECK(order_bounded(el("d"), 10).order == 2u);
  CHECK(order_bounded(el(""), 10).order == 1u);
  CHECK(order_bounded(el("a b"), 4096).order == 16u);
  CHECK(order_bounded(el("a c"), 4096).order == 8u);
  CHECK(order_bounded(el("a d"), 4096).order == 4u);
  CHECK(order_bounded(el("a b"), 15).exceeds_bound());
  CHECK(order_bounded(el("a x"), 4096).exceeds_bound());

  // Powering oracle: reported orders annihilate and no proper divisor does.
  std::mt19937_64 rng(8);
  for (int i = 0; i < 60; ++i) {
    const Element g = Element::from_letters(grig(), random_word(rng, 6));
    const auto r = order_bounded(g, 256);
    if (!r.order) continue;
    CHECK(is_identity(power(g, *r.order)));
    for (std::uint64_t k = 1; k < *r.order; ++k) {
      if (*r.order % k == 0) CHECK_FALSE(is_identity(power(g, k)));
    }
  }
}

TEST_CASE("element rendering and memo") {
  CHECK(el("a b").render() == "a b @ 0 @ (012)");
  const auto group = Overgroup::make(parse_omega("(012)"));
  is_identity(el("a b a b a b a b", group));
  CHECK(group->memo_size() > 0);
}
