#include "doctest.h"
#include "overgroup/ball.hpp"
#include "overgroup/geodesics.hpp"

using namespace overgroup;

namespace {

GroupPtr grig() {
  static const GroupPtr g = Overgroup::make(parse_omega("(012)"));
  return g;
}

const BallTable& ball8() {
  static const BallTable t = enumerate_ball(grig(), 0, 8);
  return t;
}

// Dominance straight from the definition: some spine count > (1/2 - ε)n.
bool dominant_oracle(std::span<const Letter> w, Rational eps) {
  const Rational cap = (Rational(1, 2) - eps) * Rational(static_cast<std::int64_t>(w.size()));
  for (Letter l : kSpineLetters) {
    std::int64_t n = 0;
    for (Letter m : w) n += m == l ? 1 : 0;
    if (Rational(n) > cap) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("dominant letters") {
  const Rational eps(1, 10);
  CHECK_FALSE(has_dominant_letter(parse_letters("a"), eps, 1));
  CHECK(has_dominant_letter(parse_letters("b"), eps, 1));
  CHECK(has_dominant_letter(parse_letters("a b"), eps, 2));
  CHECK_FALSE(has_dominant_letter(parse_letters("a b a c"), eps, 4));
  CHECK(has_dominant_letter(parse_letters("a b a b"), eps, 4));
}

TEST_CASE("F/D classification at radius 1 and 2") {
  const Rational eps(1, 10);
  const auto c1 = classify_geodesics(ball8(), eps, 1);
  CHECK(c1.F.size() == 7);
  REQUIRE(c1.D.size() == 1);
  CHECK(ball8().entry(c1.D[0]).word.render() == "a");
  const auto c2 = classify_geodesics(ball8(), eps, 2);
  CHECK(c2.F.size() == 14);
  CHECK(c2.D.empty());
  CHECK_THROWS(classify_geodesics(ball8(), Rational(1, 2), 2));
}

TEST_CASE("F/D partition matches brute-force reclassification") {
  for (const Rational eps : {Rational(1, 10), Rational(1, 5), Rational(1, 3)}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto cls = classify_geodesics(ball8(), eps, n);
      CHECK(cls.F.size() + cls.D.size() == ball8().sphere_size(n));
      for (ElementId id : cls.F) {
        ball8().for_each_geodesic(id, SIZE_MAX, [&](std::span<const Letter> w) { CHECK(dominant_oracle(w, eps)); });
      }
      for (ElementId id : cls.D) {
        bool balanced = false;
        ball8().for_each_geodesic(id, SIZE_MAX, [&](std::span<const Letter> w) { balanced = balanced || !dominant_oracle(w, eps); });
        CHECK(balanced);
        for (const ReducedWord& w : balanced_geodesics(ball8(), id, eps)) CHECK_FALSE(dominant_oracle(w.letters(), eps));
      }
    }
  }
}

TEST_CASE("a-deletion map") {
  const Lemma8Result r = lemma8_map(ReducedWord(parse_letters("a b a b a")), Rational(1, 10));
  CHECK(render_letters(r.image) == "b b");
  CHECK(r.length_ok);
  CHECK(r.delta == Rational(1, 5) + Rational(3, 4));
  CHECK(r.inequality_ok);
  CHECK_THROWS(lemma8_map(ReducedWord(parse_letters("a")), Rational(1, 10)));

  const Lemma8Report rep = lemma8_check(ball8(), Rational(1, 10), 8);
  CHECK(rep.violations.empty());
  CHECK(rep.words_checked > 0);
  CHECK(rep.f_sizes.size() == 7);
}

TEST_CASE("level section traces") {
  const auto id = level_section_trace(Element::identity(grig()), 3);
  for (const auto& level : id.levels) {
    CHECK(level.contractions == 0);
    for (const auto& w : level.words) CHECK(w.empty());
  }

  const auto b = level_section_trace(Element::parse(grig(), "b"), 1);
  REQUIRE(b.levels.size() == 1);
  CHECK(b.levels[0].words[0].render() == "a");
  CHECK(b.levels[0].words[1].render() == "b");
  CHECK(b.levels[0].contractions == 0);
  CHECK(b.profile0 == XyzProfile{0, 0, 1});
  CHECK(b.levels[0].profile == XyzProfile{0, 0, 1});

  CHECK_THROWS_AS(level_section_trace(Element::parse(grig(), "b"), 2), NotLevelStabilizer);
  CHECK_THROWS_AS(level_section_trace(Element::parse(grig(), "a"), 1), NotLevelStabilizer);
  CHECK(stabilizes_level(Element::parse(grig(), "a b a b a b a b"), 4) ==
        portrait(Element::parse(grig(), "a b a b a b a b"), 4).all_identity());

  // The level-s words reproduce the action below level s.
  const Element g = Element::parse(grig(), "a b a c a b a c");
  REQUIRE(stabilizes_level(g, 2));
  const auto tr = level_section_trace(g, 2);
  const std::vector<std::string> prefixes{"00", "01", "10", "11"};
  for (std::size_t i = 0; i < 4; ++i) {
    const Element section(grig(), tr.levels[1].words[i], 2);
    for (const char* tail : {"0", "1", "00", "10", "011"}) {
      CHECK(act(g, prefixes[i] + tail) == prefixes[i] + act(section, tail));
    }
  }
}

TEST_CASE("level-s section length inequality") {
  const Lemma11Report r = lemma11_check(ball8(), Rational(1, 10), 3);
  CHECK(r.t == 2);
  CHECK(r.violations_a.empty());
  CHECK(r.words_checked_a > 0);
  CHECK(r.part_b == PartBStatus::PreconditionUnmet);
  CHECK(to_string(r.part_b) == "precondition unmet, skipped");
  CHECK_THROWS(lemma11_check(ball8(), Rational(1, 10), 2));

  BallOptions small;
  small.element_budget = 1000;
  const BallTable partial = enumerate_ball(grig(), 0, 13, small);
  const Lemma11Report p = lemma11_check(partial, Rational(1, 5), 3);
  CHECK(p.part_b == PartBStatus::BallIncomplete);
  CHECK(p.bound_b == doctest::Approx(0.96 * 13 + 7));
}
