#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "ggt/shortening.hpp"
#include "ggt/smallcancel.hpp"

using namespace ggt;
using namespace ggt::tests;

namespace {

MovingFamily fixture_family(const GroupBall& scope, const Presentation& p,
                            int relator_power = 40) {
  // Conjugates of <a^relator_power> across short conjugators.
  std::vector<Word> conjugators;
  GroupBall small = GroupBall::enumerate(p, p.standard_generators(), 2);
  for (const auto& e : small.elements()) conjugators.push_back(e.word);
  return build_moving_family(scope, w(p, rep(relator_power, "a")), conjugators,
                             Rational(0));
}

}  // namespace

TEST_CASE("build_moving_family dedups conjugators and measures the family") {
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);

  MovingFamily fam = fixture_family(scope, p);
  CHECK(fam.T_estimate == Rational(40));
  CHECK(fam.Delta_estimate == Rational(0));
  // 17 conjugators of length <= 2 collapse to 9 cosets of <a>.
  CHECK(fam.members.size() == 9);

  MovingFamily merged = build_moving_family(
      scope, w(p, rep(40, "a")), {Word(), w(p, "aaa")}, Rational(0));
  CHECK(merged.members.size() == 1);

  CHECK_THROWS_WITH_AS(
      build_moving_family(scope, w(p, rep(40, "a")), {}, Rational(0)),
      doctest::Contains("conjugator"), Error);
  CHECK_THROWS_AS(build_moving_family(scope, Word(), {Word()}, Rational(0)), Error);
}

TEST_CASE("check_sc_condition") {
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);
  MovingFamily fam = fixture_family(scope, p);

  SCConditionReport pass =
      check_sc_condition(fam, Rational(1, 100), Rational(10), Rational(1, 200));
  CHECK(pass.sc1);
  CHECK(pass.sc2);
  CHECK(pass.verdict);

  SCConditionReport sc2_fail =
      check_sc_condition(fam, Rational(1, 100), Rational(10000), Rational(1, 200));
  CHECK(sc2_fail.sc1);
  CHECK(!sc2_fail.sc2);
  CHECK(!sc2_fail.verdict);

  SCConditionReport sc1_fail =
      check_sc_condition(fam, Rational(0), Rational(10), Rational(1, 200));
  CHECK(!sc1_fail.sc1);
}

TEST_CASE("is_shortening_word on the block fixture") {
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);
  std::vector<Word> U = {w(p, rep(10, "a")), w(p, rep(10, "b"))};
  MovingFamily fam = build_moving_family(scope, w(p, rep(40, "a")), {Word()},
                                         Rational(0));

  ShorteningVerdict aa =
      is_shortening_word(scope, U, {1, 1}, fam, 0, Rational(15), Word(), Rational(1));
  CHECK(aa.is_shortening);
  CHECK(aa.proj_gap == 20);
  CHECK(aa.y0.empty());
  CHECK(p.word_str(aa.yn) == rep(20, "a"));
  CHECK(aa.margin_start == Rational(4));  // 10/2 - 1 - 0
  CHECK(aa.margin_end == Rational(4));

  ShorteningVerdict b =
      is_shortening_word(scope, U, {2}, fam, 0, Rational(15), Word(), Rational(1));
  CHECK(!b.is_shortening);
  CHECK(b.proj_gap == 0);

  CHECK_THROWS_WITH_AS(is_shortening_word(scope, U, {1, -1}, fam, 0, Rational(15),
                                          Word(), Rational(1)),
                       doctest::Contains("reduced"), Error);
}

TEST_CASE("tau gate with caller-supplied constants") {
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);
  std::vector<Word> U = {w(p, rep(10, "a")), w(p, rep(10, "b"))};
  MovingFamily fam = build_moving_family(scope, w(p, rep(40, "a")), {Word()},
                                         Rational(0));

  ShorteningGate loose{Rational(0), Rational(5), Rational(1, 200)};
  CHECK(is_shortening_word(scope, U, {1, 1}, fam, 0, Rational(15), Word(),
                           Rational(1), loose)
            .is_shortening);

  ShorteningGate tight{Rational(0), Rational(10), Rational(1, 200)};
  CHECK_THROWS_WITH_AS(is_shortening_word(scope, U, {1, 1}, fam, 0, Rational(15),
                                          Word(), Rational(1), tight),
                       doctest::Contains("gate"), Error);
}

TEST_CASE("find_minimal_shortenings") {
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);
  std::vector<Word> U = {w(p, rep(10, "a")), w(p, rep(10, "b"))};
  MovingFamily fam = build_moving_family(scope, w(p, rep(40, "a")), {Word()},
                                         Rational(0));

  MinimalShortenings at15 = find_minimal_shortenings(scope, U, fam, 0, Rational(15),
                                                     Word(), Rational(1), 4);
  REQUIRE(at15.words.size() == 2);
  CHECK(at15.at_most_two);
  std::set<SWord> expected15{{1, 1}, {-1, -1}};
  CHECK(std::set<SWord>(at15.words.begin(), at15.words.end()) == expected15);

  MinimalShortenings at25 = find_minimal_shortenings(scope, U, fam, 0, Rational(25),
                                                     Word(), Rational(1), 4);
  std::set<SWord> expected25{{1, 1, 1}, {-1, -1, -1}};
  CHECK(std::set<SWord>(at25.words.begin(), at25.words.end()) == expected25);

  MinimalShortenings none = find_minimal_shortenings(scope, U, fam, 0, Rational(100),
                                                     Word(), Rational(1), 4);
  CHECK(none.words.empty());
}

TEST_CASE("witness length window") {
  // |w| >= (tau - 50 delta)/L(U,p) always; minimal ones also <= tau/alpha + 1.
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);
  std::vector<Word> U = {w(p, rep(10, "a")), w(p, rep(10, "b"))};
  MovingFamily fam = fixture_family(scope, p);
  Rational tau(15), alpha(1), delta(1, 200);
  Rational energy(10);

  for (int m = 0; m < static_cast<int>(fam.members.size()); ++m) {
    auto minimal =
        find_minimal_shortenings(scope, U, fam, m, tau, Word(), alpha, 4);
    CHECK(minimal.at_most_two);
    for (const SWord& sw : minimal.words) {
      Rational len(static_cast<int>(sw.size()));
      CHECK(len >= (tau - Rational(50) * delta) / energy);
      CHECK(len <= tau / alpha + Rational(1));
    }
  }
}

TEST_CASE("enumerate_shortening_free counts") {
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 25);
  std::vector<Word> U = {w(p, rep(10, "a")), w(p, rep(10, "b"))};
  MovingFamily fam = fixture_family(scope, p);

  ShorteningFreeCounts counts = enumerate_shortening_free(
      scope, U, fam, Rational(15), Word(), Rational(1), 4);
  CHECK(counts.counts == std::vector<std::uint64_t>{1, 5, 15, 41, 107});
  CHECK(counts.member_unique);
  CHECK(counts.minimal_words.size() == 2);  // aa and AA over the identity coset

  CountingBoundReport bound = verify_counting_bound(counts.counts, 2);
  CHECK(bound.ok);

  // Empty family: nothing is excluded.
  MovingFamily empty;
  ShorteningFreeCounts full = enumerate_shortening_free(
      scope, U, empty, Rational(15), Word(), Rational(1), 2);
  CHECK(full.counts == std::vector<std::uint64_t>{1, 5, 17});
}

TEST_CASE("verify_counting_bound") {
  CHECK(verify_counting_bound({1, 5, 15}, 2).ok);
  CHECK(!verify_counting_bound({1, 1}, 2).ok);
  CHECK(verify_counting_bound({1}, 7).ok);  // vacuous
  auto rep = verify_counting_bound({1, 4, 64}, 4);
  CHECK(rep.ok);
  CHECK(!verify_counting_bound({1, 4, 15}, 4).ok);  // 15 < 4*4
}

TEST_CASE("barrier property yields a weaker shortening subword") {
  // Whenever the endpoint projections sit more than tau apart, some factor
  // is a (tau - 8 L0 - 8 delta)-shortening word. Tree fixture with L0 = 1.
  Presentation p = f2();
  GroupBall scope = GroupBall::free_scope(p, 40);
  std::vector<Word> U = p.standard_generators();  // L(U, p) = 1
  // Keep only {a, b} as the positive alphabet for SWords.
  std::vector<Word> alphabet = {w(p, "a"), w(p, "b")};
  MovingFamily fam = build_moving_family(scope, w(p, rep(20, "a")), {Word()},
                                         Rational(0));
  Rational tau(12);
  Rational weaker = tau - Rational(8) * Rational(1);  // delta = 0

  SWord long_run(15, 1);  // a^15
  ShorteningVerdict whole = is_shortening_word(scope, alphabet, long_run, fam, 0,
                                               tau, Word(), Rational(0));
  CHECK(whole.proj_gap == 15);

  bool found = false;
  for (std::size_t start = 0; start < long_run.size() && !found; ++start) {
    for (std::size_t len = 1; start + len <= long_run.size() && !found; ++len) {
      SWord factor(long_run.begin() + static_cast<std::ptrdiff_t>(start),
                   long_run.begin() + static_cast<std::ptrdiff_t>(start + len));
      found = is_shortening_word(scope, alphabet, factor, fam, 0, weaker, Word(),
                                 Rational(0))
                  .is_shortening;
    }
  }
  CHECK(found);
}

TEST_CASE("shortening-free words inject into the power-relator quotient") {
  // Family of conjugates of <a^40>; the classical quotient is <a,b | a^40>,
  // verified C'(1/6). Surviving words of length <= 3 stay distinct there.
  Presentation free2 = f2();
  Presentation quotient =
      Presentation::parse("generators: a b\nrelators: " + rep(40, "a") + "\n");
  REQUIRE(check_small_cancellation(quotient, Rational(1, 6), SCVariant::Cprime)
              .verdict);

  GroupBall scope = GroupBall::free_scope(free2, 25);
  std::vector<Word> U = {w(free2, rep(10, "a")), w(free2, rep(10, "b"))};
  MovingFamily fam = fixture_family(scope, free2);

  ShorteningFreeCounts counts = enumerate_shortening_free(
      scope, U, fam, Rational(15), Word(), Rational(1), 3, /*collect_words=*/true);
  REQUIRE(counts.counts.back() == 41);

  DehnReducer reducer(quotient);
  for (std::size_t i = 0; i < counts.words.size(); ++i) {
    for (std::size_t j = i + 1; j < counts.words.size(); ++j) {
      Word gi = sword_eval(U, counts.words[i]);
      Word gj = sword_eval(U, counts.words[j]);
      CHECK(!reducer.words_equal(gi, gj));
    }
  }

  // Control: without the shortening filter the map is not injective.
  CHECK(reducer.words_equal(sword_eval(U, {1, 1}), sword_eval(U, {-1, -1})));
}
