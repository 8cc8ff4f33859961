#include "ggt/freesets.hpp"

#include <algorithm>
#include <unordered_set>

namespace ggt {

ReducedReport check_reduced(const GroupBall& ball, const std::vector<Word>& U,
                            const Word& p, const Rational& alpha,
                            const Rational& delta) {
  if (alpha < Rational(3) * delta)
    fail("InputOutOfRange", "reduced-set condition needs alpha >= 3 delta");
  if (U.empty()) fail("EmptyGeneratingSet", "empty set");

  ReducedReport rep;
  rep.alpha = alpha;
  rep.delta = delta;
  rep.basepoint = p;

  for (const Word& u : U) {
    for (const Word& v : U) {
      if (u.inverse() == v) {
        rep.inverse_clash = true;
        rep.failing_pair = {u, v};
      }
    }
  }

  std::vector<Word> v_set = U;
  for (const Word& u : U) v_set.push_back(u.inverse());

  auto disp = [&](const Word& u) {
    auto d = ball.distance(p, u * p);
    if (!d) fail("OutOfRange", "displacement of '" + u.str() + "' does not resolve");
    return *d;
  };
  for (const Word& u : v_set) rep.displacements.emplace_back(u, disp(u));

  bool pairs_ok = true;
  for (std::size_t i = 0; i < v_set.size(); ++i) {
    for (std::size_t j = i + 1; j < v_set.size(); ++j) {
      const Word &u1 = v_set[i], &u2 = v_set[j];
      if (u1 == u2) continue;  // U n U^{-1} clash already reported
      Rational product = gromov_product(ball, u1 * p, u2 * p, p);
      Rational threshold =
          Rational(std::min(rep.displacements[i].second, rep.displacements[j].second), 2) -
          alpha - Rational(50) * delta;
      bool ok = product < threshold;
      rep.pair_margins.push_back({u1, u2, product, threshold, ok});
      if (!ok && pairs_ok) {
        pairs_ok = false;
        if (!rep.failing_pair) rep.failing_pair = {u1, u2};
      }
    }
  }
  rep.verdict = pairs_ok && !rep.inverse_clash;

  if (rep.verdict) {
    Rational floor = Rational(2) * (alpha + Rational(50) * delta);
    for (const auto& [u, d] : rep.displacements)
      if (Rational(d) <= floor) rep.displacement_floor_ok = false;
  }
  return rep;
}

ElementaryClasses classes_mod_elementary(const std::vector<Word>& U, const Word& g) {
  if (g.cyclic_reduce().core.empty())
    fail("NotLoxodromic", "'" + g.str() + "' is not loxodromic");
  ElementaryClasses out;
  for (const Word& u : U) {
    bool placed = false;
    for (std::size_t c = 0; c < out.representatives.size() && !placed; ++c) {
      if (in_elementary_closure(g, out.representatives[c].inverse() * u)) {
        out.classes[c].push_back(u);
        placed = true;
      }
    }
    if (!placed) {
      out.representatives.push_back(u);
      out.classes.push_back({u});
    }
  }
  return out;
}

Rational pingpong_b0(const Rational& stable_tlen_g, const Rational& delta_g,
                     const Rational& energy_LUp, const Rational& delta,
                     const Rational& alpha) {
  if (stable_tlen_g <= Rational(0))
    fail("NonPositiveTranslation", "stable translation length must be positive");
  if (delta_g < Rational(0) || energy_LUp < Rational(0) || delta < Rational(0) ||
      alpha < Rational(0))
    fail("InputOutOfRange", "inputs must be nonnegative");
  return Rational(2) / stable_tlen_g *
         (delta_g + Rational(5) * energy_LUp + Rational(104) * delta + alpha);
}

PingpongResult build_pingpong_set(const GroupBall& ball, const std::vector<Word>& U,
                                  const Word& g, int b, const Rational& alpha,
                                  const Rational& delta) {
  if (ball.strategy() != WordProblem::FreeGroup)
    fail("UnsupportedStrategy", "ping-pong construction runs in exact free mode");
  Word core = g.cyclic_reduce().core;
  if (core.empty()) fail("NotLoxodromic", "'" + g.str() + "' is not loxodromic");
  if (b < 1) fail("InputOutOfRange", "exponent b must be >= 1");

  PingpongResult result;
  ElementaryClasses classes = classes_mod_elementary(U, g);

  Word p;  // identity basepoint
  int energy = 0;
  for (const Word& u : U) {
    auto d = ball.distance(p, u * p);
    if (!d) fail("OutOfRange", "displacement of '" + u.str() + "' does not resolve");
    energy = std::max(energy, *d);
  }
  result.energy_LUp = Rational(energy);

  // Fellow-travelling estimate across the class representatives, from axis
  // segments inside the certification radius. Vertex sets of distinct
  // translated axes in a tree meet in at most a segment; the diameter of the
  // intersection is the estimate.
  Rational delta_g(0);
  {
    std::vector<Word> axis = tree_axis_points(g, ball.radius());
    std::vector<std::unordered_set<Word, WordHash>> translated;
    for (const Word& u : classes.representatives) {
      std::unordered_set<Word, WordHash> set;
      for (const Word& a : axis) set.insert(u * a);
      translated.push_back(std::move(set));
    }
    for (std::size_t i = 0; i < translated.size(); ++i) {
      for (std::size_t j = i + 1; j < translated.size(); ++j) {
        std::vector<Word> common;
        for (const Word& w : translated[i])
          if (translated[j].count(w)) common.push_back(w);
        for (std::size_t a = 0; a < common.size(); ++a)
          for (std::size_t c = a + 1; c < common.size(); ++c)
            delta_g = Rational::max(
                delta_g, Rational(static_cast<int>((common[a].inverse() * common[c]).size())));
      }
    }
  }
  result.delta_g_estimate = delta_g;

  result.b0 = pingpong_b0(Rational(static_cast<int>(core.size())), delta_g,
                          result.energy_LUp, delta, alpha);
  result.b_below_threshold = Rational(b) < result.b0;

  Word gb = g.pow(b);
  for (const Word& u : classes.representatives) result.set.push_back(u * gb * u.inverse());

  std::unordered_set<Word, WordHash> distinct(result.set.begin(), result.set.end());
  if (distinct.size() != result.set.size())
    fail("Internal", "conjugates of g^b collided across elementary classes");

  result.report = check_reduced(ball, result.set, p, alpha, delta);
  return result;
}

}  // namespace ggt
