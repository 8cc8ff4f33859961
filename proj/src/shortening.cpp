#include "ggt/shortening.hpp"

#include <algorithm>
#include <unordered_set>

namespace ggt {

namespace {

// Cylinder stand-in: the translated axis line u . axis(h) in the tree,
// walked analytically so the family stays usable at radii far beyond any
// materialised ball. Projection scans the parameter window that can carry
// the nearest point.
struct AxisLine {
  Word base;  // u * conjugator(h): the line passes through base
  Word root;  // primitive root; steps along the line
};

AxisLine axis_line(const MovingFamily::Member& m) {
  auto cf = m.h.cyclic_reduce();
  Word root = m.h.primitive_root();
  return AxisLine{m.conjugator * cf.conjugator, root};
}

Word axis_point(const AxisLine& line, std::int64_t k) {
  std::int64_t len = static_cast<std::int64_t>(line.root.size());
  std::int64_t q = k >= 0 ? k / len : -((-k + len - 1) / len);
  std::int64_t r = k - q * len;  // 0 <= r < len
  return line.base * line.root.pow(q) *
         line.root.subword(0, static_cast<std::size_t>(r));
}

// Shortlex-least nearest vertex on the line.
Word project_to_axis(const AxisLine& line, const Word& x) {
  std::int64_t window =
      static_cast<std::int64_t>(x.size() + line.base.size() + 2 * line.root.size()) + 2;
  int best_d = -1;
  Word best;
  for (std::int64_t k = -window; k <= window; ++k) {
    Word pt = axis_point(line, k);
    int d = static_cast<int>((pt.inverse() * x).size());
    if (best_d < 0 || d < best_d || (d == best_d && shortlex_less(pt, best))) {
      best_d = d;
      best = pt;
    }
  }
  return best;
}

void require_tree_mode(const GroupBall& ball) {
  if (!ball.tree_exact())
    fail("UnsupportedStrategy",
         "moving families run in exact free mode over standard generators");
}

void check_gate(const Rational& tau, const ShorteningGate& gate) {
  if (gate.Delta0 && gate.L0) {
    Rational tau0 = *gate.Delta0 + Rational(2) * *gate.L0 + Rational(223) * gate.delta;
    if (tau < tau0)
      fail("TauBelowGate", "tau = " + tau.str() + " is below the gate " + tau0.str());
  }
}

int tree_dist(const Word& a, const Word& b) {
  return static_cast<int>((a.inverse() * b).size());
}

}  // namespace

bool sword_reduced(const SWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == -w[i - 1]) return false;
  return std::all_of(w.begin(), w.end(), [](int x) { return x != 0; });
}

Word sword_letter(const std::vector<Word>& U, int letter) {
  std::size_t idx = static_cast<std::size_t>((letter > 0 ? letter : -letter) - 1);
  if (idx >= U.size()) fail("InputOutOfRange", "letter index out of range");
  return letter > 0 ? U[idx] : U[idx].inverse();
}

Word sword_eval(const std::vector<Word>& U, const SWord& w) {
  Word out;
  for (int letter : w) out = out * sword_letter(U, letter);
  return out;
}

std::string sword_str(const SWord& w, const std::vector<Word>& U,
                      const Presentation& p) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s.push_back('.');
    s += p.word_str(sword_letter(U, w[i]));
  }
  return s;
}

MovingFamily build_moving_family(const GroupBall& ball, const Word& h,
                                 const std::vector<Word>& conjugators,
                                 const Rational& eps) {
  require_tree_mode(ball);
  Word core = h.cyclic_reduce().core;
  if (core.empty()) fail("NotLoxodromic", "'" + h.str() + "' is not loxodromic");
  if (conjugators.empty()) fail("EmptyFamily", "no conjugators supplied");

  MovingFamily fam;
  fam.eps = eps;
  fam.source_radius = ball.radius();

  // u and u' give the same (subgroup, cylinder) pair iff they differ by an
  // element of the maximal cyclic subgroup E(h).
  for (const Word& u : conjugators) {
    bool dup = false;
    for (const auto& m : fam.members) {
      if (in_elementary_closure(h, m.conjugator.inverse() * u)) {
        dup = true;
        break;
      }
    }
    if (!dup) fam.members.push_back({h, u});
  }

  fam.T_estimate = Rational(static_cast<int>(core.size()));

  // Pairwise overlap of eps-neighbourhoods of the translated axes. At eps = 0
  // this is the diameter of the vertex intersection of the lines, computed on
  // axis segments within the certification radius.
  fam.Delta_estimate = Rational(0);
  if (eps == Rational(0)) {
    std::vector<std::unordered_set<Word, WordHash>> segs;
    std::vector<Word> axis = tree_axis_points(h, fam.source_radius);
    for (const auto& m : fam.members) {
      std::unordered_set<Word, WordHash> set;
      for (const Word& a : axis) set.insert(m.conjugator * a);
      segs.push_back(std::move(set));
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (std::size_t j = i + 1; j < segs.size(); ++j) {
        std::vector<Word> common;
        for (const Word& w : segs[i])
          if (segs[j].count(w)) common.push_back(w);
        for (std::size_t a = 0; a < common.size(); ++a)
          for (std::size_t b = a + 1; b < common.size(); ++b)
            fam.Delta_estimate = Rational::max(
                fam.Delta_estimate, Rational(tree_dist(common[a], common[b])));
      }
    }
  } else {
    // Positive eps needs ambient points; scan a materialised ball.
    const auto& els = ball.elements();
    std::vector<Word> axis = tree_axis_points(h, ball.radius());
    std::vector<std::vector<Word>> hoods;
    for (const auto& m : fam.members) {
      std::vector<Word> hood;
      for (const auto& e : els)
        for (const Word& a : axis)
          if (Rational(tree_dist(e.word, m.conjugator * a)) <= eps) {
            hood.push_back(e.word);
            break;
          }
      hoods.push_back(std::move(hood));
    }
    for (std::size_t i = 0; i < hoods.size(); ++i) {
      std::unordered_set<Word, WordHash> set(hoods[i].begin(), hoods[i].end());
      for (std::size_t j = i + 1; j < hoods.size(); ++j) {
        std::vector<Word> common;
        for (const Word& w : hoods[j])
          if (set.count(w)) common.push_back(w);
        for (std::size_t a = 0; a < common.size(); ++a)
          for (std::size_t b = a + 1; b < common.size(); ++b)
            fam.Delta_estimate = Rational::max(
                fam.Delta_estimate, Rational(tree_dist(common[a], common[b])));
      }
    }
  }
  return fam;
}

SCConditionReport check_sc_condition(const MovingFamily& fam, const Rational& lambda,
                                     const Rational& mu, const Rational& delta) {
  SCConditionReport rep;
  rep.lambda = lambda;
  rep.mu = mu;
  rep.delta = delta;
  rep.Delta_estimate = fam.Delta_estimate;
  rep.T_estimate = fam.T_estimate;
  rep.sc1 = fam.Delta_estimate < lambda * fam.T_estimate;
  rep.sc2 = fam.T_estimate > mu * delta;
  rep.verdict = rep.sc1 && rep.sc2;
  return rep;
}

ShorteningVerdict is_shortening_word(const GroupBall& ball, const std::vector<Word>& U,
                                     const SWord& w, const MovingFamily& fam,
                                     int member, const Rational& tau, const Word& p,
                                     const Rational& alpha,
                                     const ShorteningGate& gate) {
  require_tree_mode(ball);
  check_gate(tau, gate);
  if (!sword_reduced(w) || w.empty())
    fail("NotReducedWord", "input is not a nonempty reduced word over U");
  if (member < 0 || member >= static_cast<int>(fam.members.size()))
    fail("InputOutOfRange", "member index out of range");

  AxisLine line = axis_line(fam.members[static_cast<std::size_t>(member)]);

  Word x0 = p;
  Word xn = sword_eval(U, w) * p;

  ShorteningVerdict v;
  v.member = member;
  v.y0 = project_to_axis(line, x0);
  v.yn = project_to_axis(line, xn);
  v.proj_gap = tree_dist(v.y0, v.yn);

  Word u_first = sword_letter(U, w.front());
  Word u_last = sword_letter(U, w.back());
  Rational half_first(tree_dist(p, u_first * p), 2);
  Rational half_last(tree_dist(p, u_last * p), 2);
  v.margin_start = half_first - alpha - Rational(tree_dist(x0, v.y0));
  v.margin_end = half_last - alpha - Rational(tree_dist(xn, v.yn));

  v.is_shortening = Rational(v.proj_gap) > tau && v.margin_start >= Rational(0) &&
                    v.margin_end >= Rational(0);
  return v;
}

MinimalShortenings find_minimal_shortenings(const GroupBall& ball,
                                            const std::vector<Word>& U,
                                            const MovingFamily& fam, int member,
                                            const Rational& tau, const Word& p,
                                            const Rational& alpha, int max_len,
                                            const ShorteningGate& gate) {
  require_tree_mode(ball);
  check_gate(tau, gate);

  MinimalShortenings out;
  SWord stack;
  int n_letters = static_cast<int>(U.size());

  // Prefix-shortening words cannot extend to minimal ones, so the subtree is
  // pruned at the first hit.
  auto dfs = [&](auto&& self) -> void {
    if (!stack.empty()) {
      auto v = is_shortening_word(ball, U, stack, fam, member, tau, p, alpha, gate);
      if (v.is_shortening) {
        out.words.push_back(stack);
        return;
      }
    }
    if (static_cast<int>(stack.size()) >= max_len) return;
    for (int a = 1; a <= n_letters; ++a) {
      for (int sign = 0; sign < 2; ++sign) {
        int letter = sign ? -a : a;
        if (!stack.empty() && stack.back() == -letter) continue;
        stack.push_back(letter);
        self(self);
        stack.pop_back();
      }
    }
  };
  dfs(dfs);
  out.at_most_two = out.words.size() <= 2;
  return out;
}

ShorteningFreeCounts enumerate_shortening_free(const GroupBall& ball,
                                               const std::vector<Word>& U,
                                               const MovingFamily& fam,
                                               const Rational& tau, const Word& p,
                                               const Rational& alpha, int n,
                                               bool collect_words,
                                               const ShorteningGate& gate) {
  require_tree_mode(ball);
  check_gate(tau, gate);
  if (n < 0) fail("InputOutOfRange", "n must be >= 0");

  ShorteningFreeCounts out;

  // Factors used for exclusion: every shortening word has a minimal
  // shortening prefix, so scanning for minimal factors is complete.
  for (int m = 0; m < static_cast<int>(fam.members.size()); ++m) {
    auto minimal = find_minimal_shortenings(ball, U, fam, m, tau, p, alpha, n, gate);
    for (const SWord& w : minimal.words) out.minimal_words.emplace_back(m, w);
  }
  // A word shortening over two distinct members would contradict the
  // fellow-travelling bound; verify on every minimal witness.
  for (const auto& [m, w] : out.minimal_words) {
    for (int m2 = 0; m2 < static_cast<int>(fam.members.size()); ++m2) {
      if (m2 == m) continue;
      if (is_shortening_word(ball, U, w, fam, m2, tau, p, alpha, gate).is_shortening)
        out.member_unique = false;
    }
  }

  out.counts.assign(static_cast<std::size_t>(n) + 1, 0);
  out.counts[0] = 1;  // empty word
  if (collect_words) out.words.push_back({});

  int n_letters = static_cast<int>(U.size());
  SWord stack;
  auto has_new_factor = [&]() {
    // A forbidden factor completed by the last letter is a suffix of the
    // current prefix.
    for (const auto& [m, f] : out.minimal_words) {
      if (f.size() > stack.size()) continue;
      if (std::equal(f.begin(), f.end(), stack.end() - static_cast<std::ptrdiff_t>(f.size())))
        return true;
    }
    return false;
  };
  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(stack.size()) >= n) return;
    for (int a = 1; a <= n_letters; ++a) {
      for (int sign = 0; sign < 2; ++sign) {
        int letter = sign ? -a : a;
        if (!stack.empty() && stack.back() == -letter) continue;
        stack.push_back(letter);
        if (!has_new_factor()) {
          ++out.counts[stack.size()];
          if (collect_words) out.words.push_back(stack);
          self(self);
        }
        stack.pop_back();
      }
    }
  };
  dfs(dfs);

  for (std::size_t k = 1; k < out.counts.size(); ++k) out.counts[k] += out.counts[k - 1];
  return out;
}

CountingBoundReport verify_counting_bound(const std::vector<std::uint64_t>& counts,
                                          std::uint64_t U_size) {
  CountingBoundReport rep;
  for (std::size_t k = 0; k + 1 < counts.size(); ++k) {
    bool ok = counts[k + 1] >= U_size * counts[k];
    rep.step_ok.push_back(ok);
    rep.ok = rep.ok && ok;
  }
  unsigned __int128 power = 1;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    bool ok = static_cast<unsigned __int128>(counts[k]) >= power;
    rep.power_ok.push_back(ok);
    rep.ok = rep.ok && ok;
    power *= U_size;
  }
  return rep;
}

}  // namespace ggt
