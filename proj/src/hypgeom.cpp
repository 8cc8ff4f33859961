#include "ggt/hypgeom.hpp"

#include <algorithm>
#include <climits>
#include <random>

#include "ggt/parallel.hpp"

namespace ggt {

namespace {

int resolvable_or_fail(const GroupBall& ball, const Word& a, const Word& b) {
  auto d = ball.distance(a, b);
  if (!d)
    fail("OutOfRange", "distance between '" + a.str() + "' and '" + b.str() +
                           "' does not resolve in the ball");
  return *d;
}

}  // namespace

Rational gromov_product(const GroupBall& ball, const Word& x, const Word& y,
                        const Word& z) {
  int dxz = resolvable_or_fail(ball, x, z);
  int dyz = resolvable_or_fail(ball, y, z);
  int dxy = resolvable_or_fail(ball, x, y);
  return Rational(dxz + dyz - dxy, 2);
}

DeltaReport estimate_delta(const GroupBall& ball, DeltaMode mode,
                           std::uint64_t samples, std::uint64_t seed) {
  const auto& els = ball.elements();
  const std::int64_t n = static_cast<std::int64_t>(els.size());
  DeltaReport rep;
  rep.seed = seed;
  if (n == 0) fail("InputOutOfRange", "empty ball");

  // Pairwise distance table; -1 marks pairs outside the certification region.
  std::vector<int> dist(static_cast<std::size_t>(n * n), -1);
  for (std::int64_t i = 0; i < n; ++i) {
    dist[static_cast<std::size_t>(i * n + i)] = 0;
    for (std::int64_t j = i + 1; j < n; ++j) {
      auto d = ball.distance(els[static_cast<std::size_t>(i)].word,
                             els[static_cast<std::size_t>(j)].word);
      int v = d ? *d : -1;
      dist[static_cast<std::size_t>(i * n + j)] = v;
      dist[static_cast<std::size_t>(j * n + i)] = v;
    }
  }

  const std::uint64_t total = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
                              static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  bool exhaustive = mode == DeltaMode::Exhaustive ||
                    (mode == DeltaMode::Auto && total <= kDeltaQuadrupleCap);

  struct Acc {
    int best2 = 0;  // doubled four-point defect
    std::uint64_t scanned = 0;
  };

  if (exhaustive) {
    // For fixed t the defect is max over (x,y,z) of
    // min{(x,y)_t, (y,z)_t} - (x,z)_t on doubled Gromov products.
    auto chunk = [&](std::int64_t t_lo, std::int64_t t_hi) {
      Acc acc;
      std::vector<int> gp(static_cast<std::size_t>(n * n));
      for (std::int64_t t = t_lo; t < t_hi; ++t) {
        const int* dt = &dist[static_cast<std::size_t>(t * n)];
        for (std::int64_t x = 0; x < n; ++x) {
          const int* dx = &dist[static_cast<std::size_t>(x * n)];
          int* row = &gp[static_cast<std::size_t>(x * n)];
          for (std::int64_t y = 0; y < n; ++y) {
            row[y] = (dt[x] < 0 || dt[y] < 0 || dx[y] < 0)
                         ? INT_MIN
                         : dt[x] + dt[y] - dx[y];
          }
        }
        for (std::int64_t x = 0; x < n; ++x) {
          const int* ax = &gp[static_cast<std::size_t>(x * n)];
          for (std::int64_t z = 0; z < n; ++z) {
            int axz = ax[z];
            if (axz == INT_MIN) continue;
            const int* col = gp.data() + z;
            for (std::int64_t y = 0; y < n; ++y) {
              int axy = ax[y];
              int ayz = col[static_cast<std::size_t>(y * n)];
              if (axy == INT_MIN || ayz == INT_MIN) continue;
              ++acc.scanned;
              int defect = std::min(axy, ayz) - axz;
              if (defect > acc.best2) acc.best2 = defect;
            }
          }
        }
      }
      return acc;
    };
    Acc total_acc = parallel_reduce(
        n, Acc{}, chunk, [](Acc a, Acc b) {
          return Acc{std::max(a.best2, b.best2), a.scanned + b.scanned};
        });
    rep.exhaustive = true;
    rep.scanned = total_acc.scanned;
    rep.skipped = total - total_acc.scanned;
    rep.delta = Rational(std::max(total_acc.best2, 0), 2);
    return rep;
  }

  std::uint64_t count = samples > 0 ? samples : kDeltaQuadrupleCap;
  rep.samples = count;
  std::mt19937_64 rng(seed);
  auto draw = [&]() { return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n)); };
  int best2 = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::int64_t x = draw(), y = draw(), z = draw(), t = draw();
    auto at = [&](std::int64_t a, std::int64_t b) {
      return dist[static_cast<std::size_t>(a * n + b)];
    };
    if (at(x, t) < 0 || at(y, t) < 0 || at(z, t) < 0 || at(x, y) < 0 ||
        at(y, z) < 0 || at(x, z) < 0) {
      ++rep.skipped;
      continue;
    }
    ++rep.scanned;
    int axy = at(x, t) + at(y, t) - at(x, y);
    int ayz = at(y, t) + at(z, t) - at(y, z);
    int axz = at(x, t) + at(z, t) - at(x, z);
    best2 = std::max(best2, std::min(axy, ayz) - axz);
  }
  rep.delta = Rational(std::max(best2, 0), 2);
  return rep;
}

EnergyReport energy_profile(const GroupBall& ball, const std::vector<Word>& U) {
  if (U.empty()) fail("EmptyGeneratingSet", "energy of an empty set");
  const auto& els = ball.elements();

  int max_u = 0;
  for (const Word& u : U) {
    auto d = ball.distance(Word(), u);
    if (!d) fail("OutOfRange", "generator '" + u.str() + "' lies outside the ball");
    max_u = std::max(max_u, *d);
  }

  EnergyReport rep;
  rep.scan_limit = ball.radius() - max_u;
  bool have_min = false;
  for (const auto& e : els) {
    if (e.dist > rep.scan_limit) continue;
    int value = 0;
    bool ok = true;
    for (const Word& u : U) {
      auto d = ball.distance(e.word, u * e.word);
      if (!d) {
        ok = false;
        break;
      }
      value = std::max(value, *d);
    }
    if (!ok) {
      rep.skipped.push_back(e.word);
      continue;
    }
    rep.per_point.emplace_back(e.word, value);
    if (!have_min || value < rep.min_value ||
        (value == rep.min_value && shortlex_less(e.word, rep.argmin))) {
      rep.min_value = value;
      rep.argmin = e.word;
      have_min = true;
    }
  }
  if (!have_min)
    fail("OutOfRange", "no scan point resolves all displacements");
  return rep;
}

TranslationReport translation_lengths(const GroupBall& ball, const Word& g,
                                      int power_cap, const Rational& delta) {
  if (g.empty()) fail("IdentityElement", "translation length of the identity");
  if (power_cap < 1) fail("InputOutOfRange", "power_cap must be >= 1");

  TranslationReport rep;
  if (ball.tree_exact()) {
    auto cf = g.cyclic_reduce();
    rep.exact = true;
    rep.tlen = Rational(static_cast<int>(cf.core.size()));
    Word gn;
    Rational upper;
    bool first = true;
    for (int k = 1; k <= power_cap; ++k) {
      gn = gn * g;
      Rational sample(static_cast<int>(gn.size()), k);
      rep.stable_samples.emplace_back(k, sample);
      upper = first ? sample : Rational::min(upper, sample);
      first = false;
    }
    rep.stable_lower = rep.tlen;  // cyclically reduced length is the limit
    rep.stable_upper = upper;
    return rep;
  }

  const auto& els = ball.elements();
  auto min_displacement = [&](const Word& h) -> std::optional<int> {
    std::optional<int> best;
    for (const auto& e : els) {
      auto d = ball.distance(e.word, h * e.word);
      if (d && (!best || *d < *best)) best = d;
    }
    return best;
  };

  auto t1 = min_displacement(g);
  if (!t1) fail("OutOfRange", "no displacement of g resolves in the ball");
  rep.tlen = Rational(*t1);

  Word gn;
  Rational lower(0);
  Rational upper;
  bool first = true;
  for (int k = 1; k <= power_cap; ++k) {
    gn = gn * g;
    auto a = ball.distance(Word(), gn);
    if (!a) fail("OutOfRange", "power g^" + std::to_string(k) + " escapes the ball");
    Rational sample(*a, k);
    rep.stable_samples.emplace_back(k, sample);
    upper = first ? sample : Rational::min(upper, sample);
    first = false;
    auto tk = min_displacement(gn);
    if (tk) {
      // n |g|_inf = |g^n|_inf >= |g^n| - 16 delta, with |g^n| read off the
      // scanned minimum.
      lower = Rational::max(lower, (Rational(*tk) - Rational(16) * delta) / Rational(k));
    }
  }
  rep.stable_lower = lower;
  rep.stable_upper = upper;
  return rep;
}

bool in_elementary_closure(const Word& g, const Word& w) {
  auto cf = g.cyclic_reduce();
  Word root = g.primitive_root();
  if (root.empty()) fail("NotLoxodromic", "elementary closure of an elliptic element");
  Word t = cf.conjugator.inverse() * w * cf.conjugator;
  if (t.empty()) return true;
  if (t.size() % root.size() != 0) return false;
  std::int64_t k = static_cast<std::int64_t>(t.size() / root.size());
  return t == root.pow(k) || t == root.pow(-k);
}

std::vector<Word> tree_axis_points(const Word& g, int length_bound) {
  auto cf = g.cyclic_reduce();
  Word root = g.primitive_root();
  if (root.empty()) fail("NotLoxodromic", "axis of an elliptic element");
  std::vector<Word> points;
  for (int dir = 0; dir < 2; ++dir) {
    Word step = dir == 0 ? root : root.inverse();
    Word cur = cf.conjugator;
    int budget = length_bound + 2 * static_cast<int>(cf.conjugator.size()) +
                 2 * static_cast<int>(root.size());
    for (int m = 0; m <= budget; ++m) {
      if (static_cast<int>(cur.size()) <= length_bound &&
          (dir == 0 || m > 0))  // skip the duplicate base point
        points.push_back(cur);
      Letter next = step.at(static_cast<std::size_t>(m % static_cast<int>(step.size())));
      cur = cur * Word::reduce({next});
    }
  }
  return points;
}

FellowTravelReport fellow_travelling_delta(const GroupBall& ball, const Word& g,
                                           const std::vector<Word>& translates,
                                           const Rational& eps,
                                           const Rational& delta) {
  if (ball.strategy() != WordProblem::FreeGroup)
    fail("UnsupportedStrategy",
         "fellow-travelling constants need exact elementary closures (free mode)");
  Word core = g.cyclic_reduce().core;
  if (core.empty()) fail("NotLoxodromic", "'" + g.str() + "' is not loxodromic");

  FellowTravelReport rep;

  for (const Word& u : translates) {
    bool dup = false;
    for (const Word& kept : rep.admissible) {
      if (in_elementary_closure(g, kept.inverse() * u)) {
        rep.filtered.emplace_back(kept, u);
        dup = true;
        break;
      }
    }
    if (!dup) rep.admissible.push_back(u);
  }

  const auto& els = ball.elements();
  Rational tlen = ball.tree_exact() ? Rational(static_cast<int>(core.size()))
                                    : Rational(0);
  if (!ball.tree_exact()) {
    std::optional<int> best;
    for (const auto& e : els) {
      auto d = ball.distance(e.word, g * e.word);
      if (d && (!best || *d < *best)) best = d;
    }
    if (!best) fail("OutOfRange", "no displacement of g resolves in the ball");
    tlen = Rational(*best);
  }
  Rational slack = Rational(8) * delta;

  std::vector<int> axis;
  for (int i = 0; i < static_cast<int>(els.size()); ++i) {
    auto d = ball.distance(els[static_cast<std::size_t>(i)].word,
                           g * els[static_cast<std::size_t>(i)].word);
    if (d && Rational(*d) <= tlen + slack) axis.push_back(i);
  }
  rep.axis_size = axis.size();

  // Translated axis sets, then eps-neighbourhoods inside the ball.
  auto neighbourhood = [&](const Word& u) {
    std::vector<int> shifted;
    for (int i : axis) {
      auto id = ball.locate(u * els[static_cast<std::size_t>(i)].word);
      if (id) shifted.push_back(*id);
    }
    std::vector<bool> in_n(els.size(), false);
    for (int y = 0; y < static_cast<int>(els.size()); ++y) {
      for (int s : shifted) {
        auto d = ball.distance(els[static_cast<std::size_t>(y)].word,
                               els[static_cast<std::size_t>(s)].word);
        if (d && Rational(*d) <= eps) {
          in_n[static_cast<std::size_t>(y)] = true;
          break;
        }
      }
    }
    return in_n;
  };

  std::vector<std::vector<bool>> hoods;
  hoods.reserve(rep.admissible.size());
  for (const Word& u : rep.admissible) hoods.push_back(neighbourhood(u));

  rep.value = Rational(0);
  for (std::size_t a = 0; a < hoods.size(); ++a) {
    for (std::size_t b = a + 1; b < hoods.size(); ++b) {
      std::vector<int> common;
      for (int i = 0; i < static_cast<int>(els.size()); ++i)
        if (hoods[a][static_cast<std::size_t>(i)] && hoods[b][static_cast<std::size_t>(i)])
          common.push_back(i);
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          auto d = ball.distance(els[static_cast<std::size_t>(common[i])].word,
                                 els[static_cast<std::size_t>(common[j])].word);
          if (d) rep.value = Rational::max(rep.value, Rational(*d));
        }
      }
    }
  }
  return rep;
}

}  // namespace ggt
