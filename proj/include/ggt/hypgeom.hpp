#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ggt/cayley.hpp"
#include "ggt/rational.hpp"

namespace ggt {

// (x, y)_z = (|x-z| + |y-z| - |x-y|) / 2, a half-integer in graph metrics.
Rational gromov_product(const GroupBall& ball, const Word& x, const Word& y,
                        const Word& z);

enum class DeltaMode { Auto, Exhaustive, Sampled };

struct DeltaReport {
  Rational delta;            // four-point defect, clamped at 0
  bool exhaustive = false;   // certified for the scanned ball when true
  std::uint64_t scanned = 0;
  std::uint64_t skipped = 0;  // quadruples with an unresolvable distance
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Max over quadruples (x, y, z, t) of min{(x,y)_t, (y,z)_t} - (x,z)_t.
// Quadruples whose six distances do not all resolve in the ball are skipped
// and counted; they are outside the certification region. Auto mode scans
// exhaustively up to the quadruple cap and samples beyond it.
DeltaReport estimate_delta(const GroupBall& ball, DeltaMode mode = DeltaMode::Auto,
                           std::uint64_t samples = 0, std::uint64_t seed = 0);

constexpr std::uint64_t kDeltaQuadrupleCap = 20'000'000;

struct EnergyReport {
  std::vector<std::pair<Word, int>> per_point;  // L(U, x) per scanned point
  int min_value = 0;                            // L(U) estimate over the scan set
  Word argmin;                                  // shortlex-least minimiser
  std::vector<Word> skipped;                    // scan points with unresolvable u*x
  int scan_limit = 0;                           // points at distance <= this scanned
};

// L(U, x) = max_u d(x, ux); the scan covers ball points at distance
// <= radius - max|u| so that every displacement stays resolvable.
EnergyReport energy_profile(const GroupBall& ball, const std::vector<Word>& U);

struct TranslationReport {
  Rational tlen;    // min displacement over the certification region
  bool exact = false;  // tree mode: equals the cyclically reduced length
  std::vector<std::pair<int, Rational>> stable_samples;  // (n, |g^n x0 - x0| / n)
  Rational stable_lower;  // bracket for the stable translation length
  Rational stable_upper;
};

// Stable length bracket: every |g^n x0 - x0|/n upper-bounds the limit; the
// lower endpoint uses the 16-delta gap between translation length and stable
// translation length applied to powers (exact with slack 0 on trees).
TranslationReport translation_lengths(const GroupBall& ball, const Word& g,
                                      int power_cap,
                                      const Rational& delta = Rational(0));

struct FellowTravelReport {
  Rational value;  // max over admissible pairs of diam of the intersection
  std::vector<std::pair<Word, Word>> filtered;  // (kept, dropped) equivalent pairs
  std::vector<Word> admissible;                 // translates actually used
  std::uint64_t axis_size = 0;
};

// Delta(g) over the supplied translates: diameters of intersections of
// eps-neighbourhoods of translated axis sets, computed inside the ball.
// diam of an empty intersection is 0. Translates equivalent modulo the
// maximal cyclic subgroup of g are filtered out and reported.
FellowTravelReport fellow_travelling_delta(const GroupBall& ball, const Word& g,
                                           const std::vector<Word>& translates,
                                           const Rational& eps,
                                           const Rational& delta = Rational(0));

// Free-group elementary closure E(g) = c <root> c^{-1} for g = c core c^{-1}.
bool in_elementary_closure(const Word& g, const Word& w);

// Vertices of the axis of g in the tree within the given word-length bound:
// the line c root^Z c^{-1}-orbit path through c.
std::vector<Word> tree_axis_points(const Word& g, int length_bound);

}  // namespace ggt
