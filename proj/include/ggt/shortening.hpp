#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ggt/freesets.hpp"
#include "ggt/hypgeom.hpp"
#include "ggt/rational.hpp"

namespace ggt {

// A word over the alphabet U u U^{-1}, stored as signed indices: +(i+1) for
// U[i], -(i+1) for U[i]^{-1}. Reduced means no letter is followed by its
// inverse.
using SWord = std::vector<int>;

bool sword_reduced(const SWord& w);
Word sword_eval(const std::vector<Word>& U, const SWord& w);
Word sword_letter(const std::vector<Word>& U, int letter);
std::string sword_str(const SWord& w, const std::vector<Word>& U,
                      const Presentation& p);

// Finite list of (conjugate cyclic subgroup, translated axis) pairs standing
// in for a conjugation-invariant family. Cylinders are approximated by axis
// sets; conjugators are enumerated up to the ball radius, so the listed
// family is a finite slice of the full orbit.
struct MovingFamily {
  struct Member {
    Word h;           // generator of the base cyclic subgroup
    Word conjugator;  // u, representing (u<h>u^{-1}, u . axis(h))
  };
  std::vector<Member> members;
  Rational T_estimate;      // min translation length (exact in tree mode)
  Rational Delta_estimate;  // max pairwise diameter of eps-neighbourhood overlaps
  Rational eps;
  int source_radius = 0;
};

MovingFamily build_moving_family(const GroupBall& ball, const Word& h,
                                 const std::vector<Word>& conjugators,
                                 const Rational& eps);

struct SCConditionReport {
  bool sc1 = false;  // Delta < lambda T
  bool sc2 = false;  // T > mu delta
  bool verdict = false;
  Rational lambda, mu, delta;
  Rational Delta_estimate, T_estimate;
};

SCConditionReport check_sc_condition(const MovingFamily& fam, const Rational& lambda,
                                     const Rational& mu, const Rational& delta);

// Optional gate tau >= Delta0 + 2 L0 + 223 delta, checked when the caller
// supplies the constants; tree fixtures may run below the gate and then the
// reports carry the margins.
struct ShorteningGate {
  std::optional<Rational> Delta0;
  std::optional<Rational> L0;
  Rational delta = Rational(0);
};

struct ShorteningVerdict {
  bool is_shortening = false;
  Word y0, yn;        // projections of p and wp on the member cylinder
  int proj_gap = 0;   // |y0 - yn|
  Rational margin_start, margin_end;  // S2 slacks (nonnegative iff satisfied)
  int member = -1;
};

// S1: the projections of the endpoints are more than tau apart.
// S2: both endpoints start within half their letter displacement minus alpha
// of the cylinder. Projections take the shortlex-least nearest axis point.
ShorteningVerdict is_shortening_word(const GroupBall& ball, const std::vector<Word>& U,
                                     const SWord& w, const MovingFamily& fam,
                                     int member, const Rational& tau, const Word& p,
                                     const Rational& alpha,
                                     const ShorteningGate& gate = {});

struct MinimalShortenings {
  std::vector<SWord> words;
  bool at_most_two = true;  // property failure if false on a valid input
};

// All shortening words over the member none of whose proper prefixes are
// shortening, up to the given length.
MinimalShortenings find_minimal_shortenings(const GroupBall& ball,
                                            const std::vector<Word>& U,
                                            const MovingFamily& fam, int member,
                                            const Rational& tau, const Word& p,
                                            const Rational& alpha, int max_len,
                                            const ShorteningGate& gate = {});

struct ShorteningFreeCounts {
  std::vector<std::uint64_t> counts;  // |F(tau) n B_U(k)| for k = 0..n
  std::vector<SWord> words;           // populated when collect_words is set
  std::vector<std::pair<int, SWord>> minimal_words;  // (member, word) factors used
  bool member_unique = true;  // no minimal word flagged over two members
};

// A reduced word is excluded iff some factor is a shortening word over some
// listed member; exclusion is detected through minimal shortening factors.
// Counts are exact relative to the listed (finite) family: the full orbit
// could only exclude more, so each count upper-bounds the full-family count.
ShorteningFreeCounts enumerate_shortening_free(const GroupBall& ball,
                                               const std::vector<Word>& U,
                                               const MovingFamily& fam,
                                               const Rational& tau, const Word& p,
                                               const Rational& alpha, int n,
                                               bool collect_words = false,
                                               const ShorteningGate& gate = {});

struct CountingBoundReport {
  bool ok = true;
  std::vector<bool> step_ok;   // counts[k+1] >= |U| counts[k]
  std::vector<bool> power_ok;  // counts[k] >= |U|^k
};

CountingBoundReport verify_counting_bound(const std::vector<std::uint64_t>& counts,
                                          std::uint64_t U_size);

}  // namespace ggt
