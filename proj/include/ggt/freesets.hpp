#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ggt/hypgeom.hpp"
#include "ggt/rational.hpp"

namespace ggt {

// Verdict on the reduced-set condition: U and U^{-1} disjoint and every pair
// of distinct u1, u2 in U u U^{-1} satisfies
//   (u1 p, u2 p)_p < min{|u1 p - p|, |u2 p - p|}/2 - alpha - 50 delta.
struct ReducedReport {
  Rational alpha;
  Rational delta;
  Word basepoint;
  struct PairMargin {
    Word u1, u2;
    Rational product;    // (u1 p, u2 p)_p
    Rational threshold;  // min displacement / 2 - alpha - 50 delta
    bool ok;
  };
  std::vector<PairMargin> pair_margins;
  std::vector<std::pair<Word, int>> displacements;  // |u p - p| per u in U u U^{-1}
  bool inverse_clash = false;                       // U n U^{-1} nonempty
  bool verdict = false;
  std::optional<std::pair<Word, Word>> failing_pair;
  bool displacement_floor_ok = true;  // |u p - p| > 2 (alpha + 50 delta) when verified
};

ReducedReport check_reduced(const GroupBall& ball, const std::vector<Word>& U,
                            const Word& p, const Rational& alpha,
                            const Rational& delta);

struct ElementaryClasses {
  std::vector<Word> representatives;          // one per class, in U order
  std::vector<std::vector<Word>> classes;     // full class per representative
};

// Classes of U modulo u ~ v iff u^{-1} v lies in E(g), the maximal cyclic
// subgroup containing g; exact in free groups via primitive roots.
ElementaryClasses classes_mod_elementary(const std::vector<Word>& U, const Word& g);

// b0 = (2 / |g|_inf) [Delta(g) + 5 L(U,p) + 104 delta + alpha].
Rational pingpong_b0(const Rational& stable_tlen_g, const Rational& delta_g,
                     const Rational& energy_LUp, const Rational& delta,
                     const Rational& alpha);

struct PingpongResult {
  std::vector<Word> set;  // {u g^b u^{-1} : u in U(g)}
  ReducedReport report;   // re-verified, never trusted
  Rational b0;
  bool b_below_threshold = false;  // warning; construction still ran
  Rational delta_g_estimate;
  Rational energy_LUp;
};

// Conjugates of g^b across the elementary classes of U; verified alpha-reduced
// at the identity basepoint.
PingpongResult build_pingpong_set(const GroupBall& ball, const std::vector<Word>& U,
                                  const Word& g, int b, const Rational& alpha,
                                  const Rational& delta);

}  // namespace ggt
