#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ggt/smallcancel.hpp"
#include "ggt/words.hpp"

namespace ggt {

enum class WordProblem { FreeGroup, DehnC16 };

// Finite radius-R ball of <U> in the U-word metric, with canonical
// representatives and a distance oracle. Elements carry the shortlex-least
// word among the discovered geodesic spellings.
//
// For free presentations with U the standard generators the ball is a tree
// and distances between arbitrary words are exact; free_scope() builds an
// unmaterialised ball for that mode so fixtures whose radius exceeds the
// element cap stay usable. Operations that scan ball points require a
// materialised ball.
class GroupBall {
 public:
  struct Element {
    Word word;  // canonical representative
    int dist;   // distance from the identity in the U-metric
  };

  static constexpr std::size_t kDefaultCap = 1'000'000;

  static GroupBall enumerate(const Presentation& p, std::vector<Word> generators,
                             int radius, std::size_t cap = kDefaultCap);

  // Unmaterialised tree scope over the standard generators; free
  // presentations only.
  static GroupBall free_scope(const Presentation& p, int radius);

  WordProblem strategy() const { return strategy_; }
  int radius() const { return radius_; }
  bool materialized() const { return materialized_; }
  bool tree_exact() const { return tree_exact_; }

  const Presentation& presentation() const { return *presentation_; }
  const std::vector<Word>& generators() const { return generators_; }
  const DehnReducer& reducer() const { return *reducer_; }

  const std::vector<Element>& elements() const;
  std::size_t size() const { return elements().size(); }
  std::vector<std::size_t> sphere_sizes() const;  // |S(n)| for n = 0..radius
  std::vector<std::size_t> ball_sizes() const;    // |B(n)| for n = 0..radius

  // Index of the element equal to w, if w lies in the ball.
  std::optional<int> locate(const Word& w) const;

  // d(g, h) = |g^{-1} h| in the U-metric when the difference lies in the
  // ball; nullopt (OutOfRange) otherwise. OutOfRange is a value here, not a
  // failure.
  std::optional<int> distance(const Word& g, const Word& h) const;

  // Exact tree distance |g^{-1} h|; only valid in tree-exact mode and
  // independent of the radius.
  int exact_tree_distance(const Word& g, const Word& h) const;

 private:
  GroupBall() = default;

  void insert_element(Word w, int dist);
  std::optional<int> find_in(const Word& w, int lo_dist, int hi_dist) const;

  std::shared_ptr<const Presentation> presentation_;
  std::shared_ptr<const DehnReducer> reducer_;
  std::vector<Word> generators_;
  int radius_ = 0;
  WordProblem strategy_ = WordProblem::FreeGroup;
  bool materialized_ = false;
  bool tree_exact_ = false;

  std::vector<Element> elements_;
  std::vector<std::vector<int>> spheres_;
  std::unordered_map<Word, int, WordHash> by_word_;          // FreeGroup
  std::map<std::vector<std::int32_t>, std::vector<int>> by_abelianization_;  // DehnC16
};

struct FreeSetCertificate {
  std::vector<Word> set;   // S, a reduced set freely generating a semigroup
  int power = 1;           // c with S contained in U^c
  std::string provenance;  // how the certificate was obtained
};

struct GrowthReport {
  std::vector<std::uint64_t> ball_sizes;  // |B(n)|, n = 0..radius
  std::vector<double> fekete_upper;       // (1/n) log|B(n)|, n = 1..radius
  double lower_bound = 0.0;               // (1/c) log|S| from the certificate
  std::string lower_provenance;
  double psg_ratio = 0.0;                 // lower_bound / log|U|
  bool fekete_valid = true;               // |B(m+n)| <= |B(m)| |B(n)| checked
};

// Upper bounds follow from subadditivity of log|B(n)|; the certified lower
// bound uses that positive words over a reduced set evaluate injectively.
GrowthReport growth_rate_bounds(const GroupBall& ball,
                                const std::optional<FreeSetCertificate>& cert);

}  // namespace ggt
