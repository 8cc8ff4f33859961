#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ggt/rational.hpp"
#include "ggt/words.hpp"

namespace ggt {

// All cyclic shifts of every relator and of every inverse relator,
// deduplicated. Pieces are measured against this set.
class SymmetrizedSet {
 public:
  struct Origin {
    int relator;
    int shift;
    bool inverted;
  };

  static SymmetrizedSet build(const Presentation& p);

  const std::vector<Word>& elements() const { return elements_; }
  const std::vector<Origin>& origins() const { return origins_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Word> elements_;
  std::vector<Origin> origins_;
};

enum class SCVariant { Cprime, Cdoubleprime };

struct SCReport {
  SCVariant variant = SCVariant::Cprime;
  Rational lambda;
  int max_piece_len = 0;
  // (relator i, relator j) -> longest common prefix length over their
  // symmetrized elements.
  std::map<std::pair<int, int>, int> per_pair;
  int shortest_relator_len = 0;
  bool verdict = false;
  Word witness;  // a maximal piece
};

SymmetrizedSet symmetrize(const Presentation& p);

// Fills the piece fields of an SCReport (max_piece_len, per_pair, witness).
SCReport compute_pieces(const SymmetrizedSet& s);

// C'' uses the shortest relator as the global yardstick; C' bounds every
// piece against each relator containing it. Free presentations pass
// vacuously with max_piece_len = 0.
SCReport check_small_cancellation(const Presentation& p, const Rational& lambda,
                                  SCVariant variant);

struct RewriteStep {
  std::size_t pos;        // position of the replaced subword
  Word matched;           // the subword that was replaced
  Word replacement;       // what it became
  int element;            // index into the symmetrized set
};

// Dehn's algorithm for verified C'(1/6) presentations. Verifies the gate
// once at construction and reuses the symmetrized set across calls.
class DehnReducer {
 public:
  explicit DehnReducer(const Presentation& p);

  const Presentation& presentation() const { return *presentation_; }
  const SymmetrizedSet& symmetrized() const { return symmetrized_; }
  bool free() const { return presentation_->relators().empty(); }

  Word reduce(const Word& w, std::vector<RewriteStep>* trace = nullptr) const;
  bool words_equal(const Word& a, const Word& b) const;

  // For freely reduced w: a subword longer than half of some symmetrized
  // relator, if present. Words representing the identity always carry one.
  std::optional<RewriteStep> greendlinger_witness(const Word& w) const;

 private:
  // Longest match of a symmetrized-element prefix at position pos that
  // exceeds half of that element; C'(1/6) makes the element unique.
  std::optional<RewriteStep> find_half_subword(const Word& w, std::size_t pos) const;

  const Presentation* presentation_;
  SymmetrizedSet symmetrized_;
};

Word dehn_reduce(const Word& w, const Presentation& p,
                 std::vector<RewriteStep>* trace = nullptr);

// Decision procedure: dehn_reduce(w1 * w2^{-1}) is empty. Valid for verified
// C'(1/6) presentations and, trivially, free presentations.
bool words_equal(const Word& w1, const Word& w2, const Presentation& p);

std::optional<RewriteStep> greendlinger_witness(const Word& w, const Presentation& p);

}  // namespace ggt
