#pragma once

// Independent identity / equality oracle used to cross-check the Dehn
// machinery. It searches the whole rewriting graph instead of following the
// leftmost-longest strategy: breadth-first over all words reachable by
// replacing any symmetrized-relator prefix occurrence with the inverse of
// the complement, never letting the length grow. For verified C'(1/6)
// presentations a trivial word always admits a strictly shortening path, so
// the bounded search is complete; the oracle shares no code path with
// DehnReducer::reduce beyond the symmetrized set itself.

#include <deque>
#include <unordered_set>

#include "ggt/smallcancel.hpp"
#include "ggt/words.hpp"

namespace ggt::tests {

class RewriteOracle {
 public:
  explicit RewriteOracle(const Presentation& p)
      : symmetrized_(SymmetrizedSet::build(p)) {}

  bool is_identity(const Word& start) const {
    if (start.empty()) return true;
    std::unordered_set<Word, WordHash> seen{start};
    std::deque<Word> frontier{start};
    const std::size_t cap = start.size();
    while (!frontier.empty()) {
      Word w = frontier.front();
      frontier.pop_front();
      for (const Word& r : symmetrized_.elements()) {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          std::size_t limit = std::min(r.size(), w.size() - pos);
          std::size_t match = 0;
          while (match < limit && w.at(pos + match) == r.at(match)) ++match;
          for (std::size_t k = 1; k <= match; ++k) {
            Word next = w.subword(0, pos) *
                        r.subword(k, r.size() - k).inverse() *
                        w.subword(pos + k, w.size() - pos - k);
            if (next.empty()) return true;
            if (next.size() > cap) continue;
            if (seen.insert(next).second) frontier.push_back(next);
          }
        }
      }
    }
    return false;
  }

  bool equal(const Word& a, const Word& b) const {
    return is_identity(a * b.inverse());
  }

 private:
  SymmetrizedSet symmetrized_;
};

}  // namespace ggt::tests
