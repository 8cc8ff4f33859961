#include "ggt/smallcancel.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ggt {

namespace {

Word cyclic_shift(const Word& w, int k) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    letters.push_back(w.at(static_cast<std::size_t>((i + k) % n)));
  return Word::reduce(std::move(letters));
}

int common_prefix_len(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a.at(i) == b.at(i)) ++i;
  return static_cast<int>(i);
}

}  // namespace

SymmetrizedSet SymmetrizedSet::build(const Presentation& p) {
  if (p.relators().empty()) fail("NoRelators", "presentation has no relators");
  SymmetrizedSet s;
  std::unordered_set<Word, WordHash> seen;
  for (int ri = 0; ri < static_cast<int>(p.relators().size()); ++ri) {
    const Word& r = p.relators()[static_cast<std::size_t>(ri)];
    for (int inverted = 0; inverted < 2; ++inverted) {
      Word base = inverted ? r.inverse() : r;
      for (int k = 0; k < static_cast<int>(base.size()); ++k) {
        Word e = cyclic_shift(base, k);
        if (seen.insert(e).second) {
          s.elements_.push_back(e);
          s.origins_.push_back({ri, k, inverted != 0});
        }
      }
    }
  }
  return s;
}

SymmetrizedSet symmetrize(const Presentation& p) { return SymmetrizedSet::build(p); }

SCReport compute_pieces(const SymmetrizedSet& s) {
  SCReport rep;
  const auto& els = s.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    for (std::size_t j = 0; j < els.size(); ++j) {
      if (i == j) continue;
      int len = common_prefix_len(els[i], els[j]);
      int ri = s.origins()[i].relator, rj = s.origins()[j].relator;
      auto key = std::make_pair(std::min(ri, rj), std::max(ri, rj));
      auto it = rep.per_pair.find(key);
      if (it == rep.per_pair.end()) {
        rep.per_pair[key] = len;
      } else {
        it->second = std::max(it->second, len);
      }
      if (len > rep.max_piece_len) {
        rep.max_piece_len = len;
        rep.witness = els[i].subword(0, static_cast<std::size_t>(len));
      }
    }
  }
  return rep;
}

SCReport check_small_cancellation(const Presentation& p, const Rational& lambda,
                                  SCVariant variant) {
  if (lambda <= Rational(0) || lambda > Rational(1))
    fail("InputOutOfRange", "lambda must lie in (0, 1]");
  SCReport rep;
  rep.variant = variant;
  rep.lambda = lambda;
  if (p.relators().empty()) {
    rep.verdict = true;  // vacuous
    return rep;
  }
  SymmetrizedSet s = SymmetrizedSet::build(p);
  SCReport pieces = compute_pieces(s);
  rep.max_piece_len = pieces.max_piece_len;
  rep.per_pair = std::move(pieces.per_pair);
  rep.witness = pieces.witness;
  rep.shortest_relator_len = static_cast<int>(
      std::min_element(p.relators().begin(), p.relators().end(),
                       [](const Word& a, const Word& b) { return a.size() < b.size(); })
          ->size());

  if (variant == SCVariant::Cdoubleprime) {
    rep.verdict = Rational(rep.max_piece_len) < lambda * Rational(rep.shortest_relator_len);
  } else {
    // Every piece occurrence must be shorter than lambda times the length of
    // each relator containing it; elements from relator r have length |r|.
    bool ok = true;
    const auto& els = s.elements();
    for (std::size_t i = 0; i < els.size() && ok; ++i) {
      for (std::size_t j = 0; j < els.size() && ok; ++j) {
        if (i == j) continue;
        int len = common_prefix_len(els[i], els[j]);
        if (Rational(len) >= lambda * Rational(static_cast<int>(els[i].size())) ||
            Rational(len) >= lambda * Rational(static_cast<int>(els[j].size())))
          ok = false;
      }
    }
    rep.verdict = ok;
  }
  return rep;
}

DehnReducer::DehnReducer(const Presentation& p) : presentation_(&p) {
  if (p.relators().empty()) return;
  SCReport rep = check_small_cancellation(p, Rational(1, 6), SCVariant::Cprime);
  if (!rep.verdict)
    fail("NotVerifiedC16", "presentation is not verified C'(1/6)");
  symmetrized_ = SymmetrizedSet::build(p);
}

std::optional<RewriteStep> DehnReducer::find_half_subword(const Word& w,
                                                          std::size_t pos) const {
  std::optional<RewriteStep> best;
  const auto& els = symmetrized_.elements();
  for (std::size_t e = 0; e < els.size(); ++e) {
    const Word& r = els[e];
    std::size_t limit = std::min(r.size(), w.size() - pos);
    std::size_t match = 0;
    while (match < limit && w.at(pos + match) == r.at(match)) ++match;
    if (2 * match > r.size()) {
      if (!best || match > best->matched.size()) {
        Word tail = r.subword(match, r.size() - match);
        best = RewriteStep{pos, r.subword(0, match), tail.inverse(),
                           static_cast<int>(e)};
      }
    }
  }
  return best;
}

Word DehnReducer::reduce(const Word& w, std::vector<RewriteStep>* trace) const {
  Word cur = w;  // construction-reduced already
  if (free()) return cur;
  for (;;) {
    std::optional<RewriteStep> step;
    for (std::size_t pos = 0; pos < cur.size() && !step; ++pos)
      step = find_half_subword(cur, pos);
    if (!step) return cur;
    Word prefix = cur.subword(0, step->pos);
    Word suffix = cur.subword(step->pos + step->matched.size(),
                              cur.size() - step->pos - step->matched.size());
    cur = prefix * step->replacement * suffix;
    if (trace) trace->push_back(*step);
  }
}

bool DehnReducer::words_equal(const Word& a, const Word& b) const {
  return reduce(a * b.inverse()).empty();
}

std::optional<RewriteStep> DehnReducer::greendlinger_witness(const Word& w) const {
  if (free()) return std::nullopt;
  std::optional<RewriteStep> best;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto step = find_half_subword(w, pos);
    if (step && (!best || step->matched.size() > best->matched.size())) best = step;
  }
  return best;
}

Word dehn_reduce(const Word& w, const Presentation& p, std::vector<RewriteStep>* trace) {
  return DehnReducer(p).reduce(w, trace);
}

bool words_equal(const Word& w1, const Word& w2, const Presentation& p) {
  return DehnReducer(p).words_equal(w1, w2);
}

std::optional<RewriteStep> greendlinger_witness(const Word& w, const Presentation& p) {
  return DehnReducer(p).greendlinger_witness(w);
}

}  // namespace ggt
