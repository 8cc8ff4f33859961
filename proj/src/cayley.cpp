#include "ggt/cayley.hpp"

#include <algorithm>
#include <cmath>

namespace ggt {

namespace {

bool contains_word(const std::vector<Word>& ws, const Word& w) {
  return std::find(ws.begin(), ws.end(), w) != ws.end();
}

}  // namespace

GroupBall GroupBall::enumerate(const Presentation& p, std::vector<Word> generators,
                               int radius, std::size_t cap) {
  if (radius < 0) fail("InputOutOfRange", "radius must be nonnegative");

  GroupBall ball;
  ball.presentation_ = std::make_shared<const Presentation>(p);
  try {
    ball.reducer_ = std::make_shared<const DehnReducer>(*ball.presentation_);
  } catch (const Error& e) {
    if (e.code() == "NotVerifiedC16")
      fail("UnsupportedWordProblem",
           "relators present but the presentation is not verified C'(1/6)");
    throw;
  }
  ball.strategy_ = p.relators().empty() ? WordProblem::FreeGroup : WordProblem::DehnC16;
  ball.radius_ = radius;
  ball.materialized_ = true;

  // Identity tolerated and ignored; the set must be symmetric.
  std::vector<Word> gens;
  for (const Word& u : generators) {
    if (u.empty()) continue;
    if (!contains_word(gens, u)) gens.push_back(u);
  }
  for (const Word& u : gens)
    if (!contains_word(gens, u.inverse()))
      fail("NotSymmetric", "generator set is not symmetric: missing inverse of '" +
                               u.str() + "'");
  ball.generators_ = gens;

  std::vector<Word> std_gens = p.standard_generators();
  ball.tree_exact_ = ball.strategy_ == WordProblem::FreeGroup &&
                     gens.size() == std_gens.size() &&
                     std::all_of(gens.begin(), gens.end(), [&](const Word& u) {
                       return contains_word(std_gens, u);
                     });

  ball.insert_element(Word(), 0);
  ball.spheres_.assign(1, {0});

  for (int level = 1; level <= radius; ++level) {
    std::vector<Word> candidates;
    for (int id : ball.spheres_[static_cast<std::size_t>(level - 1)])
      for (const Word& u : ball.generators_)
        candidates.push_back(ball.elements_[static_cast<std::size_t>(id)].word * u);
    std::sort(candidates.begin(), candidates.end(),
              [](const Word& a, const Word& b) { return shortlex_less(a, b); });
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());

    ball.spheres_.emplace_back();
    for (const Word& c : candidates) {
      // |d(1, xu) - d(1, x)| <= 1, so an old equal element lives in sphere
      // level-2 or level-1; equality against the current sphere handles
      // same-level duplicates. Candidates arrive in shortlex order, so the
      // first accepted spelling is the least one discovered.
      if (ball.find_in(c, level - 2, level).has_value()) continue;
      if (ball.elements_.size() >= cap)
        fail("ResourceCap", "ball exceeds the configured element cap (" +
                                std::to_string(cap) + ")");
      ball.insert_element(c, level);
      ball.spheres_.back().push_back(static_cast<int>(ball.elements_.size()) - 1);
    }
  }
  return ball;
}

GroupBall GroupBall::free_scope(const Presentation& p, int radius) {
  if (!p.relators().empty())
    fail("UnsupportedStrategy", "free_scope requires a free presentation");
  GroupBall ball;
  ball.presentation_ = std::make_shared<const Presentation>(p);
  ball.reducer_ = std::make_shared<const DehnReducer>(*ball.presentation_);
  ball.generators_ = p.standard_generators();
  ball.radius_ = radius;
  ball.strategy_ = WordProblem::FreeGroup;
  ball.materialized_ = false;
  ball.tree_exact_ = true;
  return ball;
}

void GroupBall::insert_element(Word w, int dist) {
  int id = static_cast<int>(elements_.size());
  if (strategy_ == WordProblem::FreeGroup) {
    by_word_.emplace(w, id);
  } else {
    by_abelianization_[w.abelianization(presentation_->n_generators())].push_back(id);
  }
  elements_.push_back({std::move(w), dist});
}

std::optional<int> GroupBall::find_in(const Word& w, int lo_dist, int hi_dist) const {
  if (strategy_ == WordProblem::FreeGroup) {
    auto it = by_word_.find(w);
    if (it == by_word_.end()) return std::nullopt;
    int d = elements_[static_cast<std::size_t>(it->second)].dist;
    if (d < lo_dist || d > hi_dist) return std::nullopt;
    return it->second;
  }
  auto bucket = by_abelianization_.find(w.abelianization(presentation_->n_generators()));
  if (bucket == by_abelianization_.end()) return std::nullopt;
  for (int id : bucket->second) {
    const Element& e = elements_[static_cast<std::size_t>(id)];
    if (e.dist < lo_dist || e.dist > hi_dist) continue;
    if (reducer_->words_equal(w, e.word)) return id;
  }
  return std::nullopt;
}

const std::vector<GroupBall::Element>& GroupBall::elements() const {
  if (!materialized_)
    fail("NotMaterialized", "operation requires an enumerated ball");
  return elements_;
}

std::vector<std::size_t> GroupBall::sphere_sizes() const {
  if (!materialized_)
    fail("NotMaterialized", "operation requires an enumerated ball");
  std::vector<std::size_t> out;
  out.reserve(spheres_.size());
  for (const auto& s : spheres_) out.push_back(s.size());
  return out;
}

std::vector<std::size_t> GroupBall::ball_sizes() const {
  std::vector<std::size_t> out = sphere_sizes();
  for (std::size_t i = 1; i < out.size(); ++i) out[i] += out[i - 1];
  return out;
}

std::optional<int> GroupBall::locate(const Word& w) const {
  if (!materialized_)
    fail("NotMaterialized", "locate requires an enumerated ball");
  return find_in(w, 0, radius_);
}

std::optional<int> GroupBall::distance(const Word& g, const Word& h) const {
  Word diff = g.inverse() * h;
  if (!materialized_) {
    int d = static_cast<int>(diff.size());
    if (d > radius_) return std::nullopt;
    return d;
  }
  auto id = locate(diff);
  if (!id) return std::nullopt;
  return elements_[static_cast<std::size_t>(*id)].dist;
}

int GroupBall::exact_tree_distance(const Word& g, const Word& h) const {
  if (!tree_exact_)
    fail("UnsupportedStrategy",
         "exact tree distances need a free presentation over standard generators");
  return static_cast<int>((g.inverse() * h).size());
}

GrowthReport growth_rate_bounds(const GroupBall& ball,
                                const std::optional<FreeSetCertificate>& cert) {
  if (ball.radius() < 2) fail("InputOutOfRange", "growth bounds need radius >= 2");
  GrowthReport rep;
  for (std::size_t b : ball.ball_sizes()) rep.ball_sizes.push_back(b);

  for (std::size_t n = 1; n < rep.ball_sizes.size(); ++n)
    rep.fekete_upper.push_back(std::log(static_cast<double>(rep.ball_sizes[n])) /
                               static_cast<double>(n));

  // Subadditivity record: |B(m+n)| <= |B(m)||B(n)| for everything in range.
  for (std::size_t m = 1; m < rep.ball_sizes.size() && rep.fekete_valid; ++m)
    for (std::size_t n = 1; m + n < rep.ball_sizes.size(); ++n)
      if (static_cast<unsigned __int128>(rep.ball_sizes[m]) * rep.ball_sizes[n] <
          rep.ball_sizes[m + n]) {
        rep.fekete_valid = false;
        break;
      }

  double log_u = std::log(static_cast<double>(ball.generators().size()));
  if (cert) {
    if (cert->set.empty()) fail("InputOutOfRange", "empty certificate set");
    if (cert->power < 1) fail("InputOutOfRange", "certificate power must be >= 1");
    for (const Word& s : cert->set) {
      auto d = ball.distance(Word(), s);
      if (!d || *d > cert->power)
        fail("InputOutOfRange",
             "certificate element '" + s.str() + "' does not lie in U^c");
    }
    rep.lower_bound = std::log(static_cast<double>(cert->set.size())) /
                      static_cast<double>(cert->power);
    rep.lower_provenance = cert->provenance.empty()
                               ? "reduced set of size " + std::to_string(cert->set.size()) +
                                     " inside U^" + std::to_string(cert->power)
                               : cert->provenance;
  }
  rep.psg_ratio = log_u > 0 ? rep.lower_bound / log_u : 0.0;
  return rep;
}

}  // namespace ggt
