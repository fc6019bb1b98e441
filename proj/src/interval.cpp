#include "cayint/interval.hpp"

#include <algorithm>
#include <unordered_set>

#include "cayint/errors.hpp"

namespace cayint {

GradedInterval::GradedInterval(Element bottom, Element top,
                               std::vector<std::vector<Element>> rank_sets,
                               std::vector<CoverEdge> edges)
    : bottom_(std::move(bottom)), top_(std::move(top)), edges_(std::move(edges)) {
  rank_offsets_.push_back(0);
  for (std::size_t r = 0; r < rank_sets.size(); ++r) {
    for (auto& e : rank_sets[r]) {
      index_.emplace(e, static_cast<std::uint32_t>(elements_.size()));
      elements_.push_back(std::move(e));
      ranks_.push_back(static_cast<int>(r));
    }
    rank_offsets_.push_back(static_cast<std::uint32_t>(elements_.size()));
  }

  const std::size_t n = elements_.size();
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const auto& e : edges_) {
    ++out_offsets_[e.from + 1];
    ++in_offsets_[e.to + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_offsets_[i + 1] += out_offsets_[i];
    in_offsets_[i + 1] += in_offsets_[i];
  }
  out_index_.resize(edges_.size());
  in_index_.resize(edges_.size());
  std::vector<std::uint32_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::uint32_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::uint32_t k = 0; k < edges_.size(); ++k) {
    out_index_[out_fill[edges_[k].from]++] = k;
    in_index_[in_fill[edges_[k].to]++] = k;
  }
}

std::span<const Element> GradedInterval::rank_set(int rank) const {
  if (rank < 0 || rank > length()) return {};
  return std::span<const Element>(elements_).subspan(
      rank_offsets_[rank], rank_offsets_[rank + 1] - rank_offsets_[rank]);
}

std::span<const std::uint32_t> GradedInterval::out_edges(std::uint32_t id) const {
  return std::span<const std::uint32_t>(out_index_)
      .subspan(out_offsets_[id], out_offsets_[id + 1] - out_offsets_[id]);
}

std::span<const std::uint32_t> GradedInterval::in_edges(std::uint32_t id) const {
  return std::span<const std::uint32_t>(in_index_)
      .subspan(in_offsets_[id], in_offsets_[id + 1] - in_offsets_[id]);
}

std::optional<std::uint32_t> GradedInterval::id_of(const Element& e) const {
  if (auto it = index_.find(e); it != index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::pair<int, std::uint32_t>> GradedInterval::locate(const Element& e) const {
  auto id = id_of(e);
  if (!id) return std::nullopt;
  int r = ranks_[*id];
  return std::pair{r, *id - rank_offsets_[r]};
}

std::vector<std::size_t> GradedInterval::rank_profile() const {
  std::vector<std::size_t> profile;
  for (int r = 0; r <= length(); ++r) profile.push_back(rank_offsets_[r + 1] - rank_offsets_[r]);
  return profile;
}

bool prefix_le(const DistanceOracle& oracle, const Element& g1, const Element& g2) {
  auto l1 = oracle.try_length(g1);
  auto l2 = oracle.try_length(g2);
  auto between = oracle.try_distance(g1, g2);
  return l1 && l2 && between && *l2 == *l1 + *between;
}

GradedInterval build_interval(const DistanceOracle& oracle, const Element& g, const Element& h) {
  const int n = oracle.distance(g, h);
  const auto& gens = oracle.generators();

  std::vector<std::vector<Element>> ranks{{g}};
  std::vector<CoverEdge> edges;
  std::uint32_t level_base = 0;  // id of the first element of R_{i-1}
  for (int i = 1; i <= n; ++i) {
    const auto& previous = ranks.back();
    const auto next_base = level_base + static_cast<std::uint32_t>(previous.size());
    std::vector<Element> current;
    std::unordered_map<Element, std::uint32_t> position;
    for (std::uint32_t p = 0; p < previous.size(); ++p) {
      for (std::uint32_t s = 0; s < gens.size(); ++s) {
        Element y = multiply(previous[p], gens[s]);
        auto d = oracle.try_distance(y, h);
        if (!d || *d != n - i) continue;
        auto [it, inserted] = position.emplace(y, static_cast<std::uint32_t>(current.size()));
        if (inserted) current.push_back(std::move(y));
        edges.push_back({level_base + p, s, next_base + it->second});
      }
    }
    if (current.empty()) {
      throw InvariantViolation("empty rank-set " + std::to_string(i) + " while building [" +
                               to_string(g) + "," + to_string(h) + "]");
    }
    level_base = next_base;
    ranks.push_back(std::move(current));
  }
  return GradedInterval(g, h, std::move(ranks), std::move(edges));
}

std::vector<std::size_t> PartialInterval::forward_profile() const {
  std::vector<std::size_t> out;
  for (const auto& r : forward) out.push_back(r.size());
  return out;
}

std::vector<std::size_t> PartialInterval::backward_profile() const {
  std::vector<std::size_t> out;
  for (const auto& r : backward) out.push_back(r.size());
  return out;
}

PartialInterval partial_interval(const DistanceOracle& oracle, const Element& g, const Element& h,
                                 int k) {
  if (k < 1) throw PreconditionError("partial interval needs k >= 1");
  const int n = oracle.distance(g, h);
  const int grades = std::min(k, n);
  const auto& gens = oracle.generators().generators();

  auto sweep = [&](const Element& start, bool forward_pass) {
    std::vector<std::vector<Element>> levels{{start}};
    for (int i = 1; i <= grades; ++i) {
      std::vector<Element> current;
      std::unordered_set<Element> seen;
      for (const auto& x : levels.back()) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
          Element y = forward_pass ? multiply(x, gens[s])
                                   : multiply(x, oracle.inverse_generator(s));
          auto d = forward_pass ? oracle.try_distance(y, h) : oracle.try_distance(g, y);
          if (!d || *d != n - i) continue;
          if (seen.insert(y).second) current.push_back(std::move(y));
        }
      }
      levels.push_back(std::move(current));
    }
    return levels;
  };

  PartialInterval out;
  out.length = n;
  out.forward = sweep(g, true);
  out.backward = sweep(h, false);
  return out;
}

GradedInterval translate_interval(const GradedInterval& interval, const Element& g) {
  std::vector<std::vector<Element>> ranks;
  for (int r = 0; r <= interval.length(); ++r) {
    std::vector<Element> level;
    for (const auto& x : interval.rank_set(r)) level.push_back(multiply(g, x));
    ranks.push_back(std::move(level));
  }
  return GradedInterval(multiply(g, interval.bottom()), multiply(g, interval.top()),
                        std::move(ranks), interval.edges());
}

}  // namespace cayint
