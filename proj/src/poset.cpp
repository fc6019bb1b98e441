#include "cayint/poset.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <sstream>

namespace cayint {

Reachability::Reachability(const GradedInterval& interval)
    : n_(interval.size()), words_((interval.size() + 63) / 64) {
  up_.assign(n_ * words_, 0);
  down_.assign(n_ * words_, 0);
  const auto& edges = interval.edges();
  for (std::size_t x = n_; x-- > 0;) {
    std::uint64_t* row = &up_[x * words_];
    row[x / 64] |= std::uint64_t{1} << (x % 64);
    for (auto k : interval.out_edges(static_cast<std::uint32_t>(x))) {
      const std::uint64_t* child = &up_[edges[k].to * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= child[w];
    }
  }
  for (std::size_t x = 0; x < n_; ++x) {
    std::uint64_t* row = &down_[x * words_];
    row[x / 64] |= std::uint64_t{1} << (x % 64);
    for (auto k : interval.in_edges(static_cast<std::uint32_t>(x))) {
      const std::uint64_t* parent = &down_[edges[k].from * words_];
      for (std::size_t w = 0; w < words_; ++w) row[w] |= parent[w];
    }
  }
}

Count geodesic_count(const GradedInterval& interval) {
  const auto n = static_cast<std::uint32_t>(interval.size());
  if (n == 0) return 0;
  std::vector<Count> paths(n, 0);
  paths[0] = 1;
  // ids are rank-ordered, so every edge goes from a smaller to a larger id
  for (std::uint32_t x = 0; x < n; ++x) {
    for (auto k : interval.out_edges(x)) paths[interval.edges()[k].to] += paths[x];
  }
  return paths[n - 1];
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(std::vector<std::vector<std::uint32_t>> adj)
      : adj_(std::move(adj)),
        match_left_(adj_.size(), kFree),
        match_right_(adj_.size(), kFree),
        dist_(adj_.size()),
        cursor_(adj_.size()) {}

  std::size_t run() {
    std::size_t matching = 0;
    while (bfs()) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      for (std::uint32_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kFree && dfs(u)) ++matching;
      }
    }
    return matching;
  }

 private:
  static constexpr std::uint32_t kFree = std::numeric_limits<std::uint32_t>::max();
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool bfs() {
    std::vector<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kFree) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t u = queue[head];
      for (auto v : adj_[u]) {
        std::uint32_t w = match_right_[v];
        if (w == kFree) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t u) {
    for (auto& i = cursor_[u]; i < adj_[u].size(); ++i) {
      std::uint32_t v = adj_[u][i];
      std::uint32_t w = match_right_[v];
      if (w == kFree || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::uint32_t> match_left_;
  std::vector<std::uint32_t> match_right_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> cursor_;
};

bool subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

// Vertex colouring of the disjoint union of two Hasse diagrams; vertices
// [0, half) belong to the first diagram.
class IsoSearch {
 public:
  IsoSearch(const GradedInterval& a, const GradedInterval& b)
      : half_(static_cast<std::uint32_t>(a.size())) {
    const std::uint32_t total = half_ * 2;
    out_.resize(total);
    in_.resize(total);
    std::vector<std::uint32_t> colour(total);
    auto load = [&](const GradedInterval& g, std::uint32_t offset) {
      for (const auto& e : g.edges()) {
        out_[offset + e.from].push_back(offset + e.to);
        in_[offset + e.to].push_back(offset + e.from);
      }
      for (std::uint32_t x = 0; x < g.size(); ++x) {
        colour[offset + x] = static_cast<std::uint32_t>(g.rank_of(x));
      }
    };
    load(a, 0);
    load(b, half_);
    initial_ = refine(std::move(colour));
  }

  bool run() { return balanced(initial_) && search(initial_); }

 private:
  // Iterated 1-dimensional Weisfeiler-Leman refinement. New colour ids are
  // assigned in sorted order of signatures, so equal signatures in the two
  // halves always receive equal colours.
  std::vector<std::uint32_t> refine(std::vector<std::uint32_t> colour) const {
    std::size_t classes = count_classes(colour);
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      std::vector<std::vector<std::uint32_t>> signatures(colour.size());
      for (std::uint32_t v = 0; v < colour.size(); ++v) {
        auto& sig = signatures[v];
        sig.push_back(colour[v]);
        std::vector<std::uint32_t> ups, downs;
        for (auto w : out_[v]) ups.push_back(colour[w]);
        for (auto w : in_[v]) downs.push_back(colour[w]);
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        sig.push_back(static_cast<std::uint32_t>(ups.size()));
        sig.insert(sig.end(), ups.begin(), ups.end());
        sig.insert(sig.end(), downs.begin(), downs.end());
        ids.emplace(sig, 0);
      }
      std::uint32_t next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (std::uint32_t v = 0; v < colour.size(); ++v) colour[v] = ids[signatures[v]];
      std::size_t now = ids.size();
      if (now == classes) return colour;
      classes = now;
    }
  }

  static std::size_t count_classes(const std::vector<std::uint32_t>& colour) {
    std::vector<std::uint32_t> sorted(colour);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

  bool balanced(const std::vector<std::uint32_t>& colour) const {
    std::map<std::uint32_t, long> diff;
    for (std::uint32_t v = 0; v < colour.size(); ++v) diff[colour[v]] += v < half_ ? 1 : -1;
    return std::all_of(diff.begin(), diff.end(), [](const auto& kv) { return kv.second == 0; });
  }

  bool search(const std::vector<std::uint32_t>& colour) const {
    // smallest non-singleton class, counted in the first half
    std::map<std::uint32_t, std::uint32_t> size;
    for (std::uint32_t v = 0; v < half_; ++v) ++size[colour[v]];
    std::uint32_t target = 0;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [c, s] : size) {
      if (s > 1 && s < best) {
        best = s;
        target = c;
      }
    }
    if (best == std::numeric_limits<std::uint32_t>::max()) return verify(colour);

    std::uint32_t v = 0;
    while (colour[v] != target) ++v;
    const std::uint32_t fresh = static_cast<std::uint32_t>(colour.size());
    for (std::uint32_t w = half_; w < colour.size(); ++w) {
      if (colour[w] != target) continue;
      std::vector<std::uint32_t> next(colour);
      next[v] = fresh;
      next[w] = fresh;
      next = refine(std::move(next));
      if (balanced(next) && search(next)) return true;
    }
    return false;
  }

  // Discrete colouring: the colour bijection must carry edges onto edges.
  bool verify(const std::vector<std::uint32_t>& colour) const {
    std::map<std::uint32_t, std::uint32_t> by_colour;
    for (std::uint32_t w = half_; w < colour.size(); ++w) by_colour[colour[w]] = w;
    std::vector<std::uint32_t> image(half_);
    for (std::uint32_t v = 0; v < half_; ++v) image[v] = by_colour.at(colour[v]);
    for (std::uint32_t v = 0; v < half_; ++v) {
      if (out_[v].size() != out_[image[v]].size()) return false;
      for (auto w : out_[v]) {
        const auto& targets = out_[image[v]];
        if (std::find(targets.begin(), targets.end(), image[w]) == targets.end()) return false;
      }
    }
    return true;
  }

  std::uint32_t half_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::uint32_t> initial_;
};

}  // namespace

std::size_t max_antichain(const GradedInterval& interval) {
  const std::size_t n = interval.size();
  if (n == 0) return 0;
  Reachability reach(interval);
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint64_t* row = reach.up_row(x);
    for (std::size_t w = 0; w < reach.words(); ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        auto y = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        if (y != x) adj[x].push_back(y);
      }
    }
  }
  return n - HopcroftKarp(std::move(adj)).run();
}

bool is_lattice(const GradedInterval& interval) {
  const std::size_t n = interval.size();
  Reachability reach(interval);
  const std::size_t words = reach.words();
  std::vector<std::uint64_t> common(words);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      if (reach.le(x, y) || reach.le(y, x)) continue;

      // join: the minimal-rank common upper bound must lie below all others
      const std::uint64_t* ux = reach.up_row(x);
      const std::uint64_t* uy = reach.up_row(y);
      std::size_t first = n;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] = ux[w] & uy[w];
        if (first == n && common[w]) first = w * 64 + std::countr_zero(common[w]);
      }
      if (first == n) return false;
      if (!subset(common.data(), reach.up_row(static_cast<std::uint32_t>(first)), words)) {
        return false;
      }

      // meet: the maximal-rank common lower bound must lie above all others
      const std::uint64_t* dx = reach.down_row(x);
      const std::uint64_t* dy = reach.down_row(y);
      std::size_t last = n;
      for (std::size_t w = words; w-- > 0;) {
        common[w] = dx[w] & dy[w];
        if (last == n && common[w]) last = w * 64 + 63 - std::countl_zero(common[w]);
      }
      if (last == n) return false;
      if (!subset(common.data(), reach.down_row(static_cast<std::uint32_t>(last)), words)) {
        return false;
      }
    }
  }
  return true;
}

bool order_isomorphic(const GradedInterval& a, const GradedInterval& b) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
  if (a.rank_profile() != b.rank_profile()) return false;
  return IsoSearch(a, b).run();
}

std::string shape_signature(const GradedInterval& interval) {
  std::ostringstream out;
  for (auto s : interval.rank_profile()) out << s << ',';
  out << '|';
  for (int r = 0; r <= interval.length(); ++r) {
    std::vector<std::pair<std::size_t, std::size_t>> degrees;
    const std::uint32_t first = interval.first_id_of_rank(r);
    for (std::uint32_t k = 0; k < interval.rank_set(r).size(); ++k) {
      degrees.emplace_back(interval.out_edges(first + k).size(),
                           interval.in_edges(first + k).size());
    }
    std::sort(degrees.begin(), degrees.end());
    for (const auto& [up, down] : degrees) out << up << '/' << down << ' ';
    out << ';';
  }
  out << '|' << geodesic_count(interval);
  return out.str();
}

IntervalStats interval_stats(const GradedInterval& interval) {
  IntervalStats stats;
  stats.size = interval.size();
  stats.geodesic_count = geodesic_count(interval);
  stats.rank_profile = interval.rank_profile();
  stats.max_antichain = max_antichain(interval);
  const std::size_t widest =
      stats.rank_profile.empty()
          ? 0
          : *std::max_element(stats.rank_profile.begin(), stats.rank_profile.end());
  stats.is_sperner = stats.max_antichain <= widest;
  stats.is_lattice = is_lattice(interval);
  return stats;
}

}  // namespace cayint
