#include "cayint/cayley.hpp"

#include <unordered_map>
#include <unordered_set>

#include "cayint/errors.hpp"

namespace cayint {

namespace {

class GeodesicCounter {
 public:
  GeodesicCounter(const DistanceOracle& oracle, const Element& target)
      : oracle_(oracle), target_(target) {}

  // x is at distance `remaining` from the target.
  const Count& count(const Element& x, int remaining) {
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
    Count total = 0;
    if (remaining == 0) {
      total = 1;
    } else {
      for (const auto& s : oracle_.generators().generators()) {
        Element y = multiply(x, s);
        auto d = oracle_.try_distance(y, target_);
        if (d && *d == remaining - 1) total += count(y, remaining - 1);
      }
    }
    return memo_.emplace(x, std::move(total)).first->second;
  }

 private:
  const DistanceOracle& oracle_;
  const Element& target_;
  std::unordered_map<Element, Count> memo_;
};

void enumerate_words(const DistanceOracle& oracle, const Element& x, const Element& target,
                     int remaining, Word& prefix, GeodesicSet& out, std::size_t max_words) {
  if (out.words.size() >= max_words) {
    out.truncated = true;
    return;
  }
  if (remaining == 0) {
    out.words.push_back(prefix);
    return;
  }
  const auto& gens = oracle.generators();
  for (std::uint32_t i = 0; i < gens.size(); ++i) {
    Element y = multiply(x, gens[i]);
    auto d = oracle.try_distance(y, target);
    if (!d || *d != remaining - 1) continue;
    prefix.push_back(i);
    enumerate_words(oracle, y, target, remaining - 1, prefix, out, max_words);
    prefix.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace

GeodesicSet geodesics(const DistanceOracle& oracle, const Element& g, const Element& h,
                      GeodesicMode mode, std::size_t max_words) {
  GeodesicSet result{g, h, oracle.distance(g, h), {}, 0, false};
  GeodesicCounter counter(oracle, h);
  result.count = counter.count(g, result.length);
  if (mode == GeodesicMode::Enumerate) {
    Word prefix;
    enumerate_words(oracle, g, h, result.length, prefix, result, max_words);
    if (result.words.size() < result.count) result.truncated = true;
  }
  return result;
}

std::vector<Element> ball(const DistanceOracle& oracle, const Element& g, int radius) {
  if (radius < 0) throw PreconditionError("ball radius must be nonnegative");
  oracle.model().check(g);
  std::vector<Element> out{g};
  std::unordered_set<Element> seen{g};
  std::size_t level_begin = 0;
  for (int r = 0; r < radius; ++r) {
    const std::size_t level_end = out.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& s : oracle.generators().generators()) {
        Element y = multiply(out[i], s);
        if (seen.insert(y).second) out.push_back(std::move(y));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<Element> sphere(const DistanceOracle& oracle, const Element& g, int radius) {
  std::vector<Element> out;
  for (auto& h : ball(oracle, g, radius)) {
    if (oracle.distance(g, h) == radius) out.push_back(std::move(h));
  }
  return out;
}

std::vector<std::uint64_t> sphere_sizes(const DistanceOracle& oracle) {
  auto table = oracle.table();
  if (table.empty()) throw Unsupported("sphere sizes need a full distance table");
  std::vector<std::uint64_t> sizes;
  for (auto v : table) {
    if (v == kUnreachableEntry) continue;
    if (sizes.size() <= v) sizes.resize(v + 1, 0);
    ++sizes[v];
  }
  return sizes;
}

}  // namespace cayint
