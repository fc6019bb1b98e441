#include "cayint/median.hpp"

#include <algorithm>
#include <limits>

#include "cayint/errors.hpp"

namespace cayint {

Triangle::Triangle(const Element& c0, const Element& c1, const Element& c2)
    : translation_(c0) {
  if (!same_group(c0, c1) || !same_group(c0, c2)) {
    throw ModelMismatch("triangle corners belong to different groups");
  }
  const Element back = inverse(c0);
  corners_ = {multiply(back, c0), multiply(back, c1), multiply(back, c2)};
}

std::array<int, 3> deltas(const DistanceOracle& oracle, const Triangle& t) {
  const auto& c = t.corners();
  std::array<int, 3> out{};
  // opposite side of each corner: [c1,c2], [c0,c2], [c0,c1]
  constexpr std::array<std::array<std::size_t, 2>, 3> kOpposite{{{1, 2}, {0, 2}, {0, 1}}};
  for (std::size_t i = 0; i < 3; ++i) {
    GradedInterval side = build_interval(oracle, c[kOpposite[i][0]], c[kOpposite[i][1]]);
    int best = std::numeric_limits<int>::max();
    for (const auto& x : side.elements()) best = std::min(best, oracle.distance(c[i], x));
    out[i] = best;
  }
  return out;
}

InteriorRegion interior(const DistanceOracle& oracle, const Triangle& t) {
  InteriorRegion region;
  region.deltas = deltas(oracle, t);
  const auto& c = t.corners();
  const auto start = static_cast<std::size_t>(
      std::min_element(region.deltas.begin(), region.deltas.end()) - region.deltas.begin());

  for (auto& h : ball(oracle, c[start], region.deltas[start])) {
    InteriorPoint point{h, {}, 0};
    bool inside = true;
    for (std::size_t i = 0; i < 3 && inside; ++i) {
      point.distances[i] = oracle.distance(c[i], h);
      inside = point.distances[i] <= region.deltas[i];
    }
    if (!inside) continue;
    point.steiner_weight = point.distances[0] + point.distances[1] + point.distances[2];
    point.element = t.to_original(h);
    region.points.push_back(std::move(point));
  }
  std::sort(region.points.begin(), region.points.end(),
            [](const InteriorPoint& a, const InteriorPoint& b) { return a.element < b.element; });
  return region;
}

int steiner_weight(const DistanceOracle& oracle, const Element& h, const Triangle& t) {
  int total = 0;
  for (std::size_t i = 0; i < 3; ++i) total += oracle.distance(t.original_corner(i), h);
  return total;
}

MedianResult medians(const DistanceOracle& oracle, const Triangle& t) {
  return medians(oracle, t, interior(oracle, t));
}

MedianResult medians(const DistanceOracle&, const Triangle&, const InteriorRegion& region) {
  if (region.points.empty()) {
    throw InvariantViolation("empty interior: the opposite intervals always meet the balls");
  }
  MedianResult result;
  result.interior_size = region.points.size();
  result.weight = std::numeric_limits<int>::max();
  for (const auto& p : region.points) result.weight = std::min(result.weight, p.steiner_weight);
  for (const auto& p : region.points) {
    if (p.steiner_weight == result.weight) result.minimizers.push_back(p.element);
  }
  return result;
}

bool median_parity_check(const DistanceOracle& oracle, const MedianResult& result) {
  if (oracle.model().kind() != ModelKind::SymCircular) {
    throw Unsupported("the median parity law is stated for the circular transposition model, not " +
                      oracle.model().descriptor());
  }
  for (std::size_t i = 0; i < result.minimizers.size(); ++i) {
    for (std::size_t j = i + 1; j < result.minimizers.size(); ++j) {
      if (oracle.distance(result.minimizers[i], result.minimizers[j]) % 2 != 0) return false;
    }
  }
  return true;
}

bool median_parity_check(const DistanceOracle& oracle, const Triangle& t) {
  if (oracle.model().kind() != ModelKind::SymCircular) {
    throw Unsupported("the median parity law is stated for the circular transposition model, not " +
                      oracle.model().descriptor());
  }
  return median_parity_check(oracle, medians(oracle, t));
}

}  // namespace cayint
