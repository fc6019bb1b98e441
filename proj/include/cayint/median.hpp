#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cayint/interval.hpp"

namespace cayint {

// Three reference elements, left-translated so that the first corner is the
// identity. Results are reported back in the caller's coordinates.
class Triangle {
 public:
  Triangle(const Element& c0, const Element& c1, const Element& c2);

  // Normalised corners; corners()[0] is the identity.
  const std::array<Element, 3>& corners() const { return corners_; }
  // The first original corner; original = translation * normalised.
  const Element& translation() const { return translation_; }

  Element original_corner(std::size_t i) const { return to_original(corners_[i]); }
  Element to_original(const Element& x) const { return multiply(translation_, x); }
  Element to_normalised(const Element& x) const { return multiply(inverse(translation_), x); }

 private:
  std::array<Element, 3> corners_;
  Element translation_;
};

struct InteriorPoint {
  Element element;                // original coordinates
  std::array<int, 3> distances;   // d(corner_i, element)
  int steiner_weight = 0;
};

struct InteriorRegion {
  // deltas[i] = min distance from corner i to the interval between the other two.
  std::array<int, 3> deltas{};
  // Elements within deltas[i] of every corner i, sorted by element order.
  std::vector<InteriorPoint> points;
};

struct MedianResult {
  std::vector<Element> minimizers;  // original coordinates, sorted
  int weight = 0;
  std::size_t interior_size = 0;
};

std::array<int, 3> deltas(const DistanceOracle& oracle, const Triangle& t);

// Intersection of the closed balls of radius deltas[i] around the corners.
// Enumerated by BFS from the corner with the smallest radius and filtered by
// the other two constraints.
InteriorRegion interior(const DistanceOracle& oracle, const Triangle& t);

// Sum of the distances from the three corners to h (original coordinates).
int steiner_weight(const DistanceOracle& oracle, const Element& h, const Triangle& t);

// All minimisers of the Steiner weight. Only the interior is scanned: every
// element outside one of the balls is beaten by a point of the opposite
// interval, so no minimiser lies outside. Ties are all kept.
MedianResult medians(const DistanceOracle& oracle, const Triangle& t);
MedianResult medians(const DistanceOracle& oracle, const Triangle& t, const InteriorRegion& region);

// For the circular transposition model: true iff every pair of minimisers is
// at even distance. Throws Unsupported for other models.
bool median_parity_check(const DistanceOracle& oracle, const Triangle& t);
bool median_parity_check(const DistanceOracle& oracle, const MedianResult& result);

}  // namespace cayint
