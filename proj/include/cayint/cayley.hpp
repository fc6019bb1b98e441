#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cayint/distance_oracle.hpp"

namespace cayint {

// Exact path counts; geodesic numbers outgrow 64 bits quickly in S_n.
using Count = boost::multiprecision::cpp_int;

enum class GeodesicMode { CountOnly, Enumerate };

inline constexpr std::size_t kDefaultMaxWords = 1'000'000;

struct GeodesicSet {
  Element source;
  Element target;
  int length = 0;
  // Lexicographic in generator index; empty in CountOnly mode.
  std::vector<Word> words;
  Count count = 0;
  // Set when enumeration stopped at the cap before reaching count words.
  bool truncated = false;
};

// All geodesic words from g to h. The count is always exact, from the
// recursion count(x) = sum over generators s with d(xs,h) = d(x,h)-1 of
// count(xs), memoised over the elements of [g,h].
GeodesicSet geodesics(const DistanceOracle& oracle, const Element& g, const Element& h,
                      GeodesicMode mode, std::size_t max_words = kDefaultMaxWords);

// {h : d(g,h) <= radius} in BFS discovery order (generator-index order within
// a level).
std::vector<Element> ball(const DistanceOracle& oracle, const Element& g, int radius);

// {h : d(g,h) = radius}.
std::vector<Element> sphere(const DistanceOracle& oracle, const Element& g, int radius);

// Sizes of the spheres around the identity, read from the distance table.
std::vector<std::uint64_t> sphere_sizes(const DistanceOracle& oracle);

}  // namespace cayint
