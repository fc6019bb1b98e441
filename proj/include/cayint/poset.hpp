#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayint/interval.hpp"

namespace cayint {

// Reachability (x <= y) over an interval's cover edges, one bit row per
// element. Rows are indexed by element id; since ids are sorted by rank, the
// lowest set bit of an up-set row is an element of minimal rank.
class Reachability {
 public:
  explicit Reachability(const GradedInterval& interval);

  std::size_t size() const { return n_; }
  bool le(std::uint32_t x, std::uint32_t y) const {
    return (up_[x * words_ + y / 64] >> (y % 64)) & 1u;
  }
  const std::uint64_t* up_row(std::uint32_t x) const { return &up_[x * words_]; }
  const std::uint64_t* down_row(std::uint32_t x) const { return &down_[x * words_]; }
  std::size_t words() const { return words_; }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
};

struct IntervalStats {
  std::size_t size = 0;
  Count geodesic_count = 0;
  std::vector<std::size_t> rank_profile;
  std::size_t max_antichain = 0;
  bool is_sperner = false;
  bool is_lattice = false;
};

// Number of maximal chains bottom -> top, i.e. |Geo(bottom, top)|, by dynamic
// programming over the cover edges.
Count geodesic_count(const GradedInterval& interval);

// Width of the poset. By Dilworth's theorem this is n minus a maximum matching
// in the bipartite graph {x -> y : x < y} of the transitive closure.
std::size_t max_antichain(const GradedInterval& interval);

// Every pair has a unique least upper bound and a unique greatest lower bound
// inside the interval.
bool is_lattice(const GradedInterval& interval);

// Rank-preserving isomorphism of the Hasse diagrams, generator labels
// ignored. Colour refinement followed by individualisation and backtracking;
// exact.
bool order_isomorphic(const GradedInterval& a, const GradedInterval& b);

// Isomorphism invariant used to bucket candidates before order_isomorphic:
// rank profile, per-rank multiset of (up-degree, down-degree), path count.
std::string shape_signature(const GradedInterval& interval);

IntervalStats interval_stats(const GradedInterval& interval);

}  // namespace cayint
