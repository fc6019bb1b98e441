#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cayint/cayley.hpp"

namespace cayint {

// Cover edge x -> x*s between consecutive rank-sets, by element id.
struct CoverEdge {
  std::uint32_t from = 0;
  std::uint32_t generator = 0;
  std::uint32_t to = 0;

  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

// The interval [bottom, top] as a graded poset.
//
// Elements get consecutive ids rank by rank, so rank_set(i) is a contiguous
// slice. Within a rank, elements keep their discovery order (parents in id
// order, generators in index order), which makes builds deterministic.
class GradedInterval {
 public:
  GradedInterval() = default;
  GradedInterval(Element bottom, Element top, std::vector<std::vector<Element>> rank_sets,
                 std::vector<CoverEdge> edges);

  const Element& bottom() const { return bottom_; }
  const Element& top() const { return top_; }
  // d(bottom, top); the ranks are 0..length().
  int length() const { return static_cast<int>(rank_offsets_.size()) - 2; }
  std::size_t size() const { return elements_.size(); }

  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::uint32_t id) const { return elements_[id]; }
  std::span<const Element> rank_set(int rank) const;
  int rank_of(std::uint32_t id) const { return ranks_[id]; }
  std::uint32_t first_id_of_rank(int rank) const { return rank_offsets_[rank]; }

  const std::vector<CoverEdge>& edges() const { return edges_; }
  // Edge indices leaving / entering an element.
  std::span<const std::uint32_t> out_edges(std::uint32_t id) const;
  std::span<const std::uint32_t> in_edges(std::uint32_t id) const;

  std::optional<std::uint32_t> id_of(const Element& e) const;
  // (rank, position within the rank)
  std::optional<std::pair<int, std::uint32_t>> locate(const Element& e) const;
  bool contains(const Element& e) const { return id_of(e).has_value(); }

  std::vector<std::size_t> rank_profile() const;

 private:
  Element bottom_;
  Element top_;
  std::vector<Element> elements_;
  std::vector<int> ranks_;
  std::vector<std::uint32_t> rank_offsets_;
  std::vector<CoverEdge> edges_;
  std::vector<std::uint32_t> out_offsets_, out_index_;
  std::vector<std::uint32_t> in_offsets_, in_index_;
  std::unordered_map<Element, std::uint32_t> index_;
};

// g1 <= g2 in the prefix order: g1 lies on a geodesic from the identity to g2,
// i.e. l(g2) = l(g1) + d(g1, g2).
bool prefix_le(const DistanceOracle& oracle, const Element& g1, const Element& g2);

// Builds [g,h] grade by grade: R_0 = {g}; R_i collects every g's with g' in
// R_{i-1} and d(g's, h) = n - i, recording the cover edge (g', s, g's).
// Throws Unreachable when h is not reachable from g.
GradedInterval build_interval(const DistanceOracle& oracle, const Element& g, const Element& h);

struct PartialInterval {
  int length = 0;  // d(g,h)
  // forward[i] is R_i for i = 0..min(k,n); backward[j] is R_{n-j}.
  std::vector<std::vector<Element>> forward;
  std::vector<std::vector<Element>> backward;

  std::vector<std::size_t> forward_profile() const;
  std::vector<std::size_t> backward_profile() const;
};

// First and last k grades of [g,h]. The backward pass starts at h and steps by
// inverse generators, keeping elements with d(g, x) = n - j.
PartialInterval partial_interval(const DistanceOracle& oracle, const Element& g,
                                 const Element& h, int k);

// Left translate of every element by g; labels and ids are unchanged.
GradedInterval translate_interval(const GradedInterval& interval, const Element& g);

}  // namespace cayint
