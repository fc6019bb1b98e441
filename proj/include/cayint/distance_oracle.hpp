#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cayint/group_model.hpp"

namespace cayint {

enum class DistanceStrategy { Analytic, FullTable, Bidirectional };

const char* to_string(DistanceStrategy s);

inline constexpr std::uint8_t kUnreachableEntry = 0xFF;
inline constexpr int kMaxTableDegree = 9;
inline constexpr int kMaxSearchDegree = 12;

// Word-metric distance d(g,h) = length of a shortest word u with g*ol(u) = h.
//
// Default strategy per model:
//   Z^2, Cyclic, SymAdjacent   closed form (L1 norm, residue, inversion count)
//   other S_n, n <= 9          table of n! bytes indexed by Lehmer rank,
//                              filled by BFS from the identity
//   other S_n, n = 10..12      bidirectional BFS per query
// Larger symmetric groups are rejected.
//
// Distances are left-invariant, so d(g,h) = l(g^-1 h) for every strategy.
// The oracle is immutable after construction; copies share the table.
class DistanceOracle {
 public:
  explicit DistanceOracle(GroupModel model);
  DistanceOracle(GroupModel model, DistanceStrategy strategy);

  // Wraps a precomputed table (e.g. loaded from a cache file). The table must
  // have model.order() entries.
  static DistanceOracle from_table(GroupModel model, std::vector<std::uint8_t> table);

  const GroupModel& model() const { return model_; }
  const GeneratingSet& generators() const { return model_.generators(); }
  DistanceStrategy strategy() const { return strategy_; }

  // nullopt when h cannot be reached from g.
  std::optional<int> try_distance(const Element& g, const Element& h) const;
  std::optional<int> try_length(const Element& g) const;

  // Throw Unreachable instead of returning nullopt.
  int distance(const Element& g, const Element& h) const;
  int length(const Element& g) const;

  // Maximum length; needs a finite model with a table or a closed form.
  int diameter() const;

  // Empty unless the strategy is FullTable.
  std::span<const std::uint8_t> table() const;

  // Inverse of generator i, as an element (it need not be a generator).
  const Element& inverse_generator(std::size_t i) const { return inverse_generators_[i]; }

 private:
  DistanceOracle(GroupModel model, DistanceStrategy strategy,
                 std::shared_ptr<const std::vector<std::uint8_t>> table);

  std::optional<int> analytic_length(const Element& g) const;
  std::optional<int> bidirectional_length(const Element& g) const;
  void build_table();

  GroupModel model_;
  DistanceStrategy strategy_;
  std::shared_ptr<const std::vector<std::uint8_t>> table_;
  std::vector<Element> inverse_generators_;
};

DistanceStrategy default_strategy(const GroupModel& model);

// Number of inversions of a permutation.
int inversion_count(const Permutation& p);

}  // namespace cayint
