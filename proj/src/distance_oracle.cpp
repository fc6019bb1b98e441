#include "cayint/distance_oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "cayint/errors.hpp"

namespace cayint {

const char* to_string(DistanceStrategy s) {
  switch (s) {
    case DistanceStrategy::Analytic:
      return "analytic";
    case DistanceStrategy::FullTable:
      return "table";
    case DistanceStrategy::Bidirectional:
      return "bidirectional";
  }
  return "?";
}

int inversion_count(const Permutation& p) {
  int count = 0;
  for (int i = 0; i < p.degree(); ++i) {
    for (int j = i + 1; j < p.degree(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

DistanceStrategy default_strategy(const GroupModel& model) {
  switch (model.kind()) {
    case ModelKind::FreeAbelianRank2:
    case ModelKind::Cyclic:
    case ModelKind::SymAdjacent:
      return DistanceStrategy::Analytic;
    case ModelKind::SymCircular:
    case ModelKind::SymCustom:
      break;
  }
  if (model.degree() <= kMaxTableDegree) return DistanceStrategy::FullTable;
  if (model.degree() <= kMaxSearchDegree) return DistanceStrategy::Bidirectional;
  throw Unsupported("no distance strategy for " + model.descriptor() +
                    ": symmetric groups above degree " + std::to_string(kMaxSearchDegree) +
                    " are out of range");
}

DistanceOracle::DistanceOracle(GroupModel model)
    : DistanceOracle(model, default_strategy(model)) {}

DistanceOracle::DistanceOracle(GroupModel model, DistanceStrategy strategy)
    : DistanceOracle(std::move(model), strategy, nullptr) {
  if (strategy_ == DistanceStrategy::FullTable) build_table();
}

DistanceOracle::DistanceOracle(GroupModel model, DistanceStrategy strategy,
                               std::shared_ptr<const std::vector<std::uint8_t>> table)
    : model_(std::move(model)), strategy_(strategy), table_(std::move(table)) {
  for (const auto& s : model_.generators().generators()) inverse_generators_.push_back(inverse(s));

  switch (strategy_) {
    case DistanceStrategy::Analytic:
      if (model_.kind() == ModelKind::SymCircular || model_.kind() == ModelKind::SymCustom) {
        throw Unsupported("no closed-form distance for " + model_.descriptor());
      }
      break;
    case DistanceStrategy::FullTable:
      if (!model_.is_finite()) throw Unsupported("Z^2 has no finite distance table");
      if (model_.is_symmetric() && model_.degree() > kMaxTableDegree) {
        throw Unsupported("distance tables are limited to degree " +
                          std::to_string(kMaxTableDegree));
      }
      if (model_.kind() == ModelKind::Cyclic && model_.degree() > 255) {
        throw Unsupported("cyclic distance tables are limited to order 255");
      }
      break;
    case DistanceStrategy::Bidirectional:
      if (model_.is_symmetric() && model_.degree() > kMaxSearchDegree) {
        throw Unsupported("bidirectional search is limited to degree " +
                          std::to_string(kMaxSearchDegree));
      }
      break;
  }
}

DistanceOracle DistanceOracle::from_table(GroupModel model, std::vector<std::uint8_t> table) {
  if (!model.is_finite() || table.size() != model.order()) {
    throw PreconditionError("table size does not match the order of " + model.descriptor());
  }
  auto shared = std::make_shared<const std::vector<std::uint8_t>>(std::move(table));
  return DistanceOracle(std::move(model), DistanceStrategy::FullTable, std::move(shared));
}

void DistanceOracle::build_table() {
  const std::uint64_t order = model_.order();
  auto table = std::make_shared<std::vector<std::uint8_t>>(order, kUnreachableEntry);
  const auto& gens = model_.generators().generators();

  // Level-synchronous BFS: the table is fixed by the level structure, not by
  // the order in which a level is expanded.
  std::vector<Element> frontier{model_.identity()};
  (*table)[model_.index_of(frontier.front())] = 0;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    if (level + 1 >= kUnreachableEntry) {
      throw Unsupported("distances in " + model_.descriptor() + " exceed the table range");
    }
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : gens) {
        Element y = multiply(x, s);
        auto idx = model_.index_of(y);
        if ((*table)[idx] == kUnreachableEntry) {
          (*table)[idx] = static_cast<std::uint8_t>(level + 1);
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
    ++level;
  }
  table_ = std::move(table);
}

std::span<const std::uint8_t> DistanceOracle::table() const {
  if (!table_) return {};
  return *table_;
}

std::optional<int> DistanceOracle::analytic_length(const Element& g) const {
  switch (model_.kind()) {
    case ModelKind::FreeAbelianRank2: {
      const auto& p = std::get<LatticePoint>(g);
      return static_cast<int>(std::llabs(p.x) + std::llabs(p.y));
    }
    case ModelKind::Cyclic: {
      const auto& r = std::get<Residue>(g);
      if (!model_.generators().inverse_closed()) return static_cast<int>(r.value);
      return static_cast<int>(std::min(r.value, r.modulus - r.value));
    }
    case ModelKind::SymAdjacent:
      return inversion_count(std::get<Permutation>(g));
    default:
      break;
  }
  throw Unsupported("no closed-form distance for " + model_.descriptor());
}

std::optional<int> DistanceOracle::bidirectional_length(const Element& target) const {
  const Element start = model_.identity();
  if (start == target) return 0;
  const auto& gens = model_.generators().generators();

  std::unordered_map<Element, int> forward{{start, 0}};
  std::unordered_map<Element, int> backward{{target, 0}};
  std::vector<Element> forward_frontier{start};
  std::vector<Element> backward_frontier{target};
  int forward_depth = 0;
  int backward_depth = 0;

  while (!forward_frontier.empty() && !backward_frontier.empty()) {
    const bool expand_forward = forward_frontier.size() <= backward_frontier.size();
    auto& frontier = expand_forward ? forward_frontier : backward_frontier;
    auto& mine = expand_forward ? forward : backward;
    const auto& other = expand_forward ? backward : forward;
    const auto& steps = expand_forward ? gens : inverse_generators_;
    int& depth = expand_forward ? forward_depth : backward_depth;

    std::optional<int> best;
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& s : steps) {
        Element y = multiply(x, s);
        if (auto hit = other.find(y); hit != other.end()) {
          int total = depth + 1 + hit->second;
          if (!best || total < *best) best = total;
        }
        if (mine.emplace(y, depth + 1).second) next.push_back(std::move(y));
      }
    }
    ++depth;
    if (best) return best;
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<int> DistanceOracle::try_length(const Element& g) const {
  model_.check(g);
  switch (strategy_) {
    case DistanceStrategy::Analytic:
      return analytic_length(g);
    case DistanceStrategy::FullTable: {
      std::uint8_t v = (*table_)[model_.index_of(g)];
      if (v == kUnreachableEntry) return std::nullopt;
      return v;
    }
    case DistanceStrategy::Bidirectional:
      return bidirectional_length(g);
  }
  return std::nullopt;
}

std::optional<int> DistanceOracle::try_distance(const Element& g, const Element& h) const {
  model_.check(g);
  model_.check(h);
  return try_length(multiply(inverse(g), h));
}

int DistanceOracle::distance(const Element& g, const Element& h) const {
  auto d = try_distance(g, h);
  if (!d) {
    throw Unreachable(to_string(h) + " is not reachable from " + to_string(g) + " in " +
                      model_.descriptor());
  }
  return *d;
}

int DistanceOracle::length(const Element& g) const {
  return distance(model_.identity(), g);
}

int DistanceOracle::diameter() const {
  if (!model_.is_finite()) throw Unsupported("Z^2 has infinite diameter");
  if (strategy_ == DistanceStrategy::FullTable) {
    int best = 0;
    for (auto v : *table_) {
      if (v != kUnreachableEntry) best = std::max(best, static_cast<int>(v));
    }
    return best;
  }
  if (strategy_ == DistanceStrategy::Analytic) {
    const int n = model_.degree();
    if (model_.kind() == ModelKind::Cyclic) {
      return model_.generators().inverse_closed() ? n / 2 : n - 1;
    }
    return n * (n - 1) / 2;  // longest element of S_n in adjacent transpositions
  }
  throw Unsupported("diameter of " + model_.descriptor() + " needs a full distance table");
}

}  // namespace cayint
