#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "json.hpp"

#include "cayint/classify.hpp"
#include "cayint/median.hpp"

namespace cayint {

using Json = nlohmann::ordered_json;

// Exact integers: a JSON number when it fits in 64 bits, a decimal string otherwise.
Json count_json(const Count& c);

// {bottom, top, n, ranks, edges, stats?}; edges are [from, generator, to] in
// element syntax.
Json interval_json(const GroupModel& model, const GradedInterval& interval,
                   const IntervalStats* stats = nullptr);

Json stats_json(const IntervalStats& stats);

Json geodesics_json(const GroupModel& model, const GeodesicSet& set);

// {corners, deltas, interior_size, weight, medians, parity_ok}; parity_ok is
// null when the check does not apply to the model.
Json median_json(const Triangle& t, const InteriorRegion& region, const MedianResult& result,
                 std::optional<bool> parity_ok);

Json classification_json(const Classification& c);

Json partial_interval_json(const PartialInterval& p);

// signature,count,representative
std::string histogram_csv(const std::vector<HistogramRow>& rows);

// One cluster per rank, one edge per cover edge labelled by its generator.
// Elements in `highlight` are filled.
std::string interval_dot(const GroupModel& model, const GradedInterval& interval,
                         const std::unordered_set<Element>& highlight = {},
                         const std::string& graph_name = "interval");

// The three sides of a triangle in one digraph, interior elements filled.
std::string triangle_dot(const DistanceOracle& oracle, const Triangle& t,
                         const InteriorRegion& region);

}  // namespace cayint
