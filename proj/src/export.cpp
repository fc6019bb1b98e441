#include "cayint/export.hpp"

#include <map>
#include <sstream>

namespace cayint {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

Json element_list(const std::vector<Element>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(to_string(e));
  return out;
}

}  // namespace

Json count_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) {
    return c.convert_to<std::uint64_t>();
  }
  return c.str();
}

Json stats_json(const IntervalStats& stats) {
  Json out;
  out["size"] = stats.size;
  out["geodesic_count"] = count_json(stats.geodesic_count);
  out["rank_profile"] = stats.rank_profile;
  out["max_antichain"] = stats.max_antichain;
  out["is_sperner"] = stats.is_sperner;
  out["is_lattice"] = stats.is_lattice;
  return out;
}

Json interval_json(const GroupModel& model, const GradedInterval& interval,
                   const IntervalStats* stats) {
  Json out;
  out["model"] = model.descriptor();
  out["bottom"] = to_string(interval.bottom());
  out["top"] = to_string(interval.top());
  out["n"] = interval.length();
  Json ranks = Json::array();
  for (int r = 0; r <= interval.length(); ++r) {
    Json level = Json::array();
    for (const auto& e : interval.rank_set(r)) level.push_back(to_string(e));
    ranks.push_back(std::move(level));
  }
  out["ranks"] = std::move(ranks);
  Json edges = Json::array();
  const auto& gens = model.generators();
  for (const auto& e : interval.edges()) {
    edges.push_back(Json::array({to_string(interval.element(e.from)), to_string(gens[e.generator]),
                                 to_string(interval.element(e.to))}));
  }
  out["edges"] = std::move(edges);
  if (stats != nullptr) out["stats"] = stats_json(*stats);
  return out;
}

Json geodesics_json(const GroupModel& model, const GeodesicSet& set) {
  Json out;
  out["source"] = to_string(set.source);
  out["target"] = to_string(set.target);
  out["length"] = set.length;
  out["count"] = count_json(set.count);
  Json words = Json::array();
  for (const auto& w : set.words) {
    Json letters = Json::array();
    for (auto i : w) letters.push_back(to_string(model.generators()[i]));
    words.push_back(std::move(letters));
  }
  out["words"] = std::move(words);
  out["truncated"] = set.truncated;
  return out;
}

Json median_json(const Triangle& t, const InteriorRegion& region, const MedianResult& result,
                 std::optional<bool> parity_ok) {
  Json out;
  out["corners"] = Json::array(
      {to_string(t.original_corner(0)), to_string(t.original_corner(1)),
       to_string(t.original_corner(2))});
  out["deltas"] = region.deltas;
  out["interior_size"] = result.interior_size;
  out["weight"] = result.weight;
  out["medians"] = element_list(result.minimizers);
  out["parity_ok"] = parity_ok ? Json(*parity_ok) : Json(nullptr);
  return out;
}

Json classification_json(const Classification& c) {
  Json out;
  out["relation"] = to_string(c.relation);
  Json classes = Json::array();
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    Json cls;
    cls["id"] = i;
    cls["signature"] = c.signatures[i];
    cls["members"] = element_list(c.classes[i]);
    classes.push_back(std::move(cls));
  }
  out["classes"] = std::move(classes);
  out["unclassified"] = element_list(c.unclassified);
  return out;
}

Json partial_interval_json(const PartialInterval& p) {
  Json out;
  out["n"] = p.length;
  out["forward_profile"] = p.forward_profile();
  out["backward_profile"] = p.backward_profile();
  Json forward = Json::array();
  for (const auto& level : p.forward) forward.push_back(element_list(level));
  Json backward = Json::array();
  for (const auto& level : p.backward) backward.push_back(element_list(level));
  out["forward"] = std::move(forward);
  out["backward"] = std::move(backward);
  return out;
}

std::string histogram_csv(const std::vector<HistogramRow>& rows) {
  std::ostringstream out;
  out << "signature,count,representative\n";
  for (const auto& row : rows) {
    out << row.signature << ',' << row.count << ',' << quoted(to_string(row.representative))
        << '\n';
  }
  return out.str();
}

std::string interval_dot(const GroupModel& model, const GradedInterval& interval,
                         const std::unordered_set<Element>& highlight,
                         const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n  node [shape=ellipse];\n";
  for (int r = 0; r <= interval.length(); ++r) {
    out << "  subgraph cluster_rank_" << r << " {\n";
    out << "    rank=same; style=invis; label=" << quoted("R" + std::to_string(r)) << ";\n";
    const std::uint32_t first = interval.first_id_of_rank(r);
    for (std::uint32_t k = 0; k < interval.rank_set(r).size(); ++k) {
      const Element& e = interval.element(first + k);
      out << "    n" << first + k << " [label=" << quoted(to_string(e));
      if (highlight.count(e)) out << ", style=filled, fillcolor=lightgrey";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& e : interval.edges()) {
    out << "  n" << e.from << " -> n" << e.to
        << " [label=" << quoted(to_string(model.generators()[e.generator])) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string triangle_dot(const DistanceOracle& oracle, const Triangle& t,
                         const InteriorRegion& region) {
  std::unordered_set<Element> inside;
  for (const auto& p : region.points) inside.insert(p.element);

  std::map<std::string, bool> nodes;  // label -> filled
  std::map<std::tuple<std::string, std::string, std::string>, int> edges;
  constexpr std::array<std::array<std::size_t, 2>, 3> kSides{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& [a, b] : kSides) {
    GradedInterval side = build_interval(oracle, t.original_corner(a), t.original_corner(b));
    for (const auto& e : side.elements()) nodes[to_string(e)] = inside.count(e) > 0;
    for (const auto& e : side.edges()) {
      edges.emplace(std::tuple{to_string(side.element(e.from)),
                               to_string(oracle.generators()[e.generator]),
                               to_string(side.element(e.to))},
                    0);
    }
  }
  for (const auto& p : region.points) nodes.emplace(to_string(p.element), true);

  std::ostringstream out;
  out << "digraph \"triangle\" {\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  " << quoted(to_string(t.original_corner(i))) << " [shape=box];\n";
  }
  for (const auto& [label, filled] : nodes) {
    out << "  " << quoted(label);
    if (filled) out << " [style=filled, fillcolor=lightgrey]";
    out << ";\n";
  }
  for (const auto& [edge, unused] : edges) {
    const auto& [from, gen, to] = edge;
    out << "  " << quoted(from) << " -> " << quoted(to) << " [label=" << quoted(gen) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cayint
