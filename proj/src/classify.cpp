#include "cayint/classify.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <unordered_set>

#include "cayint/errors.hpp"

namespace cayint {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::SameLength:
      return "length";
    case Relation::SameGeodesicCount:
      return "paths";
    case Relation::SameIntervalSize:
      return "size";
    case Relation::SameIntervalIso:
      return "iso";
  }
  return "?";
}

Relation parse_relation(std::string_view text) {
  if (text == "length") return Relation::SameLength;
  if (text == "paths") return Relation::SameGeodesicCount;
  if (text == "size") return Relation::SameIntervalSize;
  if (text == "iso") return Relation::SameIntervalIso;
  throw ParseError("unknown relation \"" + std::string(text) + "\"");
}

namespace {

Count numeric_signature(const DistanceOracle& oracle, const Element& g, Relation relation) {
  switch (relation) {
    case Relation::SameLength:
      return oracle.length(g);
    case Relation::SameGeodesicCount:
      return geodesic_count(build_interval(oracle, oracle.model().identity(), g));
    case Relation::SameIntervalSize:
      return build_interval(oracle, oracle.model().identity(), g).size();
    case Relation::SameIntervalIso:
      break;
  }
  throw Unsupported("isomorphism classes have no numeric signature");
}

}  // namespace

Classification classify(const DistanceOracle& oracle, std::span<const Element> elements,
                        Relation relation, const ClassifyOptions& options) {
  Classification out;
  out.relation = relation;
  for (const auto& g : elements) oracle.model().check(g);

  auto add_to = [&](std::size_t cls, const Element& g) {
    out.classes[cls].push_back(g);
    out.class_of.emplace(g, cls);
  };
  auto new_class = [&](std::string signature, const Element& g) {
    out.classes.emplace_back();
    out.signatures.push_back(std::move(signature));
    add_to(out.classes.size() - 1, g);
    return out.classes.size() - 1;
  };

  if (relation != Relation::SameIntervalIso) {
    std::map<Count, std::size_t> by_signature;
    for (const auto& g : elements) {
      if (out.class_of.count(g)) continue;
      Count sig = numeric_signature(oracle, g, relation);
      if (auto it = by_signature.find(sig); it != by_signature.end()) {
        add_to(it->second, g);
      } else {
        by_signature.emplace(sig, new_class(sig.str(), g));
      }
    }
    return out;
  }

  // bucket -> (class id, representative interval)
  std::map<std::string, std::vector<std::pair<std::size_t, GradedInterval>>> buckets;
  const Element one = oracle.model().identity();
  std::unordered_set<Element> skipped;
  for (const auto& g : elements) {
    if (out.class_of.count(g) || skipped.count(g)) continue;
    // size first, so oversized intervals are flagged before they are built
    if (down_set_size(oracle, g) > options.max_interval_size) {
      out.unclassified.push_back(g);
      skipped.insert(g);
      continue;
    }
    GradedInterval interval = build_interval(oracle, one, g);
    std::string key = shape_signature(interval);
    auto& bucket = buckets[key];
    bool placed = false;
    for (const auto& [cls, rep] : bucket) {
      if (order_isomorphic(rep, interval)) {
        add_to(cls, g);
        placed = true;
        break;
      }
    }
    if (!placed) {
      std::string signature = key;
      if (!bucket.empty()) signature += "#" + std::to_string(bucket.size());
      std::size_t cls = new_class(std::move(signature), g);
      bucket.emplace_back(cls, std::move(interval));
    }
  }
  return out;
}

std::uint64_t down_set_size(const DistanceOracle& oracle, const Element& g) {
  const auto& gens = oracle.generators();
  std::vector<Element> frontier{g};
  std::uint64_t total = 1;
  for (int len = oracle.length(g); len > 0; --len) {
    std::vector<Element> next;
    std::unordered_set<Element> seen;
    for (const auto& x : frontier) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Element y = multiply(x, oracle.inverse_generator(s));
        if (oracle.length(y) != len - 1) continue;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    total += next.size();
    frontier = std::move(next);
  }
  return total;
}

std::vector<HistogramRow> census(const DistanceOracle& oracle, Relation relation,
                                 unsigned threads) {
  const auto& model = oracle.model();
  if (!model.is_finite()) throw Unsupported("census needs a finite model");
  if (relation == Relation::SameIntervalIso) {
    throw Unsupported("census supports length, paths and size signatures");
  }
  const std::uint64_t order = model.order();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(order)));

  struct Bin {
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;
  };
  using Bins = std::map<Count, Bin>;
  std::vector<Bins> partial(threads);
  std::vector<std::exception_ptr> errors(threads);

  auto work = [&](unsigned t) {
    try {
      const std::uint64_t begin = order * t / threads;
      const std::uint64_t end = order * (t + 1) / threads;
      for (std::uint64_t i = begin; i < end; ++i) {
        Count sig = numeric_signature(oracle, model.element_at(i), relation);
        auto [it, inserted] = partial[t].try_emplace(std::move(sig), Bin{0, i});
        ++it->second.count;
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Bins merged;
  for (const auto& bins : partial) {
    for (const auto& [sig, bin] : bins) {
      auto [it, inserted] = merged.try_emplace(sig, bin);
      if (!inserted) {
        it->second.count += bin.count;
        it->second.first_index = std::min(it->second.first_index, bin.first_index);
      }
    }
  }
  std::vector<HistogramRow> rows;
  for (const auto& [sig, bin] : merged) {
    rows.push_back({sig, bin.count, model.element_at(bin.first_index)});
  }
  return rows;
}

bool in_normaliser(const Permutation& sigma, const GeneratingSet& gens) {
  for (const auto& s : gens.generators()) {
    const auto* p = std::get_if<Permutation>(&s);
    if (p == nullptr || p->degree() != sigma.degree()) {
      throw ModelMismatch("normaliser needs permutation generators of degree " +
                          std::to_string(sigma.degree()));
    }
    Permutation image = sigma.inverse().then(*p).then(sigma);
    if (!gens.index_of(image)) return false;
  }
  return true;
}

NormaliserResult normaliser(const GroupModel& model, const GeneratingSet& gens) {
  if (!model.is_symmetric()) throw Unsupported("normaliser needs a symmetric model");
  if (model.degree() > 8) throw Unsupported("normaliser enumeration is limited to n <= 8");
  NormaliserResult result;
  const std::uint64_t order = model.order();
  for (std::uint64_t r = 0; r < order; ++r) {
    Permutation sigma = Permutation::unrank(model.degree(), r);
    if (in_normaliser(sigma, gens)) result.members.push_back(sigma);
  }
  result.order = result.members.size();
  return result;
}

bool check_normaliser_invariance(const DistanceOracle& oracle, const Element& g,
                                 const Permutation& pi, const GeneratingSet& gens) {
  if (!in_normaliser(pi, gens)) {
    throw PreconditionError(pi.to_string() + " does not normalise the generating set");
  }
  const Element one = oracle.model().identity();
  GradedInterval first = build_interval(oracle, one, g);
  GradedInterval second = build_interval(oracle, one, conjugate(g, Element{pi}));
  return order_isomorphic(first, second);
}

}  // namespace cayint
