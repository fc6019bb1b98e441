#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayint/poset.hpp"

namespace cayint {

enum class Relation { SameLength, SameGeodesicCount, SameIntervalSize, SameIntervalIso };

const char* to_string(Relation r);
// "length", "paths", "size", "iso"
Relation parse_relation(std::string_view text);

// Partition of a set of elements. Classes appear in order of their first
// member in the input; members keep input order.
struct Classification {
  Relation relation = Relation::SameLength;
  std::vector<std::vector<Element>> classes;
  // Printable signature of each class (for iso: the shape signature plus a
  // disambiguating suffix when one bucket holds several classes).
  std::vector<std::string> signatures;
  std::unordered_map<Element, std::size_t> class_of;
  // Elements whose interval exceeded max_interval_size under SameIntervalIso.
  std::vector<Element> unclassified;
};

struct ClassifyOptions {
  std::size_t max_interval_size = 20000;
};

// Signatures are taken on [1, g]: l(g), |Geo(g)|, |[1,g]|, or the order type
// of [1,g]. Iso classes are found by bucketing on shape_signature and running
// order_isomorphic against one representative per class in the bucket.
Classification classify(const DistanceOracle& oracle, std::span<const Element> elements,
                        Relation relation, const ClassifyOptions& options = {});

struct HistogramRow {
  Count signature = 0;
  std::uint64_t count = 0;
  // Member with the smallest dense index (Lehmer rank).
  Element representative;
};

// Whole-group sweep for the numeric relations over a finite model, streaming
// elements in index order. Workers take contiguous index ranges and merge
// their per-signature counts, so the result does not depend on threads.
// Rows are sorted by signature.
std::vector<HistogramRow> census(const DistanceOracle& oracle, Relation relation,
                                 unsigned threads = 1);

// |[1,g]| without materialising the interval: every x*s^-1 with
// l(x*s^-1) = l(x) - 1 below an element x of [1,g] is again in [1,g], so the
// interval is the down-closure of g under length-decreasing steps.
std::uint64_t down_set_size(const DistanceOracle& oracle, const Element& g);

// Permutations sigma with sigma^-1 S sigma = S as sets.
struct NormaliserResult {
  std::vector<Permutation> members;  // in Lehmer order
  std::uint64_t order = 0;
};

bool in_normaliser(const Permutation& sigma, const GeneratingSet& gens);

// Scans all of S_n; n <= 8.
NormaliserResult normaliser(const GroupModel& model, const GeneratingSet& gens);

// Builds [1,g] and [1,pi^-1 g pi] and tests them for order isomorphism. pi
// must normalise gens (PreconditionError otherwise). Conjugation by a
// normalising element carries every cover edge w -> ws of the first interval
// to an edge of the second, so a false result is a bug.
bool check_normaliser_invariance(const DistanceOracle& oracle, const Element& g,
                                 const Permutation& pi, const GeneratingSet& gens);

}  // namespace cayint
