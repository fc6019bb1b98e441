#include "cayint/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <thread>

#include "CLI11.hpp"

#include "cayint/distance_cache.hpp"
#include "cayint/errors.hpp"
#include "cayint/export.hpp"

namespace cayint::cli {

namespace {

struct Options {
  std::string model;
  std::string format;
  std::string cache_dir;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::size_t max_words = kDefaultMaxWords;
};

std::string format_or(const Options& opt, const std::string& fallback,
                      std::initializer_list<const char*> allowed) {
  std::string f = opt.format.empty() ? fallback : opt.format;
  for (const char* a : allowed) {
    if (f == a) return f;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ParseError("format \"" + f + "\" is not available here (use " + list + ")");
}

GroupModel load_model(const Options& opt) {
  if (opt.model.empty()) throw ParseError("--model is required");
  return GroupModel::parse(opt.model);
}

// A cached full table is used when one exists for the model; otherwise the
// default strategy is built in memory.
DistanceOracle make_oracle(const GroupModel& model, const Options& opt, std::ostream& err) {
  if (!opt.cache_dir.empty() && default_strategy(model) == DistanceStrategy::FullTable) {
    auto file = cache_path(opt.cache_dir, model);
    if (std::filesystem::exists(file)) {
      try {
        return load_distance_table(file, model);
      } catch (const ParseError& e) {
        err << "warning: ignoring cache: " << e.what() << '\n';
      }
    }
  }
  return DistanceOracle(model);
}

std::vector<Element> parse_elements(const GroupModel& model, const std::vector<std::string>& args) {
  std::vector<Element> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(model.parse_element(a));
  return out;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void print_elements(std::ostream& out, std::span<const Element> elements) {
  for (std::size_t i = 0; i < elements.size(); ++i) out << (i ? " " : "") << to_string(elements[i]);
}

int cmd_dist(const Options& opt, const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  auto fmt = format_or(opt, "text", {"text", "json"});
  auto model = load_model(opt);
  auto oracle = make_oracle(model, opt, err);
  auto e = parse_elements(model, args);
  const int d = oracle.distance(e[0], e[1]);
  if (fmt == "text") {
    out << d << '\n';
  } else {
    Json j;
    j["model"] = model.descriptor();
    j["source"] = to_string(e[0]);
    j["target"] = to_string(e[1]);
    j["distance"] = d;
    print_json(out, j);
  }
  return kOk;
}

int cmd_geodesics(const Options& opt, const std::vector<std::string>& args, bool enumerate,
                  std::ostream& out, std::ostream& err) {
  auto fmt = format_or(opt, "json", {"json", "text"});
  auto model = load_model(opt);
  auto oracle = make_oracle(model, opt, err);
  auto e = parse_elements(model, args);
  auto set = geodesics(oracle, e[0], e[1],
                       enumerate ? GeodesicMode::Enumerate : GeodesicMode::CountOnly, opt.max_words);
  if (fmt == "json") {
    print_json(out, geodesics_json(model, set));
    return kOk;
  }
  out << "length " << set.length << "\ncount " << set.count << '\n';
  for (const auto& w : set.words) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << (i ? " " : "") << to_string(model.generators()[w[i]]);
    }
    out << '\n';
  }
  if (set.truncated) out << "truncated at " << opt.max_words << " words\n";
  return kOk;
}

int cmd_interval(const Options& opt, const std::vector<std::string>& args, bool stats,
                 std::optional<int> partial, std::ostream& out, std::ostream& err) {
  auto model = load_model(opt);
  auto oracle = make_oracle(model, opt, err);
  auto e = parse_elements(model, args);

  if (partial) {
    auto fmt = format_or(opt, "json", {"json", "text"});
    if (*partial < 0) throw ParseError("--partial expects k >= 0");
    auto p = partial_interval(oracle, e[0], e[1], *partial);
    if (fmt == "json") {
      print_json(out, partial_interval_json(p));
    } else {
      out << "n " << p.length << "\nforward " << join(p.forward_profile()) << "\nbackward "
          << join(p.backward_profile()) << '\n';
    }
    return kOk;
  }

  auto fmt = format_or(opt, "json", {"json", "dot", "text"});
  auto interval = build_interval(oracle, e[0], e[1]);
  std::optional<IntervalStats> st;
  if (stats) st = interval_stats(interval);

  if (fmt == "json") {
    print_json(out, interval_json(model, interval, st ? &*st : nullptr));
  } else if (fmt == "dot") {
    out << interval_dot(model, interval);
  } else {
    for (int r = 0; r <= interval.length(); ++r) {
      out << 'R' << r << ": ";
      print_elements(out, interval.rank_set(r));
      out << '\n';
    }
    if (st) {
      out << "size " << st->size << "\ngeodesics " << st->geodesic_count << "\nprofile "
          << join(st->rank_profile) << "\nmax_antichain " << st->max_antichain << "\nsperner "
          << (st->is_sperner ? "yes" : "no") << "\nlattice " << (st->is_lattice ? "yes" : "no")
          << '\n';
    }
  }
  return kOk;
}

int cmd_classify(const Options& opt, const std::string& relation, bool all,
                 const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto fmt = format_or(opt, "json", {"json", "text"});
  auto model = load_model(opt);
  const Relation rel = parse_relation(relation);
  std::vector<Element> elements;
  if (all) {
    if (!args.empty()) throw ParseError("--all and explicit elements are mutually exclusive");
    if (!model.is_finite()) throw Unsupported("--all needs a finite model, not " + model.descriptor());
    for (std::uint64_t i = 0; i < model.order(); ++i) elements.push_back(model.element_at(i));
  } else {
    if (args.empty()) throw ParseError("classify needs elements or --all");
    elements = parse_elements(model, args);
  }
  auto oracle = make_oracle(model, opt, err);
  auto c = classify(oracle, elements, rel);
  if (fmt == "json") {
    print_json(out, classification_json(c));
    return kOk;
  }
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    out << c.signatures[i] << ": ";
    print_elements(out, c.classes[i]);
    out << '\n';
  }
  if (!c.unclassified.empty()) {
    out << "unclassified: ";
    print_elements(out, c.unclassified);
    out << '\n';
  }
  return kOk;
}

int cmd_census(const Options& opt, int figure, std::ostream& out, std::ostream& err) {
  format_or(opt, "csv", {"csv"});
  auto model = load_model(opt);
  Relation rel;
  if (figure == 5) {
    rel = Relation::SameLength;
  } else if (figure == 6) {
    rel = Relation::SameIntervalSize;
  } else {
    throw ParseError("--figure expects 5 (lengths) or 6 (interval sizes)");
  }
  auto oracle = make_oracle(model, opt, err);
  out << histogram_csv(census(oracle, rel, opt.threads));
  return kOk;
}

int cmd_median(const Options& opt, const std::vector<std::string>& args, bool parity_check,
               std::ostream& out, std::ostream& err) {
  auto fmt = format_or(opt, "json", {"json", "dot", "text"});
  auto model = load_model(opt);
  auto oracle = make_oracle(model, opt, err);
  auto e = parse_elements(model, args);
  Triangle t(e[0], e[1], e[2]);
  auto region = interior(oracle, t);
  auto result = medians(oracle, t, region);

  std::optional<bool> parity;
  if (parity_check || model.kind() == ModelKind::SymCircular) {
    parity = median_parity_check(oracle, result);
  }

  if (fmt == "json") {
    print_json(out, median_json(t, region, result, parity));
  } else if (fmt == "dot") {
    out << triangle_dot(oracle, t, region);
  } else {
    out << "deltas " << region.deltas[0] << ',' << region.deltas[1] << ',' << region.deltas[2]
        << "\ninterior " << result.interior_size << "\nweight " << result.weight << "\nmedians ";
    print_elements(out, result.minimizers);
    out << '\n';
    if (parity) out << "parity " << (*parity ? "ok" : "violated") << '\n';
  }
  if (parity_check && !*parity) {
    err << "error: medians at odd distance\n";
    return kInvariantViolation;
  }
  return kOk;
}

int cmd_normaliser(const Options& opt, bool enumerate, const std::string& member,
                   std::ostream& out) {
  auto fmt = format_or(opt, "json", {"json", "text"});
  auto model = load_model(opt);
  if (!model.is_symmetric()) {
    throw Unsupported("normalisers are computed for permutation models, not " + model.descriptor());
  }
  if (!member.empty()) {
    auto sigma = std::get<Permutation>(model.parse_element(member));
    const bool in = in_normaliser(sigma, model.generators());
    if (fmt == "json") {
      Json j;
      j["model"] = model.descriptor();
      j["element"] = sigma.to_string();
      j["in_normaliser"] = in;
      print_json(out, j);
    } else {
      out << (in ? "yes" : "no") << '\n';
    }
    return kOk;
  }
  auto n = normaliser(model, model.generators());
  if (fmt == "json") {
    Json j;
    j["model"] = model.descriptor();
    j["order"] = n.order;
    if (enumerate) {
      Json members = Json::array();
      for (const auto& p : n.members) members.push_back(p.to_string());
      j["members"] = std::move(members);
    }
    print_json(out, j);
  } else {
    out << "order " << n.order << '\n';
    if (enumerate) {
      for (const auto& p : n.members) out << p.to_string() << '\n';
    }
  }
  return kOk;
}

int cmd_cache(const Options& opt, const std::string& action, const std::string& file_opt,
              std::ostream& out, std::ostream& err) {
  format_or(opt, "text", {"text"});
  auto model = load_model(opt);
  std::filesystem::path file = file_opt;
  if (file.empty()) {
    if (opt.cache_dir.empty()) {
      throw ParseError(std::string("cache needs --cache-dir, --file or ") + kCacheDirEnv);
    }
    file = cache_path(opt.cache_dir, model);
  }
  if (action == "build") {
    DistanceOracle oracle(model, DistanceStrategy::FullTable);
    write_distance_table(file, oracle);
    out << "wrote " << file.string() << " (" << oracle.table().size() << " entries, diameter "
        << oracle.diameter() << ")\n";
    return kOk;
  }
  auto report = verify_distance_table(file, model);
  (report.ok ? out : err) << report.message << '\n';
  return report.ok ? kOk : kInvariantViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley-graph intervals, geodesics and medians", "cayint"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--model", opt.model,
                 "sym-circular:N | sym-adjacent:N | sym-custom:N:<gen;...> | cyclic:N[:semigroup] | z2");
  app.add_option("--format", opt.format, "json | dot | csv | text (default depends on the command)")
      ->check(CLI::IsMember({"json", "dot", "csv", "text"}));
  app.add_option("--cache-dir", opt.cache_dir, "directory of distance-table caches")
      ->envname(kCacheDirEnv);
  app.add_option("--threads", opt.threads, "worker threads for census")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-words", opt.max_words, "cap on enumerated geodesic words");

  std::vector<std::string> elements;

  auto* dist = app.add_subcommand("dist", "geodesic distance d(g,h)");
  dist->add_option("elements", elements, "g h")->required()->expected(2);

  bool enumerate = false;
  auto* geo = app.add_subcommand("geodesics", "count or enumerate the geodesics from g to h");
  geo->add_option("elements", elements, "g h")->required()->expected(2);
  geo->add_flag("--enumerate", enumerate, "list the words");

  bool stats = false;
  std::optional<int> partial;
  auto* interval = app.add_subcommand("interval", "the graded interval [g,h]");
  interval->add_option("elements", elements, "g h")->required()->expected(2);
  interval->add_flag("--stats", stats, "size, geodesic count, antichain, Sperner and lattice tests");
  interval->add_option("--partial", partial, "only the first and last k rank-sets");

  std::string relation;
  bool all = false;
  auto* cls = app.add_subcommand("classify", "partition elements by a property of [1,g]");
  cls->add_option("--relation", relation, "length | paths | size | iso")
      ->required()
      ->check(CLI::IsMember({"length", "paths", "size", "iso"}));
  cls->add_flag("--all", all, "every element of the group");
  cls->add_option("elements", elements, "elements to classify");

  int figure = 0;
  auto* cen = app.add_subcommand("census", "whole-group histogram as CSV");
  cen->add_option("--figure", figure, "5: lengths, 6: interval sizes")->required();

  bool parity_check = false;
  auto* med = app.add_subcommand("median", "medians of three elements");
  med->add_option("elements", elements, "c0 c1 c2")->required()->expected(3);
  med->add_flag("--parity-check", parity_check, "fail unless medians are pairwise at even distance");

  std::string member;
  auto* nor = app.add_subcommand("normaliser", "normaliser of the generating set in S_n");
  nor->add_flag("--enumerate", enumerate, "list the members");
  nor->add_option("--contains", member, "test one permutation");

  std::string action;
  std::string file;
  auto* cache = app.add_subcommand("cache", "build or verify a distance-table cache");
  cache->add_option("action", action, "build | verify")
      ->required()
      ->check(CLI::IsMember({"build", "verify"}));
  cache->add_option("--file", file, "cache file (default: derived from --cache-dir and model)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*dist) return cmd_dist(opt, elements, out, err);
    if (*geo) return cmd_geodesics(opt, elements, enumerate, out, err);
    if (*interval) return cmd_interval(opt, elements, stats, partial, out, err);
    if (*cls) return cmd_classify(opt, relation, all, elements, out, err);
    if (*cen) return cmd_census(opt, figure, out, err);
    if (*med) return cmd_median(opt, elements, parity_check, out, err);
    if (*nor) return cmd_normaliser(opt, enumerate, member, out);
    if (*cache) return cmd_cache(opt, action, file, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const ModelMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Unreachable& e) {
    err << "unreachable: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kFailure;
}

}  // namespace cayint::cli
