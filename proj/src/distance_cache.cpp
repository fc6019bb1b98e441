#include "cayint/distance_cache.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iterator>

#include "cayint/errors.hpp"

namespace cayint {

namespace {

constexpr char kMagic[4] = {'C', 'A', 'Y', 'D'};

template <class T>
void put_le(std::string& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    out.push_back(static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xFF));
  }
}

class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  template <class T>
  T get_le() {
    need(sizeof(T));
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += sizeof(T);
    return static_cast<T>(v);
  }

  std::string get_bytes(std::size_t n) {
    need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw ParseError("distance cache file is truncated");
  }

  std::string data_;
  std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, const GroupModel& model) {
  std::string name;
  for (char c : model.descriptor()) {
    name.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_');
  }
  if (name.size() > 48) name.resize(48);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx",
                static_cast<unsigned long long>(fnv1a64(model.generators().canonical_text())));
  return dir / (name + "-" + hash + ".cayd");
}

void write_distance_table(const std::filesystem::path& file, const DistanceOracle& oracle) {
  auto table = oracle.table();
  if (table.empty()) {
    throw Unsupported("only full distance tables can be cached (" + oracle.model().descriptor() +
                      " uses " + to_string(oracle.strategy()) + ")");
  }
  const auto& model = oracle.model();
  std::string out(kMagic, kMagic + 4);
  out.push_back(static_cast<char>(kCacheVersion));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(model.descriptor().size()));
  out += model.descriptor();
  put_le<std::uint64_t>(out, fnv1a64(model.generators().canonical_text()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(model.degree()));
  out.append(reinterpret_cast<const char*>(table.data()), table.size());

  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream stream(file, std::ios::binary | std::ios::trunc);
  if (!stream) throw Error("cannot write " + file.string());
  stream.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!stream) throw Error("failed writing " + file.string());
}

DistanceOracle load_distance_table(const std::filesystem::path& file, const GroupModel& model) {
  std::ifstream stream(file, std::ios::binary);
  if (!stream) throw ParseError("cannot open distance cache " + file.string());
  Reader in(std::string(std::istreambuf_iterator<char>(stream), {}));

  if (in.get_bytes(4) != std::string(kMagic, 4)) throw ParseError("bad magic in " + file.string());
  if (auto v = in.get_le<std::uint8_t>(); v != kCacheVersion) {
    throw ParseError("unsupported cache version " + std::to_string(v));
  }
  auto descriptor = in.get_bytes(in.get_le<std::uint32_t>());
  if (descriptor != model.descriptor()) {
    throw ParseError("cache is for model " + descriptor + ", expected " + model.descriptor());
  }
  if (in.get_le<std::uint64_t>() != fnv1a64(model.generators().canonical_text())) {
    throw ParseError("generator-set hash mismatch in " + file.string());
  }
  if (in.get_le<std::uint32_t>() != static_cast<std::uint32_t>(model.degree())) {
    throw ParseError("degree mismatch in " + file.string());
  }
  if (in.remaining() != model.order()) {
    throw ParseError("expected " + std::to_string(model.order()) + " distances, found " +
                     std::to_string(in.remaining()));
  }
  auto bytes = in.get_bytes(model.order());
  std::vector<std::uint8_t> table(bytes.begin(), bytes.end());
  return DistanceOracle::from_table(model, std::move(table));
}

bool table_is_consistent(const GroupModel& model, std::span<const std::uint8_t> table) {
  if (!model.is_finite() || table.size() != model.order()) return false;
  const auto& gens = model.generators().generators();
  std::vector<Element> inverses;
  for (const auto& s : gens) inverses.push_back(inverse(s));
  const std::uint64_t identity = model.index_of(model.identity());

  for (std::uint64_t i = 0; i < table.size(); ++i) {
    if (i == identity) {
      if (table[i] != 0) return false;
      continue;
    }
    Element x = model.element_at(i);
    int best = kUnreachableEntry;
    for (const auto& t : inverses) {
      best = std::min<int>(best, table[model.index_of(multiply(x, t))]);
    }
    const int expected = best == kUnreachableEntry ? kUnreachableEntry : best + 1;
    if (table[i] != expected) return false;
  }
  return true;
}

CacheReport verify_distance_table(const std::filesystem::path& file, const GroupModel& model) {
  try {
    DistanceOracle oracle = load_distance_table(file, model);
    if (!table_is_consistent(model, oracle.table())) {
      return {false, "distance sanity sweep failed for " + file.string()};
    }
    return {true, "ok: " + file.string() + " (" + std::to_string(oracle.table().size()) +
                      " entries, diameter " + std::to_string(oracle.diameter()) + ")"};
  } catch (const ParseError& e) {
    return {false, e.what()};
  }
}

}  // namespace cayint
