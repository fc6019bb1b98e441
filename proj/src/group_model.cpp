#include "cayint/group_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cayint/errors.hpp"

namespace cayint {

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  return s;
}

std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("invalid " + std::string(what) + " \"" + std::string(text) + "\"");
  }
  return v;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_degree(std::string_view text) {
  std::int64_t n = parse_int(text, "degree");
  if (n < 1 || n > kMaxDegree) {
    throw ParseError("degree " + std::string(text) + " outside 1.." +
                     std::to_string(kMaxDegree));
  }
  return static_cast<int>(n);
}

// One level of a stabiliser chain: the orbit of base under gens, with
// transversal[p] mapping base to p.
struct ChainLevel {
  int base = 0;
  std::vector<Permutation> gens;
  std::vector<std::optional<Permutation>> transversal;

  void rebuild(int degree) {
    transversal.assign(degree, std::nullopt);
    transversal[base] = Permutation::identity(degree);
    std::vector<int> queue{base};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int p = queue[head];
      for (const auto& s : gens) {
        int q = s[p];
        if (!transversal[q]) {
          transversal[q] = transversal[p]->then(s);
          queue.push_back(q);
        }
      }
    }
  }

  std::uint64_t orbit_size() const {
    return static_cast<std::uint64_t>(
        std::count_if(transversal.begin(), transversal.end(),
                      [](const auto& t) { return t.has_value(); }));
  }
};

int first_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i) {
    if (p[i] != i) return i;
  }
  return -1;
}

}  // namespace

GeneratingSet::GeneratingSet(std::vector<Element> generators, std::string name)
    : generators_(std::move(generators)), name_(std::move(name)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (!is_valid(g)) throw PreconditionError("invalid generator " + to_string(g));
    if (is_identity(g)) throw PreconditionError("the identity cannot be a generator");
    if (!same_group(g, generators_.front())) {
      throw ModelMismatch("generators from different groups: " +
                          to_string(generators_.front()) + ", " + to_string(g));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[j] == g) throw PreconditionError("duplicate generator " + to_string(g));
    }
  }
  inverse_of_.resize(generators_.size());
  inverse_closed_ = true;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    inverse_of_[i] = index_of(inverse(generators_[i]));
    if (!inverse_of_[i]) inverse_closed_ = false;
  }
}

std::optional<std::uint32_t> GeneratingSet::index_of(const Element& e) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == e) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

std::string GeneratingSet::canonical_text() const {
  std::string out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i > 0) out += ';';
    out += to_string(generators_[i]);
  }
  return out;
}

Element apply_word(const Element& start, const Word& w, const GeneratingSet& gens) {
  Element current = start;
  for (auto letter : w) {
    if (letter >= gens.size()) {
      throw PreconditionError("word letter " + std::to_string(letter) +
                              " out of range for " + std::to_string(gens.size()) +
                              " generators");
    }
    current = multiply(current, gens[letter]);
  }
  return current;
}

GroupModel::GroupModel(ModelKind kind, int degree, GeneratingSet gens, std::string descriptor)
    : kind_(kind),
      degree_(degree),
      generators_(std::move(gens)),
      descriptor_(std::move(descriptor)) {}

GroupModel GroupModel::sym_circular(int n) {
  if (n < 3 || n > kMaxDegree) {
    throw PreconditionError("sym-circular needs 3 <= n <= " + std::to_string(kMaxDegree));
  }
  std::vector<Element> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(Permutation::from_cycles(n, {{i, i + 1}}));
  gens.emplace_back(Permutation::from_cycles(n, {{n, 1}}));
  std::string d = "sym-circular:" + std::to_string(n);
  return GroupModel(ModelKind::SymCircular, n, GeneratingSet(std::move(gens), d), d);
}

GroupModel GroupModel::sym_adjacent(int n) {
  if (n < 2 || n > kMaxDegree) {
    throw PreconditionError("sym-adjacent needs 2 <= n <= " + std::to_string(kMaxDegree));
  }
  std::vector<Element> gens;
  for (int i = 1; i < n; ++i) gens.emplace_back(Permutation::from_cycles(n, {{i, i + 1}}));
  std::string d = "sym-adjacent:" + std::to_string(n);
  return GroupModel(ModelKind::SymAdjacent, n, GeneratingSet(std::move(gens), d), d);
}

GroupModel GroupModel::sym_custom(int n, const std::vector<Permutation>& generators) {
  if (n < 1 || n > kMaxDegree) {
    throw PreconditionError("sym-custom needs 1 <= n <= " + std::to_string(kMaxDegree));
  }
  if (generators.empty()) throw PreconditionError("sym-custom needs at least one generator");
  std::vector<Element> gens;
  for (const auto& g : generators) {
    if (g.degree() != n) {
      throw ModelMismatch("generator " + g.to_string() + " is not in S_" + std::to_string(n));
    }
    gens.emplace_back(g);
  }
  GeneratingSet set(std::move(gens), "");
  std::string d = "sym-custom:" + std::to_string(n) + ":" + set.canonical_text();
  set = GeneratingSet(set.generators(), d);
  GroupModel model(ModelKind::SymCustom, n, std::move(set), d);
  if (!is_generating(model, model.generators())) {
    throw PreconditionError("generators " + model.generators().canonical_text() +
                            " do not generate S_" + std::to_string(n));
  }
  return model;
}

GroupModel GroupModel::cyclic(int n, bool inverse_closed) {
  if (n < 2) throw PreconditionError("cyclic group needs n >= 2");
  auto un = static_cast<std::uint32_t>(n);
  std::vector<Element> gens{Residue{1, un}};
  if (inverse_closed && n > 2) gens.emplace_back(Residue{un - 1, un});
  std::string d = "cyclic:" + std::to_string(n) + (inverse_closed ? "" : ":semigroup");
  return GroupModel(ModelKind::Cyclic, n, GeneratingSet(std::move(gens), d), d);
}

GroupModel GroupModel::free_abelian_rank2() {
  std::vector<Element> gens{LatticePoint{1, 0}, LatticePoint{0, 1}, LatticePoint{-1, 0},
                            LatticePoint{0, -1}};
  return GroupModel(ModelKind::FreeAbelianRank2, 0, GeneratingSet(std::move(gens), "z2"),
                    "z2");
}

GroupModel GroupModel::parse(std::string_view descriptor) {
  std::string s = strip(descriptor);
  auto colon = s.find(':');
  std::string head = s.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);

  if (head == "z2") {
    if (!rest.empty()) throw ParseError("z2 takes no parameters");
    return free_abelian_rank2();
  }
  if (rest.empty()) throw ParseError("model \"" + s + "\" needs a degree");
  if (head == "sym-circular") return sym_circular(parse_degree(rest));
  if (head == "sym-adjacent") return sym_adjacent(parse_degree(rest));
  if (head == "cyclic") {
    auto parts = split(rest, ':');
    std::int64_t n = parse_int(parts[0], "order");
    if (n < 2 || n > (1 << 30)) throw ParseError("cyclic order out of range: " + parts[0]);
    bool semigroup = false;
    if (parts.size() == 2 && parts[1] == "semigroup") {
      semigroup = true;
    } else if (parts.size() != 1) {
      throw ParseError("cyclic model expects cyclic:N or cyclic:N:semigroup");
    }
    return cyclic(static_cast<int>(n), !semigroup);
  }
  if (head == "sym-custom") {
    auto colon2 = rest.find(':');
    if (colon2 == std::string::npos) {
      throw ParseError("sym-custom expects sym-custom:N:<gen;gen;...>");
    }
    int n = parse_degree(rest.substr(0, colon2));
    std::vector<Permutation> gens;
    for (const auto& part : split(rest.substr(colon2 + 1), ';')) {
      if (part.empty()) continue;
      gens.push_back(Permutation::parse(n, part));
    }
    return sym_custom(n, gens);
  }
  throw ParseError("unknown model \"" + head + "\"");
}

std::uint64_t GroupModel::order() const {
  if (is_symmetric()) return factorial(degree_);
  if (kind_ == ModelKind::Cyclic) return static_cast<std::uint64_t>(degree_);
  throw Unsupported("Z^2 is infinite");
}

Element GroupModel::identity() const {
  if (is_symmetric()) return Permutation::identity(degree_);
  if (kind_ == ModelKind::Cyclic) return Residue{0, static_cast<std::uint32_t>(degree_)};
  return LatticePoint{};
}

bool GroupModel::contains(const Element& e) const {
  return is_valid(e) && same_group(e, identity());
}

void GroupModel::check(const Element& e) const {
  if (!contains(e)) {
    throw ModelMismatch("element " + to_string(e) + " is not in model " + descriptor_);
  }
}

Element GroupModel::parse_element(std::string_view text) const {
  std::string s = strip(text);
  if (is_symmetric()) return Permutation::parse(degree_, s);
  if (kind_ == ModelKind::Cyclic) {
    if (s == "e") return identity();
    std::int64_t v = parse_int(s, "residue");
    if (v < 0 || v >= degree_) {
      throw ParseError("residue " + s + " outside 0.." + std::to_string(degree_ - 1));
    }
    return Residue{static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(degree_)};
  }
  if (s == "e") return identity();
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected \"(a,b)\" for a Z^2 element, got \"" + s + "\"");
  }
  auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
  if (parts.size() != 2) throw ParseError("expected \"(a,b)\", got \"" + s + "\"");
  return LatticePoint{parse_int(parts[0], "coordinate"), parse_int(parts[1], "coordinate")};
}

std::uint64_t GroupModel::index_of(const Element& e) const {
  check(e);
  if (is_symmetric()) return std::get<Permutation>(e).lehmer_rank();
  if (kind_ == ModelKind::Cyclic) return std::get<Residue>(e).value;
  throw Unsupported("Z^2 elements have no dense index");
}

Element GroupModel::element_at(std::uint64_t index) const {
  if (is_symmetric()) return Permutation::unrank(degree_, index);
  if (kind_ == ModelKind::Cyclic) {
    if (index >= static_cast<std::uint64_t>(degree_)) {
      throw PreconditionError("residue index out of range");
    }
    return Residue{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(degree_)};
  }
  throw Unsupported("Z^2 elements have no dense index");
}

std::uint64_t permutation_group_order(int degree, const std::vector<Permutation>& gens) {
  std::vector<ChainLevel> levels;
  auto add_level = [&](const Permutation& g) {
    ChainLevel level;
    level.base = first_moved_point(g);
    levels.push_back(std::move(level));
  };

  std::vector<Permutation> top;
  for (const auto& g : gens) {
    if (g.degree() != degree) throw ModelMismatch("generator degree mismatch");
    if (!g.is_identity()) top.push_back(g);
  }
  if (top.empty()) return 1;
  add_level(top.front());
  levels[0].gens = top;
  levels[0].rebuild(degree);

  // Sift g from level `from`; returns the residue and the level where it stuck.
  auto sift = [&](Permutation g, std::size_t from) {
    std::size_t i = from;
    for (; i < levels.size(); ++i) {
      int p = g[levels[i].base];
      if (!levels[i].transversal[p]) break;
      g = g.then(levels[i].transversal[p]->inverse());
    }
    return std::pair{g, i};
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = levels.size(); i-- > 0 && !changed;) {
      const std::size_t orbit_count = levels[i].transversal.size();
      for (std::size_t p = 0; p < orbit_count && !changed; ++p) {
        if (!levels[i].transversal[p]) continue;
        for (std::size_t k = 0; k < levels[i].gens.size() && !changed; ++k) {
          const Permutation& s = levels[i].gens[k];
          const Permutation& up = *levels[i].transversal[p];
          const Permutation& uq = *levels[i].transversal[s[static_cast<int>(p)]];
          Permutation schreier = up.then(s).then(uq.inverse());
          auto [residue, stuck] = sift(schreier, i + 1);
          if (residue.is_identity()) continue;
          if (stuck == levels.size()) add_level(residue);
          for (std::size_t l = i + 1; l <= stuck; ++l) {
            levels[l].gens.push_back(residue);
            levels[l].rebuild(degree);
          }
          changed = true;
        }
      }
    }
  }

  std::uint64_t order = 1;
  for (const auto& level : levels) order *= level.orbit_size();
  return order;
}

bool is_generating(const GroupModel& model, const GeneratingSet& gens) {
  if (!model.is_finite()) throw Unsupported("generation check needs a finite model");
  for (const auto& g : gens.generators()) model.check(g);
  if (gens.size() == 0) return model.order() == 1;

  if (model.is_symmetric() && model.degree() > 9) {
    std::vector<Permutation> perms;
    for (const auto& g : gens.generators()) perms.push_back(std::get<Permutation>(g));
    return permutation_group_order(model.degree(), perms) == model.order();
  }

  // orbit BFS from the identity
  const std::uint64_t order = model.order();
  std::vector<bool> seen(order, false);
  std::vector<std::uint64_t> queue{model.index_of(model.identity())};
  seen[queue.front()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = model.element_at(queue[head]);
    for (const auto& s : gens.generators()) {
      std::uint64_t y = model.index_of(multiply(x, s));
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == order;
}

}  // namespace cayint
