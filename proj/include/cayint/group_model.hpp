#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cayint/element.hpp"

namespace cayint {

// Sequence of generator indices; the empty word is epsilon.
using Word = std::vector<std::uint32_t>;

// Ordered list of generators. inverse_closed() is derived: true iff the set
// equals its set of inverses. No inverses are added implicitly, so a set that
// is not inverse-closed generates the group as a semigroup.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  GeneratingSet(std::vector<Element> generators, std::string name);

  const std::vector<Element>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  const Element& operator[](std::size_t i) const { return generators_[i]; }
  bool inverse_closed() const { return inverse_closed_; }
  const std::string& name() const { return name_; }

  std::optional<std::uint32_t> index_of(const Element& e) const;

  // Index of the inverse of generator i, when that inverse is in the set.
  std::optional<std::uint32_t> inverse_index(std::uint32_t i) const { return inverse_of_[i]; }

  // Generators printed in element syntax, joined by ';'.
  std::string canonical_text() const;

 private:
  std::vector<Element> generators_;
  std::vector<std::optional<std::uint32_t>> inverse_of_;
  bool inverse_closed_ = false;
  std::string name_;
};

// start * ol(w). Throws PreconditionError on an out-of-range letter.
Element apply_word(const Element& start, const Word& w, const GeneratingSet& gens);

enum class ModelKind { SymCircular, SymAdjacent, SymCustom, Cyclic, FreeAbelianRank2 };

// A group together with its generating set.
//
//   SymCircular(n)  (1,2),(2,3),...,(n-1,n),(n,1)
//   SymAdjacent(n)  (1,2),...,(n-1,n)
//   SymCustom(n,S)  S must generate S_n; checked at construction
//   Cyclic(n)       x, plus x^-1 when inverse-closed (n >= 3)
//   Z^2             (1,0),(0,1),(-1,0),(0,-1)
class GroupModel {
 public:
  static GroupModel sym_circular(int n);
  static GroupModel sym_adjacent(int n);
  static GroupModel sym_custom(int n, const std::vector<Permutation>& generators);
  static GroupModel cyclic(int n, bool inverse_closed);
  static GroupModel free_abelian_rank2();

  // sym-circular:N, sym-adjacent:N, sym-custom:N:<gen;gen;...>, cyclic:N[:semigroup], z2
  static GroupModel parse(std::string_view descriptor);

  ModelKind kind() const { return kind_; }
  // n for symmetric and cyclic models, 0 for Z^2.
  int degree() const { return degree_; }
  bool is_finite() const { return kind_ != ModelKind::FreeAbelianRank2; }
  bool is_symmetric() const {
    return kind_ == ModelKind::SymCircular || kind_ == ModelKind::SymAdjacent ||
           kind_ == ModelKind::SymCustom;
  }
  std::uint64_t order() const;

  const GeneratingSet& generators() const { return generators_; }

  // Round-trips through parse().
  const std::string& descriptor() const { return descriptor_; }

  Element identity() const;
  bool contains(const Element& e) const;

  // Throws ModelMismatch when e does not belong to this model.
  void check(const Element& e) const;

  Element parse_element(std::string_view text) const;
  std::string format(const Element& e) const { return to_string(e); }

  // Dense index for finite models: Lehmer rank or residue.
  std::uint64_t index_of(const Element& e) const;
  Element element_at(std::uint64_t index) const;

 private:
  GroupModel(ModelKind kind, int degree, GeneratingSet gens, std::string descriptor);

  ModelKind kind_ = ModelKind::FreeAbelianRank2;
  int degree_ = 0;
  GeneratingSet generators_;
  std::string descriptor_;
};

// True iff the closure of S under multiplication is the whole (finite) group.
// Orbit BFS over the Cayley graph for n <= 9; Schreier-Sims order computation
// beyond that. Throws Unsupported for Z^2.
bool is_generating(const GroupModel& model, const GeneratingSet& gens);

// Order of the permutation group generated by gens (Schreier-Sims).
std::uint64_t permutation_group_order(int degree, const std::vector<Permutation>& gens);

}  // namespace cayint
