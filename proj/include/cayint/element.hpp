#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cayint/permutation.hpp"

namespace cayint {

// Element of Z^2 written additively.
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

// Element x^value of the cyclic group of order modulus, 0 <= value < modulus.
struct Residue {
  std::uint32_t value = 0;
  std::uint32_t modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

// Group element; the alternative in use is fixed by the model.
using Element = std::variant<Permutation, LatticePoint, Residue>;

// Product a*b. For permutations a is applied first (see Permutation).
// Throws ModelMismatch when a and b come from different groups.
Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);
// p^-1 * g * p
Element conjugate(const Element& g, const Element& p);

bool is_identity(const Element& a);
Element identity_like(const Element& a);

// Checks the payload invariant (bijection, residue range).
bool is_valid(const Element& a);

bool same_group(const Element& a, const Element& b);

// Requires a permutation; throws Unsupported otherwise.
const Permutation& as_permutation(const Element& a);
std::vector<int> cycle_structure(const Element& a);

// Cycle notation / "(a,b)" / integer residue.
std::string to_string(const Element& a);

}  // namespace cayint

template <>
struct std::hash<cayint::LatticePoint> {
  std::size_t operator()(const cayint::LatticePoint& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x632be59bd9b4e019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

template <>
struct std::hash<cayint::Residue> {
  std::size_t operator()(const cayint::Residue& r) const noexcept {
    return (static_cast<std::size_t>(r.modulus) << 32) ^ r.value;
  }
};
