#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayint {

inline constexpr int kMaxDegree = 16;

// A permutation of {1..n}, n <= kMaxDegree, stored 0-based.
//
// Composition convention: the product a*b applies a first, then b, i.e.
// (a*b)(x) = b(a(x)). Words are read left to right, so the Cayley edge
// g -> g*s appends the generator s on the right. This is the convention under
// which s1 s3 s2 = (1,3,4,2) for the circular generators of S_4.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);

  // images[i] is the image of point i+1, given 1-based.
  static Permutation from_images(int degree, std::span<const int> images);

  // Disjoint or not, cycles are composed left to right. Points are 1-based.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>>& cycles);

  // Parses "e", "()", "(1,3)(2,5)"; whitespace is ignored.
  static Permutation parse(int degree, std::string_view text);

  static Permutation unrank(int degree, std::uint64_t rank);

  int degree() const { return n_; }

  // 0-based image of 0-based point.
  int operator[](int point) const { return img_[point]; }

  // 1-based image of 1-based point.
  int image(int point) const { return img_[point - 1] + 1; }

  // this first, then other.
  Permutation then(const Permutation& other) const;
  Permutation inverse() const;

  bool is_identity() const;
  int sign() const;

  // Nontrivial cycle lengths, sorted in decreasing order.
  std::vector<int> cycle_type() const;

  // Lexicographic rank of the image array; 0 is the identity.
  std::uint64_t lehmer_rank() const;

  // Four bits per point; unique for degree <= 16.
  std::uint64_t packed() const;

  // "e" for the identity, otherwise cycles in order of their least point.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxDegree> img_{};
};

std::uint64_t factorial(int n);

}  // namespace cayint

template <>
struct std::hash<cayint::Permutation> {
  std::size_t operator()(const cayint::Permutation& p) const noexcept {
    std::uint64_t h = p.packed() ^ (static_cast<std::uint64_t>(p.degree()) << 59);
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return static_cast<std::size_t>(h);
  }
};
