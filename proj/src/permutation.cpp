#include "cayint/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>

#include "cayint/errors.hpp"

namespace cayint {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw PreconditionError("permutation degree must be in [1," +
                            std::to_string(kMaxDegree) + "], got " +
                            std::to_string(degree));
  }
}

}  // namespace

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.img_[i] = static_cast<std::uint8_t>(i);
  return p;
}

Permutation Permutation::from_images(int degree, std::span<const int> images) {
  check_degree(degree);
  if (static_cast<int>(images.size()) != degree) {
    throw ParseError("expected " + std::to_string(degree) + " images, got " +
                     std::to_string(images.size()));
  }
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(degree);
  std::uint32_t seen = 0;
  for (int i = 0; i < degree; ++i) {
    int v = images[i];
    if (v < 1 || v > degree) {
      throw ParseError("image " + std::to_string(v) + " outside 1.." +
                       std::to_string(degree));
    }
    if (seen & (1u << (v - 1))) {
      throw ParseError("image " + std::to_string(v) + " repeated");
    }
    seen |= 1u << (v - 1);
    p.img_[i] = static_cast<std::uint8_t>(v - 1);
  }
  return p;
}

Permutation Permutation::from_cycles(int degree,
                                     const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(degree);
  for (const auto& cycle : cycles) {
    Permutation c = identity(degree);
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int a = cycle[i];
      if (a < 1 || a > degree) {
        throw ParseError("point " + std::to_string(a) + " outside 1.." +
                         std::to_string(degree));
      }
      if (seen & (1u << (a - 1))) {
        throw ParseError("point " + std::to_string(a) + " repeated in a cycle");
      }
      seen |= 1u << (a - 1);
      int b = cycle[(i + 1) % cycle.size()];
      c.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
    }
    result = result.then(c);
  }
  return result;
}

Permutation Permutation::parse(int degree, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s == "e" || s == "()") return identity(degree);
  if (s.empty()) throw ParseError("empty permutation text");

  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '(') {
      throw ParseError("expected '(' in permutation \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<int> cycle;
    while (true) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (start == i) {
        throw ParseError("expected a point in permutation \"" + std::string(text) +
                         "\"");
      }
      cycle.push_back(std::stoi(s.substr(start, i - start)));
      if (i >= s.size()) {
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      }
      if (s[i] == ',') {
        ++i;
        continue;
      }
      if (s[i] == ')') {
        ++i;
        break;
      }
      throw ParseError("unexpected '" + std::string(1, s[i]) + "' in permutation \"" +
                       std::string(text) + "\"");
    }
    cycles.push_back(std::move(cycle));
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::unrank(int degree, std::uint64_t rank) {
  check_degree(degree);
  if (rank >= factorial(degree)) {
    throw PreconditionError("rank " + std::to_string(rank) + " out of range for S_" +
                            std::to_string(degree));
  }
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(degree);
  std::uint32_t unused = (1u << degree) - 1;
  for (int i = 0; i < degree; ++i) {
    std::uint64_t f = factorial(degree - 1 - i);
    auto digit = static_cast<int>(rank / f);
    rank %= f;
    // select the digit-th set bit of unused
    std::uint32_t m = unused;
    for (int k = 0; k < digit; ++k) m &= m - 1;
    int v = std::countr_zero(m);
    unused &= ~(1u << v);
    p.img_[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.img_[i] = other.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

int Permutation::sign() const {
  // (-1)^(n - number of cycles)
  std::uint32_t seen = 0;
  int cycles = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen & (1u << i)) continue;
    ++cycles;
    for (int j = i; !(seen & (1u << j)); j = img_[j]) seen |= 1u << j;
  }
  return ((n_ - cycles) % 2 == 0) ? 1 : -1;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    if (seen & (1u << i)) continue;
    int len = 0;
    for (int j = i; !(seen & (1u << j)); j = img_[j]) {
      seen |= 1u << j;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

std::uint64_t Permutation::lehmer_rank() const {
  std::uint64_t rank = 0;
  std::uint32_t unused = (1u << n_) - 1;
  for (int i = 0; i < n_; ++i) {
    std::uint32_t below = unused & ((1u << img_[i]) - 1);
    rank = rank * static_cast<std::uint64_t>(n_ - i) +
           static_cast<std::uint64_t>(std::popcount(below));
    unused &= ~(1u << img_[i]);
  }
  return rank;
}

std::uint64_t Permutation::packed() const {
  std::uint64_t key = 0;
  for (int i = 0; i < n_; ++i) key |= static_cast<std::uint64_t>(img_[i]) << (4 * i);
  return key;
}

std::string Permutation::to_string() const {
  if (is_identity()) return "e";
  std::ostringstream out;
  std::uint32_t seen = 0;
  for (int i = 0; i < n_; ++i) {
    if ((seen & (1u << i)) || img_[i] == i) continue;
    out << '(';
    bool first = true;
    for (int j = i; !(seen & (1u << j)); j = img_[j]) {
      seen |= 1u << j;
      if (!first) out << ',';
      out << j + 1;
      first = false;
    }
    out << ')';
  }
  return out.str();
}

}  // namespace cayint
