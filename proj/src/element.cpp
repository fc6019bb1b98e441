#include "cayint/element.hpp"

#include "cayint/errors.hpp"

namespace cayint {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void mismatch(const Element& a, const Element& b) {
  throw ModelMismatch("elements " + to_string(a) + " and " + to_string(b) +
                      " belong to different groups");
}

}  // namespace

bool same_group(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  if (const auto* p = std::get_if<Permutation>(&a)) {
    return p->degree() == std::get<Permutation>(b).degree();
  }
  if (const auto* r = std::get_if<Residue>(&a)) {
    return r->modulus == std::get<Residue>(b).modulus;
  }
  return true;
}

Element multiply(const Element& a, const Element& b) {
  if (!same_group(a, b)) mismatch(a, b);
  return std::visit(
      overloaded{
          [&](const Permutation& p) -> Element {
            return p.then(std::get<Permutation>(b));
          },
          [&](const LatticePoint& p) -> Element {
            const auto& q = std::get<LatticePoint>(b);
            return LatticePoint{p.x + q.x, p.y + q.y};
          },
          [&](const Residue& r) -> Element {
            const auto& s = std::get<Residue>(b);
            return Residue{static_cast<std::uint32_t>(
                               (static_cast<std::uint64_t>(r.value) + s.value) % r.modulus),
                           r.modulus};
          },
      },
      a);
}

Element inverse(const Element& a) {
  return std::visit(
      overloaded{
          [](const Permutation& p) -> Element { return p.inverse(); },
          [](const LatticePoint& p) -> Element { return LatticePoint{-p.x, -p.y}; },
          [](const Residue& r) -> Element {
            return Residue{(r.modulus - r.value) % r.modulus, r.modulus};
          },
      },
      a);
}

Element conjugate(const Element& g, const Element& p) {
  return multiply(multiply(inverse(p), g), p);
}

bool is_identity(const Element& a) {
  return std::visit(overloaded{
                        [](const Permutation& p) { return p.is_identity(); },
                        [](const LatticePoint& p) { return p.x == 0 && p.y == 0; },
                        [](const Residue& r) { return r.value == 0; },
                    },
                    a);
}

Element identity_like(const Element& a) {
  return std::visit(overloaded{
                        [](const Permutation& p) -> Element {
                          return Permutation::identity(p.degree());
                        },
                        [](const LatticePoint&) -> Element { return LatticePoint{}; },
                        [](const Residue& r) -> Element { return Residue{0, r.modulus}; },
                    },
                    a);
}

bool is_valid(const Element& a) {
  return std::visit(overloaded{
                        [](const Permutation& p) {
                          if (p.degree() < 1 || p.degree() > kMaxDegree) return false;
                          std::uint32_t seen = 0;
                          for (int i = 0; i < p.degree(); ++i) {
                            if (p[i] < 0 || p[i] >= p.degree()) return false;
                            seen |= 1u << p[i];
                          }
                          return seen == (1u << p.degree()) - 1;
                        },
                        [](const LatticePoint&) { return true; },
                        [](const Residue& r) { return r.modulus >= 1 && r.value < r.modulus; },
                    },
                    a);
}

const Permutation& as_permutation(const Element& a) {
  const auto* p = std::get_if<Permutation>(&a);
  if (p == nullptr) {
    throw Unsupported("operation requires a permutation, got " + to_string(a));
  }
  return *p;
}

std::vector<int> cycle_structure(const Element& a) { return as_permutation(a).cycle_type(); }

std::string to_string(const Element& a) {
  return std::visit(overloaded{
                        [](const Permutation& p) { return p.to_string(); },
                        [](const LatticePoint& p) {
                          return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
                        },
                        [](const Residue& r) { return std::to_string(r.value); },
                    },
                    a);
}

}  // namespace cayint
