#include "doctest.h"

#include <random>
#include <set>

#include "cayint/errors.hpp"
#include "cayint/poset.hpp"
#include "oracles.hpp"

using namespace cayint;

namespace {

Permutation P(int n, const char* text) { return Permutation::parse(n, text); }

Element random_element(const GroupModel& m, std::mt19937_64& rng) {
  return m.element_at(oracle::random_index(rng, m.order()));
}

// Explicit order relation from distances alone: x <= y iff d(b,x) + d(x,y) = d(b,y).
oracle::Poset distance_poset(const DistanceOracle& o, const GradedInterval& I) {
  oracle::Poset p;
  const std::size_t n = I.size();
  p.le.assign(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      p.le[i][j] = o.distance(I.bottom(), I.element(i)) + o.distance(I.element(i), I.element(j)) ==
                   o.distance(I.bottom(), I.element(j));
    }
  }
  return p;
}

void check_well_formed(const DistanceOracle& o, const GradedInterval& I) {
  const int n = I.length();
  REQUIRE(n == o.distance(I.bottom(), I.top()));
  CHECK(I.rank_set(0).size() == 1);
  CHECK(I.rank_set(n).size() == 1);
  CHECK(I.rank_set(0)[0] == I.bottom());
  CHECK(I.rank_set(n)[0] == I.top());
  for (std::uint32_t id = 0; id < I.size(); ++id) {
    const int r = I.rank_of(id);
    CHECK(o.distance(I.bottom(), I.element(id)) == r);
    CHECK(o.distance(I.element(id), I.top()) == n - r);
    if (r < n) CHECK_FALSE(I.out_edges(id).empty());
    if (r > 0) CHECK_FALSE(I.in_edges(id).empty());
    auto loc = I.locate(I.element(id));
    REQUIRE(loc.has_value());
    CHECK(loc->first == r);
    CHECK(I.element(I.first_id_of_rank(r) + loc->second) == I.element(id));
  }
  for (const auto& e : I.edges()) {
    CHECK(I.rank_of(e.to) == I.rank_of(e.from) + 1);
    CHECK(multiply(I.element(e.from), o.generators()[e.generator]) == I.element(e.to));
  }
}

}  // namespace

TEST_SUITE("interval") {

TEST_CASE("prefix order") {
  DistanceOracle z2(GroupModel::free_abelian_rank2());
  CHECK(prefix_le(z2, LatticePoint{1, 1}, LatticePoint{2, 2}));
  CHECK_FALSE(prefix_le(z2, LatticePoint{3, 0}, LatticePoint{2, 2}));
  CHECK(prefix_le(z2, LatticePoint{2, 2}, LatticePoint{2, 2}));

  auto m = GroupModel::sym_adjacent(5);
  DistanceOracle o(m);
  const Element g = P(5, "(1,3)");
  auto geo = geodesics(o, m.identity(), g, GeodesicMode::Enumerate, 1);
  REQUIRE(geo.words.size() == 1);
  Element x = m.identity();
  CHECK(prefix_le(o, x, g));
  for (auto letter : geo.words[0]) {
    x = multiply(x, m.generators()[letter]);
    CHECK(prefix_le(o, x, g));
  }
  CHECK_FALSE(prefix_le(o, P(5, "(4,5)"), g));
}

TEST_CASE("Z2 intervals") {
  DistanceOracle z2(GroupModel::free_abelian_rank2());
  auto single = build_interval(z2, LatticePoint{1, 1}, LatticePoint{1, 1});
  CHECK(single.size() == 1);
  CHECK(single.edges().empty());

  auto I = build_interval(z2, LatticePoint{0, 0}, LatticePoint{4, 3});
  // Antidiagonal counts of the 5x4 grid.
  std::vector<std::size_t> grid(8, 0);
  for (int x = 0; x <= 4; ++x) {
    for (int y = 0; y <= 3; ++y) ++grid[x + y];
  }
  CHECK(grid == std::vector<std::size_t>{1, 2, 3, 4, 4, 3, 2, 1});
  CHECK(I.rank_profile() == grid);
  CHECK(I.size() == 20);
  check_well_formed(z2, I);

  auto a = build_interval(z2, LatticePoint{0, 0}, LatticePoint{2, 2});
  auto b = build_interval(z2, LatticePoint{0, 0}, LatticePoint{4, 0});
  CHECK(a.size() == 9);
  CHECK(b.size() == 5);
  CHECK(geodesic_count(a) == 6);
  CHECK(geodesic_count(b) == 1);
  CHECK(max_antichain(a) == 3);
  CHECK(distance_poset(z2, a).max_antichain() == 3);
  CHECK(max_antichain(b) == 1);
  CHECK(is_lattice(a));
  CHECK(is_lattice(I));
  CHECK_FALSE(order_isomorphic(a, b));

  // The quadrant does not matter.
  auto c = build_interval(z2, LatticePoint{5, 5}, LatticePoint{3, 3});
  CHECK(order_isomorphic(a, c));
}

TEST_CASE("non-Sperner circular interval and its adjacent counterpart") {
  auto circ = GroupModel::sym_circular(4);
  DistanceOracle o4(circ);
  auto left = build_interval(o4, circ.identity(), P(4, "(1,3,4,2)"));
  check_well_formed(o4, left);
  auto st = interval_stats(left);
  CHECK(st.rank_profile == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(st.max_antichain == 4);
  CHECK_FALSE(st.is_sperner);
  CHECK(distance_poset(o4, left).max_antichain() == 4);

  auto adj = GroupModel::sym_adjacent(5);
  DistanceOracle o5(adj);
  auto right = build_interval(o5, adj.identity(), P(5, "(1,3,2)(4,5)"));
  check_well_formed(o5, right);
  auto rs = interval_stats(right);
  CHECK(rs.geodesic_count == 3);
  CHECK(rs.max_antichain == 2);
  CHECK(rs.is_sperner);
  CHECK(distance_poset(o5, right).max_antichain() == 2);
}

TEST_CASE("cyclic intervals") {
  for (int n = 4; n <= 12; n += 2) {
    auto m = GroupModel::cyclic(n, true);
    DistanceOracle o(m);
    auto I = build_interval(o, m.identity(), Residue{static_cast<std::uint32_t>(n / 2),
                                                     static_cast<std::uint32_t>(n)});
    CHECK(I.size() == static_cast<std::size_t>(n));
    CHECK(geodesic_count(I) == 2);
  }
  // Semigroup generation: every interval is a chain.
  for (int n = 2; n <= 9; ++n) {
    auto m = GroupModel::cyclic(n, false);
    DistanceOracle o(m);
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(n); ++a) {
      for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(n); ++b) {
        auto I = build_interval(o, Residue{a, static_cast<std::uint32_t>(n)},
                                Residue{b, static_cast<std::uint32_t>(n)});
        CHECK(I.size() == static_cast<std::size_t>(I.length() + 1));
        CHECK(geodesic_count(I) == 1);
        CHECK(max_antichain(I) == 1);
        CHECK(is_lattice(I));
      }
    }
  }
}

TEST_CASE("membership matches a whole-group scan in S5 for d <= 4") {
  for (bool circ : {true, false}) {
    auto m = circ ? GroupModel::sym_circular(5) : GroupModel::sym_adjacent(5);
    DistanceOracle o(m);
    oracle::Cayley ref(5, circ ? oracle::circular(5) : oracle::adjacent(5));
    const oracle::Perm e = oracle::identity(5);
    for (const auto& [hp, len] : ref.length) {
      if (len > 4) continue;
      auto I = build_interval(o, m.identity(), oracle::to(hp));
      auto expected = ref.interval(e, hp);
      std::set<oracle::Perm> got;
      for (const auto& x : I.elements()) got.insert(oracle::from(std::get<Permutation>(x)));
      CHECK(got == expected);
    }
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
      const Element g = random_element(m, rng);
      const Element h = random_element(m, rng);
      if (o.distance(g, h) > 4) continue;
      auto I = build_interval(o, g, h);
      auto expected = ref.interval(oracle::from(std::get<Permutation>(g)),
                                   oracle::from(std::get<Permutation>(h)));
      std::set<oracle::Perm> got;
      for (const auto& x : I.elements()) got.insert(oracle::from(std::get<Permutation>(x)));
      CHECK(got == expected);
      check_well_formed(o, I);
    }
  }
}

TEST_CASE("geodesic counts agree with the Cayley recursion in S6") {
  auto m = GroupModel::sym_circular(6);
  DistanceOracle o(m);
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const Element g = random_element(m, rng);
    const Element h = random_element(m, rng);
    auto I = build_interval(o, g, h);
    CHECK(geodesic_count(I) == geodesics(o, g, h, GeodesicMode::CountOnly).count);
  }
}

TEST_CASE("max antichain and lattice test agree with exhaustive search") {
  for (bool circ : {true, false}) {
    auto m = circ ? GroupModel::sym_circular(5) : GroupModel::sym_adjacent(5);
    DistanceOracle o(m);
    int checked = 0;
    for (std::uint64_t i = 0; i < m.order(); ++i) {
      auto I = build_interval(o, m.identity(), m.element_at(i));
      if (I.size() > 18) continue;
      auto ref = distance_poset(o, I);
      CHECK(max_antichain(I) == ref.max_antichain());
      CHECK(is_lattice(I) == ref.is_lattice());
      ++checked;
    }
    CHECK(checked > 40);
  }
}

TEST_CASE("weak-order intervals are lattices") {
  auto m = GroupModel::sym_adjacent(5);
  DistanceOracle o(m);
  for (std::uint64_t i = 0; i < m.order(); ++i) {
    CHECK(is_lattice(build_interval(o, m.identity(), m.element_at(i))));
  }
}

TEST_CASE("non-lattice interval") {
  // a = (3,4,5), b = (1,2)(3,4,5): a^2 = b^2 = (3,5,4), ab = ba. (2,3) completes
  // a generating set of S5.
  auto m = GroupModel::parse("sym-custom:5:(3,4,5);(1,2)(3,4,5);(2,3)");
  const auto& S = m.generators();
  const Element a = S[0], b = S[1];
  REQUIRE(multiply(a, a) == multiply(b, b));
  REQUIRE(multiply(a, b) == multiply(b, a));
  DistanceOracle o(m);
  auto I = build_interval(o, m.identity(), P(5, "(1,2)"));
  CHECK(I.rank_profile() == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK_FALSE(is_lattice(I));
  CHECK_FALSE(distance_poset(o, I).is_lattice());
  // The two atoms are a and b; both elements of rank 2 bound them from above.
  std::set<Element> atoms(I.rank_set(1).begin(), I.rank_set(1).end());
  CHECK(atoms == std::set<Element>{a, b});
  Reachability reach(I);
  for (std::uint32_t top = I.first_id_of_rank(2); top < I.first_id_of_rank(3); ++top) {
    for (std::uint32_t atom = I.first_id_of_rank(1); atom < I.first_id_of_rank(2); ++atom) {
      CHECK(reach.le(atom, top));
    }
  }
}

TEST_CASE("the two-generator subgroup instance is a diamond") {
  // <(3,4),(1,2)(3,4)> is not a generating set of S4, so it is checked with
  // the test-only BFS over the subgroup.
  oracle::Cayley sub(4, {oracle::cycle(4, {{3, 4}}), oracle::cycle(4, {{1, 2}, {3, 4}})});
  CHECK(sub.length.size() == 4);
  auto members = sub.interval(oracle::identity(4), oracle::cycle(4, {{1, 2}}));
  CHECK(members.size() == 4);
  std::vector<oracle::Perm> v(members.begin(), members.end());
  oracle::Poset p;
  const oracle::Perm e = oracle::identity(4);
  p.le.assign(v.size(), std::vector<bool>(v.size(), false));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      p.le[i][j] = *sub.dist(e, v[i]) + *sub.dist(v[i], v[j]) == *sub.dist(e, v[j]);
    }
  }
  CHECK(p.is_lattice());
  CHECK(p.max_antichain() == 2);
}

TEST_CASE("order isomorphism") {
  auto m = GroupModel::sym_adjacent(5);
  DistanceOracle o(m);
  auto i13 = build_interval(o, m.identity(), P(5, "(1,3)"));
  auto i35 = build_interval(o, m.identity(), P(5, "(3,5)"));
  auto i25 = build_interval(o, m.identity(), P(5, "(2,5)"));
  CHECK(order_isomorphic(i13, i13));
  CHECK(order_isomorphic(i13, i35));
  CHECK_FALSE(order_isomorphic(i13, i25));
}

TEST_CASE("order isomorphism is an equivalence on a sample of S5 intervals") {
  auto m = GroupModel::sym_circular(5);
  DistanceOracle o(m);
  std::mt19937_64 rng(47);
  std::vector<GradedInterval> sample;
  for (int i = 0; i < 50; ++i) {
    // Draw tops from a few lengths so that the sample has repeated shapes.
    Element g = random_element(m, rng);
    while (o.length(g) > 5) g = random_element(m, rng);
    sample.push_back(build_interval(o, m.identity(), g));
  }
  const std::size_t n = sample.size();
  std::vector<std::vector<bool>> iso(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) iso[i][j] = order_isomorphic(sample[i], sample[j]);
  }
  std::size_t related = 0;
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(iso[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(iso[i][j] == iso[j][i]);
      if (iso[i][j]) {
        ++related;
        CHECK(shape_signature(sample[i]) == shape_signature(sample[j]));
        for (std::size_t k = 0; k < n; ++k) {
          if (iso[j][k]) CHECK(iso[i][k]);
        }
      }
    }
  }
  CHECK(related > n);
}

TEST_CASE("order isomorphism across models") {
  DistanceOracle z2(GroupModel::free_abelian_rank2());
  auto square = build_interval(z2, LatticePoint{0, 0}, LatticePoint{1, 1});
  auto m = GroupModel::cyclic(4, true);
  DistanceOracle c4(m);
  auto diamond = build_interval(c4, m.identity(), Residue{2, 4});
  CHECK(order_isomorphic(square, diamond));
  auto chain = build_interval(z2, LatticePoint{0, 0}, LatticePoint{2, 0});
  CHECK_FALSE(order_isomorphic(square, chain));
}

TEST_CASE("partial intervals") {
  DistanceOracle z2(GroupModel::free_abelian_rank2());
  auto p = partial_interval(z2, LatticePoint{0, 0}, LatticePoint{4, 3}, 2);
  CHECK(p.length == 7);
  CHECK(p.forward_profile() == std::vector<std::size_t>{1, 2, 3});
  CHECK(p.backward_profile() == std::vector<std::size_t>{1, 2, 3});

  auto full = partial_interval(z2, LatticePoint{0, 0}, LatticePoint{2, 2}, 10);
  auto I = build_interval(z2, LatticePoint{0, 0}, LatticePoint{2, 2});
  for (int r = 0; r <= I.length(); ++r) {
    std::set<Element> fwd(full.forward[r].begin(), full.forward[r].end());
    std::set<Element> bwd(full.backward[I.length() - r].begin(), full.backward[I.length() - r].end());
    std::set<Element> want(I.rank_set(r).begin(), I.rank_set(r).end());
    CHECK(fwd == want);
    CHECK(bwd == want);
  }

  auto m = GroupModel::sym_circular(8);
  DistanceOracle o(m);
  std::mt19937_64 rng(53);
  int done = 0;
  while (done < 5) {
    const Element g = random_element(m, rng);
    if (o.length(g) != 7) continue;
    ++done;
    auto whole = build_interval(o, m.identity(), g).rank_profile();
    auto part = partial_interval(o, m.identity(), g, 2);
    CHECK(part.forward_profile() == std::vector<std::size_t>(whole.begin(), whole.begin() + 3));
    CHECK(part.backward_profile() == std::vector<std::size_t>(whole.rbegin(), whole.rbegin() + 3));
  }

  // Semigroup generation: the backward pass uses the inverse generator.
  auto cm = GroupModel::cyclic(7, false);
  DistanceOracle co(cm);
  auto cp = partial_interval(co, Residue{1, 7}, Residue{5, 7}, 1);
  REQUIRE(cp.backward.size() == 2);
  CHECK(cp.backward[1] == std::vector<Element>{Residue{4, 7}});
}

TEST_CASE("translation") {
  auto m = GroupModel::sym_circular(5);
  DistanceOracle o(m);
  const Element g1 = P(5, "(1,4)(2,5)");
  const Element g2 = P(5, "(1,3,5,2)");
  auto I = build_interval(o, g1, g2);
  auto same = translate_interval(I, m.identity());
  CHECK(same.elements() == I.elements());
  CHECK(same.edges() == I.edges());

  auto moved = translate_interval(I, inverse(g1));
  CHECK(moved.bottom() == m.identity());
  CHECK(order_isomorphic(moved, I));
  auto direct = build_interval(o, m.identity(), multiply(inverse(g1), g2));
  std::set<Element> a(moved.elements().begin(), moved.elements().end());
  std::set<Element> b(direct.elements().begin(), direct.elements().end());
  CHECK(a == b);

  auto base = build_interval(o, m.identity(), P(5, "(1,3)"));
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = translate_interval(base, random_element(m, rng));
    CHECK(order_isomorphic(base, t));
    check_well_formed(o, t);
  }
}

TEST_CASE("unreachable and mismatched endpoints") {
  DistanceOracle z2(GroupModel::free_abelian_rank2());
  CHECK_THROWS_AS(build_interval(z2, LatticePoint{0, 0}, P(3, "(1,2)")), ModelMismatch);
  auto cm = GroupModel::cyclic(4, false);
  DistanceOracle broken = DistanceOracle::from_table(cm, {0, 1, kUnreachableEntry, 3});
  CHECK_THROWS_AS(build_interval(broken, Residue{0, 4}, Residue{2, 4}), Unreachable);
}

}
