#include <doctest.h>

#include "wb/rootsys.hpp"

#include "lemma_suite.hpp"

#include <map>
#include <set>

using namespace wb;

namespace {

std::vector<std::pair<char, int>> all_systems(int max_rank) {
  std::vector<std::pair<char, int>> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({'A', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'B', n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({'C', n});
  for (int n = 3; n <= max_rank; ++n) out.push_back({'D', n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({'E', n});
  if (max_rank >= 4) out.push_back({'F', 4});
  if (max_rank >= 2) out.push_back({'G', 2});
  return out;
}

size_t expected_root_count(char f, int n) {
  switch (f) {
    case 'A': return static_cast<size_t>(n) * (n + 1);
    case 'B':
    case 'C': return static_cast<size_t>(2) * n * n;
    case 'D': return static_cast<size_t>(2) * n * (n - 1);
    case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

WeightVector ev(const RootSystem& rs, std::initializer_list<long> v) {
  WeightVector w(rs.ambient_dim(), Rational(0));
  int i = 0;
  for (long x : v) w[i++] = x;
  return w;
}

}  // namespace

TEST_CASE("build: root counts from reflection closure") {
  for (auto [f, n] : all_systems(8)) {
    RootSystem rs = RootSystem::build(f, n);
    CHECK(rs.all_roots().size() == expected_root_count(f, n));
    CHECK(rs.positive_roots().size() * 2 == rs.all_roots().size());
  }
  CHECK_THROWS(RootSystem::build('D', 2));
  CHECK_THROWS(RootSystem::build('E', 5));
  CHECK_THROWS(RootSystem::build('F', 3));
  CHECK_THROWS(RootSystem::build('G', 3));
  CHECK_THROWS(RootSystem::build('X', 2));
}

TEST_CASE("build examples") {
  RootSystem a1 = RootSystem::build('A', 1);
  CHECK(a1.all_roots().size() == 2);

  RootSystem g2 = RootSystem::build('G', 2);
  CHECK(g2.all_roots().size() == 12);
  int longs = 0, shorts = 0;
  for (const auto& r : g2.all_roots()) (g2.is_long(r) ? longs : shorts)++;
  CHECK(longs == 6);
  CHECK(shorts == 6);
  // the long root 2e3 - e1 - e2
  CHECK(g2.is_root(ev(g2, {-1, -1, 2})));
  CHECK(g2.is_long(ev(g2, {-1, -1, 2})));
  CHECK(g2.highest_root() == ev(g2, {-1, -1, 2}));

  RootSystem d4 = RootSystem::build('D', 4);
  CHECK(d4.all_roots().size() == 24);
  CHECK(!d4.two_lengths());
}

TEST_CASE("type invariants over all systems of rank <= 8") {
  for (auto [f, n] : all_systems(8)) {
    RootSystem rs = RootSystem::build(f, n);
    std::set<Rational> lengths;
    size_t bad = 0;
    for (const auto& a : rs.all_roots()) {
      lengths.insert(dot(a, a));
      if (!rs.is_root(negate(a))) ++bad;
      for (const auto& b : rs.all_roots()) {
        Rational ca = rs.cartan_int(b, a), cb = rs.cartan_int(a, b);
        // the only proportional root is -a
        if (ca * cb == 4 && !(b == a || b == negate(a))) ++bad;
        if (denominator(ca) != 1) ++bad;
        Integer v = numerator(ca) < 0 ? Integer(-numerator(ca)) : numerator(ca);
        if (v > 3) ++bad;
        if (v == 3 && f != 'G') ++bad;
        // reflections permute the root set
        if (!rs.is_root(rs.reflect(b, a))) ++bad;
      }
    }
    CHECK(bad == 0);
    CHECK(lengths.size() <= 2);
    if (f == 'A' || f == 'D' || f == 'E') CHECK(lengths.size() == 1);
    // fundamental weights vs simple coroots
    for (int i = 0; i < rs.rank(); ++i)
      for (int j = 0; j < rs.rank(); ++j)
        CHECK(rs.cartan_int(rs.fundamental_weights()[i], rs.simple_roots()[j]) ==
              (i == j ? 1 : 0));
  }
}

TEST_CASE("cartan_int examples") {
  RootSystem b2 = RootSystem::build('B', 2);
  for (const auto& a : b2.all_roots()) CHECK(b2.cartan_int(a, a) == 2);
  CHECK(b2.cartan_int(ev(b2, {1, 1}), ev(b2, {0, 1})) == 2);
  CHECK_THROWS(b2.cartan_int(ev(b2, {1, 0}), ev(b2, {0, 0})));

  RootSystem g2 = RootSystem::build('G', 2);
  Rational mx(0);
  for (const auto& a : g2.all_roots())
    for (const auto& b : g2.all_roots()) {
      Rational c = g2.cartan_int(b, a);
      if (c > mx) mx = c;
    }
  CHECK(mx == 3);
}

TEST_CASE("reflect: involution, isometry, examples") {
  RootSystem a2 = RootSystem::build('A', 2);
  const auto& w1 = a2.fundamental_weights()[0];
  const auto& al1 = a2.simple_roots()[0];
  CHECK(a2.reflect(w1, al1) == sub(w1, al1));
  CHECK(a2.reflect(al1, al1) == negate(al1));
  for (const auto& a : a2.all_roots())
    for (const auto& b : a2.all_roots()) {
      CHECK(a2.reflect(a2.reflect(b, a), a) == b);
      CHECK(dot(a2.reflect(b, a), a2.reflect(b, a)) == dot(b, b));
    }
  // fixed hyperplane
  RootSystem b2 = RootSystem::build('B', 2);
  WeightVector phi = ev(b2, {0, 5});
  CHECK(b2.reflect(phi, ev(b2, {1, 0})) == phi);
}

TEST_CASE("root strings") {
  RootSystem a2 = RootSystem::build('A', 2);
  auto [p, q] = a2.root_string(a2.simple_roots()[0], a2.simple_roots()[1]);
  CHECK(p == 0);
  CHECK(q == 1);

  RootSystem d4 = RootSystem::build('D', 4);
  auto s = d4.root_string(ev(d4, {0, 0, 1, 1}), ev(d4, {1, 1, 0, 0}));
  CHECK(s == std::pair<int, int>(0, 0));

  // p - q = cartan_int, strings have at most 4 roots; length 4 occurs in G2
  int max_len = 0;
  for (auto [f, n] : all_systems(4)) {
    RootSystem rs = RootSystem::build(f, n);
    for (const auto& a : rs.all_roots())
      for (const auto& b : rs.all_roots()) {
        if (rs.cartan_int(b, a) * rs.cartan_int(a, b) == 4) continue;
        auto [pp, qq] = rs.root_string(b, a);
        CHECK(Rational(pp - qq) == rs.cartan_int(b, a));
        CHECK(pp + qq + 1 <= 4);
        if (f == 'G') max_len = std::max(max_len, pp + qq + 1);
      }
  }
  CHECK(max_len == 4);

  CHECK_THROWS(a2.root_string(a2.simple_roots()[0], a2.simple_roots()[0]));
}

TEST_CASE("weyl_orbit examples") {
  RootSystem b2 = RootSystem::build('B', 2);
  CHECK(b2.weyl_orbit(ev(b2, {0, 0})).size() == 1);
  WeightSet orb = b2.weyl_orbit(ev(b2, {1, 0}));
  CHECK(orb.size() == 4);
  CHECK(orb.count(ev(b2, {0, -1})) == 1);

  RootSystem d4 = RootSystem::build('D', 4);
  WeightSet all = d4.weyl_orbit(d4.highest_root());
  CHECK(all.size() == d4.all_roots().size());
  for (const auto& r : d4.all_roots()) CHECK(all.count(r) == 1);

  CHECK_THROWS(RootSystem::build('B', 4).weyl_orbit(RootSystem::build('B', 4).rho(), 10));
}

TEST_CASE("dominant_rep and minus_w0") {
  RootSystem b3 = RootSystem::build('B', 3);
  CHECK(b3.dominant_rep(negate(b3.fundamental_weights()[0])) == b3.fundamental_weights()[0]);

  RootSystem a2 = RootSystem::build('A', 2);
  CHECK(a2.minus_w0(a2.fundamental_weights()[0]) == a2.fundamental_weights()[1]);

  RootSystem e8 = RootSystem::build('E', 8);
  for (const auto& w : e8.fundamental_weights()) CHECK(e8.minus_w0(w) == w);
}

TEST_CASE("long_orthogonal_split") {
  RootSystem b2 = RootSystem::build('B', 2);
  auto [a, g] = b2.long_orthogonal_split(ev(b2, {1, 1}));
  CHECK(add(a, g) == ev(b2, {1, 1}));
  CHECK(dot(a, g).is_zero());

  RootSystem c2 = RootSystem::build('C', 2);
  auto [a2, g2] = c2.long_orthogonal_split(ev(c2, {2, 0}));
  CHECK(add(a2, g2) == ev(c2, {2, 0}));
  CHECK(dot(a2, g2).is_zero());

  CHECK_THROWS(RootSystem::build('G', 2).long_orthogonal_split(
      ev(RootSystem::build('G', 2), {-1, -1, 2})));
  CHECK_THROWS(b2.long_orthogonal_split(ev(b2, {1, 0})));  // short input

  // every long root of a two-length system != G2 splits (rank <= 4)
  for (auto [f, n] : all_systems(4)) {
    RootSystem rs = RootSystem::build(f, n);
    if (!rs.two_lengths() || f == 'G') continue;
    for (const auto& beta : rs.all_roots()) {
      if (!rs.is_long(beta)) continue;
      auto [x, y] = rs.long_orthogonal_split(beta);
      CHECK(add(x, y) == beta);
      CHECK(dot(x, y).is_zero());
      CHECK(rs.is_root(x));
      CHECK(rs.is_root(y));
    }
  }
}

// Lemmata on root strings and lengths, exhaustively over rank <= 8.
TEST_CASE("root-length lemmata, exhaustive") {
  for (auto [f, n] : all_systems(8)) {
    RootSystem rs = RootSystem::build(f, n);
    std::string why = wb_tests::root_lemmata_violations(rs);
    CHECK(why.empty());
    if (!why.empty()) MESSAGE(why);
  }
}

TEST_CASE("Weyl group orders, rank <= 4, by the orbit-stabilizer oracle") {
  // rho is strictly dominant, so its stabilizer is trivial and |orbit| = |W|
  std::map<std::string, size_t> expected = {
      {"A1", 2},   {"A2", 6},    {"A3", 24},  {"A4", 120}, {"B2", 8},   {"B3", 48},
      {"B4", 384}, {"C2", 8},    {"C3", 48},  {"C4", 384}, {"D3", 24},  {"D4", 192},
      {"F4", 1152}, {"G2", 12},
  };
  for (auto [f, n] : all_systems(4)) {
    RootSystem rs = RootSystem::build(f, n);
    CHECK(rs.weyl_order() == expected.at(rs.name()));
  }
}

TEST_CASE("diagram automorphisms preserve the Cartan matrix") {
  for (auto [f, n] : all_systems(8)) {
    RootSystem rs = RootSystem::build(f, n);
    auto autos = rs.diagram_automorphisms();
    size_t expected = 1;
    if (f == 'A' && n >= 2) expected = 2;
    if (f == 'D' && n != 4) expected = 2;
    if (f == 'D' && n == 4) expected = 6;
    if (f == 'E' && n == 6) expected = 2;
    CHECK(autos.size() == expected);
    for (const auto& p : autos)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          CHECK(rs.cartan_int(rs.simple_roots()[i], rs.simple_roots()[j]) ==
                rs.cartan_int(rs.simple_roots()[p[i]], rs.simple_roots()[p[j]]));
  }
}
