#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "gaoforge/catalog.hpp"
#include "gaoforge/engine.hpp"
#include "naive.hpp"

using namespace gaoforge;

namespace {
ResidueSequence seq(Int n, std::vector<Int> t) { return ResidueSequence(Modulus(n), std::move(t)); }
WeightSet units_of(Int n) { return WeightSet::all_units(Modulus(n)); }
std::vector<std::vector<Int>> profiles(const ExtremalCatalog& c) {
  std::vector<std::vector<Int>> out;
  for (const auto& k : c.classes) out.push_back(k.profile.entries);
  return out;
}
}  // namespace

TEST_CASE("canonical profiles") {
  CHECK(canonicalize(seq(8, {1, 2, 4, 4, 4, 0, 0, 0, 0, 0}), units_of(8)).entries ==
        std::vector<Int>{1, 2, 4, 4, 4, 8, 8, 8, 8, 8});
  CHECK(canonicalize(seq(6, {5, 3, 0}), units_of(6)).entries == std::vector<Int>{1, 3, 6});
  CHECK(canonicalize(seq(6, {}), units_of(6)).entries.empty());
  CHECK_THROWS_AS(canonicalize(seq(6, {1}), WeightSet::explicit_set(Modulus(6), {1, 2})),
                  std::invalid_argument);
  // {1, 4} in Z_15: the global unit 2 sends 7 -> 14 -> least orbit element 14, 11 -> 7.
  const auto h = WeightSet::explicit_set(Modulus(15), {1, 4});
  CHECK(canonicalize(seq(15, {7}), h).entries == std::vector<Int>{1});
  CHECK(canonicalize(seq(15, {7, 0}), h).entries == std::vector<Int>{1, 15});
}

TEST_CASE("equivalence") {
  CHECK(are_equivalent(seq(6, {1, 3, 0}), seq(6, {5, 3, 0}), units_of(6)));
  const auto s = seq(8, {1, 2, 4, 0});
  CHECK(are_equivalent(s, s, units_of(8)));
  CHECK_FALSE(are_equivalent(seq(8, {1, 2, 0}), seq(8, {1, 4, 0}), units_of(8)));
  CHECK_THROWS_AS(are_equivalent(seq(8, {1}), seq(8, {1, 2}), units_of(8)), std::invalid_argument);
}

TEST_CASE("canonical form is constant on orbits") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 2000; ++trial) {
    const Int n = std::uniform_int_distribution<Int>(2, 60)(rng);
    const Modulus m(n);
    const auto u = units(m);
    const bool full = trial % 2 == 0;
    std::vector<Int> gens{u[rng() % u.size()]};
    std::set<Int> h{1};
    for (bool grown = true; grown;) {
      grown = false;
      for (Int x : std::vector<Int>(h.begin(), h.end()))
        if (h.insert(x * gens[0] % n).second) grown = true;
    }
    const auto a = full ? WeightSet::all_units(m) : WeightSet::explicit_set(m, {h.begin(), h.end()});
    const int k = std::uniform_int_distribution<int>(0, 8)(rng);
    std::vector<Int> t;
    for (int i = 0; i < k; ++i) t.push_back(std::uniform_int_distribution<Int>(0, n - 1)(rng));
    const Int c = u[rng() % u.size()];
    std::vector<Int> moved;
    for (Int x : t) moved.push_back(c * a.residues()[rng() % a.residues().size()] % n * x % n);
    std::shuffle(moved.begin(), moved.end(), rng);
    const auto p = canonicalize(seq(n, t), a);
    CHECK(p == canonicalize(seq(n, moved), a));
    CHECK(canonicalize(representative(p), a) == p);  // idempotent
  }
}

TEST_CASE("Z_8 Gao catalog") {
  const Modulus m(8);
  const auto cat = enumerate_gao_extremal(m, units_of(8));
  CHECK(cat.constant == 11);
  CHECK(profiles(cat) == std::vector<std::vector<Int>>{{1, 2, 4, 4, 4, 4, 4, 4, 4, 8},
                                                      {1, 2, 4, 4, 4, 4, 4, 8, 8, 8},
                                                      {1, 2, 4, 4, 4, 8, 8, 8, 8, 8},
                                                      {1, 2, 4, 8, 8, 8, 8, 8, 8, 8}});
  CHECK(cat.classes.back().representative.terms() == std::vector<Int>{1, 2, 4, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("small catalogs") {
  const std::vector<Int> z14(14, 15);
  auto with_zeros = [&](std::vector<Int> head) {
    head.insert(head.end(), z14.begin(), z14.end());
    return head;
  };
  // Three classes: (3,5) is zero-sum free as well.
  CHECK(profiles(enumerate_gao_extremal(Modulus(15), units_of(15))) ==
        std::vector<std::vector<Int>>{with_zeros({1, 3}), with_zeros({1, 5}), with_zeros({3, 5})});
  CHECK(profiles(enumerate_davenport_extremal(Modulus(15), units_of(15))) ==
        std::vector<std::vector<Int>>{{1, 3}, {1, 5}, {3, 5}});
  CHECK(profiles(enumerate_gao_extremal(Modulus(2), units_of(2))) == std::vector<std::vector<Int>>{{1, 2}});
  CHECK(profiles(enumerate_davenport_extremal(Modulus(4), units_of(4))) == std::vector<std::vector<Int>>{{1, 2}});
  const auto d30 = profiles(enumerate_davenport_extremal(Modulus(30), units_of(30)));
  CHECK(std::count(d30.begin(), d30.end(), std::vector<Int>{1, 3, 5}) == 1);
}

TEST_CASE("catalogs match brute force over raw sequences, n <= 10") {
  for (Int n = 2; n <= 10; ++n) {
    const Modulus m(n);
    const auto a = units_of(n);
    const auto w = naive::units_of(n);
    const auto dav = enumerate_davenport_extremal(m, a);
    std::set<std::vector<Int>> want;
    naive::multisets(n, static_cast<int>(dav.constant - 1), [&](const std::vector<Int>& t) {
      if (!naive::any_zero_sum(n, t, w)) want.insert(naive::gcd_profile(n, t));
    });
    const auto got = profiles(dav);
    CHECK(std::vector<std::vector<Int>>(want.begin(), want.end()) == got);

    const auto gao = enumerate_gao_extremal(m, a);
    std::set<std::vector<Int>> want_gao;
    naive::multisets(n, static_cast<int>(gao.constant - 1), [&](const std::vector<Int>& t) {
      if (!has_wzs_subsequence_of_length(ResidueSequence(m, t), a, static_cast<std::size_t>(n)))
        want_gao.insert(naive::gcd_profile(n, t));
    });
    CHECK(std::vector<std::vector<Int>>(want_gao.begin(), want_gao.end()) == profiles(gao));
  }
}

TEST_CASE("representatives are extremal and cannot be extended") {
  for (Int n : {6, 8, 9, 12, 15, 16, 20}) {
    const Modulus m(n);
    const auto a = units_of(n);
    for (auto kind : {ConstantKind::Gao, ConstantKind::Davenport}) {
      const auto cat = kind == ConstantKind::Gao ? enumerate_gao_extremal(m, a)
                                                 : enumerate_davenport_extremal(m, a);
      REQUIRE_FALSE(cat.classes.empty());
      for (const auto& k : cat.classes) {
        CHECK(is_extremal(k.representative, a, kind));
        CHECK(static_cast<Int>(k.representative.size()) == cat.constant - 1);
        for (Int d : m.divisors()) {
          auto t = k.representative.terms();
          t.push_back(d % n);
          CHECK_FALSE(is_extremal(ResidueSequence(m, t), a, kind));
        }
      }
    }
  }
}

TEST_CASE("equivalent sequences are both extremal or neither") {
  std::mt19937_64 rng(23);
  const Modulus m(12);
  const auto a = units_of(12);
  const auto u = units(m);
  for (const auto& k : enumerate_gao_extremal(m, a).classes) {
    for (int trial = 0; trial < 20; ++trial) {
      auto t = k.representative.terms();
      for (auto& x : t) x = x * u[rng() % u.size()] % 12;
      std::shuffle(t.begin(), t.end(), rng);
      CHECK(is_extremal(ResidueSequence(m, t), a, ConstantKind::Gao));
    }
  }
}

TEST_CASE("proper subgroups") {
  // {1, -1} on Z_7: orbits {1,6}, {2,5}, {3,4}.
  const Modulus m(7);
  const auto pm = WeightSet::explicit_set(m, {1, 6});
  const auto cat = enumerate_davenport_extremal(m, pm);
  CHECK(cat.constant == 3);
  for (const auto& k : cat.classes) CHECK(is_extremal(k.representative, pm, ConstantKind::Davenport));
  // Brute force: classes of zero-sum-free pairs up to a global unit and signs.
  std::set<std::vector<Int>> want;
  naive::multisets(7, 2, [&](const std::vector<Int>& t) {
    if (!naive::any_zero_sum(7, t, {1, 6})) want.insert(canonicalize(ResidueSequence(m, t), pm).entries);
  });
  CHECK(want.size() == cat.classes.size());
}
