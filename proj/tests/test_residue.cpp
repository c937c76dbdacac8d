#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gaoforge/residue.hpp"
#include "gaoforge/residue_set.hpp"
#include "gaoforge/sequence.hpp"

using namespace gaoforge;

TEST_CASE("factorize") {
  CHECK(factorize(12).factors() == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK(factorize(8).factors() == std::vector<PrimePower>{{2, 3}});
  CHECK(factorize(30).factors() == std::vector<PrimePower>{{2, 1}, {3, 1}, {5, 1}});
  CHECK(factorize(999983).factors() == std::vector<PrimePower>{{999983, 1}});
  CHECK_THROWS_AS(factorize(1), std::out_of_range);
  CHECK_THROWS_AS(factorize(1'000'001), std::out_of_range);
  CHECK_THROWS_AS(factorize(50, 40), std::out_of_range);
  for (Int n = 2; n <= 2000; ++n) {
    Int prod = 1;
    Int last = 1;
    const auto m = factorize(n);
    for (const auto& f : m.factors()) {
      CHECK(f.prime > last);
      CHECK(f.exponent >= 1);
      last = f.prime;
      prod *= ipow(f.prime, f.exponent);
    }
    CHECK(prod == n);
  }
}

TEST_CASE("omega and valuations") {
  CHECK(big_omega(Modulus(12)) == 3);
  CHECK(small_omega(Modulus(12)) == 2);
  CHECK(big_omega(Modulus(8)) == 3);
  CHECK(v_p(Modulus(24), 2) == 3);
  CHECK(v_p(Modulus(24), 5) == 0);
  CHECK(Modulus(30).is_squarefree());
  CHECK_FALSE(Modulus(12).is_squarefree());
  CHECK(Modulus(12).divisors() == std::vector<Int>{1, 2, 3, 4, 6, 12});
  CHECK(Modulus(12).prime_multiset() == std::vector<Int>{2, 2, 3});
}

TEST_CASE("units") {
  CHECK(units(Modulus(12)) == std::vector<Int>{1, 5, 7, 11});
  CHECK(units(Modulus(2)) == std::vector<Int>{1});
  CHECK(units(Modulus(7)) == std::vector<Int>{1, 2, 3, 4, 5, 6});
  for (Int n = 2; n <= 60; ++n) {
    const auto u = units(Modulus(n));
    const std::set<Int> us(u.begin(), u.end());
    CHECK(us.count(1));
    for (Int a : u)
      for (Int b : u) CHECK(us.count(a * b % n));
  }
}

TEST_CASE("orbits") {
  const Modulus m12(12), m6(6);
  CHECK(orbit_of(2, WeightSet::all_units(m12)) == std::vector<Int>{2, 10});
  CHECK(orbit_of(0, WeightSet::all_units(m12)) == std::vector<Int>{0});
  CHECK(orbit_of(0, WeightSet::explicit_set(m12, {1, 5})) == std::vector<Int>{0});
  CHECK(orbit_of(3, WeightSet::all_units(m6)) == std::vector<Int>{3});
  CHECK(orbit_of(3, WeightSet::explicit_set(m12, {1, 2})) == std::vector<Int>{3, 6});
}

TEST_CASE("unit orbits are gcd classes, n <= 200") {
  for (Int n = 2; n <= 200; ++n) {
    const Modulus m(n);
    const auto a = WeightSet::all_units(m);
    const auto u = units(m);
    for (Int x = 0; x < n; ++x) {
      std::set<Int> direct;
      for (Int w : u) direct.insert(w * x % n);
      std::vector<Int> by_gcd;
      for (Int y = 0; y < n; ++y)
        if (gcd(y, n) == gcd(x, n)) by_gcd.push_back(y);
      const auto orbit = orbit_of(x, a);
      CHECK(orbit == std::vector<Int>(direct.begin(), direct.end()));
      CHECK(orbit == by_gcd);
    }
    // u*x has the same orbit as x
    for (Int x = 0; x < n; x += 7) CHECK(orbit_of(u.back() * x % n, a) == orbit_of(x, a));
  }
}

TEST_CASE("weight sets") {
  const Modulus m(12);
  const auto all = WeightSet::all_units(m);
  CHECK(all.is_unit_subgroup());
  CHECK(all.realizes_all_units());
  CHECK(all.describe() == "units");
  const auto pm = WeightSet::explicit_set(m, {13, 11, 1});
  CHECK(pm.residues() == std::vector<Int>{1, 11});
  CHECK(pm.is_unit_subgroup());
  CHECK_FALSE(pm.realizes_all_units());
  CHECK(pm.contains_minus_one());
  CHECK(WeightSet::explicit_set(m, {1, 5, 7, 11}).realizes_all_units());
  CHECK_FALSE(WeightSet::explicit_set(m, {1, 5, 7}).is_unit_subgroup());
  CHECK_FALSE(WeightSet::explicit_set(m, {1, 2}).is_unit_subgroup());
  CHECK_THROWS_AS(WeightSet::explicit_set(m, {}), std::invalid_argument);
}

TEST_CASE("projections") {
  const Modulus m(12);
  const ResidueSequence s(m, {1, 3, 4});
  CHECK(crt_project(s, 3).terms() == std::vector<Int>{1, 0, 1});
  CHECK(crt_project(s, 3).n() == 3);
  CHECK(crt_project(s, 2).terms() == std::vector<Int>{1, 3, 0});
  CHECK(crt_project(s, 2).n() == 4);
  CHECK(crt_project(ResidueSequence(m, {0, 0}), 2).terms() == std::vector<Int>{0, 0});
  CHECK_THROWS_AS(crt_project(s, 5), std::invalid_argument);
  CHECK(natural_map(ResidueSequence(m, {5, 6}), 4).terms() == std::vector<Int>{1, 2});
  CHECK(natural_map(s, 12) == s);
  CHECK(reduce_terms(s, 1) == std::vector<Int>{0, 0, 0});
  CHECK_THROWS_AS(natural_map(s, 5), std::invalid_argument);
  CHECK(ResidueSequence(m, {13, -1}).terms() == std::vector<Int>{1, 11});
}

TEST_CASE("component images determine the residue, n <= 200") {
  for (Int n = 2; n <= 200; ++n) {
    const Modulus m(n);
    std::vector<Int> all(static_cast<std::size_t>(n));
    for (Int x = 0; x < n; ++x) all[static_cast<std::size_t>(x)] = x;
    const ResidueSequence s(m, all);
    std::set<std::vector<Int>> images;
    for (Int x = 0; x < n; ++x) {
      std::vector<Int> key;
      for (const auto& f : m.factors()) key.push_back(crt_project(s, f.prime)[static_cast<std::size_t>(x)]);
      images.insert(key);
    }
    CHECK(images.size() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("residue sets rotate cyclically") {
  for (Int n : {5, 63, 64, 65, 130, 200}) {
    ResidueSet src(n);
    for (Int x = 0; x < n; x += 3) src.set(x);
    for (Int shift : {Int{0}, Int{1}, Int{17}, n - 1}) {
      ResidueSet out(n);
      out.or_rotated(src, shift);
      for (Int x = 0; x < n; ++x) CHECK(out.test((x + shift) % n) == src.test(x));
    }
    ResidueSet multi(n);
    const std::vector<Int> shifts{1, 2};
    multi.or_translates(src, shifts);
    for (Int x = 0; x < n; ++x)
      CHECK(multi.test(x) == (src.test(mod(x - 1, n)) || src.test(mod(x - 2, n))));
  }
}
