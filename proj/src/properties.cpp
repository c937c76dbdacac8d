#include "gaoforge/properties.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gaoforge/catalog.hpp"
#include "gaoforge/engine.hpp"
#include "gaoforge/sequence.hpp"

namespace gaoforge {

namespace {

std::string describe(const ResidueSequence& s) {
  std::string out = "n=" + std::to_string(s.n()) + " seq=";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

void record(PropertyTally& t, bool ok, const std::function<std::string()>& what) {
  ++t.cases;
  if (ok) return;
  ++t.violations;
  if (!t.first_counterexample) t.first_counterexample = what();
}

std::uint64_t multiset_count(Int n, int k) {
  // C(n + k - 1, k), saturating.
  long double c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<long double>(n + i - 1) / i;
  return c > 1e18L ? std::uint64_t(-1) : static_cast<std::uint64_t>(c);
}

int lemma_length(Int n) {
  int k = 1;
  while (k < kMaxLemmaLength && multiset_count(n, k + 1) <= kLemmaMultisetCap) ++k;
  return k;
}

// Calls f on every nondecreasing sequence over [0, n) of length 1..max_len.
void for_each_multiset(Int n, int max_len, const std::function<void(const std::vector<Int>&)>& f) {
  std::vector<Int> cur;
  std::function<void(Int)> rec = [&](Int lo) {
    if (!cur.empty()) f(cur);
    if (static_cast<int>(cur.size()) == max_len) return;
    for (Int x = lo; x < n; ++x) {
      cur.push_back(x);
      rec(x);
      cur.pop_back();
    }
  };
  rec(0);
}

// Shared driver for the three exhaustive lemma suites.
PropertyTally lemma_suite(std::string name, Int n,
                          const std::function<bool(const std::vector<Int>&)>& hypothesis) {
  const Modulus m(n);
  const auto a = WeightSet::all_units(m);
  const int k = lemma_length(n);
  PropertyTally t{std::move(name), "all multisets over Z_" + std::to_string(n) +
                                       " of length 1.." + std::to_string(k)};
  for_each_multiset(n, k, [&](const std::vector<Int>& terms) {
    if (!hypothesis(terms)) return;
    const ResidueSequence s(m, terms);
    record(t, is_wzs_sequence(s, a), [&] { return describe(s); });
  });
  return t;
}

Int count_if_prime_to(const std::vector<Int>& terms, Int p) {
  return std::count_if(terms.begin(), terms.end(), [&](Int x) { return x % p != 0; });
}

Int random_proper_multiple(std::mt19937_64& rng, Int n) {
  // A residue biased toward small divisor classes.
  const auto divs = Modulus(n).divisors();
  const Int d = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
  return d * std::uniform_int_distribution<Int>(0, n / d - 1)(rng) % n;
}

std::vector<Int> random_terms(std::mt19937_64& rng, Int n, int k) {
  std::vector<Int> terms;
  for (int i = 0; i < k; ++i) terms.push_back(random_proper_multiple(rng, n));
  return terms;
}

std::vector<Int> closure(Int n, std::vector<Int> gens) {
  std::set<Int> h{1};
  bool grown = true;
  while (grown) {
    grown = false;
    for (Int x : std::vector<Int>(h.begin(), h.end()))
      for (Int g : gens)
        if (h.insert(x * g % n).second) grown = true;
  }
  return {h.begin(), h.end()};
}

// Bit L set when some L-term selection admits weights summing to zero.
std::uint32_t naive_zero_sizes(Int n, const std::vector<Int>& terms, const std::vector<Int>& a) {
  std::uint32_t mask = 0;
  std::function<void(std::size_t, Int, int)> rec = [&](std::size_t i, Int sum, int used) {
    if (i == terms.size()) {
      if (used > 0 && sum == 0) mask |= 1U << used;
      return;
    }
    rec(i + 1, sum, used);
    for (Int w : a) rec(i + 1, (sum + w * terms[i]) % n, used + 1);
  };
  rec(0, 0, 0);
  return mask;
}

}  // namespace

PropertyTally check_gri(Int n) {
  const Modulus m(n);
  if (!m.is_prime_power() || m.factors()[0].prime == 2)
    throw std::invalid_argument("gri needs an odd prime power");
  const Int p = m.factors()[0].prime;
  return lemma_suite("gri", n, [&](const auto& t) { return count_if_prime_to(t, p) >= 2; });
}

PropertyTally check_2r0(Int n) {
  const Modulus m(n);
  if (!m.is_prime_power() || m.factors()[0].prime != 2)
    throw std::invalid_argument("2r0 needs a power of two");
  return lemma_suite("2r0", n, [&](const auto& t) {
    const Int odd = count_if_prime_to(t, 2);
    return odd >= 2 && odd % 2 == 0;
  });
}

PropertyTally check_w(Int n) {
  const Modulus m(n);
  const auto& f = m.factors();
  if (f.size() != 2 || f[0].prime != 2 || f[0].exponent != 1 || f[1].exponent != 1)
    throw std::invalid_argument("w needs n = 2p");
  const Int p = f[1].prime;
  return lemma_suite("w", n, [&](const auto& t) {
    return count_if_prime_to(t, 2) % 2 == 0 && count_if_prime_to(t, p) != 1;
  });
}

PropertyTally check_lifts(std::uint64_t trials, std::uint64_t seed, Int max_n) {
  std::mt19937_64 rng(seed);
  PropertyTally t{"lifts", std::to_string(trials) + " random instances, n <= " +
                               std::to_string(max_n)};
  std::uint64_t attempted = 0;
  while (attempted < trials) {
    ++attempted;
    const Int n = std::uniform_int_distribution<Int>(2, max_n)(rng);
    const Modulus m(n);
    auto divs = m.divisors();
    divs.pop_back();  // proper divisors only
    const Int d = divs[std::uniform_int_distribution<std::size_t>(0, divs.size() - 1)(rng)];
    const Int np = n / d;
    const int k = std::uniform_int_distribution<int>(1, 8)(rng);
    std::vector<Int> terms;
    for (int i = 0; i < k; ++i) terms.push_back(d * std::uniform_int_distribution<Int>(0, np - 1)(rng));

    std::vector<Int> a_res;
    if (rng() % 2 == 0) {
      a_res = units(m);
    } else {
      for (Int x = 0; x < n; ++x)
        if (rng() % 3 == 0) a_res.push_back(x);
      if (a_res.empty()) a_res.push_back(1);
    }
    const auto a = rng() % 2 == 0 && a_res == units(m) ? WeightSet::all_units(m)
                                                       : WeightSet::explicit_set(m, a_res);
    std::set<Int> image;
    for (Int x : a.residues()) image.insert(x % np);
    std::vector<Int> img(image.begin(), image.end());
    std::vector<Int> a_prime;
    for (Int x : img)
      if (rng() % 2 == 0) a_prime.push_back(x);
    if (a_prime.empty()) a_prime.push_back(img.front());
    const auto ap = WeightSet::explicit_set(Modulus(np), a_prime);

    const ResidueSequence s(m, terms);
    if (!lift_check(s, d, a, ap)) continue;
    record(t, is_wzs_sequence(s, a), [&] {
      return describe(s) + " d=" + std::to_string(d) + " A=" + a.describe() + " A'=" + ap.describe();
    });
  }
  t.scope += ", " + std::to_string(t.cases) + " with a lifted zero-sum";
  return t;
}

PropertyTally check_obs(std::uint64_t trials, std::uint64_t seed, Int max_n, int max_len) {
  std::mt19937_64 rng(seed);
  PropertyTally t{"obs", std::to_string(trials) + " random instances, n <= " +
                             std::to_string(max_n) + ", k <= " + std::to_string(max_len)};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Int n = std::uniform_int_distribution<Int>(2, max_n)(rng);
    const Modulus m(n);
    const auto a = WeightSet::all_units(m);
    const int k = std::uniform_int_distribution<int>(1, max_len)(rng);
    const ResidueSequence s(m, random_terms(rng, n, k));
    std::optional<std::size_t> len;
    if (rng() % 2 == 0) len = std::uniform_int_distribution<std::size_t>(1, s.size())(rng);
    const bool direct = len ? has_wzs_subsequence_of_length(s, a, *len) : has_wzs_subsequence(s, a);
    record(t, crt_equivalent_check(s, a, len) == direct, [&] {
      return describe(s) + (len ? " L=" + std::to_string(*len) : std::string(" L=any"));
    });
  }
  return t;
}

PropertyTally check_unit_invariance(std::uint64_t trials, std::uint64_t seed, Int max_n,
                                    int max_len) {
  std::mt19937_64 rng(seed);
  PropertyTally t{"unit_invariance", std::to_string(trials) + " random instances, n <= " +
                                         std::to_string(max_n) + ", k <= " +
                                         std::to_string(max_len)};
  for (std::uint64_t i = 0; i < trials; ++i) {
    const Int n = std::uniform_int_distribution<Int>(2, max_n)(rng);
    const Modulus m(n);
    const auto us = units(m);
    auto pick_unit = [&] { return us[std::uniform_int_distribution<std::size_t>(0, us.size() - 1)(rng)]; };
    const int k = std::uniform_int_distribution<int>(1, max_len)(rng);
    const auto terms = random_terms(rng, n, k);

    // Odd trials: a proper subgroup generated by one or two units, with a global unit.
    const bool full = i % 2 == 0;
    const auto a = full ? WeightSet::all_units(m)
                        : WeightSet::explicit_set(m, closure(n, {pick_unit(), rng() % 2 ? n - 1 : 1}));
    const Int c = full ? 1 : pick_unit();
    std::vector<Int> moved(terms.size());
    std::vector<std::size_t> perm(terms.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t j = 0; j < terms.size(); ++j) {
      const auto& w = a.residues();
      const Int weight = w[std::uniform_int_distribution<std::size_t>(0, w.size() - 1)(rng)];
      moved[j] = c * weight % n * terms[perm[j]] % n;
    }
    const ResidueSequence s(m, terms), u(m, moved);
    const bool ok = has_wzs_subsequence(s, a) == has_wzs_subsequence(u, a) &&
                    zero_sum_sizes(s, a) == zero_sum_sizes(u, a) &&
                    canonicalize(s, a) == canonicalize(u, a);
    record(t, ok, [&] { return describe(s) + " vs " + describe(u) + " A=" + a.describe(); });
  }
  return t;
}

PropertyTally check_dp_vs_naive(Int max_n, int max_len) {
  PropertyTally t{"dp_vs_naive", "every sequence over Z_n, 2 <= n <= " + std::to_string(max_n) +
                                     ", length 1.." + std::to_string(max_len) +
                                     ", weights U(n) and {1}"};
  for (Int n = 2; n <= max_n; ++n) {
    const Modulus m(n);
    for (const auto& a : {WeightSet::all_units(m), WeightSet::explicit_set(m, {1})}) {
      std::map<std::vector<Int>, std::uint32_t> naive;
      for (int k = 1; k <= max_len; ++k) {
        std::vector<Int> terms(static_cast<std::size_t>(k), 0);
        for (;;) {
          auto key = terms;
          std::sort(key.begin(), key.end());
          auto it = naive.find(key);
          if (it == naive.end()) it = naive.emplace(key, naive_zero_sizes(n, key, a.residues())).first;
          const std::uint32_t want = it->second;
          const ResidueSequence s(m, terms);
          bool ok = has_wzs_subsequence(s, a) == (want != 0);
          for (int len = 1; len <= k && ok; ++len)
            ok = has_wzs_subsequence_of_length(s, a, static_cast<std::size_t>(len)) ==
                 ((want >> len & 1U) != 0);
          record(t, ok, [&] { return describe(s) + " A=" + a.describe(); });

          int pos = 0;
          while (pos < k && ++terms[static_cast<std::size_t>(pos)] == n) terms[static_cast<std::size_t>(pos++)] = 0;
          if (pos == k) break;
        }
      }
    }
  }
  return t;
}

}  // namespace gaoforge
