#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gaoforge/residue_set.hpp"

namespace gaoforge {

inline constexpr Int kDefaultFactorLimit = 1'000'000;

struct PrimePower {
  Int prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// The ring Z_n together with the factorization of n.
class Modulus {
 public:
  /// Factorizes n by trial division. Throws std::out_of_range unless 2 <= n <= limit.
  explicit Modulus(Int n, Int limit = kDefaultFactorLimit);

  Int value() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  int big_omega() const;
  int small_omega() const;
  int valuation(Int p) const;

  /// Prime factors repeated by multiplicity, ascending.
  std::vector<Int> prime_multiset() const;
  /// All positive divisors, ascending.
  std::vector<Int> divisors() const;

  bool is_prime_power() const { return factors_.size() == 1; }
  bool is_squarefree() const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.n_ == b.n_; }

 private:
  Int n_;
  std::vector<PrimePower> factors_;
};

Modulus factorize(Int n, Int limit = kDefaultFactorLimit);

inline int big_omega(const Modulus& m) { return m.big_omega(); }
inline int small_omega(const Modulus& m) { return m.small_omega(); }
inline int v_p(const Modulus& m, Int p) { return m.valuation(p); }

Int gcd(Int a, Int b);
Int mod(Int a, Int n);
Int ipow(Int base, int exp);
/// v_p(x) for x > 0.
int valuation_of(Int x, Int p);

/// gcd(x, n) with 0 sent to n: the divisor class of x.
Int divisor_class(Int x, Int n);

/// The unit group U(n), ascending.
std::vector<Int> units(const Modulus& m);

/// The weight set A. AllUnits stays symbolic; Explicit holds a sorted residue list.
class WeightSet {
 public:
  enum class Kind { AllUnits, Explicit };

  static WeightSet all_units(const Modulus& m);
  /// Residues are reduced mod n and deduplicated. Throws std::invalid_argument if empty.
  static WeightSet explicit_set(const Modulus& m, std::vector<Int> residues);

  Kind kind() const { return kind_; }
  const Modulus& modulus() const { return modulus_; }
  /// Materialized residues (for AllUnits: U(n)).
  const std::vector<Int>& residues() const { return residues_; }
  bool contains(Int a) const;

  /// True when the realized set is a subgroup of U(n).
  bool is_unit_subgroup() const { return unit_subgroup_; }
  /// True when the realized set equals U(n), whatever its kind.
  bool realizes_all_units() const { return all_units_; }
  bool contains_minus_one() const { return contains(modulus_.value() - 1); }

  std::string describe() const;

 private:
  WeightSet(Modulus m, Kind kind, std::vector<Int> residues);

  Modulus modulus_;
  Kind kind_;
  std::vector<Int> residues_;
  bool unit_subgroup_ = false;
  bool all_units_ = false;
};

/// { a*x mod n : a in A }, ascending. For AllUnits this is the divisor class of x.
std::vector<Int> orbit_of(Int x, const WeightSet& a);

/// The elements y of Z_n with gcd(y, n) = d, ascending (d = n gives {0}).
std::vector<Int> divisor_class_members(Int d, Int n);

}  // namespace gaoforge
