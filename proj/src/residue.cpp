#include "gaoforge/residue.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gaoforge {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int mod(Int a, Int n) {
  const Int r = a % n;
  return r < 0 ? r + n : r;
}

Int ipow(Int base, int exp) {
  Int r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int valuation_of(Int x, Int p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Int divisor_class(Int x, Int n) {
  const Int r = mod(x, n);
  return r == 0 ? n : std::gcd(r, n);
}

Modulus::Modulus(Int n, Int limit) : n_(n) {
  if (n < 2 || n > limit) {
    throw std::out_of_range("modulus " + std::to_string(n) + " outside [2, " +
                            std::to_string(limit) + "]");
  }
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    factors_.push_back({p, e});
  }
  if (rest > 1) factors_.push_back({rest, 1});
}

Modulus factorize(Int n, Int limit) { return Modulus(n, limit); }

int Modulus::big_omega() const {
  int s = 0;
  for (const auto& f : factors_) s += f.exponent;
  return s;
}

int Modulus::small_omega() const { return static_cast<int>(factors_.size()); }

int Modulus::valuation(Int p) const {
  for (const auto& f : factors_)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::vector<Int> Modulus::prime_multiset() const {
  std::vector<Int> out;
  for (const auto& f : factors_) out.insert(out.end(), static_cast<std::size_t>(f.exponent), f.prime);
  return out;
}

std::vector<Int> Modulus::divisors() const {
  std::vector<Int> out{1};
  for (const auto& f : factors_) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (int e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Modulus::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

std::vector<Int> units(const Modulus& m) {
  std::vector<Int> out;
  for (Int x = 1; x < m.value(); ++x)
    if (std::gcd(x, m.value()) == 1) out.push_back(x);
  return out;
}

std::vector<Int> divisor_class_members(Int d, Int n) {
  if (d == n) return {0};
  std::vector<Int> out;
  const Int q = n / d;
  for (Int k = 1; k < q; ++k)
    if (std::gcd(k, q) == 1) out.push_back(d * k);
  return out;
}

WeightSet::WeightSet(Modulus m, Kind kind, std::vector<Int> residues)
    : modulus_(std::move(m)), kind_(kind), residues_(std::move(residues)) {
  const Int n = modulus_.value();
  if (kind_ == Kind::AllUnits) {
    unit_subgroup_ = all_units_ = true;
    return;
  }
  const bool all_coprime = std::all_of(residues_.begin(), residues_.end(),
                                       [n](Int a) { return std::gcd(a, n) == 1; });
  bool closed = all_coprime;
  for (std::size_t i = 0; closed && i < residues_.size(); ++i)
    for (std::size_t j = i; closed && j < residues_.size(); ++j)
      closed = contains(residues_[i] * residues_[j] % n);
  unit_subgroup_ = closed;
  all_units_ = all_coprime && residues_ == units(modulus_);
}

WeightSet WeightSet::all_units(const Modulus& m) {
  return WeightSet(m, Kind::AllUnits, units(m));
}

WeightSet WeightSet::explicit_set(const Modulus& m, std::vector<Int> residues) {
  for (auto& a : residues) a = mod(a, m.value());
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  if (residues.empty()) throw std::invalid_argument("weight set must be nonempty");
  return WeightSet(m, Kind::Explicit, std::move(residues));
}

bool WeightSet::contains(Int a) const {
  return std::binary_search(residues_.begin(), residues_.end(), mod(a, modulus_.value()));
}

std::string WeightSet::describe() const {
  if (kind_ == Kind::AllUnits) return "units";
  std::ostringstream os;
  for (std::size_t i = 0; i < residues_.size(); ++i) os << (i ? "," : "") << residues_[i];
  return os.str();
}

std::vector<Int> orbit_of(Int x, const WeightSet& a) {
  const Int n = a.modulus().value();
  x = mod(x, n);
  if (a.kind() == WeightSet::Kind::AllUnits) return divisor_class_members(divisor_class(x, n), n);
  std::vector<Int> out;
  out.reserve(a.residues().size());
  for (Int w : a.residues()) out.push_back(w * x % n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gaoforge
