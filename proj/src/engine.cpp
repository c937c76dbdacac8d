#include "gaoforge/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace gaoforge {

namespace {

void require_same_ring(const ResidueSequence& s, const WeightSet& a) {
  if (s.n() != a.modulus().value())
    throw std::invalid_argument("weight set lives in Z_" + std::to_string(a.modulus().value()) +
                                ", sequence in Z_" + std::to_string(s.n()));
}

// Orbits are shared by terms in the same divisor class (AllUnits) or with equal value.
class OrbitCache {
 public:
  explicit OrbitCache(const WeightSet& a) : a_(a) {}

  const std::vector<Int>& get(Int x) {
    const Int n = a_.modulus().value();
    const Int key = a_.kind() == WeightSet::Kind::AllUnits ? divisor_class(x, n) : x;
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, orbit_of(x, a_)).first;
    return it->second;
  }

 private:
  const WeightSet& a_;
  std::map<Int, std::vector<Int>> cache_;
};

using Table = std::vector<ResidueSet>;

// rows[c] = sums reachable by choosing exactly c of the processed terms.
// When `history` is given it receives the table after each prefix.
Table count_table(const ResidueSequence& s, const WeightSet& a, std::size_t cap,
                  std::vector<Table>* history) {
  const Int n = s.n();
  Table rows(cap + 1, ResidueSet(n));
  rows[0].set(0);
  OrbitCache orbits(a);
  if (history) history->push_back(rows);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& orbit = orbits.get(s[i]);
    for (std::size_t c = std::min(i, cap - 1) + 1; c-- > 0;) rows[c + 1].or_translates(rows[c], orbit);
    if (history) history->push_back(rows);
  }
  return rows;
}

// Sums of nonempty weighted selections among the processed terms.
ResidueSet nonempty_sums(const ResidueSequence& s, const WeightSet& a,
                         std::vector<ResidueSet>* history) {
  const Int n = s.n();
  ResidueSet sums(n);
  const ResidueSet zero = ResidueSet::singleton(n, 0);
  OrbitCache orbits(a);
  if (history) history->push_back(sums);
  for (Int x : s.terms()) {
    const auto& orbit = orbits.get(x);
    ResidueSet next = sums;
    next.or_translates(sums, orbit);
    next.or_translates(zero, orbit);
    sums = std::move(next);
    if (history) history->push_back(sums);
  }
  return sums;
}

void check_length(const ResidueSequence& s, std::size_t length) {
  if (length == 0 || length > s.size())
    throw std::out_of_range("subsequence length " + std::to_string(length) + " outside [1, " +
                            std::to_string(s.size()) + "]");
}

}  // namespace

bool witness_is_valid(const ResidueSequence& s, const WeightSet& a, const WitnessSelection& w) {
  if (w.indices.empty() || w.indices.size() != w.weights.size()) return false;
  Int sum = 0;
  for (std::size_t j = 0; j < w.indices.size(); ++j) {
    if (w.indices[j] >= s.size()) return false;
    if (j > 0 && w.indices[j] <= w.indices[j - 1]) return false;
    if (!a.contains(w.weights[j])) return false;
    sum = (sum + mod(w.weights[j], s.n()) * s[w.indices[j]]) % s.n();
  }
  return sum == 0;
}

std::vector<Int> reachable_sums(Int x, const WeightSet& a) { return orbit_of(x, a); }

bool has_wzs_subsequence(const ResidueSequence& s, const WeightSet& a) {
  require_same_ring(s, a);
  return nonempty_sums(s, a, nullptr).test(0);
}

std::optional<WitnessSelection> find_wzs_subsequence(const ResidueSequence& s,
                                                     const WeightSet& a) {
  require_same_ring(s, a);
  std::vector<ResidueSet> hist;
  if (!nonempty_sums(s, a, &hist).test(0)) return std::nullopt;
  const Int n = s.n();
  WitnessSelection w;
  Int target = 0;
  for (std::size_t i = s.size(); i > 0; --i) {
    if (hist[i - 1].test(target)) continue;  // term i-1 not needed
    const Int x = s[i - 1];
    bool done = false;
    std::optional<Int> carry;
    for (Int wt : a.residues()) {
      const Int rest = mod(target - wt * x, n);
      if (rest == 0) {
        w.indices.push_back(i - 1);
        w.weights.push_back(wt);
        done = true;
        break;
      }
      if (!carry && hist[i - 1].test(rest)) carry = wt;
    }
    if (done) break;
    w.indices.push_back(i - 1);
    w.weights.push_back(*carry);
    target = mod(target - *carry * x, n);
  }
  std::reverse(w.indices.begin(), w.indices.end());
  std::reverse(w.weights.begin(), w.weights.end());
  return w;
}

bool has_wzs_subsequence_of_length(const ResidueSequence& s, const WeightSet& a,
                                   std::size_t length) {
  require_same_ring(s, a);
  check_length(s, length);
  return count_table(s, a, length, nullptr)[length].test(0);
}

std::optional<WitnessSelection> find_wzs_subsequence_of_length(const ResidueSequence& s,
                                                               const WeightSet& a,
                                                               std::size_t length) {
  require_same_ring(s, a);
  check_length(s, length);
  std::vector<Table> hist;
  if (!count_table(s, a, length, &hist)[length].test(0)) return std::nullopt;
  const Int n = s.n();
  WitnessSelection w;
  Int target = 0;
  std::size_t c = length;
  for (std::size_t i = s.size(); i > 0 && c > 0; --i) {
    if (hist[i - 1][c].test(target)) continue;
    const Int x = s[i - 1];
    for (Int wt : a.residues()) {
      const Int rest = mod(target - wt * x, n);
      if (hist[i - 1][c - 1].test(rest)) {
        w.indices.push_back(i - 1);
        w.weights.push_back(wt);
        target = rest;
        --c;
        break;
      }
    }
  }
  std::reverse(w.indices.begin(), w.indices.end());
  std::reverse(w.weights.begin(), w.weights.end());
  return w;
}

bool is_wzs_sequence(const ResidueSequence& s, const WeightSet& a) {
  return !s.empty() && has_wzs_subsequence_of_length(s, a, s.size());
}

std::vector<bool> zero_sum_sizes(const ResidueSequence& s, const WeightSet& a) {
  require_same_ring(s, a);
  std::vector<bool> out(s.size() + 1, false);
  out[0] = true;
  if (s.empty()) return out;
  const auto rows = count_table(s, a, s.size(), nullptr);
  for (std::size_t c = 1; c <= s.size(); ++c) out[c] = rows[c].test(0);
  return out;
}

namespace {

// Sets over Z_{q_1} x ... x Z_{q_m}, stored by mixed-radix index.
class ComponentSpace {
 public:
  explicit ComponentSpace(const Modulus& m) {
    Int stride = 1;
    for (const auto& f : m.factors()) {
      const Int q = ipow(f.prime, f.exponent);
      moduli_.push_back(q);
      strides_.push_back(stride);
      stride *= q;
    }
    size_ = stride;
  }

  Int size() const { return size_; }
  std::size_t components() const { return moduli_.size(); }
  Int component_modulus(std::size_t j) const { return moduli_[j]; }

  // Weighted orbit of x in each component under U(q_j).
  std::vector<std::vector<Int>> orbits(Int x) const {
    std::vector<std::vector<Int>> out;
    for (Int q : moduli_) out.push_back(divisor_class_members(divisor_class(x % q, q), q));
    return out;
  }

  // src (+) (O_1 x ... x O_m), one component at a time.
  std::vector<char> translate(const std::vector<char>& src,
                              const std::vector<std::vector<Int>>& orbit) const {
    std::vector<char> cur = src;
    for (std::size_t j = 0; j < moduli_.size(); ++j) {
      std::vector<char> next(static_cast<std::size_t>(size_), 0);
      const Int q = moduli_[j];
      const Int stride = strides_[j];
      for (Int idx = 0; idx < size_; ++idx) {
        if (!cur[static_cast<std::size_t>(idx)]) continue;
        const Int digit = (idx / stride) % q;
        const Int base = idx - digit * stride;
        for (Int o : orbit[j]) next[static_cast<std::size_t>(base + (digit + o) % q * stride)] = 1;
      }
      cur = std::move(next);
    }
    return cur;
  }

 private:
  std::vector<Int> moduli_;
  std::vector<Int> strides_;
  Int size_ = 1;
};

void or_into(std::vector<char>& dst, const std::vector<char>& src) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = static_cast<char>(dst[i] | src[i]);
}

}  // namespace

bool crt_equivalent_check(const ResidueSequence& s, const WeightSet& a,
                          std::optional<std::size_t> length) {
  require_same_ring(s, a);
  if (!a.realizes_all_units())
    throw std::invalid_argument("component decomposition needs the full unit group as weights");
  const ComponentSpace space(s.modulus());
  const auto cells = static_cast<std::size_t>(space.size());
  std::vector<char> origin(cells, 0);
  origin[0] = 1;

  if (!length) {
    std::vector<char> sums(cells, 0);
    for (Int x : s.terms()) {
      const auto orbit = space.orbits(x);
      auto extended = space.translate(sums, orbit);
      or_into(extended, space.translate(origin, orbit));
      or_into(sums, extended);
    }
    return sums[0] != 0;
  }

  check_length(s, *length);
  const std::size_t cap = *length;
  std::vector<std::vector<char>> rows(cap + 1, std::vector<char>(cells, 0));
  rows[0] = origin;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto orbit = space.orbits(s[i]);
    for (std::size_t c = std::min(i, cap - 1) + 1; c-- > 0;)
      or_into(rows[c + 1], space.translate(rows[c], orbit));
  }
  return rows[cap][0] != 0;
}

bool lift_check(const ResidueSequence& s, Int d, const WeightSet& a, const WeightSet& a_image) {
  require_same_ring(s, a);
  const Int n = s.n();
  if (d < 1 || d >= n || n % d != 0)
    throw std::invalid_argument(std::to_string(d) + " is not a proper divisor of " +
                                std::to_string(n));
  for (Int x : s.terms())
    if (x % d != 0)
      throw std::invalid_argument(std::to_string(d) + " does not divide term " + std::to_string(x));
  const Int n_prime = n / d;
  if (a_image.modulus().value() != n_prime)
    throw std::invalid_argument("image weight set must live in Z_" + std::to_string(n_prime));
  for (Int w : a_image.residues()) {
    const bool hit = std::any_of(a.residues().begin(), a.residues().end(),
                                 [&](Int v) { return v % n_prime == w; });
    if (!hit)
      throw std::invalid_argument("weight " + std::to_string(w) + " is not the image of any weight");
  }
  if (s.empty()) return false;
  std::vector<Int> divided;
  divided.reserve(s.size());
  for (Int x : s.terms()) divided.push_back(x / d % n_prime);
  return is_wzs_sequence(ResidueSequence(Modulus(n_prime), std::move(divided)), a_image);
}

}  // namespace gaoforge
